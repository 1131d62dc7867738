"""
Ideal Loader for the Gorenstein Algebra Verifier
Reads ideal files: a 'vars:' header followed by one polynomial per line
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from errors import AlgebraError, IdealFileError, PolynomialSyntaxError
from poly import Field, Polynomial, VariableContext, parse

logger = logging.getLogger(__name__)

VARS_PREFIX = 'vars:'


@dataclass(frozen=True)
class IdealFile:
    """Parsed contents of an ideal file"""
    path: str
    ctx: VariableContext
    generators: Tuple[Polynomial, ...]


class IdealLoader:
    """Loads ideal generators from text files"""

    def __init__(self, field: Optional[Field] = None):
        """
        Initialize ideal loader

        Args:
            field: Coefficient field for every parsed polynomial
        """
        self.field = field or Field.rationals()

    def parse_lines(self, lines: Iterable[str], source: str = '<text>') -> IdealFile:
        """
        Parse ideal file lines

        Args:
            lines: Raw lines; blank lines and '#' comments are skipped
            source: Name used in error messages

        Returns:
            IdealFile with the declared context and nonzero generators
        """
        ctx = None
        generators: List[Polynomial] = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if ctx is None:
                if not line.startswith(VARS_PREFIX):
                    raise IdealFileError(f"{source}:{lineno}: expected '{VARS_PREFIX} x y ...' header")
                names = line[len(VARS_PREFIX):].split()
                if not names:
                    raise IdealFileError(f"{source}:{lineno}: no variables declared")
                try:
                    ctx = VariableContext(tuple(names))
                except AlgebraError as e:
                    raise IdealFileError(f"{source}:{lineno}: {e}")
                continue
            try:
                f = parse(line, ctx, self.field)
            except PolynomialSyntaxError as e:
                raise IdealFileError(f"{source}:{lineno}: {e}")
            if f.is_zero():
                logger.warning(f"{source}:{lineno}: zero generator skipped")
                continue
            generators.append(f)

        if ctx is None:
            raise IdealFileError(f"{source}: empty ideal file")
        if not generators:
            raise IdealFileError(f"{source}: no generators after the '{VARS_PREFIX}' header")
        logger.info(f"Loaded {len(generators)} generators in {', '.join(ctx.names)} from {source}")
        return IdealFile(source, ctx, tuple(generators))

    def load_file(self, path: str) -> IdealFile:
        file_path = Path(path)
        if not file_path.exists():
            raise IdealFileError(f"Ideal file not found: {path}")
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                lines = f.readlines()
        except UnicodeDecodeError as e:
            raise IdealFileError(f"{path}: not valid UTF-8 text (byte {e.start})")
        return self.parse_lines(lines, str(path))


def load_ideal(path: str, field: Optional[Field] = None) -> IdealFile:
    return IdealLoader(field).load_file(path)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    ideal = IdealLoader().parse_lines(["vars: x y", "y^7", "x^2*y^2 - y^4", "x^5 - x*y^3"])
    for g in ideal.generators:
        print(g)
