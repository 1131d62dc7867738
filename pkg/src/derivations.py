"""
Derivation Solver for the Gorenstein Algebra Verifier
Derivations from generator constraints, the full Leibniz oracle, and the annihilation check
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from errors import ContextMismatchError, OracleBoundError
from linalg import EchelonForm, SparseRow, nullspace, row_reduce, same_span
from poly import Polynomial
from quotient import AlgebraElement, QuotientAlgebra

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BOUND = 80

LinearMap = Tuple[AlgebraElement, ...]


@dataclass(frozen=True)
class DerivationCandidate:
    """Images of the variables under a derivation, in context order"""
    images: Tuple[AlgebraElement, ...]

    @property
    def algebra(self) -> QuotientAlgebra:
        return self.images[0].algebra

    @property
    def dx(self) -> AlgebraElement:
        return self.images[0]

    @property
    def dy(self) -> AlgebraElement:
        return self.images[1]

    def apply(self, f: Polynomial) -> AlgebraElement:
        """D_f = sum over variables v of (df/dv) * D_v"""
        A = self.algebra
        total = A.zero()
        for name, image in zip(A.ctx.names, self.images):
            partial = f.diff(name)
            if partial:
                total = total + A.reduce(partial) * image
        return total

    def row(self) -> SparseRow:
        d = self.algebra.dimension
        out: SparseRow = {}
        for v, image in enumerate(self.images):
            for i, c in image.support().items():
                out[v * d + i] = c
        return out

    def __str__(self) -> str:
        names = self.algebra.ctx.names
        return ', '.join(f"D_{name} = {image}" for name, image in zip(names, self.images))


def candidate_from_row(A: QuotientAlgebra, row: SparseRow) -> DerivationCandidate:
    d = A.dimension
    parts: List[SparseRow] = [{} for _ in A.ctx.names]
    for col, c in row.items():
        parts[col // d][col % d] = c
    return DerivationCandidate(tuple(A.element_from_row(part) for part in parts))


def derivation_space(A: QuotientAlgebra, generators: Sequence[Polynomial]) -> List[DerivationCandidate]:
    """
    Solve reduce(D_f) = 0 for each ideal generator f

    Unknowns are all coordinates of every D_v, constant coordinates included.

    Args:
        A: Quotient algebra
        generators: Generators of the defining ideal

    Returns:
        Basis of the solution space in reduced row-echelon form
    """
    d = A.dimension
    names = A.ctx.names
    equations: Dict[Tuple[int, int], SparseRow] = {}
    for g, f in enumerate(generators):
        if f.ctx != A.ctx:
            raise ContextMismatchError("Generator does not live in the algebra's context")
        for v, name in enumerate(names):
            partial = f.diff(name)
            if not partial:
                continue
            coefficient = A.reduce(partial).support()
            for b in range(d):
                for i, a in coefficient.items():
                    for k, c in A.structure_constants(i, b).items():
                        row = equations.setdefault((g, k), {})
                        row[v * d + b] = row.get(v * d + b, A.field.zero) + a * c
    solutions = nullspace(equations.values(), len(names) * d, A.field)
    basis = row_reduce(solutions, len(names) * d, A.field)
    logger.info(f"Derivation space: dimension {len(basis)} from {len(equations)} constraint rows")
    return [candidate_from_row(A, row) for row in basis]


def extend_by_leibniz(candidate: DerivationCandidate) -> LinearMap:
    """
    Images of every basis monomial under the derivation

    Returns:
        Tuple indexed like the algebra basis
    """
    A = candidate.algebra
    images = []
    for m in A.basis:
        monomial = Polynomial.from_monomial(A.ctx, A.field, m)
        images.append(candidate.apply(monomial))
    return tuple(images)


def is_derivation(images: LinearMap) -> bool:
    """Check delta(e_i e_j) = delta(e_i) e_j + e_i delta(e_j) on all basis pairs and delta(1) = 0"""
    A = images[0].algebra
    basis = [A.basis_element(m) for m in A.basis]
    if not images[A.index(A.ctx.one())].is_zero():
        return False
    for i in range(A.dimension):
        for j in range(i, A.dimension):
            lhs = _apply_map(images, basis[i] * basis[j])
            rhs = images[i] * basis[j] + basis[i] * images[j]
            if lhs != rhs:
                logger.info(f"Leibniz rule fails on ({A.basis[i]}, {A.basis[j]})")
                return False
    return True


def _apply_map(images: LinearMap, element: AlgebraElement) -> AlgebraElement:
    result = element.algebra.zero()
    for i, c in element.support().items():
        result = result + images[i].scale(c)
    return result


def candidate_is_derivation(candidate: DerivationCandidate) -> bool:
    return is_derivation(extend_by_leibniz(candidate))


def _column(d: int, source: int, target: int) -> int:
    # higher sources get smaller columns, so each equation pivots on its product term
    return (d - 1 - source) * d + target


def _leibniz_equations(A: QuotientAlgebra, j: int, l: int) -> List[SparseRow]:
    d = A.dimension
    zero = A.field.zero
    rows: Dict[int, SparseRow] = {}

    def add(t: int, col: int, value):
        row = rows.setdefault(t, {})
        total = row.get(col, zero) + value
        if total == zero:
            row.pop(col, None)
        else:
            row[col] = total

    for k, c in A.structure_constants(j, l).items():
        for t in range(d):
            add(t, _column(d, k, t), c)
    for i in range(d):
        for t, c in A.structure_constants(i, l).items():
            add(t, _column(d, j, i), -c)
        for t, c in A.structure_constants(j, i).items():
            add(t, _column(d, l, i), -c)
    return [row for row in rows.values() if row]


def _unflatten(d: int, solution: SparseRow) -> List[SparseRow]:
    sources: List[SparseRow] = [{} for _ in range(d)]
    for col, c in solution.items():
        source, target = divmod(col, d)
        sources[d - 1 - source][target] = c
    return sources


def _accumulate(out: SparseRow, row: SparseRow, factor, zero):
    for k, c in row.items():
        total = out.get(k, zero) + factor * c
        if total == zero:
            out.pop(k, None)
        else:
            out[k] = total


def _satisfies_pair(A: QuotientAlgebra, sources: List[SparseRow], j: int, l: int) -> bool:
    zero = A.field.zero
    lhs: SparseRow = {}
    for k, c in A.structure_constants(j, l).items():
        _accumulate(lhs, sources[k], c, zero)
    rhs: SparseRow = {}
    for i, c in sources[j].items():
        _accumulate(rhs, A.structure_constants(i, l), c, zero)
    for i, c in sources[l].items():
        _accumulate(rhs, A.structure_constants(j, i), c, zero)
    return lhs == rhs


def derivation_full_oracle(A: QuotientAlgebra, bound: int = DEFAULT_ORACLE_BOUND) -> List[LinearMap]:
    """
    All linear maps satisfying the Leibniz rule on every pair of basis elements

    The equations with one factor a variable are eliminated first; the solutions
    are then tested against every remaining pair, and the equations of any
    violated pair are added and the system re-solved, so the result is the
    nullspace of the full system.

    Args:
        A: Quotient algebra
        bound: Largest dimension accepted

    Returns:
        Basis of the derivation space as tuples of basis-element images
    """
    d = A.dimension
    if d > bound:
        raise OracleBoundError(f"Dimension {d} exceeds the oracle bound {bound}")
    field = A.field
    unit = A.index(A.ctx.one())
    echelon = EchelonForm(field, d * d)
    for t in range(d):
        echelon.add({_column(d, unit, t): field.one})

    enforced = {unit}
    for name in A.ctx.names:
        m = A.ctx.variable(name)
        if m in A.basis:
            enforced.add(A.index(m))
    for g in sorted(enforced - {unit}):
        for l in range(d):
            for row in _leibniz_equations(A, g, l):
                echelon.add(row)
    logger.info(f"Oracle: rank {len(echelon)} after generator equations ({d * d} unknowns)")

    pending = [(j, l) for j in range(d) for l in range(j, d) if j not in enforced and l not in enforced]
    while True:
        solutions = [_unflatten(d, s) for s in echelon.nullspace()]
        violated = [(j, l) for j, l in pending
                    if not all(_satisfies_pair(A, sources, j, l) for sources in solutions)]
        if not violated:
            break
        logger.info(f"Oracle: {len(violated)} further pairs constrain the solutions, re-solving")
        for j, l in violated:
            for row in _leibniz_equations(A, j, l):
                echelon.add(row)

    maps = [tuple(A.element_from_row(row) for row in sources) for sources in solutions]
    logger.info(f"Oracle: derivation space dimension {len(maps)}")
    return maps


def flatten_map(images: LinearMap) -> SparseRow:
    d = len(images)
    out: SparseRow = {}
    for source, image in enumerate(images):
        for target, c in image.support().items():
            out[source * d + target] = c
    return out


def restrict_to_variables(A: QuotientAlgebra, images: LinearMap) -> SparseRow:
    """Row of (delta(x), delta(y), ...) in the derivation_space layout"""
    d = A.dimension
    out: SparseRow = {}
    for v, name in enumerate(A.ctx.names):
        for i, c in images[A.index(A.ctx.variable(name))].support().items():
            out[v * d + i] = c
    return out


def compare_with_oracle(A: QuotientAlgebra, space: Sequence[DerivationCandidate],
                        oracle: Sequence[LinearMap]) -> Dict:
    """
    Equal dimension and mutual containment of the two derivation spaces

    Returns:
        Check dict with 'status', 'detail' and both dimensions
    """
    d = A.dimension
    width = len(A.ctx.names) * d
    restricted = [restrict_to_variables(A, m) for m in oracle]
    spans_agree = same_span([c.row() for c in space], restricted, width, A.field)

    full = EchelonForm(A.field, d * d)
    for m in oracle:
        full.add(flatten_map(m))
    extended = all(full.contains(flatten_map(extend_by_leibniz(c))) for c in space)

    ok = len(space) == len(oracle) and spans_agree and extended
    detail = f"dim {len(space)} (constraints) vs {len(oracle)} (oracle)"
    if not ok:
        logger.error(f"Derivation spaces disagree: {detail}, spans_agree={spans_agree}, extended={extended}")
    return {'status': 'pass' if ok else 'fail', 'detail': detail,
            'constraint_dimension': len(space), 'oracle_dimension': len(oracle)}


def derivations_annihilate(P, space: Optional[Sequence[DerivationCandidate]] = None) -> Dict:
    """
    Check that every derivation of A_n kills y^(2n+1)

    The image is computed from both representatives y^(2n+1) and x^(3n); they
    must agree for every derivation. Vanishing is asserted only when the
    characteristic hypothesis holds, otherwise it is reported.

    Args:
        P: AnPresentation
        space: Precomputed derivation basis

    Returns:
        Check dict with 'status', 'detail', 'annihilated', 'agree' and 'hypothesis_holds'
    """
    n = P.n
    A = P.algebra
    if space is None:
        space = derivation_space(A, P.generators)
    via_y = P.poly(f"{2*n + 1}*y^{2*n}")
    via_x = P.poly(f"{3*n}*x^{3*n - 1}")
    annihilated, agree = True, True
    for candidate in space:
        from_y = A.reduce(via_y) * candidate.dy
        from_x = A.reduce(via_x) * candidate.dx
        if from_y != from_x:
            agree = False
            logger.error(f"n={n}: representatives disagree for {candidate}")
        if not from_y.is_zero() or not from_x.is_zero():
            annihilated = False
    if not agree:
        status = 'fail'
    elif P.hypothesis_holds:
        status = 'pass' if annihilated else 'fail'
    else:
        status = 'skipped'
    detail = (f"{len(space)} derivations, annihilated={annihilated}, representatives agree={agree}")
    if not P.hypothesis_holds:
        detail += f"; hypothesis violated in characteristic {P.field.characteristic}"
    return {'status': status, 'detail': detail, 'annihilated': annihilated, 'agree': agree,
            'hypothesis_holds': P.hypothesis_holds}


if __name__ == "__main__":
    from an_family import build
    logging.basicConfig(level=logging.INFO)
    P = build(2)
    space = derivation_space(P.algebra, P.generators)
    print(f"dim Der(A_2) = {len(space)}")
    print(compare_with_oracle(P.algebra, space, derivation_full_oracle(P.algebra))['detail'])
    print(derivations_annihilate(P, space)['detail'])
