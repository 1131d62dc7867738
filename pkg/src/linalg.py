"""
Exact Linear Algebra for the Gorenstein Algebra Verifier
Sparse fraction-free row reduction, nullspaces and span comparison
"""

import logging
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from poly import Field

logger = logging.getLogger(__name__)

SparseRow = Dict[int, object]


class EchelonForm:
    """
    Incremental row-echelon form over an exact field

    Over the rationals rows are kept as primitive integer vectors and
    eliminated by cross-multiplication; over prime fields plain elimination
    is used. Every stored row has its pivot at its smallest column.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: Dict[int, SparseRow] = {}
        self._integral = field.characteristic == 0

    def __len__(self) -> int:
        return len(self.pivots)

    def _prepare(self, row: SparseRow) -> SparseRow:
        field = self.field
        clean = {}
        for col, value in row.items():
            value = field(value)
            if value != field.zero:
                if not 0 <= col < self.ncols:
                    raise IndexError(f"Column {col} out of range 0..{self.ncols - 1}")
                clean[col] = value
        if not self._integral or not clean:
            return clean
        den = 1
        for value in clean.values():
            d = field.numerator_denominator(value)[1]
            den = den * d // gcd(den, d)
        ints = {}
        for col, value in clean.items():
            num, d = field.numerator_denominator(value)
            ints[col] = num * (den // d)
        return _primitive(ints)

    def _eliminate(self, row: SparseRow, pivot_row: SparseRow, col: int) -> SparseRow:
        a = row[col]
        p = pivot_row[col]
        if self._integral:
            combined = {k: v * p for k, v in row.items()}
            for k, v in pivot_row.items():
                value = combined.get(k, 0) - a * v
                if value:
                    combined[k] = value
                else:
                    combined.pop(k, None)
            return _primitive(combined)
        factor = a / p
        combined = dict(row)
        zero = self.field.zero
        for k, v in pivot_row.items():
            value = combined.get(k, zero) - factor * v
            if value == zero:
                combined.pop(k, None)
            else:
                combined[k] = value
        return combined

    def reduce(self, row: SparseRow) -> SparseRow:
        """Reduce a prepared row against the stored pivots (forward only)"""
        row = dict(row)
        while row:
            col = min(row)
            pivot_row = self.pivots.get(col)
            if pivot_row is None:
                return row
            row = self._eliminate(row, pivot_row, col)
        return row

    def add(self, row: SparseRow) -> bool:
        """
        Insert a row

        Args:
            row: Sparse row (column -> scalar)

        Returns:
            True if the row increased the rank
        """
        row = self.reduce(self._prepare(row))
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(self._prepare(row))

    def reduced_rows(self) -> List[SparseRow]:
        """
        Reduced row-echelon rows over the field, pivots normalized to 1

        Returns:
            Rows ordered by pivot column
        """
        field = self.field
        zero = field.zero
        done: Dict[int, SparseRow] = {}
        for col in sorted(self.pivots, reverse=True):
            row = {k: field(v) for k, v in self.pivots[col].items()}
            inverse = field.one / row[col]
            row = {k: v * inverse for k, v in row.items()}
            for other in [k for k in row if k != col and k in done]:
                factor = row.get(other)
                if factor is None:
                    continue
                for k, v in done[other].items():
                    value = row.get(k, zero) - factor * v
                    if value == zero:
                        row.pop(k, None)
                    else:
                        row[k] = value
            done[col] = row
        return [done[col] for col in sorted(done)]

    def nullspace(self) -> List[SparseRow]:
        """
        Basis of the right kernel {v : row . v = 0 for all rows}

        Returns:
            One vector per free column, with 1 at that column
        """
        rows = self.reduced_rows()
        pivot_cols = {min(r) for r in rows}
        by_column: Dict[int, List[Tuple[int, object]]] = {}
        for row in rows:
            pc = min(row)
            for k, v in row.items():
                if k != pc:
                    by_column.setdefault(k, []).append((pc, v))
        basis = []
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            vector = {free: self.field.one}
            for pc, v in by_column.get(free, []):
                vector[pc] = -v
            basis.append(vector)
        return basis


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if row[min(row)] < 0:
        g = -g
    if g == 1:
        return row
    return {k: v // g for k, v in row.items()}


def pivot_sort_key(field: Field, row: SparseRow) -> Tuple[int, int]:
    """Rows ordered by first nonzero column, then smallest leading numerator"""
    col = min(row)
    num, _ = field.numerator_denominator(field(row[col]))
    return col, abs(num)


def row_reduce(rows: Iterable[SparseRow], ncols: int, field: Field) -> List[SparseRow]:
    """
    Reduced row-echelon basis of the row span

    Args:
        rows: Sparse rows
        ncols: Number of columns
        field: Exact field

    Returns:
        RREF rows (pivot 1), ordered by pivot column
    """
    echelon = EchelonForm(field, ncols)
    prepared = [r for r in (echelon._prepare(row) for row in rows) if r]
    for row in sorted(prepared, key=lambda r: pivot_sort_key(field, r)):
        echelon.add(row)
    return echelon.reduced_rows()


def nullspace(rows: Iterable[SparseRow], ncols: int, field: Field) -> List[SparseRow]:
    echelon = EchelonForm(field, ncols)
    for row in rows:
        echelon.add(row)
    return echelon.nullspace()


def dense(row: SparseRow, ncols: int, field: Field) -> Tuple:
    return tuple(row.get(k, field.zero) for k in range(ncols))


def sparse(vector: Sequence, field: Field) -> SparseRow:
    return {k: v for k, v in enumerate(vector) if v != field.zero}


def same_span(left: Iterable[SparseRow], right: Iterable[SparseRow], ncols: int, field: Field) -> bool:
    """Equal dimension and mutual containment"""
    a = row_reduce(left, ncols, field)
    b = row_reduce(right, ncols, field)
    if len(a) != len(b):
        logger.info(f"Span dimensions differ: {len(a)} vs {len(b)}")
        return False
    return a == b
