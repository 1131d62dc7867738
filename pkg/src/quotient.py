"""
Quotient Algebras for the Gorenstein Algebra Verifier
Standard-monomial bases, structure constants, socle, maximal-ideal powers and nilpotent exp/log
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from errors import (
    AlgebraError,
    CharacteristicError,
    ContextMismatchError,
    InfiniteDimensionalError,
    NonNilpotentError,
    NotCertifiedError,
    NotLocalError,
)
from groebner import GroebnerBasis, normal_form
from linalg import EchelonForm, SparseRow, nullspace, row_reduce
from poly import Monomial, Polynomial, monomial_divides, monomial_mul, render_monomial, to_json

logger = logging.getLogger(__name__)

UNIT_COORDINATE = 'z_00'


def coordinate_name(m: Monomial) -> str:
    """
    Name of the coordinate function dual to a basis monomial

    The unit monomial is always z_00; others concatenate their exponents
    (z_21 for x^2*y) unless some exponent exceeds 9 (then z_10_3).
    """
    if not any(m):
        return UNIT_COORDINATE
    if all(e <= 9 for e in m):
        return 'z_' + ''.join(str(e) for e in m)
    return 'z_' + '_'.join(str(e) for e in m)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Coordinate vector of an element over the standard-monomial basis"""
    algebra: 'QuotientAlgebra'
    coords: Tuple

    def _check(self, other: 'AlgebraElement'):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ContextMismatchError("Elements belong to different algebras")

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coords))

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def scale(self, value) -> 'AlgebraElement':
        value = self.algebra.field(value)
        return AlgebraElement(self.algebra, tuple(a * value for a in self.coords))

    def __mul__(self, other) -> 'AlgebraElement':
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, other) -> 'AlgebraElement':
        return self.scale(other)

    def __pow__(self, k: int) -> 'AlgebraElement':
        result = self.algebra.unit()
        for _ in range(k):
            result = result * self
        return result

    def __getitem__(self, m: Monomial):
        return self.coords[self.algebra.index(m)]

    def is_zero(self) -> bool:
        zero = self.algebra.field.zero
        return all(c == zero for c in self.coords)

    def support(self) -> Dict[int, object]:
        zero = self.algebra.field.zero
        return {i: c for i, c in enumerate(self.coords) if c != zero}

    def to_polynomial(self) -> Polynomial:
        A = self.algebra
        return Polynomial(A.ctx, A.field, {b: c for b, c in zip(A.basis, self.coords)})

    def __str__(self) -> str:
        return str(self.to_polynomial())

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_polynomial()})"


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row-reduced basis of a subspace of the algebra"""
    algebra: 'QuotientAlgebra'
    rows: Tuple[SparseRow, ...] = ()

    @classmethod
    def span(cls, algebra: 'QuotientAlgebra', vectors: Iterable) -> 'Subspace':
        """
        Row-reduced span of elements or sparse rows

        Args:
            algebra: Ambient algebra
            vectors: AlgebraElements or sparse rows (index -> scalar)

        Returns:
            Subspace in reduced row-echelon form
        """
        rows = [v.support() if isinstance(v, AlgebraElement) else v for v in vectors]
        return cls(algebra, tuple(row_reduce(rows, algebra.dimension, algebra.field)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and other.algebra is self.algebra
                and list(other.rows) == list(self.rows))

    def __hash__(self) -> int:
        return hash((id(self.algebra), len(self.rows)))

    def _echelon(self) -> EchelonForm:
        echelon = EchelonForm(self.algebra.field, self.algebra.dimension)
        for row in self.rows:
            echelon.add(row)
        return echelon

    def contains(self, element) -> bool:
        row = element.support() if isinstance(element, AlgebraElement) else element
        return self._echelon().contains(row)

    def is_subspace_of(self, other: 'Subspace') -> bool:
        echelon = other._echelon()
        return all(echelon.contains(row) for row in self.rows)

    def elements(self) -> List[AlgebraElement]:
        return [self.algebra.element_from_row(row) for row in self.rows]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dimension}, [{', '.join(str(e) for e in self.elements())}])"


@dataclass(frozen=True)
class MonomialClass:
    """Classification of a monomial in the quotient"""
    tag: str
    representative: Optional[Monomial] = None
    members: Tuple[Monomial, ...] = dataclass_field(default=())

    ZERO = 'zero'
    BASIS = 'basis'
    EQUAL = 'equal'
    # normal form is not a single monic basis monomial (never for A_n)
    COMBINATION = 'combination'


class QuotientAlgebra:
    """Finite-dimensional quotient K[x...]/I presented by a certified Groebner basis"""

    def __init__(self, G: GroebnerBasis):
        """
        Initialize algebra from a certified basis

        Args:
            G: Certified Groebner basis over a plain (non-block) context
        """
        if not G.certified:
            raise NotCertifiedError("Quotient algebra needs a certified Groebner basis")
        if G.ctx.is_block:
            raise ContextMismatchError("Quotient algebras live over a plain lex context")
        self.G = G
        self.ctx = G.ctx
        self.field = G.field

        if any(not any(lm) for lm in G.leading_monomials):
            raise AlgebraError("The ideal is the whole ring; the quotient is zero")
        bounds = []
        for i, name in enumerate(self.ctx.names):
            powers = [lm[i] for lm in G.leading_monomials
                      if lm[i] and not any(e for j, e in enumerate(lm) if j != i)]
            if not powers:
                raise InfiniteDimensionalError(f"No pure power of '{name}' among the leading monomials")
            bounds.append(min(powers))

        standard = [m for m in product(*(range(b) for b in bounds)) if G.is_standard(m)]
        self.basis: Tuple[Monomial, ...] = tuple(sorted(standard, key=lambda m: (sum(m), m)))
        self._index = {m: i for i, m in enumerate(self.basis)}
        self.dimension = len(self.basis)
        self._products: Dict[Tuple[int, int], SparseRow] = {}
        self._powers: List[Subspace] = []
        self._socle: Optional[Subspace] = None
        self._nilpotency = self._nilpotency_indices()
        self.maximal_ideal: Optional[Tuple[int, ...]] = None
        if self._nilpotency is not None:
            self.maximal_ideal = tuple(i for i, m in enumerate(self.basis) if any(m))
        logger.info(f"Quotient algebra over {self.field.name}: dimension {self.dimension}, "
                    f"local={self.maximal_ideal is not None}")

    def _nilpotency_indices(self) -> Optional[Tuple[int, ...]]:
        indices = []
        for name in self.ctx.names:
            m = self.ctx.variable(name)
            power = self.ctx.one()
            for k in range(1, self.dimension + 2):
                power = monomial_mul(power, m)
                if not self.G.monomial_normal_form(power):
                    indices.append(k)
                    break
            else:
                return None
        return tuple(indices)

    @property
    def is_local(self) -> bool:
        return self.maximal_ideal is not None

    def _require_local(self):
        if self.maximal_ideal is None:
            raise NotLocalError("Algebra has no nilpotent maximal ideal spanned by basis monomials")

    def nilpotency_index(self, name: str) -> int:
        self._require_local()
        return self._nilpotency[self.ctx.index(name)]

    def index(self, m: Monomial) -> int:
        try:
            return self._index[tuple(m)]
        except KeyError:
            raise AlgebraError(f"{render_monomial(self.ctx, m) or '1'} is not a standard monomial")

    def coordinate_names(self) -> List[str]:
        return [coordinate_name(m) for m in self.basis]

    # Elements

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self.field.zero,) * self.dimension)

    def unit(self) -> AlgebraElement:
        return self.basis_element(self.ctx.one())

    def basis_element(self, m: Monomial) -> AlgebraElement:
        coords = [self.field.zero] * self.dimension
        coords[self.index(m)] = self.field.one
        return AlgebraElement(self, tuple(coords))

    def element_from_row(self, row: SparseRow) -> AlgebraElement:
        coords = [self.field.zero] * self.dimension
        for i, v in row.items():
            coords[i] = self.field(v)
        return AlgebraElement(self, tuple(coords))

    def generator(self, name: str) -> AlgebraElement:
        return self.reduce(Polynomial.variable(self.ctx, self.field, name))

    def reduce(self, p: Polynomial) -> AlgebraElement:
        """
        Coordinates of NF(p) over the basis

        Args:
            p: Polynomial in the algebra's context

        Returns:
            AlgebraElement
        """
        if p.ctx != self.ctx or p.field != self.field:
            raise ContextMismatchError("Polynomial does not live in the algebra's context")
        return self.element_from_row({self._index[m]: c for m, c in normal_form(p, self.G).terms.items()})

    # Multiplication

    def structure_constants(self, i: int, j: int) -> SparseRow:
        """Coordinates of basis[i] * basis[j], computed once per cell"""
        key = (i, j) if i <= j else (j, i)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        nf = self.G.monomial_normal_form(monomial_mul(self.basis[i], self.basis[j]))
        return self._products.setdefault(key, {self._index[m]: c for m, c in nf.items()})

    def multiply(self, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
        if u.algebra is not self or v.algebra is not self:
            raise ContextMismatchError("Elements belong to a different algebra")
        zero = self.field.zero
        out = [zero] * self.dimension
        right = v.support()
        for i, a in u.support().items():
            for j, b in right.items():
                ab = a * b
                for k, c in self.structure_constants(i, j).items():
                    out[k] += ab * c
        return AlgebraElement(self, tuple(out))

    def multiply_direct(self, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
        """Product by normal form of the representatives, bypassing the cache"""
        return self.reduce(u.to_polynomial() * v.to_polynomial())

    def multiplication_rows(self, name: str) -> List[SparseRow]:
        """Row b holds the coordinates of basis[b] * name"""
        g = self.index(self.ctx.variable(name))
        return [self.structure_constants(b, g) for b in range(self.dimension)]

    # Local structure

    def maximal_ideal_space(self) -> Subspace:
        self._require_local()
        return Subspace(self, tuple({i: self.field.one} for i in self.maximal_ideal))

    def socle(self) -> Subspace:
        """
        Socle as the common kernel of multiplication by each variable

        Returns:
            Row-reduced Subspace
        """
        self._require_local()
        if self._socle is None:
            equations: Dict[Tuple[int, int], SparseRow] = {}
            for g, name in enumerate(self.ctx.names):
                for b, row in enumerate(self.multiplication_rows(name)):
                    for k, c in row.items():
                        equations.setdefault((g, k), {})[b] = c
            kernel = nullspace(equations.values(), self.dimension, self.field)
            self._socle = Subspace.span(self, kernel)
            logger.info(f"Socle dimension {self._socle.dimension}")
        return self._socle

    def ideal_power(self, k: int) -> Subspace:
        """
        Power m^k of the maximal ideal

        Args:
            k: Exponent, at least 1

        Returns:
            Row-reduced Subspace
        """
        self._require_local()
        if k < 1:
            raise ValueError(f"Ideal power exponent must be positive, got {k}")
        if not self._powers:
            self._powers.append(self.maximal_ideal_space())
        generators = [self.generator(name) for name in self.ctx.names]
        while len(self._powers) < k:
            previous = self._powers[-1]
            if previous.dimension == 0:
                self._powers.append(previous)
                continue
            products = [e * g for e in previous.elements() for g in generators]
            self._powers.append(Subspace.span(self, products))
            logger.info(f"dim m^{len(self._powers)} = {self._powers[-1].dimension}")
        return self._powers[k - 1]

    def is_gorenstein(self) -> bool:
        return self.socle().dimension == 1

    def socle_degree(self) -> int:
        """Largest k with m^k != 0"""
        self._require_local()
        k = 1
        while self.ideal_power(k).dimension:
            k += 1
        return k - 1

    def hilbert_function(self) -> List[int]:
        """Dimensions of m^k / m^(k+1), starting at k = 0"""
        top = self.socle_degree()
        dims = [self.dimension] + [self.ideal_power(k).dimension for k in range(1, top + 2)]
        return [dims[k] - dims[k + 1] for k in range(top + 1)]

    # Monomials

    def zero_generators(self) -> List[Monomial]:
        """Minimal monomials that vanish in the algebra"""
        self._require_local()
        box = product(*(range(b + 1) for b in self._nilpotency))
        zeros = []
        for m in sorted(box, key=lambda m: (sum(m), m)):
            if any(monomial_divides(z, m) for z in zeros):
                continue
            if not self.G.monomial_normal_form(m):
                zeros.append(m)
        return zeros

    def nonzero_region(self) -> List[Monomial]:
        """All monomials divisible by no zero generator"""
        zeros = self.zero_generators()
        box = product(*(range(b) for b in self._nilpotency))
        return [m for m in sorted(box, key=lambda m: (sum(m), m))
                if not any(monomial_divides(z, m) for z in zeros)]

    def monomial_class(self, g: Monomial) -> MonomialClass:
        """
        Classify a monomial by its normal form

        Args:
            g: Exponent tuple in the algebra's context

        Returns:
            MonomialClass with the set of all monomials sharing g's normal form
        """
        g = tuple(g)
        if len(g) != self.ctx.arity:
            raise ContextMismatchError(f"Monomial {g} does not fit context of arity {self.ctx.arity}")
        nf = self.G.monomial_normal_form(g)
        if not nf:
            return MonomialClass(MonomialClass.ZERO)
        members = tuple(m for m in self.nonzero_region() if self.G.monomial_normal_form(m) == nf)
        if len(nf) != 1 or next(iter(nf.values())) != self.field.one:
            logger.debug(f"Normal form of {render_monomial(self.ctx, g)} is not a single basis monomial")
            return MonomialClass(MonomialClass.COMBINATION, None, members)
        representative = next(iter(nf))
        tag = MonomialClass.BASIS if representative == g else MonomialClass.EQUAL
        return MonomialClass(tag, representative, members)

    # Nilpotent series

    def _series_length(self, u: AlgebraElement) -> int:
        self._require_local()
        if u.algebra is not self:
            raise ContextMismatchError("Element belongs to a different algebra")
        if u.coords[self.index(self.ctx.one())] != self.field.zero:
            raise NonNilpotentError(f"{u} has a nonzero unit coordinate")
        power, k = u, 1
        while not power.is_zero():
            power = power * u
            k += 1
        # u^k = 0, so terms up to u^(k-1) appear
        top = k - 1
        if not self.field.supports_denominators(top):
            raise CharacteristicError(f"Characteristic {self.field.characteristic} too small for "
                                      f"series of length {top}")
        return top

    def log_nilpotent(self, u: AlgebraElement) -> AlgebraElement:
        """ln(1 + u) as the terminating series"""
        top = self._series_length(u)
        result = self.zero()
        power = self.unit()
        for k in range(1, top + 1):
            power = power * u
            term = power.scale(self.field.ratio(1, k))
            result = result + term if k % 2 else result - term
        return result

    def exp_nilpotent(self, u: AlgebraElement) -> AlgebraElement:
        """exp(u) - 1 as the terminating series"""
        top = self._series_length(u)
        one = self.unit()
        acc = one
        for k in range(top, 0, -1):
            acc = one + (u * acc).scale(self.field.ratio(1, k))
        return acc - one

    def to_json(self) -> dict:
        return {
            'vars': list(self.ctx.names),
            'field': self.field.name,
            'generators': [to_json(g) for g in self.G],
            'basis': [list(m) for m in self.basis],
        }

    def __repr__(self) -> str:
        return f"QuotientAlgebra(dim={self.dimension}, vars={self.ctx.names}, field={self.field.name})"


def from_basis(G: GroebnerBasis) -> QuotientAlgebra:
    return QuotientAlgebra(G)


if __name__ == "__main__":
    from groebner import buchberger
    from poly import VariableContext, parse
    logging.basicConfig(level=logging.INFO)
    ctx = VariableContext.lex('x', 'y')
    A = QuotientAlgebra(buchberger([parse(t, ctx) for t in ("y^7", "x^2*y^2 - y^4", "x^5 - x*y^3")]))
    print(A)
    print(f"Socle: {A.socle()}")
    print(f"Hilbert function: {A.hilbert_function()}")
