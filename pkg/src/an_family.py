"""
A_n Family Module for the Gorenstein Algebra Verifier
Builds K[x,y]/(y^(2n+3), x^n*y^2 - y^(n+2), x^(2n+1) - x*y^(n+1)) and checks its relations and socle
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from errors import AlgebraError
from groebner import GroebnerBasis, buchberger, ideal_member, normal_form
from poly import Field, Monomial, Polynomial, VariableContext, parse, render_monomial
from quotient import AlgebraElement, QuotientAlgebra, Subspace

logger = logging.getLogger(__name__)

RELATION_FAMILIES = (
    'f2_base',
    'f2_y_shifts',
    'socle_adjacent',
    'socle',
    'mixed_shifts',
    'f3_base',
    'f3_x_shifts',
    'vanishing',
)


class AnPresentation:
    """The algebra A_n with its generators, Groebner basis and quotient"""

    def __init__(self, n: int, field: Optional[Field] = None):
        """
        Initialize presentation

        Args:
            n: Family parameter, at least 2
            field: Coefficient field (rationals by default)
        """
        if n < 2:
            raise AlgebraError(f"A_n needs n >= 2, got {n}")
        self.n = n
        self.field = field or Field.rationals()
        self.ctx = VariableContext.lex('x', 'y')

        p = self.field.characteristic
        self.char_divides_n = p != 0 and n % p == 0
        self.char_divides_n_minus_1 = p != 0 and (n - 1) % p == 0

        self.f1 = self.poly(f"y^{2*n + 3}")
        self.f2 = self.poly(f"x^{n}*y^2 - y^{n + 2}")
        self.f3 = self.poly(f"x^{2*n + 1} - x*y^{n + 1}")
        self.f4 = self.poly(f"x*y^{n + 3}")
        self.generators = (self.f1, self.f2, self.f3)

        self.G: GroebnerBasis = buchberger(self.generators)
        expected = sorted([self.monomial(0, 2*n + 3), self.monomial(1, n + 3),
                           self.monomial(n, 2), self.monomial(2*n + 1, 0)])
        if list(self.G.leading_monomials) != expected:
            raise AlgebraError(f"Unexpected leading monomials {self.G.leading_monomials} for n={n}")

        self.algebra = QuotientAlgebra(self.G)
        if self.algebra.dimension != self.expected_dimension:
            raise AlgebraError(f"dim A_{n} = {self.algebra.dimension}, expected {self.expected_dimension}")
        logger.info(f"Built A_{n} over {self.field.name}: dimension {self.algebra.dimension}")

    @classmethod
    def build(cls, n: int, field: Optional[Field] = None) -> 'AnPresentation':
        return cls(n, field)

    @property
    def expected_dimension(self) -> int:
        return self.n * self.n + 6 * self.n + 2

    @property
    def hypothesis_holds(self) -> bool:
        """Characteristic is zero or coprime to both n and n - 1"""
        return not (self.char_divides_n or self.char_divides_n_minus_1)

    def monomial(self, i: int, j: int) -> Monomial:
        return (i, j)

    def poly(self, text: str) -> Polynomial:
        return parse(text, self.ctx, self.field)

    def element(self, i: int, j: int) -> AlgebraElement:
        return self.algebra.reduce(Polynomial.from_monomial(self.ctx, self.field, (i, j)))

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.G)

    @property
    def socle_generator(self) -> Monomial:
        return (0, 2 * self.n + 2)

    @property
    def socle_adjacent(self) -> Monomial:
        return (0, 2 * self.n + 1)

    def __repr__(self) -> str:
        return f"AnPresentation(n={self.n}, field={self.field.name}, dim={self.algebra.dimension})"


def build(n: int, field: Optional[Field] = None) -> AnPresentation:
    return AnPresentation(n, field)


def cofactor_identity(P: AnPresentation, cofactors: Optional[Sequence[Polynomial]] = None) -> bool:
    """
    Check f4 = c1*f1 + c2*f2 + c3*f3 as an exact polynomial identity

    Args:
        P: Presentation
        cofactors: Override (c1, c2, c3); the closed-form cofactors by default

    Returns:
        True iff the identity holds
    """
    n = P.n
    if cofactors is None:
        cofactors = default_cofactors(P)
    c1, c2, c3 = cofactors
    combination = c1 * P.f1 + c2 * P.f2 + c3 * P.f3
    holds = combination == P.f4
    if not holds:
        logger.error(f"Cofactor identity fails for n={n}: difference {combination - P.f4}")
    return holds


def default_cofactors(P: AnPresentation) -> List[Polynomial]:
    n = P.n
    return [
        P.poly(f"x*y^{n - 2}"),
        P.poly(f"x^{n + 1}*y^{n - 1} + x*y^{2*n - 1} + x^{n + 1} + x*y^{n}"),
        P.poly(f"-y^{n + 1} - y^2"),
    ]


def f4_in_ideal(P: AnPresentation) -> bool:
    return ideal_member(P.f4, P.G)


Side = Union[Monomial, Polynomial]


def _as_poly(P: AnPresentation, side: Side) -> Polynomial:
    if isinstance(side, Polynomial):
        return side
    return Polynomial.from_monomial(P.ctx, P.field, tuple(side))


def _describe(P: AnPresentation, sides: Sequence[Side], vanishing: bool) -> str:
    text = ' = '.join(str(_as_poly(P, s)) for s in sides)
    return f"{text} = 0" if vanishing else text


def check_relation(P: AnPresentation, sides: Sequence[Side], vanishing: bool = False,
                   family: str = 'custom') -> Dict:
    """
    Check that all sides share one normal form

    Args:
        P: Presentation
        sides: Monomials or polynomials claimed equal in A_n
        vanishing: Claim that the common value is 0 (otherwise it must be nonzero)
        family: Label used in the report

    Returns:
        Check dict with 'status' and 'detail'
    """
    forms = [P.normal_form(_as_poly(P, s)) for s in sides]
    relation = _describe(P, sides, vanishing)
    if vanishing:
        bad = [str(_as_poly(P, s)) for s, nf in zip(sides, forms) if nf]
        ok = not bad
        detail = 'all vanish' if ok else f"nonzero: {', '.join(bad)}"
    else:
        ok = all(nf == forms[0] for nf in forms) and bool(forms[0])
        detail = f"common value {forms[0]}" if ok else f"normal forms {[str(f) for f in forms]}"
    if not ok:
        logger.error(f"Relation {relation} fails for n={P.n}: {detail}")
    return {'family': family, 'relation': relation, 'status': 'pass' if ok else 'fail', 'detail': detail}


def relation_table(P: AnPresentation) -> Dict[str, List[Tuple[List[Monomial], bool]]]:
    """Claimed relations of A_n grouped by family: (sides, vanishing) pairs"""
    n = P.n
    table: Dict[str, List] = {name: [] for name in RELATION_FAMILIES}
    table['f2_base'].append(([(0, n + 2), (n, 2)], False))
    for k in range(1, n - 1):
        table['f2_y_shifts'].append(([(0, n + k + 2), (n, k + 2)], False))
    table['socle_adjacent'].append(([(0, 2*n + 1), (n, n + 1), (3*n, 0)], False))
    table['socle'].append(([(0, 2*n + 2), (n, n + 2), (2*n, 2), (3*n, 1)], False))
    for k in range(1, n):
        table['mixed_shifts'].append(([(k, n + 2), (n + k, 2), (2*n + k, 1)], False))
    table['f3_base'].append(([(1, n + 1), (2*n + 1, 0)], False))
    for k in range(2, n):
        table['f3_x_shifts'].append(([(k, n + 1), (2*n + k, 0)], False))
    table['vanishing'].append(([(0, 2*n + 3), (1, n + 3), (n + 1, 3), (2*n + 1, 2), (3*n + 1, 0)], True))
    return table


def verify_relations(P: AnPresentation) -> Dict:
    """
    Check every listed relation of A_n by normal form

    Returns:
        Dict with overall 'status' and per-relation 'checks'
    """
    checks = []
    for family, entries in relation_table(P).items():
        if not entries:
            logger.info(f"n={P.n}: relation family {family} is empty")
        for sides, vanishing in entries:
            checks.append(check_relation(P, sides, vanishing, family))
    failed = [c for c in checks if c['status'] != 'pass']
    return {
        'status': 'fail' if failed else 'pass',
        'detail': f"{len(checks) - len(failed)}/{len(checks)} relations hold",
        'checks': checks,
    }


def socle_report(P: AnPresentation) -> Dict:
    """
    Compare the computed socle with span{y^(2n+2)}

    Returns:
        Dict with the socle Subspace and the Gorenstein flag
    """
    A = P.algebra
    socle = A.socle()
    expected = Subspace.span(A, [A.basis_element(P.socle_generator)])
    matches = socle == expected
    gorenstein = A.is_gorenstein()
    status = 'pass' if matches and gorenstein else 'fail'
    generator = render_monomial(P.ctx, P.socle_generator)
    detail = (f"Soc A_{P.n} = <{generator}>" if matches
              else f"socle {socle} differs from <{generator}>")
    if status == 'fail':
        logger.error(detail)
    return {'status': status, 'detail': detail, 'socle': socle, 'gorenstein': gorenstein}


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    P = build(2)
    print(P)
    print(f"Cofactor identity: {cofactor_identity(P)}")
    print(f"Relations: {verify_relations(P)['detail']}")
    print(socle_report(P)['detail'])
