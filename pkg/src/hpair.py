"""
H-Pair Module for the Gorenstein Algebra Verifier
Hyperplane functionals on the maximal ideal, hypersurface degree and the logarithmic equation
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Union

from errors import (
    AlgebraError,
    CharacteristicError,
    FunctionalError,
    NonNilpotentError,
    PolynomialSyntaxError,
)
from groebner import normal_form
from linalg import nullspace
from poly import Monomial, Polynomial, VariableContext, parse, to_json
from quotient import UNIT_COORDINATE, AlgebraElement, QuotientAlgebra, Subspace, coordinate_name

logger = logging.getLogger(__name__)


class HPairFunctional:
    """Linear functional pi on the maximal ideal; U = ker pi"""

    def __init__(self, algebra: QuotientAlgebra, coeffs: Mapping[int, object]):
        """
        Initialize functional and evaluate its flags

        Args:
            algebra: Local quotient algebra
            coeffs: Basis index -> coefficient, non-unit indices only
        """
        algebra._require_local()
        field = algebra.field
        allowed = set(algebra.maximal_ideal)
        cleaned = {}
        for i, c in coeffs.items():
            if i not in allowed:
                raise FunctionalError(f"{coordinate_name(algebra.basis[i])} is not a maximal-ideal coordinate")
            c = field(c)
            if c != field.zero:
                cleaned[i] = c
        if not cleaned:
            raise FunctionalError("The zero functional does not define a hyperplane")
        self.algebra = algebra
        self.coeffs: Dict[int, object] = cleaned
        socle = algebra.socle()
        self.complementary = socle.dimension == 1 and self.evaluate(socle.elements()[0]) != field.zero
        self.generating = self._generates()
        logger.info(f"Functional {self}: complementary={self.complementary}, generating={self.generating}")

    def evaluate(self, element: Union[AlgebraElement, Dict[int, object]]):
        """pi applied to an element's coordinates (the unit coordinate is ignored)"""
        row = element.support() if isinstance(element, AlgebraElement) else element
        total = self.algebra.field.zero
        for i, c in self.coeffs.items():
            v = row.get(i)
            if v is not None:
                total = total + c * v
        return total

    def kernel(self) -> Subspace:
        """U = ker pi inside the maximal ideal"""
        A = self.algebra
        unit = A.index(A.ctx.one())
        vectors = nullspace([dict(self.coeffs), {unit: A.field.one}], A.dimension, A.field)
        return Subspace.span(A, vectors)

    def _generates(self) -> bool:
        A = self.algebra
        closure = self.kernel()
        for _ in range(A.dimension):
            elements = closure.elements()
            products = [u * v for i, u in enumerate(elements) for v in elements[i:]]
            grown = Subspace.span(A, elements + products)
            if grown.dimension == closure.dimension:
                break
            closure = grown
        else:
            raise AlgebraError("Span closure did not stabilize within dim A iterations")
        whole = Subspace.span(A, closure.elements() + [A.unit()])
        return whole.dimension == A.dimension

    @cached_property
    def degree(self) -> int:
        """Largest d with m^d not inside ker pi"""
        if not self.complementary:
            raise FunctionalError("Functional is not complementary to the socle")
        A = self.algebra
        d, k = 0, 1
        while True:
            power = A.ideal_power(k)
            if not power.dimension:
                break
            if any(self.evaluate(row) != A.field.zero for row in power.rows):
                d = k
            k += 1
        return d

    def coordinate_coefficients(self) -> Dict[str, object]:
        return {coordinate_name(self.algebra.basis[i]): c for i, c in sorted(self.coeffs.items())}

    def __str__(self) -> str:
        field = self.algebra.field
        parts = []
        for name, c in self.coordinate_coefficients().items():
            parts.append(name if c == field.one else f"{field.render(c)}*{name}")
        return ' + '.join(parts)


def make_functional(algebra: QuotientAlgebra, coeffs: Mapping[Union[int, str, Monomial], object]) -> HPairFunctional:
    """
    Build a functional from coefficients keyed by basis index, monomial or z-name

    Returns:
        HPairFunctional with its flags evaluated
    """
    names = {coordinate_name(m): i for i, m in enumerate(algebra.basis)}
    indexed = {}
    for key, c in coeffs.items():
        if isinstance(key, str):
            if key not in names:
                raise FunctionalError(f"Unknown coordinate '{key}'")
            i = names[key]
        elif isinstance(key, tuple):
            i = algebra.index(key)
        else:
            i = key
        indexed[i] = c
    return HPairFunctional(algebra, indexed)


def parse_functional(algebra: QuotientAlgebra, text: str) -> HPairFunctional:
    """
    Parse a linear expression in z-names such as 'z_05+z_06'

    Args:
        algebra: Local quotient algebra
        text: Expression in the polynomial grammar of degree at most 1

    Returns:
        HPairFunctional
    """
    ctx = VariableContext(tuple(sorted(coordinate_name(m) for m in algebra.basis)))
    try:
        expression = parse(text, ctx, algebra.field)
    except PolynomialSyntaxError as e:
        raise FunctionalError(f"Bad functional '{text}': {e}")
    if expression.total_degree() > 1:
        raise FunctionalError(f"Functional '{text}' is not linear")
    if expression.constant_term() != algebra.field.zero:
        raise FunctionalError(f"Functional '{text}' has a constant term")
    if UNIT_COORDINATE in expression.variables():
        raise FunctionalError(f"Functional '{text}' involves the unit coordinate")
    coeffs = {}
    for m, c in expression.terms.items():
        coeffs[ctx.names[m.index(1)]] = c
    return make_functional(algebra, coeffs)


@dataclass(frozen=True)
class HypersurfaceEquation:
    """Homogeneous equation in z_00 and the maximal-ideal coordinates"""
    polynomial: Polynomial
    degree: int

    def is_homogeneous(self) -> bool:
        return all(sum(m) == self.degree for m in self.polynomial.terms)

    def __str__(self) -> str:
        return str(self.polynomial)

    def to_json(self) -> dict:
        data = to_json(self.polynomial)
        data['degree'] = self.degree
        return data


def generic_context(algebra: QuotientAlgebra) -> VariableContext:
    names = [coordinate_name(m) for m in algebra.basis]
    return algebra.ctx.with_trailing(names)


def hypersurface_degree(F: HPairFunctional) -> int:
    return F.degree


def hypersurface_equation(F: HPairFunctional) -> HypersurfaceEquation:
    """
    z_00^d * pi(ln(1 + z/z_00)) for the generic element z of the maximal ideal

    Args:
        F: Complementary and generating functional

    Returns:
        HypersurfaceEquation of degree d
    """
    A = F.algebra
    if not F.complementary:
        raise FunctionalError(f"Functional {F} is not complementary")
    if not F.generating:
        raise FunctionalError(f"Kernel of {F} does not generate the algebra")
    d = F.degree
    if not A.field.supports_denominators(d):
        raise CharacteristicError(f"Characteristic {A.field.characteristic} too small for degree {d}")

    ctx = generic_context(A)
    field = A.field
    G = A.G.lift(ctx)
    k_lead = A.ctx.arity

    def coordinate(m: Monomial) -> Monomial:
        return ctx.variable(coordinate_name(m))[k_lead:]

    z = Polynomial(ctx, field, {m + coordinate(m): 1 for i, m in enumerate(A.basis) if i in A.maximal_ideal})
    z00 = Polynomial.variable(ctx, field, UNIT_COORDINATE)
    power = z
    total = Polynomial.zero(ctx, field)
    for k in range(1, d + 1):
        if k > 1:
            power = normal_form(power * z, G)
        weight = field.ratio(1 if k % 2 else -1, k)
        total = total + (power * z00 ** (d - k)).scale(weight)
        logger.info(f"Log series term {k}/{d}: {len(power)} terms")

    equation = Polynomial.zero(ctx, field)
    for i, c in F.coeffs.items():
        equation = equation + total.coefficient_of(A.basis[i]).scale(c)
    result = HypersurfaceEquation(equation.drop_leading(), d)
    if not result.is_homogeneous():
        raise AlgebraError(f"Equation for {F} is not homogeneous of degree {d}")
    return result


def evaluate_point(equation: HypersurfaceEquation, F: HPairFunctional, z00, element: AlgebraElement):
    """Value of the equation at z_00 = z00 and z_m = coordinates of element"""
    A = F.algebra
    unit = A.index(A.ctx.one())
    if element.coords[unit] != A.field.zero:
        raise NonNilpotentError("Point coordinates must lie in the maximal ideal")
    values = {coordinate_name(m): c for m, c in zip(A.basis, element.coords)}
    values[UNIT_COORDINATE] = A.field(z00)
    ctx_names = set(equation.polynomial.ctx.names)
    return equation.polynomial.evaluate({k: v for k, v in values.items() if k in ctx_names})


def point_membership(equation: HypersurfaceEquation, F: HPairFunctional, u: AlgebraElement) -> bool:
    """
    Check that the image of 1 + exp(u) - 1 lies on the hypersurface

    Args:
        equation: Equation built from F
        F: Functional
        u: Element of ker pi

    Returns:
        True iff the equation vanishes at z_00 = 1, z = exp(u) - 1
    """
    A = F.algebra
    if u.coords[A.index(A.ctx.one())] != A.field.zero or F.evaluate(u) != A.field.zero:
        raise FunctionalError(f"{u} does not lie in ker pi")
    return evaluate_point(equation, F, 1, A.exp_nilpotent(u)) == A.field.zero


def separates_socle_adjacent_line(F: HPairFunctional, P) -> bool:
    """True iff y^(2n+1) lies in ker pi"""
    return F.evaluate(P.algebra.basis_element(P.socle_adjacent)) == P.field.zero


if __name__ == "__main__":
    from an_family import build
    logging.basicConfig(level=logging.INFO)
    P = build(2)
    F = parse_functional(P.algebra, "z_06")
    print(f"d = {F.degree}")
    print(hypersurface_equation(F))
