"""Tests for hyperplane functionals and the hypersurface equation"""

import pytest

from an_family import build
from conftest import PROPERTY_CASES
from errors import CharacteristicError, FunctionalError, NonNilpotentError
from hpair import (
    evaluate_point,
    hypersurface_degree,
    hypersurface_equation,
    make_functional,
    parse_functional,
    point_membership,
    separates_socle_adjacent_line,
)
from poly import Field


def coefficient(equation, **exponents):
    poly = equation.polynomial
    return poly.coefficient(poly.ctx.monomial(**exponents))


def test_functional_flags(a2, pi1, pi2):
    for F in (pi1, pi2):
        assert F.complementary
        assert F.generating
        assert F.degree == 7
        assert hypersurface_degree(F) == 7
    assert str(pi2) == "z_05 + z_06"


def test_non_complementary_functional(a2):
    F = parse_functional(a2.algebra, "z_10")
    assert not F.complementary
    with pytest.raises(FunctionalError):
        F.degree
    with pytest.raises(FunctionalError):
        hypersurface_equation(F)


@pytest.mark.parametrize("text", ["z_00", "z_05*z_06", "1 + z_06", "z_99", "0", "z_06 +"])
def test_bad_functionals(a2, text):
    with pytest.raises(FunctionalError):
        parse_functional(a2.algebra, text)


def test_make_functional_keys(a2, pi2):
    by_name = make_functional(a2.algebra, {'z_05': 1, 'z_06': 1})
    by_monomial = make_functional(a2.algebra, {(0, 5): 1, (0, 6): 1})
    assert by_name.coeffs == by_monomial.coeffs == pi2.coeffs
    with pytest.raises(FunctionalError):
        make_functional(a2.algebra, {(0, 0): 1})


def test_p1_matches_golden(p1_equation, golden):
    assert p1_equation.degree == 7
    assert p1_equation.is_homogeneous()
    assert p1_equation.polynomial == golden('p1.txt')
    assert len(p1_equation.polynomial) == 86


def test_p1_anchors(p1_equation):
    field = Field.rationals()
    assert coefficient(p1_equation, z_01=1, z_10=6) == field.one
    assert coefficient(p1_equation, z_01=6, z_00=1) == field.ratio(-1, 6)
    assert coefficient(p1_equation, z_06=1, z_00=6) == field.one


def test_p2_difference_matches_golden(p1_equation, p2_equation, golden):
    assert p2_equation.degree == 7
    assert p2_equation.is_homogeneous()
    difference = p2_equation.polynomial - p1_equation.polynomial
    assert difference == golden('p2.txt')
    assert p2_equation.polynomial != p1_equation.polynomial
    field = Field.rationals()
    assert coefficient(p2_equation, z_10=6, z_00=1) == field.ratio(-1, 6)
    assert coefficient(p2_equation, z_05=1, z_00=6) == field.one


def test_equation_is_linear_in_the_functional(a2, p1_equation, p2_equation):
    difference = hypersurface_equation(parse_functional(a2.algebra, "z_06 - z_05"))
    assert difference.polynomial == p1_equation.polynomial * 2 - p2_equation.polynomial


@pytest.mark.parametrize("which", ["pi1", "pi2"])
def test_kernel_points_lie_on_hypersurface(which, request, source):
    F = request.getfixturevalue(which)
    equation = hypersurface_equation(F)
    for _ in range(PROPERTY_CASES):
        u = source.kernel_element(F)
        assert F.evaluate(u) == F.algebra.field.zero
        assert point_membership(equation, F, u)


def test_socle_perturbation_leaves_hypersurface(a2, pi1, p1_equation, source):
    A = a2.algebra
    shift = A.basis_element(a2.socle_generator)
    for _ in range(10):
        u = source.kernel_element(pi1)
        point = A.exp_nilpotent(u) + shift
        assert evaluate_point(p1_equation, pi1, 1, point) == A.field.one


def test_point_preconditions(a2, pi1, p1_equation):
    A = a2.algebra
    with pytest.raises(FunctionalError):
        point_membership(p1_equation, pi1, A.basis_element((0, 6)))
    with pytest.raises(NonNilpotentError):
        evaluate_point(p1_equation, pi1, 1, A.unit())


def test_socle_adjacent_line(a2, pi1, pi2):
    assert separates_socle_adjacent_line(pi1, a2)
    assert not separates_socle_adjacent_line(pi2, a2)


def test_degree_exceeds_characteristic():
    P = build(2, Field.prime(5))
    F = parse_functional(P.algebra, "z_06")
    assert F.degree == 7
    with pytest.raises(CharacteristicError):
        hypersurface_equation(F)
