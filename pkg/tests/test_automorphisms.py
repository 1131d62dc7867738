"""Tests for automorphism validation and the socle-adjacent scalar"""

import pytest

from an_family import build
from automorphisms import (
    AutomorphismCandidate,
    AutomorphismReport,
    compose_automorphisms,
    expected_sign_gamma,
    identity_automorphism,
    linear_determinant,
    root_of_unity_exponent,
    sign_automorphism,
    socle_shift_automorphism,
    swap_candidate,
    verify_automorphism,
)
from conftest import PROPERTY_CASES
from errors import AlgebraError, ContextMismatchError
from poly import Field, VariableContext, parse


@pytest.mark.parametrize("n", range(2, 11))
def test_sign_automorphism_gamma(n):
    P = build(n)
    report = verify_automorphism(P, sign_automorphism(P))
    assert report.status == 'pass', report.detail
    assert report.gamma == P.field(expected_sign_gamma(n))
    assert report.root_of_unity


@pytest.mark.parametrize("n", [2, 3, 4])
def test_swap_is_rejected(n):
    P = build(n)
    report = verify_automorphism(P, swap_candidate(P))
    assert not report.valid
    assert not report.relations_preserved
    assert report.invertible_linear_part
    assert report.status == 'fail'
    assert report.gamma is None


def test_identity(a2):
    report = verify_automorphism(a2, identity_automorphism(a2))
    assert report.status == 'pass'
    assert report.gamma == a2.field.one


def test_exponents():
    assert root_of_unity_exponent(2) == 1
    assert root_of_unity_exponent(3) == 2
    assert root_of_unity_exponent(4) == 1
    assert root_of_unity_exponent(7) == 2
    assert root_of_unity_exponent(8) == 7
    assert expected_sign_gamma(3) == -1
    assert expected_sign_gamma(4) == 1


def test_socle_shift_fixes_gamma(a3):
    shift = socle_shift_automorphism(a3, a3.field.ratio(2, 3), a3.field(-5))
    report = verify_automorphism(a3, shift)
    assert report.status == 'pass'
    assert report.gamma == a3.field.one
    assert linear_determinant(a3, shift) == a3.field.one


def test_singular_map_rejected(a2):
    zero = AutomorphismCandidate(a2.poly("0"), a2.poly("0"))
    report = verify_automorphism(a2, zero)
    assert report.relations_preserved
    assert not report.invertible_linear_part
    assert report.status == 'fail'


def test_input_errors(a2):
    with pytest.raises(AlgebraError):
        verify_automorphism(a2, AutomorphismCandidate(a2.poly("x + 1"), a2.poly("y")))
    other = VariableContext.lex('y', 'x')
    with pytest.raises(ContextMismatchError):
        verify_automorphism(a2, AutomorphismCandidate(parse("x", other), parse("y", other)))


def test_composition_order(a3):
    sign = sign_automorphism(a3)
    composite = compose_automorphisms(a3, sign, sign)
    assert composite.phi_x == a3.poly("x")
    assert composite.phi_y == a3.poly("y")


@pytest.mark.parametrize("n", [2, 3])
def test_random_composites_preserve_the_line(n, source):
    P = build(n)
    for _ in range(PROPERTY_CASES):
        report = verify_automorphism(P, source.automorphism(P))
        assert report.status == 'pass', report.detail
        assert report.gamma in (P.field.one, -P.field.one)
        assert report.gamma ** report.exponent == P.field.one


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_is_multiplicative_under_composition(n, source):
    P = build(n)
    for _ in range(PROPERTY_CASES):
        phi, psi = source.automorphism(P), source.automorphism(P)
        gamma_phi = verify_automorphism(P, phi).gamma
        gamma_psi = verify_automorphism(P, psi).gamma
        composite = verify_automorphism(P, compose_automorphisms(P, phi, psi))
        assert composite.status == 'pass', composite.detail
        assert composite.gamma == gamma_phi * gamma_psi


def test_shifted_sign_map_scales_the_line_by_gamma(a3):
    shift = socle_shift_automorphism(a3, a3.field.ratio(1, 2), a3.field(3))
    composite = compose_automorphisms(a3, shift, sign_automorphism(a3))
    assert verify_automorphism(a3, composite).gamma == a3.field(expected_sign_gamma(3))


def test_conclusions_not_asserted_without_hypothesis():
    valid = dict(valid=True, invertible_linear_part=True, relations_preserved=True)
    assert AutomorphismReport(pure_scalar=False, **valid).status == 'fail'
    assert AutomorphismReport(pure_scalar=False, hypothesis_holds=False, **valid).status == 'skipped'
    assert AutomorphismReport(pure_scalar=True, root_of_unity=False, **valid).status == 'fail'
    assert AutomorphismReport(pure_scalar=True, root_of_unity=False, hypothesis_holds=False,
                              **valid).status == 'skipped'
    assert AutomorphismReport(pure_scalar=True, root_of_unity=True, hypothesis_holds=False,
                              **valid).status == 'pass'


def test_prime_field_sign_automorphism():
    P = build(3, Field.prime(7))
    report = verify_automorphism(P, sign_automorphism(P))
    assert report.status == 'pass'
    assert report.gamma == P.field(-1)
    assert report.to_dict(P.field)['gamma'] == '6'
