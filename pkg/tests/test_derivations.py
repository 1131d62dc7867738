"""Tests for derivation spaces and the Leibniz oracle"""

import pytest

from an_family import build
from derivations import (
    DerivationCandidate,
    candidate_from_row,
    candidate_is_derivation,
    compare_with_oracle,
    derivation_full_oracle,
    derivation_space,
    derivations_annihilate,
    extend_by_leibniz,
    is_derivation,
)
from errors import OracleBoundError
from groebner import buchberger
from linalg import EchelonForm
from poly import Field, VariableContext, parse
from quotient import QuotientAlgebra


@pytest.mark.parametrize("n", [
    2, 3, 4,
    pytest.param(5, marks=pytest.mark.slow),
    pytest.param(6, marks=pytest.mark.slow),
])
def test_constraint_space_matches_oracle(n):
    P = build(n)
    space = derivation_space(P.algebra, P.generators)
    oracle = derivation_full_oracle(P.algebra)
    result = compare_with_oracle(P.algebra, space, oracle)
    assert result['status'] == 'pass', result['detail']
    assert result['constraint_dimension'] == result['oracle_dimension']


def test_every_basis_candidate_is_a_derivation(a2):
    space = derivation_space(a2.algebra, a2.generators)
    assert space
    assert all(candidate_is_derivation(c) for c in space)


def test_socle_valued_derivation_is_present(a2):
    A = a2.algebra
    space = derivation_space(A, a2.generators)
    echelon = EchelonForm(A.field, 2 * A.dimension)
    for candidate in space:
        echelon.add(candidate.row())
    socle_y = DerivationCandidate((A.zero(), A.basis_element(a2.socle_generator)))
    assert echelon.contains(socle_y.row())
    assert candidate_from_row(A, socle_y.row()).dy == socle_y.dy


def test_euler_like_map_is_not_a_derivation(a2):
    A = a2.algebra
    # the Euler map fixes f2 up to scale but not the inhomogeneous f3
    scaling = DerivationCandidate((A.generator('x'), A.generator('y')))
    assert not candidate_is_derivation(scaling)
    assert not is_derivation(extend_by_leibniz(scaling))


def test_apply_matches_chain_rule(a2):
    A = a2.algebra
    candidate = DerivationCandidate((A.basis_element((0, 5)), A.basis_element((0, 6))))
    f = a2.poly("x*y^2 + y")
    expected = (A.reduce(a2.poly("y^2")) * candidate.dx
                + A.reduce(a2.poly("2*x*y + 1")) * candidate.dy)
    assert candidate.apply(f) == expected


def test_annihilation(a2):
    result = derivations_annihilate(a2)
    assert result['status'] == 'pass'
    assert result['annihilated'] and result['agree']


def test_annihilation_over_prime_fields():
    assert derivations_annihilate(build(2, Field.prime(5)))['status'] == 'pass'
    result = derivations_annihilate(build(2, Field.prime(2)))
    assert not result['hypothesis_holds']
    assert result['status'] in ('skipped', 'fail')
    assert 'hypothesis violated' in result['detail']


def test_oracle_on_truncated_line():
    ctx = VariableContext.lex('t')
    A = QuotientAlgebra(buchberger([parse("t^3", ctx)]))
    oracle = derivation_full_oracle(A)
    # D(t) may be t or t^2
    assert len(oracle) == 2
    assert len(derivation_space(A, [parse("t^3", ctx)])) == 2


def test_oracle_on_small_algebras():
    ctx = VariableContext.lex('t')
    dual = QuotientAlgebra(buchberger([parse("t^2", ctx)]))
    (images,) = derivation_full_oracle(dual)
    assert images[dual.index((0,))].is_zero()
    image_of_t = images[dual.index((1,))]
    assert image_of_t[(0,)] == dual.field.zero
    assert not image_of_t.is_zero()
    assert derivation_full_oracle(QuotientAlgebra(buchberger([parse("t", ctx)]))) == []


def test_oracle_bound(a3):
    with pytest.raises(OracleBoundError):
        derivation_full_oracle(a3.algebra, bound=20)
