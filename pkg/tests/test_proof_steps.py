"""Tests for the symbolic proof-step verifier"""

import pytest

from an_family import build
from errors import BudgetExceededError, FieldError
from poly import Field
from proof_steps import (
    AUTOMORPHISMS,
    DERIVATIONS,
    StepVerifier,
    automorphism_steps,
    derivation_steps,
    unknown_name,
    verify_proof_steps,
)


def test_unknown_names():
    assert unknown_name('a', (1, 0)) == 'a_10'
    assert unknown_name('b', (0, 2)) == 'b_02'
    assert unknown_name('a', (0, 0)) == 'a_00'


def test_step_tables():
    assert [s.label for s in derivation_steps(2)] == ['1', '2', '3', '4', '5', '6', '6a', '7']
    assert [s.label for s in automorphism_steps(3)] == [str(k) for k in range(1, 9)]
    assert derivation_steps(3)[3].expected == "3*a_10 - 3*b_01"


def test_derivation_steps_n2(a2):
    report = verify_proof_steps(a2, DERIVATIONS)
    assert report['status'] == 'pass', report['detail']
    assert [s['status'] for s in report['steps']] == ['pass'] * 9
    assert report['steps'][-1]['step'] == '8'
    for name in ('a_00', 'a_01', 'a_10', 'a_11', 'b_10', 'b_20'):
        assert report['substitutions'][name] == '0'


def test_automorphism_steps_n2(a2):
    report = verify_proof_steps(a2, AUTOMORPHISMS)
    assert report['status'] == 'pass', report['detail']
    assert len(report['steps']) == 9
    assert report['substitutions']['b_10'] == '0'


@pytest.mark.slow
@pytest.mark.parametrize("theorem", [DERIVATIONS, AUTOMORPHISMS])
def test_steps_n3(a3, theorem):
    assert verify_proof_steps(a3, theorem)['status'] == 'pass'


def test_max_n_and_field_guards():
    with pytest.raises(BudgetExceededError):
        verify_proof_steps(build(4), DERIVATIONS, max_n=3)
    with pytest.raises(FieldError):
        verify_proof_steps(build(2, Field.prime(5)), DERIVATIONS)
    with pytest.raises(ValueError):
        StepVerifier(build(2), 'hodge')


def test_exhausted_budget(a2):
    with pytest.raises(BudgetExceededError):
        verify_proof_steps(a2, AUTOMORPHISMS, budget_seconds=-1)
