"""Tests for exact polynomials and their text/JSON forms"""

import json

import pytest

from conftest import PROPERTY_CASES
from errors import (
    ContextMismatchError,
    ExponentOverflowError,
    FieldError,
    PolynomialSyntaxError,
    ZeroPolynomialError,
)
from poly import Field, Polynomial, VariableContext, from_json, monomial_mul, parse, render, to_json

QQ_FIELD = Field.rationals()
CTX = VariableContext.lex('x', 'y')


def p(text, field=QQ_FIELD, ctx=CTX):
    return parse(text, ctx, field)


def test_parse_f2():
    f = p("x^2*y^2 - y^4")
    assert len(f) == 2
    assert f.coefficient((2, 2)) == QQ_FIELD(1)
    assert f.coefficient((0, 4)) == QQ_FIELD(-1)


def test_parse_zero_and_merge():
    assert p("0").is_zero()
    assert len(p("0").terms) == 0
    f = p("1/2*x + 1/3*x")
    assert f == Polynomial.from_monomial(CTX, QQ_FIELD, (1, 0), QQ_FIELD.ratio(5, 6))
    assert str(f) == "5/6*x"


def test_parse_errors_carry_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        p("x^2 + * y")
    assert info.value.position == 6
    with pytest.raises(PolynomialSyntaxError):
        p("x + z")
    with pytest.raises(PolynomialSyntaxError):
        p("")


def test_zero_modulus_division():
    with pytest.raises(PolynomialSyntaxError):
        p("1/5*x", Field.prime(5))
    assert p("1/2*x", Field.prime(5)) == p("3*x", Field.prime(5))


def test_field_selector():
    assert Field.from_selector("q").characteristic == 0
    assert Field.from_selector("fp:7").name == "fp:7"
    with pytest.raises(FieldError):
        Field.from_selector("fp:6")
    with pytest.raises(FieldError):
        Field.from_selector("r")


def test_arithmetic():
    x, y = p("x"), p("y")
    assert (x + y) * (x - y) == p("x^2 - y^2")
    assert (x + y) ** 3 == p("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert x - x == p("0")
    assert (x * 2).scale(QQ_FIELD.ratio(1, 2)) == x
    assert 1 - x == p("1 - x")


def test_leading_term_lex():
    f = p("x*y^5 + x^2 + y^9")
    assert f.leading_monomial == (2, 0)
    assert f.leading_coefficient == QQ_FIELD(1)
    assert p("3*x*y - x").monic() == p("x*y - 1/3*x")
    with pytest.raises(ZeroPolynomialError):
        p("0").leading_term()


def test_render_is_descending_and_parseable():
    f = p("-y^4 + x^2*y^2 - 1/6*x + 7")
    assert render(f) == "x^2*y^2 - 1/6*x - y^4 + 7"
    assert p(render(f)) == f
    assert str(p("-x")) == "-x"
    assert str(p("0")) == "0"


def test_context_mismatch():
    other = VariableContext.lex('y', 'x')
    with pytest.raises(ContextMismatchError):
        p("x") + parse("x", other)
    with pytest.raises(ContextMismatchError):
        p("x") + p("x", Field.prime(5))


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        Polynomial(CTX, QQ_FIELD, {(-1, 0): 1})
    with pytest.raises(PolynomialSyntaxError):
        p("x^4294967296")


def test_diff_compose_substitute_evaluate():
    f = p("x^3*y - 2*y^2")
    assert f.diff('x') == p("3*x^2*y")
    assert f.diff('y') == p("x^3 - 4*y")
    assert f.compose({'x': p("y"), 'y': p("x")}) == p("y^3*x - 2*x^2")
    assert f.substitute({'y': 2}) == p("2*x^3 - 8")
    assert f.evaluate({'x': 2, 'y': QQ_FIELD.ratio(1, 2)}) == QQ_FIELD(4) - QQ_FIELD.ratio(1, 2)


def test_block_context_and_coefficient_extraction():
    ctx = VariableContext.block(('x', 'y'), ['b_10', 'a_10'])
    assert ctx.names == ('x', 'y', 'a_10', 'b_10')
    assert ctx.is_block
    f = parse("a_10*x^2*y + b_10^2*x^2*y - a_10*x", ctx)
    coefficient = f.coefficient_of((2, 1))
    assert coefficient == parse("a_10 + b_10^2", ctx)
    assert coefficient.drop_leading() == parse("a_10 + b_10^2", ctx.trailing_context())
    assert set(f.block_coefficients()) == {(2, 1), (1, 0)}
    with pytest.raises(ContextMismatchError):
        f.coefficient_of((0, 0, 1, 0))


def test_lift_between_contexts():
    wide = VariableContext.lex('x', 'y', 'z')
    assert p("x*y").lift(wide) == parse("x*y", wide)
    with pytest.raises(ContextMismatchError):
        parse("z", wide).lift(CTX)


def test_json_schema():
    f = p("x^2*y^2 - 1/3*y^4")
    data = to_json(f)
    assert data == {'vars': ['x', 'y'], 'terms': [{'c': '1', 'e': [2, 2]}, {'c': '-1/3', 'e': [0, 4]}]}
    assert from_json(json.dumps(data), QQ_FIELD) == f
    with pytest.raises(PolynomialSyntaxError):
        from_json({'vars': ['x']}, QQ_FIELD)


def test_ring_axioms_on_random_polynomials(source):
    for _ in range(PROPERTY_CASES):
        f, g, h = (source.polynomial(CTX, QQ_FIELD, max_terms=3, max_degree=4) for _ in range(3))
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f + g == g + f
        assert p(render(f)) == f


@pytest.mark.parametrize("field", [QQ_FIELD, Field.prime(7)])
def test_leading_terms_multiply(source, field):
    ctx = VariableContext.lex('x', 'y', 'z')
    checked = 0
    while checked < PROPERTY_CASES:
        f = source.polynomial(ctx, field, max_terms=4, max_degree=5)
        g = source.polynomial(ctx, field, max_terms=4, max_degree=5)
        if not f or not g:
            continue
        (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
        assert (f * g).leading_term() == (monomial_mul(mf, mg), cf * cg)
        checked += 1


def test_order_is_compatible_with_multiplication(source):
    ctx = VariableContext.lex('x', 'y', 'z')
    for _ in range(PROPERTY_CASES):
        m1, m2, m = (source.monomial(ctx, 6) for _ in range(3))
        if m1 == m2:
            continue
        low, high = sorted((m1, m2))
        assert monomial_mul(m, low) < monomial_mul(m, high)
        f = Polynomial(ctx, QQ_FIELD, {low: QQ_FIELD(1), high: QQ_FIELD(1)})
        assert f.mul_term(m, 1).leading_monomial == monomial_mul(m, high)
