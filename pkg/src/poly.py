"""
Polynomial Arithmetic for the Gorenstein Algebra Verifier
Exact scalars, variable contexts, sparse multivariate polynomials and their text/JSON forms
"""

import json
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.domains import FF, QQ

from errors import (
    ContextMismatchError,
    ExponentOverflowError,
    FieldError,
    PolynomialSyntaxError,
    ZeroPolynomialError,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

MAX_EXPONENT = 2**31 - 1
VARIABLE_PATTERN = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


class Field:
    """Exact coefficient field: the rationals or a prime field"""

    def __init__(self, characteristic: int = 0):
        """
        Initialize field

        Args:
            characteristic: 0 for the rationals, otherwise a prime p
        """
        if characteristic == 0:
            self.domain = QQ
        else:
            if characteristic < 2 or not isprime(characteristic):
                raise FieldError(f"Modulus must be prime, got {characteristic}")
            self.domain = FF(characteristic, symmetric=False)
        self.characteristic = characteristic
        self.zero = self.domain.zero
        self.one = self.domain.one
        self._element_type = type(self.domain.one)

    @classmethod
    def rationals(cls) -> 'Field':
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> 'Field':
        return cls(p)

    @classmethod
    def from_selector(cls, selector: str) -> 'Field':
        """
        Build a field from a CLI selector

        Args:
            selector: 'q' or 'fp:P'

        Returns:
            Field instance
        """
        text = selector.strip().lower()
        if text == 'q':
            return cls.rationals()
        if text.startswith('fp:'):
            try:
                p = int(text[3:])
            except ValueError:
                raise FieldError(f"Bad prime in field selector '{selector}'")
            return cls.prime(p)
        raise FieldError(f"Unknown field selector '{selector}' (use q or fp:P)")

    @property
    def name(self) -> str:
        return 'q' if self.characteristic == 0 else f"fp:{self.characteristic}"

    def __call__(self, value):
        """Coerce an int or a domain element into this field"""
        if type(value) is self._element_type:
            return value
        if isinstance(value, bool):
            value = int(value)
        return self.domain.convert(value)

    def ratio(self, numerator: int, denominator: int):
        num = self(numerator)
        den = self(denominator)
        if den == self.zero:
            raise ZeroDivisionError(f"Denominator {denominator} vanishes in {self.name}")
        return num / den

    def is_zero(self, value) -> bool:
        return value == self.zero

    def numerator_denominator(self, value) -> Tuple[int, int]:
        """Integer numerator and positive denominator (residue and 1 for prime fields)"""
        if self.characteristic == 0:
            return int(self.domain.numer(value)), int(self.domain.denom(value))
        return int(value) % self.characteristic, 1

    def render(self, value) -> str:
        num, den = self.numerator_denominator(value)
        return str(num) if den == 1 else f"{num}/{den}"

    def parse_scalar(self, text: str):
        """Parse 'p' or 'p/q' text into a field element"""
        match = re.fullmatch(r'\s*(-?\d+)\s*(?:/\s*(\d+))?\s*', text)
        if not match:
            raise PolynomialSyntaxError(f"Bad scalar '{text}'")
        den = int(match.group(2)) if match.group(2) else 1
        try:
            return self.ratio(int(match.group(1)), den)
        except ZeroDivisionError:
            raise PolynomialSyntaxError(f"Zero modulus division in scalar '{text}'")

    def is_negative(self, value) -> bool:
        return self.characteristic == 0 and value < 0

    def supports_denominators(self, bound: int) -> bool:
        """True when 1..bound are all invertible"""
        return self.characteristic == 0 or self.characteristic > bound

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(('Field', self.characteristic))

    def __repr__(self) -> str:
        return f"Field({self.name})"


@dataclass(frozen=True)
class VariableContext:
    """
    Ordered variable list with its monomial order

    The order is lexicographic on the full list. A block context puts the
    leading block (x, y, ...) first and the trailing block sorted by name, so
    lex on the full list is exactly the two-block lex order.
    """
    names: Tuple[str, ...]
    leading: int = -1

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, 'names', names)
        if len(set(names)) != len(names):
            raise ContextMismatchError(f"Duplicate variable names in {names}")
        for name in names:
            if not VARIABLE_PATTERN.match(name):
                raise PolynomialSyntaxError(f"Invalid variable name '{name}'")
        if self.leading < 0 or self.leading > len(names):
            object.__setattr__(self, 'leading', len(names))

    @classmethod
    def lex(cls, *names: str) -> 'VariableContext':
        return cls(tuple(names))

    @classmethod
    def block(cls, leading_names: Sequence[str], trailing_names: Iterable[str]) -> 'VariableContext':
        trailing = sorted(set(trailing_names))
        return cls(tuple(leading_names) + tuple(trailing), len(leading_names))

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def is_block(self) -> bool:
        return self.leading < len(self.names)

    @property
    def leading_names(self) -> Tuple[str, ...]:
        return self.names[:self.leading]

    @property
    def trailing_names(self) -> Tuple[str, ...]:
        return self.names[self.leading:]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextMismatchError(f"Unknown variable '{name}' (context: {', '.join(self.names)})")

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def one(self) -> Monomial:
        return (0,) * self.arity

    def variable(self, name: str) -> Monomial:
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return tuple(exps)

    def monomial(self, **exponents: int) -> Monomial:
        exps = [0] * self.arity
        for name, e in exponents.items():
            exps[self.index(name)] = check_exponent(e)
        return tuple(exps)

    def trailing_context(self) -> 'VariableContext':
        return VariableContext(self.trailing_names)

    def with_trailing(self, names: Iterable[str]) -> 'VariableContext':
        """Block context with this context's variables leading"""
        return VariableContext.block(self.names, names)


def check_exponent(e: int) -> int:
    if e < 0:
        raise ExponentOverflowError(f"Negative exponent {e}")
    if e > MAX_EXPONENT:
        raise ExponentOverflowError(f"Exponent {e} exceeds {MAX_EXPONENT}")
    return e


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([i + j for i, j in zip(a, b)])


def monomial_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b if b divides a, else None"""
    out = []
    for i, j in zip(a, b):
        if i < j:
            return None
        out.append(i - j)
    return tuple(out)


def monomial_divides(b: Monomial, a: Monomial) -> bool:
    return all(j <= i for i, j in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([max(i, j) for i, j in zip(a, b)])


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(i == 0 or j == 0 for i, j in zip(a, b))


def _descending_key(m: Monomial) -> Monomial:
    return tuple([-e for e in m])


class Polynomial:
    """Immutable sparse polynomial: monomial -> nonzero scalar"""

    __slots__ = ('ctx', 'field', '_terms', '_hash')

    def __init__(self, ctx: VariableContext, field: Field, terms: Optional[Mapping] = None):
        """
        Initialize polynomial, dropping zero coefficients

        Args:
            ctx: Variable context
            field: Coefficient field
            terms: Mapping of exponent tuples to scalars (ints allowed)
        """
        cleaned = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ctx.arity:
                raise ContextMismatchError(f"Monomial {m} does not fit context of arity {ctx.arity}")
            for e in m:
                check_exponent(e)
            c = field(c)
            if c != field.zero:
                cleaned[m] = cleaned.get(m, field.zero) + c
        self.ctx = ctx
        self.field = field
        self._terms = {m: c for m, c in cleaned.items() if c != field.zero}
        self._hash = None

    @classmethod
    def _raw(cls, ctx: VariableContext, field: Field, terms: Dict[Monomial, object]) -> 'Polynomial':
        """Wrap an already-clean term dict without copying"""
        poly = cls.__new__(cls)
        poly.ctx = ctx
        poly.field = field
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, ctx: VariableContext, field: Field) -> 'Polynomial':
        return cls._raw(ctx, field, {})

    @classmethod
    def constant(cls, ctx: VariableContext, field: Field, value=1) -> 'Polynomial':
        value = field(value)
        return cls._raw(ctx, field, {} if value == field.zero else {ctx.one(): value})

    @classmethod
    def variable(cls, ctx: VariableContext, field: Field, name: str) -> 'Polynomial':
        return cls._raw(ctx, field, {ctx.variable(name): field.one})

    @classmethod
    def from_monomial(cls, ctx: VariableContext, field: Field, m: Monomial, coeff=1) -> 'Polynomial':
        return cls(ctx, field, {m: coeff})

    @property
    def terms(self) -> Mapping[Monomial, object]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, object]]:
        """Terms in descending monomial order"""
        return sorted(self._terms.items(), key=lambda item: _descending_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: 'Polynomial'):
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"Context mismatch: {self.ctx.names} vs {other.ctx.names}")
        if self.field != other.field:
            raise ContextMismatchError(f"Field mismatch: {self.field.name} vs {other.field.name}")

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        return Polynomial.constant(self.ctx, self.field, other)

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        zero = self.field.zero
        result = dict(self._terms)
        for m, c in other._terms.items():
            s = result.get(m)
            if s is None:
                result[m] = c
            else:
                s = s + c
                if s == zero:
                    del result[m]
                else:
                    result[m] = s
        return Polynomial._raw(self.ctx, self.field, result)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial._raw(self.ctx, self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'Polynomial':
        return self._coerce(other) - self

    def scale(self, value) -> 'Polynomial':
        value = self.field(value)
        if value == self.field.zero:
            return Polynomial.zero(self.ctx, self.field)
        return Polynomial._raw(self.ctx, self.field, {m: c * value for m, c in self._terms.items()})

    def mul_term(self, m: Monomial, coeff) -> 'Polynomial':
        """Multiply by the single term coeff * m"""
        coeff = self.field(coeff)
        if coeff == self.field.zero:
            return Polynomial.zero(self.ctx, self.field)
        return Polynomial._raw(self.ctx, self.field,
                               {monomial_mul(t, m): c * coeff for t, c in self._terms.items()})

    def __mul__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_compatible(other)
        zero = self.field.zero
        result: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple([i + j for i, j in zip(m1, m2)])
                c = result.get(m)
                result[m] = c1 * c2 if c is None else c + c1 * c2
        return Polynomial._raw(self.ctx, self.field, {m: c for m, c in result.items() if c != zero})

    def __rmul__(self, other) -> 'Polynomial':
        return self.scale(other)

    def __pow__(self, k: int) -> 'Polynomial':
        if k < 0:
            raise ValueError("Negative polynomial power")
        if self._terms:
            top = max(max(m) for m in self._terms)
            check_exponent(top * k)
        result = Polynomial.constant(self.ctx, self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(self.ctx, self.field, other)
            except Exception:
                return False
        return self.ctx == other.ctx and self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, self.field, frozenset(self._terms.items())))
        return self._hash

    def leading_term(self) -> Tuple[Monomial, object]:
        """
        Order-maximal monomial and its coefficient

        Returns:
            (monomial, coefficient)
        """
        if not self._terms:
            raise ZeroPolynomialError("Leading term of the zero polynomial")
        m = max(self._terms)
        return m, self._terms[m]

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self) -> 'Polynomial':
        lc = self.leading_coefficient
        if lc == self.field.one:
            return self
        return self.scale(self.field.one / lc)

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), self.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def variables(self) -> Tuple[str, ...]:
        used = [False] * self.ctx.arity
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(name for name, u in zip(self.ctx.names, used) if u)

    def constant_term(self):
        return self._terms.get(self.ctx.one(), self.field.zero)

    def diff(self, name: str) -> 'Polynomial':
        """Formal partial derivative"""
        i = self.ctx.index(name)
        result = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                d = list(m)
                d[i] = e - 1
                result[tuple(d)] = c * e
        return Polynomial(self.ctx, self.field, result)

    def compose(self, images: Mapping[str, 'Polynomial']) -> 'Polynomial':
        """
        Replace each variable by its image and expand

        Args:
            images: variable name -> image polynomial, all in one common context

        Returns:
            Composed polynomial in the images' context
        """
        needed = self.variables()
        missing = [name for name in needed if name not in images]
        if missing:
            raise ContextMismatchError(f"No image for variables {missing}")
        targets = [images[name] for name in needed] or list(images.values())
        if not targets:
            return Polynomial(self.ctx, self.field, self._terms)
        target = targets[0]
        for other in targets[1:]:
            target._check_compatible(other)
        if target.field != self.field:
            raise ContextMismatchError("Images live over a different field")
        positions = [self.ctx.index(name) for name in needed]
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(slot: int, e: int) -> Polynomial:
            key = (slot, e)
            if key not in powers:
                base = images[needed[slot]]
                powers[key] = base if e == 1 else power(slot, e - 1) * base
            return powers[key]

        result = Polynomial.zero(target.ctx, self.field)
        for m, c in self._terms.items():
            term = Polynomial.constant(target.ctx, self.field, c)
            for slot, i in enumerate(positions):
                if m[i]:
                    term = term * power(slot, m[i])
            result = result + term
        return result

    def substitute(self, values: Mapping[str, object]) -> 'Polynomial':
        """Substitute polynomials or scalars for some variables, keeping the rest"""
        if not values:
            return self
        images = {}
        for name in self.variables():
            if name in values:
                value = values[name]
                if not isinstance(value, Polynomial):
                    value = Polynomial.constant(self.ctx, self.field, value)
                images[name] = value
            else:
                images[name] = Polynomial.variable(self.ctx, self.field, name)
        if not any(name in values for name in images):
            return self
        return self.compose(images)

    def evaluate(self, values: Mapping[str, object]):
        """Scalar value with every used variable assigned"""
        needed = self.variables()
        missing = [name for name in needed if name not in values]
        if missing:
            raise ContextMismatchError(f"No value for variables {missing}")
        slots = [(self.ctx.index(name), self.field(values[name])) for name in needed]
        total = self.field.zero
        for m, c in self._terms.items():
            term = c
            for i, v in slots:
                if m[i]:
                    term = term * v ** m[i]
            total = total + term
        return total

    def coefficient_of(self, m: Union[Monomial, 'Polynomial']) -> 'Polynomial':
        """
        Coefficient polynomial of a leading-block monomial

        Args:
            m: Monomial over the leading block (short tuple, full tuple, or monomial Polynomial)

        Returns:
            Polynomial in the trailing variables (same context, leading exponents zero)
        """
        if isinstance(m, Polynomial):
            if len(m) != 1:
                raise ContextMismatchError("coefficient_of needs a single monomial")
            m = next(iter(m._terms))
        m = tuple(m)
        k = self.ctx.leading
        if len(m) == k:
            block = m
        elif len(m) == self.ctx.arity:
            if any(m[k:]):
                raise ContextMismatchError(f"Monomial {m} involves variables outside the leading block")
            block = m[:k]
        else:
            raise ContextMismatchError(f"Monomial {m} does not fit context of arity {self.ctx.arity}")
        pad = (0,) * k
        result = {pad + t[k:]: c for t, c in self._terms.items() if t[:k] == block}
        return Polynomial._raw(self.ctx, self.field, result)

    def block_coefficients(self) -> Dict[Monomial, 'Polynomial']:
        """Leading-block monomial -> coefficient polynomial in the trailing variables"""
        k = self.ctx.leading
        pad = (0,) * k
        grouped: Dict[Monomial, Dict[Monomial, object]] = {}
        for t, c in self._terms.items():
            grouped.setdefault(t[:k], {})[pad + t[k:]] = c
        return {block: Polynomial._raw(self.ctx, self.field, terms) for block, terms in grouped.items()}

    def lift(self, ctx: VariableContext) -> 'Polynomial':
        """Re-express in a context that contains all used variables"""
        if ctx == self.ctx:
            return self
        mapping = []
        for i, name in enumerate(self.ctx.names):
            if name in ctx:
                mapping.append((i, ctx.index(name)))
        kept = {i for i, _ in mapping}
        result = {}
        for m, c in self._terms.items():
            if any(e for i, e in enumerate(m) if i not in kept):
                missing = [self.ctx.names[i] for i, e in enumerate(m) if e and i not in kept]
                raise ContextMismatchError(f"Variables {missing} missing from target context")
            exps = [0] * ctx.arity
            for i, j in mapping:
                exps[j] = m[i]
            result[tuple(exps)] = c
        return Polynomial._raw(ctx, self.field, result)

    def drop_leading(self) -> 'Polynomial':
        """Project onto the trailing-only context (leading exponents must be zero)"""
        return self.lift(self.ctx.trailing_context())

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"

    def to_json(self) -> dict:
        return to_json(self)


def render_monomial(ctx: VariableContext, m: Monomial) -> str:
    factors = []
    for name, e in zip(ctx.names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return '*'.join(factors)


def render(f: Polynomial) -> str:
    """
    Canonical text: terms descending, reduced fractions, '+'/'-' separated

    Args:
        f: Polynomial

    Returns:
        Text parseable by parse()
    """
    if f.is_zero():
        return '0'
    field = f.field
    pieces = []
    for idx, (m, c) in enumerate(f.sorted_terms()):
        negative = field.is_negative(c)
        magnitude = -c if negative else c
        mono = render_monomial(f.ctx, m)
        coeff = field.render(magnitude)
        if not mono:
            body = coeff
        elif coeff == '1':
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces)


_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))')


class _Parser:
    """Recursive-descent parser for the polynomial grammar"""

    def __init__(self, text: str, ctx: VariableContext, field: Field):
        self.text = text
        self.ctx = ctx
        self.field = field
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                break
            if match.group(1) is not None:
                self.tokens.append(('int', int(match.group(1)), match.start(1)))
            elif match.group(2) is not None:
                self.tokens.append(('name', match.group(2), match.start(2)))
            else:
                self.tokens.append(('op', match.group(3), match.start(3)))
            pos = match.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ('end', None, len(self.text))

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialSyntaxError("Empty polynomial", 0)
        terms: Dict[Monomial, object] = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == 'op' and value in '+-':
            self.take()
            sign = -1 if value == '-' else 1
        while True:
            m, c = self.term()
            c = c if sign > 0 else -c
            terms[m] = terms.get(m, self.field.zero) + c
            kind, value, where = self.peek()
            if kind == 'end':
                break
            if kind == 'op' and value in '+-':
                self.take()
                sign = -1 if value == '-' else 1
                continue
            raise PolynomialSyntaxError(f"Unexpected token '{value}'", where)
        return Polynomial(self.ctx, self.field, terms)

    def term(self) -> Tuple[Monomial, object]:
        coeff = self.field.one
        exps = [0] * self.ctx.arity
        kind, value, where = self.peek()
        if kind == 'int':
            coeff = self.coefficient()
            if self.peek()[:2] != ('op', '*'):
                return tuple(exps), coeff
            self.take()
        elif kind != 'name':
            raise PolynomialSyntaxError("Expected coefficient or variable", where)
        self.factor(exps)
        while self.peek()[:2] == ('op', '*'):
            self.take()
            self.factor(exps)
        return tuple(exps), coeff

    def coefficient(self):
        _, num, where = self.take()
        den = 1
        if self.peek()[:2] == ('op', '/'):
            self.take()
            kind, den, den_at = self.take()
            if kind != 'int':
                raise PolynomialSyntaxError("Expected denominator", den_at)
        try:
            return self.field.ratio(num, den)
        except ZeroDivisionError:
            raise PolynomialSyntaxError("Zero modulus division", where)

    def factor(self, exps: List[int]):
        kind, name, where = self.take()
        if kind != 'name':
            raise PolynomialSyntaxError("Expected variable", where)
        if name not in self.ctx:
            raise PolynomialSyntaxError(f"Unknown variable '{name}'", where)
        e = 1
        if self.peek()[:2] == ('op', '^'):
            self.take()
            kind, e, at = self.take()
            if kind != 'int':
                raise PolynomialSyntaxError("Expected exponent", at)
        i = self.ctx.index(name)
        exps[i] += e
        try:
            check_exponent(exps[i])
        except ExponentOverflowError as e:
            raise PolynomialSyntaxError(str(e), where)


def parse(text: str, ctx: VariableContext, field: Optional[Field] = None) -> Polynomial:
    """
    Parse polynomial text

    Args:
        text: Expression in the poly grammar
        ctx: Variable context
        field: Coefficient field (rationals by default)

    Returns:
        Canonical Polynomial
    """
    return _Parser(text, ctx, field or Field.rationals()).parse()


def to_json(f: Polynomial) -> dict:
    return {
        'vars': list(f.ctx.names),
        'terms': [{'c': f.field.render(c), 'e': list(m)} for m, c in f.sorted_terms()],
    }


def from_json(data: Union[str, dict], field: Field, leading: int = -1) -> Polynomial:
    """Rebuild a polynomial from its JSON form"""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ctx = VariableContext(tuple(data['vars']), leading)
        terms = {}
        for entry in data['terms']:
            m = tuple(int(e) for e in entry['e'])
            terms[m] = terms.get(m, field.zero) + field.parse_scalar(str(entry['c']))
    except (KeyError, TypeError, ValueError) as e:
        raise PolynomialSyntaxError(f"Malformed polynomial JSON: {e}")
    return Polynomial(ctx, field, terms)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    ctx = VariableContext.lex('x', 'y')
    f2 = parse("x^2*y^2 - y^4", ctx)
    print(f"f2 = {f2}")
    print(f"f2 * y = {f2 * Polynomial.variable(ctx, f2.field, 'y')}")
    print(f"JSON: {json.dumps(to_json(f2))}")
