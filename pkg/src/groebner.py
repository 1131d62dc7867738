"""
Groebner Bases for the Gorenstein Algebra Verifier
S-polynomials, multivariate division, Buchberger's algorithm and ideal membership
"""

import heapq
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from errors import (
    BlockInvariantError,
    ContextMismatchError,
    NotCertifiedError,
    ZeroPolynomialError,
)
from poly import (
    Monomial,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_coprime,
)

logger = logging.getLogger(__name__)

MONOMIAL_NF_CACHE_LIMIT = 200_000


def _heap_key(m: Monomial) -> Monomial:
    return tuple([-e for e in m])


def _check_family(polys: Sequence[Polynomial]):
    if not polys:
        raise ZeroPolynomialError("Empty generator list")
    ctx, field = polys[0].ctx, polys[0].field
    for p in polys[1:]:
        if p.ctx != ctx or p.field != field:
            raise ContextMismatchError("Generators live in different contexts or fields")


def has_unit_block_leading(g: Polynomial) -> bool:
    """
    Check that g can be divided by over the coefficient block

    The leading term must be a pure leading-block monomial with coefficient
    +-1 and no other term may share its leading-block part.
    """
    ctx = g.ctx
    lm, lc = g.leading_term()
    if not ctx.is_block:
        return True
    if any(lm[ctx.leading:]):
        return False
    if lc != g.field.one and lc != -g.field.one:
        return False
    block = lm[:ctx.leading]
    return sum(1 for m in g.terms if m[:ctx.leading] == block) == 1


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    S-polynomial (lcm/LT(f))*f - (lcm/LT(g))*g

    Args:
        f: Nonzero polynomial
        g: Nonzero polynomial in the same context

    Returns:
        The cancellation combination
    """
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    _check_family([f, g])
    lm_f, lc_f = f.leading_term()
    lm_g, lc_g = g.leading_term()
    lcm = monomial_lcm(lm_f, lm_g)
    one = f.field.one
    return (f.mul_term(monomial_div(lcm, lm_f), one / lc_f)
            - g.mul_term(monomial_div(lcm, lm_g), one / lc_g))


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> Tuple[List[Polynomial], Polynomial]:
    """
    Multivariate division

    The order-maximal reducible monomial is reduced first, always by the
    first divisor (in the given order) whose leading monomial divides it.

    Args:
        f: Dividend
        divisors: Nonzero divisors in f's context

    Returns:
        (quotients, remainder) with f = sum(q_i * g_i) + remainder
    """
    for g in divisors:
        if not g:
            raise ZeroPolynomialError("Division by the zero polynomial")
        if g.ctx != f.ctx or g.field != f.field:
            raise ContextMismatchError("Dividend and divisors live in different contexts")
    field = f.field
    zero = field.zero
    leads = [g.leading_term() for g in divisors]
    tails = [[(m, c) for m, c in g.terms.items() if m != lm] for g, (lm, _) in zip(divisors, leads)]
    quotients: List[Dict[Monomial, object]] = [{} for _ in divisors]
    remainder: Dict[Monomial, object] = {}
    work = dict(f.terms)
    heap = [_heap_key(m) for m in work]
    heapq.heapify(heap)

    while heap:
        m = _heap_key(heapq.heappop(heap))
        c = work.pop(m, None)
        if c is None:
            continue
        for i, (lm, lc) in enumerate(leads):
            q = monomial_div(m, lm)
            if q is None:
                continue
            factor = c / lc
            quotients[i][q] = quotients[i].get(q, zero) + factor
            for tm, tc in tails[i]:
                target = monomial_mul(q, tm)
                previous = work.get(target)
                value = -factor * tc if previous is None else previous - factor * tc
                if value == zero:
                    work.pop(target, None)
                else:
                    if previous is None:
                        heapq.heappush(heap, _heap_key(target))
                    work[target] = value
            break
        else:
            remainder[m] = c

    ctx = f.ctx
    return ([Polynomial(ctx, field, q) for q in quotients],
            Polynomial._raw(ctx, field, remainder))


def remainder(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    return divide(f, divisors)[1]


class GroebnerBasis:
    """Interreduced, monic, sorted generator list with a certification flag"""

    def __init__(self, polys: Sequence[Polynomial], certified: bool = False):
        """
        Initialize and validate a Groebner basis

        Args:
            polys: Generators (any order; stored sorted ascending by leading monomial)
            certified: Whether the Buchberger criterion has already been checked
        """
        polys = [p for p in polys]
        _check_family(polys)
        if any(not p for p in polys):
            raise ZeroPolynomialError("Groebner basis contains the zero polynomial")
        polys.sort(key=lambda p: p.leading_monomial)
        for p in polys:
            if p.ctx.is_block:
                if not has_unit_block_leading(p):
                    raise BlockInvariantError(f"Leading term of {p} is not a unit leading-block term")
            elif p.leading_coefficient != p.field.one:
                raise ValueError(f"Basis element {p} is not monic")
        leads = [p.leading_monomial for p in polys]
        for i, p in enumerate(polys):
            for j, lm in enumerate(leads):
                if i != j and any(monomial_divides(lm, m) for m in p.terms):
                    raise ValueError(f"Basis not interreduced: {p} has a term divisible by a leading monomial")
        self.polys: Tuple[Polynomial, ...] = tuple(polys)
        self.ctx = polys[0].ctx
        self.field = polys[0].field
        self.certified = certified
        self.leading_monomials: Tuple[Monomial, ...] = tuple(leads)
        self._pure_leading = all(not any(m[self.ctx.leading:]) for p in polys for m in p.terms)
        self._monomial_nf: Dict[Monomial, Dict[Monomial, object]] = {}

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroebnerBasis) and self.polys == other.polys

    def __hash__(self) -> int:
        return hash(self.polys)

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(str(p) for p in self.polys)}], certified={self.certified})"

    def certify(self) -> 'GroebnerBasis':
        """Run the Buchberger criterion; returns a certified copy"""
        if self.certified:
            return self
        if not is_groebner(self.polys):
            raise NotCertifiedError("Buchberger criterion fails: some S-polynomial has nonzero remainder")
        return GroebnerBasis(self.polys, certified=True)

    def lift(self, ctx) -> 'GroebnerBasis':
        """Same basis embedded into a larger context (the criterion survives the embedding)"""
        return GroebnerBasis([p.lift(ctx) for p in self.polys], certified=self.certified)

    def is_standard(self, m: Monomial) -> bool:
        return not any(monomial_divides(lm, m) for lm in self.leading_monomials)

    def _reduction_step(self, m: Monomial) -> Optional[List[Tuple[object, Monomial]]]:
        """One division step on m: (factor, monomial) pairs of the reduced tail, or None if m is standard"""
        for g, lm in zip(self.polys, self.leading_monomials):
            q = monomial_div(m, lm)
            if q is None:
                continue
            lc = g.leading_coefficient
            return [(-tc / lc, monomial_mul(q, tm)) for tm, tc in g.terms.items() if tm != lm]
        return None

    def monomial_normal_form(self, m: Monomial) -> Dict[Monomial, object]:
        """
        Cached normal form of a leading-block monomial

        Reduction runs on an explicit stack; each pending monomial is resolved
        once every monomial of its reduced tail has a known normal form.

        Args:
            m: Monomial with zero trailing part

        Returns:
            Term dict of NF(m)
        """
        cache = self._monomial_nf
        cached = cache.get(m)
        if cached is not None:
            return cached
        zero = self.field.zero
        steps: Dict[Monomial, Optional[List[Tuple[object, Monomial]]]] = {}
        stack = [m]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            if u not in steps:
                steps[u] = self._reduction_step(u)
            step = steps[u]
            if step is None:
                cache[u] = {u: self.field.one}
                stack.pop()
                continue
            missing = [v for _, v in step if v not in cache]
            if missing:
                stack.extend(missing)
                continue
            result: Dict[Monomial, object] = {}
            for factor, v in step:
                for rm, rc in cache[v].items():
                    value = result.get(rm, zero) + factor * rc
                    if value == zero:
                        result.pop(rm, None)
                    else:
                        result[rm] = value
            cache[u] = result
            stack.pop()
        nf = cache[m]
        if len(cache) > MONOMIAL_NF_CACHE_LIMIT:
            logger.debug(f"Monomial normal-form cache reached {len(cache)} entries, clearing")
            cache.clear()
        return nf


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """
    Remainder of f on division by G

    Args:
        f: Polynomial in G's context
        G: Groebner basis (pure leading-block when coefficient variables are present)

    Returns:
        Normal form of f
    """
    if f.ctx != G.ctx or f.field != G.field:
        raise ContextMismatchError("Polynomial and basis live in different contexts")
    if not G._pure_leading:
        if G.ctx.is_block and not all(has_unit_block_leading(g) for g in G.polys):
            raise BlockInvariantError("Division would need a coefficient-block inverse")
        return remainder(f, G.polys)

    k = G.ctx.leading
    pad = (0,) * (G.ctx.arity - k)
    zero = f.field.zero
    result: Dict[Monomial, object] = {}
    for m, c in f.terms.items():
        block = m[:k] + pad
        nf = G.monomial_normal_form(block)
        if not nf:
            continue
        coeff_part = m[k:]
        for rm, rc in nf.items():
            target = rm[:k] + coeff_part if k < G.ctx.arity else rm
            value = result.get(target, zero) + c * rc
            if value == zero:
                result.pop(target, None)
            else:
                result[target] = value
    return Polynomial._raw(f.ctx, f.field, result)


def division_certificate(f: Polynomial, G: GroebnerBasis) -> Tuple[List[Polynomial], Polynomial, bool]:
    """
    Divide with tracked quotients and re-verify f - r = sum(q_i * g_i)

    Returns:
        (quotients, remainder, identity_holds)
    """
    quotients, rem = divide(f, G.polys)
    combination = Polynomial.zero(f.ctx, f.field)
    for q, g in zip(quotients, G.polys):
        combination = combination + q * g
    holds = (f - rem) == combination
    if not holds:
        logger.error(f"Division certificate failed for {f}")
    return quotients, rem, holds


def is_groebner(gens: Sequence[Polynomial]) -> bool:
    """
    Buchberger criterion: every S-polynomial reduces to zero modulo gens

    Args:
        gens: Nonzero polynomials in one context

    Returns:
        True iff gens is a Groebner basis of the ideal it generates
    """
    gens = list(gens)
    _check_family(gens)
    if any(not g for g in gens):
        raise ZeroPolynomialError("Zero polynomial in generator list")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if remainder(s_polynomial(gens[i], gens[j]), gens):
                logger.info(f"S-pair ({i}, {j}) has a nonzero remainder")
                return False
    return True


def _interreduce(basis: List[Polynomial]) -> List[Polynomial]:
    minimal = []
    leads = [g.leading_monomial for g in basis]
    for i, g in enumerate(basis):
        dominated = False
        for j, lm in enumerate(leads):
            if j == i or not monomial_divides(lm, leads[i]):
                continue
            # equal leading monomials: keep the first occurrence
            if lm != leads[i] or j < i:
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(remainder(g, others).monic() if others else g.monic())
    return reduced


def buchberger(gens: Sequence[Polynomial], first_criterion: bool = True) -> GroebnerBasis:
    """
    Reduced Groebner basis by Buchberger's algorithm (normal selection strategy)

    Args:
        gens: Generators in one context
        first_criterion: Skip pairs with coprime leading monomials

    Returns:
        Certified reduced GroebnerBasis
    """
    polys = [g for g in gens if g]
    _check_family(polys)
    basis = [g.monic() for g in polys]
    leads = [g.leading_monomial for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = 0

    while pairs:
        pair = min(pairs, key=lambda p: (monomial_lcm(leads[p[0]], leads[p[1]]), p))
        pairs.remove(pair)
        i, j = pair
        if first_criterion and monomials_coprime(leads[i], leads[j]):
            continue
        processed += 1
        r = remainder(s_polynomial(basis[i], basis[j]), basis)
        if r:
            basis.append(r.monic())
            leads.append(basis[-1].leading_monomial)
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    logger.info(f"Buchberger: {processed} S-pairs reduced, {len(basis)} generators before interreduction")
    reduced = _interreduce(basis)
    return GroebnerBasis(reduced).certify()


def ideal_member(f: Polynomial, G: GroebnerBasis) -> bool:
    if not G.certified:
        raise NotCertifiedError("Ideal membership needs a certified basis")
    return normal_form(f, G).is_zero()


def compose_reduced(f: Polynomial, images: Mapping[str, Polynomial], G: GroebnerBasis) -> Polynomial:
    """
    Normal form of f(images), reducing after every multiplication

    Args:
        f: Polynomial whose variables all have images
        images: Variable name -> image in G's context
        G: Basis to reduce by

    Returns:
        NF of the composition
    """
    needed = f.variables()
    missing = [name for name in needed if name not in images]
    if missing:
        raise ContextMismatchError(f"No image for variables {missing}")
    powers: Dict[str, List[Polynomial]] = {name: [Polynomial.constant(G.ctx, G.field, 1)] for name in needed}

    def power(name: str, e: int) -> Polynomial:
        chain = powers[name]
        while len(chain) <= e:
            chain.append(normal_form(chain[-1] * images[name], G))
        return chain[e]

    total = Polynomial.zero(G.ctx, G.field)
    for m, c in f.terms.items():
        term = Polynomial.constant(G.ctx, G.field, c)
        for name, e in zip(f.ctx.names, m):
            if e:
                term = normal_form(term * power(name, e), G)
        total = total + term
    return total


if __name__ == "__main__":
    from poly import VariableContext, parse
    logging.basicConfig(level=logging.INFO)
    ctx = VariableContext.lex('x', 'y')
    gens = [parse(text, ctx) for text in ("y^7", "x^2*y^2 - y^4", "x^5 - x*y^3")]
    G = buchberger(gens)
    for g in G:
        print(g)
