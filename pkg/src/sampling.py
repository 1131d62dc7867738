"""
Random Sampling for the Gorenstein Algebra Verifier
Seeded scalars, polynomials, algebra elements and automorphisms for property checks
"""

import logging
from typing import Optional, Sequence

import numpy as np

from poly import Field, Monomial, Polynomial, VariableContext
from quotient import AlgebraElement, QuotientAlgebra

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240229


class RandomSource:
    """Exact random objects drawn from a numpy Generator"""

    def __init__(self, seed: int = DEFAULT_SEED, numerator_bound: int = 9,
                 denominators: Sequence[int] = (1, 2, 3)):
        """
        Initialize random source

        Args:
            seed: Seed for numpy.random.default_rng
            numerator_bound: Numerators are drawn from [-bound, bound]
            denominators: Denominators to choose from (rationals only)
        """
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.numerator_bound = numerator_bound
        self.denominators = tuple(denominators)

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return int(self.rng.integers(low, high + 1))

    def scalar(self, field: Field, nonzero: bool = False):
        while True:
            num = self.integer(-self.numerator_bound, self.numerator_bound)
            den = 1
            if field.characteristic == 0:
                den = int(self.rng.choice(self.denominators))
            value = field.ratio(num, den)
            if not nonzero or value != field.zero:
                return value

    def monomial(self, ctx: VariableContext, max_degree: int) -> Monomial:
        exps = [0] * ctx.arity
        for _ in range(self.integer(0, max_degree)):
            exps[self.integer(0, ctx.arity - 1)] += 1
        return tuple(exps)

    def polynomial(self, ctx: VariableContext, field: Field, max_terms: int = 4,
                   max_degree: int = 6) -> Polynomial:
        """
        Random polynomial with up to max_terms terms

        Args:
            ctx: Variable context
            field: Coefficient field
            max_terms: Upper bound on the number of drawn terms
            max_degree: Upper bound on the total degree of each term

        Returns:
            Polynomial (possibly zero)
        """
        terms = {}
        for _ in range(self.integer(0, max_terms)):
            m = self.monomial(ctx, max_degree)
            terms[m] = terms.get(m, field.zero) + self.scalar(field)
        return Polynomial(ctx, field, terms)

    def element(self, algebra: QuotientAlgebra, in_maximal_ideal: bool = False,
                density: float = 0.5) -> AlgebraElement:
        """Random element; roughly density of the coordinates are nonzero"""
        field = algebra.field
        unit = algebra.index(algebra.ctx.one())
        coords = []
        for i in range(algebra.dimension):
            if (in_maximal_ideal and i == unit) or self.rng.random() >= density:
                coords.append(field.zero)
            else:
                coords.append(self.scalar(field))
        return AlgebraElement(algebra, tuple(coords))

    def kernel_element(self, functional, density: float = 0.5) -> AlgebraElement:
        """
        Random element of ker pi for an HPairFunctional

        A random maximal-ideal element is corrected along one coordinate where pi is nonzero.
        """
        algebra = functional.algebra
        field = algebra.field
        u = self.element(algebra, in_maximal_ideal=True, density=density)
        value = functional.evaluate(u)
        if value == field.zero:
            return u
        i, c = min(functional.coeffs.items())
        coords = list(u.coords)
        coords[i] = coords[i] - value / c
        return AlgebraElement(algebra, tuple(coords))

    def socle_shift(self, P):
        from automorphisms import socle_shift_automorphism
        return socle_shift_automorphism(P, self.scalar(P.field), self.scalar(P.field))

    def automorphism(self, P):
        """Random composite of the sign map and socle shifts"""
        from automorphisms import compose_automorphisms, identity_automorphism, sign_automorphism
        candidate = sign_automorphism(P) if self.integer(0, 1) else identity_automorphism(P)
        for _ in range(self.integer(1, 2)):
            candidate = compose_automorphisms(P, self.socle_shift(P), candidate)
        return candidate


def make_source(seed: Optional[int] = None, **kwargs) -> RandomSource:
    return RandomSource(DEFAULT_SEED if seed is None else seed, **kwargs)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    source = make_source()
    ctx = VariableContext.lex('x', 'y')
    for _ in range(3):
        print(source.polynomial(ctx, Field.rationals()))
