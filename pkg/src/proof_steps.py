"""
Proof-Step Verifier for the Gorenstein Algebra Verifier
Mechanizes the coefficient-extraction arguments for derivations and automorphisms of A_n at fixed n
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from errors import BudgetExceededError, FieldError
from groebner import GroebnerBasis, buchberger, compose_reduced, normal_form
from poly import Monomial, Polynomial, VariableContext, parse, render_monomial
from quotient import coordinate_name

logger = logging.getLogger(__name__)

DERIVATIONS = 'derivations'
AUTOMORPHISMS = 'automorphisms'
THEOREMS = (DERIVATIONS, AUTOMORPHISMS)


@dataclass(frozen=True)
class ProofStep:
    """One coefficient extraction: the coefficient of monomial in the image of generator"""
    label: str
    generator: str
    monomial: Monomial
    expected: str
    substitutions: Tuple[Tuple[str, str], ...] = ()
    relations: Tuple[str, ...] = ()


def unknown_name(prefix: str, m: Monomial) -> str:
    """a_10 for the coefficient of x in the image of x, b_02 for y^2 in the image of y"""
    return prefix + coordinate_name(m)[1:]


def derivation_steps(n: int) -> List[ProofStep]:
    """Steps forcing every derivation to vanish on the socle-adjacent line"""
    return [
        ProofStep('1', 'f4', (0, n + 3), "a_00", (('a_00', '0'),)),
        ProofStep('2', 'f2', (n + 1, 1), "2*b_10", (('b_10', '0'),)),
        ProofStep('3', 'f3', (0, n + 2), "-a_01", (('a_01', '0'),)),
        ProofStep('4', 'f2', (0, n + 2), f"{n}*a_10 - {n}*b_01", (('b_01', 'a_10'),)),
        ProofStep('5', 'f3', (1, n + 1), f"{2*n}*a_10 - {n + 1}*b_01", (('a_10', '0'),)),
        ProofStep('6', 'f2', (0, n + 3), f"{n}*a_11 - {n}*b_02", (('b_02', 'a_11'),)),
        # clears the b_20 contribution to the next coefficient when n = 2
        ProofStep('6a', 'f2', (n + 2, 1), "2*b_20", (('b_20', '0'),)),
        ProofStep('7', 'f3', (1, n + 2), f"{2*n}*a_11 - {n + 1}*b_02", (('a_11', '0'),)),
    ]


def automorphism_steps(n: int) -> List[ProofStep]:
    """Steps forcing every automorphism to scale the socle-adjacent line"""
    return [
        ProofStep('1', 'f3', (n + 2, 0), f"-a_10*b_10^{n + 1}", relations=("a_10*b_10",)),
        ProofStep('2', 'f2', (n + 2, 0), f"a_10^{n}*b_10^2 - b_10^{n + 2}", (('b_10', '0'),)),
        ProofStep('3', 'f3', (0, n + 2), f"-a_01*b_01^{n + 1}", (('a_01', '0'),)),
        ProofStep('4', 'f2', (0, n + 2), f"a_10^{n}*b_01^2 - b_01^{n + 2}",
                  relations=(f"a_10^{n} - b_01^{n}",)),
        ProofStep('5', 'f3', (1, n + 1), f"a_10^{2*n + 1} - a_10*b_01^{n + 1}",
                  (('b_01', f"a_10^{n}"),), (f"a_10^{n * (n - 1)} - 1",)),
        ProofStep('6', 'f2', (n + 2, 1), f"2*a_10^{n}*b_01*b_20", (('b_20', '0'),)),
        ProofStep('7', 'f2', (0, n + 3),
                  f"2*a_10^{n}*b_01*b_02 + {n}*a_10^{n - 1}*a_11*b_01^2 - {n + 2}*b_01^{n + 1}*b_02",
                  relations=("a_10*b_02 - a_11*b_01",)),
        ProofStep('8', 'f3', (1, n + 2),
                  f"{2*n + 1}*a_10^{2*n}*a_11 - a_11*b_01^{n + 1} - {n + 1}*a_10*b_01^{n}*b_02",
                  (('a_11', '0'), ('b_02', '0'))),
    ]


class StepVerifier:
    """Symbolic coefficient bookkeeping over the block context (x, y | a_ij, b_ij)"""

    def __init__(self, P, theorem: str, budget_seconds: float = 300.0):
        """
        Initialize verifier

        Args:
            P: AnPresentation over the rationals
            theorem: 'derivations' or 'automorphisms'
            budget_seconds: Wall-clock budget for the whole run
        """
        if theorem not in THEOREMS:
            raise ValueError(f"Unknown theorem '{theorem}' (use {' or '.join(THEOREMS)})")
        if P.field.characteristic != 0:
            raise FieldError("Proof steps are verified over the rationals")
        self.P = P
        self.theorem = theorem
        self.budget_seconds = budget_seconds
        self.started = time.monotonic()

        basis = list(P.algebra.basis)
        if theorem == AUTOMORPHISMS:
            basis = [m for m in basis if any(m)]
        names = [unknown_name(prefix, m) for prefix in ('a', 'b') for m in basis]
        self.block = VariableContext.block(('x', 'y'), names)
        self.trailing = self.block.trailing_context()
        self.G = P.G.lift(self.block)
        field = P.field
        self._generic = {
            var: Polynomial(self.block, field, {m + self.block.variable(unknown_name(prefix, m))[2:]: 1
                                                for m in basis})
            for var, prefix in (('x', 'a'), ('y', 'b'))
        }
        self.substitutions: Dict[str, Polynomial] = {}
        self.relations: List[Polynomial] = []
        self._ideal: Optional[GroebnerBasis] = None

    def _check_budget(self, where: str):
        elapsed = time.monotonic() - self.started
        if elapsed > self.budget_seconds:
            raise BudgetExceededError(f"Budget of {self.budget_seconds}s exhausted at {where} "
                                      f"({elapsed:.1f}s elapsed)")

    def scalar(self, text: str) -> Polynomial:
        return parse(text, self.trailing, self.P.field)

    def substitute(self, p: Polynomial) -> Polynomial:
        if not self.substitutions:
            return p
        if p.ctx == self.trailing:
            return p.substitute(self.substitutions)
        lifted = {name: value.lift(self.block) for name, value in self.substitutions.items()}
        return p.substitute(lifted)

    def reduce_scalar(self, p: Polynomial) -> Polynomial:
        """Normal form modulo the accumulated scalar relations"""
        p = self.substitute(p)
        return normal_form(p, self._ideal) if self._ideal is not None else p

    def images(self) -> Dict[str, Polynomial]:
        return {var: self.substitute(image) for var, image in self._generic.items()}

    def image_of(self, f: Polynomial, images: Dict[str, Polynomial]) -> Polynomial:
        """Normal form of D_f or of f(phi_x, phi_y) in the block context"""
        if self.theorem == AUTOMORPHISMS:
            return compose_reduced(f, images, self.G)
        total = Polynomial.zero(self.block, self.P.field)
        for var, image in images.items():
            partial = f.diff(var)
            if partial:
                total = total + partial.lift(self.block) * image
        return normal_form(total, self.G)

    def _generator(self, label: str) -> Polynomial:
        return getattr(self.P, label)

    def apply_conclusion(self, step: ProofStep):
        new = {name: self.substitute(self.scalar(text)) for name, text in step.substitutions}
        self.substitutions = {name: value.substitute(new) for name, value in self.substitutions.items()}
        self.substitutions.update(new)
        relations = [self.substitute(r) for r in self.relations]
        relations += [self.substitute(self.scalar(text)) for text in step.relations]
        self.relations = [r for r in relations if r]
        self._ideal = buchberger(self.relations) if self.relations else None

    def verify_step(self, step: ProofStep) -> Dict:
        """
        Extract one coefficient and compare it with its closed form

        Returns:
            Step dict with 'status', 'detail', 'computed' and 'expected'
        """
        self._check_budget(f"step {step.label}")
        value = self.image_of(self._generator(step.generator), self.images())
        computed = value.coefficient_of(step.monomial).drop_leading()
        expected = self.substitute(self.scalar(step.expected))
        matches = not self.reduce_scalar(computed - expected)
        monomial = render_monomial(self.P.ctx, step.monomial)
        result = {
            'step': step.label,
            'generator': step.generator,
            'monomial': monomial,
            'computed': str(computed),
            'expected': str(expected),
        }
        if not matches:
            result['status'] = 'fail'
            result['detail'] = (f"coefficient of {monomial} in the image of {step.generator} is {computed}, "
                                f"expected {expected}")
            logger.error(f"{self.theorem} step {step.label}: {result['detail']}")
            return result

        self.apply_conclusion(step)
        consistent = not self.reduce_scalar(self.scalar(step.expected))
        conclusion = ', '.join([f"{name} = {text}" for name, text in step.substitutions]
                               + [f"{text} = 0" for text in step.relations])
        result['status'] = 'pass' if consistent else 'fail'
        result['detail'] = f"coefficient of {monomial} in {step.generator}: {expected}; {conclusion}"
        if not consistent:
            result['detail'] += " (conclusion does not kill the coefficient)"
            logger.error(f"{self.theorem} step {step.label}: inconsistent conclusion {conclusion}")
        logger.info(f"{self.theorem} step {step.label}: {result['status']}")
        return result

    def _vanishes(self, value: Polynomial) -> bool:
        return all(not self.reduce_scalar(c.drop_leading()) for c in value.block_coefficients().values())

    def verify_terminal(self, label: str) -> Dict:
        self._check_budget(f"step {label}")
        n = self.P.n
        images = self.images()
        if self.theorem == DERIVATIONS:
            from_x = normal_form(self.P.poly(f"{3*n}*x^{3*n - 1}").lift(self.block) * images['x'], self.G)
            from_y = normal_form(self.P.poly(f"{2*n + 1}*y^{2*n}").lift(self.block) * images['y'], self.G)
            ok = self._vanishes(from_x) and self._vanishes(from_y)
            detail = f"d(x^{3*n}) = d(y^{2*n + 1}) = 0" if ok else f"d(x^{3*n}) = {from_x}"
        else:
            gamma = self.scalar(f"a_10^{3*n}")
            lhs = compose_reduced(self.P.poly(f"x^{3*n}"), images, self.G)
            rhs = normal_form(self.P.poly(f"x^{3*n}").lift(self.block), self.G) * gamma.lift(self.block)
            scaled = self._vanishes(lhs - rhs)
            e = (n - 1) // 3 if n % 3 == 1 else n - 1
            root = not self.reduce_scalar(gamma ** e - 1)
            ok = scaled and root
            detail = (f"phi(x^{3*n}) = a_10^{3*n}*x^{3*n}: {scaled}; "
                      f"(a_10^{3*n})^{e} = 1: {root}")
        result = {'step': label, 'generator': '', 'monomial': '', 'computed': '', 'expected': '',
                  'status': 'pass' if ok else 'fail', 'detail': detail}
        if not ok:
            logger.error(f"{self.theorem} step {label}: {detail}")
        return result

    def run(self) -> Dict:
        steps = derivation_steps(self.P.n) if self.theorem == DERIVATIONS else automorphism_steps(self.P.n)
        results = []
        for step in steps:
            results.append(self.verify_step(step))
            if results[-1]['status'] != 'pass':
                break
        else:
            results.append(self.verify_terminal(str(int(steps[-1].label) + 1)))
        status = 'pass' if all(r['status'] == 'pass' for r in results) else 'fail'
        return {
            'theorem': self.theorem,
            'n': self.P.n,
            'status': status,
            'detail': f"{sum(r['status'] == 'pass' for r in results)}/{len(steps) + 1} steps pass",
            'steps': results,
            'substitutions': {name: str(value) for name, value in sorted(self.substitutions.items())},
            'relations': [str(r) for r in self.relations],
            'elapsed_seconds': round(time.monotonic() - self.started, 2),
        }


def verify_proof_steps(P, theorem: str, budget_seconds: float = 300.0, max_n: int = 3) -> Dict:
    """
    Replay the coefficient arguments for one theorem at fixed n

    Args:
        P: AnPresentation over the rationals
        theorem: 'derivations' or 'automorphisms'
        budget_seconds: Wall-clock budget
        max_n: Largest n attempted

    Returns:
        Report dict with 'status', per-step results and the final substitutions
    """
    if P.n > max_n:
        raise BudgetExceededError(f"Proof steps are limited to n <= {max_n}, got n={P.n}")
    return StepVerifier(P, theorem, budget_seconds).run()


if __name__ == "__main__":
    from an_family import build
    logging.basicConfig(level=logging.INFO)
    P = build(2)
    for theorem in THEOREMS:
        report = verify_proof_steps(P, theorem)
        for step in report['steps']:
            print(f"STEP {step['step']}: {step['status'].upper()} - {step['detail']}")
        print(f"{theorem}: {report['status']} ({report['detail']})")
