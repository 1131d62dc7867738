"""
Gorenstein Algebra Verifier - Main Pipeline
Exact Groebner, derivation, automorphism and hypersurface computations for the algebras A_n
"""

import sys
from pathlib import Path

# Add src directory to path
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from an_family import AnPresentation, cofactor_identity, f4_in_ideal, socle_report, verify_relations
from automorphisms import (
    compose_automorphisms,
    expected_sign_gamma,
    sign_automorphism,
    swap_candidate,
    verify_automorphism,
)
from config_loader import RunConfig, build_run_config, load_config
from derivations import compare_with_oracle, derivation_full_oracle, derivation_space, derivations_annihilate
from errors import (
    BudgetExceededError,
    CharacteristicError,
    ConfigError,
    FieldError,
    FunctionalError,
    IdealFileError,
    PolynomialSyntaxError,
)
from groebner import buchberger, is_groebner
from hpair import hypersurface_equation, parse_functional, point_membership, separates_socle_adjacent_line
from ideal_loader import load_ideal
from poly import render_monomial, to_json
from proof_steps import THEOREMS, verify_proof_steps
from report_generator import ReportGenerator, to_json_text
from sampling import RandomSource
from typing import Dict, List, Optional, Sequence
import logging
import argparse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

INPUT_ERRORS = (ConfigError, FieldError, PolynomialSyntaxError, IdealFileError, FunctionalError,
                CharacteristicError)

DEFAULT_CONFIG = Path(__file__).parent / 'config.yaml'

HYPERSURFACE_SAMPLES = 10


def _check(name: str, status: str, detail: str) -> Dict:
    return {'check': name, 'status': status, 'detail': detail}


def _passed(ok: bool) -> str:
    return 'pass' if ok else 'fail'


def _proof_step_checks(P: AnPresentation, cfg: RunConfig, result: Dict) -> List[Dict]:
    checks = []
    for theorem in THEOREMS:
        name = f"proof_steps_{theorem}"
        if P.field.characteristic != 0:
            checks.append(_check(name, 'skipped', "proof steps run over the rationals only"))
            continue
        if P.n > cfg.proof_steps_max_n:
            checks.append(_check(name, 'skipped', f"n > {cfg.proof_steps_max_n}"))
            continue
        try:
            report = verify_proof_steps(P, theorem, cfg.budget_seconds, cfg.proof_steps_max_n)
        except BudgetExceededError as e:
            logger.error(f"n={P.n} {theorem}: {e}")
            checks.append(_check(name, 'fail', str(e)))
            continue
        logger.info(f"n={P.n} {theorem} steps finished in {report.pop('elapsed_seconds')}s")
        result['proof_steps'].append(report)
        checks.append(_check(name, report['status'], report['detail']))
    return checks


def verify_n(n: int, cfg: RunConfig) -> Dict:
    """
    Run every check on A_n

    Args:
        n: Family parameter
        cfg: Validated run configuration

    Returns:
        Dict with 'n', 'status', 'dimension', 'hilbert_function' and 'checks'
    """
    logger.info(f"Verifying A_{n} over {cfg.field.name}...")
    P = AnPresentation(n, cfg.field)
    A = P.algebra
    result = {'n': n, 'field': cfg.field.name, 'dimension': A.dimension,
              'hypothesis_holds': P.hypothesis_holds, 'proof_steps': []}
    checks = []

    leading = ', '.join(render_monomial(P.ctx, m) for m in P.G.leading_monomials)
    certified = P.G.certified and is_groebner(list(P.G)) and is_groebner(list(P.generators) + [P.f4])
    checks.append(_check('groebner', _passed(certified), f"leading monomials {leading}"))

    identity, member = cofactor_identity(P), f4_in_ideal(P)
    checks.append(_check('cofactors', _passed(identity and member),
                         f"cofactor identity {identity}, x*y^{n + 3} in ideal {member}"))

    checks.append(_check('dimension', _passed(A.dimension == P.expected_dimension),
                         f"dim A_{n} = {A.dimension} (n^2 + 6n + 2 = {P.expected_dimension})"))

    relations = verify_relations(P)
    checks.append(_check('relations', relations['status'], relations['detail']))

    socle = socle_report(P)
    checks.append(_check('socle', socle['status'], f"{socle['detail']}, Gorenstein {socle['gorenstein']}"))

    space = derivation_space(A, P.generators)
    if A.dimension <= cfg.oracle_max_dimension:
        oracle = compare_with_oracle(A, space, derivation_full_oracle(A, cfg.oracle_max_dimension))
        checks.append(_check('derivation_oracle', oracle['status'], oracle['detail']))
    else:
        checks.append(_check('derivation_oracle', 'skipped',
                             f"dim {A.dimension} exceeds oracle bound {cfg.oracle_max_dimension}"))
    annihilation = derivations_annihilate(P, space)
    checks.append(_check('derivations_annihilate', annihilation['status'], annihilation['detail']))

    sign = verify_automorphism(P, sign_automorphism(P))
    gamma_ok = sign.gamma == P.field(expected_sign_gamma(n))
    checks.append(_check('sign_automorphism', _passed(sign.status == 'pass' and gamma_ok), sign.detail))
    swap = verify_automorphism(P, swap_candidate(P))
    checks.append(_check('swap_rejected', _passed(not swap.valid), swap.detail or 'accepted'))

    source = RandomSource(cfg.seed, cfg.numerator_bound, cfg.denominators)
    composite = compose_automorphisms(P, source.automorphism(P), sign_automorphism(P))
    closure = verify_automorphism(P, composite)
    checks.append(_check('automorphism_closure', closure.status, closure.detail))

    if cfg.steps:
        checks.extend(_proof_step_checks(P, cfg, result))

    result['hilbert_function'] = A.hilbert_function()
    result['checks'] = checks
    result['status'] = 'fail' if any(c['status'] == 'fail' for c in checks) else 'pass'
    if cfg.verbose:
        for check in checks:
            logger.info(f"n={n} {check['check']}: {check['status']}")
    return result


def verify_command(cfg: RunConfig) -> int:
    """Run the A_n verification suite over the selected n-range"""
    results = [verify_n(n, cfg) for n in cfg.n_values]
    reporter = ReportGenerator(cfg.reports_dir)
    status = 'fail' if any(r['status'] == 'fail' for r in results) else 'pass'

    if cfg.output_format == 'json':
        print(to_json_text({'command': 'verify', 'field': cfg.field.name, 'status': status,
                            'results': results}))
    else:
        print(reporter.verification_text(results, cfg.field.name, verbose=cfg.verbose))

    if cfg.save_report:
        path = reporter.generate_csv_report(results)
        logger.info(f"Report saved: {path}")
    return EXIT_OK if status == 'pass' else EXIT_FAILURE


def _single_n(cfg: RunConfig) -> int:
    if len(cfg.n_values) != 1:
        raise ConfigError(f"'{cfg.command}' takes a single n, got {len(cfg.n_values)} values")
    return cfg.n_values[0]


def hypersurface_command(cfg: RunConfig) -> int:
    """Generate the hypersurface equation of a functional on A_n"""
    n = _single_n(cfg)
    P = AnPresentation(n, cfg.field)
    F = parse_functional(P.algebra, cfg.functional)
    equation = hypersurface_equation(F)

    source = RandomSource(cfg.seed, cfg.numerator_bound, cfg.denominators)
    on_surface = sum(point_membership(equation, F, source.kernel_element(F))
                     for _ in range(HYPERSURFACE_SAMPLES))
    if on_surface != HYPERSURFACE_SAMPLES:
        logger.error(f"Only {on_surface}/{HYPERSURFACE_SAMPLES} sampled points lie on the hypersurface")

    if cfg.output_format == 'json':
        print(to_json_text({
            'command': 'hypersurface',
            'n': n,
            'field': cfg.field.name,
            'functional': str(F),
            'degree': equation.degree,
            'equation': equation.to_json(),
            'text': str(equation),
            'socle_adjacent_in_kernel': separates_socle_adjacent_line(F, P),
            'sampled_points_on_surface': on_surface,
        }))
    else:
        print(ReportGenerator(cfg.reports_dir).hypersurface_text(n, str(F), equation))
    return EXIT_OK if on_surface == HYPERSURFACE_SAMPLES else EXIT_FAILURE


def derivations_command(cfg: RunConfig) -> int:
    """Print a row-echelon basis of the derivations of A_n"""
    reporter = ReportGenerator(cfg.reports_dir)
    payload, texts, ok = [], [], True
    for n in cfg.n_values:
        P = AnPresentation(n, cfg.field)
        A = P.algebra
        space = derivation_space(A, P.generators)
        oracle = None
        if A.dimension <= cfg.oracle_max_dimension:
            oracle = compare_with_oracle(A, space, derivation_full_oracle(A, cfg.oracle_max_dimension))
            ok = ok and oracle['status'] == 'pass'
        texts.append(reporter.derivations_text(n, space, oracle))
        payload.append({
            'n': n,
            'dimension': len(space),
            'basis': [{f"D_{name}": str(image) for name, image in zip(A.ctx.names, c.images)} for c in space],
            'oracle': None if oracle is None else {k: oracle[k] for k in ('status', 'detail')},
        })
    if cfg.output_format == 'json':
        print(to_json_text({'command': 'derivations', 'field': cfg.field.name, 'results': payload}))
    else:
        print('\n\n'.join(texts))
    return EXIT_OK if ok else EXIT_FAILURE


def groebner_command(cfg: RunConfig) -> int:
    """Reduced Groebner basis of the ideal in a file"""
    if not cfg.ideal_file:
        raise IdealFileError("No ideal file given")
    ideal = load_ideal(cfg.ideal_file, cfg.field)
    G = buchberger(ideal.generators)
    if cfg.output_format == 'json':
        print(to_json_text({'command': 'groebner', 'field': cfg.field.name, 'vars': list(ideal.ctx.names),
                            'basis': [to_json(g) for g in G]}))
    else:
        print(ReportGenerator(cfg.reports_dir).groebner_text(list(G), ideal.path))
    return EXIT_OK


def setup_logging(settings: Dict, verbose: bool):
    level = 'INFO' if verbose else str(settings['logging']['level']).upper()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(format=settings['logging']['format'])
    root.setLevel(getattr(logging, level, logging.WARNING))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Gorenstein Algebra Verifier - exact computations on A_n',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Verify A_2 .. A_6 over the rationals
  python main.py verify --n 2..6

  # Verify A_2 over F_5 and replay the proof steps
  python main.py verify --n 2 --field fp:5
  python main.py verify --n 2 --steps --verbose

  # Hypersurface equation for the functional z_05 + z_06 on A_2
  python main.py hypersurface --n 2 --functional z_05+z_06

  # Derivation basis and Groebner basis of an ideal file
  python main.py derivations --n 2 --format json
  python main.py groebner tests/data/ideal_a2.txt
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help=f'Path to YAML config (default: {DEFAULT_CONFIG.name} if present)')
    common.add_argument('--n', help='n or n-range A..B (default from config)')
    common.add_argument('--field', help='Coefficient field: q or fp:P (default: q)')
    common.add_argument('--format', choices=['text', 'json'], help='Output format (default: text)')
    common.add_argument('--seed', type=int, help='Random seed for sampled checks')
    common.add_argument('--verbose', '-v', action='store_true', help='Log progress and per-step lines')

    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    verify_parser = subparsers.add_parser('verify', parents=[common], help='Run the A_n verification suite')
    verify_parser.add_argument('--steps', action='store_true', help='Replay the proof steps (n <= 3)')
    verify_parser.add_argument('--budget', type=float, help='Proof-step budget in seconds (default: 300)')
    verify_parser.add_argument('--save-report', action='store_true', help='Write a CSV summary report')
    verify_parser.set_defaults(func=verify_command)

    hyper_parser = subparsers.add_parser('hypersurface', parents=[common],
                                         help='Hypersurface equation of a functional')
    hyper_parser.add_argument('--functional', help='Linear expression in z-names (default: z_06)')
    hyper_parser.set_defaults(func=hypersurface_command)

    der_parser = subparsers.add_parser('derivations', parents=[common], help='Derivation basis of A_n')
    der_parser.set_defaults(func=derivations_command)

    gb_parser = subparsers.add_parser('groebner', parents=[common], help='Reduced Groebner basis of an ideal file')
    gb_parser.add_argument('ideal_file', help="Ideal file ('vars:' header, one polynomial per line)")
    gb_parser.set_defaults(func=groebner_command)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    try:
        config_path = args.config or (str(DEFAULT_CONFIG) if DEFAULT_CONFIG.exists() else None)
        settings = load_config(config_path)
        setup_logging(settings, args.verbose)
        cfg = build_run_config(
            args.command, settings,
            n_values=args.n,
            field_selector=args.field,
            output_format=args.format,
            seed=args.seed,
            steps=getattr(args, 'steps', False) or None,
            budget_seconds=getattr(args, 'budget', None),
            verbose=args.verbose or None,
            functional=getattr(args, 'functional', None),
            save_report=getattr(args, 'save_report', False) or None,
            ideal_file=getattr(args, 'ideal_file', None),
        )
        return args.func(cfg)
    except INPUT_ERRORS as e:
        logger.error(f"Error: {e}")
        return EXIT_INPUT
    except KeyboardInterrupt:
        logger.error("Operation cancelled by user")
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"Error: {e}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
