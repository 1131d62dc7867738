"""
Report Generator for the Gorenstein Algebra Verifier
Formats verification, derivation, Groebner and hypersurface results as text, JSON and CSV
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['n', 'check', 'status', 'detail']


def status_label(status: str) -> str:
    return status.upper()


def step_lines(report: Dict) -> List[str]:
    """
    Line-oriented proof-step report

    Args:
        report: Result of verify_proof_steps

    Returns:
        'STEP k: PASS — detail' lines
    """
    return [f"STEP {step['step']}: {status_label(step['status'])} — {step['detail']}"
            for step in report['steps']]


def to_json_text(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


class ReportGenerator:
    """Generates console, JSON and CSV reports from check results"""

    def __init__(self, output_dir: str = "outputs/reports"):
        """
        Initialize report generator

        Args:
            output_dir: Directory for saved CSV reports (created on first save)
        """
        self.output_dir = Path(output_dir)

    def summary_frame(self, results: Sequence[Dict]) -> pd.DataFrame:
        """
        One row per check across all n

        Args:
            results: Per-n verification dicts, each with a 'checks' list

        Returns:
            DataFrame with columns n, check, status, detail
        """
        rows = []
        for result in results:
            for check in result['checks']:
                rows.append({'n': result['n'], 'check': check['check'],
                             'status': check['status'], 'detail': check['detail']})
        return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)

    def verification_text(self, results: Sequence[Dict], field_name: str, verbose: bool = False) -> str:
        """
        Console report for the verify command

        Args:
            results: Per-n verification dicts in ascending n
            field_name: Field selector shown in the header
            verbose: Include proof-step lines and the relation list

        Returns:
            Report text without timestamps
        """
        lines = ["=" * 80, f"A_n VERIFICATION REPORT (field {field_name})", "=" * 80]
        for result in results:
            lines.append("")
            lines.append(f"n = {result['n']}: dim A_n = {result['dimension']}, "
                         f"Hilbert function {result['hilbert_function']} -> {status_label(result['status'])}")
            for check in result['checks']:
                lines.append(f"  [{status_label(check['status'])}] {check['check']}: {check['detail']}")
            if verbose:
                for proof in result.get('proof_steps', []):
                    lines.append(f"  {proof['theorem']}:")
                    lines.extend(f"    {line}" for line in step_lines(proof))
        frame = self.summary_frame(results)
        counts = frame['status'].value_counts() if not frame.empty else {}
        lines.append("")
        lines.append("=" * 80)
        lines.append("SUMMARY")
        lines.append("=" * 80)
        for status in ('pass', 'fail', 'skipped'):
            lines.append(f"  {status_label(status)}: {int(counts.get(status, 0))}")
        if not frame.empty:
            table = frame.pivot(index='check', columns='n', values='status')
            table = table.reindex(list(dict.fromkeys(frame['check'])))
            lines.append("")
            lines.append(table.fillna('-').to_string())
        lines.append("=" * 80)
        return '\n'.join(lines)

    def derivations_text(self, n: int, basis: Sequence, oracle: Optional[Dict] = None) -> str:
        lines = [f"Derivations of A_{n}: dimension {len(basis)}"]
        for i, candidate in enumerate(basis, 1):
            lines.append(f"  {i}. {candidate}")
        if oracle is not None:
            lines.append(f"Oracle: {status_label(oracle['status'])} - {oracle['detail']}")
        return '\n'.join(lines)

    def groebner_text(self, polys: Sequence, source: str) -> str:
        lines = [f"Reduced Groebner basis of {source} ({len(polys)} polynomials):"]
        lines.extend(f"  {p}" for p in polys)
        return '\n'.join(lines)

    def hypersurface_text(self, n: int, functional: str, equation) -> str:
        return '\n'.join([
            f"A_{n}, functional {functional}",
            f"d = {equation.degree}",
            f"{equation}",
        ])

    def generate_csv_report(self, results: Sequence[Dict], filename: Optional[str] = None) -> str:
        """
        Save the per-check summary as CSV

        Args:
            results: Per-n verification dicts
            filename: Custom filename (default: verification_YYYYMMDD.csv)

        Returns:
            Path to saved CSV file
        """
        if filename is None:
            filename = f"verification_{datetime.now().strftime('%Y%m%d')}.csv"
        self.output_dir.mkdir(parents=True, exist_ok=True)
        filepath = self.output_dir / filename
        self.summary_frame(results).to_csv(filepath, index=False)
        logger.info(f"CSV report saved to {filepath}")
        return str(filepath)


if __name__ == "__main__":
    sample = [{
        'n': 2, 'dimension': 18, 'status': 'pass', 'hilbert_function': [1, 2, 3, 3, 3, 3, 2, 1],
        'checks': [
            {'check': 'groebner', 'status': 'pass', 'detail': 'certified'},
            {'check': 'dimension', 'status': 'pass', 'detail': 'dim A_2 = 18'},
        ],
    }]
    reporter = ReportGenerator()
    print(reporter.verification_text(sample, 'q'))
