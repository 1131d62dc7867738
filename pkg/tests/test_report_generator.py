"""Tests for report formatting"""

import pandas as pd

from report_generator import ReportGenerator, step_lines, to_json_text

RESULTS = [
    {'n': 2, 'dimension': 18, 'status': 'pass', 'hilbert_function': [1, 2, 15],
     'checks': [{'check': 'groebner', 'status': 'pass', 'detail': 'ok'},
                {'check': 'derivation_oracle', 'status': 'skipped', 'detail': 'too large'}]},
    {'n': 3, 'dimension': 29, 'status': 'fail', 'hilbert_function': [1, 2, 26],
     'checks': [{'check': 'groebner', 'status': 'fail', 'detail': 'bad'}]},
]


def test_summary_frame():
    frame = ReportGenerator().summary_frame(RESULTS)
    assert list(frame.columns) == ['n', 'check', 'status', 'detail']
    assert len(frame) == 3


def test_verification_text():
    text = ReportGenerator().verification_text(RESULTS, 'q')
    assert "[PASS] groebner: ok" in text
    assert "[SKIPPED] derivation_oracle: too large" in text
    assert "  FAIL: 1" in text
    assert "  PASS: 1" in text


def test_step_lines_and_json():
    report = {'steps': [{'step': '1', 'status': 'pass', 'detail': 'a_00 = 0'}]}
    assert step_lines(report) == ["STEP 1: PASS — a_00 = 0"]
    assert to_json_text({'b': 1, 'a': [1]}).startswith('{\n  "a"')


def test_csv_report(tmp_path):
    path = ReportGenerator(str(tmp_path / 'reports')).generate_csv_report(RESULTS, 'summary.csv')
    frame = pd.read_csv(path)
    assert frame['status'].tolist() == ['pass', 'skipped', 'fail']
