"""End-to-end tests of the command-line entry point"""

import json

import pytest

from conftest import DATA_DIR
from main import EXIT_FAILURE, EXIT_INPUT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_a2(capsys):
    code, out = run(capsys, 'verify', '--n', '2')
    assert code == EXIT_OK
    assert "dim A_n = 18" in out
    assert "[PASS] socle" in out
    assert "[FAIL]" not in out


def test_verify_json(capsys):
    code, out = run(capsys, 'verify', '--n', '2', '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['status'] == 'pass'
    result = data['results'][0]
    assert result['dimension'] == 18
    assert sum(result['hilbert_function']) == 18
    assert {c['check'] for c in result['checks']} >= {'groebner', 'derivation_oracle', 'swap_rejected'}


def test_verify_prime_field(capsys):
    code, out = run(capsys, 'verify', '--n', '2', '--field', 'fp:5', '--format', 'json')
    assert code == EXIT_OK
    assert json.loads(out)['results'][0]['hypothesis_holds']


def test_verify_is_reproducible(capsys):
    _, first = run(capsys, 'verify', '--n', '2', '--seed', '7')
    _, second = run(capsys, 'verify', '--n', '2', '--seed', '7')
    assert first == second


@pytest.mark.slow
def test_verify_with_steps(capsys):
    code, out = run(capsys, 'verify', '--n', '2', '--steps', '--verbose')
    assert code == EXIT_OK
    assert "STEP 1: PASS" in out


@pytest.mark.parametrize("argv", [
    ['verify', '--n', '1'],
    ['verify', '--n', '2', '--field', 'fp:4'],
    ['verify', '--n', '2', '--budget', '0'],
    ['verify', '--config', 'does-not-exist.yaml'],
    ['hypersurface', '--n', '2..3'],
    [],
])
def test_input_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == EXIT_INPUT


def test_hypersurface_text(capsys):
    code, out = run(capsys, 'hypersurface', '--n', '2', '--functional', 'z_06')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "A_2, functional z_06"
    assert lines[1] == "d = 7"
    assert "z_01*z_10^6" in lines[2]


def test_hypersurface_json(capsys):
    code, out = run(capsys, 'hypersurface', '--n', '2', '--functional', 'z_05+z_06', '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['degree'] == 7
    assert data['functional'] == "z_05 + z_06"
    assert not data['socle_adjacent_in_kernel']
    assert data['sampled_points_on_surface'] == 10


@pytest.mark.parametrize("functional", ["z_10", "z_00", "z_05*z_06"])
def test_hypersurface_rejects_functional(capsys, functional):
    code, _ = run(capsys, 'hypersurface', '--n', '2', '--functional', functional)
    assert code == EXIT_INPUT


def test_derivations_json(capsys):
    code, out = run(capsys, 'derivations', '--n', '2', '--format', 'json')
    assert code == EXIT_OK
    result = json.loads(out)['results'][0]
    assert result['dimension'] == len(result['basis'])
    assert set(result['basis'][0]) == {'D_x', 'D_y'}
    assert result['oracle']['status'] == 'pass'


def test_groebner_file(capsys):
    code, out = run(capsys, 'groebner', str(DATA_DIR / 'ideal_a2.txt'))
    assert code == EXIT_OK
    assert "(4 polynomials)" in out
    assert "  x*y^5" in out.splitlines()


@pytest.mark.parametrize("name", ['empty.txt', 'bad_syntax.txt', 'missing.txt'])
def test_groebner_bad_files(capsys, name):
    code, _ = run(capsys, 'groebner', str(DATA_DIR / name))
    assert code == EXIT_INPUT


def test_groebner_non_utf8_file(capsys, tmp_path):
    path = tmp_path / 'binary.txt'
    path.write_bytes(b"vars: x y\n\xff\xfe y^7\n")
    code, _ = run(capsys, 'groebner', str(path))
    assert code == EXIT_INPUT


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_FAILURE, EXIT_INPUT}) == 3
