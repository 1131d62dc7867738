"""
Shared fixtures for the Gorenstein Algebra Verifier tests
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / 'src'))
sys.path.insert(0, str(ROOT))

from an_family import build
from hpair import hypersurface_equation, parse_functional
from poly import Polynomial, VariableContext, parse
from sampling import make_source

DATA_DIR = Path(__file__).parent / 'data'

PROPERTY_CASES = 200


def read_terms(path: Path) -> str:
    lines = [line.split('#', 1)[0].strip() for line in path.read_text(encoding='utf-8').splitlines()]
    return ' '.join(line for line in lines if line)


@pytest.fixture(scope="module")
def a2():
    return build(2)


@pytest.fixture(scope="module")
def a3():
    return build(3)


@pytest.fixture(scope="module")
def pi1(a2):
    return parse_functional(a2.algebra, "z_06")


@pytest.fixture(scope="module")
def pi2(a2):
    return parse_functional(a2.algebra, "z_05+z_06")


@pytest.fixture(scope="module")
def p1_equation(pi1):
    return hypersurface_equation(pi1)


@pytest.fixture(scope="module")
def p2_equation(pi2):
    return hypersurface_equation(pi2)


@pytest.fixture(scope="module")
def golden(a2):
    """Golden polynomial from tests/data in the coordinate context of A_2"""
    ctx = VariableContext(tuple(sorted(a2.algebra.coordinate_names())))

    def load(name: str) -> Polynomial:
        return parse(read_terms(DATA_DIR / name), ctx, a2.field)

    return load


@pytest.fixture
def source():
    return make_source()
