import math
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from bargmann_toeplitz import (
    EnvelopedSymbol,
    GaussianRadialSymbol,
    PolynomialRadialSymbol,
    gamma,
    maxwell_boltzmann,
)

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

ROOT3_HALF = math.sqrt(3.0) / 2.0


def bounded_boundary_symbol() -> GaussianRadialSymbol:
    """exp((1/2 + sqrt(3)/2 i) r^2): unit-modulus spectrum, yet the natural
    domain of its Toeplitz operator excludes every basis polynomial."""
    return GaussianRadialSymbol(amplitude=1.0, exponent=0.5 + ROOT3_HALF * 1j)


def build_corpus() -> list[tuple[str, object]]:
    return [
        ("geometric_k2", gamma(2.0)),
        ("geometric_ke", gamma(math.e)),
        ("geometric_unit_modulus", gamma(0.6 - 0.8j)),
        ("geometric_k_0.8-0.9i", gamma(0.8 - 0.9j)),
        ("boundary_unit_spectrum", bounded_boundary_symbol()),
        ("thermal_beta1", maxwell_boltzmann(1.0)),
        ("poly_constant", PolynomialRadialSymbol((1.0,))),
        ("poly_r_squared", PolynomialRadialSymbol((0.0, 1.0))),
        ("poly_mixed", PolynomialRadialSymbol((2.0, 0.5j, 0.25))),
        (
            "enveloped_decaying",
            EnvelopedSymbol(evaluator=None, envelope_c=2.0, envelope_delta=0.0, base=gamma(2.0)),
        ),
    ]


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture
def boundary_symbol():
    return bounded_boundary_symbol()
