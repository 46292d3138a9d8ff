"""Shared fixtures: a toy odd-degree curve with rational coefficients and a
random reduced-divisor generator.

Random divisors come from the observation that for any polynomial v of
degree at most 3, the monic normalization u of v^2 - f satisfies u | v^2 - f,
so div(u, v) is a valid semi-reduced divisor; Cantor reduction then yields a
reduced representative.  This samples a large portion of the Jacobian
without needing any point search.
"""

import random

import pytest

from sos3.exact import Poly, Q
from sos3.jacobian import (
    MumfordDivisor,
    mumford_validate,
    new_curve,
    polyy,
    reduce_divisor,
)


def toy_factors():
    """Monic pairwise-coprime split of a degree-7 squarefree polynomial."""
    s = polyy([0, 1])
    return (s, s * s - polyy([2]), s ** 4 - polyy([3]))


@pytest.fixture(scope="session")
def toy_curve():
    f = polyy([1])
    for p in toy_factors():
        f = f * p
    return new_curve(f)


def random_reduced(curve, rng: random.Random) -> MumfordDivisor:
    v = polyy([Q(rng.randint(-9, 9), rng.randint(1, 4))
               for _ in range(rng.randint(1, 4))])
    u = (v * v - curve.f).monic()
    return reduce_divisor(mumford_validate(u, v, curve))


@pytest.fixture
def rng():
    return random.Random(20260823)
