import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gaussdeg import GaussianState, squeezed_thermal, thermal, vacuum  # noqa: E402


ENVS = {
    "vacuum": vacuum(),
    "thermal1": thermal(1.0),
    "sqthermal": squeezed_thermal(0.5, 0.4, 0.7),
}


@pytest.fixture(params=sorted(ENVS))
def env(request):
    return ENVS[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


def random_state(rng, n_max=3.0, d_max=2.0):
    n = rng.uniform(0, n_max)
    m = rng.uniform(0, np.sqrt((n + 0.5) ** 2 - 0.25)) * np.exp(2j * np.pi * rng.uniform())
    d = rng.uniform(0, d_max) * np.exp(2j * np.pi * rng.uniform())
    return GaussianState(n, m, d)


def random_env(rng):
    s = random_state(rng, d_max=0.0)
    return GaussianState(s.n, s.m, 0)
