"""Shared fixtures for the domino wave tests."""
import math

import numpy as np
import pytest

from domino_waves.domino_wave_api import ChainGeometry


@pytest.fixture
def rng() -> np.random.Generator:
    """Return a seeded generator so sampled properties are reproducible."""
    return np.random.default_rng(20240229)


@pytest.fixture
def half_spacing_chain() -> ChainGeometry:
    """Return a chain that collides at beta1 = pi/6 under Earth gravity."""
    return ChainGeometry(rod_length=1.0, spacing=0.5, gravity=9.81)


@pytest.fixture
def quarter_chain() -> ChainGeometry:
    """Return a chain that collides at beta1 = pi/4 with g = 0.5."""
    return ChainGeometry(rod_length=1.0, spacing=math.sqrt(2.0) / 2.0, gravity=0.5)


@pytest.fixture
def random_geometry(rng: np.random.Generator):
    """Return a factory drawing chains with d/l in [0.3, 0.9]."""

    def draw() -> ChainGeometry:
        length = rng.uniform(0.02, 2.0)
        return ChainGeometry(
            rod_length=length,
            spacing=length * rng.uniform(0.3, 0.9),
            gravity=rng.uniform(1.0, 20.0),
            mass=rng.uniform(0.1, 5.0),
        )

    return draw
