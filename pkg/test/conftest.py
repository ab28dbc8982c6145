# -*- coding: utf-8 -*-
import pytest

from typing import Callable

import numpy as np
from loguru import logger

logger.enable("infoclone")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def random_labels(rng: np.random.Generator
                  ) -> Callable[[int, float], np.ndarray]:
    """Draws labels uniformly from the disc of a given radius."""
    def draw(size: int, radius: float) -> np.ndarray:
        modulus = radius * np.sqrt(rng.uniform(0.0, 1.0, size=size))
        phase = rng.uniform(0.0, 2 * np.pi, size=size)
        return modulus * np.exp(1j * phase)
    return draw
