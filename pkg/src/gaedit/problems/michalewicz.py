"""Epistatic Michalewicz function on rotated coordinates, maximized."""

from __future__ import annotations

import math

import numpy as np

from gaedit.core import BitString
from gaedit.problems.base import FitnessProblem, decode_segments

STEEPNESS = 10
N_VARS = 5
BITS_PER_VAR = 10

_C = math.cos(math.pi / 6)
_S = math.sin(math.pi / 6)


def rotate_epistatic(x) -> np.ndarray:
    """Rotate consecutive coordinate pairs by pi/6; the last coordinate is kept.

    With 1-based ``i``: odd ``i < N`` gives ``x_i cos - x_{i+1} sin``, even
    ``i < N`` gives ``x_{i-1} sin + x_i cos``, and ``y_N = x_N``.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if n < 1:
        raise ValueError("need at least one variable")
    y = x.copy()
    odd = np.arange(0, n - 1, 2)  # 0-based index of 1-based odd i < N
    y[odd] = x[odd] * _C - x[odd + 1] * _S
    even = np.arange(1, n - 1, 2)  # 1-based even i < N
    y[even] = x[even - 1] * _S + x[even] * _C
    return y


def michalewicz_epistatic(x, m: int = STEEPNESS) -> float:
    y = rotate_epistatic(x)
    i = np.arange(1, y.size + 1)
    return float(np.sum(np.sin(y) * np.sin(i * y * y / math.pi) ** (2 * m)))


def michalewicz_fitness(s: BitString) -> float:
    if len(s) != N_VARS * BITS_PER_VAR:
        raise ValueError(f"Michalewicz expects 50 bits, got {len(s)}")
    return michalewicz_epistatic(decode_segments(s, BITS_PER_VAR, 0.0, math.pi))


class MichalewiczEpistatic(FitnessProblem):
    id = "michalewicz-epistatic"
    length = N_VARS * BITS_PER_VAR
    optimum = None

    def evaluate(self, s: BitString) -> float:
        return michalewicz_fitness(s)
