"""Two constant controls steering a nonlinear second-order plant.

    z'' + sin(z) z' + sin(t) cos(z) z**3 = sin(t) u1**2 + cos(t) u2**2 + sin(t) u1 u2
    z(0) = 2, z'(0) = 2, t in [0, 1]

Fitness is ``z(1)**2``, integrated by fixed-step classical RK4.
"""

from __future__ import annotations

import math
from typing import Dict, Sequence

import numba
import numpy as np

from gaedit.core import BitString
from gaedit.problems.base import FitnessProblem, decode_real

DEFAULT_STEP = 1e-3
U_LO, U_HI = -5.0, 5.0
BITS_PER_CONTROL = 30
Z0, DZ0 = 2.0, 2.0


class DivergenceError(ArithmeticError):
    pass


def rhs(t: float, z1: float, z2: float, u1: float, u2: float):
    """First-order form ``(z1', z2')`` of the plant."""
    st, ct = math.sin(t), math.cos(t)
    forcing = st * u1 * u1 + ct * u2 * u2 + st * u1 * u2
    return z2, -math.sin(z1) * z2 - st * math.cos(z1) * z1 ** 3 + forcing


@numba.njit(cache=True)
def _time_tables(n_steps):
    """sin/cos of t at the start, midpoint and end of every step."""
    h = 1.0 / n_steps
    tab = np.empty((n_steps, 6))
    for k in range(n_steps):
        t0 = k * h
        tm = t0 + 0.5 * h
        t1 = t0 + h
        tab[k, 0] = math.sin(t0)
        tab[k, 1] = math.cos(t0)
        tab[k, 2] = math.sin(tm)
        tab[k, 3] = math.cos(tm)
        tab[k, 4] = math.sin(t1)
        tab[k, 5] = math.cos(t1)
    return tab


@numba.njit(cache=True)
def _rk4_tab(u1, u2, tab):
    n_steps = tab.shape[0]
    h = 1.0 / n_steps
    a = u1 * u1 + u1 * u2
    b = u2 * u2
    z1 = Z0
    z2 = DZ0
    for k in range(n_steps):
        s0 = tab[k, 0]
        sm = tab[k, 2]
        s1 = tab[k, 4]
        f0 = s0 * a + tab[k, 1] * b
        fm = sm * a + tab[k, 3] * b
        f1 = s1 * a + tab[k, 5] * b

        a1 = z2
        b1 = -math.sin(z1) * z2 - s0 * math.cos(z1) * z1 ** 3 + f0
        y1 = z1 + 0.5 * h * a1
        y2 = z2 + 0.5 * h * b1
        a2 = y2
        b2 = -math.sin(y1) * y2 - sm * math.cos(y1) * y1 ** 3 + fm
        y1 = z1 + 0.5 * h * a2
        y2 = z2 + 0.5 * h * b2
        a3 = y2
        b3 = -math.sin(y1) * y2 - sm * math.cos(y1) * y1 ** 3 + fm
        y1 = z1 + h * a3
        y2 = z2 + h * b3
        a4 = y2
        b4 = -math.sin(y1) * y2 - s1 * math.cos(y1) * y1 ** 3 + f1

        z1 += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        z2 += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        if not (math.isfinite(z1) and math.isfinite(z2)):
            return np.nan
    return z1


@numba.njit(cache=True)
def _rk4_final(u1, u2, n_steps):
    return _rk4_tab(u1, u2, _time_tables(n_steps))


@numba.njit(cache=True)
def _rk4_final_many(u1s, u2s, tab):
    out = np.empty(u1s.size)
    for i in range(u1s.size):
        out[i] = _rk4_tab(u1s[i], u2s[i], tab)
    return out


def _steps_for(h: float) -> int:
    if h <= 0:
        raise ValueError(f"step size must be positive, got {h}")
    n = round(1.0 / h)
    if n < 1 or abs(n * h - 1.0) > 1e-9:
        raise ValueError(f"step size {h} does not divide [0, 1] evenly")
    return n


def simulate_plant(u1: float, u2: float, h: float = DEFAULT_STEP) -> float:
    """``z(1)`` for constant controls; raises DivergenceError on overflow."""
    z = _rk4_final(float(u1), float(u2), _steps_for(h))
    if not math.isfinite(z):
        raise DivergenceError(f"plant diverged for u=({u1}, {u2})")
    return float(z)


def decode_controls(s: BitString):
    b = BITS_PER_CONTROL
    return decode_real(s[:b], U_LO, U_HI), decode_real(s[b:2 * b], U_LO, U_HI)


def control_fitness(s: BitString, h: float = DEFAULT_STEP) -> float:
    if len(s) != 2 * BITS_PER_CONTROL:
        raise ValueError(f"optimal control expects 60 bits, got {len(s)}")
    u1, u2 = decode_controls(s)
    try:
        return simulate_plant(u1, u2, h) ** 2
    except DivergenceError:
        return 0.0


class OptimalControl(FitnessProblem):
    """Memoizes fitness per distinct transcript; evaluation is pure."""

    id = "optimal-control"
    length = 2 * BITS_PER_CONTROL
    optimum = None

    def __init__(self, h: float = DEFAULT_STEP, cache_size: int = 200_000):
        self.h = h
        self._tab = _time_tables(_steps_for(h))
        self._cache: Dict[bytes, float] = {}
        self._cache_size = cache_size

    def evaluate(self, s: BitString) -> float:
        self.check_length(s)
        return float(self.evaluate_many([s])[0])

    def evaluate_many(self, strings: Sequence[BitString]) -> np.ndarray:
        out = np.empty(len(strings))
        missing: Dict[bytes, list] = {}
        for i, s in enumerate(strings):
            key = np.asarray(s, dtype=np.uint8).tobytes()
            hit = self._cache.get(key)
            if hit is None:
                missing.setdefault(key, []).append(i)
            else:
                out[i] = hit
        if missing:
            if len(self._cache) + len(missing) > self._cache_size:
                self._cache.clear()
            keys = list(missing)
            controls = [decode_controls(np.frombuffer(k, dtype=np.uint8)) for k in keys]
            u = np.array(controls, dtype=float).reshape(-1, 2)
            z = _rk4_final_many(u[:, 0].copy(), u[:, 1].copy(), self._tab)
            fit = np.where(np.isfinite(z), z * z, 0.0)
            for key, f in zip(keys, fit):
                self._cache[key] = float(f)
                out[missing[key]] = f
        return out
