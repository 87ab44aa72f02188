"""Chromosomes, individuals and the random source shared by every operator.

A bit string is a 1-D ``numpy.uint8`` array holding only 0 and 1. Operators
never modify their inputs; they return fresh arrays.

All randomness goes through a ``numpy.random.Generator`` backed by PCG64
(``numpy.random.default_rng``). Same seed, same draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

BitString = np.ndarray
RandomSource = np.random.Generator

_SEED_MASK = (1 << 64) - 1


def random_source(seed: int) -> RandomSource:
    """PCG64 generator for a 64-bit seed."""
    return np.random.default_rng(int(seed) & _SEED_MASK)


def derive_run_seed(base_seed: int, run_index: int) -> int:
    """Seed of run ``run_index``: ``(base_seed + run_index) mod 2**64``.

    Injective over run indices below 2**64. Adjacent seeds still give
    statistically independent streams because ``default_rng`` hashes the
    seed through ``SeedSequence``.
    """
    if run_index < 0:
        raise ValueError(f"run_index must be >= 0, got {run_index}")
    return (int(base_seed) + int(run_index)) & _SEED_MASK


def random_bitstring(n: int, rng: RandomSource) -> BitString:
    if n < 1:
        raise ValueError(f"bit string length must be >= 1, got {n}")
    return rng.integers(0, 2, size=n, dtype=np.uint8)


def as_bitstring(bits) -> BitString:
    """Coerce a sequence or a '0'/'1' string to a validated bit string."""
    if isinstance(bits, str):
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    arr = np.asarray(bits)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("bit string must be a non-empty 1-D sequence")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("alleles must be 0 or 1")
    return arr.astype(np.uint8)


def to_str(bits: BitString) -> str:
    return (np.asarray(bits, dtype=np.uint8) + ord("0")).tobytes().decode("ascii")


@dataclass(slots=True)
class Individual:
    """A genotype plus the transcript and fitness from its latest evaluation."""

    genotype: BitString
    transcript: Optional[BitString] = None
    fitness: Optional[float] = None
    edits: int = 0


Population = List[Individual]


def genotype_matrix(pop: Population) -> np.ndarray:
    """Stack member genotypes into an ``(l, n)`` array."""
    return np.stack([ind.genotype for ind in pop])
