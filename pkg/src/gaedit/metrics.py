"""Per-generation measurements and their aggregation across runs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from gaedit.core import BitString, Population, genotype_matrix

Z_95 = 1.96


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    best_fitness: float
    best_so_far: float
    edit_count: int
    diversity: float
    schema_densities: Tuple[float, ...] = ()


@dataclass
class RunTrace:
    seed: int
    records: List[GenerationRecord]
    best_genotype: Optional[BitString] = None
    best_transcript: Optional[BitString] = None
    best_fitness: float = float("nan")

    def __len__(self) -> int:
        return len(self.records)

    def series(self, metric: str) -> np.ndarray:
        return np.array([getattr(r, metric) for r in self.records], dtype=float)

    @property
    def final_best_so_far(self) -> float:
        return self.records[-1].best_so_far


@dataclass(frozen=True)
class AggregateSeries:
    mean: np.ndarray
    std: np.ndarray
    ci95: np.ndarray
    runs: int


def _as_matrix(pop: Union[Population, np.ndarray]) -> np.ndarray:
    if isinstance(pop, np.ndarray):
        return pop
    if len(pop) == 0:
        raise ValueError("population is empty")
    return genotype_matrix(pop)


def diversity(pop: Union[Population, np.ndarray]) -> float:
    """Mean over loci of ``1 - 2|0.5 - p_i|``, ``p_i`` the share of 1s at locus ``i``.

    1 for allele frequencies of one half everywhere, 0 once every locus is fixed.
    Accepts a population or an ``(l, n)`` genotype matrix.
    """
    genomes = _as_matrix(pop)
    if genomes.shape[0] == 0:
        raise ValueError("population is empty")
    p = genomes.mean(axis=0)
    return float(np.mean(1.0 - 2.0 * np.abs(0.5 - p)))


def schema_density(pop: Union[Population, np.ndarray], schema) -> float:
    """Fraction of genotypes that are instances of ``schema``."""
    genomes = _as_matrix(pop)
    if not schema.fixed:
        return 1.0
    loci = [i for i, _ in schema.fixed]
    alleles = np.array([a for _, a in schema.fixed], dtype=genomes.dtype)
    return float(np.mean(np.all(genomes[:, loci] == alleles, axis=1)))


MetricSelector = Union[str, Callable[[RunTrace], Sequence[float]]]


def aggregate_runs(traces: Sequence[RunTrace], metric: MetricSelector = "best_so_far") -> AggregateSeries:
    """Per-generation mean, sample std and 95% normal half-width ``1.96 s / sqrt(R)``.

    A single run yields NaN for std and half-width.
    """
    if not traces:
        raise ValueError("no traces to aggregate")
    get = (lambda t: t.series(metric)) if isinstance(metric, str) else metric
    lengths = {len(t) for t in traces}
    if len(lengths) != 1:
        raise ValueError(f"traces have mismatched lengths {sorted(lengths)}")
    data = np.array([np.asarray(get(t), dtype=float) for t in traces])
    r = data.shape[0]
    mean = data.mean(axis=0)
    if r < 2:
        nan = np.full_like(mean, np.nan)
        return AggregateSeries(mean, nan, nan.copy(), r)
    std = data.std(axis=0, ddof=1)
    return AggregateSeries(mean, std, Z_95 * std / math.sqrt(r), r)


@dataclass(frozen=True)
class EditingFrequency:
    per_generation: np.ndarray
    first_decile: float
    last_decile: float

    def head_tail(self, k: int) -> Tuple[float, float]:
        """Mean edit count over the first and last ``k`` generations."""
        return float(self.per_generation[:k].mean()), float(self.per_generation[-k:].mean())


def editing_frequency_summary(traces: Sequence[RunTrace]) -> EditingFrequency:
    per_gen = aggregate_runs(traces, "edit_count").mean
    k = max(1, len(per_gen) // 10)
    return EditingFrequency(per_gen, float(per_gen[:k].mean()), float(per_gen[-k:].mean()))
