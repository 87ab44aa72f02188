"""Generational GA: binary tournament, one-point crossover, bit-flip mutation.

Every generation each member is transcribed through the editor family and
the transcript is scored. In lamarckian mode (the default) the transcript
also replaces the genotype; in ontogenic mode it is discarded after scoring.
With an empty family no random draws are spent on editing, so the run is
exactly the plain GA.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from gaedit.core import (
    BitString,
    Individual,
    Population,
    RandomSource,
    genotype_matrix,
    random_bitstring,
    random_source,
)
from gaedit.editing import EditorFamily, transcribe
from gaedit.metrics import GenerationRecord, RunTrace, diversity, schema_density
from gaedit.problems import FitnessProblem, Schema

ONTOGENIC = "ontogenic"
LAMARCKIAN = "lamarckian"
EDITING_MODES = (ONTOGENIC, LAMARCKIAN)
# Edits are written back into the genotype unless ontogenic mode is chosen.
DEFAULT_EDITING_MODE = LAMARCKIAN


@dataclass(frozen=True)
class GaParams:
    population_size: int = 40
    generations: int = 200
    crossover_rate: float = 0.7
    mutation_rate: float = 0.005
    editing_mode: str = DEFAULT_EDITING_MODE

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError(f"population_size must be >= 2, got {self.population_size}")
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")
        for name in ("crossover_rate", "mutation_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if self.editing_mode not in EDITING_MODES:
            raise ValueError(f"editing_mode must be one of {EDITING_MODES}, got {self.editing_mode!r}")


def binary_tournament(fitness: Sequence[float], rng: RandomSource) -> int:
    """Index of the fitter of two uniform draws (with replacement).

    Ties go to a fair coin.
    """
    l = len(fitness)
    if l == 0:
        raise ValueError("cannot select from an empty population")
    i, j = rng.integers(0, l, size=2)
    if fitness[i] > fitness[j]:
        return int(i)
    if fitness[j] > fitness[i]:
        return int(j)
    return int(i) if rng.integers(0, 2) == 0 else int(j)


def one_point_crossover(
    a: BitString, b: BitString, p_c: float, rng: RandomSource
) -> Tuple[BitString, BitString]:
    if len(a) != len(b):
        raise ValueError(f"parent lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n >= 2 and rng.random() < p_c:
        c = int(rng.integers(1, n))
        return cut_and_swap(a, b, c)
    return a.copy(), b.copy()


def cut_and_swap(a: BitString, b: BitString, c: int) -> Tuple[BitString, BitString]:
    """Exchange the suffixes starting at position ``c``."""
    return np.concatenate((a[:c], b[c:])), np.concatenate((b[:c], a[c:]))


def point_mutation(s: BitString, p_m: float, rng: RandomSource) -> BitString:
    flips = rng.random(len(s)) < p_m
    return s ^ flips.astype(np.uint8)


def evaluate_population(
    pop: Population,
    problem: FitnessProblem,
    family: EditorFamily,
    rng: RandomSource,
    mode: str = DEFAULT_EDITING_MODE,
    generation: int = -1,
) -> Tuple[Population, int]:
    """Transcribe and score every member; returns the new population and the
    generation's total edit count.

    In lamarckian mode each genotype is replaced by its transcript.
    """
    evaluated: Population = []
    total = 0
    for ind in pop:
        if len(ind.genotype) != problem.length:
            raise ValueError(
                f"genotype length {len(ind.genotype)} != problem length {problem.length}"
            )
        if len(family):
            transcript, events = transcribe(ind.genotype, family, rng, generation)
        else:
            transcript, events = ind.genotype, ()
        genotype = transcript if mode == LAMARCKIAN else ind.genotype
        evaluated.append(Individual(genotype, transcript, None, len(events)))
        total += len(events)
    scores = problem.evaluate_many([ind.transcript for ind in evaluated])
    for ind, f in zip(evaluated, scores):
        ind.fitness = float(f)
    return evaluated, total


def next_generation(pop: Population, params: GaParams, rng: RandomSource) -> Population:
    """Breed ``l`` children from tournament-selected pairs; no elitism."""
    fitness = [ind.fitness for ind in pop]
    if any(f is None for f in fitness):
        raise ValueError("population must be evaluated before breeding")
    l = len(pop)
    children: Population = []
    while len(children) < l:
        a = pop[binary_tournament(fitness, rng)].genotype
        b = pop[binary_tournament(fitness, rng)].genotype
        a, b = one_point_crossover(a, b, params.crossover_rate, rng)
        children.append(Individual(point_mutation(a, params.mutation_rate, rng)))
        children.append(Individual(point_mutation(b, params.mutation_rate, rng)))
    return children[:l]


def run_ga(
    problem: FitnessProblem,
    params: GaParams,
    family: Optional[EditorFamily] = None,
    seed: int = 0,
    schemata: Sequence[Schema] = (),
) -> RunTrace:
    family = family if family is not None else EditorFamily()
    rng = random_source(seed)
    pop = [Individual(random_bitstring(problem.length, rng)) for _ in range(params.population_size)]
    records: List[GenerationRecord] = []
    best_so_far = -np.inf
    best: Optional[Individual] = None
    for g in range(params.generations):
        pop, edits = evaluate_population(pop, problem, family, rng, params.editing_mode, g)
        gen_best = max(pop, key=lambda ind: ind.fitness)
        if gen_best.fitness > best_so_far:
            best_so_far = gen_best.fitness
            best = gen_best
        genomes = genotype_matrix(pop)
        densities = tuple(schema_density(genomes, s) for s in schemata)
        records.append(
            GenerationRecord(
                generation=g,
                best_fitness=gen_best.fitness,
                best_so_far=best_so_far,
                edit_count=edits,
                diversity=diversity(genomes),
                schema_densities=densities,
            )
        )
        if g + 1 < params.generations:
            pop = next_generation(pop, params, rng)
    return RunTrace(
        seed=seed,
        records=records,
        best_genotype=best.genotype,
        best_transcript=best.transcript,
        best_fitness=best.fitness,
    )
