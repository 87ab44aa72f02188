"""Genetic algorithm with stochastic genotype editing (GAE).

Genotypes pass through an ordered family of short bit-pattern editors that
insert or delete alleles before fitness evaluation.
"""

from gaedit.core import derive_run_seed, random_bitstring, random_source
from gaedit.editing import EditEvent, EditFunction, Editor, EditorFamily, transcribe
from gaedit.engine import GaParams, run_ga

__all__ = [
    "EditEvent",
    "EditFunction",
    "Editor",
    "EditorFamily",
    "GaParams",
    "derive_run_seed",
    "random_bitstring",
    "random_source",
    "run_ga",
    "transcribe",
]

__version__ = "0.1.0"
