"""Named experiment presets.

Every editing preset ``X`` has a baseline ``X-plain`` with identical GA
settings and no editors.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Dict, List, Tuple

from gaedit.core import to_str
from gaedit.editing import DELETE, EditFunction, EditorFamily
from gaedit.engine import DEFAULT_EDITING_MODE, GaParams
from gaedit.harness.config import ExperimentConfig
from gaedit.problems import royal_road_schemata

BASE_SEED = 12345

# (seed, size, min_length, max_length) passed to generate_family for each sweep.
GENERATED = {
    "rr-2editors": (202, 2, 2, 4),
    "rr-10editors": (210, 10, 2, 4),
    "rr-len2": (302, 5, 2, 2),
    "rr-len10": (310, 5, 10, 10),
}

RR_TABLE3 = EditorFamily.from_rows([
    ("1110", 0.0635, "delete 4"),
    ("0011", 0.0476, "insert 3"),
    ("0101", 0.7302, "delete 1"),
    ("00", 0.2857, "delete 3"),
    ("0111", 0.3175, "delete 2"),
])

RR_2EDITORS = EditorFamily.from_rows([
    ("00", 0.4437, "delete 4"),
    ("00", 0.3004, "delete 2"),
])

RR_10EDITORS = EditorFamily.from_rows([
    ("10", 0.6837, "insert 2"),
    ("0111", 0.0156, "delete 3"),
    ("01", 0.4613, "insert 4"),
    ("0111", 0.3035, "delete 4"),
    ("01", 0.871, "delete 3"),
    ("0100", 0.7354, "delete 2"),
    ("0001", 0.0915, "insert 4"),
    ("00", 0.1696, "insert 4"),
    ("01", 0.8815, "delete 4"),
    ("1011", 0.8981, "insert 1"),
])

RR_LEN2 = EditorFamily.from_rows([
    ("01", 0.706, "insert 1"),
    ("01", 0.5564, "insert 1"),
    ("10", 0.7055, "delete 2"),
    ("00", 0.8552, "insert 4"),
    ("00", 0.9626, "delete 2"),
])

RR_LEN10 = EditorFamily.from_rows([
    ("1100111101", 0.6713, "insert 2"),
    ("0011000010", 0.2461, "delete 2"),
    ("1101010101", 0.016, "delete 2"),
    ("1100011110", 0.576, "insert 2"),
    ("1011000100", 0.9414, "delete 2"),
])

CONTROL_TABLE4 = EditorFamily.from_rows([
    ("00110", 0.1410, "delete 2"),
    ("1001", 0.7936, "delete 1"),
    ("01101", 0.2524, "insert 3"),
    ("011", 0.5885, "insert 2"),
    ("111100", 0.0871, "insert 5"),
])

MICHALEWICZ_EDITORS = EditorFamily.from_rows([
    ("11100", 0.762, "insert 1"),
    ("01011", 0.54, "insert 1"),
    ("11101", 0.254, "insert 5"),
    ("01000", 0.159, "insert 3"),
    ("00000", 0.159, "delete 2"),
])

_RR_SCHEMATA = tuple(s.template(40) for s in royal_road_schemata())


def _royal_road(name: str, family: EditorFamily) -> ExperimentConfig:
    return ExperimentConfig(
        name=name,
        problem="royal-road-s1",
        params=GaParams(40, 200, 0.7, 0.005, DEFAULT_EDITING_MODE),
        family=family,
        runs=50,
        base_seed=BASE_SEED,
        schemata=_RR_SCHEMATA,
    )


_EDITING: List[Tuple[ExperimentConfig, str]] = [
    (_royal_road("rr-table3", RR_TABLE3),
     "Royal Road S1, five random editors of length 2-4"),
    (_royal_road("rr-2editors", RR_2EDITORS),
     "Royal Road S1, family of two random editors"),
    (_royal_road("rr-10editors", RR_10EDITORS),
     "Royal Road S1, family of ten random editors"),
    (_royal_road("rr-len2", RR_LEN2),
     "Royal Road S1, five random 2-bit editors"),
    (_royal_road("rr-len10", RR_LEN10),
     "Royal Road S1, five random 10-bit editors"),
    (_royal_road("rr-conc1", RR_TABLE3.with_concentration(1.0)),
     "Royal Road S1, rr-table3 editors at concentration 1"),
    (_royal_road("rr-del10", RR_TABLE3.with_function(EditFunction(DELETE, 10))),
     "Royal Road S1, rr-table3 editors all deleting 10 bits"),
    (ExperimentConfig(
        name="control-table4",
        problem="optimal-control",
        params=GaParams(50, 200, 0.7, 0.005, DEFAULT_EDITING_MODE),
        family=CONTROL_TABLE4,
        runs=100,
        base_seed=BASE_SEED,
     ), "optimal control of z(1)^2, two 30-bit controls, five editors of length 3-6"),
    (ExperimentConfig(
        name="mich-sec42",
        problem="michalewicz-epistatic",
        params=GaParams(50, 200, 0.7, 0.005, DEFAULT_EDITING_MODE),
        family=MICHALEWICZ_EDITORS,
        runs=50,
        base_seed=BASE_SEED,
     ), "epistatic Michalewicz, N=5 x 10 bits, five 5-bit editors"),
]


def _catalog() -> Dict[str, Tuple[ExperimentConfig, str]]:
    catalog: Dict[str, Tuple[ExperimentConfig, str]] = {}
    for config, about in _EDITING:
        catalog[config.name] = (config.validate(), about)
        plain = replace(config.without_editors(), name=config.name + "-plain")
        catalog[plain.name] = (plain.validate(), f"baseline for {config.name}: same GA, no editors")
    return catalog


CATALOG = _catalog()
PRESETS: Dict[str, ExperimentConfig] = {k: c for k, (c, _) in CATALOG.items()}


def list_presets() -> List[Tuple[str, str, int, str]]:
    """``(id, problem, editor count, description)`` for every preset."""
    return [(k, c.problem, len(c.family), about) for k, (c, about) in CATALOG.items()]


def format_family(family: EditorFamily) -> str:
    if not len(family):
        return "  (no editors)"
    rows = [f"  {'#':>2}  {'pattern':<12}{'conc':>8}  function"]
    for j, e in enumerate(family, 1):
        rows.append(f"  {j:>2}  {to_str(e.pattern):<12}{e.concentration:>8}  {e.function}")
    return "\n".join(rows)
