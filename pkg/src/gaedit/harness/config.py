"""Experiment configuration and its plain-text file format.

A config file is ``key = value`` lines followed by zero or more ``[editor]``
blocks. Blank lines and ``#`` comments are ignored::

    name = rr-table3
    problem = royal-road-s1
    population_size = 40
    generations = 200
    crossover_rate = 0.7
    mutation_rate = 0.005
    editing_mode = lamarckian
    runs = 50
    base_seed = 12345
    schema = 11111***********************************

    [editor]
    pattern = 1110
    concentration = 0.0635
    function = delete 4

``schema`` may repeat; each adds a tracked density column. ``output_dir`` is
optional. Editor blocks are applied in file order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from gaedit.core import to_str
from gaedit.editing import EditFunction, Editor, EditorFamily
from gaedit.engine import EDITING_MODES, GaParams
from gaedit.problems import PROBLEMS, Schema


class ConfigError(Exception):
    exit_code = 3


class MalformedConfigError(ConfigError):
    exit_code = 3


class UnknownProblemError(ConfigError):
    exit_code = 4


class ConcentrationError(ConfigError):
    exit_code = 5


class PatternLengthError(ConfigError):
    exit_code = 6


class UnknownPresetError(ConfigError):
    exit_code = 7


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    problem: str
    params: GaParams
    family: EditorFamily = EditorFamily()
    runs: int = 50
    base_seed: int = 12345
    schemata: Tuple[str, ...] = ()
    output_dir: Optional[str] = None

    @property
    def chromosome_length(self) -> int:
        return PROBLEMS[self.problem].length

    def tracked_schemata(self) -> List[Schema]:
        return [Schema.parse(t) for t in self.schemata]

    def without_editors(self) -> "ExperimentConfig":
        return replace(self, family=EditorFamily())

    def validate(self) -> "ExperimentConfig":
        if self.problem not in PROBLEMS:
            raise UnknownProblemError(
                f"unknown problem {self.problem!r}; expected one of {sorted(PROBLEMS)}"
            )
        if self.runs < 1:
            raise MalformedConfigError(f"runs must be >= 1, got {self.runs}")
        n = self.chromosome_length
        for j, e in enumerate(self.family):
            if not 0.0 <= e.concentration <= 1.0:
                raise ConcentrationError(f"editor {j + 1}: concentration {e.concentration} outside [0, 1]")
            if e.length >= n:
                raise PatternLengthError(
                    f"editor {j + 1}: pattern length {e.length} must be < chromosome length {n}"
                )
        for t in self.schemata:
            if len(t) != n:
                raise MalformedConfigError(f"schema {t!r} has length {len(t)}, expected {n}")
        return self

    def to_text(self) -> str:
        p = self.params
        lines = [
            f"name = {self.name}",
            f"problem = {self.problem}",
            f"population_size = {p.population_size}",
            f"generations = {p.generations}",
            f"crossover_rate = {p.crossover_rate!r}",
            f"mutation_rate = {p.mutation_rate!r}",
            f"editing_mode = {p.editing_mode}",
            f"runs = {self.runs}",
            f"base_seed = {self.base_seed}",
        ]
        if self.output_dir is not None:
            lines.append(f"output_dir = {self.output_dir}")
        lines += [f"schema = {t}" for t in self.schemata]
        for e in self.family:
            lines += [
                "",
                "[editor]",
                f"pattern = {to_str(e.pattern)}",
                f"concentration = {e.concentration!r}",
                f"function = {e.function}",
            ]
        return "\n".join(lines) + "\n"


_INT_KEYS = {"population_size", "generations", "runs", "base_seed"}
_FLOAT_KEYS = {"crossover_rate", "mutation_rate"}
_STR_KEYS = {"name", "problem", "editing_mode", "output_dir"}
_EDITOR_KEYS = ("pattern", "concentration", "function")


def _split(line: str, lineno: int) -> Tuple[str, str]:
    if "=" not in line:
        raise MalformedConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
    key, value = (part.strip() for part in line.split("=", 1))
    if not key or not value:
        raise MalformedConfigError(f"line {lineno}: empty key or value in {line!r}")
    return key, value


def _number(kind, key: str, value: str, lineno: int):
    try:
        return kind(value)
    except ValueError:
        raise MalformedConfigError(f"line {lineno}: {key} must be {kind.__name__}, got {value!r}") from None


def _build_editor(block: Dict[str, Tuple[str, int]], index: int) -> Editor:
    missing = [k for k in _EDITOR_KEYS if k not in block]
    if missing:
        raise MalformedConfigError(f"editor {index}: missing {', '.join(missing)}")
    pattern, lp = block["pattern"]
    if set(pattern) - {"0", "1"}:
        raise MalformedConfigError(f"line {lp}: pattern must be a 0/1 string, got {pattern!r}")
    v = _number(float, "concentration", *block["concentration"])
    if not 0.0 <= v <= 1.0:
        raise ConcentrationError(f"line {block['concentration'][1]}: editor {index} concentration {v} outside [0, 1]")
    text, lf = block["function"]
    try:
        function = EditFunction.parse(text)
    except ValueError as exc:
        raise MalformedConfigError(f"line {lf}: {exc}") from None
    return Editor(pattern, v, function)


def parse_config(text: str) -> ExperimentConfig:
    values: Dict[str, object] = {}
    schemata: List[str] = []
    blocks: List[Dict[str, Tuple[str, int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line != "[editor]":
                raise MalformedConfigError(f"line {lineno}: unknown section {line!r}")
            blocks.append({})
            continue
        key, value = _split(line, lineno)
        if blocks:
            if key not in _EDITOR_KEYS:
                raise MalformedConfigError(f"line {lineno}: unknown editor key {key!r}")
            if key in blocks[-1]:
                raise MalformedConfigError(f"line {lineno}: duplicate editor key {key!r}")
            blocks[-1][key] = (value, lineno)
            continue
        if key == "schema":
            schemata.append(value)
            continue
        if key in values:
            raise MalformedConfigError(f"line {lineno}: duplicate key {key!r}")
        if key in _INT_KEYS:
            values[key] = _number(int, key, value, lineno)
        elif key in _FLOAT_KEYS:
            values[key] = _number(float, key, value, lineno)
        elif key in _STR_KEYS:
            values[key] = value
        else:
            raise MalformedConfigError(f"line {lineno}: unknown key {key!r}")

    if "problem" not in values:
        raise MalformedConfigError("missing required key 'problem'")
    family = EditorFamily(tuple(_build_editor(b, i + 1) for i, b in enumerate(blocks)))
    params_kw = {k: values.pop(k) for k in list(values) if k in GaParams.__dataclass_fields__}
    if "editing_mode" in params_kw and params_kw["editing_mode"] not in EDITING_MODES:
        raise MalformedConfigError(
            f"editing_mode must be one of {EDITING_MODES}, got {params_kw['editing_mode']!r}"
        )
    try:
        params = GaParams(**params_kw)
    except ValueError as exc:
        raise MalformedConfigError(str(exc)) from None
    config = ExperimentConfig(
        name=str(values.get("name", "experiment")),
        problem=str(values["problem"]),
        params=params,
        family=family,
        runs=int(values.get("runs", 50)),
        base_seed=int(values.get("base_seed", 12345)),
        schemata=tuple(schemata),
        output_dir=values.get("output_dir"),
    )
    return config.validate()


def load_config(source: Union[str, Path]) -> ExperimentConfig:
    """Load a preset by id, or a config file by path."""
    from gaedit.harness.presets import PRESETS

    if isinstance(source, str) and source in PRESETS:
        return PRESETS[source]
    path = Path(source)
    if not path.is_file():
        raise UnknownPresetError(f"{source!r} is neither a known preset nor a readable file")
    try:
        text = path.read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedConfigError(f"{path}: {exc}") from None
    try:
        return parse_config(text)
    except ConfigError as exc:
        raise type(exc)(f"{path}: {exc}") from None
