import csv
from dataclasses import replace
from pathlib import Path

import numpy as np
import pytest

from gaedit.cli import main
from gaedit.core import to_str
from gaedit.editing import EditorFamily
from gaedit.engine import GaParams
from gaedit.harness import (
    PRESETS,
    ConcentrationError,
    ExperimentConfig,
    MalformedConfigError,
    PatternLengthError,
    UnknownPresetError,
    UnknownProblemError,
    list_presets,
    load_config,
    parse_config,
    run_experiment,
)
from gaedit.harness.generate import generate_family
from gaedit.harness.presets import GENERATED
from gaedit.harness.runner import manifest_text

EDITING_PRESETS = [
    "rr-table3", "rr-2editors", "rr-10editors", "rr-len2", "rr-len10",
    "rr-conc1", "rr-del10", "control-table4", "mich-sec42",
]


def rows(family):
    return [(to_str(e.pattern), e.concentration, str(e.function)) for e in family]


def test_rr_table3_preset():
    c = load_config("rr-table3")
    assert c.problem == "royal-road-s1"
    assert (c.params.population_size, c.params.generations, c.runs) == (40, 200, 50)
    assert (c.params.crossover_rate, c.params.mutation_rate) == (0.7, 0.005)
    assert rows(c.family) == [
        ("1110", 0.0635, "delete 4"),
        ("0011", 0.0476, "insert 3"),
        ("0101", 0.7302, "delete 1"),
        ("00", 0.2857, "delete 3"),
        ("0111", 0.3175, "delete 2"),
    ]
    assert len(c.schemata) == 8


def test_control_table4_preset():
    c = load_config("control-table4")
    assert c.problem == "optimal-control"
    assert (c.params.population_size, c.params.generations, c.runs) == (50, 200, 100)
    assert [e.length for e in c.family] == [5, 4, 5, 3, 6]
    assert rows(c.family) == [
        ("00110", 0.1410, "delete 2"),
        ("1001", 0.7936, "delete 1"),
        ("01101", 0.2524, "insert 3"),
        ("011", 0.5885, "insert 2"),
        ("111100", 0.0871, "insert 5"),
    ]


def test_michalewicz_preset():
    c = load_config("mich-sec42")
    assert c.problem == "michalewicz-epistatic"
    assert c.params.population_size == 50
    assert rows(c.family) == [
        ("11100", 0.762, "insert 1"),
        ("01011", 0.54, "insert 1"),
        ("11101", 0.254, "insert 5"),
        ("01000", 0.159, "insert 3"),
        ("00000", 0.159, "delete 2"),
    ]


def test_catalog_has_editing_presets_and_baselines():
    ids = {pid for pid, *_ in list_presets()}
    for pid in EDITING_PRESETS:
        assert pid in ids and pid + "-plain" in ids
        plain, full = PRESETS[pid + "-plain"], PRESETS[pid]
        assert len(plain.family) == 0 and len(full.family) > 0
        assert plain.params == full.params and plain.runs == full.runs


def test_sweep_variants():
    base = PRESETS["rr-table3"].family
    conc1 = PRESETS["rr-conc1"].family
    assert all(e.concentration == 1.0 for e in conc1)
    assert [to_str(e.pattern) for e in conc1] == [to_str(e.pattern) for e in base]
    assert all(str(e.function) == "delete 10" for e in PRESETS["rr-del10"].family)
    assert len(PRESETS["rr-2editors"].family) == 2
    assert len(PRESETS["rr-10editors"].family) == 10
    assert {e.length for e in PRESETS["rr-len2"].family} == {2}
    assert {e.length for e in PRESETS["rr-len10"].family} == {10}


@pytest.mark.parametrize("pid", sorted(GENERATED))
def test_committed_tables_regenerate(pid):
    assert PRESETS[pid].family == generate_family(*GENERATED[pid])


@pytest.mark.parametrize("pid", sorted(PRESETS))
def test_presets_round_trip_through_text(pid):
    c = PRESETS[pid]
    assert parse_config(c.to_text()) == c


CONFIG = """
# small royal road run
name = tiny
problem = royal-road-s1
population_size = 10
generations = 5
crossover_rate = 0.7
mutation_rate = 0.005
editing_mode = ontogenic
runs = 3
base_seed = 77
schema = 11111***********************************

[editor]
pattern = 0101
concentration = 0.7302
function = delete 1

[editor]
pattern = 00
concentration = 0.2857
function = insert 3
"""


def test_parse_config_file(tmp_path):
    path = tmp_path / "tiny.cfg"
    path.write_text(CONFIG)
    c = load_config(str(path))
    assert c.name == "tiny" and c.runs == 3 and c.base_seed == 77
    assert rows(c.family) == [("0101", 0.7302, "delete 1"), ("00", 0.2857, "insert 3")]
    assert c.params == GaParams(10, 5, 0.7, 0.005, "ontogenic")


@pytest.mark.parametrize(
    "edit, error",
    [
        (("problem = royal-road-s1", "problem = sphere"), UnknownProblemError),
        (("concentration = 0.7302", "concentration = 1.2"), ConcentrationError),
        (("pattern = 00\n", "pattern = " + "0" * 40 + "\n"), PatternLengthError),
        (("runs = 3", "runs = three"), MalformedConfigError),
        (("runs = 3", "runs = 3\nbogus = 1"), MalformedConfigError),
        (("[editor]", "[editors]"), MalformedConfigError),
        (("function = delete 1", "function = swap 1"), MalformedConfigError),
        (("pattern = 0101", "pattern = 01a1"), MalformedConfigError),
        (("function = delete 1\n", ""), MalformedConfigError),
        (("editing_mode = ontogenic", "editing_mode = darwinian"), MalformedConfigError),
        (("crossover_rate = 0.7", "crossover_rate = 7"), MalformedConfigError),
        (("schema = 11111", "schema = 111"), MalformedConfigError),
    ],
)
def test_config_errors(edit, error):
    old, new = edit
    assert old in CONFIG
    with pytest.raises(error):
        parse_config(CONFIG.replace(old, new, 1))


def test_errors_are_distinct():
    classes = [UnknownProblemError, ConcentrationError, PatternLengthError, MalformedConfigError, UnknownPresetError]
    assert len({c.exit_code for c in classes}) == len(classes)


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        load_config("no-such-preset")


def small(pid="rr-table3", runs=2, generations=3):
    c = PRESETS[pid]
    return replace(c, runs=runs, params=replace(c.params, generations=generations))


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_run_experiment_minimal(tmp_path):
    run_experiment(small(runs=1, generations=1), tmp_path)
    agg = read_csv(tmp_path / "aggregate.csv")
    assert agg[0][:5] == ["generation", "mean_best_so_far", "ci95", "mean_edit_count", "mean_diversity"]
    assert agg[0][5:] == [f"density_s{i}" for i in range(1, 9)]
    assert len(agg) == 2
    assert len(read_csv(tmp_path / "runs.csv")) == 2


def test_csv_row_counts(tmp_path):
    result = run_experiment(small(runs=4, generations=6), tmp_path)
    assert len(read_csv(tmp_path / "aggregate.csv")) == 1 + 6
    runs = read_csv(tmp_path / "runs.csv")
    assert len(runs) == 1 + 4
    assert [int(r[1]) for r in runs[1:]] == result.seeds == [12345, 12346, 12347, 12348]


def test_manifest_round_trip(tmp_path):
    config = small("mich-sec42", runs=2, generations=2)
    result = run_experiment(config, tmp_path)
    manifest = (tmp_path / "manifest.cfg").read_text()
    assert manifest == manifest_text(config, result.seeds)
    assert "# run 1: seed 12346" in manifest
    assert load_config(str(tmp_path / "manifest.cfg")) == config


@pytest.mark.parametrize("pid", ["rr-table3", "control-table4", "mich-sec42-plain"])
def test_outputs_are_byte_identical(tmp_path, pid):
    config = small(pid, runs=3, generations=8)
    run_experiment(config, tmp_path / "a")
    run_experiment(config, tmp_path / "b")
    for name in ("aggregate.csv", "runs.csv", "manifest.cfg"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_parallel_matches_serial(tmp_path):
    config = small(runs=3, generations=5)
    run_experiment(config, tmp_path / "serial", workers=1)
    run_experiment(config, tmp_path / "parallel", workers=2)
    for name in ("aggregate.csv", "runs.csv"):
        assert (tmp_path / "serial" / name).read_bytes() == (tmp_path / "parallel" / name).read_bytes()


def test_always_matching_editor_edits_every_member(tmp_path):
    config = replace(
        small(runs=2, generations=10),
        family=EditorFamily.from_rows([("1", 1.0, "insert 1")]),
        schemata=(),
    )
    # an all-zero chromosome of 40 bits is astronomically unlikely; every member has a 1
    result = run_experiment(config)
    for t in result.traces:
        assert set(t.series("edit_count")) == {40.0}


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for pid in EDITING_PRESETS:
        assert pid in out and pid + "-plain" in out


def test_cli_validate_and_show(capsys, tmp_path):
    assert main(["validate", "rr-table3"]) == 0
    out = capsys.readouterr().out
    assert "0101" in out and "0.7302" in out and "delete 1" in out
    assert main(["show", "control-table4"]) == 0
    path = tmp_path / "c.cfg"
    path.write_text(capsys.readouterr().out)
    assert main(["validate", str(path)]) == 0


def test_cli_run_with_overrides(tmp_path, capsys):
    out = tmp_path / "out"
    code = main(["run", "rr-table3", "--runs", "2", "--generations", "4", "--seed", "9",
                 "--no-editors", "--editing-mode", "ontogenic", "--out", str(out), "-q"])
    assert code == 0
    config = load_config(str(out / "manifest.cfg"))
    assert config.runs == 2 and config.base_seed == 9 and len(config.family) == 0
    assert config.params.generations == 4 and config.params.editing_mode == "ontogenic"


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["validate", "nope"]) == 7
    bad = tmp_path / "bad.cfg"
    bad.write_text(CONFIG.replace("concentration = 0.7302", "concentration = -0.1"))
    assert main(["validate", str(bad)]) == 5
    bad.write_text(CONFIG.replace("royal-road-s1", "nope"))
    assert main(["validate", str(bad)]) == 4
    bad.write_text("this is not a config")
    assert main(["validate", str(bad)]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_output_error(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = main(["run", "rr-table3", "--runs", "1", "--generations", "1", "--out", str(blocker / "sub"), "-q"])
    assert code == 8
    assert str(blocker) in capsys.readouterr().err
