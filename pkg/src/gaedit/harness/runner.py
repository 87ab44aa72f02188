"""Run every seed of an experiment and write its CSVs and manifest."""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, List, Optional, Sequence

import numpy as np

from gaedit.core import derive_run_seed, to_str
from gaedit.engine import run_ga
from gaedit.harness.config import ConfigError, ExperimentConfig
from gaedit.metrics import RunTrace, aggregate_runs
from gaedit.problems import FitnessProblem, get_problem

log = logging.getLogger(__name__)

AGGREGATE_CSV = "aggregate.csv"
RUNS_CSV = "runs.csv"
MANIFEST = "manifest.cfg"


class OutputError(OSError):
    exit_code = 8


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    seeds: List[int]
    traces: List[RunTrace]
    out_dir: Optional[Path] = None

    def final_best_so_far(self) -> np.ndarray:
        return np.array([t.final_best_so_far for t in self.traces])

    def success_fraction(self, optimum: float) -> float:
        return float(np.mean(self.final_best_so_far() >= optimum))


@lru_cache(maxsize=None)
def _problem(problem_id: str) -> FitnessProblem:
    # one instance per process so memoizing problems share their cache across runs
    return get_problem(problem_id)


def run_single(config: ExperimentConfig, run_index: int) -> RunTrace:
    seed = derive_run_seed(config.base_seed, run_index)
    return run_ga(
        _problem(config.problem),
        config.params,
        config.family,
        seed,
        config.tracked_schemata(),
    )


def _fmt(x: float) -> str:
    return repr(float(x))


def aggregate_rows(config: ExperimentConfig, traces: Sequence[RunTrace]):
    header = ["generation", "mean_best_so_far", "ci95", "mean_edit_count", "mean_diversity"]
    header += [f"density_s{i + 1}" for i in range(len(config.schemata))]
    bsf = aggregate_runs(traces, "best_so_far")
    edits = aggregate_runs(traces, "edit_count").mean
    div = aggregate_runs(traces, "diversity").mean
    dens = [
        aggregate_runs(traces, lambda t, i=i: [r.schema_densities[i] for r in t.records]).mean
        for i in range(len(config.schemata))
    ]
    rows = []
    for g in range(config.params.generations):
        row = [str(g), _fmt(bsf.mean[g]), _fmt(bsf.ci95[g]), _fmt(edits[g]), _fmt(div[g])]
        row += [_fmt(d[g]) for d in dens]
        rows.append(row)
    return header, rows


def run_rows(config: ExperimentConfig, seeds: Sequence[int], traces: Sequence[RunTrace]):
    optimum = _problem(config.problem).optimum
    header = [
        "run", "seed", "final_best_so_far", "reached_optimum", "first_generation_at_best",
        "total_edits", "final_diversity", "best_genotype", "best_transcript",
    ]
    rows = []
    for i, (seed, t) in enumerate(zip(seeds, traces)):
        bsf = t.series("best_so_far")
        first = int(np.argmax(bsf >= bsf[-1]))
        reached = "" if optimum is None else str(int(bsf[-1] >= optimum))
        rows.append([
            str(i), str(seed), _fmt(bsf[-1]), reached, str(first),
            str(int(t.series("edit_count").sum())), _fmt(t.records[-1].diversity),
            to_str(t.best_genotype), to_str(t.best_transcript),
        ])
    return header, rows


def _write_csv(path: Path, header, rows) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def manifest_text(config: ExperimentConfig, seeds: Sequence[int]) -> str:
    lines = ["# gaedit experiment manifest; load with `gaedit run` to replay", ""]
    lines.append(config.to_text().rstrip("\n"))
    lines += ["", "# run seeds = base_seed + run index"]
    lines += [f"# run {i}: seed {s}" for i, s in enumerate(seeds)]
    return "\n".join(lines) + "\n"


def write_outputs(result: ExperimentResult, out_dir: Path) -> None:
    config, traces = result.config, result.traces
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        _write_csv(out_dir / AGGREGATE_CSV, *aggregate_rows(config, traces))
        _write_csv(out_dir / RUNS_CSV, *run_rows(config, result.seeds, traces))
        (out_dir / MANIFEST).write_text(manifest_text(config, result.seeds))
    except OSError as exc:
        raise OutputError(f"cannot write experiment outputs to {out_dir}: {exc}") from exc


def run_experiment(
    config: ExperimentConfig,
    out_dir: Optional[Path] = None,
    workers: int = 1,
    progress: Optional[Callable[[int, RunTrace], None]] = None,
) -> ExperimentResult:
    """Execute ``config.runs`` seeded runs; outputs are independent of ``workers``."""
    config.validate()
    seeds = [derive_run_seed(config.base_seed, i) for i in range(config.runs)]
    traces: List[RunTrace] = []
    if workers > 1 and config.runs > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, trace in enumerate(pool.map(run_single, [config] * config.runs, range(config.runs))):
                traces.append(trace)
                if progress:
                    progress(i, trace)
    else:
        for i in range(config.runs):
            trace = run_single(config, i)
            traces.append(trace)
            if progress:
                progress(i, trace)
    result = ExperimentResult(config, seeds, traces)
    if out_dir is None and config.output_dir is not None:
        out_dir = Path(config.output_dir)
    if out_dir is not None:
        result.out_dir = Path(out_dir)
        write_outputs(result, result.out_dir)
        log.info("wrote %s, %s and %s to %s", AGGREGATE_CSV, RUNS_CSV, MANIFEST, out_dir)
    return result
