"""Command line entry point: ``gaedit run | list | validate | show``.

Exit codes: 0 success, 2 usage, 3 malformed config, 4 unknown problem,
5 concentration out of range, 6 editor pattern too long, 7 unknown preset
or missing file, 8 output I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import replace
from pathlib import Path

from gaedit.engine import EDITING_MODES
from gaedit.harness.config import ConfigError, load_config
from gaedit.harness.presets import format_family, list_presets
from gaedit.harness.runner import OutputError, run_experiment

log = logging.getLogger("gaedit")


def _apply_overrides(config, args):
    if args.seed is not None:
        config = replace(config, base_seed=args.seed)
    if args.runs is not None:
        config = replace(config, runs=args.runs)
    if args.generations is not None:
        config = replace(config, params=replace(config.params, generations=args.generations))
    if args.editing_mode is not None:
        config = replace(config, params=replace(config.params, editing_mode=args.editing_mode))
    if args.no_editors:
        config = config.without_editors()
    return config.validate()


def cmd_run(args) -> int:
    config = _apply_overrides(load_config(args.config), args)
    out = Path(args.out) if args.out else Path(config.output_dir or Path("runs") / config.name)
    print(f"{config.name}: {config.problem}, {config.runs} runs x {config.params.generations} "
          f"generations, {len(config.family)} editors ({config.params.editing_mode})")
    start = time.time()

    def progress(i, trace):
        if not args.quiet:
            print(f"  run {i:3d}  seed {trace.seed}  best-so-far {trace.final_best_so_far:.4f}", flush=True)

    result = run_experiment(config, out, workers=args.workers, progress=progress)
    final = result.final_best_so_far()
    print(f"mean final best-so-far {final.mean():.4f} over {len(final)} runs "
          f"({time.time() - start:.1f}s); outputs in {out}")
    return 0


def cmd_list(args) -> int:
    rows = list_presets()
    width = max(len(r[0]) for r in rows)
    for pid, problem, n_editors, about in rows:
        print(f"{pid:<{width}}  {problem:<22} {n_editors:>2} editors  {about}")
    return 0


def cmd_validate(args) -> int:
    config = load_config(args.config)
    p = config.params
    print(f"{config.name}: valid")
    print(f"  problem {config.problem} ({config.chromosome_length} bits)")
    print(f"  l={p.population_size} G={p.generations} p_c={p.crossover_rate} "
          f"p_m={p.mutation_rate} mode={p.editing_mode}")
    print(f"  runs={config.runs} base_seed={config.base_seed} tracked schemata={len(config.schemata)}")
    print(format_family(config.family))
    return 0


def cmd_show(args) -> int:
    sys.stdout.write(load_config(args.config).to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaedit", description="GA with genotype editing experiments")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a preset or config file")
    run.add_argument("config", help="preset id or path to a config file")
    run.add_argument("--seed", type=int, help="override base seed")
    run.add_argument("--runs", type=int, help="override run count")
    run.add_argument("--generations", type=int, help="override generation count")
    run.add_argument("--out", help="output directory (default runs/<name>)")
    run.add_argument("--editing-mode", choices=EDITING_MODES)
    run.add_argument("--no-editors", action="store_true", help="drop the editor family (plain GA)")
    run.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    run.add_argument("-q", "--quiet", action="store_true", help="no per-run lines")
    run.set_defaults(func=cmd_run)

    ls = sub.add_parser("list", help="list presets")
    ls.set_defaults(func=cmd_list)

    val = sub.add_parser("validate", help="validate a config file or preset and echo its editors")
    val.add_argument("config")
    val.set_defaults(func=cmd_validate)

    show = sub.add_parser("show", help="print a preset or config in file format")
    show.add_argument("config")
    show.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ConfigError, OutputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
