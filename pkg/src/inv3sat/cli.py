"""Command line interface.

Exit codes: 0 means the run completed (the answer is in the output), 2
means the input or configuration was unusable, 3 means the pipeline caught
itself in an internal inconsistency.  Stdout is deterministic for a given
input and configuration; timings and progress go to stderr under
--verbose.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .formats import (
    InputFormatError,
    format_formula,
    read_models,
    write_cover,
    write_dimacs,
)
from .formula import CapExceeded, Cnf, ENUMERATION_CAP, InputTooSmall, ModelSet
from .harness import (
    EXHAUSTIVE,
    GeneratorExhausted,
    InstanceSpec,
    RANDOM_3CNF_MODELS,
    RANDOM_SUBSET,
    bench_csv,
    bench_scaling,
    differential_run,
    render_records,
    render_summary,
)
from .inverse import (
    Answer,
    WitnessExtractionFailed,
    candidate_formula,
    decide,
    prefix_cover,
)
from .closure import three_limited_closure
from .oracle import oracle_decide


@dataclass(frozen=True)
class RunConfig:
    input_path: str | None
    kmin: int
    jobs: int
    seed: int
    oracle_cap: int
    json_output: bool
    verbose: bool
    timeout_s: float | None


def _config(args: argparse.Namespace) -> RunConfig:
    kmin = getattr(args, "kmin", None)
    paper_mode = getattr(args, "paper_mode", False)
    if kmin is not None and paper_mode and kmin != 4:
        raise InputFormatError("--kmin and --paper-mode disagree; pick one")
    if kmin is None:
        kmin = 4 if paper_mode else 1
    if kmin < 1:
        raise InputFormatError("--kmin must be at least 1")
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        raise InputFormatError("--jobs must be at least 1")
    return RunConfig(
        input_path=getattr(args, "input", None),
        kmin=kmin,
        jobs=jobs,
        seed=getattr(args, "seed", 0),
        oracle_cap=getattr(args, "oracle_cap", ENUMERATION_CAP),
        json_output=getattr(args, "json", False),
        verbose=getattr(args, "verbose", False),
        timeout_s=getattr(args, "timeout", None),
    )


def _load_models(cfg: RunConfig) -> ModelSet:
    if cfg.input_path is None:
        raise InputFormatError("--input is required")
    return read_models(Path(cfg.input_path).read_text())


def cmd_candidate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    models = _load_models(cfg)
    formula = candidate_formula(models)
    if cfg.json_output:
        payload = {
            "num_vars": formula.num_vars,
            "clause_count": len(formula.clauses),
            "clauses": [list(c) for c in formula.ordered()],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(write_dimacs(formula))
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    cfg = _config(args)
    models = _load_models(cfg)
    result = three_limited_closure(candidate_formula(models))
    if cfg.verbose:
        print(
            f"resolution_steps={result.resolution_steps} "
            f"subsumption_deletions={result.subsumption_deletions}",
            file=sys.stderr,
        )
    if cfg.json_output:
        payload = {
            "num_vars": result.closed_formula.num_vars,
            "clause_count": len(result.closed_formula.clauses),
            "clauses": [list(c) for c in result.closed_formula.ordered()],
            "resolution_steps": result.resolution_steps,
            "subsumption_deletions": result.subsumption_deletions,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(write_dimacs(result.closed_formula))
    return 0


def cmd_cover(args: argparse.Namespace) -> int:
    cfg = _config(args)
    models = _load_models(cfg)
    if cfg.kmin > models.n:
        raise InputFormatError(f"--kmin {cfg.kmin} exceeds n={models.n}")
    cover = prefix_cover(models, cfg.kmin)
    if cfg.json_output:
        payload = {
            "n": cover.n,
            "kmin": cover.kmin,
            "total": cover.total(),
            "strata": {str(k): sorted(v) for k, v in sorted(cover.strata.items()) if v},
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(write_cover(cover))
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    cfg = _config(args)
    models = _load_models(cfg)
    if cfg.kmin > models.n:
        raise InputFormatError(f"--kmin {cfg.kmin} exceeds n={models.n}")
    deadline = time.perf_counter() + cfg.timeout_s if cfg.timeout_s else None
    report = decide(models, kmin=cfg.kmin, jobs=cfg.jobs, deadline=deadline)
    yes = report.answer is Answer.EXTRA_MODEL_EXISTS
    if cfg.verbose:
        t = report.timings
        print(
            "timings: "
            f"step1={t['step1_candidate_closure']:.3f}s "
            f"step2={t['step2_prefix_cover']:.3f}s "
            f"step3={t['step3_prefix_walk']:.3f}s",
            file=sys.stderr,
        )
    if cfg.json_output:
        payload = {
            "n": report.n,
            "kmin": report.kmin,
            "answer": report.answer.value,
            "extra_model_exists": yes,
            "exactly_representable": report.exactly_representable(),
            "witness": report.witness,
            "cover_size": report.cover_size,
            "prefixes_checked": len(report.trace),
            "trace": [
                {
                    "prefix": rec.prefix,
                    "closure_size": rec.closure_size,
                    "contains_empty": rec.contains_empty,
                    "closure": [list(c) for c in rec.closure_clauses],
                }
                for rec in report.trace
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"n={report.n} models={len(models)} kmin={report.kmin}")
        print(f"extra model exists: {'yes' if yes else 'no'}")
        print(f"input is the exact model set of a 3-CNF: {'no' if yes else 'yes'}")
        if report.witness is not None:
            print(f"witness: {report.witness}")
        print(f"cover size: {report.cover_size}, prefixes checked: {len(report.trace)}")
        print("trace:")
        for rec in report.trace:
            shown = format_formula(Cnf(report.n, frozenset(rec.closure_clauses)))
            print(
                f"  {rec.prefix} k={len(rec.prefix)} closure_size={rec.closure_size} "
                f"empty={'yes' if rec.contains_empty else 'no'} {shown}"
            )
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _config(args)
    models = _load_models(cfg)
    verdict = oracle_decide(models, cap=cfg.oracle_cap)
    yes = verdict.extra_model_exists()
    shown = verdict.extra_models[:32]
    if cfg.json_output:
        payload = {
            "n": models.n,
            "checked_count": verdict.checked_count,
            "extra_model_exists": yes,
            "exactly_representable": not yes,
            "extra_model_count": len(verdict.extra_models),
            "extra_models": list(shown),
            "extra_models_truncated": len(verdict.extra_models) > len(shown),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"n={models.n} checked={verdict.checked_count}")
        print(f"extra model exists: {'yes' if yes else 'no'}")
        print(f"input is the exact model set of a 3-CNF: {'no' if yes else 'yes'}")
        print(f"extra models: {len(verdict.extra_models)}")
        for m in shown:
            print(f"  {m}")
        if len(verdict.extra_models) > len(shown):
            print(f"  ... and {len(verdict.extra_models) - len(shown)} more")
    return 0


def _parse_pair(value: str, flag: str) -> tuple[int, int]:
    parts = value.split(":")
    if len(parts) != 2:
        raise InputFormatError(f"{flag} wants N:COUNT, got {value!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise InputFormatError(f"{flag} wants integers, got {value!r}") from None


def cmd_fuzz(args: argparse.Namespace) -> int:
    cfg = _config(args)
    specs: list[InstanceSpec] = []
    for n in args.exhaustive or []:
        specs.append(InstanceSpec(EXHAUSTIVE, n))
    for value in args.random or []:
        n, count = _parse_pair(value, "--random")
        specs.append(InstanceSpec(RANDOM_SUBSET, n, count=count, seed=cfg.seed))
    for value in args.cnf_random or []:
        n, count = _parse_pair(value, "--cnf-random")
        specs.append(InstanceSpec(RANDOM_3CNF_MODELS, n, count=count, seed=cfg.seed))
    if not specs:
        raise InputFormatError("nothing to fuzz; pass --exhaustive, --random or --cnf-random")
    result = differential_run(
        specs,
        kmin=cfg.kmin,
        jobs=cfg.jobs,
        cap=cfg.oracle_cap,
        quine_probe=args.quine_probe,
        closedness_sample=args.closedness_sample,
    )
    records = render_records(result)
    summary = render_summary(result)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "records.txt").write_text(records)
        (out / "summary.json").write_text(summary)
        print(f"wrote {out / 'records.txt'} and {out / 'summary.json'}")
    if cfg.json_output or not args.out:
        sys.stdout.write(summary if cfg.json_output else records)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _config(args)
    try:
        n_values = [int(v) for v in args.n_values.split(",") if v]
    except ValueError:
        raise InputFormatError(f"--n-values wants comma-separated integers, got {args.n_values!r}") from None
    rows = bench_scaling(
        n_values,
        trials=args.trials,
        seed=cfg.seed,
        models_factor=args.models_factor,
        timeout_s=cfg.timeout_s or 60.0,
    )
    text = bench_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _add_common(sub: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        sub.add_argument("--input", required=True, help="model set file, one 0/1 assignment per line")
    sub.add_argument("--kmin", type=int, default=None, help="shortest cover stratum (default 1)")
    sub.add_argument("--paper-mode", action="store_true", help="shorthand for --kmin 4")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_argument("--seed", type=int, default=0, help="campaign seed")
    sub.add_argument("--oracle-cap", type=int, default=ENUMERATION_CAP, help="variable cap for enumeration")
    sub.add_argument("--json", action="store_true", help="JSON output on stdout")
    sub.add_argument("--verbose", action="store_true", help="diagnostics on stderr")
    sub.add_argument("--timeout", type=float, default=None, help="per-instance time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inv3sat",
        description="Decide whether a model set is exactly the model set of some 3-CNF",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("candidate", help="emit the candidate formula as DIMACS")
    _add_common(p)
    p.set_defaults(func=cmd_candidate)

    p = subs.add_parser("closure", help="emit the closed candidate formula as DIMACS")
    _add_common(p)
    p.set_defaults(func=cmd_closure)

    p = subs.add_parser("cover", help="list the complement-covering prefixes")
    _add_common(p)
    p.set_defaults(func=cmd_cover)

    p = subs.add_parser("decide", help="run the full decision pipeline")
    _add_common(p)
    p.set_defaults(func=cmd_decide)

    p = subs.add_parser("oracle", help="brute-force reference answer")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("fuzz", help="differential campaign against the oracle")
    _add_common(p, with_input=False)
    p.add_argument("--exhaustive", type=int, action="append", metavar="N",
                   help="exhaustive sweep over all nonempty model sets of n variables")
    p.add_argument("--random", action="append", metavar="N:COUNT",
                   help="random-subset instances")
    p.add_argument("--cnf-random", action="append", metavar="N:COUNT",
                   help="models-of-random-3-CNF instances")
    p.add_argument("--quine-probe", action="store_true",
                   help="check closure emptiness against brute-force satisfiability per prefix")
    p.add_argument("--closedness-sample", type=int, default=0,
                   help="collect already-closed statistics every Nth instance")
    p.add_argument("--out", default=None, help="directory for records.txt and summary.json")
    p.set_defaults(func=cmd_fuzz)

    p = subs.add_parser("bench", help="scaling benchmark, CSV per step")
    _add_common(p, with_input=False)
    p.add_argument("--n-values", default="5,10,15,20,25,30", help="comma-separated variable counts")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--models-factor", type=int, default=2, help="models per instance = factor * n")
    p.add_argument("--out", default=None, help="CSV output path")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, InputTooSmall, CapExceeded, GeneratorExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WitnessExtractionFailed as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
