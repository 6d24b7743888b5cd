"""Differential harness: generators, campaigns, shrinking, benchmarks.

The pipeline's completeness rests on claims strong enough to deserve
distrust, so every campaign instance is scored against the brute-force
oracle and every disagreement is shrunk, re-checked against a battery of
implementation invariants, and classified.  A failure that survives the
battery on its minimized instance is evidence about the method itself
(PAPER-CLAIM); one that does not is a plain bug (IMPLEMENTATION-BUG).
Campaigns never abort on a broken instance: errors become reports.
"""

from __future__ import annotations

import json
import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .closure import (
    decode_mask,
    encode_clause,
    prefix_literal_masks,
    restrict_mask_clauses,
    saturate_masks,
    three_limited_closure,
)
from .formula import (
    Cnf,
    ENUMERATION_CAP,
    ModelSet,
    assignment_mask,
    cnf_of,
    mask_to_models,
    satisfying_mask,
)
from .inverse import (
    Answer,
    WitnessExtractionFailed,
    candidate_formula,
    decide,
    prefix_cover,
)
from .oracle import oracle_decide

EXHAUSTIVE = "exhaustive"
RANDOM_SUBSET = "random-subset"
RANDOM_3CNF_MODELS = "random-3cnf-models"


class GeneratorExhausted(RuntimeError):
    """A bounded retry budget ran out without producing an instance."""


@dataclass(frozen=True)
class InstanceSpec:
    """A reproducible recipe for one or more model-set instances.

    kind "exhaustive" streams every nonempty subset of {0,1}^n (desk scale,
    n <= 4).  kind "random-subset" draws m distinct assignments; m=0 draws
    the size per instance.  kind "random-3cnf-models" draws a random
    3-clause formula and takes its models, retrying past unsatisfiable or
    oversized draws; these instances are exactly representable by
    construction, so they exercise the no-extra-model path.
    """

    kind: str
    n: int
    count: int = 1
    m: int = 0
    clause_count: int = 0
    seed: int = 0
    max_models: int = 64


def derive_seed(seed: int, index: int) -> int:
    return (seed * 0x9E3779B1 + index * 0x85EBCA77 + 1) % (1 << 63)


def _draw_subset_size(rng: random.Random, n: int) -> int:
    # very small model sets at large n inflate the candidate formula without
    # testing anything the small-n exhaustive sweeps miss, so the floor
    # grows with n
    lo = 1 if n <= 8 else n - 4
    return rng.randint(lo, min(3 * n, (1 << n) - 1))


def _gen_random_subset(spec: InstanceSpec, index: int) -> tuple[int, ModelSet]:
    inst_seed = derive_seed(spec.seed, index)
    rng = random.Random(inst_seed)
    m = spec.m or _draw_subset_size(rng, spec.n)
    picks = sorted(rng.sample(range(1 << spec.n), m))
    return inst_seed, ModelSet(spec.n, tuple(format(p, f"0{spec.n}b") for p in picks))


def _gen_3cnf_models(spec: InstanceSpec, index: int) -> tuple[int, ModelSet]:
    inst_seed = derive_seed(spec.seed, index)
    rng = random.Random(inst_seed)
    n = spec.n
    for _ in range(200):
        cc = spec.clause_count or rng.randint(2 * n, 4 * n)
        clauses = []
        for _ in range(cc):
            vs = rng.sample(range(1, n + 1), 3)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        mask = satisfying_mask(cnf_of(n, clauses))
        if mask == 0:
            continue
        found = mask_to_models(mask, n)
        if spec.max_models and len(found) > spec.max_models:
            continue
        return inst_seed, ModelSet(n, found)
    raise GeneratorExhausted(f"no satisfiable draw within budget for {spec}")


def generate_with_ids(spec: InstanceSpec) -> Iterator[tuple[str, int, ModelSet]]:
    """Yield (instance id, reproduction seed, instance) streams."""
    if spec.kind == EXHAUSTIVE:
        if spec.n > 4:
            raise ValueError("exhaustive family is desk scale only (n <= 4)")
        assignments = [format(i, f"0{spec.n}b") for i in range(1 << spec.n)]
        for subset in range(1, 1 << (1 << spec.n)):
            models = tuple(a for i, a in enumerate(assignments) if subset >> i & 1)
            yield f"{EXHAUSTIVE}-n{spec.n}-{subset}", subset, ModelSet(spec.n, models)
    elif spec.kind == RANDOM_SUBSET:
        for index in range(spec.count):
            inst_seed, ms = _gen_random_subset(spec, index)
            yield f"{RANDOM_SUBSET}-n{spec.n}-s{spec.seed}-{index}", inst_seed, ms
    elif spec.kind == RANDOM_3CNF_MODELS:
        for index in range(spec.count):
            inst_seed, ms = _gen_3cnf_models(spec, index)
            yield f"{RANDOM_3CNF_MODELS}-n{spec.n}-s{spec.seed}-{index}", inst_seed, ms
    else:
        raise ValueError(f"unknown instance kind {spec.kind!r}")


def generate(spec: InstanceSpec) -> Iterator[ModelSet]:
    """The instances alone, for callers that do not need provenance."""
    for _, _, ms in generate_with_ids(spec):
        yield ms


# -- per-instance examination -------------------------------------------------

@dataclass(frozen=True)
class Examination:
    instance_id: str
    seed: int
    n: int
    models: tuple[str, ...]
    algo_answer: str
    algo_witness: str | None
    oracle_extra: int
    agree: bool
    witness_ok: bool
    error: str | None
    alt_compared: bool
    alt_divergence: bool
    quine_pairs: int
    quine_mismatch_prefixes: tuple[str, ...]
    closed_restrictions: int
    checked_restrictions: int

    def needs_attention(self) -> bool:
        return not self.agree or bool(self.quine_mismatch_prefixes)


def _walk_says_yes(clause_masks: list[int], n: int, models: ModelSet, kmin: int) -> bool:
    for prefix in prefix_cover(models, kmin).entries():
        tm, fm = prefix_literal_masks(prefix)
        restricted = restrict_mask_clauses(clause_masks, tm, fm)
        closed_masks, _, _ = saturate_masks(restricted, n)
        if 0 not in closed_masks:
            return True
    return False


def examine_instance(
    instance_id: str,
    seed: int,
    models: ModelSet,
    kmin: int = 1,
    cap: int = ENUMERATION_CAP,
    alt_kmin: int | None = None,
    quine_probe: bool = False,
    closedness_stats: bool = False,
) -> Examination:
    """Run pipeline and oracle on one instance and compare.

    Optional instruments: alt_kmin re-answers with a different cover floor
    to spot strata the shorter cover misses; quine_probe checks, for every
    cover prefix, that the restricted closure's empty-clause flag matches
    brute-force satisfiability of the restriction; closedness_stats counts
    how many restrictions were already closed before saturation.
    """
    n = models.n
    error = None
    algo_answer = "error"
    witness = None
    algo_yes = False
    try:
        report = decide(models, kmin=kmin)
        algo_answer = report.answer.value
        witness = report.witness
        algo_yes = report.answer is Answer.EXTRA_MODEL_EXISTS
    except (WitnessExtractionFailed, TimeoutError) as exc:
        error = f"{type(exc).__name__}: {exc}"

    verdict = oracle_decide(models, cap=cap)
    oracle_yes = verdict.extra_model_exists()
    extra_set = set(verdict.extra_models)
    witness_ok = (not algo_yes) or (witness in extra_set)
    agree = error is None and algo_yes == oracle_yes and witness_ok

    masks = None
    alt_compared = False
    alt_divergence = False
    if alt_kmin is not None and 1 <= alt_kmin <= n and alt_kmin != kmin and error is None:
        masks = [encode_clause(c) for c in three_limited_closure(candidate_formula(models)).closed_formula.clauses]
        alt_compared = True
        alt_divergence = _walk_says_yes(masks, n, models, alt_kmin) != algo_yes

    quine_pairs = 0
    mismatches: list[str] = []
    closed_restrictions = 0
    checked_restrictions = 0
    if quine_probe or closedness_stats:
        if masks is None:
            masks = [encode_clause(c) for c in three_limited_closure(candidate_formula(models)).closed_formula.clauses]
        for prefix in prefix_cover(models, 1).entries():
            tm, fm = prefix_literal_masks(prefix)
            restricted = restrict_mask_clauses(masks, tm, fm)
            closed_masks, steps, deletions = saturate_masks(restricted, n)
            if closedness_stats:
                checked_restrictions += 1
                if steps == 0 and deletions == 0:
                    closed_restrictions += 1
            if quine_probe:
                quine_pairs += 1
                no_empty = 0 not in closed_masks
                sat = satisfying_mask(Cnf(n, frozenset(decode_mask(m) for m in restricted))) != 0
                if sat != no_empty:
                    mismatches.append(prefix)

    return Examination(
        instance_id=instance_id,
        seed=seed,
        n=n,
        models=models.models,
        algo_answer=algo_answer if error is None else f"error ({error})",
        algo_witness=witness,
        oracle_extra=len(verdict.extra_models),
        agree=agree,
        witness_ok=witness_ok,
        error=error,
        alt_compared=alt_compared,
        alt_divergence=alt_divergence,
        quine_pairs=quine_pairs,
        quine_mismatch_prefixes=tuple(mismatches),
        closed_restrictions=closed_restrictions,
        checked_restrictions=checked_restrictions,
    )


# -- shrinking and classification ---------------------------------------------

def shrink(models: ModelSet, predicate: Callable[[ModelSet], bool]) -> ModelSet:
    """Greedy minimization keeping the predicate true.

    Tries dropping one model at a time, then projecting out one variable at
    a time (models deduplicate after the column is removed), and repeats
    both passes until neither shrinks the instance further.  The predicate
    holds for the returned instance.
    """
    if not predicate(models):
        raise ValueError("predicate does not hold on the starting instance")
    current = models
    changed = True
    while changed:
        changed = False
        i = 0
        while len(current.models) > 1 and i < len(current.models):
            trial = ModelSet(current.n, current.models[:i] + current.models[i + 1 :])
            if predicate(trial):
                current = trial
                changed = True
            else:
                i += 1
        v = 0
        while current.n > 3 and v < current.n:
            seen = set()
            kept = []
            for m in current.models:
                proj = m[:v] + m[v + 1 :]
                if proj not in seen:
                    seen.add(proj)
                    kept.append(proj)
            trial = ModelSet(current.n - 1, tuple(kept))
            if predicate(trial):
                current = trial
                changed = True
            else:
                v += 1
    return current


@dataclass(frozen=True)
class BatteryResult:
    passed: bool
    failures: tuple[str, ...]


def invariant_battery(models: ModelSet, cap: int = 16) -> BatteryResult:
    """Re-derive the pipeline's supporting invariants from first principles.

    Everything here is independent of the closure engine's own claims:
    candidate maximality by direct double loop, closure checks against
    whole-truth-table enumeration, restriction semantics pointwise, cover
    exactness by membership scan.
    """
    failures: list[str] = []
    n = models.n
    if n > cap:
        return BatteryResult(False, (f"battery-skipped: n={n} exceeds enumeration cap {cap}",))

    raw = candidate_formula(models)
    member_mask = assignment_mask(models.models)

    # candidate maximality: a 3-variable clause is in the candidate formula
    # exactly when every model satisfies it
    want = set()
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                for signs in range(8):
                    clause = (
                        i if signs & 4 == 0 else -i,
                        j if signs & 2 == 0 else -j,
                        k if signs & 1 == 0 else -k,
                    )
                    if all(
                        any((lit > 0) == (m[abs(lit) - 1] == "1") for lit in clause)
                        for m in models.models
                    ):
                        want.add(clause)
    if want != set(raw.clauses):
        failures.append("candidate-maximality")

    result = three_limited_closure(raw)
    closed = result.closed_formula

    from .closure import is_closed_3limited

    if not is_closed_3limited(closed):
        failures.append("closure-fixpoint")
    again = three_limited_closure(closed)
    if again.closed_formula != closed or again.resolution_steps or again.subsumption_deletions:
        failures.append("closure-idempotence")
    if satisfying_mask(raw) != satisfying_mask(closed):
        failures.append("closure-model-preservation")

    closed_sat = satisfying_mask(closed)
    full = (1 << (1 << n)) - 1
    masks = [encode_clause(c) for c in closed.clauses]
    cover = prefix_cover(models, 1)
    for prefix in cover.entries():
        tm, fm = prefix_literal_masks(prefix)
        restricted = restrict_mask_clauses(masks, tm, fm)
        rest_cnf = Cnf(n, frozenset(decode_mask(m) for m in restricted))
        rest_sat = satisfying_mask(rest_cnf)
        k = len(prefix)
        for a in range(1 << n):
            s = format(a, f"0{n}b")
            overridden = int(prefix + s[k:], 2)
            expect = bool(closed_sat >> overridden & 1)
            got = bool(rest_sat >> a & 1)
            if expect != got:
                failures.append(f"restriction-semantics@{prefix}")
                break
        else:
            continue
        break

    if cover.total() > n * len(models.models):
        failures.append("cover-size-bound")
    for a in range(1 << n):
        s = format(a, f"0{n}b")
        hit = any(s[:k] in set(cover.strata.get(k, ())) for k in range(1, n + 1))
        if hit == bool(member_mask >> a & 1):
            failures.append(f"cover-exactness@{s}")
            break

    return BatteryResult(not failures, tuple(failures))


@dataclass(frozen=True)
class DiscrepancyReport:
    instance_id: str
    reproduction_seed: int
    kind: str
    kmin: int
    n: int
    models: tuple[str, ...]
    algorithm_answer: str
    oracle_answer: str
    detail: str
    minimized_n: int
    minimized_models: tuple[str, ...]
    minimized_algorithm_answer: str
    minimized_oracle_answer: str
    minimized_formula_models: tuple[str, ...]
    battery_failures: tuple[str, ...]
    classification: str


def _answer_word(yes: bool) -> str:
    return Answer.EXTRA_MODEL_EXISTS.value if yes else Answer.NO_EXTRA_MODEL.value


def classify(
    exam: Examination,
    kmin: int,
    cap: int = ENUMERATION_CAP,
) -> DiscrepancyReport:
    """Shrink a failing instance and decide which tier it indicts."""
    start = ModelSet(exam.n, exam.models)

    def still_failing(ms: ModelSet) -> bool:
        try:
            probe = examine_instance(
                "shrink-probe", 0, ms, kmin=min(kmin, ms.n), cap=cap,
                quine_probe=bool(exam.quine_mismatch_prefixes),
            )
        except Exception:
            return True
        return probe.needs_attention()

    minimized = shrink(start, still_failing)
    mini_exam = examine_instance(
        "minimized", 0, minimized, kmin=min(kmin, minimized.n), cap=cap,
        quine_probe=bool(exam.quine_mismatch_prefixes),
    )
    battery = invariant_battery(minimized)
    classification = "PAPER-CLAIM" if battery.passed else "IMPLEMENTATION-BUG"

    formula_models = mask_to_models(
        satisfying_mask(candidate_formula(minimized)), minimized.n
    )
    if exam.error is not None:
        kind = "pipeline-error"
        detail = exam.error
    elif not exam.agree:
        kind = "answer-disagreement"
        detail = f"witness_ok={exam.witness_ok}"
    else:
        kind = "closure-sat-mismatch"
        detail = "prefixes: " + ",".join(exam.quine_mismatch_prefixes)

    return DiscrepancyReport(
        instance_id=exam.instance_id,
        reproduction_seed=exam.seed,
        kind=kind,
        kmin=kmin,
        n=exam.n,
        models=exam.models,
        algorithm_answer=exam.algo_answer,
        oracle_answer=_answer_word(exam.oracle_extra > 0),
        detail=detail,
        minimized_n=minimized.n,
        minimized_models=minimized.models,
        minimized_algorithm_answer=mini_exam.algo_answer,
        minimized_oracle_answer=_answer_word(mini_exam.oracle_extra > 0),
        minimized_formula_models=formula_models[:32],
        battery_failures=battery.failures,
        classification=classification,
    )


# -- campaigns ----------------------------------------------------------------

@dataclass(frozen=True)
class CampaignResult:
    kmin: int
    instances: int
    agreements: int
    disagreements: int
    errors: int
    yes_answers: int
    witnesses_verified: int
    alt_compared: int
    alt_divergences: int
    alt_divergence_examples: tuple[str, ...]
    quine_pairs_checked: int
    quine_mismatch_count: int
    restrictions_checked: int
    restrictions_already_closed: int
    reports: tuple[DiscrepancyReport, ...]


def _campaign_worker(payload: tuple) -> Examination:
    instance_id, seed, n, model_tuple, kmin, cap, alt_kmin, quine, closedness = payload
    return examine_instance(
        instance_id,
        seed,
        ModelSet(n, model_tuple),
        kmin=kmin,
        cap=cap,
        alt_kmin=alt_kmin,
        quine_probe=quine,
        closedness_stats=closedness,
    )


def differential_run(
    specs: Iterable[InstanceSpec],
    kmin: int = 1,
    jobs: int = 1,
    cap: int = ENUMERATION_CAP,
    quine_probe: bool = False,
    compare_alt_kmin: bool = True,
    closedness_sample: int = 0,
    max_divergence_examples: int = 100,
) -> CampaignResult:
    """Score every generated instance against the oracle and classify failures.

    closedness_sample=0 collects already-closed-restriction statistics on
    every instance when quine_probe is set and on none otherwise; a value
    s > 0 samples every s-th instance.  Output is a pure function of specs
    and configuration: identical runs render identical reports.
    """
    alt = (4 if kmin == 1 else 1) if compare_alt_kmin else None

    def payloads() -> Iterator[tuple]:
        counter = 0
        for spec in specs:
            for instance_id, seed, ms in generate_with_ids(spec):
                counter += 1
                closedness = quine_probe if closedness_sample == 0 else (counter % closedness_sample == 0)
                yield (
                    instance_id, seed, ms.n, ms.models, min(kmin, ms.n), cap,
                    alt, quine_probe, closedness,
                )

    instances = agreements = disagreements = errors = 0
    yes_answers = witnesses_verified = 0
    alt_compared = alt_divergences = 0
    divergence_examples: list[str] = []
    quine_pairs = quine_mismatches = 0
    closed_restr = checked_restr = 0
    attention: list[Examination] = []

    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
        stream = pool.imap(_campaign_worker, payloads(), chunksize=64)
    else:
        pool = None
        stream = map(_campaign_worker, payloads())

    try:
        for exam in stream:
            instances += 1
            if exam.agree:
                agreements += 1
            else:
                disagreements += 1
            if exam.error is not None:
                errors += 1
            if exam.algo_answer == Answer.EXTRA_MODEL_EXISTS.value:
                yes_answers += 1
                if exam.witness_ok:
                    witnesses_verified += 1
            if exam.alt_compared:
                alt_compared += 1
                if exam.alt_divergence:
                    alt_divergences += 1
                    if len(divergence_examples) < max_divergence_examples:
                        divergence_examples.append(
                            f"{exam.instance_id} n={exam.n} models={','.join(exam.models)}"
                        )
            quine_pairs += exam.quine_pairs
            quine_mismatches += len(exam.quine_mismatch_prefixes)
            closed_restr += exam.closed_restrictions
            checked_restr += exam.checked_restrictions
            if exam.needs_attention():
                attention.append(exam)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    reports = tuple(classify(exam, kmin, cap) for exam in attention)
    return CampaignResult(
        kmin=kmin,
        instances=instances,
        agreements=agreements,
        disagreements=disagreements,
        errors=errors,
        yes_answers=yes_answers,
        witnesses_verified=witnesses_verified,
        alt_compared=alt_compared,
        alt_divergences=alt_divergences,
        alt_divergence_examples=tuple(divergence_examples),
        quine_pairs_checked=quine_pairs,
        quine_mismatch_count=quine_mismatches,
        restrictions_checked=checked_restr,
        restrictions_already_closed=closed_restr,
        reports=reports,
    )


def render_records(result: CampaignResult) -> str:
    """One key=value block per discrepancy report, deterministic bytes."""
    blocks = []
    for r in result.reports:
        lines = [
            f"instance_id={r.instance_id}",
            f"reproduction_seed={r.reproduction_seed}",
            f"kind={r.kind}",
            f"kmin={r.kmin}",
            f"n={r.n}",
            f"models={','.join(r.models)}",
            f"algorithm_answer={r.algorithm_answer}",
            f"oracle_answer={r.oracle_answer}",
            f"detail={r.detail}",
            f"minimized_n={r.minimized_n}",
            f"minimized_models={','.join(r.minimized_models)}",
            f"minimized_algorithm_answer={r.minimized_algorithm_answer}",
            f"minimized_oracle_answer={r.minimized_oracle_answer}",
            f"minimized_formula_models={','.join(r.minimized_formula_models)}",
            f"battery_failures={','.join(r.battery_failures)}",
            f"classification={r.classification}",
        ]
        blocks.append("\n".join(lines))
    header = (
        f"campaign kmin={result.kmin} instances={result.instances} "
        f"agreements={result.agreements} disagreements={result.disagreements} "
        f"errors={result.errors} reports={len(result.reports)}"
    )
    return header + "\n\n" + ("\n\n".join(blocks) + "\n" if blocks else "")


def render_summary(result: CampaignResult) -> str:
    """Machine-readable campaign summary (JSON, sorted keys)."""
    payload = {
        "kmin": result.kmin,
        "instances": result.instances,
        "agreements": result.agreements,
        "disagreements": result.disagreements,
        "errors": result.errors,
        "yes_answers": result.yes_answers,
        "witnesses_verified": result.witnesses_verified,
        "alt_kmin_compared": result.alt_compared,
        "alt_kmin_divergences": result.alt_divergences,
        "alt_kmin_divergence_examples": list(result.alt_divergence_examples),
        "quine_pairs_checked": result.quine_pairs_checked,
        "quine_mismatches": result.quine_mismatch_count,
        "restrictions_checked": result.restrictions_checked,
        "restrictions_already_closed": result.restrictions_already_closed,
        "reports": [
            {
                "instance_id": r.instance_id,
                "kind": r.kind,
                "classification": r.classification,
                "minimized_models": list(r.minimized_models),
                "battery_failures": list(r.battery_failures),
            }
            for r in result.reports
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# -- scaling benchmark --------------------------------------------------------

@dataclass(frozen=True)
class BenchRow:
    n: int
    models_per_instance: int
    trials: int
    median_step1_s: float
    median_step2_s: float
    median_step3_s: float
    median_total_s: float
    max_total_s: float
    timeouts: int


def bench_scaling(
    n_values: Iterable[int],
    trials: int = 3,
    seed: int = 0,
    models_factor: int = 2,
    timeout_s: float = 60.0,
) -> list[BenchRow]:
    """Time decide() per pipeline step on random instances of growing n."""
    rows = []
    for n in n_values:
        m = models_factor * n
        s1: list[float] = []
        s2: list[float] = []
        s3: list[float] = []
        totals: list[float] = []
        timeouts = 0
        for t in range(trials):
            spec = InstanceSpec(RANDOM_SUBSET, n, m=m, seed=derive_seed(seed, n * 1000 + t))
            _, ms = _gen_random_subset(spec, 0)
            start = time.perf_counter()
            try:
                report = decide(ms, kmin=1, deadline=start + timeout_s)
            except TimeoutError:
                timeouts += 1
                continue
            s1.append(report.timings["step1_candidate_closure"])
            s2.append(report.timings["step2_prefix_cover"])
            s3.append(report.timings["step3_prefix_walk"])
            totals.append(sum(report.timings.values()))
        rows.append(
            BenchRow(
                n=n,
                models_per_instance=m,
                trials=trials,
                median_step1_s=statistics.median(s1) if s1 else float("nan"),
                median_step2_s=statistics.median(s2) if s2 else float("nan"),
                median_step3_s=statistics.median(s3) if s3 else float("nan"),
                median_total_s=statistics.median(totals) if totals else float("nan"),
                max_total_s=max(totals) if totals else float("nan"),
                timeouts=timeouts,
            )
        )
    return rows


def bench_csv(rows: Iterable[BenchRow]) -> str:
    lines = [
        "n,models,trials,median_step1_s,median_step2_s,median_step3_s,median_total_s,max_total_s,timeouts"
    ]
    for r in rows:
        lines.append(
            f"{r.n},{r.models_per_instance},{r.trials},"
            f"{r.median_step1_s:.6f},{r.median_step2_s:.6f},{r.median_step3_s:.6f},"
            f"{r.median_total_s:.6f},{r.max_total_s:.6f},{r.timeouts}"
        )
    return "\n".join(lines) + "\n"
