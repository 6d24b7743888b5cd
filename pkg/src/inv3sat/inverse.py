"""The inverse 3-SAT decision pipeline.

Given a model set phi over n variables, the only 3-CNF that can possibly
have phi as its exact model set is the conjunction of every 3-variable
clause satisfied by all of phi (adding any other clause kills a model;
leaving a satisfied clause out only loosens the formula).  The question
therefore reduces to: does that candidate formula admit a model outside
phi?  The pipeline answers it by closing the candidate under bounded
resolution, walking a prefix cover of the complement of phi, and testing
each restricted closure for the empty clause.  A restriction whose closure
stays empty-clause-free yields a witness assignment, which is verified
against the raw candidate formula before being reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping

from .closure import (
    decode_mask,
    encode_clause,
    prefix_literal_masks,
    restrict_mask_clauses,
    saturate_masks,
    three_limited_closure,
)
from .formula import (
    Clause,
    Cnf,
    InputTooSmall,
    ModelSet,
    clause_sort_key,
    evaluate,
    prefix_bindings,
    restrict_clause,
)

_PATTERNS = ("000", "001", "010", "011", "100", "101", "110", "111")


class WitnessExtractionFailed(RuntimeError):
    """A prefix closure had no empty clause, yet no witness could be built.

    This cannot happen if the closure test is a faithful satisfiability
    test, so it signals an internal inconsistency worth reporting, never
    masking.
    """


class Answer(Enum):
    EXTRA_MODEL_EXISTS = "extra-model-exists"
    NO_EXTRA_MODEL = "no-extra-model"


def candidate_formula(models: ModelSet) -> Cnf:
    """Every 3-variable clause satisfied by all models.

    For each variable triple there are eight candidate clauses, one per
    sign pattern; the clause survives exactly when no model projects onto
    the unique assignment that falsifies it.
    """
    n = models.n
    if n < 3:
        raise InputTooSmall(f"need at least 3 variables, got {n}")
    clauses = []
    triples = []
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                triples.append((i, j, k))
    for i, j, k in triples:
        seen = set()
        for m in models.models:
            seen.add(m[i - 1] + m[j - 1] + m[k - 1])
        if len(seen) == 8:
            continue
        for pattern in _PATTERNS:
            if pattern in seen:
                continue
            clauses.append(
                (
                    i if pattern[0] == "0" else -i,
                    j if pattern[1] == "0" else -j,
                    k if pattern[2] == "0" else -k,
                )
            )
    return Cnf(n, frozenset(clauses))


def closed_candidate_formula(models: ModelSet) -> Cnf:
    """The candidate formula after bounded-resolution closure."""
    return three_limited_closure(candidate_formula(models)).closed_formula


def model_prefixes(models: ModelSet, k: int) -> frozenset[str]:
    """Length-k prefixes of the models; k=0 gives the empty prefix."""
    if not 0 <= k <= models.n:
        raise ValueError(f"prefix length {k} out of range 0..{models.n}")
    return frozenset(m[:k] for m in models.models)


def cover_stratum(models: ModelSet, k: int) -> tuple[str, ...]:
    """Length-k prefixes that branch off the model tree at depth k.

    For each model, flip its k-th bit; keep the result when no model has
    that length-k prefix.  Every assignment outside the model set extends
    exactly one such prefix (taken over all k), which is what makes the
    strata a usable cover of the complement.  Order follows first
    occurrence over the models as presented.
    """
    if not 1 <= k <= models.n:
        raise ValueError(f"stratum index {k} out of range 1..{models.n}")
    present = model_prefixes(models, k)
    out = []
    seen = set()
    for m in models.models:
        flipped = m[: k - 1] + ("1" if m[k - 1] == "0" else "0")
        if flipped in present or flipped in seen:
            continue
        seen.add(flipped)
        out.append(flipped)
    return tuple(out)


@dataclass(frozen=True)
class PrefixCover:
    """Strata of complement-covering prefixes, from kmin up to n."""

    n: int
    kmin: int
    strata: Mapping[int, tuple[str, ...]]

    def entries(self) -> tuple[str, ...]:
        """All prefixes, shortest stratum first, construction order within."""
        out: list[str] = []
        for k in range(self.kmin, self.n + 1):
            out.extend(self.strata.get(k, ()))
        return tuple(out)

    def total(self) -> int:
        return sum(len(s) for s in self.strata.values())


def prefix_cover(models: ModelSet, kmin: int = 1) -> PrefixCover:
    """Build all cover strata from kmin upward.

    kmin=1 covers the whole complement.  kmin=4 drops the three shortest
    strata; whether that loses real witnesses is exactly what the harness
    compares.
    """
    if not 1 <= kmin <= models.n:
        raise ValueError(f"kmin {kmin} out of range 1..{models.n}")
    strata = {k: cover_stratum(models, k) for k in range(kmin, models.n + 1)}
    return PrefixCover(models.n, kmin, strata)


@dataclass(frozen=True)
class PrefixRecord:
    prefix: str
    closure_size: int
    contains_empty: bool
    closure_clauses: tuple[Clause, ...]


@dataclass(frozen=True)
class DecisionReport:
    answer: Answer
    witness: str | None
    kmin: int
    n: int
    cover_size: int
    trace: tuple[PrefixRecord, ...]
    timings: dict[str, float] = field(default_factory=dict)

    def exactly_representable(self) -> bool:
        """The complementary phrasing: no extra model means phi is exact."""
        return self.answer is Answer.NO_EXTRA_MODEL


def _unit_propagate(clauses: set[Clause], fixed: dict[int, int]) -> set[Clause] | None:
    """Propagate units in place of a search step; None signals a conflict."""
    current = clauses
    while True:
        unit = None
        for c in current:
            if not c:
                return None
            if len(c) == 1:
                unit = c[0]
                break
        if unit is None:
            return current
        fixed[abs(unit)] = 1 if unit > 0 else 0
        reduced = set()
        for c in current:
            if unit in c:
                continue
            if -unit in c:
                c = tuple(l for l in c if l != -unit)
            reduced.add(c)
        current = reduced


def _search(clauses: set[Clause], fixed: dict[int, int]) -> dict[int, int] | None:
    """Backtracking with unit propagation; branches lowest variable, 0 first."""
    after = _unit_propagate(clauses, fixed)
    if after is None:
        return None
    if not after:
        return fixed
    branch_var = min(abs(l) for c in after for l in c)
    for value in (0, 1):
        lit = branch_var if value == 1 else -branch_var
        trial_fixed = dict(fixed)
        trial_fixed[branch_var] = value
        trial = set()
        for c in after:
            if lit in c:
                continue
            if -lit in c:
                c = tuple(l for l in c if l != -lit)
            trial.add(c)
        result = _search(trial, trial_fixed)
        if result is not None:
            return result
    return None


def extract_witness(formula: Cnf, prefix: str) -> str:
    """Extend a prefix to a full model of the formula.

    The suffix search assigns remaining variables in ascending order trying
    0 before 1, so ties break the same way every run.  Exhausting the
    search raises WitnessExtractionFailed.
    """
    n = formula.num_vars
    k = len(prefix)
    bindings = prefix_bindings(prefix)
    restricted = set()
    for clause in formula.clauses:
        r = restrict_clause(clause, bindings)
        if r is not None:
            restricted.add(r)
    fixed: dict[int, int] = {}
    solution = _search(restricted, fixed)
    if solution is None:
        raise WitnessExtractionFailed(
            f"prefix {prefix}: restricted closure had no empty clause but no extension satisfies it"
        )
    suffix = "".join(str(solution.get(v, 0)) for v in range(k + 1, n + 1))
    return prefix + suffix


def decide(
    models: ModelSet,
    kmin: int = 1,
    jobs: int = 1,
    deadline: float | None = None,
) -> DecisionReport:
    """Decide whether the candidate formula has a model outside the set.

    Walks the prefix cover in canonical order (shortest stratum first,
    construction order within a stratum) and stops at the first prefix
    whose restricted closure lacks the empty clause; the witness built
    there is verified against the raw candidate formula and the model set
    before it is reported.  `deadline` is a wall-clock instant after which
    the walk aborts with TimeoutError.
    """
    t0 = time.perf_counter()
    raw = candidate_formula(models)
    closed = three_limited_closure(raw)
    formula = closed.closed_formula
    t1 = time.perf_counter()
    cover = prefix_cover(models, kmin)
    t2 = time.perf_counter()

    clause_masks = [encode_clause(c) for c in formula.clauses]
    member = models.member_set()
    trace: list[PrefixRecord] = []
    witness = None
    answer = Answer.NO_EXTRA_MODEL

    if jobs > 1:
        records = _walk_parallel(clause_masks, models.n, cover, jobs)
    else:
        records = _walk_serial(clause_masks, models.n, cover, deadline)

    for prefix, closed_masks in records:
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("prefix walk exceeded its deadline")
        clauses = tuple(sorted((decode_mask(m) for m in closed_masks), key=clause_sort_key))
        empty = 0 in closed_masks
        trace.append(PrefixRecord(prefix, len(closed_masks), empty, clauses))
        if not empty:
            witness = extract_witness(formula, prefix)
            if witness in member or not evaluate(raw, witness):
                raise WitnessExtractionFailed(
                    f"witness {witness} for prefix {prefix} failed verification"
                )
            answer = Answer.EXTRA_MODEL_EXISTS
            break
    t3 = time.perf_counter()

    return DecisionReport(
        answer=answer,
        witness=witness,
        kmin=kmin,
        n=models.n,
        cover_size=cover.total(),
        trace=tuple(trace),
        timings={
            "step1_candidate_closure": t1 - t0,
            "step2_prefix_cover": t2 - t1,
            "step3_prefix_walk": t3 - t2,
        },
    )


def _walk_serial(
    clause_masks: list[int], n: int, cover: PrefixCover, deadline: float | None
) -> Iterator[tuple[str, frozenset[int]]]:
    for prefix in cover.entries():
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("prefix walk exceeded its deadline")
        true_mask, false_mask = prefix_literal_masks(prefix)
        restricted = restrict_mask_clauses(clause_masks, true_mask, false_mask)
        closed_masks, _, _ = saturate_masks(restricted, n)
        yield prefix, closed_masks


_WORKER_STATE: dict[str, object] = {}


def _walk_worker_init(clause_masks: list[int], n: int) -> None:
    _WORKER_STATE["masks"] = clause_masks
    _WORKER_STATE["n"] = n


def _walk_worker(prefix: str) -> tuple[str, frozenset[int]]:
    clause_masks = _WORKER_STATE["masks"]
    n = _WORKER_STATE["n"]
    true_mask, false_mask = prefix_literal_masks(prefix)
    restricted = restrict_mask_clauses(clause_masks, true_mask, false_mask)
    closed_masks, _, _ = saturate_masks(restricted, n)
    return prefix, closed_masks


def _walk_parallel(
    clause_masks: list[int], n: int, cover: PrefixCover, jobs: int
) -> Iterator[tuple[str, frozenset[int]]]:
    """Same records as the serial walk, in the same order.

    Prefixes are dealt to a process pool but results are consumed strictly
    in canonical order, so the first empty-clause-free prefix (and with it
    the witness) is independent of scheduling.
    """
    import multiprocessing

    prefixes = list(cover.entries())
    if len(prefixes) < 2 * jobs:
        yield from _walk_serial(clause_masks, n, cover, None)
        return
    chunk = max(8, len(prefixes) // (jobs * 8))
    with multiprocessing.Pool(jobs, _walk_worker_init, (clause_masks, n)) as pool:
        yield from pool.imap(_walk_worker, prefixes, chunksize=chunk)
