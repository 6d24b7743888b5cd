"""Clause, formula and assignment primitives.

Literals are nonzero ints in DIMACS convention: +v is variable v, -v its
negation.  A clause is a tuple of literals sorted by variable index, with no
variable repeated; the empty tuple is the empty clause (falsum).  Assignments
over n variables are strings of '0'/'1' of length n, character i-1 giving the
value of variable i, so lexicographic order on strings matches numeric order
on the underlying bit patterns.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class TautologyRejected(Exception):
    """A clause would contain both a literal and its complement."""


class CapExceeded(ValueError):
    """An exhaustive enumeration would exceed the configured variable cap."""


class InputTooSmall(ValueError):
    """The model set has fewer variables than the pipeline supports."""


Clause = tuple[int, ...]

ENUMERATION_CAP = 24


def complement(lit: int) -> int:
    return -lit


def mk_clause(literals: Iterable[int]) -> Clause:
    """Canonicalize literals into a clause.

    Duplicates collapse, literals sort by variable index, and a complementary
    pair raises TautologyRejected.  An empty collection yields the empty
    clause.
    """
    lits = set()
    for lit in literals:
        if lit == 0:
            raise ValueError("literal 0 is not allowed")
        lits.add(lit)
    for lit in lits:
        if -lit in lits:
            raise TautologyRejected(f"clause contains both {lit} and {-lit}")
    return tuple(sorted(lits, key=abs))


def clause_sort_key(clause: Clause) -> tuple[tuple[int, bool], ...]:
    """Canonical ordering key: by variable, positive before negative."""
    return tuple((abs(lit), lit < 0) for lit in clause)


def subsumes(c1: Clause, c2: Clause) -> bool:
    """True iff every literal of c1 occurs in c2."""
    return set(c1).issubset(c2)


def resolve(c1: Clause, c2: Clause, pivot: int) -> Clause:
    """Resolve two clauses on a pivot variable.

    The pivot must occur positively in one operand and negatively in the
    other; anything else is a caller bug and raises ValueError.  If the
    resolvent would contain a complementary pair, TautologyRejected
    propagates from mk_clause.
    """
    if pivot <= 0:
        raise ValueError("pivot must be a positive variable index")
    if pivot in c1 and -pivot in c2:
        pass
    elif pivot in c2 and -pivot in c1:
        pass
    else:
        raise ValueError(
            f"pivot {pivot} must occur positively in one operand and negatively in the other"
        )
    merged = (set(c1) | set(c2)) - {pivot, -pivot}
    return mk_clause(merged)


@dataclass(frozen=True)
class Cnf:
    """A CNF formula: a duplicate-free set of clauses over num_vars variables."""

    num_vars: int
    clauses: frozenset[Clause] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", frozenset(self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        for clause in self.clauses:
            if clause != mk_clause(clause):
                raise ValueError(f"clause {clause!r} is not in canonical form")
            if clause and abs(clause[-1]) > self.num_vars:
                raise ValueError(f"clause {clause!r} mentions a variable beyond {self.num_vars}")

    def ordered(self) -> tuple[Clause, ...]:
        """Clauses in canonical order; emission and reports depend on it."""
        return tuple(sorted(self.clauses, key=clause_sort_key))

    def __len__(self) -> int:
        return len(self.clauses)


def cnf_of(num_vars: int, raw_clauses: Iterable[Iterable[int]]) -> Cnf:
    """Build a Cnf from raw literal collections, canonicalizing each."""
    return Cnf(num_vars, frozenset(mk_clause(c) for c in raw_clauses))


@dataclass(frozen=True)
class ModelSet:
    """A nonempty set of distinct total assignments over n variables.

    The tuple preserves presentation order (file order, generation order);
    equality is on the tuple, so two ModelSets with the same assignments in
    different order compare unequal by design: downstream traversal order
    follows presentation order.
    """

    n: int
    models: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "models", tuple(self.models))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.models:
            raise ValueError("model set must be nonempty")
        seen = set()
        for m in self.models:
            if len(m) != self.n or set(m) - {"0", "1"}:
                raise ValueError(f"bad model {m!r}: want {self.n} chars over 0/1")
            if m in seen:
                raise ValueError(f"duplicate model {m}")
            seen.add(m)

    def member_set(self) -> frozenset[str]:
        return frozenset(self.models)

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self) -> Iterator[str]:
        return iter(self.models)


def prefix_bindings(prefix: str) -> dict[int, int]:
    """Bindings for a prefix assignment: variable i gets bit i-1 of the string."""
    return {i + 1: int(b) for i, b in enumerate(prefix)}


def satisfies_clause(clause: Clause, assignment: str) -> bool:
    return any((lit > 0) == (assignment[abs(lit) - 1] == "1") for lit in clause)


def evaluate(formula: Cnf, assignment: str) -> bool:
    """True iff the assignment satisfies every clause."""
    if len(assignment) != formula.num_vars:
        raise ValueError("assignment length does not match num_vars")
    return all(satisfies_clause(c, assignment) for c in formula.clauses)


def restrict_clause(clause: Clause, bindings: Mapping[int, int]) -> Clause | None:
    """Apply bindings to one clause.

    Returns None when some bound literal is true (clause satisfied and
    dropped); otherwise returns the clause with false literals removed.  A
    clause whose literals are all falsified comes back as the empty clause.
    """
    kept = []
    for lit in clause:
        value = bindings.get(abs(lit))
        if value is None:
            kept.append(lit)
        elif (lit > 0) == (value == 1):
            return None
    return tuple(kept)


def restrict_formula(formula: Cnf, bindings: Mapping[int, int]) -> Cnf:
    """Restrict every clause; satisfied clauses vanish, emptied clauses stay."""
    restricted = set()
    for clause in formula.clauses:
        r = restrict_clause(clause, bindings)
        if r is not None:
            restricted.add(r)
    return Cnf(formula.num_vars, frozenset(restricted))


# Truth tables as big ints: bit a of a mask tells whether assignment index a
# (read as a binary string, variable 1 in the most significant position) is in
# the set.  Lets evaluation of a whole formula run word-parallel.

@functools.lru_cache(maxsize=2)
def _true_masks(n: int) -> tuple[int, ...]:
    """_true_masks(n)[v-1] marks the assignments where variable v is 1."""
    total = 1 << n
    masks = []
    for v in range(1, n + 1):
        chunk = 1 << (n - v)
        block = ((1 << chunk) - 1) << chunk
        period = chunk * 2
        reps = total // period
        mask = block * (((1 << (reps * period)) - 1) // ((1 << period) - 1))
        masks.append(mask)
    return tuple(masks)


def satisfying_mask(formula: Cnf) -> int:
    """Bitmask of all satisfying assignments of the formula."""
    n = formula.num_vars
    full = (1 << (1 << n)) - 1
    masks = _true_masks(n)
    sat = full
    for clause in formula.clauses:
        if not clause:
            return 0
        falsified = full
        for lit in clause:
            tm = masks[abs(lit) - 1]
            falsified &= (full ^ tm) if lit > 0 else tm
        sat &= full ^ falsified
        if sat == 0:
            break
    return sat


def assignment_mask(models: Iterable[str]) -> int:
    """Bitmask marking exactly the given assignments."""
    mask = 0
    for m in models:
        mask |= 1 << int(m, 2)
    return mask


def mask_to_models(mask: int, n: int) -> tuple[str, ...]:
    """Decode a truth-table mask into assignment strings, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(format(low.bit_length() - 1, f"0{n}b"))
        mask ^= low
    return tuple(out)


def enumerate_models(formula: Cnf, cap: int = ENUMERATION_CAP) -> tuple[str, ...]:
    """All satisfying assignments, in ascending order.

    Exhausts all 2^n assignments, so n above the cap raises CapExceeded
    rather than silently grinding.
    """
    n = formula.num_vars
    if n > cap:
        raise CapExceeded(f"enumeration over {n} variables exceeds cap {cap}")
    return mask_to_models(satisfying_mask(formula), n)
