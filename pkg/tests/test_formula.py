import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inv3sat import (
    CapExceeded,
    Cnf,
    ModelSet,
    TautologyRejected,
    cnf_of,
    enumerate_models,
    evaluate,
    mk_clause,
    resolve,
    restrict_clause,
    restrict_formula,
    subsumes,
)
from inv3sat.formula import (
    assignment_mask,
    clause_sort_key,
    mask_to_models,
    prefix_bindings,
    satisfies_clause,
    satisfying_mask,
)

from strategies import assignments, clauses, formulas, model_sets


class TestMkClause:
    def test_sorts_by_variable(self):
        assert mk_clause((5, -2, 1)) == (1, -2, 5)

    def test_negative_before_nothing_special(self):
        # Sign does not reorder: sorting is on the variable index alone.
        assert mk_clause((-3, 1)) == (1, -3)

    def test_deduplicates(self):
        assert mk_clause((2, 2, -1)) == (-1, 2)

    def test_empty_clause_allowed(self):
        assert mk_clause(()) == ()

    def test_rejects_tautology(self):
        with pytest.raises(TautologyRejected):
            mk_clause((1, -1))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            mk_clause((0, 1))

    @given(clauses(6))
    def test_idempotent(self, c):
        assert mk_clause(c) == c


def test_clause_sort_key_orders_positive_before_negative():
    cs = [(-1,), (1,), (1, 2), (-1, 2), (2,)]
    cs.sort(key=clause_sort_key)
    assert cs == [(1,), (1, 2), (-1,), (-1, 2), (2,)]


class TestSubsumes:
    def test_subset_subsumes(self):
        assert subsumes((1,), (1, -2))
        assert subsumes((), (3,))
        assert not subsumes((1, -2), (1,))
        assert not subsumes((1,), (-1, 2))

    @given(clauses(5), clauses(5))
    def test_matches_set_inclusion(self, c1, c2):
        assert subsumes(c1, c2) == set(c1).issubset(set(c2))

    @given(clauses(5), clauses(5))
    def test_subsuming_clause_is_stronger(self, c1, c2):
        # Every assignment satisfying the shorter clause satisfies the longer.
        if subsumes(c1, c2):
            m1 = satisfying_mask(Cnf(5, frozenset([c1])))
            m2 = satisfying_mask(Cnf(5, frozenset([c2])))
            assert m1 & ~m2 == 0


class TestResolve:
    def test_basic(self):
        assert resolve((1, 2), (-1, 3), 1) == (2, 3)

    def test_shared_literal_merges(self):
        assert resolve((1, 2), (-1, 2), 1) == (2,)

    def test_unit_conflict_gives_empty(self):
        assert resolve((1,), (-1,), 1) == ()

    def test_rejects_missing_pivot(self):
        with pytest.raises(ValueError):
            resolve((1, 2), (-1, 3), 2)

    def test_rejects_same_sign_pivot(self):
        with pytest.raises(ValueError):
            resolve((1, 2), (1, 3), 1)

    def test_tautological_resolvent_rejected(self):
        with pytest.raises(TautologyRejected):
            resolve((1, 2), (-1, -2), 1)

    @given(clauses(5, min_size=1), clauses(5, min_size=1))
    def test_resolvent_is_implied(self, c1, c2):
        pivots = [abs(l) for l in c1 if -l in c2]
        if not pivots:
            return
        try:
            r = resolve(c1, c2, pivots[0])
        except TautologyRejected:
            return
        sat1 = satisfying_mask(Cnf(5, frozenset([c1])))
        sat2 = satisfying_mask(Cnf(5, frozenset([c2])))
        satr = satisfying_mask(Cnf(5, frozenset([r])))
        assert (sat1 & sat2) & ~satr == 0


class TestCnf:
    def test_coerces_raw_clauses(self):
        f = cnf_of(3, [(3, -1), (2,)])
        assert f.clauses == frozenset({(-1, 3), (2,)})

    def test_rejects_out_of_range_variable(self):
        with pytest.raises(ValueError):
            cnf_of(2, [(3,)])

    def test_rejects_non_canonical_tuple(self):
        with pytest.raises(ValueError):
            Cnf(3, frozenset({(2, 1)}))

    def test_ordered_is_deterministic(self):
        f = cnf_of(3, [(2,), (1, 2), (-1,), (1,)])
        assert f.ordered() == ((1,), (1, 2), (-1,), (2,))

    def test_len_and_iteration(self):
        f = cnf_of(3, [(1,), (2, 3)])
        assert len(f.clauses) == 2


class TestModelSet:
    def test_preserves_presentation_order(self):
        ms = ModelSet(2, ("10", "01"))
        assert ms.models == ("10", "01")

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            ModelSet(2, ("10", "10"))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            ModelSet(3, ("10",))

    def test_rejects_bad_characters(self):
        with pytest.raises(ValueError):
            ModelSet(2, ("1x",))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ModelSet(2, ())

    def test_member_set(self):
        ms = ModelSet(2, ("10", "01"))
        assert ms.member_set() == {"10", "01"}
        assert len(ms) == 2


class TestEvaluation:
    def test_satisfies_clause(self):
        assert satisfies_clause((1, -3), "100")
        assert satisfies_clause((1, -3), "001") is False
        assert satisfies_clause((), "01") is False

    def test_evaluate(self):
        f = cnf_of(3, [(1, 2), (-3,)])
        assert evaluate(f, "100")
        assert not evaluate(f, "001")

    @given(formulas(4), assignments(4))
    def test_evaluate_matches_mask(self, f, a):
        mask = satisfying_mask(f)
        assert evaluate(f, a) == bool(mask >> int(a, 2) & 1)


class TestRestriction:
    def test_satisfied_clause_drops(self):
        assert restrict_clause((1, 2), prefix_bindings("1")) is None

    def test_false_literal_removed(self):
        assert restrict_clause((1, 2), prefix_bindings("0")) == (2,)

    def test_unbound_clause_untouched(self):
        assert restrict_clause((3, 4), prefix_bindings("10")) == (3, 4)

    def test_fully_false_gives_empty(self):
        assert restrict_clause((1, -2), prefix_bindings("01")) == ()

    def test_empty_prefix_is_identity(self):
        f = cnf_of(3, [(1, 2), (-3,)])
        assert restrict_formula(f, {}) == f

    @given(formulas(5), st.integers(min_value=0, max_value=5))
    def test_restriction_semantics(self, f, k):
        # a satisfies F|I exactly when a with its first k bits overridden
        # by I satisfies F.
        prefix = format(3, "05b")[:k]
        restricted = restrict_formula(f, prefix_bindings(prefix))
        for a in range(2**5):
            s = format(a, "05b")
            overridden = prefix + s[k:]
            assert evaluate(restricted, s) == evaluate(f, overridden)

    @given(formulas(5))
    def test_restricted_formula_never_mentions_bound_variables(self, f):
        restricted = restrict_formula(f, prefix_bindings("10"))
        for c in restricted.clauses:
            assert all(abs(l) > 2 for l in c)


class TestTruthTables:
    def test_satisfying_mask_single_clause(self):
        # (x1) over n=2: satisfied by 10 and 11, i.e. assignment indices 2, 3.
        f = cnf_of(2, [(1,)])
        assert satisfying_mask(f) == 0b1100

    def test_satisfying_mask_empty_formula_is_everything(self):
        f = Cnf(2, frozenset())
        assert satisfying_mask(f) == 0b1111

    def test_satisfying_mask_empty_clause_is_nothing(self):
        f = cnf_of(2, [()])
        assert satisfying_mask(f) == 0

    def test_assignment_mask_round_trip(self):
        ms = ModelSet(3, ("101", "000", "111"))
        mask = assignment_mask(ms)
        assert mask_to_models(mask, 3) == ("000", "101", "111")

    @given(model_sets(4))
    def test_mask_round_trip_sorts(self, ms):
        got = mask_to_models(assignment_mask(ms), 4)
        assert got == tuple(sorted(ms.models))

    @given(formulas(4))
    def test_mask_against_pointwise_evaluation(self, f):
        mask = satisfying_mask(f)
        for a in range(2**4):
            assert bool(mask >> a & 1) == evaluate(f, format(a, "04b"))


class TestEnumerateModels:
    def test_golden(self):
        f = cnf_of(2, [(1,), (-2,)])
        assert enumerate_models(f) == ("10",)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_models(Cnf(30, frozenset()), cap=24)

    @given(formulas(4))
    def test_every_enumerated_model_satisfies(self, f):
        for m in enumerate_models(f):
            assert evaluate(f, m)
