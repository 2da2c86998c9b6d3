"""Tests for canonical normal forms and the equational theory."""

import random
from fractions import Fraction

import pytest

from meadowacp import (
    Action,
    Alt,
    CommMerge,
    DataAction,
    Deadlock,
    Encap,
    Guard,
    LeftMerge,
    OpenTerm,
    Par,
    ProcVar,
    QConst,
    QVar,
    Seq,
    TermGen,
    default_context,
    embed,
    equal_terms,
    is_atomic,
    normalize,
)


a, b, c = Action("a"), Action("b"), Action("c")


class TestNormalForms:
    def test_action_plus_deadlock(self, ctx):
        nf = normalize(Alt(a, Deadlock()), ctx)
        assert str(nf) == "a"
        assert nf == normalize(a, ctx)

    def test_deadlock_prefix_absorbs(self, ctx):
        assert str(normalize(Seq(Deadlock(), a), ctx)) == "delta"
        assert normalize(Seq(Deadlock(), a), ctx).is_deadlock

    def test_idempotence_of_alternative(self, ctx):
        assert normalize(Alt(a, a), ctx) == normalize(a, ctx)

    def test_summands_are_sorted(self, ctx):
        assert str(normalize(Alt(b, a), ctx)) == "a + b"
        assert normalize(Alt(b, a), ctx) == normalize(Alt(a, b), ctx)

    def test_merge_expansion(self, ctx):
        # gamma(a, b) = c, so a || b = a.b + b.a + c
        nf = normalize(Par(a, b), ctx)
        assert str(nf) == "a . b + b . a + c"

    def test_left_merge_first_step_from_left(self, ctx):
        nf = normalize(LeftMerge(a, b), ctx)
        assert str(nf) == "a . b"

    def test_comm_merge_of_atoms(self, ctx):
        assert str(normalize(CommMerge(a, b), ctx)) == "c"
        assert normalize(CommMerge(a, c), ctx).is_deadlock

    def test_guard_enabled_iff_zero(self, ctx):
        # 0 plays the role of "true"
        assert normalize(Guard(QConst(Fraction(0)), a), ctx) == normalize(a, ctx)
        assert normalize(Guard(QConst(Fraction(5)), a), ctx).is_deadlock
        # in F3, the literal 3 evaluates to 0: guard enabled
        assert normalize(Guard(QConst(Fraction(3)), a), ctx) == normalize(a, ctx)

    def test_encapsulation(self, ctx):
        nf = normalize(Encap(frozenset({"a", "b"}), Par(a, b)), ctx)
        assert str(nf) == "c"
        assert normalize(Encap(frozenset({"a"}), a), ctx).is_deadlock

    def test_data_action_args_are_evaluated(self, ctx):
        # 4 = 1 in F3, so send(4) and send(1) coincide
        t1 = DataAction("a", (QConst(Fraction(4)),))
        t2 = DataAction("a", (QConst(Fraction(1)),))
        assert equal_terms(t1, t2, ctx)

    def test_data_comm_requires_matching_tuples(self, ctx):
        d1 = DataAction("a", (QConst(Fraction(2)),))
        d2 = DataAction("b", (QConst(Fraction(2)),))
        d3 = DataAction("b", (QConst(Fraction(1)),))
        assert str(normalize(CommMerge(d1, d2), ctx)) == "c(2)"
        assert normalize(CommMerge(d1, d3), ctx).is_deadlock

    def test_data_comm_arity_mismatch_is_deadlock(self, ctx):
        d1 = DataAction("a", (QConst(Fraction(2)),))
        d2 = DataAction("b", (QConst(Fraction(2)), QConst(Fraction(2))))
        assert normalize(CommMerge(d1, d2), ctx).is_deadlock

    def test_open_terms_rejected(self, ctx):
        with pytest.raises(OpenTerm):
            normalize(ProcVar("P"), ctx)
        with pytest.raises(OpenTerm):
            normalize(Guard(QVar("u"), a), ctx)

    def test_embed_round_trip_is_fixed_point(self, ctx):
        rng = random.Random(3)
        gen = TermGen(ctx, rng, max_depth=4)
        for _ in range(200):
            nf = normalize(gen.term(), ctx)
            assert normalize(embed(nf), ctx) == nf


class TestEqualTerms:
    def test_commutativity_and_associativity(self, ctx):
        assert equal_terms(Alt(a, b), Alt(b, a), ctx)
        assert equal_terms(Alt(Alt(a, b), c), Alt(a, Alt(b, c)), ctx)

    def test_sequence_does_not_commute(self, ctx):
        assert not equal_terms(Seq(a, b), Seq(b, a), ctx)

    def test_distribution_is_right_only(self, ctx):
        # (a + b) . c = a . c + b . c holds ...
        assert equal_terms(
            Seq(Alt(a, b), c), Alt(Seq(a, c), Seq(b, c)), ctx
        )
        # ... but a . (b + c) != a . b + a . c in bisimulation semantics
        assert not equal_terms(
            Seq(a, Alt(b, c)), Alt(Seq(a, b), Seq(a, c)), ctx
        )


class TestIsAtomic:
    def test_atoms(self, ctx):
        assert is_atomic(a, ctx)
        assert is_atomic(DataAction("b", (QConst(Fraction(2)),)), ctx)

    def test_non_atoms(self, ctx):
        assert not is_atomic(Deadlock(), ctx)
        assert not is_atomic(Seq(a, b), ctx)
        assert not is_atomic(Alt(a, b), ctx)

    def test_comm_merge_of_atoms_is_atomic_when_defined(self, ctx):
        assert is_atomic(CommMerge(a, b), ctx)  # synchronizes into c
        assert not is_atomic(CommMerge(a, c), ctx)  # gamma undefined: delta

    def test_collapsing_alternative_is_atomic(self, ctx):
        assert is_atomic(Alt(a, a), ctx)


class TestGuardAlgebra:
    def test_double_guard_is_conjunction(self, ctx):
        from meadowacp import enumerate_carrier, quantity_literal

        for u in enumerate_carrier(ctx.meadow):
            for v in enumerate_carrier(ctx.meadow):
                nested = Guard(quantity_literal(u.as_fraction()),
                               Guard(quantity_literal(v.as_fraction()), a))
                expect_enabled = u.is_zero and v.is_zero
                assert normalize(nested, ctx).is_deadlock != expect_enabled

    def test_guard_distributes_over_alternative(self, ctx):
        from meadowacp import enumerate_carrier, quantity_literal

        for u in enumerate_carrier(ctx.meadow):
            q = quantity_literal(u.as_fraction())
            assert equal_terms(
                Guard(q, Alt(a, b)), Alt(Guard(q, a), Guard(q, b)), ctx
            )
