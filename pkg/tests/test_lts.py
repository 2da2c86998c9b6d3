"""Tests for LTS construction and the bisimulation oracle."""

import random

from meadowacp import (
    Action,
    Alt,
    Deadlock,
    Par,
    Seq,
    TermGen,
    bisimilar,
    build_lts,
    default_context,
    to_dot,
)


a, b, c = Action("a"), Action("b"), Action("c")


class TestBuildLts:
    def test_single_action(self, ctx):
        lts = build_lts(a, ctx)
        assert lts.num_states == 2
        assert lts.done is not None
        (src, label, dst), = lts.transitions
        assert (src, str(label), dst) == (0, "a", lts.done)

    def test_deadlock_has_no_transitions(self, ctx):
        lts = build_lts(Deadlock(), ctx)
        assert lts.num_states == 1
        assert lts.transitions == set()
        assert lts.done is None

    def test_done_state_is_shared_and_absorbing(self, ctx):
        lts = build_lts(Alt(a, b), ctx)
        assert lts.num_states == 2  # initial + done
        targets = {q for (_, _, q) in lts.transitions}
        assert targets == {lts.done}
        assert not lts.successors(lts.done)

    def test_merge_of_two_actions(self, ctx):
        # a || b: initial state, residuals a and b, and Done; the
        # synchronized step c jumps straight to Done
        lts = build_lts(Par(a, b), ctx)
        assert lts.num_states == 4
        assert lts.done is not None
        labels_from_initial = sorted(
            str(act) for (p, act, _) in lts.transitions if p == 0
        )
        assert labels_from_initial == ["a", "b", "c"]

    def test_sequence_chains_states(self, ctx):
        lts = build_lts(Seq(a, Seq(b, c)), ctx)
        assert lts.num_states == 4  # abc, bc, c, done
        assert len(lts.transitions) == 3


class TestBisimilar:
    def test_idempotence(self, ctx):
        assert bisimilar(build_lts(Alt(a, a), ctx), build_lts(a, ctx))

    def test_termination_distinguished_from_deadlock(self, ctx):
        assert not bisimilar(build_lts(a, ctx), build_lts(Seq(a, Deadlock()), ctx))

    def test_left_distribution_fails(self, ctx):
        # the classic non-law: a.(b + c) is not bisimilar to a.b + a.c
        lhs = build_lts(Seq(a, Alt(b, c)), ctx)
        rhs = build_lts(Alt(Seq(a, b), Seq(a, c)), ctx)
        assert not bisimilar(lhs, rhs)

    def test_merge_expansion_law(self, ctx):
        lhs = build_lts(Par(a, b), ctx)
        rhs = build_lts(Alt(Alt(Seq(a, b), Seq(b, a)), c), ctx)
        assert bisimilar(lhs, rhs)

    def test_equivalence_relation_on_random_terms(self, ctx):
        rng = random.Random(11)
        gen = TermGen(ctx, rng, max_depth=3)
        for _ in range(60):
            x = build_lts(gen.term(), ctx)
            y = build_lts(gen.term(), ctx)
            z = build_lts(gen.term(), ctx)
            assert bisimilar(x, x)  # reflexive
            assert bisimilar(x, y) == bisimilar(y, x)  # symmetric
            if bisimilar(x, y) and bisimilar(y, z):  # transitive
                assert bisimilar(x, z)


class TestDot:
    def test_dot_output(self, ctx):
        dot = to_dot(build_lts(a, ctx))
        assert dot.startswith("digraph")
        assert dot.rstrip().endswith("}")
        assert "doublecircle" in dot  # the Done state
        assert '[label="a"]' in dot

    def test_dot_is_deterministic(self, ctx):
        t = Par(a, b)
        assert to_dot(build_lts(t, ctx)) == to_dot(build_lts(t, ctx))
