"""Tests for the .acpm specification parser and pretty printer."""

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
    MeadowKind,
    Par,
    QAdd,
    QConst,
    QInv,
    QMul,
    QNeg,
    QOne,
    QVar,
    QZero,
    Seq,
    SpecError,
    TermGen,
    default_context,
    parse_spec,
    parse_term,
    pretty_term,
)


class TestParseSpec:
    def test_full_spec(self, sample_spec_text):
        ctx = parse_spec(sample_spec_text)
        assert ctx.alphabet == frozenset({"a", "b", "c"})
        assert ctx.comm.gamma("a", "b") == "c"
        assert ctx.comm.gamma("b", "a") == "c"
        assert ctx.meadow == MeadowKind.prime_field(3)
        assert ctx.sets["H"] == frozenset({"a", "b"})
        # definitions are stored unevaluated
        assert ctx.definitions["P"] == Alt(Seq(Action("a"), Action("b")), Deadlock())

    def test_meadow_variants(self):
        assert parse_spec("act a; meadow Q0;").meadow == MeadowKind.rationals()
        assert parse_spec("act a; meadow F5;").meadow == MeadowKind.prime_field(5)
        assert parse_spec("act a; meadow trivial;").meadow == MeadowKind.trivial()

    def test_default_meadow_is_rationals(self):
        assert parse_spec("act a;").meadow == MeadowKind.rationals()

    def test_comments_are_ignored(self):
        ctx = parse_spec("# a comment\nact a; # trailing\n")
        assert ctx.alphabet == frozenset({"a"})

    def test_errors_carry_location(self):
        with pytest.raises(SpecError) as exc:
            parse_spec("act a;\ncomm a | z = a;", filename="demo.acpm")
        assert "demo.acpm:2:" in str(exc.value)
        assert "unknown action 'z'" in str(exc.value)

    def test_non_prime_modulus_reported_at_declaration(self):
        with pytest.raises(SpecError) as exc:
            parse_spec("act a; meadow F4;")
        assert "not prime" in str(exc.value)

    def test_asymmetry_cannot_arise_but_associativity_can(self):
        # comm declarations are symmetrized automatically, so the only
        # rejectable shape is an associativity clash
        with pytest.raises(SpecError) as exc:
            parse_spec("act a, b, c, d, e; comm a | b = c; comm c | d = e;")
        assert "associativity" in str(exc.value)

    def test_duplicate_process_rejected(self):
        with pytest.raises(SpecError) as exc:
            parse_spec("act a; proc P = a; proc P = a;")
        assert "already defined" in str(exc.value)

    def test_set_must_be_subset_of_alphabet(self):
        with pytest.raises(SpecError):
            parse_spec("act a; set H = {a, z};")


class TestParseTerm:
    def test_precedence_alt_weakest_seq_strongest(self, ctx):
        a, b, c = Action("a"), Action("b"), Action("c")
        assert parse_term("a + b . c", ctx) == Alt(a, Seq(b, c))
        assert parse_term("a . b + c", ctx) == Alt(Seq(a, b), c)
        assert parse_term("a || b . c", ctx) == Par(a, Seq(b, c))
        assert parse_term("a + b || c", ctx) == Alt(a, Par(b, c))
        assert parse_term("(a + b) . c", ctx) == Seq(Alt(a, b), c)

    def test_parallel_operators_do_not_mix(self, ctx):
        with pytest.raises(SpecError) as exc:
            parse_term("a || b |_ c", ctx)
        assert "parentheses" in str(exc.value)
        # parenthesized mixing is fine
        parse_term("(a || b) |_ c", ctx)

    def test_left_and_comm_merge(self, ctx):
        a, b = Action("a"), Action("b")
        assert parse_term("a |_ b", ctx) == LeftMerge(a, b)
        assert parse_term("a | b", ctx) == CommMerge(a, b)

    def test_guard_and_encap(self, ctx):
        t = parse_term("[u - u] -> a", ctx)
        assert t == Guard(QAdd(QVar("u"), QNeg(QVar("u"))), Action("a"))
        t = parse_term("encap({a, b}, a + c)", ctx)
        assert t == Encap(frozenset({"a", "b"}), Alt(Action("a"), Action("c")))

    def test_quantity_sugar(self, ctx):
        t = parse_term("a(2/2)", ctx)
        assert t == DataAction(
            "a", (QMul(QConst(Fraction(2)), QInv(QConst(Fraction(2)))),)
        )
        assert parse_term("a(0, 1)", ctx) == DataAction("a", (QZero(), QOne()))
        assert parse_term("a(-1)", ctx) == DataAction("a", (QNeg(QOne()),))

    def test_named_references_resolve(self, sample_spec_text):
        from meadowacp import ProcVar

        ctx = parse_spec(sample_spec_text)
        term = parse_term("encap(H, P)", ctx)
        assert term == Encap(frozenset({"a", "b"}), ProcVar("P"))

    def test_unknown_name_reported(self, ctx):
        with pytest.raises(SpecError) as exc:
            parse_term("a + zz", ctx)
        assert "unknown action or process 'zz'" in str(exc.value)

    def test_trailing_input_rejected(self, ctx):
        with pytest.raises(SpecError):
            parse_term("a b", ctx)


class TestRoundTrip:
    def test_pretty_parse_identity_on_random_terms(self, ctx):
        rng = random.Random(5)
        gen = TermGen(ctx, rng, max_depth=4)
        for i in range(300):
            t = gen.term()
            if i % 5 == 0:
                t = Encap(frozenset({"a"}), t)
            assert parse_term(pretty_term(t), ctx) == t

    def test_pretty_examples(self, ctx):
        assert pretty_term(parse_term("a + b . c", ctx)) == "a + b . c"
        assert pretty_term(parse_term("(a + b) . c", ctx)) == "(a + b) . c"
        assert pretty_term(parse_term("[0] -> a(2)", ctx)) == "[0] -> a(2)"
