"""Canonical normal forms for closed, ground process terms.

A term is rewritten into a *basic term*: a sorted, duplicate-free sum of
summands, each a ground action literal optionally followed by a basic
term.  The empty sum is deadlock.  Two closed ground terms are equal in
the equational theory exactly when their basic terms coincide, which is
what :func:`equal_terms` decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from .meadow import cached_hash, eval_quantity, memo_attr, quantity_literal
from .terms import (
    Action,
    ActionLiteral,
    Alt,
    CommMerge,
    DataAction,
    Deadlock,
    Encap,
    Guard,
    LeftMerge,
    OpenTerm,
    Par,
    ProcessTerm,
    ProcVar,
    Seq,
    SpecContext,
    free_process_vars,
    free_quantity_vars,
    inline_definitions,
)


class GuardChainMismatch(Exception):
    """Debug-mode disagreement between the direct data-equality route and
    the guard-chain route in a data communication merge."""


@cached_hash
@dataclass(frozen=True)
class Summand:
    """One alternative of a basic term; continuation None means successful
    termination."""

    action: ActionLiteral
    continuation: Optional["BasicTerm"] = None

    def sort_key(self):
        return memo_attr(self, "_key", self._compute_key)

    def _compute_key(self):
        if self.continuation is None:
            return (self.action.sort_key(), 0, ())
        return (self.action.sort_key(), 1, self.continuation.sort_key())

    def __str__(self) -> str:
        if self.continuation is None:
            return str(self.action)
        cont = self.continuation
        inner = str(cont)
        if len(cont.summands) != 1:
            inner = f"({inner})"
        return f"{self.action} . {inner}"


@cached_hash
@dataclass(frozen=True)
class BasicTerm:
    """A canonical normal form: sorted, duplicate-free tuple of summands."""

    summands: Tuple[Summand, ...]

    @staticmethod
    def of(summands) -> "BasicTerm":
        unique = {s: None for s in summands}
        return BasicTerm(tuple(sorted(unique, key=Summand.sort_key)))

    @property
    def is_deadlock(self) -> bool:
        return not self.summands

    def sort_key(self):
        return memo_attr(
            self, "_key", lambda: tuple(s.sort_key() for s in self.summands)
        )

    def __str__(self) -> str:
        if not self.summands:
            return "delta"
        return " + ".join(str(s) for s in self.summands)


def embed(bt: BasicTerm) -> ProcessTerm:
    """Turn a basic term back into a process term (sum of prefixed actions)."""
    if not bt.summands:
        return Deadlock()
    parts = []
    for s in bt.summands:
        act = s.action
        if act.args:
            node: ProcessTerm = DataAction(
                act.name, tuple(quantity_literal(v.as_fraction()) for v in act.args)
            )
        else:
            node = Action(act.name)
        if s.continuation is not None:
            node = Seq(node, embed(s.continuation))
        parts.append(node)
    out = parts[0]
    for p in parts[1:]:
        out = Alt(out, p)
    return out


# ---------------------------------------------------------------------------
# Head normal forms

# A head summand is (ActionLiteral, residual process term or None for
# successful termination).
HeadSummand = Tuple[ActionLiteral, Optional[ProcessTerm]]


def _check_closed_ground(t: ProcessTerm) -> None:
    fv = free_process_vars(t)
    if fv:
        raise OpenTerm(f"free process variables: {sorted(fv)}")
    qv = free_quantity_vars(t)
    if qv:
        raise OpenTerm(f"free quantity variables: {sorted(qv)}")


def _seq_residual(k: Optional[ProcessTerm], q: ProcessTerm) -> ProcessTerm:
    return q if k is None else Seq(k, q)


def _par_residual(
    k1: Optional[ProcessTerm], k2: Optional[ProcessTerm]
) -> Optional[ProcessTerm]:
    if k1 is None:
        return k2
    if k2 is None:
        return k1
    return Par(k1, k2)


def _eval_args(t: DataAction, ctx: SpecContext) -> ActionLiteral:
    vals = tuple(eval_quantity(q, {}, ctx.meadow) for q in t.args)
    return ActionLiteral(t.name, vals)


def _comm_summand(
    a1: ActionLiteral,
    k1: Optional[ProcessTerm],
    a2: ActionLiteral,
    k2: Optional[ProcessTerm],
    ctx: SpecContext,
    cache: dict,
    debug: bool,
) -> FrozenSet[HeadSummand]:
    """Synchronize two head summands, or drop them (deadlock)."""
    name = ctx.comm.gamma(a1.name, a2.name)
    if name is None or len(a1.args) != len(a2.args):
        return frozenset()
    residual = _par_residual(k1, k2)
    direct: FrozenSet[HeadSummand]
    if a1.args == a2.args:
        direct = frozenset({(ActionLiteral(name, a1.args), residual)})
    else:
        direct = frozenset()
    if debug and a1.args:
        chain = _guard_chain_route(a1, a2, name, residual, ctx, cache)
        if chain != direct:
            raise GuardChainMismatch(
                f"{a1} | {a2}: direct route {sorted(map(str, direct))} vs "
                f"guard chain {sorted(map(str, chain))}"
            )
    return direct


def _guard_chain_route(
    a1: ActionLiteral,
    a2: ActionLiteral,
    name: str,
    residual: Optional[ProcessTerm],
    ctx: SpecContext,
    cache: dict,
) -> FrozenSet[HeadSummand]:
    """Build the guard-chain term (u1-v1) -> (... -> e''(u1..un)) and take
    its head normal form, as a cross-check of the direct equality test."""
    from .meadow import QAdd, QNeg

    core: ProcessTerm = DataAction(
        name, tuple(quantity_literal(v.as_fraction()) for v in a1.args)
    )
    if residual is not None:
        core = Seq(core, residual)
    term = core
    for u, v in reversed(list(zip(a1.args, a2.args))):
        diff = QAdd(quantity_literal(u.as_fraction()), QNeg(quantity_literal(v.as_fraction())))
        term = Guard(diff, term)
    hnf = _hnf(term, ctx, cache, debug=False)
    # re-split prefixed actions back into (literal, residual) pairs
    return hnf


def _hnf(
    t: ProcessTerm, ctx: SpecContext, cache: dict, debug: bool
) -> FrozenSet[HeadSummand]:
    hit = cache.get(t)
    if hit is not None:
        return hit

    if isinstance(t, Deadlock):
        out: FrozenSet[HeadSummand] = frozenset()
    elif isinstance(t, Action):
        out = frozenset({(ActionLiteral(t.name), None)})
    elif isinstance(t, DataAction):
        out = frozenset({(_eval_args(t, ctx), None)})
    elif isinstance(t, Alt):
        out = _hnf(t.lhs, ctx, cache, debug) | _hnf(t.rhs, ctx, cache, debug)
    elif isinstance(t, Seq):
        out = frozenset(
            (a, _seq_residual(k, t.rhs)) for a, k in _hnf(t.lhs, ctx, cache, debug)
        )
    elif isinstance(t, Par):
        out = (
            _hnf(LeftMerge(t.lhs, t.rhs), ctx, cache, debug)
            | _hnf(LeftMerge(t.rhs, t.lhs), ctx, cache, debug)
            | _hnf(CommMerge(t.lhs, t.rhs), ctx, cache, debug)
        )
    elif isinstance(t, LeftMerge):
        out = frozenset(
            (a, t.rhs if k is None else Par(k, t.rhs))
            for a, k in _hnf(t.lhs, ctx, cache, debug)
        )
    elif isinstance(t, CommMerge):
        acc: set = set()
        left = _hnf(t.lhs, ctx, cache, debug)
        right = _hnf(t.rhs, ctx, cache, debug)
        for a1, k1 in left:
            for a2, k2 in right:
                acc |= _comm_summand(a1, k1, a2, k2, ctx, cache, debug)
        out = frozenset(acc)
    elif isinstance(t, Encap):
        out = frozenset(
            (a, k if k is None else Encap(t.hide, k))
            for a, k in _hnf(t.body, ctx, cache, debug)
            if a.name not in t.hide
        )
    elif isinstance(t, Guard):
        cond = eval_quantity(t.cond, {}, ctx.meadow)
        out = _hnf(t.body, ctx, cache, debug) if cond.is_zero else frozenset()
    elif isinstance(t, ProcVar):
        raise OpenTerm(f"free process variable: {t.name}")
    else:
        raise TypeError(f"not a process term: {t!r}")

    cache[t] = out
    return out


def head_normal_form(
    t: ProcessTerm, ctx: SpecContext, debug_guard_chain: bool = False
) -> FrozenSet[HeadSummand]:
    """The set of (action, residual) pairs whose sum equals t.

    A residual of None stands for successful termination.
    """
    t = inline_definitions(t, ctx, strict=False)
    _check_closed_ground(t)
    return _hnf(t, ctx, {}, debug_guard_chain)


def _normalize(
    t: ProcessTerm, ctx: SpecContext, hnf_cache: dict, norm_cache: dict, debug: bool
) -> BasicTerm:
    hit = norm_cache.get(t)
    if hit is not None:
        return hit
    summands = []
    for a, k in _hnf(t, ctx, hnf_cache, debug):
        cont = None if k is None else _normalize(k, ctx, hnf_cache, norm_cache, debug)
        summands.append(Summand(a, cont))
    out = BasicTerm.of(summands)
    norm_cache[t] = out
    return out


def normalize(
    t: ProcessTerm, ctx: SpecContext, debug_guard_chain: bool = False
) -> BasicTerm:
    """Rewrite a closed, ground term to its canonical basic term."""
    t = inline_definitions(t, ctx, strict=False)
    _check_closed_ground(t)
    return _normalize(t, ctx, {}, {}, debug_guard_chain)


def equal_terms(t1: ProcessTerm, t2: ProcessTerm, ctx: SpecContext) -> bool:
    """Decide equality of two closed ground terms via canonical forms."""
    return normalize(t1, ctx) == normalize(t2, ctx)


def is_atomic(t: ProcessTerm, ctx: SpecContext) -> bool:
    """Least atomic-action predicate: the normal form is a single summand
    that terminates immediately."""
    nf = normalize(t, ctx)
    return len(nf.summands) == 1 and nf.summands[0].continuation is None
