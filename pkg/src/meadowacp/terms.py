"""Process-term syntax over the two-sorted, data-enriched process signature.

Terms are immutable trees.  Atomic actions may carry a tuple of quantity
terms (data-handling actions); a plain named action is the 0-ary case.
Parallel composition comes in three flavours: full merge, left merge
(first step from the left operand) and communication merge (synchronized
first step, mediated by the communication function gamma).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .meadow import (
    MeadowKind,
    MeadowValue,
    QuantityTerm,
    QVar,
    cached_hash,
    free_quantity_vars_q,
    memo_attr,
)


class ProcessError(Exception):
    pass


class OpenTerm(ProcessError):
    """An operation requiring a closed, ground term met a free variable."""


class UndefinedName(ProcessError):
    """A process reference has no definition."""


class InvalidEncapSet(ProcessError):
    """An encapsulation set mentions names outside the alphabet."""


class ProcessTerm:
    __slots__ = ()


@cached_hash
@dataclass(frozen=True)
class Deadlock(ProcessTerm):
    pass


@cached_hash
@dataclass(frozen=True)
class Action(ProcessTerm):
    name: str


@cached_hash
@dataclass(frozen=True)
class DataAction(ProcessTerm):
    name: str
    args: Tuple[QuantityTerm, ...]


@cached_hash
@dataclass(frozen=True)
class Alt(ProcessTerm):
    lhs: ProcessTerm
    rhs: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class Seq(ProcessTerm):
    lhs: ProcessTerm
    rhs: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class Par(ProcessTerm):
    lhs: ProcessTerm
    rhs: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class LeftMerge(ProcessTerm):
    lhs: ProcessTerm
    rhs: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class CommMerge(ProcessTerm):
    lhs: ProcessTerm
    rhs: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class Encap(ProcessTerm):
    hide: FrozenSet[str]
    body: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class Guard(ProcessTerm):
    cond: QuantityTerm
    body: ProcessTerm


@cached_hash
@dataclass(frozen=True)
class ProcVar(ProcessTerm):
    name: str


@cached_hash
@dataclass(frozen=True)
class ActionLiteral:
    """A ground atomic action: a name plus evaluated data arguments."""

    name: str
    args: Tuple[MeadowValue, ...] = ()

    def sort_key(self):
        return memo_attr(
            self,
            "_key",
            lambda: (self.name, len(self.args), tuple(v.sort_key() for v in self.args)),
        )

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(v) for v in self.args)})"


# ---------------------------------------------------------------------------
# Communication function


class CommSpec:
    """The communication function gamma as an explicit partial map.

    Pairs absent from the map do not synchronize (their merge is deadlock).
    The map is stored exactly as given; :func:`validate_comm_spec` reports
    asymmetry and associativity-compatibility violations.
    """

    def __init__(self, mapping: Mapping[Tuple[str, str], str] = ()):
        self.mapping: Dict[Tuple[str, str], str] = dict(mapping)

    @staticmethod
    def symmetric(pairs: Mapping[Tuple[str, str], str]) -> "CommSpec":
        """Build a CommSpec with both orientations of every pair present."""
        mapping: Dict[Tuple[str, str], str] = {}
        for (a, b), c in pairs.items():
            mapping[(a, b)] = c
            mapping[(b, a)] = c
        return CommSpec(mapping)

    def gamma(self, a: str, b: str) -> Optional[str]:
        return self.mapping.get((a, b), self.mapping.get((b, a)))

    def __eq__(self, other) -> bool:
        return isinstance(other, CommSpec) and self.mapping == other.mapping

    def __repr__(self) -> str:
        return f"CommSpec({self.mapping!r})"


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_comm_spec(gamma: CommSpec, alphabet: Iterable[str]) -> ValidationReport:
    """Check gamma for symmetry and associativity-compatibility.

    Associativity treats undefined pairs as deadlock and deadlock as
    absorbing, so gamma*(gamma*(a,b),c) must equal gamma*(a,gamma*(b,c))
    for all triples over the alphabet.
    """
    report = ValidationReport()
    names = sorted(alphabet)
    for (a, b), c in sorted(gamma.mapping.items()):
        if gamma.mapping.get((b, a)) != c:
            report.violations.append(f"asymmetric at ({a},{b})")
    for a in names:
        for b in names:
            for c in names:
                ab = gamma.mapping.get((a, b))
                left = gamma.mapping.get((ab, c)) if ab is not None else None
                bc = gamma.mapping.get((b, c))
                right = gamma.mapping.get((a, bc)) if bc is not None else None
                if left != right:
                    report.violations.append(
                        f"associativity violation at ({a},{b},{c}): "
                        f"{left or 'delta'} != {right or 'delta'}"
                    )
    return report


# ---------------------------------------------------------------------------
# Specification context


@dataclass
class SpecContext:
    """A declared alphabet, communication function, meadow, named process
    definitions (non-recursive) and named encapsulation sets."""

    alphabet: FrozenSet[str]
    comm: CommSpec = field(default_factory=CommSpec)
    meadow: MeadowKind = field(default_factory=MeadowKind.rationals)
    definitions: Dict[str, ProcessTerm] = field(default_factory=dict)
    sets: Dict[str, FrozenSet[str]] = field(default_factory=dict)

    def encap(self, hide: Iterable[str], body: ProcessTerm) -> Encap:
        """Validated Encap constructor: hide must lie inside the alphabet."""
        h = frozenset(hide)
        extra = h - self.alphabet
        if extra:
            raise InvalidEncapSet(
                f"encapsulation set mentions unknown actions: {sorted(extra)}"
            )
        return Encap(h, body)

    def validate_term(self, t: ProcessTerm) -> None:
        """Raise if any Encap node in t steps outside the alphabet."""
        for node in iter_subterms(t):
            if isinstance(node, Encap) and not node.hide <= self.alphabet:
                raise InvalidEncapSet(
                    f"encapsulation set mentions unknown actions: "
                    f"{sorted(node.hide - self.alphabet)}"
                )


def iter_subterms(t: ProcessTerm):
    yield t
    if isinstance(t, (Alt, Seq, Par, LeftMerge, CommMerge)):
        yield from iter_subterms(t.lhs)
        yield from iter_subterms(t.rhs)
    elif isinstance(t, (Encap, Guard)):
        yield from iter_subterms(t.body)


def free_process_vars(t: ProcessTerm) -> FrozenSet[str]:
    out = set()
    for node in iter_subterms(t):
        if isinstance(node, ProcVar):
            out.add(node.name)
    return frozenset(out)


def free_quantity_vars(t: ProcessTerm) -> FrozenSet[str]:
    out = set()
    for node in iter_subterms(t):
        if isinstance(node, DataAction):
            for q in node.args:
                out |= free_quantity_vars_q(q)
        elif isinstance(node, Guard):
            out |= free_quantity_vars_q(node.cond)
    return frozenset(out)


def _map_children(t: ProcessTerm, f) -> ProcessTerm:
    if isinstance(t, (Deadlock, Action, DataAction, ProcVar)):
        return t
    if isinstance(t, Alt):
        return Alt(f(t.lhs), f(t.rhs))
    if isinstance(t, Seq):
        return Seq(f(t.lhs), f(t.rhs))
    if isinstance(t, Par):
        return Par(f(t.lhs), f(t.rhs))
    if isinstance(t, LeftMerge):
        return LeftMerge(f(t.lhs), f(t.rhs))
    if isinstance(t, CommMerge):
        return CommMerge(f(t.lhs), f(t.rhs))
    if isinstance(t, Encap):
        return Encap(t.hide, f(t.body))
    if isinstance(t, Guard):
        return Guard(t.cond, f(t.body))
    raise TypeError(f"not a process term: {t!r}")


def inline_definitions(
    t: ProcessTerm, ctx: SpecContext, strict: bool = True
) -> ProcessTerm:
    """Replace every reference to a named definition by its (inlined) body.

    With strict=True an undefined name raises UndefinedName; otherwise
    unknown ProcVar nodes are left in place (they are genuinely free
    process variables, e.g. in axiom schemas).
    """
    if isinstance(t, ProcVar):
        body = ctx.definitions.get(t.name)
        if body is None:
            if strict:
                raise UndefinedName(t.name)
            return t
        return inline_definitions(body, ctx, strict)
    return _map_children(t, lambda s: inline_definitions(s, ctx, strict))


def substitute_quantity(t: QuantityTerm, qmap: Mapping[str, QuantityTerm]) -> QuantityTerm:
    from .meadow import QAdd, QInv, QMul, QNeg

    if isinstance(t, QVar):
        return qmap.get(t.name, t)
    if isinstance(t, QAdd):
        return QAdd(substitute_quantity(t.lhs, qmap), substitute_quantity(t.rhs, qmap))
    if isinstance(t, QMul):
        return QMul(substitute_quantity(t.lhs, qmap), substitute_quantity(t.rhs, qmap))
    if isinstance(t, QNeg):
        return QNeg(substitute_quantity(t.arg, qmap))
    if isinstance(t, QInv):
        return QInv(substitute_quantity(t.arg, qmap))
    return t


def substitute(
    t: ProcessTerm,
    pmap: Mapping[str, ProcessTerm] = (),
    qmap: Mapping[str, QuantityTerm] = (),
) -> ProcessTerm:
    """Simultaneously substitute process variables and quantity variables."""
    pmap = dict(pmap)
    qmap = dict(qmap)

    def go(s: ProcessTerm) -> ProcessTerm:
        if isinstance(s, ProcVar):
            return pmap.get(s.name, s)
        if isinstance(s, DataAction) and qmap:
            return DataAction(
                s.name, tuple(substitute_quantity(q, qmap) for q in s.args)
            )
        if isinstance(s, Guard) and qmap:
            return Guard(substitute_quantity(s.cond, qmap), go(s.body))
        return _map_children(s, go)

    return go(t)
