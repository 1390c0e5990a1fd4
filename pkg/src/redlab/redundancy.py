"""Redundant points and redundant blow-ups on curve configurations.

The negative part of the Zariski decomposition of -K on a minimal
resolution is N = sum a_i E_i with a_i the discrepancies.  A point p is
redundant when mult_p N >= 1; blowing it up replaces N by the pulled-back
divisor minus the exceptional curve, so the new curve enters with
coefficient mult_p N - 1 and self-intersection -1 while every curve
through p loses 1 from its self-intersection.

Multiplicity is purely combinatorial here: at an intersection point it is
the sum of the two incident coefficients, at a general point of a single
curve it is that curve's coefficient.  A curve with coefficient >= 1 has
infinitely many redundant points; the configuration represents them by a
single generic marker per curve, re-derived after every blow-up.

``enumerate_sequences`` explores chains of infinitely near blow-ups: after
the first blow-up only redundant points lying on the newest exceptional
curve are followed.  Along such a chain the multiplicity strictly
decreases by 1 - a of the followed curve and the decrements grow, which is
what makes the depth bound max_p M(p) exact in the log terminal case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .dualgraph import (DualGraph, SingularityClass, TypeA, classify,
                        discrepancies, recognize_shape)
from .hjcf import HJString, uv_sequences


class NotRedundant(ValueError):
    """Blow-up requested at a point of multiplicity < 1."""


class UnboundedAtPoint(ValueError):
    """M(p) is undefined because an incident coefficient is >= 1."""


class IndexOutOfRange(IndexError):
    """Chain position k outside 1..l-1."""


@dataclass(frozen=True, order=True)
class IntersectionPoint:
    """The transversal intersection of curves i and j (i < j)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("an intersection point needs two distinct curves")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    def curves(self) -> tuple[int, int]:
        return (self.i, self.j)


@dataclass(frozen=True, order=True)
class GenericPoint:
    """A general smooth point of a single curve (marker for the whole
    one-parameter family of such points)."""

    curve: int


Location = IntersectionPoint | GenericPoint


@dataclass(frozen=True)
class RedundantPoint:
    location: Location
    mult: Fraction


@dataclass(frozen=True)
class Curve:
    id: int
    coeff: Fraction
    self_int: int


@dataclass(frozen=True)
class CurveConfig:
    """Immutable snc configuration of rational curves with coefficients."""

    curves: tuple[Curve, ...]
    incidences: frozenset[tuple[int, int]]
    origin: DualGraph | None = None

    @cached_property
    def by_id(self) -> Mapping[int, Curve]:
        return {c.id: c for c in self.curves}

    def coeff(self, cid: int) -> Fraction:
        return self.by_id[cid].coeff

    def next_id(self) -> int:
        return max(c.id for c in self.curves) + 1

    def meet(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.incidences


def negative_part(g: DualGraph) -> CurveConfig:
    """Initial configuration: the exceptional curves weighted by their
    discrepancies, with self-intersections -n_i."""
    d = discrepancies(g)
    curves = tuple(Curve(vid, d[vid], -w) for vid, w in g.vertices)
    return CurveConfig(curves=curves, incidences=frozenset(g.edges), origin=g)


def point_multiplicity(c: CurveConfig, loc: Location) -> Fraction:
    if isinstance(loc, IntersectionPoint):
        if (loc.i, loc.j) not in c.incidences:
            raise ValueError(f"curves {loc.i} and {loc.j} do not meet")
        return c.coeff(loc.i) + c.coeff(loc.j)
    return c.coeff(loc.curve)


def redundant_points(c: CurveConfig) -> list[RedundantPoint]:
    """All intersection points of multiplicity >= 1, plus one generic marker
    for every curve of coefficient >= 1.  Sorted for determinism."""
    out: list[RedundantPoint] = []
    for a, b in sorted(c.incidences):
        m = c.coeff(a) + c.coeff(b)
        if m >= 1:
            out.append(RedundantPoint(IntersectionPoint(a, b), m))
    for cv in c.curves:
        if cv.coeff >= 1:
            out.append(RedundantPoint(GenericPoint(cv.id), cv.coeff))
    return out


def blow_up(c: CurveConfig, p: RedundantPoint | Location) -> CurveConfig:
    """Blow up at a redundant point.

    The exceptional curve enters with coefficient mult - 1 and
    self-intersection -1; curves through the point drop by 1 in
    self-intersection and become incident to it, and an intersection pair
    is separated.
    """
    loc = p.location if isinstance(p, RedundantPoint) else p
    mult = point_multiplicity(c, loc)
    if mult < 1:
        raise NotRedundant(f"multiplicity {mult} < 1 at {loc}")
    new_id = c.next_id()
    through = loc.curves() if isinstance(loc, IntersectionPoint) else (loc.curve,)
    curves = tuple(
        Curve(cv.id, cv.coeff, cv.self_int - 1) if cv.id in through else cv
        for cv in c.curves
    ) + (Curve(new_id, mult - 1, -1),)
    inc = set(c.incidences)
    if isinstance(loc, IntersectionPoint):
        inc.remove((loc.i, loc.j))
    for t in through:
        inc.add((min(t, new_id), max(t, new_id)))
    return CurveConfig(curves=curves, incidences=frozenset(inc), origin=c.origin)


def blowup_depth_bound(c: CurveConfig, p: RedundantPoint | IntersectionPoint) -> int:
    """M(p): the length of the longest chain of blow-ups over p.

    For an intersection point of curves with coefficients a, a' < 1 and
    multiplicity m >= 1, following one branch subtracts 1 - a each step, so
    the branch supports floor((m-1)/(1-a)) + 1 blow-ups; M(p) is the larger
    of the two branch counts.
    """
    loc = p.location if isinstance(p, RedundantPoint) else p
    if not isinstance(loc, IntersectionPoint):
        raise TypeError("M(p) is defined at intersection points only")
    mult = point_multiplicity(c, loc)
    if mult < 1:
        raise NotRedundant(f"multiplicity {mult} < 1 at {loc}")
    best = 0
    for cid in loc.curves():
        a = c.coeff(cid)
        if a >= 1:
            raise UnboundedAtPoint(f"curve {cid} has coefficient {a} >= 1")
        best = max(best, (mult - 1) // (1 - a) + 1)
    return int(best)


@dataclass(frozen=True)
class SequenceNode:
    """One enumerated blow-up: performed at ``depth`` (1-based along its
    chain) at ``location`` with the recorded multiplicity."""

    depth: int
    location: Location
    mult: Fraction


@dataclass(frozen=True)
class SequenceReport:
    unbounded: bool
    max_length: int | None          # None exactly when unbounded
    reached_depth: int              # deepest enumerated chain (capped at bound)
    depth_bound: int
    hit_bound: bool                 # some chain was cut off at depth_bound
    m_values: tuple[tuple[IntersectionPoint, int], ...]
    sequence_count: int             # ordered sequences enumerated (tree nodes)
    tree: tuple[SequenceNode, ...]  # depth-first preorder

    def m_value_map(self) -> dict[IntersectionPoint, int]:
        return dict(self.m_values)


def _touches(loc: Location, cid: int) -> bool:
    if isinstance(loc, IntersectionPoint):
        return cid in (loc.i, loc.j)
    return loc.curve == cid


def enumerate_sequences(c: CurveConfig, depth_bound: int) -> SequenceReport:
    """Exhaustive bounded search of blow-up chains.

    Level 0 branches over every redundant point of the configuration;
    deeper levels branch only over redundant points on the exceptional
    curve created one step before (infinitely near points).  When a
    coefficient >= 1 is present the origin is not log terminal and no
    finite bound exists: the report says unbounded and the bounded tree
    only witnesses that chains keep extending up to the depth bound.
    """
    if depth_bound < 0:
        raise ValueError("depth bound must be nonnegative")
    if c.origin is not None:
        unbounded = classify(discrepancies(c.origin)) is SingularityClass.NON_LOG_TERMINAL
    else:
        unbounded = any(cv.coeff >= 1 for cv in c.curves)
    m_values = []
    for p in redundant_points(c):
        loc = p.location
        if isinstance(loc, IntersectionPoint):
            if c.coeff(loc.i) < 1 and c.coeff(loc.j) < 1:
                m_values.append((loc, blowup_depth_bound(c, loc)))

    nodes: list[SequenceNode] = []
    state = {"reached": 0, "count": 0, "hit": False}

    def explore(cfg: CurveConfig, depth: int, newest: int | None) -> None:
        if depth >= depth_bound:
            return
        pts = redundant_points(cfg)
        if newest is not None:
            pts = [p for p in pts if _touches(p.location, newest)]
        for p in pts:
            d = depth + 1
            state["count"] += 1
            if d > state["reached"]:
                state["reached"] = d
            nodes.append(SequenceNode(d, p.location, p.mult))
            if d == depth_bound:
                state["hit"] = True
            else:
                explore(blow_up(cfg, p), d, cfg.next_id())

    explore(c, 0, None)
    reached = state["reached"]
    return SequenceReport(
        unbounded=unbounded,
        max_length=None if unbounded else reached,
        reached_depth=reached,
        depth_bound=depth_bound,
        hit_bound=state["hit"],
        m_values=tuple(m_values),
        sequence_count=state["count"],
        tree=tuple(nodes),
    )


def chain_redundant_at(s: HJString | Iterable[int], k: int) -> bool:
    """Whether the k-th intersection point of a chain is redundant.

    Integer criterion: q >= u_k + u_{k+1} + v_k + v_{k+1}, equivalent to
    a_k + a_{k+1} >= 1 since a_i = 1 - (u_i + v_i)/q.
    """
    data = uv_sequences(s)
    l = len(data.string)
    if not 1 <= k <= l - 1:
        raise IndexOutOfRange(f"k must lie in 1..{l - 1}, got {k}")
    u, v = data.u, data.v
    return data.q >= u[k] + u[k + 1] + v[k] + v[k + 1]


_FREE_SPORADIC = {(2, 2, 3, 2), (2, 3, 2), (2, 4)}


def _chain_is_free(ws: tuple[int, ...]) -> bool:
    for cand in (ws, ws[::-1]):
        if len(cand) == 1 and cand[0] >= 3:
            return True
        if all(w == 2 for w in cand[:-1]) and cand[-1] == 3:
            return True
        if cand in _FREE_SPORADIC:
            return True
    return False


def is_redundancy_free(g: DualGraph) -> bool:
    """Membership in the classified list of graphs without redundant points.

    True exactly for the canonical graphs (all weights 2; negative
    definiteness already restricts those to the ADE shapes) and the chains
    [2,...,2,3], [2,2,3,2], [2,3,2], [2,4] and [n] (n >= 3), up to
    reversal.  Decides by pattern matching only; no discrepancies are
    computed, so it can serve as one side of the verification sweeps.
    """
    if all(w == 2 for _, w in g.vertices):
        return True
    shape = recognize_shape(g)
    if not isinstance(shape, TypeA):
        return False
    return _chain_is_free(shape.string.weights)
