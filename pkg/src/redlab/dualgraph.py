"""Dual graphs of minimal resolutions of normal surface singularities.

Vertices are exceptional curves, weights are negated self-intersections
(so a weight-n vertex is a curve with self-intersection -n), and edges
record transversal intersections.  Valid graphs are simple, connected,
have all weights >= 2 (a minimal resolution has no (-1)-curves), and a
negative definite intersection matrix.

The discrepancy a_i of curve E_i is the coefficient in
-K_S = g*(-K) + sum a_i E_i, obtained from the adjunction equations

    sum_j a_j (E_j . E_i) = -n_i + 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .hjcf import HJString, hj_eval, minor_det, uv_sequences
from .linalg import Matrix, is_negative_definite, solve_linear


class GraphError(ValueError):
    """Base class for dual-graph validation failures."""


class WeightTooSmall(GraphError):
    """Some vertex weight is below 2, i.e. the resolution is not minimal."""


class NotConnected(GraphError):
    """The graph is empty or has more than one connected component."""


class Multigraph(GraphError):
    """A self-loop or a repeated edge was supplied."""


class NotNegativeDefinite(GraphError):
    """The intersection matrix is not negative definite, so the
    configuration is not contractible."""


class NegativeDiscrepancy(GraphError):
    """The adjunction system produced a negative coefficient; the input is
    not the minimal resolution of a normal singularity with nef -K."""


class SingularityClass(enum.Enum):
    CANONICAL = "Canonical"
    LOG_TERMINAL = "LogTerminal"
    NON_LOG_TERMINAL = "NonLogTerminal"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DualGraph:
    """Validated weighted dual graph.  Build through :func:`build_graph`."""

    vertices: tuple[tuple[int, int], ...]  # (id, weight) in construction order
    edges: frozenset[tuple[int, int]]      # normalized (lo, hi) pairs

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def weight(self) -> Mapping[int, int]:
        return dict(self.vertices)

    @cached_property
    def adjacency(self) -> Mapping[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.ids}
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(nbs)) for v, nbs in adj.items()}

    def degree(self, vid: int) -> int:
        return len(self.adjacency[vid])

    def __len__(self) -> int:
        return len(self.vertices)


def _normalize_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def build_graph(vertices: Iterable[tuple[int, int]],
                edges: Iterable[tuple[int, int]]) -> DualGraph:
    """Validate raw vertex/edge data and return a DualGraph.

    Raises WeightTooSmall, Multigraph, NotConnected or NotNegativeDefinite
    as appropriate; malformed input (duplicate or unknown ids) raises a
    plain GraphError.
    """
    verts = tuple((int(i), int(w)) for i, w in vertices)
    if not verts:
        raise NotConnected("graph has no vertices")
    ids = [i for i, _ in verts]
    if len(set(ids)) != len(ids):
        raise GraphError("duplicate vertex ids")
    id_set = set(ids)
    bad = [(i, w) for i, w in verts if w < 2]
    if bad:
        raise WeightTooSmall(f"vertex {bad[0][0]} has weight {bad[0][1]} < 2")
    seen: set[tuple[int, int]] = set()
    for a, b in edges:
        a, b = int(a), int(b)
        if a not in id_set or b not in id_set:
            raise GraphError(f"edge ({a},{b}) references an unknown vertex")
        if a == b:
            raise Multigraph(f"self-loop at vertex {a}")
        e = _normalize_edge(a, b)
        if e in seen:
            raise Multigraph(f"repeated edge {e}")
        seen.add(e)
    g = DualGraph(vertices=verts, edges=frozenset(seen))
    # connectivity
    stack = [ids[0]]
    reached = {ids[0]}
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(ids):
        raise NotConnected("graph is not connected")
    if not is_negative_definite(intersection_matrix(g)):
        raise NotNegativeDefinite("intersection matrix is not negative definite")
    return g


def intersection_matrix(g: DualGraph) -> Matrix:
    """Diagonal -n_i, off-diagonal 1 exactly on edges, in vertex order."""
    idx = {v: i for i, v in enumerate(g.ids)}
    n = len(g)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, (_, w) in enumerate(g.vertices):
        rows[i][i] = Fraction(-w)
    one = Fraction(1)
    for a, b in g.edges:
        ia, ib = idx[a], idx[b]
        rows[ia][ib] = rows[ib][ia] = one
    return Matrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class DiscrepancyVector:
    """Map from vertex id to its discrepancy, kept in vertex order."""

    values: tuple[tuple[int, Fraction], ...]

    @cached_property
    def _by_id(self) -> Mapping[int, Fraction]:
        return dict(self.values)

    def __getitem__(self, vid: int) -> Fraction:
        return self._by_id[vid]

    def __iter__(self):
        return iter(self.values)

    def as_tuple(self) -> tuple[Fraction, ...]:
        return tuple(x for _, x in self.values)


def discrepancies(g: DualGraph) -> DiscrepancyVector:
    """Exact solution of M . a = -(n_1 - 2, ..., n_l - 2)."""
    m = intersection_matrix(g)
    rhs = [2 - w for _, w in g.vertices]
    a = solve_linear(m, rhs)
    for (vid, _), x in zip(g.vertices, a):
        if x < 0:
            raise NegativeDiscrepancy(f"vertex {vid} has discrepancy {x} < 0")
    return DiscrepancyVector(tuple((vid, x) for (vid, _), x in zip(g.vertices, a)))


def classify(d: DiscrepancyVector) -> SingularityClass:
    """Canonical when all a_i = 0, log terminal when all a_i < 1."""
    vals = d.as_tuple()
    if all(x == 0 for x in vals):
        return SingularityClass.CANONICAL
    if all(x < 1 for x in vals):
        return SingularityClass.LOG_TERMINAL
    return SingularityClass.NON_LOG_TERMINAL


# ---------------------------------------------------------------------------
# shape recognition


@dataclass(frozen=True)
class TypeA:
    """A chain; ``order`` lists the vertex ids along the chosen orientation."""

    string: HJString
    order: tuple[int, ...]


@dataclass(frozen=True)
class TypeD:
    """Central vertex of weight b carrying two weight-2 leaves and one arm.

    ``order`` is (center, arm outward..., leaf, leaf), matching the layout
    of the closed-form discrepancies.
    """

    b: int
    arm: HJString
    order: tuple[int, ...]


@dataclass(frozen=True)
class TypeBracket:
    """Star <b; q,q1; q',q1'>: center of weight b, one weight-2 leaf, two arms.

    Arms are read outward from the center and sorted by (q, q1);
    ``order`` is (center, leaf, arm1..., arm2...).
    """

    b: int
    arm1: HJString
    arm2: HJString
    order: tuple[int, ...]


@dataclass(frozen=True)
class Other:
    """Any valid graph matching none of the listed shapes."""


GraphShape = TypeA | TypeD | TypeBracket | Other


def _chain_order(g: DualGraph) -> tuple[int, ...]:
    if len(g) == 1:
        return (g.ids[0],)
    ends = sorted(v for v in g.ids if g.degree(v) == 1)
    start = ends[0]
    order = [start]
    prev = None
    cur = start
    while len(order) < len(g):
        nxt = [w for w in g.adjacency[cur] if w != prev][0]
        order.append(nxt)
        prev, cur = cur, nxt
    fwd = tuple(order)
    ws = tuple(g.weight[v] for v in fwd)
    rev = fwd[::-1]
    ws_rev = ws[::-1]
    if ws_rev < ws or (ws_rev == ws and rev[0] < fwd[0]):
        return rev
    return fwd


def recognize_shape(g: DualGraph) -> GraphShape:
    """Match the graph against the chain, D and bracket star shapes."""
    n = len(g)
    if len(g.edges) != n - 1:
        return Other()  # contains a cycle
    degs = {v: g.degree(v) for v in g.ids}
    if any(d > 3 for d in degs.values()):
        return Other()
    centers = [v for v in g.ids if degs[v] == 3]
    if not centers:
        order = _chain_order(g)
        return TypeA(HJString(tuple(g.weight[v] for v in order)), order)
    if len(centers) != 1:
        return Other()
    c = centers[0]
    branches: list[tuple[int, ...]] = []
    for nb in g.adjacency[c]:
        path = [nb]
        prev, cur = c, nb
        while True:
            nxt = [w for w in g.adjacency[cur] if w != prev]
            if not nxt:
                break
            path.append(nxt[0])
            prev, cur = cur, nxt[0]
        branches.append(tuple(path))
    singles = [p for p in branches if len(p) == 1 and g.weight[p[0]] == 2]
    if len(singles) >= 2:
        singles.sort(key=lambda p: p[0])
        leaves = singles[:2]
        arm = next(p for p in branches if p not in leaves)
        order = (c, *arm, leaves[0][0], leaves[1][0])
        return TypeD(g.weight[c], HJString(tuple(g.weight[v] for v in arm)), order)
    if len(singles) == 1:
        leaf = singles[0]
        arms = [p for p in branches if p != leaf]
        strung = [(HJString(tuple(g.weight[v] for v in p)), p) for p in arms]
        strung.sort(key=lambda sp: (hj_eval(sp[0]), sp[0].weights, sp[1]))
        (s1, p1), (s2, p2) = strung
        order = (c, leaf[0], *p1, *p2)
        return TypeBracket(g.weight[c], s1, s2, order)
    return Other()


def d_type_closed_form(b: int, arm: HJString | Iterable[int]
                       ) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed-form discrepancies (a_0, a_1, a_l, a_tip) of the D shape.

    With q/q1 the fraction of the arm and D = (b-1)q - q1:
    a_0 = 1 - 1/D, a_1 = 1 - (b-1)/D, the two leaves get a_0 / 2, and for
    arms of length >= 2 the far end is a_l = 1 - ((b-1)q_l - q_{1,l})/D
    with q_l, q_{1,l} the corresponding minor determinants.
    """
    if b < 2:
        raise ValueError("central weight must be at least 2")
    arm = arm if isinstance(arm, HJString) else HJString(tuple(arm))
    data = uv_sequences(arm)
    den = (b - 1) * data.q - data.q1
    a0 = 1 - Fraction(1, den)
    a1 = 1 - Fraction(b - 1, den)
    l = len(arm)
    if l >= 2:
        ql = minor_det(arm, {l})
        q1l = minor_det(arm, {1, l})
        al = 1 - Fraction((b - 1) * ql - q1l, den)
    else:
        al = a1
    return a0, a1, al, a0 / 2


# ---------------------------------------------------------------------------
# convenience builders


def chain_graph(weights: Iterable[int]) -> DualGraph:
    """Chain with vertex ids 1..l in string order."""
    ws = list(weights)
    verts = [(i + 1, w) for i, w in enumerate(ws)]
    edges = [(i, i + 1) for i in range(1, len(ws))]
    return build_graph(verts, edges)


def d_graph(b: int, arm: HJString | Iterable[int]) -> DualGraph:
    """D shape: id 0 center (weight b), 1..l the arm, l+1 and l+2 the leaves."""
    ws = list(arm.weights if isinstance(arm, HJString) else arm)
    l = len(ws)
    verts = [(0, b)] + [(i + 1, w) for i, w in enumerate(ws)] + [(l + 1, 2), (l + 2, 2)]
    edges = [(0, l + 1), (0, l + 2), (0, 1)] + [(i, i + 1) for i in range(1, l)]
    return build_graph(verts, edges)


def bracket_graph(b: int, arm1: HJString | Iterable[int],
                  arm2: HJString | Iterable[int]) -> DualGraph:
    """Bracket star: id 0 center (weight b), 1 the weight-2 leaf, then the
    two arms outward (ids 2..k and k+1..l)."""
    w1 = list(arm1.weights if isinstance(arm1, HJString) else arm1)
    w2 = list(arm2.weights if isinstance(arm2, HJString) else arm2)
    verts = [(0, b), (1, 2)]
    verts += [(2 + i, w) for i, w in enumerate(w1)]
    verts += [(2 + len(w1) + i, w) for i, w in enumerate(w2)]
    edges = [(0, 1), (0, 2)] + [(2 + i, 3 + i) for i in range(len(w1) - 1)]
    s = 2 + len(w1)
    edges += [(0, s)] + [(s + i, s + i + 1) for i in range(len(w2) - 1)]
    return build_graph(verts, edges)


# ---------------------------------------------------------------------------
# JSON graph files


def graph_to_json(g: DualGraph) -> dict:
    return {
        "vertices": [{"id": i, "weight": w} for i, w in g.vertices],
        "edges": [[a, b] for a, b in sorted(g.edges)],
    }


def graph_from_json(obj: dict) -> DualGraph:
    try:
        verts = [(v["id"], v["weight"]) for v in obj["vertices"]]
        edges = [(e[0], e[1]) for e in obj["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    return build_graph(verts, edges)
