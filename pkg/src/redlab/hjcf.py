"""Hirzebruch-Jung continued fractions and their minor-determinant sequences.

A weight string [n_1, ..., n_l] with every n_i >= 2 encodes the fraction

    q/q1 = n_1 - 1/(n_2 - 1/(... - 1/n_l))

and, equivalently, the chain of curves with self-intersections -n_i whose
intersection matrix is M(-n_1, ..., -n_l).  Writing q_{b_1,...,b_m} for the
absolute determinant of M with rows/columns b_1, ..., b_m deleted, the two
minor sequences are

    u_s = q_{s,...,l}   (u_0 = 0, u_1 = 1, u_{l+1} = q)
    v_s = q_{1,...,s}   (v_l = 1, v_{l+1} = 0, v_0 = q, v_1 = q1).

Both are stored as full padded arrays indexed 0..l+1; the off-by-one
hazards of these conventions are the main reason the padding is kept
explicit rather than recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .linalg import Matrix, det


class BadFraction(ValueError):
    """Arguments do not describe a valid fraction q/q1 with 0 < q1 < q coprime."""


@dataclass(frozen=True)
class HJString:
    """An ordered weight string [n_1, ..., n_l], every n_i >= 2."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if len(ws) < 1:
            raise ValueError("weight string must be nonempty")
        if any(w < 2 for w in ws):
            raise ValueError("every weight must be at least 2")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def reversed_(self) -> "HJString":
        return HJString(self.weights[::-1])

    def normalized(self) -> "HJString":
        """The lexicographically smaller of the string and its reversal.

        A string and its reversal describe the same singularity; no other
        operation canonicalizes, since the u/v indexing depends on the
        orientation.
        """
        rev = self.weights[::-1]
        return HJString(min(self.weights, rev))

    def __str__(self) -> str:
        return "[" + ",".join(str(w) for w in self.weights) + "]"


@dataclass(frozen=True)
class HJData:
    """A weight string together with q, q1 and the padded u/v sequences."""

    string: HJString
    q: int
    q1: int
    u: tuple[int, ...]
    v: tuple[int, ...]


def _as_string(s) -> HJString:
    return s if isinstance(s, HJString) else HJString(tuple(s))


def uv_sequences(s: HJString | Iterable[int]) -> HJData:
    """Compute u and v by the three-term recurrences.

    u_{i+1} = n_i u_i - u_{i-1} ascending, v_{i-1} = n_i v_i - v_{i+1}
    descending, with the boundary values from the definitions.
    """
    s = _as_string(s)
    ws = s.weights
    l = len(ws)
    u = [0] * (l + 2)
    u[1] = 1
    for i in range(1, l + 1):
        u[i + 1] = ws[i - 1] * u[i] - u[i - 1]
    v = [0] * (l + 2)
    v[l] = 1
    for i in range(l, 0, -1):
        v[i - 1] = ws[i - 1] * v[i] - v[i + 1]
    return HJData(string=s, q=u[l + 1], q1=v[1], u=tuple(u), v=tuple(v))


def hj_eval(s: HJString | Iterable[int]) -> tuple[int, int]:
    """Evaluate the continued fraction of a weight string as a coprime pair (q, q1)."""
    data = uv_sequences(s)
    return data.q, data.q1


def hj_expand(q: int, q1: int) -> HJString:
    """Expand a coprime pair 0 < q1 < q into its weight string.

    Repeatedly takes n = ceil(a/b) and replaces (a, b) by (b, n*b - a);
    the second component strictly decreases, so this terminates.
    """
    if q1 <= 0 or q1 >= q:
        raise BadFraction(f"need 0 < q1 < q, got q={q}, q1={q1}")
    if gcd(q, q1) != 1:
        raise BadFraction(f"q={q} and q1={q1} are not coprime")
    out = []
    a, b = q, q1
    while b:
        n = -(-a // b)
        out.append(n)
        a, b = b, n * b - a
    return HJString(tuple(out))


def minor_det(s: HJString | Iterable[int], deleted: Iterable[int]) -> int:
    """|det| of the chain intersection matrix with the named rows/columns deleted.

    Indices are 1-based positions in the string; deleting everything gives 1.
    This works directly on the submatrix and is the independent cross-check
    for the u/v recurrences.
    """
    s = _as_string(s)
    l = len(s)
    dels = set(deleted)
    if not dels <= set(range(1, l + 1)):
        raise ValueError(f"deleted indices must lie in 1..{l}")
    keep = [i for i in range(1, l + 1) if i not in dels]
    if not keep:
        return 1
    ws = s.weights
    n = len(keep)
    rows = [[0] * n for _ in range(n)]
    for a, ia in enumerate(keep):
        rows[a][a] = -ws[ia - 1]
        if a + 1 < n and keep[a + 1] == ia + 1:
            rows[a][a + 1] = rows[a + 1][a] = 1
    return abs(int(det(Matrix.from_rows(rows))))
