"""Reference discrepancy data for the classified log terminal families.

Two small chain tables record the exact discrepancy vectors on either side
of the redundancy boundary: the chains whose minimal resolution carries no
redundant point, and the minimal chains that do.  The bracket table lists
the fifteen star families <b; q,q1; q',q1'> with the discrepancy of every
curve as a linear fractional function of the central weight b; an entry
(p, r, P, R) stands for (p*b - r)/(P*b - R).  Entry order is
(center, leaf, arm1 outward..., arm2 outward...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dualgraph import DualGraph, bracket_graph
from .hjcf import hj_expand

Q = Fraction

# chains with no redundant point (beyond the all-2 and [2,...,2,3] families
# and the single vertex [n])
CHAINS_WITHOUT_REDUNDANT_POINT: dict[tuple[int, ...], tuple[Fraction, ...]] = {
    (2, 2, 3, 2): (Q(2, 11), Q(4, 11), Q(6, 11), Q(3, 11)),
    (2, 3, 2): (Q(1, 4), Q(1, 2), Q(1, 4)),
    (2, 4): (Q(2, 7), Q(4, 7)),
}

# minimal chains bordering the list above; each carries a redundant point
CHAINS_WITH_REDUNDANT_POINT: dict[tuple[int, ...], tuple[Fraction, ...]] = {
    (2, 2, 3, 3): (Q(2, 9), Q(4, 9), Q(6, 9), Q(5, 9)),
    (2, 3, 3, 2): (Q(1, 3), Q(2, 3), Q(2, 3), Q(1, 3)),
    (2, 3, 3): (Q(4, 13), Q(8, 13), Q(7, 13)),
    (3, 3): (Q(1, 2), Q(1, 2)),
    (2, 5): (Q(1, 3), Q(2, 3)),
}


def single_vertex_discrepancy(n: int) -> Fraction:
    """The one-curve graph [n] has a = (n-2)/n."""
    return Q(n - 2, n)


@dataclass(frozen=True)
class BracketFamily:
    """One bracket star family, parametrized by the central weight b >= 2."""

    arm1: tuple[int, int]  # (q, q1)
    arm2: tuple[int, int]  # (q', q1')
    entries: tuple[tuple[int, int, int, int], ...]

    @property
    def name(self) -> str:
        return f"<b;{self.arm1[0]},{self.arm1[1]};{self.arm2[0]},{self.arm2[1]}>"

    def graph(self, b: int) -> DualGraph:
        return bracket_graph(b, hj_expand(*self.arm1), hj_expand(*self.arm2))

    def closed_form(self, b: int) -> tuple[Fraction, ...]:
        return tuple(Q(p * b - r, pp * b - rr) for p, r, pp, rr in self.entries)

    def is_canonical_at(self, b: int) -> bool:
        return all(x == 0 for x in self.closed_form(b))


BRACKET_FAMILIES: tuple[BracketFamily, ...] = (
    BracketFamily((3, 1), (3, 1), (
        (6, 8, 6, 7), (3, 4, 6, 7), (4, 5, 6, 7), (4, 5, 6, 7))),
    BracketFamily((3, 1), (3, 2), (
        (6, 10, 6, 9), (3, 5, 6, 9), (12, 19, 18, 27), (12, 20, 18, 27),
        (6, 10, 18, 27))),
    BracketFamily((3, 2), (3, 2), (
        (6, 12, 6, 11), (3, 6, 6, 11), (4, 8, 6, 11), (2, 4, 6, 11),
        (4, 8, 6, 11), (2, 4, 6, 11))),
    BracketFamily((3, 2), (4, 3), (
        (12, 24, 12, 23), (6, 12, 12, 23), (8, 16, 12, 23), (4, 8, 12, 23),
        (9, 18, 12, 23), (6, 12, 12, 23), (3, 6, 12, 23))),
    BracketFamily((3, 1), (4, 3), (
        (12, 20, 12, 19), (6, 10, 12, 19), (8, 13, 12, 19), (9, 15, 12, 19),
        (6, 10, 12, 19), (3, 5, 12, 19))),
    BracketFamily((3, 2), (4, 1), (
        (12, 18, 12, 17), (6, 9, 12, 17), (8, 12, 12, 17), (4, 6, 12, 17),
        (9, 13, 12, 17))),
    BracketFamily((3, 1), (4, 1), (
        (12, 14, 12, 13), (6, 7, 12, 13), (8, 9, 12, 13), (9, 10, 12, 13))),
    BracketFamily((3, 2), (5, 4), (
        (30, 60, 30, 59), (15, 30, 30, 59), (20, 40, 30, 59), (10, 20, 30, 59),
        (24, 48, 30, 59), (18, 36, 30, 59), (12, 24, 30, 59), (6, 12, 30, 59))),
    BracketFamily((3, 2), (5, 3), (
        (30, 54, 30, 53), (15, 27, 30, 53), (20, 36, 30, 53), (10, 18, 30, 53),
        (24, 43, 30, 53), (18, 32, 30, 53))),
    BracketFamily((3, 1), (5, 4), (
        (30, 50, 30, 49), (15, 25, 30, 49), (20, 33, 30, 49), (24, 40, 30, 49),
        (18, 30, 30, 49), (12, 20, 30, 49), (6, 10, 30, 49))),
    BracketFamily((3, 2), (5, 2), (
        (30, 48, 30, 47), (15, 24, 30, 47), (20, 32, 30, 47), (10, 16, 30, 47),
        (24, 38, 30, 47), (12, 19, 30, 47))),
    BracketFamily((3, 1), (5, 3), (
        (30, 44, 30, 43), (15, 22, 30, 43), (20, 29, 30, 43), (24, 35, 30, 43),
        (18, 26, 30, 43))),
    BracketFamily((3, 2), (5, 1), (
        (30, 42, 30, 41), (15, 21, 30, 41), (20, 28, 30, 41), (10, 14, 30, 41),
        (24, 33, 30, 41))),
    BracketFamily((3, 1), (5, 2), (
        (30, 38, 30, 37), (15, 19, 30, 37), (20, 25, 30, 37), (24, 30, 30, 37),
        (12, 15, 30, 37))),
    BracketFamily((3, 1), (5, 1), (
        (30, 32, 30, 31), (15, 16, 30, 31), (20, 21, 30, 31), (24, 25, 30, 31))),
)
