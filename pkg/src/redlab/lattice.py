"""Zariski decomposition on Picard lattices, lattice-level blow-up, and
the two stock surface constructions used as fixtures.

A divisor class lives in a fixed basis of a lattice with an integral
intersection form.  ``zariski_decompose`` splits a class D as P + N
against a caller-supplied list of candidate negative curves: the support
starts from the curves D meets negatively, N is solved on the support
from (D - N).C = 0, and the support grows until the remaining part P
meets every candidate nonnegatively.  The solver does not search for
negative curves on its own; each fixture ships the curves that matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (Matrix, as_rational, format_rational,
                     is_negative_definite, parse_rational, solve_linear)


class BadParameters(ValueError):
    """Fixture parameters outside the admissible range."""


class NotPseudoEffective(ValueError):
    """The divisor admits no Zariski decomposition against the candidates:
    the support matrix fails negative-definiteness or a coefficient of the
    negative part turns negative."""


@dataclass(frozen=True)
class DivisorClass:
    """Coordinate vector of a divisor class in the lattice basis."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(coords: Iterable) -> "DivisorClass":
        return DivisorClass(tuple(as_rational(x) for x in coords))

    @staticmethod
    def zero(rank: int) -> "DivisorClass":
        return DivisorClass((Fraction(0),) * rank)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, scalar) -> "DivisorClass":
        s = as_rational(scalar)
        return DivisorClass(tuple(s * a for a in self.coords))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))


@dataclass(frozen=True)
class PicardLattice:
    """Basis names plus a symmetric integral intersection form."""

    form: tuple[tuple[int, ...], ...]
    basis_names: tuple[str, ...]

    def __post_init__(self):
        n = len(self.form)
        if any(len(row) != n for row in self.form):
            raise ValueError("intersection form must be square")
        if len(self.basis_names) != n:
            raise ValueError("basis size does not match form dimension")
        for i in range(n):
            for j in range(i + 1, n):
                if self.form[i][j] != self.form[j][i]:
                    raise ValueError("intersection form must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.form)

    def pair(self, x: DivisorClass, y: DivisorClass) -> Fraction:
        if len(x.coords) != self.rank or len(y.coords) != self.rank:
            raise ValueError("class length does not match lattice rank")
        total = Fraction(0)
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            row = self.form[i]
            total += xi * sum(f * yj for f, yj in zip(row, y.coords) if yj != 0)
        return total

    def basis_class(self, name: str) -> DivisorClass:
        i = self.basis_names.index(name)
        coords = [Fraction(0)] * self.rank
        coords[i] = Fraction(1)
        return DivisorClass(tuple(coords))


@dataclass(frozen=True)
class ZariskiDecomp:
    P: DivisorClass
    N: DivisorClass
    support: tuple[tuple[str, Fraction], ...]


def zariski_decompose(lat: PicardLattice, D: DivisorClass,
                      curves: Sequence[tuple[str, DivisorClass]]) -> ZariskiDecomp:
    """Split D = P + N against the candidate curves.

    P meets every candidate nonnegatively, N is supported on curves with
    nonnegative coefficients, P.N = 0, and the support Gram matrix is
    negative definite.  Raises NotPseudoEffective when no such splitting
    exists over the given candidates.
    """
    names = [n for n, _ in curves]
    if len(set(names)) != len(names):
        raise ValueError("candidate curve names must be unique")
    classes = [cls for _, cls in curves]
    d_against = [lat.pair(D, cls) for cls in classes]
    support = [i for i, x in enumerate(d_against) if x < 0]
    coeffs: list[Fraction] = []
    while True:
        if support:
            gram = Matrix.from_rows(
                [[lat.pair(classes[i], classes[j]) for j in support] for i in support])
            if not is_negative_definite(gram):
                raise NotPseudoEffective("support intersection matrix is not negative definite")
            coeffs = list(solve_linear(gram, [d_against[i] for i in support]))
            if any(x < 0 for x in coeffs):
                raise NotPseudoEffective("negative coefficient in the negative part")
            N = DivisorClass.zero(lat.rank)
            for i, x in zip(support, coeffs):
                N = N + x * classes[i]
        else:
            N = DivisorClass.zero(lat.rank)
        P = D - N
        violators = [i for i in range(len(classes))
                     if i not in support and lat.pair(P, classes[i]) < 0]
        if not violators:
            return ZariskiDecomp(
                P=P, N=N,
                support=tuple((names[i], x) for i, x in zip(support, coeffs)))
        support.extend(violators)
        support.sort()


def is_big(lat: PicardLattice, P: DivisorClass) -> bool:
    """For a nef class, bigness is P.P > 0."""
    return lat.pair(P, P) > 0


def lattice_blow_up(lat: PicardLattice, curves_through_p: Sequence[str],
                    classes: Sequence[tuple[str, DivisorClass]],
                    exceptional_name: str | None = None,
                    ) -> tuple[PicardLattice, list[tuple[str, DivisorClass]], DivisorClass]:
    """Extend the lattice by a blow-up at a point lying on the named curves.

    The new basis vector E satisfies E.E = -1 and is orthogonal to the
    pulled-back basis; classes named in ``curves_through_p`` (at most two:
    a smooth point, a point on one curve, or a transversal intersection)
    become strict transforms (pullback minus E), all others pull back
    unchanged.  Returns the new lattice, the updated classes and E.
    """
    through = list(curves_through_p)
    if len(through) > 2:
        raise ValueError("a point lies on at most two curves of an snc configuration")
    known = {name for name, _ in classes}
    for name in through:
        if name not in known:
            raise ValueError(f"unknown curve {name!r}")
    ename = exceptional_name or f"e{lat.rank}"
    if ename in lat.basis_names:
        raise ValueError(f"basis name {ename!r} already taken")
    n = lat.rank
    form = tuple(tuple(list(row) + [0]) for row in lat.form) + (tuple([0] * n + [-1]),)
    new_lat = PicardLattice(form=form, basis_names=lat.basis_names + (ename,))
    minus_one = Fraction(-1)
    zero = Fraction(0)
    updated = []
    for name, cls in classes:
        extra = minus_one if name in through else zero
        updated.append((name, DivisorClass(cls.coords + (extra,))))
    E = DivisorClass((zero,) * n + (Fraction(1),))
    return new_lat, updated, E


def pull_back(cls: DivisorClass) -> DivisorClass:
    """Total transform of a class under a single blow-up (append a zero)."""
    return DivisorClass(cls.coords + (Fraction(0),))


# ---------------------------------------------------------------------------
# fixtures


def fixture_two_lines(m: int, n: int
                      ) -> tuple[PicardLattice, DivisorClass, list[tuple[str, DivisorClass]]]:
    """Plane blown up at m points on one line and n on another (m >= n >= 4).

    Basis (l, e1_1..e1_m, e2_1..e2_n) with form diag(1, -1, ..., -1).
    Returns the lattice, -K = 3l - sum e, and the strict transforms
    l1 = l - sum e1_j, l2 = l - sum e2_j as the candidate curves.
    """
    if not (m >= n >= 4):
        raise BadParameters(f"need m >= n >= 4, got m={m}, n={n}")
    rank = 1 + m + n
    names = ["l"] + [f"e1_{j}" for j in range(1, m + 1)] + [f"e2_{j}" for j in range(1, n + 1)]
    form = tuple(
        tuple((1 if i == j == 0 else -1 if i == j else 0) for j in range(rank))
        for i in range(rank))
    lat = PicardLattice(form=form, basis_names=tuple(names))
    minus_k = DivisorClass.of([3] + [-1] * (m + n))
    l1 = DivisorClass.of([1] + [-1] * m + [0] * n)
    l2 = DivisorClass.of([1] + [0] * m + [-1] * n)
    return lat, minus_k, [("l1", l1), ("l2", l2)]


def fixture_hirzebruch(n: int, k: int, a: Sequence[int]
                       ) -> tuple[PicardLattice, DivisorClass, list[tuple[str, DivisorClass]]]:
    """Hirzebruch surface with negative section sigma (sigma^2 = -n), k
    chosen fibers, and a_i blown-up points on the i-th fiber away from
    sigma.  Requires n >= 2, 3 <= k <= n + 1 and sum 1/a_i < k - 2.

    Basis (s, f, e(i)_j) with s^2 = -n, s.f = 1, f^2 = 0.  Returns the
    lattice, -K = 2s + (n+2)f - sum e, and the candidates: sigma and the
    strict transforms F_i = f - sum_j e(i)_j.
    """
    a = list(a)
    if n < 2:
        raise BadParameters(f"need n >= 2, got {n}")
    if not (3 <= k <= n + 1):
        raise BadParameters(f"need 3 <= k <= n + 1, got k={k}, n={n}")
    if len(a) != k:
        raise BadParameters(f"need exactly k = {k} fiber multiplicities, got {len(a)}")
    if any(x < 1 for x in a):
        raise BadParameters("every a_i must be a positive integer")
    if sum(Fraction(1, x) for x in a) >= k - 2:
        raise BadParameters("need sum 1/a_i < k - 2")
    total = sum(a)
    rank = 2 + total
    names = ["s", "f"]
    for i, ai in enumerate(a, start=1):
        names += [f"e{i}_{j}" for j in range(1, ai + 1)]
    form_rows = []
    for i in range(rank):
        row = [0] * rank
        if i == 0:
            row[0] = -n
            row[1] = 1
        elif i == 1:
            row[0] = 1
        else:
            row[i] = -1
        form_rows.append(tuple(row))
    lat = PicardLattice(form=tuple(form_rows), basis_names=tuple(names))
    minus_k = DivisorClass.of([2, n + 2] + [-1] * total)
    curves: list[tuple[str, DivisorClass]] = [("sigma", DivisorClass.of([1, 0] + [0] * total))]
    offset = 0
    for i, ai in enumerate(a, start=1):
        coords = [0, 1] + [0] * total
        for j in range(ai):
            coords[2 + offset + j] = -1
        curves.append((f"F{i}", DivisorClass.of(coords)))
        offset += ai
    return lat, minus_k, curves


# ---------------------------------------------------------------------------
# JSON lattice files


def lattice_to_json(lat: PicardLattice, divisor: DivisorClass,
                    curves: Sequence[tuple[str, DivisorClass]]) -> dict:
    return {
        "rank": lat.rank,
        "form": [list(row) for row in lat.form],
        "basis": list(lat.basis_names),
        "divisor": [format_rational(x) for x in divisor.coords],
        "curves": [{"name": name, "class": [format_rational(x) for x in cls.coords]}
                   for name, cls in curves],
    }


def lattice_from_json(obj: dict
                      ) -> tuple[PicardLattice, DivisorClass, list[tuple[str, DivisorClass]]]:
    try:
        rank = int(obj["rank"])
        form = tuple(tuple(int(x) for x in row) for row in obj["form"])
        basis = tuple(str(x) for x in obj["basis"])
        divisor = DivisorClass(tuple(parse_rational(x) for x in obj["divisor"]))
        curves = [(str(c["name"]),
                   DivisorClass(tuple(parse_rational(x) for x in c["class"])))
                  for c in obj.get("curves", [])]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed lattice document: {exc}") from exc
    lat = PicardLattice(form=form, basis_names=basis)
    if lat.rank != rank:
        raise ValueError("declared rank does not match the form dimension")
    if len(divisor.coords) != rank:
        raise ValueError("divisor length does not match the rank")
    for name, cls in curves:
        if len(cls.coords) != rank:
            raise ValueError(f"curve {name!r} has wrong class length")
    return lat, divisor, curves
