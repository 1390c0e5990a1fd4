"""Exact linear algebra over arbitrary-precision rationals.

Scalars are ``fractions.Fraction`` values throughout: arbitrary-precision
integers, always stored reduced with a positive denominator.  Eliminations
run fraction-free (Bareiss) on integer rows obtained by scaling out
denominators, so intermediate values stay integral and nothing is ever
rounded.  Rationals reappear only in solution vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


class SingularMatrix(ValueError):
    """The coefficient matrix of a linear solve has determinant zero."""


class NotSymmetric(ValueError):
    """A symmetric-only operation received an asymmetric matrix."""


def as_rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x: Fraction) -> str:
    """Render in lowest terms as ``p/q``, or ``p`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class Matrix:
    """Immutable square matrix with rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "Matrix":
        ent = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not ent:
            raise ValueError("matrix must have positive dimension")
        n = len(ent)
        if any(len(row) != n for row in ent):
            raise ValueError("matrix must be square")
        return Matrix(ent)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        e = self.entries
        n = len(e)
        return all(e[i][j] == e[j][i] for i in range(n) for j in range(i + 1, n))

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.dim:
            raise ValueError("vector length does not match matrix dimension")
        w = [as_rational(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, w)) for row in self.entries)


def _scaled_int_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; return integer rows and scales."""
    out, scales = [], []
    for row in rows:
        s = 1
        for x in row:
            d = x.denominator
            if d != 1:
                s = lcm(s, d)
        out.append([int(x * s) if s != 1 else x.numerator for x in row])
        scales.append(s)
    return out, scales


def _bareiss_forward(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination in place (row pivoting); returns the swap sign.

    After return the first ``n`` columns are upper triangular and the pivot
    ``rows[k][k]`` equals (up to the accumulated sign) the order-(k+1) leading
    minor of the row-permuted matrix.  Returns 0 when no pivot exists in some
    column, i.e. the leading n x n block is singular.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, ncols):
                ri[j] = (ri[j] * pk - f * rk[j]) // prev
            ri[k] = 0
        prev = pk
    if rows[n - 1][n - 1] == 0:
        return 0
    return sign


def det(m: Matrix) -> Fraction:
    """Exact determinant via fraction-free elimination."""
    rows, scales = _scaled_int_rows(m.entries)
    n = len(rows)
    if n == 1:
        d = rows[0][0]
    else:
        sign = _bareiss_forward(rows, n)
        if sign == 0:
            return Fraction(0)
        d = sign * rows[n - 1][n - 1]
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def solve_linear(m: Matrix, b: Sequence) -> tuple[Fraction, ...]:
    """Exact solution of ``m . x = b``.

    Raises SingularMatrix when det(m) = 0.
    """
    n = m.dim
    if len(b) != n:
        raise ValueError("right-hand side length does not match matrix dimension")
    aug = [list(row) + [as_rational(x)] for row, x in zip(m.entries, b)]
    rows, _ = _scaled_int_rows(aug)
    if n == 1:
        if rows[0][0] == 0:
            raise SingularMatrix("1x1 matrix with zero entry")
        return (Fraction(rows[0][1], rows[0][0]),)
    if _bareiss_forward(rows, n + 1) == 0:
        raise SingularMatrix("matrix has determinant zero")
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        ri = rows[i]
        for j in range(i + 1, n):
            acc -= ri[j] * x[j]
        x[i] = acc / ri[i]
    return tuple(x)


def is_negative_definite(m: Matrix) -> bool:
    """Sylvester test: the order-k leading minor must have sign (-1)^k for all k."""
    if not m.is_symmetric():
        raise NotSymmetric("negative-definiteness requires a symmetric matrix")
    scale = 1
    for row in m.entries:
        for x in row:
            d = x.denominator
            if d != 1:
                scale = lcm(scale, d)
    if scale == 1:
        rows = [[x.numerator for x in row] for row in m.entries]
    else:
        rows = [[int(x * scale) for x in row] for row in m.entries]
    n = len(rows)
    prev = 1
    for k in range(n):
        d = rows[k][k]
        # minor of order k+1; odd order needs d < 0, even order d > 0
        if d == 0 or (d > 0) == (k % 2 == 0):
            return False
        if k < n - 1:
            rk = rows[k]
            for i in range(k + 1, n):
                ri = rows[i]
                f = ri[k]
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * d - f * rk[j]) // prev
            prev = d
    return True
