"""Shared oracle formulas and small utilities for the test suite."""

from fractions import Fraction as Q


def naive_det(rows):
    """Cofactor-expansion determinant; the independent oracle for dim <= 5."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Q(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total += (-1) ** j * rows[0][j] * naive_det(minor)
    return total


def two_lines_negative_coeffs(m, n):
    """Closed-form coefficients of the negative part on the two-line surface."""
    den = m * n - m - n
    return Q(m * n - m - 2 * n, den), Q(m * n - 2 * m - n, den)


def hirzebruch_negative_coeffs(n, k, a):
    """Closed-form negative-part coefficients on the blown-up Hirzebruch
    surface: the section coefficient and one per chosen fiber."""
    s = sum(Q(1, x) for x in a)
    den = n - s
    sigma = 2 - Q(n + 2 - k) / den
    fibers = [1 - Q(n + 2 - k) / (x * den) for x in a]
    return sigma, fibers
