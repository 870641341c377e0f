"""Exact integer linear algebra: Smith normal form, determinants, rank.

Everything here works on lists of lists of Python ints, so there is no
overflow and no floating point anywhere.  Sizes are desk scale (a few
dozen rows), so the classical pivoting algorithms are plenty.
"""

from __future__ import annotations

import math
from fractions import Fraction

Matrix = list[list[int]]


def copy_matrix(m: Matrix) -> Matrix:
    return [list(row) for row in m]


def _diagonalize(a: Matrix) -> None:
    """Row/column reduce `a` in place to a diagonal matrix (no divisibility)."""
    rows, cols = len(a), len(a[0])
    for t in range(min(rows, cols)):
        while True:
            # move a nonzero entry of minimal absolute value to the pivot slot
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            # one remainder pass down the column and across the row
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    dirty = dirty or a[t][j] != 0
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, rows)) \
                    and all(a[t][j] == 0 for j in range(t + 1, cols)):
                break


def smith_normal_form(m: Matrix) -> Matrix:
    """Return the Smith normal form of an integer matrix.

    The result is diagonal with d_1 | d_2 | ... | d_r, remaining diagonal
    entries zero; diagonal entries are normalized nonnegative.
    """
    if not m or not m[0]:
        return copy_matrix(m)
    a = copy_matrix(m)
    _diagonalize(a)
    n = min(len(a), len(a[0]))
    d = [abs(a[i][i]) for i in range(n)]
    # diag(x, y) is equivalent over Z to diag(gcd(x, y), lcm(x, y))
    for i in range(n):
        for j in range(i + 1, n):
            if d[j] != 0 and (d[i] == 0 or d[j] % d[i] != 0):
                g = math.gcd(d[i], d[j])
                lcm = d[i] // g * d[j] if g else 0
                d[i], d[j] = g, lcm
    d = sorted(d[: n], key=lambda x: (x == 0, x))
    out = [[0] * len(a[0]) for _ in range(len(a))]
    for i, v in enumerate(d):
        out[i][i] = v
    return out


def invariant_factors(m: Matrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    if not m or not m[0]:
        return []
    s = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i] != 0]


def cokernel(m: Matrix, ambient_rank: int) -> tuple[int, list[int]]:
    """Free rank and torsion invariant factors (>1) of Z^ambient / col-span(m).

    `m` has `ambient_rank` rows; columns generate the subgroup.
    """
    if not m or not m[0]:
        return ambient_rank, []
    facs = invariant_factors(m)
    free = ambient_rank - len(facs)
    torsion = [d for d in facs if d > 1]
    return free, torsion


def integer_det(m: Matrix) -> int:
    """Determinant by fraction-free Bareiss elimination (exact)."""
    n = len(m)
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_exact(m: Matrix, rhs: list) -> list[Fraction]:
    """Solve m x = rhs exactly over Q; m must be square nonsingular."""
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
