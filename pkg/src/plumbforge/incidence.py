"""Combinatorial incidence matrices of picture deformations.

A decorated curve germ has r branches with delta invariants delta_i and
decorations l_i; an incidence matrix records branch multiplicities at the
points of a picture deformation.  Row i must sum to l_i and satisfy
sum_j v_ij (v_ij - 1) = 2 delta_i; optional pairwise products pin
sum_j v_ij v_kj to the branch intersection numbers.  The set of solutions
is finite and is enumerated exhaustively, deduplicated up to column
permutation by generating columns in nonincreasing lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DecorationTooSmallError, DomainError, EnumerationCapError
from .lattice import global_cap


@dataclass(frozen=True)
class DecoratedGermData:
    deltas: tuple[int, ...]
    ls: tuple[int, ...]
    pairwise: tuple[tuple[int, int, int], ...] = ()  # (i, k, C_i . C_k)

    def __post_init__(self):
        if len(self.deltas) != len(self.ls):
            raise DomainError("deltas and ls must have the same length")
        if any(d < 0 for d in self.deltas):
            raise DomainError("delta invariants must be >= 0")
        if any(l < 1 for l in self.ls):
            raise DomainError("decorations must be >= 1")
        for i, k, _ in self.pairwise:
            if not (0 <= i < len(self.ls) and 0 <= k < len(self.ls) and i != k):
                raise DomainError("bad pairwise constraint indices")

    @property
    def r(self) -> int:
        return len(self.ls)


@dataclass(frozen=True)
class IncidenceMatrix:
    columns: tuple[tuple[int, ...], ...]  # canonical: nonincreasing lex order

    @property
    def r(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def n(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[int]]:
        return [[col[i] for col in self.columns] for i in range(self.r)]

    def free_points(self) -> int:
        return sum(1 for col in self.columns if sum(col) == 1)

    def singular_points(self) -> int:
        return sum(1 for col in self.columns if sum(col) >= 2)


def canonical(columns) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(c) for c in columns), reverse=True))


def enumerate_incidence(
    data: DecoratedGermData, cap: int | None = None
) -> list[IncidenceMatrix]:
    """All incidence matrices, in canonical form, sorted.

    Backtracks over columns in nonincreasing lex order; prunes on the
    remaining row sums, the delta budgets (one column of multiplicity s
    spends s(s-1)), and the pairwise budgets.
    """
    cap = cap if cap is not None else global_cap()
    r = data.r
    pair_target = {(i, k): c for i, k, c in data.pairwise}
    results: list[tuple[tuple[int, ...], ...]] = []
    visited = 0

    def column_candidates(bound, rem_sum):
        """Nonzero columns <= bound (lex) with col[i] <= rem_sum[i]."""
        ranges = [range(min(bound[0], rem_sum[0]), -1, -1)]
        for i in range(1, r):
            ranges.append(range(rem_sum[i], -1, -1))
        for col in itertools.product(*ranges):
            if col > bound:
                continue
            if any(col):
                yield col

    def feasible(rem_sum, rem_delta, rem_pair):
        # one maximal column realizes at most s(s-1) of the delta budget
        for i in range(r):
            if rem_delta[i] > rem_sum[i] * (rem_sum[i] - 1):
                return False
            if rem_delta[i] < 0 or rem_delta[i] % 2:
                return False
        for (i, k), c in rem_pair.items():
            if c < 0 or c > rem_sum[i] * rem_sum[k]:
                return False
        return True

    def rec(bound, rem_sum, rem_delta, rem_pair, acc):
        nonlocal visited
        if all(x == 0 for x in rem_sum):
            if all(x == 0 for x in rem_delta) and all(
                c == 0 for c in rem_pair.values()
            ):
                results.append(tuple(acc))
            return
        for col in column_candidates(bound, rem_sum):
            visited += 1
            if visited > cap:
                raise EnumerationCapError(cap, len(results))
            ns = tuple(a - b for a, b in zip(rem_sum, col))
            nd = tuple(
                rem_delta[i] - col[i] * (col[i] - 1) for i in range(r)
            )
            np_ = {
                (i, k): c - col[i] * col[k] for (i, k), c in rem_pair.items()
            }
            if feasible(ns, nd, np_):
                acc.append(col)
                rec(col, ns, nd, np_, acc)
                acc.pop()

    top = tuple(data.ls)
    rem_pair = dict(pair_target)
    rem_delta = tuple(2 * d for d in data.deltas)
    if feasible(top, rem_delta, rem_pair):
        rec(top, top, rem_delta, rem_pair, [])
    return sorted(
        (IncidenceMatrix(m) for m in set(results)), key=lambda m: m.columns
    )


def incidence_filling_b2(m: IncidenceMatrix) -> int:
    """b_2 of the Milnor filling built from the matrix: n - r.

    Blowing up the ball at the n points gives chi = 1 + n; removing the r
    disjoint branch neighborhoods leaves chi = 1 + n - r, and b_1 = 0 with
    b_2^+ = b_2^0 = 0 (rational link) forces b_2 = n - r.
    """
    if m.n < m.r:
        raise DecorationTooSmallError()
    return m.n - m.r


def incidence_spread(data: DecoratedGermData, cap: int | None = None) -> list[int]:
    """Sorted distinct b_2 values over all incidence matrices."""
    return sorted({incidence_filling_b2(m) for m in enumerate_incidence(data, cap)})
