"""Topological upper bound for the geometric genus via lattice paths.

A path climbs from 0 to floor(Z_K) one basis vector at a time; each step
contributes a bound read off the degree d = -(l . E_v) and the genus of
the step vertex, and the best path minimizes the total.  The minimum is
found by exact dynamic programming over the coefficient box.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .graph import PlumbingGraph
from .lattice import (
    canonical_cycle,
    floor_cycle,
    global_cap,
    intersection_matrix,
    require_negative_definite,
)


def step_bound(g: PlumbingGraph, l, v: int) -> int:
    """Bound for one step at vertex v from partial sum l.

    With d = -(l . E_v) and genus gv:
      d <= -1        ->  gv - d - 1
      0 <= d <= 2gv-2 ->  gv - ceil(d/2)
      d >= 2gv-1     ->  0
    """
    m = intersection_matrix(g)
    d = -sum(m[v][j] * l[j] for j in range(g.n))
    gv = g.genera[v]
    if d <= -1:
        return gv - d - 1
    if d <= 2 * gv - 2:
        return gv - (d + 1) // 2
    return 0


class PathViolation(DomainError):
    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"invalid path at step {index}: {reason}")


def path_bound(g: PlumbingGraph, steps: list[int]) -> int:
    """Sum of step bounds along an explicit path; validates the path."""
    target = floor_cycle(canonical_cycle(g))
    l = [0] * g.n
    total = 0
    for idx, v in enumerate(steps):
        if not (0 <= v < g.n):
            raise PathViolation(idx, f"vertex {v} out of range")
        total += step_bound(g, l, v)
        l[v] += 1
        if l[v] > target[v]:
            raise PathViolation(idx, f"coefficient at vertex {v} exceeds floor(Z_K)")
    if list(target) != l:
        raise PathViolation(len(steps), "path does not end at floor(Z_K)")
    return total


@dataclass(frozen=True)
class PgBound:
    bound: int
    exact: bool
    witness: tuple[int, ...]
    clamped: bool  # floor(Z_K) had negative coefficients, replaced by 0


def best_pg_bound(g: PlumbingGraph, cap: int | None = None) -> PgBound:
    """Minimum of path_bound over all lattice paths to floor(Z_K).

    Exact DP over the box when it has at most `cap` states; beyond the cap a
    greedy descent is used and flagged exact=False.  Negative floor(Z_K)
    coefficients (non-minimal resolutions) are clamped to 0 with a flag.
    """
    cap = cap if cap is not None else global_cap()
    m = require_negative_definite(g)
    target = floor_cycle(canonical_cycle(g))
    clamped = any(c < 0 for c in target)
    target = tuple(max(c, 0) for c in target)
    genera = g.genera
    n = g.n

    def step(l: tuple[int, ...], v: int) -> int:
        d = -sum(m[v][j] * l[j] for j in range(n))
        gv = genera[v]
        if d <= -1:
            return gv - d - 1
        if d <= 2 * gv - 2:
            return gv - (d + 1) // 2
        return 0

    states = 1
    for c in target:
        states *= c + 1

    if states <= cap:
        @lru_cache(maxsize=None)
        def best(l: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
            if l == target:
                return 0, ()
            choice = None
            for v in range(n):
                if l[v] < target[v]:
                    nxt = l[:v] + (l[v] + 1,) + l[v + 1:]
                    rest, tail = best(nxt)
                    cost = step(l, v) + rest
                    if choice is None or cost < choice[0]:
                        choice = (cost, (v,) + tail)
            return choice
        bound, witness = best((0,) * n)
        return PgBound(bound, True, witness, clamped)

    # greedy: cheapest next step, ties to the smallest vertex
    l = (0,) * n
    total = 0
    witness = []
    while l != target:
        v = min(
            (v for v in range(n) if l[v] < target[v]),
            key=lambda v: (step(l, v), v),
        )
        total += step(l, v)
        witness.append(v)
        l = l[:v] + (l[v] + 1,) + l[v + 1:]
    return PgBound(total, False, tuple(witness), clamped)


def single_vertex_closed_form(genus: int, b: int) -> int:
    """Sum over the straight path for one vertex of genus g, weight -b."""
    t = (2 * genus - 2) // b if genus >= 1 else -1
    return sum(genus - (i * b + 1) // 2 for i in range(t + 1))
