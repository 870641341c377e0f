"""Bounded test for sandwiched graphs.

A graph is sandwiched when adding some (-1)-leaves produces a configuration
that blows down to the empty graph.  There is no effective bound on how
many leaves are needed, so the test is a semi-decision procedure: "yes"
comes with the witness completion, "no" only from the genus obstruction,
everything else is "unknown".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import PlumbingGraph
from .lattice import require_negative_definite


@dataclass(frozen=True)
class SandwichVerdict:
    status: str  # "yes" | "no" | "unknown"
    attachments: tuple[int, ...] = ()  # vertex receiving each extra (-1)-leaf
    max_extra: int = 0

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"


def _blows_down_to_empty(weights: list[int], edges: list[tuple[int, int]]) -> bool:
    """DFS over blowdown moves; vertices are genus 0 throughout."""
    n = len(weights)
    if n == 0:
        return True
    valency = [0] * n
    for i, j in edges:
        valency[i] += 1
        valency[j] += 1
    candidates = [v for v in range(n) if weights[v] == -1 and valency[v] <= 2]
    for v in candidates:
        nbrs = [j for (i, j) in edges if i == v] + [i for (i, j) in edges if j == v]
        if len(nbrs) == 2 and nbrs[0] == nbrs[1]:
            # double edge to one neighbor: contraction makes a nodal curve
            continue
        new_index = {}
        k = 0
        for u in range(n):
            if u != v:
                new_index[u] = k
                k += 1
        w2 = [weights[u] for u in range(n) if u != v]
        for u in nbrs:
            w2[new_index[u]] += 1
        e2 = [
            (new_index[i], new_index[j]) for i, j in edges if i != v and j != v
        ]
        if len(nbrs) == 2:
            a, b = sorted((new_index[nbrs[0]], new_index[nbrs[1]]))
            e2.append((a, b))
        if _blows_down_to_empty(w2, e2):
            return True
    return False


def is_sandwiched(g: PlumbingGraph, max_extra: int) -> SandwichVerdict:
    """Search completions by up to max_extra (-1)-leaves, smallest count first."""
    require_negative_definite(g)
    if g.total_genus() > 0:
        return SandwichVerdict("no", max_extra=max_extra)
    base_w = list(g.weights)
    base_e = list(g.edges)
    for extra in range(max_extra + 1):
        for attach in itertools.combinations_with_replacement(range(g.n), extra):
            w = base_w + [-1] * extra
            e = base_e + [(attach[k], g.n + k) for k in range(extra)]
            if _blows_down_to_empty(w, e):
                return SandwichVerdict("yes", tuple(attach), max_extra)
    return SandwichVerdict("unknown", max_extra=max_extra)
