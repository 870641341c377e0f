"""Lattice computations on a resolution graph.

Intersection form, canonical cycle, Artin's fundamental cycle, the
Riemann-Roch function, and the classification predicates built on them.
All arithmetic is exact: integers and fractions.Fraction only.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoxTooLargeError, IndefiniteLatticeError
from .graph import PlumbingGraph
from .smith import cokernel, integer_det, solve_exact

DEFAULT_CAP = 10 ** 6


def global_cap(default: int = DEFAULT_CAP) -> int:
    """Box/enumeration cap, overridable via PLUMBFORGE_CAP."""
    raw = os.environ.get("PLUMBFORGE_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def intersection_matrix(g: PlumbingGraph) -> list[list[int]]:
    """Diagonal = Euler weights, off-diagonal = edge multiplicities."""
    m = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        m[v][v] = g.weights[v]
    for i, j in g.edges:
        m[i][j] += 1
        m[j][i] += 1
    return m


def is_negative_definite(m: list[list[int]]) -> bool:
    """Exact rational symmetric elimination: definite iff all pivots < 0."""
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("matrix not square")
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix not symmetric")
    a = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        pivot = a[k][k]
        if pivot >= 0:
            return False
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / pivot
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def require_negative_definite(g: PlumbingGraph) -> list[list[int]]:
    m = intersection_matrix(g)
    if not is_negative_definite(m):
        raise IndefiniteLatticeError()
    return m


def pairing(m: list[list[int]], a, b) -> Fraction:
    """a . b with respect to the intersection matrix; exact."""
    total = Fraction(0)
    for i, row in enumerate(m):
        if a[i] == 0:
            continue
        total += a[i] * sum(row[j] * b[j] for j in range(len(row)) if b[j] != 0)
    return total


def mat_vec(m: list[list[int]], v):
    return [sum(row[j] * v[j] for j in range(len(row)) if v[j] != 0) for row in m]


def canonical_cycle(g: PlumbingGraph) -> tuple[Fraction, ...]:
    """Unique rational Z_K with Z_K . E_v = e_v + 2 - 2 g_v for every v."""
    m = require_negative_definite(g)
    rhs = [g.weights[v] + 2 - 2 * g.genera[v] for v in range(g.n)]
    return tuple(solve_exact(m, rhs))


def floor_cycle(cycle) -> tuple[int, ...]:
    return tuple(math.floor(c) for c in cycle)


def canonical_square(g: PlumbingGraph) -> Fraction:
    """Z_K . Z_K, exact rational."""
    zk = canonical_cycle(g)
    return sum(
        zk[v] * (g.weights[v] + 2 - 2 * g.genera[v]) for v in range(g.n)
    )


def fundamental_cycle(g: PlumbingGraph) -> tuple[int, ...]:
    """Artin's Z_min by the generalized Laufer sequence.

    Start at sum(E_v); while some Z . E_v > 0, add that E_v (smallest index
    first, for determinism).  Terminates on negative definite lattices.
    """
    m = require_negative_definite(g)
    z = [1] * g.n
    while True:
        prods = mat_vec(m, z)
        v = next((i for i, p in enumerate(prods) if p > 0), None)
        if v is None:
            return tuple(z)
        z[v] += 1


def adjunction_vector(g: PlumbingGraph) -> list[int]:
    """(e_v + 2 - 2 g_v)_v, the right-hand side of the adjunction relations."""
    return [g.weights[v] + 2 - 2 * g.genera[v] for v in range(g.n)]


def _chi_int(m: list[list[int]], adj: list[int], l) -> Fraction:
    """chi on integral cycles without re-validating the lattice; exact."""
    ll = 0
    for i, li in enumerate(l):
        if li:
            row = m[i]
            ll += li * sum(row[j] * l[j] for j in range(len(l)) if l[j])
    lzk = sum(li * a for li, a in zip(l, adj))
    return Fraction(-ll + lzk, 2)


def riemann_roch_chi(cycle, g: PlumbingGraph) -> Fraction:
    """chi(D) = (-D.D + D.Z_K) / 2."""
    m = intersection_matrix(g)
    if not is_negative_definite(m):
        raise IndefiniteLatticeError()
    dd = pairing(m, cycle, cycle)
    dzk = sum(
        Fraction(cycle[v]) * (g.weights[v] + 2 - 2 * g.genera[v]) for v in range(g.n)
    )
    return (-dd + dzk) / 2


def is_rational(g: PlumbingGraph) -> bool:
    """Artin's criterion: chi(Z_min) = 1."""
    return riemann_roch_chi(fundamental_cycle(g), g) == 1


def _connected_subsets(g: PlumbingGraph):
    """All nonempty proper connected vertex subsets, as sorted tuples."""
    adj = g.adjacency()
    n = g.n
    seen = set()
    for v in range(n):
        grow = {(v,)}
        while grow:
            nxt = set()
            for subset in grow:
                if subset not in seen:
                    seen.add(subset)
                    s = set(subset)
                    for u in subset:
                        for w in adj[u]:
                            if w not in s:
                                nxt.add(tuple(sorted(s | {w})))
            grow = {t for t in nxt if len(t) < n}
    return {s for s in seen if len(s) < n}


def induced_subgraph(g: PlumbingGraph, vertices) -> PlumbingGraph:
    verts = sorted(vertices)
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(
        (index[i], index[j]) for i, j in g.edges if i in index and j in index
    )
    return PlumbingGraph(
        tuple(g.weights[v] for v in verts),
        tuple(g.genera[v] for v in verts),
        edges,
    )


def is_minimally_elliptic(g: PlumbingGraph, cap: int | None = None) -> bool:
    """Laufer's criterion in subgraph form: chi(Z_min) = 0 and every proper
    connected subgraph (same weights) supports a rational singularity.

    This form is valid on any resolution; the cycle-level scan of
    `is_minimally_elliptic_cycle` agrees with it on minimal resolutions but
    fails on non-minimal ones (e.g. star-shaped triangle-singularity graphs,
    where the integral cycle Z_K < Z_min has chi = 0).
    """
    cap = cap if cap is not None else global_cap()
    require_negative_definite(g)
    if riemann_roch_chi(fundamental_cycle(g), g) != 0:
        return False
    if 2 ** g.n > cap:
        raise BoxTooLargeError(2 ** g.n, cap)
    for subset in _connected_subsets(g):
        if not is_rational(induced_subgraph(g, subset)):
            return False
    return True


def is_minimally_elliptic_cycle(g: PlumbingGraph, cap: int | None = None) -> bool:
    """Literal cycle-level definition: chi(Z_min) = 0 and chi(l) > 0 for all
    integral 0 < l < Z_min, by exhaustive scan over the coefficient box."""
    cap = cap if cap is not None else global_cap()
    m = require_negative_definite(g)
    adj = adjunction_vector(g)
    zmin = fundamental_cycle(g)
    if _chi_int(m, adj, zmin) != 0:
        return False
    size = 1
    for c in zmin:
        size *= c + 1
    if size > cap:
        raise BoxTooLargeError(size, cap)
    for l in itertools.product(*(range(c + 1) for c in zmin)):
        if all(x == 0 for x in l) or l == zmin:
            continue
        if _chi_int(m, adj, l) <= 0:
            return False
    return True


@dataclass(frozen=True)
class LinkHomology:
    free_rank: int
    torsion: tuple[int, ...]  # invariant factors, each >= 2, divisible chain

    def order_of_torsion(self) -> int:
        p = 1
        for t in self.torsion:
            p *= t
        return p


def link_homology(g: PlumbingGraph) -> LinkHomology:
    """H_1 of the plumbed 3-manifold: coker(M) + Z^{2 sum(g)} + Z^{b_1(graph)}."""
    m = require_negative_definite(g)
    free, torsion = cokernel(m, g.n)
    free += 2 * g.total_genus() + g.first_betti()
    return LinkHomology(free, tuple(torsion))


def link_first_betti(g: PlumbingGraph) -> int:
    """b_1(Y) without the Smith form: 2 sum(g) + b_1(graph) when M is definite."""
    require_negative_definite(g)
    return 2 * g.total_genus() + g.first_betti()


def good_vertices(g: PlumbingGraph) -> list[int]:
    """Vertices violating a(v) <= -e(v); empty list means all good."""
    return [v for v in range(g.n) if g.valency(v) > -g.weights[v]]


def minimal_model(g: PlumbingGraph) -> tuple[list[list[int]], int, list[int]]:
    """Contract (-1) genus-0 vertices until none remain.

    Returns (intersection matrix of the minimal configuration, number of
    remaining curves, surviving original vertex indices).  Contraction of a
    curve meeting E_i with multiplicity m_i adds m_i*m_j to E_i.E_j; the
    result need not be a simple plumbing graph (triple points are fine: only
    the matrix and the count survive, which is all the Milnor-envelope
    comparison needs).
    """
    m = intersection_matrix(g)
    labels = list(range(g.n))
    genera = list(g.genera)
    while len(m) > 1:
        v = next(
            (i for i in range(len(m)) if m[i][i] == -1 and genera[i] == 0),
            None,
        )
        if v is None:
            break
        mult = [m[i][v] for i in range(len(m))]
        m = [
            [m[i][j] + mult[i] * mult[j] for j in range(len(m)) if j != v]
            for i in range(len(m))
            if i != v
        ]
        labels.pop(v)
        genera.pop(v)
    return m, len(labels), labels
