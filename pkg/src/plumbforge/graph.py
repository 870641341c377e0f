"""Plumbing (dual resolution) graphs: data model, file formats, constructors.

A graph is a weighted multigraph: each vertex carries an Euler weight
(self-intersection of the exceptional curve) and a genus; edges are
unordered pairs and may repeat.  Self-loops are rejected: nodal curves
(r = 1 cusps) are outside the model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GraphError


@dataclass(frozen=True)
class PlumbingGraph:
    """Immutable plumbing graph; validated on construction."""

    weights: tuple[int, ...]
    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # normalized (min, max), sorted

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise GraphError("graph must have at least one vertex")
        if len(self.genera) != n:
            raise GraphError("genus list length differs from vertex count")
        if any(g < 0 for g in self.genera):
            raise GraphError("negative genus")
        norm = []
        for (i, j) in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i},{j}) out of range")
            if i == j:
                raise GraphError(f"self-loop at vertex {i} rejected")
            norm.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if not self._connected():
            raise GraphError("graph must be connected")

    def _connected(self) -> bool:
        n = len(self.weights)
        seen = {0}
        frontier = [0]
        adj = self.adjacency()
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == n

    # -- basic combinatorics -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.weights)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def edge_multiplicity(self, i: int, j: int) -> int:
        e = (min(i, j), max(i, j))
        return sum(1 for x in self.edges if x == e)

    def valency(self, v: int) -> int:
        return sum(1 for i, j in self.edges if i == v or j == v)

    def first_betti(self) -> int:
        """b_1 of the graph itself (edges counted with multiplicity)."""
        return len(self.edges) - self.n + 1

    def total_genus(self) -> int:
        return sum(self.genera)

    def is_cycle_of_spheres(self) -> bool:
        """True for cusp-shaped graphs: genus-0 cycle, every valency 2, r >= 2."""
        return (
            self.n >= 2
            and all(g == 0 for g in self.genera)
            and len(self.edges) == self.n
            and all(self.valency(v) == 2 for v in range(self.n))
        )

    # -- blowups (used by property tests and the sandwiched search) ----------

    def blow_up_vertex(self, v: int) -> "PlumbingGraph":
        """Blow up a point on E_v: new (-1) leaf attached to v, E_v^2 drops."""
        w = list(self.weights)
        w[v] -= 1
        return PlumbingGraph(
            tuple(w) + (-1,), self.genera + (0,), self.edges + ((v, self.n),)
        )

    def blow_up_edge(self, k: int) -> "PlumbingGraph":
        """Blow up the intersection point of the k-th edge."""
        i, j = self.edges[k]
        w = list(self.weights)
        w[i] -= 1
        w[j] -= 1
        rest = self.edges[:k] + self.edges[k + 1:]
        new = self.n
        return PlumbingGraph(
            tuple(w) + (-1,), self.genera + (0,), rest + ((i, new), (j, new))
        )


def single_vertex(weight: int, genus: int = 0) -> PlumbingGraph:
    return PlumbingGraph((weight,), (genus,), ())


def chain_graph(weights: list[int], genera: list[int] | None = None) -> PlumbingGraph:
    n = len(weights)
    genera = genera or [0] * n
    edges = tuple((i, i + 1) for i in range(n - 1))
    return PlumbingGraph(tuple(weights), tuple(genera), edges)


def cycle_graph(weights: list[int]) -> PlumbingGraph:
    """Cycle of genus-0 curves; r = 2 is a double edge."""
    n = len(weights)
    if n < 2:
        raise GraphError("cycle graphs need r >= 2 vertices (self-loops rejected)")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return PlumbingGraph(tuple(weights), (0,) * n, tuple(edges))


def star_graph(center_weight: int, leg_weights: list[int]) -> PlumbingGraph:
    n = 1 + len(leg_weights)
    edges = tuple((0, i) for i in range(1, n))
    return PlumbingGraph((center_weight, *leg_weights), (0,) * n, edges)


def ade_chain(n: int) -> PlumbingGraph:
    """A_n: chain of n (-2)-spheres."""
    return chain_graph([-2] * n)


def e8_graph() -> PlumbingGraph:
    """E_8 tree, all weights -2 (vertex 7 hangs off vertex 4 of a 7-chain)."""
    edges = tuple((i, i + 1) for i in range(6)) + ((4, 7),)
    return PlumbingGraph((-2,) * 8, (0,) * 8, edges)


# -- file formats -----------------------------------------------------------
#
# Text format:
#   vertices N
#   v <index> weight <int> genus <int>     (N lines)
#   e <i> <j>                              (one per edge; repeats = multi-edge)
#
# JSON format: {"vertices": [{"weight": w, "genus": g}, ...], "edges": [[i, j], ...]}


def to_text(g: PlumbingGraph) -> str:
    lines = [f"vertices {g.n}"]
    for i in range(g.n):
        lines.append(f"v {i} weight {g.weights[i]} genus {g.genera[i]}")
    for i, j in g.edges:
        lines.append(f"e {i} {j}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> PlumbingGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vertices "):
        raise GraphError("graph file must start with 'vertices N'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise GraphError("unreadable vertex count") from exc
    weights: dict[int, int] = {}
    genera: dict[int, int] = {}
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "v":
            if len(parts) != 6 or parts[2] != "weight" or parts[4] != "genus":
                raise GraphError(f"bad vertex line: {ln!r}")
            idx = int(parts[1])
            if idx in weights:
                raise GraphError(f"vertex {idx} declared twice")
            weights[idx] = int(parts[3])
            genera[idx] = int(parts[5])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphError(f"bad edge line: {ln!r}")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphError(f"unrecognized line: {ln!r}")
    if sorted(weights) != list(range(n)):
        raise GraphError("vertex indices must be exactly 0..N-1")
    return PlumbingGraph(
        tuple(weights[i] for i in range(n)),
        tuple(genera[i] for i in range(n)),
        tuple(edges),
    )


def to_json_obj(g: PlumbingGraph) -> dict:
    return {
        "vertices": [
            {"weight": g.weights[i], "genus": g.genera[i]} for i in range(g.n)
        ],
        "edges": [[i, j] for i, j in g.edges],
    }


def from_json_obj(obj: dict) -> PlumbingGraph:
    try:
        verts = obj["vertices"]
        weights = tuple(int(v["weight"]) for v in verts)
        genera = tuple(int(v.get("genus", 0)) for v in verts)
        edges = tuple((int(i), int(j)) for i, j in obj.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad JSON graph: {exc}") from exc
    return PlumbingGraph(weights, genera, edges)


def load(text: str) -> PlumbingGraph:
    """Parse either format; JSON is detected by a leading '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json_obj(json.loads(stripped))
    return from_text(text)
