"""Cusp links: smoothability test, lantern sites, and the filling family.

The graph is a cycle of rational curves with weights -a_i (a_i >= 2, some
a_j >= 3).  Non-smoothability is the multiplicity test m > r + 9 with
m = sum(a_i - 2); every vertex with a_i = 4 supports a lantern site (a
4-holed-sphere subsurface of the Gay-Mark page), and s substitutions drop
b_2 by s, so distinct substitution counts give fillings with distinct b_2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import PlumbingGraph, cycle_graph
from .openbook import OpenBook, _lantern_replacement, gay_mark_openbook
from .surfaces import TwistWord, gather_commuting, substitute


@dataclass(frozen=True)
class CuspData:
    weights: tuple[int, ...]  # the positive integers a_i

    def __post_init__(self):
        if len(self.weights) < 2:
            raise DomainError("cusp cycles need r >= 2 (self-loops rejected)")
        if any(a < 2 for a in self.weights):
            raise DomainError("cusp weights must satisfy a_i >= 2")
        if all(a < 3 for a in self.weights):
            raise DomainError("some a_j >= 3 is required (else not a cusp)")

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def multiplicity(self) -> int:
        return sum(a - 2 for a in self.weights)

    def graph(self) -> PlumbingGraph:
        return cycle_graph([-a for a in self.weights])


@dataclass(frozen=True)
class CuspFilling:
    substitutions: int
    b2: int
    word: TwistWord | None  # None when the sites cannot be made disjoint


@dataclass(frozen=True)
class CuspReport:
    data: CuspData
    non_smoothable: bool
    strong_family: bool
    lantern_sites: tuple[int, ...]
    fillings: tuple[CuspFilling, ...]


def _site_letter_indices(data: CuspData, word: TwistWord, vertex: int):
    """Positions (in the current word) of the two puncture twists of
    `vertex` and the twists along its two adjacent necks."""
    idx = [
        i for i, l in enumerate(word.letters)
        if l.name.startswith(f"bt_{vertex}_")
    ]
    r = data.r
    neighbors = {(min(vertex, (vertex + 1) % r), max(vertex, (vertex + 1) % r)),
                 (min(vertex, (vertex - 1) % r), max(vertex, (vertex - 1) % r))}
    necks = []
    for i, l in enumerate(word.letters):
        if l.name.startswith("neck_"):
            _, a, b, _ = l.name.split("_")
            if (int(a), int(b)) in neighbors and len(necks) < 2:
                necks.append(i)
    if len(idx) != 2 or len(necks) != 2:
        raise DomainError(f"vertex {vertex} does not carry a lantern site")
    return idx + necks


def _substitute_site(word: TwistWord, indices) -> TwistWord:
    word, start = gather_commuting(word, indices)
    block = [word.letters[start + t] for t in range(4)]
    bts = [l for l in block if l.name.startswith("bt_")]
    repl = _lantern_replacement(
        word.surface,
        [l.cls for l in block],
        prefix=f"lant_{bts[0].name[3:]}_",
    )
    return substitute(word, start, 4, "L", repl)


def cusp_report(weights, emit_words: bool = True) -> CuspReport:
    """Smoothability flags, lantern sites, and the b_2 family.

    The fillings list is invariant bookkeeping for s = 0..#sites (b_2 drops
    by one per substitution); words are only constructed for as many
    substitutions as can be supported on pairwise disjoint subsurfaces
    (sites at adjacent vertices share a neck twist).
    """
    data = CuspData(tuple(weights))
    sites = tuple(i for i, a in enumerate(data.weights) if a == 4)
    book = gay_mark_openbook(data.graph())

    # greedy pairwise-nonadjacent subset of sites, in index order
    disjoint: list[int] = []
    for v in sites:
        ok = all(
            (v - u) % data.r not in (1, data.r - 1) and v != u for u in disjoint
        )
        if ok:
            disjoint.append(v)

    fillings = []
    for s in range(len(sites) + 1):
        word = None
        if emit_words and s <= len(disjoint):
            word = book.word
            for v in disjoint[:s]:
                word = _substitute_site(word, _site_letter_indices(data, word, v))
        fillings.append(CuspFilling(s, data.r - s, word))
    return CuspReport(
        data=data,
        non_smoothable=data.multiplicity > data.r + 9,
        strong_family=sum(a - 3 for a in data.weights) > 9,
        lantern_sites=sites,
        fillings=tuple(fillings),
    )
