"""Invariants of the Lefschetz fibration over the disc defined by a word.

chi comes from the page and the letter count, H_1 from the cokernel of
the vanishing-cycle classes, sigma from the relator ledger (with a -1
correction when the associated pencil's fiber has positive square), and
the (b2_plus, b2_minus, b2_zero) split from sigma plus boundary data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .envelope import FillingInvariants, Verdict, classify_filling
from .errors import DomainError, InconsistentInputsError
from .graph import PlumbingGraph
from .lattice import link_first_betti
from .smith import cokernel
from .surfaces import TwistWord, ledger_signature


@dataclass(frozen=True)
class FibrationReport:
    euler: int
    h1_rank: int
    h1_torsion: tuple[int, ...]
    b2: int
    b2_zero: int | None
    b2_plus: int | None
    b2_minus: int | None
    sigma: int | None
    allowable: bool
    parity: str


def fibration_euler(word: TwistWord) -> int:
    s = word.surface
    return (2 - 2 * s.genus - s.boundary) + len(word)


def fibration_h1(word: TwistWord) -> tuple[int, tuple[int, ...]]:
    """H_1 of the total space: H_1(page) / span(vanishing cycle classes)."""
    rank = word.surface.rank
    if not len(word):
        return rank, ()
    free, torsion = cokernel(word.classes_matrix(), rank)
    return free, tuple(torsion)


def fibration_signature(
    word: TwistWord, ledger=None, fiber_cap_square: int = 0
) -> int | None:
    """Ledger signature minus sign(fiber square); None when unavailable."""
    if ledger is None:
        ledger = word.ledger
    if not ledger:
        return None
    base = ledger_signature(ledger)
    if base is None:
        return None
    if fiber_cap_square < 0:
        raise DomainError("negative fiber square does not arise for these links")
    return base - (1 if fiber_cap_square > 0 else 0)


def fibration_split(
    word: TwistWord, graph: PlumbingGraph, sigma: int
) -> tuple[int, int, int]:
    """(b2_plus, b2_minus, b2_zero), given the boundary graph and sigma."""
    h1_rank, _ = fibration_h1(word)
    b1y = link_first_betti(graph)
    b2_zero = b1y - h1_rank
    b2 = fibration_euler(word) - 1 + h1_rank
    nondeg = b2 - b2_zero
    if b2_zero < 0 or nondeg < 0:
        raise InconsistentInputsError("inconsistent inputs: negative rank")
    if (nondeg + sigma) % 2 != 0:
        raise InconsistentInputsError(
            f"inconsistent inputs: b2 - b2_zero + sigma = {nondeg + sigma} is odd"
        )
    b2_plus = (nondeg + sigma) // 2
    b2_minus = nondeg - b2_plus
    if b2_plus < 0 or b2_minus < 0:
        raise InconsistentInputsError("inconsistent inputs: negative split")
    return b2_plus, b2_minus, b2_zero


def full_report(
    word: TwistWord,
    graph: PlumbingGraph,
    ledger=None,
    fiber_cap_square: int | None = None,
    parity: str = "unknown",
) -> tuple[FibrationReport, Verdict]:
    """Compose the four invariant computations and classify the result.

    The fiber square of the associated pencil defaults to the page boundary
    count (the number of base points) when a ledger is present.
    """
    if ledger is None:
        ledger = word.ledger
    euler = fibration_euler(word)
    h1_rank, h1_torsion = fibration_h1(word)
    b2 = euler - 1 + h1_rank
    if fiber_cap_square is None:
        fiber_cap_square = word.surface.boundary
    sigma = fibration_signature(word, ledger, fiber_cap_square)
    if sigma is not None:
        b2_plus, b2_minus, b2_zero = fibration_split(word, graph, sigma)
    else:
        b2_plus = b2_minus = None
        b2_zero = link_first_betti(graph) - h1_rank
    report = FibrationReport(
        euler=euler,
        h1_rank=h1_rank,
        h1_torsion=h1_torsion,
        b2=b2,
        b2_zero=b2_zero,
        b2_plus=b2_plus,
        b2_minus=b2_minus,
        sigma=sigma,
        allowable=word.allowable,
        parity=parity,
    )
    inv = FillingInvariants(
        b1=h1_rank,
        b2_plus=b2_plus,
        b2_minus=b2_minus,
        b2_zero=b2_zero,
        euler=euler,
        sigma=sigma,
        parity=parity,
    )
    return report, classify_filling(graph, inv)
