"""Milnor-fiber invariant formulas and the expected/unexpected verdict.

The Durfee-Laufer-Steenbrink-Wahl relations pin the Betti numbers of a
Milnor fiber in terms of the geometric genus:

    2 p_g = b2_0 + b2_plus,           4 p_g = mu + sigma + b1(Y),

and for Gorenstein singularities additionally

    mu    = 12 p_g + Z_K^2 + |V| - b1(Y),
    sigma = -8 p_g - Z_K^2 - |V|.

Since p_g is bounded above by the lattice-path bound (and pinned exactly
for rational and minimally elliptic links), every numerical invariant of a
Milnor filling is confined to a finite envelope computable from the graph;
a candidate that escapes it and does not match the minimal resolution is
unexpected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentInputsError
from .genus import best_pg_bound
from .graph import PlumbingGraph
from .lattice import (
    canonical_square,
    is_minimally_elliptic,
    is_rational,
    link_first_betti,
    minimal_model,
)

PARITIES = ("even", "odd", "unknown")


@dataclass(frozen=True)
class FillingInvariants:
    """(b1, b2 split, chi, sigma) of a candidate filling; unknown = None."""

    b1: int
    b2_plus: int | None
    b2_minus: int | None
    b2_zero: int | None
    euler: int | None = None
    sigma: int | None = None
    parity: str = "unknown"

    def __post_init__(self):
        if self.parity not in PARITIES:
            raise InconsistentInputsError(f"parity must be one of {PARITIES}")
        if self.b2 is not None and self.euler is not None:
            if self.euler != 1 - self.b1 + self.b2:
                raise InconsistentInputsError(
                    f"euler {self.euler} != 1 - b1 + b2 = {1 - self.b1 + self.b2}"
                )
        if None not in (self.sigma, self.b2_plus, self.b2_minus):
            if self.sigma != self.b2_plus - self.b2_minus:
                raise InconsistentInputsError("sigma != b2_plus - b2_minus")

    @property
    def b2(self) -> int | None:
        parts = (self.b2_plus, self.b2_minus, self.b2_zero)
        if None in parts:
            if self.euler is not None:
                return self.euler - 1 + self.b1
            return None
        return sum(parts)


@dataclass(frozen=True)
class Verdict:
    status: str  # "consistent" | "unexpected"
    match: str | None  # "milnor" | "minimal_resolution" | None
    reasons: tuple[str, ...]
    notes: tuple[str, ...] = ()

    @property
    def unexpected(self) -> bool:
        return self.status == "unexpected"


def milnor_invariants(
    g: PlumbingGraph, p_g: int, gorenstein: bool
) -> FillingInvariants:
    """Invariants any Milnor fiber with the given p_g must carry."""
    b1y = link_first_betti(g)
    if 2 * p_g < b1y:
        raise InconsistentInputsError(
            f"no Milnor fiber with this p_g: 2 p_g = {2 * p_g} < b1(Y) = {b1y}"
        )
    b2_zero = b1y
    b2_plus = 2 * p_g - b1y
    if not gorenstein:
        return FillingInvariants(0, b2_plus, None, b2_zero)
    zk2 = canonical_square(g)
    mu = 12 * p_g + zk2 + g.n - b1y
    sigma = -8 * p_g - zk2 - g.n
    if mu.denominator != 1 or sigma.denominator != 1:
        raise InconsistentInputsError(
            "Gorenstein formulas gave non-integral invariants (bad graph/p_g pair)"
        )
    mu, sigma = int(mu), int(sigma)
    b2_minus = mu - b2_plus - b2_zero
    if b2_minus < 0 or sigma != b2_plus - b2_minus:
        raise InconsistentInputsError(
            "Gorenstein cross-check failed: mu/sigma determinations disagree"
        )
    return FillingInvariants(
        0, b2_plus, b2_minus, b2_zero, euler=1 + mu, sigma=sigma
    )


@dataclass(frozen=True)
class Envelope:
    p_g_max: int  # lattice-path bound
    p_g_exact: bool  # DP completed (vs greedy fallback)
    p_g_known: int | None  # exact p_g when topology pins it (0 or 1)
    b1_link: int
    b2_zero_required: int
    b2_plus_max: int
    rational: bool
    minimally_elliptic: bool
    gorenstein_table: tuple[tuple[int, int, int], ...]  # (p_g, mu, sigma)
    lin_applicable: bool
    minimal_resolution_b2: int
    minimal_resolution_b1: int
    stipsicz_bound: int | None  # lower bound for 2 chi + 3 sigma, if evaluated
    cusp_non_smoothable: bool | None  # None when the graph is not a cusp cycle
    single_vertex_pg_cap: int | None  # the uniform g^2 bound, single vertex only


def envelope(g: PlumbingGraph) -> Envelope:
    """Everything the link knows about its possible Milnor fillings."""
    b1y = link_first_betti(g)
    pg = best_pg_bound(g)
    rational = is_rational(g)
    min_ell = is_minimally_elliptic(g)
    p_g_known = 0 if rational else 1 if min_ell else None

    zk2 = canonical_square(g)
    table = []
    pg_ceiling = p_g_known if p_g_known is not None else pg.bound
    if pg_ceiling <= 4096:
        for p in range(p_g_known or 0, pg_ceiling + 1):
            if 2 * p < b1y:
                continue
            mu = 12 * p + zk2 + g.n - b1y
            sigma = -8 * p - zk2 - g.n
            if mu.denominator == 1 and sigma.denominator == 1:
                table.append((p, int(mu), int(sigma)))

    _, min_b2, _ = minimal_model(g)
    stipsicz = None
    single_cap = None
    if g.n == 1:
        gv, b = g.genera[0], -g.weights[0]
        stipsicz = -2 * (2 * gv + b - 2)
        single_cap = gv * gv

    return Envelope(
        p_g_max=pg.bound,
        p_g_exact=pg.exact,
        p_g_known=p_g_known,
        b1_link=b1y,
        b2_zero_required=b1y,
        b2_plus_max=2 * pg.bound - b1y,
        rational=rational,
        minimally_elliptic=min_ell,
        gorenstein_table=tuple(table),
        lin_applicable=min_ell and b1y == 0,
        minimal_resolution_b2=min_b2,
        minimal_resolution_b1=b1y,
        stipsicz_bound=stipsicz,
        cusp_non_smoothable=(
            _cusp_multiplicity(g) > g.n + 9 if g.is_cycle_of_spheres() else None
        ),
        single_vertex_pg_cap=single_cap,
    )


def _cusp_multiplicity(g: PlumbingGraph) -> int:
    return sum(-w - 2 for w in g.weights)


def _matches_minimal_resolution(env: Envelope, inv: FillingInvariants) -> bool:
    if inv.b1 != env.minimal_resolution_b1:
        return False
    if inv.b2 is None or inv.b2 != env.minimal_resolution_b2:
        return False
    # the resolution is negative definite with no null part
    if inv.b2_plus not in (None, 0):
        return False
    if inv.b2_zero not in (None, 0):
        return False
    return True


def classify_filling(g: PlumbingGraph, inv: FillingInvariants) -> Verdict:
    """Invariant-level shadow of "unexpected": consistent iff the numbers
    could belong to a Milnor fiber (within the envelope) or to the minimal
    resolution.  Every violated constraint becomes a reason."""
    env = envelope(g)
    notes: list[str] = []

    if _matches_minimal_resolution(env, inv):
        return Verdict("consistent", "minimal_resolution", (), tuple(notes))

    reasons: list[str] = []

    if inv.b1 != 0:
        reasons.append(f"b1 = {inv.b1} != 0 (Milnor fibers have b1 = 0)")

    if inv.b2_zero is not None and inv.b2_zero != env.b2_zero_required:
        reasons.append(
            f"b2_zero = {inv.b2_zero} != b1(Y) = {env.b2_zero_required}"
        )

    if inv.b2_zero is not None and inv.b2_plus is not None:
        two_pg = inv.b2_zero + inv.b2_plus
        if two_pg % 2 != 0:
            reasons.append(f"b2_zero + b2_plus = {two_pg} is odd; must equal 2 p_g")
        if two_pg > 2 * env.p_g_max:
            reasons.append(
                f"2 p_g = {two_pg} > 2 p_g_max = {2 * env.p_g_max}"
            )
        if env.p_g_known is not None and two_pg != 2 * env.p_g_known:
            kind = "rational" if env.rational else "minimally elliptic"
            reasons.append(
                f"2 p_g = {two_pg} but the {kind} link forces p_g = {env.p_g_known}"
            )
        if (
            env.single_vertex_pg_cap is not None
            and two_pg > 2 * env.single_vertex_pg_cap
        ):
            reasons.append(
                f"2 p_g = {two_pg} > 2 g^2 = {2 * env.single_vertex_pg_cap}"
                " (uniform single-vertex bound)"
            )

    if env.minimally_elliptic:
        if env.lin_applicable and inv.b2_plus is not None and inv.b2_plus != 2:
            reasons.append(
                f"b2_plus = {inv.b2_plus} != 2 (minimally elliptic QHS link)"
            )
        row = next((r for r in env.gorenstein_table if r[0] == 1), None)
        if row is not None:
            _, mu_expected, sigma_expected = row
            if inv.b2 is not None and inv.b2 != mu_expected:
                reasons.append(
                    f"b2 = {inv.b2} != mu = {mu_expected} (Gorenstein, p_g = 1)"
                )
            if inv.sigma is not None and inv.sigma != sigma_expected:
                reasons.append(
                    f"sigma = {inv.sigma} != {sigma_expected} (Gorenstein, p_g = 1)"
                )
        if env.lin_applicable and inv.parity == "odd":
            reasons.append(
                "odd intersection form (Stein fillings of this link are even)"
            )
        if (
            env.lin_applicable
            and inv.b2_minus is not None
            and inv.b2_plus is not None
            and inv.b2_plus > 0
            and inv.b2_minus % 8 != 2
        ):
            notes.append(
                f"b2_minus = {inv.b2_minus} is not of the form 8h+10; congruence"
                " recorded but not enforced (the constant h is not pinned by"
                " lattice data)"
            )

    if env.cusp_non_smoothable:
        reasons.append(
            "link of a non-smoothable cusp: the only Milnor filling is the"
            " minimal resolution"
        )

    if env.stipsicz_bound is not None and inv.euler is not None and inv.sigma is not None:
        if 2 * inv.euler + 3 * inv.sigma < env.stipsicz_bound:
            reasons.append(
                f"2 chi + 3 sigma = {2 * inv.euler + 3 * inv.sigma} <"
                f" {env.stipsicz_bound} (Boothby-Wang lower bound)"
            )
    elif env.stipsicz_bound is None:
        notes.append("Stipsicz bound exists but is unevaluated for this link")

    # chi-route shadow of the envelope: chi <= 12 g^2 - 2g + 2b - 1
    if env.single_vertex_pg_cap is not None and inv.euler is not None:
        gv, b = g.genera[0], -g.weights[0]
        chi_cap = 12 * env.single_vertex_pg_cap - 2 * gv + 2 * b - 1
        if inv.euler > chi_cap:
            reasons.append(
                f"chi = {inv.euler} > {chi_cap} (Euler-characteristic envelope)"
            )

    if reasons:
        return Verdict("unexpected", None, tuple(reasons), tuple(notes))
    return Verdict("consistent", "milnor", (), tuple(notes))
