"""Lower bounds on algebraic connectivity from eccentricity counts.

Every bound here is a guaranteed lower bound on lambda2 for simple undirected
graphs. ``evaluate_all`` runs the whole pipeline on one graph and collects the
bound values, slacks, and tightness flags into a single report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .metrics import (
    UNREACHABLE,
    all_pairs_distances,
    count_s_ell,
    eccentricity_profile,
    power_graph,
)
from .spectral import lambda2

#: Fixed report order for bound values, slacks, and tightness flags.
BOUND_NAMES = ("s1", "s2_over_n", "g1", "g1_diam", "mohar", "g2", "lu")

#: A bound is flagged tight when slack <= TIGHTNESS_REL_TOL * max(1, lambda2).
TIGHTNESS_REL_TOL = 1e-9


def gamma(n: int, ell: int) -> float:
    """Scaling constant (ell - 2 + 4/n) * n^2 / 4; strictly positive.

    This is the factor by which the base Laplacian must be inflated to
    dominate the Laplacian of the ell-th power graph.
    """
    if n < 2:
        raise ValueError(f"gamma needs n >= 2, got {n}")
    if ell < 2:
        raise ValueError(f"gamma needs ell >= 2, got {ell}")
    return (ell - 2 + 4.0 / n) * (n * n) / 4.0


def bound_s1(s1: int) -> float:
    """Count of nodes adjacent to everything else, as a lambda2 lower bound."""
    if s1 < 0:
        raise ValueError(f"s1 must be >= 0, got {s1}")
    return float(s1)


def bound_s2_over_n(s2: int, n: int) -> float:
    """Classical bound: nodes of eccentricity at most 2, divided by n."""
    if n < 2:
        raise ValueError(f"bound_s2_over_n needs n >= 2, got {n}")
    if not 0 <= s2 <= n:
        raise ValueError(f"s2 must be in [0, {n}], got {s2}")
    return s2 / n


def bound_g1(n: int, ell: int, s_ell: int) -> float:
    """Eccentricity-count bound: s_ell / gamma(n, ell).

    At ell = 2 this reduces to the classical s2 / n bound.
    """
    if not 0 <= s_ell <= n:
        raise ValueError(f"s_ell must be in [0, {n}], got {s_ell}")
    return s_ell / gamma(n, ell)


def bound_g1_diam(n: int, d: int) -> float:
    """Diameter corollary of the eccentricity-count bound: 4 / ((d - 2 + 4/n) * n).

    At d = 1 the formula degenerates (the graph is complete), so the exact
    algebraic connectivity n is returned instead; it is the sharp lower bound
    for every graph of diameter 1.
    """
    if n < 2:
        raise ValueError(f"bound_g1_diam needs n >= 2, got {n}")
    if d == UNREACHABLE:
        raise ValueError("diameter undefined for disconnected graph")
    if d < 1:
        raise ValueError(f"diameter must be >= 1, got {d}")
    if d == 1:
        return float(n)
    return 4.0 / ((d - 2 + 4.0 / n) * n)


def bound_mohar(n: int, d: int) -> float:
    """Well-known diameter bound 4 / (d * n)."""
    if n < 2:
        raise ValueError(f"bound_mohar needs n >= 2, got {n}")
    if d == UNREACHABLE:
        raise ValueError("diameter undefined for disconnected graph")
    if d < 1:
        raise ValueError(f"diameter must be >= 1, got {d}")
    return 4.0 / (d * n)


def bound_g2(s_ell: int, ell: int, e_power: int, m: int) -> float:
    """Edge-growth bound: s_ell / (1 + ell * (e(G^ell) - m)).

    At ell = 1 the power graph is the graph itself and this reduces to s1.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if not 0 <= m <= e_power:
        raise ValueError(f"need 0 <= m <= e_power, got m={m}, e_power={e_power}")
    return s_ell / (1 + ell * (e_power - m))


def bound_lu(n: int, d: int, e_complement: int) -> float:
    """Complement-edge bound n / (1 + d * e(complement))."""
    if n < 2:
        raise ValueError(f"bound_lu needs n >= 2, got {n}")
    if d == UNREACHABLE:
        raise ValueError("diameter undefined for disconnected graph")
    if d < 1:
        raise ValueError(f"diameter must be >= 1, got {d}")
    if e_complement < 0:
        raise ValueError(f"complement edge count must be >= 0, got {e_complement}")
    return n / (1 + d * e_complement)


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (graph, ell) pair, with slacks and tightness.

    ``diameter`` is None for disconnected graphs, and diameter-dependent
    entries of ``bounds``/``slacks`` are then None ("not applicable"). The
    ``tight`` dict covers exactly the applicable bounds.
    """

    n: int
    m: int
    ell: int
    s1: int
    s2: int
    s_ell: int
    diameter: int | None
    e_power: int
    e_complement: int
    lambda2: float
    bounds: dict[str, float | None]
    slacks: dict[str, float | None]
    tight: dict[str, bool]


def evaluate_all(g: Graph, ell: int) -> BoundReport:
    """Run the full pipeline on one graph and evaluate every bound.

    Disconnected graphs are reported, not rejected: the eccentricity counts
    are all zero, the count-based bounds evaluate to 0, and the
    diameter-dependent bounds are marked not applicable.
    """
    if g.n < 2:
        raise ValueError(f"bound evaluation needs n >= 2, got n={g.n}")
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    dist = all_pairs_distances(g)
    profile = eccentricity_profile(dist)
    s1 = count_s_ell(profile, 1)
    s2 = count_s_ell(profile, 2)
    s_ell = count_s_ell(profile, ell)
    power = power_graph(g, dist, ell)
    e_complement = g.n * (g.n - 1) // 2 - g.m
    lam = lambda2(g)
    connected = profile.diameter != UNREACHABLE
    d = profile.diameter if connected else None

    bounds: dict[str, float | None] = {
        "s1": bound_s1(s1),
        "s2_over_n": bound_s2_over_n(s2, g.n),
        "g1": bound_g1(g.n, ell, s_ell),
        "g1_diam": bound_g1_diam(g.n, d) if connected else None,
        "mohar": bound_mohar(g.n, d) if connected else None,
        "g2": bound_g2(s_ell, ell, power.m, g.m),
        "lu": bound_lu(g.n, d, e_complement) if connected else None,
    }
    slacks: dict[str, float | None] = {
        name: (lam - value) if value is not None else None for name, value in bounds.items()
    }
    tight_cut = TIGHTNESS_REL_TOL * max(1.0, lam)
    tight = {name: slack <= tight_cut for name, slack in slacks.items() if slack is not None}
    return BoundReport(
        n=g.n,
        m=g.m,
        ell=ell,
        s1=s1,
        s2=s2,
        s_ell=s_ell,
        diameter=d,
        e_power=power.m,
        e_complement=e_complement,
        lambda2=lam,
        bounds=bounds,
        slacks=slacks,
        tight=tight,
    )
