"""Numerical certificates for the matrix inequalities behind the bounds.

Each eccentricity-count bound rests on a matrix being positive semi-definite:

* ``gamma(n, ell) * L(G) - L(G^ell)`` for the gamma-scaled bound, and
* ``(1 + ell * (e(G^ell) - m)) * L(G) - L(G^ell)`` for the edge-growth bound.

This module builds those matrices on concrete graphs and certifies them via
the eigensolver. ``check_chain`` verifies the spectral chain connecting the
two Laplacians: lambda2(G) >= lambda2(G^ell) / gamma >= s1(G^ell) / gamma,
where s1(G^ell) equals s_ell(G).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import gamma
from .graphs import Graph
from .metrics import (
    UNREACHABLE,
    all_pairs_distances,
    count_s_ell,
    eccentricity_profile,
    power_graph,
)
from .spectral import CertificateResult, eigen_decompose, is_psd, laplacian

#: Relative tolerance for the two inequality links of the spectral chain.
CHAIN_REL_TOL = 1e-9


@dataclass(frozen=True)
class ChainCheck:
    """Result of verifying the three-link spectral chain on one (graph, ell).

    The links, in order:

    1. lambda2_g >= lambda2_power / gamma_val  (within tolerance)
    2. lambda2_power >= s1_power               (within tolerance)
    3. s1_power == s_ell                       (exact integer equality)
    """

    lambda2_g: float
    lambda2_power: float
    gamma_val: float
    s1_power: int
    s_ell: int
    links_hold: tuple[bool, bool, bool]

    @property
    def all_hold(self) -> bool:
        return all(self.links_hold)


def _require_connected(diameter: int, operation: str) -> None:
    if diameter == UNREACHABLE:
        raise ValueError(f"{operation} requires a connected graph")


def certify_g1_matrix(g: Graph, ell: int, tol: float | None = None) -> CertificateResult:
    """Certify that gamma(n, ell) * L(G) - L(G^ell) is positive semi-definite.

    The graph must be connected; this is the hypothesis under which the
    matrix inequality holds. ``tol`` overrides the default scaled PSD
    tolerance; the tolerance actually used is recorded in the result.
    """
    if g.n < 2:
        raise ValueError(f"certificate needs n >= 2, got n={g.n}")
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    dist = all_pairs_distances(g)
    profile = eccentricity_profile(dist)
    _require_connected(profile.diameter, "certify_g1_matrix")
    power = power_graph(g, dist, ell)
    matrix = gamma(g.n, ell) * laplacian(g) - laplacian(power)
    return is_psd(matrix, tol)


def certify_g2_matrix(g: Graph, ell: int, tol: float | None = None) -> CertificateResult:
    """Certify that (1 + ell*(e(G^ell) - m)) * L(G) - L(G^ell) is PSD.

    Valid for ell >= 1 and for disconnected graphs as well; at ell = 1 the
    matrix is identically zero. ``tol`` overrides the default scaled PSD
    tolerance.
    """
    if g.n < 2:
        raise ValueError(f"certificate needs n >= 2, got n={g.n}")
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    dist = all_pairs_distances(g)
    power = power_graph(g, dist, ell)
    coeff = 1 + ell * (power.m - g.m)
    matrix = float(coeff) * laplacian(g) - laplacian(power)
    return is_psd(matrix, tol)


def check_chain(g: Graph, ell: int) -> ChainCheck:
    """Verify the spectral chain lambda2(G) >= lambda2(G^ell)/gamma >= s_ell/gamma.

    s1 of the power graph is computed from the power graph's own eccentricity
    profile (a full BFS on G^ell), independently of s_ell(G), so link 3 is a
    genuine cross-check rather than a tautology.
    """
    if g.n < 2:
        raise ValueError(f"chain check needs n >= 2, got n={g.n}")
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    dist = all_pairs_distances(g)
    profile = eccentricity_profile(dist)
    _require_connected(profile.diameter, "check_chain")
    s_ell = count_s_ell(profile, ell)
    power = power_graph(g, dist, ell)
    power_profile = eccentricity_profile(all_pairs_distances(power))
    s1_power = count_s_ell(power_profile, 1)

    lambda2_g = eigen_decompose(laplacian(g)).lambda2
    lambda2_power = eigen_decompose(laplacian(power)).lambda2
    gamma_val = gamma(g.n, ell)
    assert lambda2_g is not None and lambda2_power is not None

    link1 = lambda2_g >= lambda2_power / gamma_val - CHAIN_REL_TOL * max(1.0, lambda2_g)
    link2 = lambda2_power >= s1_power - CHAIN_REL_TOL * max(1.0, lambda2_power)
    link3 = s1_power == s_ell
    return ChainCheck(
        lambda2_g=lambda2_g,
        lambda2_power=lambda2_power,
        gamma_val=gamma_val,
        s1_power=s1_power,
        s_ell=s_ell,
        links_hold=(link1, link2, link3),
    )
