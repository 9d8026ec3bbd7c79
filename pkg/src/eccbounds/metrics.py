"""Shortest-path distances, eccentricities, threshold counts, and graph powers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Final

import numpy as np

from . import _kernels
from .graphs import Graph

#: Sentinel for "no path exists" in distance and eccentricity arrays.
#: Kept negative so it can never be mistaken for a true distance, and so that
#: naive comparisons like ``d <= ell`` must mask it out explicitly.
UNREACHABLE: Final[int] = -1


@dataclass(frozen=True)
class DistanceMatrix:
    """Exact unweighted shortest-path distances; UNREACHABLE marks absent paths."""

    n: int
    dist: np.ndarray  # (n, n) int64

    def __post_init__(self):
        self.dist.flags.writeable = False


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-node eccentricities and the diameter.

    A node unable to reach some other node has eccentricity UNREACHABLE; the
    diameter is UNREACHABLE exactly when the graph is disconnected (n >= 2).
    """

    ecc: np.ndarray  # (n,) int64
    diameter: int

    def __post_init__(self):
        self.ecc.flags.writeable = False


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every node; exact distances, UNREACHABLE across components."""
    dist = _kernels.bfs_all_pairs(g.indptr, g.indices, g.n)
    return DistanceMatrix(g.n, dist)


def eccentricity_profile(d: DistanceMatrix) -> EccentricityProfile:
    has_unreachable = (d.dist == UNREACHABLE).any(axis=1)
    ecc = d.dist.max(axis=1)
    ecc[has_unreachable] = UNREACHABLE
    diameter = UNREACHABLE if has_unreachable.any() else int(ecc.max())
    return EccentricityProfile(ecc, diameter)


def count_s_ell(e: EccentricityProfile, ell: int) -> int:
    """Number of nodes with finite eccentricity at most ell.

    Zero for disconnected graphs, where every eccentricity is UNREACHABLE.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return int(np.count_nonzero((e.ecc >= 0) & (e.ecc <= ell)))


def power_graph(g: Graph, d: DistanceMatrix, ell: int) -> Graph:
    """Graph on the same nodes with an edge wherever 1 <= distance <= ell."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if d.n != g.n:
        raise ValueError(f"distance matrix is for n={d.n}, graph has n={g.n}")
    adj = (d.dist >= 1) & (d.dist <= ell)
    return Graph.from_adjacency(adj)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(int(w))
    return count == g.n
