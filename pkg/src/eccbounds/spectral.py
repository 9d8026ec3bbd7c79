"""Dense symmetric eigensolver and spectral queries on graph Laplacians.

The eigensolver is a row-cyclic Jacobi rotation method: backward stable for
symmetric matrices, no dependency on an external LAPACK routine, and fast
enough at verification scale. Every decomposition records its residual and
eigenvector-orthogonality error in a process-global diagnostics accumulator so
test suites can assert numerical quality over everything they ran.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Graph

#: Convergence: off-diagonal Frobenius norm <= this factor times ||A||_F.
OFF_DIAG_REL_TOL = 1e-12
#: Hard cap on full cyclic sweeps before giving up.
MAX_SWEEPS = 100
#: PSD verdicts use tolerance PSD_REL_TOL * max(1, ||A||_inf) unless overridden.
PSD_REL_TOL = 1e-8

PSD = "PSD"
NOT_PSD = "NOT_PSD"


class JacobiConvergenceError(RuntimeError):
    """The sweep cap was reached before the off-diagonal mass vanished."""


@dataclass(frozen=True)
class SpectralSummary:
    """Full eigendecomposition of a symmetric matrix.

    ``vectors[:, i]`` is the unit eigenvector paired with ``eigenvalues[i]``;
    eigenvalues are sorted ascending. ``residual`` is the elementwise max of
    |A q - w q| over all pairs; ``orthogonality_error`` the elementwise max of
    |Q^T Q - I|.
    """

    eigenvalues: np.ndarray
    lambda2: float | None
    residual: float
    orthogonality_error: float
    vectors: np.ndarray
    sweeps: int


@dataclass(frozen=True)
class CertificateResult:
    """Positive-semi-definiteness verdict with the tolerance actually used."""

    min_eigenvalue: float
    tolerance: float
    verdict: str  # PSD | NOT_PSD


@dataclass
class SpectralDiagnostics:
    """Worst-case numerical quality over all decompositions since the last reset."""

    decompositions: int = 0
    max_relative_residual: float = 0.0
    max_orthogonality_error: float = 0.0

    def record(self, relative_residual: float, orthogonality_error: float) -> None:
        self.decompositions += 1
        self.max_relative_residual = max(self.max_relative_residual, relative_residual)
        self.max_orthogonality_error = max(self.max_orthogonality_error, orthogonality_error)


_diagnostics = SpectralDiagnostics()


def diagnostics() -> SpectralDiagnostics:
    return _diagnostics


def reset_diagnostics() -> None:
    global _diagnostics
    _diagnostics = SpectralDiagnostics()


def inf_norm(a: np.ndarray) -> float:
    """Matrix infinity norm (max absolute row sum)."""
    if a.size == 0:
        return 0.0
    return float(np.abs(a).sum(axis=1).max())


def laplacian(g: Graph) -> np.ndarray:
    """Degree-diagonal minus adjacency; exactly symmetric, rows sum to zero."""
    lap = -g.adjacency_matrix().astype(np.float64)
    np.fill_diagonal(lap, g.degrees().astype(np.float64))
    return lap


def eigen_decompose(a: np.ndarray) -> SpectralSummary:
    """Full symmetric eigendecomposition by cyclic Jacobi sweeps.

    Raises JacobiConvergenceError if the sweep cap is hit, and ValueError for
    a non-square or non-symmetric input.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not exactly symmetric")
    n = a.shape[0]
    work = a.copy()
    vectors = np.eye(n, dtype=np.float64)
    off_tol = OFF_DIAG_REL_TOL * float(np.linalg.norm(a, "fro"))
    sweeps, converged = _kernels.jacobi_sweeps(work, vectors, off_tol, MAX_SWEEPS)
    if not converged:
        off = float(np.sqrt(2.0 * np.sum(np.triu(work, 1) ** 2)))
        raise JacobiConvergenceError(
            f"no convergence after {MAX_SWEEPS} sweeps (n={n}, "
            f"off-diagonal norm {off:.3e}, target {off_tol:.3e})"
        )
    order = np.argsort(np.diagonal(work), kind="stable")
    eigenvalues = np.diagonal(work)[order].copy()
    vectors = vectors[:, order]
    residual = float(np.abs(a @ vectors - vectors * eigenvalues).max()) if n else 0.0
    orthogonality_error = float(np.abs(vectors.T @ vectors - np.eye(n)).max()) if n else 0.0
    _diagnostics.record(residual / max(1.0, inf_norm(a)), orthogonality_error)
    eigenvalues.flags.writeable = False
    vectors.flags.writeable = False
    return SpectralSummary(
        eigenvalues=eigenvalues,
        lambda2=float(eigenvalues[1]) if n >= 2 else None,
        residual=residual,
        orthogonality_error=orthogonality_error,
        vectors=vectors,
        sweeps=sweeps,
    )


def lambda2(g: Graph) -> float:
    """Algebraic connectivity: second smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise ValueError("algebraic connectivity undefined for fewer than 2 nodes")
    summary = eigen_decompose(laplacian(g))
    return float(summary.eigenvalues[1])


def psd_tolerance(a: np.ndarray) -> float:
    """Default PSD tolerance, scaled to the matrix magnitude."""
    return PSD_REL_TOL * max(1.0, inf_norm(a))


def is_psd(a: np.ndarray, tol: float | None = None) -> CertificateResult:
    """Certify positive semi-definiteness via the minimum eigenvalue.

    ``tol`` defaults to the shared scaled tolerance; the result records the
    tolerance actually applied.
    """
    if tol is None:
        tol = psd_tolerance(a)
    if tol < 0:
        raise ValueError(f"tolerance must be >= 0, got {tol}")
    summary = eigen_decompose(a)
    min_eigenvalue = float(summary.eigenvalues[0])
    verdict = PSD if min_eigenvalue >= -tol else NOT_PSD
    return CertificateResult(min_eigenvalue=min_eigenvalue, tolerance=float(tol), verdict=verdict)
