"""Inverses, resolvent membership and spectra via the left regular representation.

In a finite-dimensional unital algebra ``x`` is invertible iff ``L_x`` is
nonsingular: a solution of ``L_x y = e`` is a right inverse, and a one-sided
inverse is automatically two-sided because ``L_x`` injective implies
surjective.  Hence ``lam*e - x`` is invertible iff ``lam*I - L_x`` is, and the
spectrum of ``x`` is the eigenvalue set of ``L_x``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Element, left_regular_rep, multiply, norm
from .errors import EigenFailure, NotInvertible, ResidualFailure

INVERT_RTOL = 1e-10
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    points: tuple[complex, ...]
    multiplicities: tuple[int, ...]
    cluster_tol: float

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=complex)

    def distance_to(self, z: complex) -> float:
        return float(np.min(np.abs(self.as_array() - z)))

    def to_json(self) -> dict:
        return {
            "points": [[p.real, p.imag] for p in self.points],
            "multiplicities": list(self.multiplicities),
        }


def hausdorff(a, b) -> float:
    """Symmetric Hausdorff distance between two finite point sets in C."""
    a = np.asarray(list(a), dtype=complex).reshape(-1)
    b = np.asarray(list(b), dtype=complex).reshape(-1)
    if a.size == 0 and b.size == 0:
        return 0.0
    if a.size == 0 or b.size == 0:
        return float("inf")
    dist = np.abs(a[:, None] - b[None, :])
    return float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))


def cluster_points(values, tol: float) -> tuple[list[complex], list[int]]:
    """Merge values closer than ``tol`` into clusters; return centroids and sizes.

    Each value joins the cluster with the nearest centroid when within ``tol``.
    Centroids that drift within ``tol`` of each other are merged afterwards, so
    the returned points are pairwise more than ``tol`` apart.
    """
    clusters: list[list[complex]] = []
    centroids: list[complex] = []
    for v in sorted(np.asarray(values, dtype=complex).reshape(-1), key=lambda z: (z.real, z.imag)):
        if centroids:
            dist = np.abs(np.array(centroids) - v)
            k = int(np.argmin(dist))
            if dist[k] <= tol:
                clusters[k].append(v)
                centroids[k] = complex(np.mean(clusters[k]))
                continue
        clusters.append([v])
        centroids.append(complex(v))
    merged = True
    while merged and len(clusters) > 1:
        merged = False
        c = np.array(centroids)
        dist = np.abs(c[:, None] - c[None, :]) + np.diag(np.full(len(c), np.inf))
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        if dist[i, j] <= tol:
            i, j = min(i, j), max(i, j)
            clusters[i].extend(clusters.pop(j))
            centroids.pop(j)
            centroids[i] = complex(np.mean(clusters[i]))
            merged = True
    order = sorted(range(len(centroids)), key=lambda k: (centroids[k].real, centroids[k].imag))
    return [centroids[k] for k in order], [len(clusters[k]) for k in order]


def default_cluster_tol(L: np.ndarray) -> float:
    return 1e-8 * (1.0 + float(np.linalg.norm(L, 2)))


def _residual_bound(a: Algebra, x: Element, y: Element, tol: float) -> float:
    return tol * (1.0 + norm(a, x) * norm(a, y))


def invert(
    a: Algebra,
    x: Element,
    tol: float = INVERT_RTOL,
    residual_tol: float = RESIDUAL_TOL,
    scale: float = 0.0,
) -> Element:
    """Two-sided inverse of ``x``.

    Raises :class:`NotInvertible` when
    ``sigma_min(L_x) <= tol * max(sigma_max(L_x), scale)`` and
    :class:`ResidualFailure` when the solve goes through but ``||x y - e||``
    or ``||y x - e||`` exceeds ``residual_tol * (1 + ||x|| ||y||)``.

    ``scale`` is the size of the quantities ``x`` was computed from (e.g.
    ``|lam| + ||x||`` for ``lam*e - x``).  Without it a cancellation remnant
    such as ``1e-16 * e`` is perfectly conditioned and counts as invertible.
    """
    e = a.identity
    L = left_regular_rep(a, x)
    sv = np.linalg.svd(L, compute_uv=False)
    ref = max(sv[0], scale)
    if sv[-1] <= tol * ref:
        raise NotInvertible(f"smallest singular value {sv[-1]:.3e} <= {tol:.1e} * {ref:.3e}")
    y = Element(a, np.linalg.solve(L, e.coeffs))
    bound = _residual_bound(a, x, y, residual_tol)
    right = np.linalg.norm((multiply(a, x, y) - e).coeffs)
    left = np.linalg.norm((multiply(a, y, x) - e).coeffs)
    if max(right, left) > bound:
        raise ResidualFailure(f"inverse residuals {right:.3e} (right), {left:.3e} (left) exceed {bound:.3e}")
    return y


def is_invertible(a: Algebra, x: Element, tol: float = INVERT_RTOL, scale: float = 0.0) -> bool:
    try:
        invert(a, x, tol, scale=scale)
    except NotInvertible:
        return False
    return True


def resolvent_member(a: Algebra, x: Element, lam: complex, tol: float = INVERT_RTOL) -> bool:
    """True iff ``lam*e - x`` is invertible."""
    return is_invertible(a, lam * a.identity - x, tol, scale=abs(lam) + norm(a, x))


def spectrum(a: Algebra, x: Element, cluster_tol: float | None = None) -> Spectrum:
    """Distinct eigenvalues of ``L_x`` (clustered), with their multiplicities in ``L_x``."""
    a.identity  # NoIdentity for non-unital algebras
    L = left_regular_rep(a, x)
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(L)
    try:
        eig = np.linalg.eigvals(L)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    points, mult = cluster_points(eig, cluster_tol)
    return Spectrum(tuple(points), tuple(mult), cluster_tol)
