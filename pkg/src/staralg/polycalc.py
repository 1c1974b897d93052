"""Polynomials over C and their evaluation on algebra elements."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import matrix_balance

from .algebra import Algebra, Element, multiply, norm
from .errors import ZeroPolynomial
from .spectral import INVERT_RTOL, cluster_points, hausdorff, is_invertible, spectrum

TRIM_RTOL = 1e-14


class Polynomial:
    """``c_0 + c_1 z + ... + c_m z^m`` with coefficients in ascending order.

    Trailing coefficients with ``|c| <= 1e-14 * max|c_j|`` are dropped; the
    zero polynomial has an empty coefficient list and degree ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        if c.size:
            cutoff = TRIM_RTOL * np.max(np.abs(c))
            nz = np.nonzero(np.abs(c) > cutoff)[0]
            c = c[: nz[-1] + 1] if nz.size else c[:0]
        c.flags.writeable = False
        self.coeffs = c

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return None if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def leading(self) -> complex:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return complex(self.coeffs[-1])

    def __call__(self, z):
        return eval_scalar(self, z)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[complex(c) for c in self.coeffs]})"

    def to_json(self) -> dict:
        return {"coeffs": [[c.real, c.imag] for c in self.coeffs]}


@dataclass(frozen=True)
class RootList:
    roots: tuple[complex, ...]
    leading: complex

    def product_form(self, z):
        """Evaluate ``leading * prod(z - root)``."""
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.leading, dtype=complex)
        for r in self.roots:
            out = out * (z - r)
        return out


@dataclass(frozen=True)
class InvertibilityVerdict:
    verdict: bool
    roots: tuple[complex, ...]
    witnesses: tuple[bool, ...]
    # invertibility of p(x) itself, for cross-checking the factorwise verdict
    direct: bool


@dataclass(frozen=True)
class SpectralMappingReport:
    hausdorff: float
    ok: bool
    image: tuple[complex, ...]
    direct: tuple[complex, ...]
    # max distance from a point of ``direct`` to ``image``: the "onto" half
    surjectivity_gap: float


def eval_scalar(p: Polynomial, z):
    """Horner evaluation at a scalar or array of scalars."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros(z.shape, dtype=complex)
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc) if acc.ndim == 0 else acc


def eval_element(p: Polynomial, a: Algebra, x: Element) -> Element:
    """``p(x)`` by Horner's scheme; ``x**0`` is the identity ``e``."""
    e = a.identity
    acc = a.zero()
    for c in p.coeffs[::-1]:
        acc = multiply(a, acc, x) + complex(c) * e
    return acc


def poly_add(p1: Polynomial, p2: Polynomial) -> Polynomial:
    n = max(len(p1.coeffs), len(p2.coeffs))
    out = np.zeros(n, dtype=complex)
    out[: len(p1.coeffs)] += p1.coeffs
    out[: len(p2.coeffs)] += p2.coeffs
    return Polynomial(out)


def poly_mul(p1: Polynomial, p2: Polynomial) -> Polynomial:
    if p1.is_zero or p2.is_zero:
        return Polynomial()
    return Polynomial(np.convolve(p1.coeffs, p2.coeffs))


def poly_compose(p1: Polynomial, p2: Polynomial) -> Polynomial:
    """``p1(p2(z))``, by Horner's scheme over polynomials."""
    acc = Polynomial()
    for c in p1.coeffs[::-1]:
        acc = poly_add(poly_mul(acc, p2), Polynomial([c]))
    return acc


def companion_matrix(p: Polynomial) -> np.ndarray:
    """Companion matrix of the monic normalisation of ``p`` (degree >= 1)."""
    m = p.degree
    monic = p.coeffs / p.coeffs[-1]
    comp = np.zeros((m, m), dtype=complex)
    comp[1:, :-1] = np.eye(m - 1)
    comp[:, -1] = -monic[:-1]
    return comp


def poly_roots(p: Polynomial) -> RootList:
    """Zeros of ``p`` with multiplicity, from the balanced companion matrix."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no factorisation")
    if p.degree == 0:
        return RootList((), p.leading)
    balanced, _ = matrix_balance(companion_matrix(p), permute=False)
    roots = np.linalg.eigvals(balanced)
    roots = sorted((complex(r) for r in roots), key=lambda z: (z.real, z.imag))
    return RootList(tuple(roots), p.leading)


def invertible_via_roots(a: Algebra, x: Element, p: Polynomial, tol: float = INVERT_RTOL) -> InvertibilityVerdict:
    """Decide invertibility of ``p(x)`` factor by factor: each ``x - zeta*e`` must be invertible."""
    rl = poly_roots(p)
    e = a.identity
    nx = norm(a, x)
    witnesses = tuple(is_invertible(a, x - zeta * e, tol, scale=nx + abs(zeta)) for zeta in rl.roots)
    direct = is_invertible(a, eval_element(p, a, x), tol, scale=evaluation_scale(p, a, x))
    return InvertibilityVerdict(all(witnesses), rl.roots, witnesses, direct)


def evaluation_scale(p: Polynomial, a: Algebra, x: Element) -> float:
    """``sum |c_k| ||x||^k``: size of the terms summed when evaluating ``p(x)``."""
    return float(eval_scalar(Polynomial(np.abs(p.coeffs)), norm(a, x)).real)


def spectral_mapping_check(a: Algebra, x: Element, p: Polynomial, tol: float = 1e-7) -> SpectralMappingReport:
    """Compare ``p(spectrum(x))`` with ``spectrum(p(x))`` in Hausdorff distance."""
    sx = spectrum(a, x)
    direct = spectrum(a, eval_element(p, a, x))
    image_raw = eval_scalar(p, sx.as_array())
    image, _ = cluster_points(image_raw, direct.cluster_tol)
    dist = hausdorff(image, direct.points)
    gap = float(np.max(np.min(np.abs(direct.as_array()[:, None] - np.array(image)[None, :]), axis=1)))
    return SpectralMappingReport(
        hausdorff=dist, ok=dist <= tol, image=tuple(image), direct=direct.points, surjectivity_gap=gap
    )
