"""Finite-dimensional complex algebras given by structure constants.

An algebra of dimension ``d`` is a ``d x d x d`` complex tensor ``c`` with
``b_i * b_j = sum_k c[i, j, k] b_k``.  Elements are coefficient vectors in
that basis.  Everything downstream (spectra, stars, functional calculus)
goes through :func:`left_regular_rep`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from numbers import Number
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidAlgebra, NoIdentity


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=complex)
    arr.flags.writeable = False
    return arr


class Algebra:
    """An associative algebra over C defined by its multiplication tensor.

    The constructor only checks shape and finiteness; associativity of
    user-supplied constants is reported by :func:`check_associativity`.
    """

    def __init__(
        self,
        tensor,
        labels: Sequence[str] | None = None,
        name: str = "algebra",
        *,
        matrix_size: int | None = None,
        semigroup=None,
    ):
        tensor = np.asarray(tensor, dtype=complex)
        if tensor.ndim != 3 or len(set(tensor.shape)) != 1 or tensor.shape[0] == 0:
            raise InvalidAlgebra(f"structure tensor must be d x d x d with d >= 1, got {tensor.shape}")
        if not np.all(np.isfinite(tensor)):
            raise InvalidAlgebra("structure tensor has non-finite entries")
        self.tensor = _frozen(tensor)
        self.dim = tensor.shape[0]
        if labels is None:
            labels = [f"b{i}" for i in range(self.dim)]
        labels = [str(s) for s in labels]
        if len(labels) != self.dim:
            raise InvalidAlgebra(f"expected {self.dim} basis labels, got {len(labels)}")
        self.labels = tuple(labels)
        self.name = name
        # provenance for catalog algebras, used by stars and serialization
        self.matrix_size = matrix_size
        self.semigroup = semigroup

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim})"

    def element(self, coeffs) -> "Element":
        return Element(self, coeffs)

    def basis(self, i: int) -> "Element":
        v = np.zeros(self.dim, dtype=complex)
        v[i] = 1
        return Element(self, v)

    def zero(self) -> "Element":
        return Element(self, np.zeros(self.dim, dtype=complex))

    @cached_property
    def identity(self) -> "Element":
        """The identity element; raises :class:`NoIdentity` if there is none."""
        return find_identity(self).element

    def scalar(self, value: complex) -> "Element":
        return value * self.identity

    @cached_property
    def tensor_norm(self) -> float:
        return float(np.linalg.norm(self.tensor))

    def is_commutative(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.tensor - self.tensor.transpose(1, 0, 2))) <= tol)


@dataclass(frozen=True, eq=False)
class Element:
    """A coefficient vector over the basis of ``algebra``.

    Supports ``+``, ``-``, scalar multiplication and the algebra product
    via ``*`` between elements.
    """

    algebra: Algebra
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if coeffs.shape[0] != self.algebra.dim:
            raise DimensionMismatch(
                f"element has {coeffs.shape[0]} coefficients, algebra has dimension {self.algebra.dim}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("element has non-finite coefficients")
        object.__setattr__(self, "coeffs", _frozen(coeffs))

    def _check(self, other: "Element") -> None:
        if other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch("elements live in algebras of different dimension")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self):
        return Element(self.algebra, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        if isinstance(other, Number):
            return Element(self.algebra, self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return Element(self.algebra, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return Element(self.algebra, self.coeffs / other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"Element({np.array2string(self.coeffs, precision=4)})"


@dataclass(frozen=True)
class IdentityElement:
    element: Element
    residual: float

    @property
    def coeffs(self) -> np.ndarray:
        return self.element.coeffs


@dataclass(frozen=True)
class AssociativityReport:
    max_residual: float
    ok: bool


def _coeffs(a: Algebra, x) -> np.ndarray:
    if isinstance(x, Element):
        c = x.coeffs
    else:
        c = np.asarray(x, dtype=complex).reshape(-1)
    if c.shape[0] != a.dim:
        raise DimensionMismatch(f"element has {c.shape[0]} coefficients, algebra has dimension {a.dim}")
    return c


def multiply(a: Algebra, x: Element, y: Element) -> Element:
    """Algebra product: ``result_k = sum_{i,j} x_i y_j c[i, j, k]``."""
    xc, yc = _coeffs(a, x), _coeffs(a, y)
    return Element(a, np.einsum("i,j,ijk->k", xc, yc, a.tensor))


def left_regular_rep(a: Algebra, x: Element) -> np.ndarray:
    """Matrix of ``y -> x*y`` in the basis, so ``L @ y.coeffs == (x*y).coeffs``."""
    return np.einsum("i,ijk->kj", _coeffs(a, x), a.tensor)


def right_regular_rep(a: Algebra, x: Element) -> np.ndarray:
    """Matrix of ``y -> y*x``."""
    return np.einsum("j,ijk->ki", _coeffs(a, x), a.tensor)


def identity_tolerance(a: Algebra) -> float:
    return 1e-9 * (1.0 + a.tensor_norm)


def find_identity(a: Algebra, tol: float | None = None) -> IdentityElement:
    """Solve ``e*b_j = b_j`` and ``b_j*e = b_j`` for all j by least squares.

    A two-sided identity is unique whenever it exists (``e = e*e' = e'``),
    so only existence can fail.
    """
    if tol is None:
        tol = identity_tolerance(a)
    d = a.dim
    eye = np.eye(d, dtype=complex)
    # row (j, k) of the left system: sum_i e_i c[i, j, k] = delta_jk
    left = a.tensor.transpose(1, 2, 0).reshape(d * d, d)
    right = a.tensor.transpose(0, 2, 1).reshape(d * d, d)
    system = np.vstack([left, right])
    rhs = np.concatenate([eye.reshape(-1), eye.reshape(-1)])
    e, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    residual = _identity_residual(a, e)
    # lstsq leaves ~1 ulp noise; keep the rounded solution when it is at least as good
    snapped = np.round(e.real, 12) + 1j * np.round(e.imag, 12)
    snapped_residual = _identity_residual(a, snapped)
    if snapped_residual <= residual:
        e, residual = snapped, snapped_residual
    if residual > tol:
        raise NoIdentity(f"no two-sided identity: least-squares residual {residual:.3e} exceeds {tol:.3e}", residual)
    return IdentityElement(Element(a, e), residual)


def _identity_residual(a: Algebra, e: np.ndarray) -> float:
    eye = np.eye(a.dim)
    left = np.einsum("i,ijk->jk", e, a.tensor)  # row j holds e*b_j
    right = np.einsum("i,jik->jk", e, a.tensor)  # row j holds b_j*e
    return float(max(np.linalg.norm(left - eye, axis=1).max(), np.linalg.norm(right - eye, axis=1).max()))


def associativity_residuals(a: Algebra) -> np.ndarray:
    """Array ``r[i, j, l] = ||(b_i b_j) b_l - b_i (b_j b_l)||``."""
    c = a.tensor
    lhs = np.einsum("ijk,klm->ijlm", c, c)
    rhs = np.einsum("jlk,ikm->ijlm", c, c)
    return np.linalg.norm(lhs - rhs, axis=-1)


def check_associativity(a: Algebra, tol: float | None = None) -> AssociativityReport:
    if tol is None:
        tol = 1e-12 * (1.0 + a.tensor_norm**2)
    residual = float(associativity_residuals(a).max())
    return AssociativityReport(max_residual=residual, ok=residual <= tol)


def norm(a: Algebra, x: Element) -> float:
    """Operator norm of ``L_x`` w.r.t. the Euclidean coefficient norm."""
    return float(np.linalg.norm(left_regular_rep(a, x), 2))


def random_elements(a: Algebra, count: int, rng: np.random.Generator) -> list[Element]:
    """Elements with coefficients uniform in the closed unit disk."""
    r = np.sqrt(rng.uniform(size=(count, a.dim)))
    theta = rng.uniform(0, 2 * np.pi, size=(count, a.dim))
    return [Element(a, row) for row in r * np.exp(1j * theta)]
