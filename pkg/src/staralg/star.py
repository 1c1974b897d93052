"""Involutions and binvolutions on finite-dimensional algebras.

A conjugate-linear map is stored as a matrix ``S`` with
``coeffs(x*) = S @ conj(coeffs(x))``, so conjugate-linearity holds by
construction and the remaining axioms become matrix identities:

* ``(x*)* = x``          iff ``S @ conj(S) == I``
* ``(xy)* = y* x*``      involution (antimultiplicative)
* ``(xy)* = x* y*``      binvolution (multiplicative)

Both product laws are sesquilinear in ``(x, y)``, so checking them on basis
pairs is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .algebra import Algebra, Element, multiply, norm, random_elements
from .catalog import SemigroupTable, matrix_algebra, semigroup_algebra, validate_semigroup
from .errors import Degenerate, DimensionMismatch, NotAGroup, NotHermitian, NotInvolutive

Kind = Literal["involution", "binvolution", "both", "neither"]
DeclaredKind = Literal["involution", "binvolution", "unspecified"]


@dataclass(frozen=True, eq=False)
class StarStructure:
    algebra: Algebra
    S: np.ndarray
    declared_kind: DeclaredKind = "unspecified"

    def __post_init__(self):
        S = np.array(self.S, dtype=complex)
        d = self.algebra.dim
        if S.shape != (d, d):
            raise DimensionMismatch(f"star matrix must be {d} x {d}, got {S.shape}")
        S.flags.writeable = False
        object.__setattr__(self, "S", S)

    def __call__(self, x: Element) -> Element:
        return apply_star(self, x)

    def involutivity_residual(self) -> float:
        return float(np.max(np.abs(self.S @ self.S.conj() - np.eye(self.algebra.dim)), initial=0.0))


@dataclass(frozen=True)
class HermitianForm:
    """Gram matrix ``G`` of ``<v, w> = w^H G v`` (linear in the first slot)."""

    G: np.ndarray
    rtol: float = 1e-10

    def __post_init__(self):
        G = np.array(self.G, dtype=complex)
        if G.ndim != 2 or G.shape[0] != G.shape[1] or G.shape[0] == 0:
            raise ValueError(f"Gram matrix must be square and nonempty, got shape {G.shape}")
        scale = max(1.0, float(np.max(np.abs(G))))
        if np.max(np.abs(G - G.conj().T)) > self.rtol * scale:
            raise NotHermitian("Gram matrix is not equal to its conjugate transpose")
        sv = np.linalg.svd(G, compute_uv=False)
        if sv[-1] <= self.rtol * sv[0]:
            raise Degenerate(f"Gram matrix is singular (sigma_min={sv[-1]:.3e})")
        G.flags.writeable = False
        object.__setattr__(self, "G", G)

    def __call__(self, v, w) -> complex:
        v, w = np.asarray(v, dtype=complex), np.asarray(w, dtype=complex)
        return complex(w.conj() @ self.G @ v)


@dataclass(frozen=True)
class StarClassification:
    involutive: bool
    antimultiplicative: bool
    multiplicative: bool
    kind: Kind
    commutative: bool
    residuals: dict


@dataclass(frozen=True)
class GeneratedSubalgebra:
    basis: list
    star_closed: bool
    commutative: bool

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class IsometryReport:
    max_ratio_dev: float
    ok: bool


def apply_star(s: StarStructure, x: Element) -> Element:
    if x.coeffs.shape[0] != s.algebra.dim:
        raise DimensionMismatch("element and star live on algebras of different dimension")
    return Element(s.algebra, s.S @ x.coeffs.conj())


def classify_star(a: Algebra, s: StarStructure, tol: float = 1e-10) -> StarClassification:
    S, c = s.S, a.tensor
    inv_res = s.involutivity_residual()
    # star of each basis element is column i of S (basis coefficients are real)
    star_basis = S.T  # row i holds coeffs(b_i*)
    # (b_i b_j)* = S conj(c[i, j, :])
    lhs = np.einsum("kl,ijl->ijk", S, c.conj())
    # b_j* b_i* and b_i* b_j* via the tensor
    anti = np.einsum("jp,iq,pqk->ijk", star_basis, star_basis, c)
    mult = np.einsum("ip,jq,pqk->ijk", star_basis, star_basis, c)
    anti_res = float(np.max(np.abs(lhs - anti), initial=0.0))
    mult_res = float(np.max(np.abs(lhs - mult), initial=0.0))
    scaled = tol * (1.0 + float(np.max(np.abs(S)))) ** 2
    involutive = inv_res <= scaled
    antimultiplicative = anti_res <= scaled
    multiplicative = mult_res <= scaled
    if not involutive:
        kind = "neither"
    elif antimultiplicative and multiplicative:
        kind = "both"
    elif antimultiplicative:
        kind = "involution"
    elif multiplicative:
        kind = "binvolution"
    else:
        kind = "neither"
    return StarClassification(
        involutive=involutive,
        antimultiplicative=antimultiplicative,
        multiplicative=multiplicative,
        kind=kind,
        commutative=a.is_commutative(tol),
        residuals={"involutive": inv_res, "antimultiplicative": anti_res, "multiplicative": mult_res},
    )


def _matrix_star_from(n: int, fn, algebra: Algebra | None, kind: DeclaredKind) -> StarStructure:
    """Build ``S`` for a map ``T -> fn(conj(T))`` on M_n, column by column."""
    a = algebra if algebra is not None else matrix_algebra(n)
    if a.dim != n * n:
        raise DimensionMismatch(f"algebra has dimension {a.dim}, expected {n * n}")
    d = n * n
    S = np.zeros((d, d), dtype=complex)
    for k in range(d):
        unit = np.zeros(d)
        unit[k] = 1.0
        S[:, k] = fn(unit.reshape(n, n)).reshape(-1)
    return StarStructure(a, S, kind)


def adjoint_from_form(n: int, g: HermitianForm, algebra: Algebra | None = None) -> StarStructure:
    """Adjoint w.r.t. ``g`` on M_n: ``T* = G^{-1} T^H G``.

    From ``<Tv, w> = w^H G T v`` and ``<v, T*w> = w^H (T*)^H G v`` for all
    ``v, w`` we need ``G T = (T*)^H G``.
    """
    G = g.G
    if G.shape != (n, n):
        raise DimensionMismatch(f"Gram matrix must be {n} x {n}")
    Ginv = np.linalg.inv(G)
    # fn receives conj(T), so T^H = conj(T)^T
    return _matrix_star_from(n, lambda ct: Ginv @ ct.T @ G, algebra, "involution")


def conj_transpose_star(n: int, algebra: Algebra | None = None) -> StarStructure:
    return adjoint_from_form(n, HermitianForm(np.eye(n)), algebra)


def entrywise_conj_binvolution(n: int, algebra: Algebra | None = None) -> StarStructure:
    a = algebra if algebra is not None else matrix_algebra(n)
    if a.dim != n * n:
        raise DimensionMismatch(f"algebra has dimension {a.dim}, expected {n * n}")
    return StarStructure(a, np.eye(n * n), "binvolution")


def conj_star(a: Algebra) -> StarStructure:
    """Coefficientwise complex conjugation."""
    kind = "involution" if a.is_commutative() else "binvolution"
    return StarStructure(a, np.eye(a.dim), kind)


def group_involution(t: SemigroupTable, algebra: Algebra | None = None) -> StarStructure:
    """``f*(a) = conj(f(a^{-1}))`` on the group algebra of ``t``."""
    if not validate_semigroup(t).is_group:
        raise NotAGroup("group involution needs every element to have an inverse")
    a = algebra if algebra is not None else semigroup_algebra(t)
    inv = t.inverses()
    S = np.zeros((t.order, t.order))
    S[np.arange(t.order), inv] = 1.0
    return StarStructure(a, S, "involution")


def group_inverse_star(a: Algebra) -> StarStructure:
    """:func:`group_involution` for an algebra built by ``semigroup_algebra``."""
    if a.semigroup is None:
        raise NotAGroup("algebra was not built from a Cayley table")
    return group_involution(a.semigroup, a)


def is_self_adjoint(s: StarStructure, x: Element, tol: float = 1e-10) -> bool:
    return float(np.linalg.norm((apply_star(s, x) - x).coeffs)) <= tol * (1.0 + np.linalg.norm(x.coeffs))


def selfadjoint_parts(s: StarStructure, x: Element, tol: float = 1e-10) -> tuple[Element, Element]:
    """``x = h + i k`` with ``h = (x + x*)/2`` and ``k = (x - x*)/(2i)`` self-adjoint."""
    if s.involutivity_residual() > tol:
        raise NotInvolutive("(x*)* != x for this star; decomposition is undefined")
    xs = apply_star(s, x)
    return (x + xs) / 2, (x - xs) / 2j


def _orthonormal_extend(basis: list[np.ndarray], v: np.ndarray, tol: float) -> np.ndarray | None:
    """Gram-Schmidt step (applied twice); None if ``v`` is in the span up to ``tol`` relative."""
    scale = np.linalg.norm(v)
    if scale == 0:
        return None
    w = v.copy()
    for _ in range(2):
        for q in basis:
            w = w - (q.conj() @ w) * q
    r = np.linalg.norm(w)
    if r <= tol * scale:
        return None
    return w / r


def _span_residual(basis: list[np.ndarray], v: np.ndarray) -> float:
    w = v.copy()
    for _ in range(2):
        for q in basis:
            w = w - (q.conj() @ w) * q
    return float(np.linalg.norm(w))


def generated_star_subalgebra(a: Algebra, s: StarStructure, x: Element, tol: float = 1e-8) -> GeneratedSubalgebra:
    """Orthonormal basis of span{e, x, x^2, ...}, grown until the next power adds nothing.

    Once ``x^k`` lies in the span of lower powers so do all higher ones, so
    the loop stops at the first dependent power.
    """
    e = a.identity
    vecs: list[np.ndarray] = []
    power = e
    for _ in range(a.dim + 1):
        q = _orthonormal_extend(vecs, power.coeffs.copy(), tol)
        if q is None:
            break
        vecs.append(q)
        power = multiply(a, x, power)
    basis = [Element(a, q) for q in vecs]
    star_closed = all(
        _span_residual(vecs, apply_star(s, b).coeffs.copy()) <= tol * (1.0 + np.linalg.norm(b.coeffs))
        for b in basis
    )
    comm = 0.0
    for i, bi in enumerate(basis):
        for bj in basis[i + 1:]:
            comm = max(comm, float(np.linalg.norm((multiply(a, bi, bj) - multiply(a, bj, bi)).coeffs)))
    scale = max((norm(a, b) for b in basis), default=1.0)
    return GeneratedSubalgebra(basis=basis, star_closed=star_closed, commutative=comm <= tol * (1.0 + scale**2))


def check_star_isometry(
    a: Algebra, s: StarStructure, samples: int = 200, tol: float = 1e-10, seed: int = 0
) -> IsometryReport:
    """Sample ``| ||x*|| / ||x|| - 1 |`` for random x (plus e) under the L_x operator norm."""
    rng = np.random.default_rng(seed)
    xs = [a.identity] + random_elements(a, samples, rng)
    dev = 0.0
    for x in xs:
        nx = norm(a, x)
        if nx == 0:
            continue
        dev = max(dev, abs(norm(a, apply_star(s, x)) / nx - 1.0))
    return IsometryReport(max_ratio_dev=dev, ok=dev <= tol)
