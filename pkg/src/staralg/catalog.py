"""Standard example algebras: matrix units, pointwise functions, convolution."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from .algebra import Algebra
from .errors import InvalidSemigroup


@dataclass(frozen=True)
class SemigroupTable:
    """Finite Cayley table; ``table[b][c]`` is the index of ``b*c``."""

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity_index: int

    def __init__(self, elements: Sequence[str], table, identity_index: int):
        object.__setattr__(self, "elements", tuple(str(e) for e in elements))
        object.__setattr__(self, "table", tuple(tuple(int(v) for v in row) for row in table))
        object.__setattr__(self, "identity_index", int(identity_index))
        n = len(self.elements)
        if n == 0:
            raise InvalidSemigroup("semigroup must have at least one element")
        if len(set(self.elements)) != n:
            raise InvalidSemigroup("duplicate element labels")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidSemigroup(f"Cayley table must be {n} x {n}")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise InvalidSemigroup("Cayley table entry out of range")
        if not 0 <= self.identity_index < n:
            raise InvalidSemigroup("identity index out of range")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, b: int, c: int) -> int:
        return self.table[b][c]

    def as_array(self) -> np.ndarray:
        return np.array(self.table, dtype=int)

    def inverses(self) -> list[int] | None:
        """Index of the two-sided inverse of each element, or None if some element lacks one."""
        t, theta = self.as_array(), self.identity_index
        inv = []
        for a in range(self.order):
            cands = [b for b in range(self.order) if t[a, b] == theta and t[b, a] == theta]
            if not cands:
                return None
            inv.append(cands[0])
        return inv

    def is_commutative(self) -> bool:
        t = self.as_array()
        return bool(np.array_equal(t, t.T))


@dataclass(frozen=True)
class SemigroupReport:
    associative: bool
    has_identity: bool
    is_group: bool
    failures: list = field(default_factory=list)


def validate_semigroup(t: SemigroupTable) -> SemigroupReport:
    """Exhaustive associativity, identity and inverse checks."""
    tab = t.as_array()
    n = t.order
    # (bc)d vs b(cd) for every triple at once
    lhs = tab[tab[:, :, None], np.arange(n)[None, None, :]]
    rhs = tab[np.arange(n)[:, None, None], tab[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    theta = t.identity_index
    has_identity = bool(np.all(tab[theta, :] == np.arange(n)) and np.all(tab[:, theta] == np.arange(n)))
    is_group = has_identity and t.inverses() is not None
    failures = [tuple(int(v) for v in row) for row in bad[:10]]
    return SemigroupReport(associative=bad.size == 0, has_identity=has_identity, is_group=is_group, failures=failures)


def matrix_algebra(n: int) -> Algebra:
    """M_n with matrix units E_ab ordered row-major (index ``a*n + b``)."""
    if n < 1:
        raise ValueError("matrix algebra needs n >= 1")
    d = n * n
    c = np.zeros((d, d, d))
    for a in range(n):
        for b in range(n):
            for e in range(n):
                # E_ab E_be = E_ae
                c[a * n + b, b * n + e, a * n + e] = 1.0
    labels = [f"E{a + 1}{b + 1}" if n < 10 else f"E{a + 1},{b + 1}" for a in range(n) for b in range(n)]
    return Algebra(c, labels, name=f"M{n}", matrix_size=n)


def matrix_to_coeffs(m) -> np.ndarray:
    return np.asarray(m, dtype=complex).reshape(-1)


def coeffs_to_matrix(coeffs, n: int) -> np.ndarray:
    return np.asarray(coeffs, dtype=complex).reshape(n, n)


def function_algebra(labels: Sequence[str]) -> Algebra:
    labels = [str(s) for s in labels]
    if not labels:
        raise ValueError("function algebra needs a nonempty point set")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate point labels")
    d = len(labels)
    c = np.zeros((d, d, d))
    idx = np.arange(d)
    c[idx, idx, idx] = 1.0
    return Algebra(c, labels, name=f"C({d} points)")


def semigroup_algebra(t: SemigroupTable) -> Algebra:
    """Convolution algebra: ``(f*g)(a) = sum over b*c == a of f(b) g(c)``."""
    report = validate_semigroup(t)
    if not report.associative:
        raise InvalidSemigroup(f"table is not associative, e.g. at (b, c, d) = {report.failures[0]}")
    if not report.has_identity:
        raise InvalidSemigroup(f"element {t.elements[t.identity_index]!r} is not a two-sided identity")
    n = t.order
    c = np.zeros((n, n, n))
    tab = t.as_array()
    b, cc = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    c[b, cc, tab] = 1.0
    return Algebra(c, [f"d[{e}]" for e in t.elements], name="semigroup algebra", semigroup=t)


def cyclic_group(n: int) -> SemigroupTable:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return SemigroupTable([str(i) for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)], 0)


def symmetric_group(n: int) -> SemigroupTable:
    """S_n acting on {1..n}; elements in lexicographic order of one-line notation.

    The product ``s*t`` is composition ``(s*t)(k) = s(t(k))``.
    """
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[k]] for k in range(n))] for t in perms] for s in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return SemigroupTable(labels, table, 0)


def permutation_index(t: SemigroupTable, one_line: str) -> int:
    return t.elements.index(one_line)
