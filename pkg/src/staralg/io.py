"""JSON formats for algebras, elements, polynomials and stars.

Complex numbers are written as ``[re, im]``; plain JSON numbers are accepted
on input as real values.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .algebra import Algebra, Element
from .catalog import SemigroupTable, function_algebra, matrix_algebra, semigroup_algebra
from .errors import AlgebraError, DimensionMismatch, InvalidAlgebra
from .polycalc import Polynomial
from .star import (
    HermitianForm,
    StarStructure,
    adjoint_from_form,
    conj_star,
    entrywise_conj_binvolution,
    group_inverse_star,
)


class ParseError(AlgebraError, ValueError):
    pass


def parse_complex(v) -> complex:
    if isinstance(v, bool):
        raise ParseError(f"not a complex number: {v!r}")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
        isinstance(p, (int, float)) and not isinstance(p, bool) for p in v
    ):
        return complex(v[0], v[1])
    raise ParseError(f"not a complex number: {v!r} (expected [re, im])")


def parse_complex_array(data, ndim: int) -> np.ndarray:
    def walk(node, depth):
        if depth == 0:
            return parse_complex(node)
        if not isinstance(node, list):
            raise ParseError(f"expected a nested list of depth {ndim}")
        return [walk(child, depth - 1) for child in node]

    try:
        arr = np.array(walk(data, ndim), dtype=complex)
    except ValueError as exc:  # ragged nesting
        raise ParseError(f"ragged array: {exc}") from exc
    if arr.ndim != ndim:
        raise ParseError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    return arr


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def array_to_json(arr) -> list:
    arr = np.asarray(arr, dtype=complex)
    if arr.ndim == 0:
        return complex_to_json(arr)
    return [array_to_json(sub) for sub in arr]


def load_json(source: str | Path):
    """Read JSON from a file path, or parse ``source`` itself if it is not a file."""
    path = Path(source)
    try:
        if path.is_file():
            return json.loads(path.read_text())
        return json.loads(str(source))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {str(source)[:80]!r}: {exc}") from exc


def _require(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    return doc[key]


def semigroup_from_json(doc: dict) -> SemigroupTable:
    elements = _require(doc, "elements")
    table = _require(doc, "table")
    identity = _require(doc, "identity")
    if not isinstance(elements, list) or not isinstance(table, list):
        raise ParseError("semigroup 'elements' and 'table' must be lists")
    if not all(isinstance(row, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in row) for row in table):
        raise ParseError("semigroup table entries must be integers")
    if not isinstance(identity, int) or isinstance(identity, bool):
        raise ParseError("semigroup identity must be an integer index")
    return SemigroupTable(elements, table, identity)


def algebra_from_json(doc) -> Algebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra JSON must be an object")
    kind = _require(doc, "kind")
    if kind == "structure_constants":
        dim = _require(doc, "dim")
        tensor = parse_complex_array(_require(doc, "tensor"), 3)
        if not isinstance(dim, int) or tensor.shape != (dim, dim, dim):
            raise ParseError(f"tensor shape {tensor.shape} does not match dim {dim!r}")
        try:
            return Algebra(tensor, doc.get("labels"), name=doc.get("name", "algebra"))
        except InvalidAlgebra as exc:
            raise ParseError(str(exc)) from exc
    if kind == "semigroup":
        return semigroup_algebra(semigroup_from_json(doc))
    if kind == "matrix":
        n = _require(doc, "n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError("matrix algebra needs a positive integer 'n'")
        return matrix_algebra(n)
    if kind == "functions":
        labels = _require(doc, "labels")
        if not isinstance(labels, list):
            raise ParseError("'labels' must be a list")
        try:
            return function_algebra(labels)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown algebra kind {kind!r}")


def algebra_to_json(a: Algebra) -> dict:
    return {
        "kind": "structure_constants",
        "dim": a.dim,
        "labels": list(a.labels),
        "tensor": array_to_json(a.tensor),
    }


def semigroup_to_json(t: SemigroupTable) -> dict:
    return {"kind": "semigroup", "elements": list(t.elements), "table": [list(r) for r in t.table], "identity": t.identity_index}


def element_from_json(a: Algebra, doc) -> Element:
    """Accepts ``[c0, c1, ...]``, ``{"coeffs": [...]}`` or, on matrix algebras, ``{"matrix": [[...]]}``."""
    if isinstance(doc, dict):
        if "coeffs" in doc:
            coeffs = parse_complex_array(doc["coeffs"], 1)
        elif "matrix" in doc:
            if a.matrix_size is None:
                raise ParseError("'matrix' elements need a matrix algebra")
            coeffs = parse_complex_array(doc["matrix"], 2).reshape(-1)
        else:
            raise ParseError("element JSON needs 'coeffs' or 'matrix'")
    elif isinstance(doc, list):
        coeffs = parse_complex_array(doc, 1)
    else:
        raise ParseError("element JSON must be a list or an object")
    if coeffs.shape[0] != a.dim:
        raise DimensionMismatch(f"element has {coeffs.shape[0]} coefficients, algebra has dimension {a.dim}")
    return Element(a, coeffs)


def element_to_json(x: Element) -> dict:
    return {"coeffs": array_to_json(x.coeffs)}


def polynomial_from_json(doc) -> Polynomial:
    if isinstance(doc, dict):
        coeffs = _require(doc, "coeffs")
    elif isinstance(doc, list):
        coeffs = doc
    else:
        raise ParseError("polynomial JSON must be {'coeffs': [...]}")
    if not isinstance(coeffs, list):
        raise ParseError("'coeffs' must be a list")
    return Polynomial([parse_complex(c) for c in coeffs])


def star_from_json(a: Algebra, doc) -> StarStructure:
    if not isinstance(doc, dict):
        raise ParseError("star JSON must be an object")
    kind = _require(doc, "kind")
    if kind == "matrix":
        S = parse_complex_array(_require(doc, "S"), 2)
        if S.shape != (a.dim, a.dim):
            raise DimensionMismatch(f"star matrix must be {a.dim} x {a.dim}, got {S.shape}")
        return StarStructure(a, S)
    if kind == "conj":
        return conj_star(a)
    if kind == "entrywise_conj":
        if a.matrix_size is None:
            raise ParseError("entrywise conjugation needs a matrix algebra")
        return entrywise_conj_binvolution(a.matrix_size, a)
    if kind == "group_inverse":
        return group_inverse_star(a)
    if kind == "hermitian_form":
        if a.matrix_size is None:
            raise ParseError("hermitian_form stars need a matrix algebra")
        G = parse_complex_array(_require(doc, "G"), 2)
        return adjoint_from_form(a.matrix_size, HermitianForm(G), a)
    raise ParseError(f"unknown star kind {kind!r}")


def spectrum_points_to_json(points) -> list:
    pts = sorted((complex(p) for p in points), key=lambda z: (z.real, z.imag))
    return [complex_to_json(p) for p in pts]


def sanitize(obj):
    """Make ``obj`` strict-JSON safe: numpy scalars to Python, non-finite floats to strings."""
    if isinstance(obj, dict):
        return {str(k): sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else str(f)
    if isinstance(obj, (complex, np.complexfloating)):
        return sanitize(complex_to_json(obj))
    if isinstance(obj, np.ndarray):
        return sanitize(obj.tolist())
    return obj
