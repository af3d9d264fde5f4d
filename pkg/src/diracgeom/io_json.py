"""JSON input forms and their loaders.

Scalars are JSON integers or strings such as ``"3/4"``, ``"1/2-1*i"`` or
``"i"``; floats are refused because everything downstream is exact.
Failures raise ``InputError`` carrying the path of the offending field.
"""

from __future__ import annotations

from math import comb
from typing import Any

import jsonschema

from . import dirac_core as dc
from .dirac_maps import DiracMapProblem
from .exact_linalg import Matrix, Scalar, Subspace, format_scalar, parse_scalar
from .group_data import DiracGroupDatum, DualDiracGroupDatum, GCGroupDatum, TwistedDualDiracGroupDatum
from .lie_core import InvariantSection, LieAlgebra, ThreeForm, builtin


class InputError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field or '<root>'}: {message}")
        self.field = field
        self.message = message


SCALAR = {"oneOf": [{"type": "integer"}, {"type": "string", "minLength": 1}]}
VECTOR = {"type": "array", "items": SCALAR}
MATRIX = {"type": "array", "items": VECTOR}

STRUCTURE = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {
            "enum": ["basis", "E_eps", "pi_U", "complex", "poisson", "presymplectic", "symplectic_gc", "tangent", "cotangent"]
        },
        "n": {"type": "integer", "minimum": 0},
        "vectors": MATRIX,
        "E": MATRIX,
        "eps": MATRIX,
        "U": MATRIX,
        "pi": MATRIX,
        "J": MATRIX,
        "omega": MATRIX,
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": "basis"}}}, "then": {"required": ["n", "vectors"]}},
        {"if": {"properties": {"kind": {"const": "E_eps"}}}, "then": {"required": ["n", "E", "eps"]}},
        {"if": {"properties": {"kind": {"const": "pi_U"}}}, "then": {"required": ["n", "U", "pi"]}},
        {"if": {"properties": {"kind": {"const": "complex"}}}, "then": {"required": ["J"]}},
        {"if": {"properties": {"kind": {"const": "poisson"}}}, "then": {"required": ["pi"]}},
        {"if": {"properties": {"kind": {"enum": ["presymplectic", "symplectic_gc"]}}}, "then": {"required": ["omega"]}},
        {"if": {"properties": {"kind": {"enum": ["tangent", "cotangent"]}}}, "then": {"required": ["n"]}},
    ],
}

ALGEBRA = {
    "oneOf": [
        {"type": "string"},
        {
            "type": "object",
            "required": ["dim"],
            "properties": {
                "dim": {"type": "integer", "minimum": 0},
                "brackets": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["i", "j", "result"],
                        "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, "result": VECTOR},
                    },
                },
            },
        },
    ]
}

THREE_FORM = {"type": "array", "items": SCALAR}

SCHEMAS: dict[str, dict] = {
    "structure": {"type": "object", "required": ["structure"], "properties": {"structure": STRUCTURE}},
    "btransform": {"type": "object", "required": ["structure", "B"], "properties": {"structure": STRUCTURE, "B": MATRIX}},
    "map": {
        "type": "object",
        "required": ["f", "d1", "d2"],
        "properties": {"f": MATRIX, "d1": STRUCTURE, "d2": STRUCTURE},
    },
    "abm": {
        "type": "object",
        "required": ["f", "B", "d1", "d2"],
        "properties": {"f": MATRIX, "B": MATRIX, "d1": STRUCTURE, "d2": STRUCTURE},
    },
    "dirac_datum": {
        "type": "object",
        "required": ["algebra", "k", "eps"],
        "properties": {"algebra": ALGEBRA, "k": MATRIX, "eps": {"type": "array", "items": MATRIX}},
    },
    "dual_datum": {
        "type": "object",
        "required": ["algebra", "E", "eps"],
        "properties": {"algebra": ALGEBRA, "E": MATRIX, "eps": MATRIX},
    },
    "gc_datum": {"type": "object", "required": ["algebra", "k"], "properties": {"algebra": ALGEBRA, "k": MATRIX}},
    "twisted_datum": {
        "type": "object",
        "required": ["algebra", "E", "eps", "H"],
        "properties": {"algebra": ALGEBRA, "E": MATRIX, "eps": MATRIX, "H": THREE_FORM},
    },
    "cocycle_space": {"type": "object", "required": ["algebra", "E"], "properties": {"algebra": ALGEBRA, "E": MATRIX}},
    "lie_integrable": {
        "type": "object",
        "required": ["algebra", "structure"],
        "properties": {"algebra": ALGEBRA, "structure": STRUCTURE, "H": THREE_FORM},
    },
    "lie_bracket": {
        "type": "object",
        "required": ["algebra", "a", "b"],
        "properties": {
            "algebra": ALGEBRA,
            "a": {"type": "object", "required": ["x", "xi"], "properties": {"x": VECTOR, "xi": VECTOR}},
            "b": {"type": "object", "required": ["x", "xi"], "properties": {"x": VECTOR, "xi": VECTOR}},
            "H": THREE_FORM,
        },
    },
    "lie_schouten": {
        "type": "object",
        "required": ["algebra", "P", "Q"],
        "properties": {"algebra": ALGEBRA, "P": MATRIX, "Q": MATRIX, "k": MATRIX, "complement": MATRIX},
    },
}


def _path(parts) -> str:
    return "/".join(str(p) for p in parts)


STRUCTURE_FIELDS = ("structure", "d1", "d2")
_MATRIX_KEYS = {"complex": "J", "poisson": "pi", "presymplectic": "omega", "symplectic_gc": "omega"}


def _keyed_structure(s: Any) -> Any:
    """Rewrite the one-key form {"poisson": [[...]]} etc. into the explicit "kind" form."""
    if not isinstance(s, dict) or "kind" in s:
        return s
    kinds = [k for k in s if k in STRUCTURE["properties"]["kind"]["enum"]]
    if len(kinds) != 1:
        return s
    kind = kinds[0]
    body = s[kind]
    out = {k: v for k, v in s.items() if k != kind}
    out["kind"] = kind
    if kind in _MATRIX_KEYS:
        out[_MATRIX_KEYS[kind]] = body
    elif kind == "basis":
        out["vectors"] = body
        out.setdefault("n", _row_length(body, 2))
    elif kind in ("tangent", "cotangent"):
        out["n"] = body
    elif isinstance(body, dict):
        out.update(body)
        out.setdefault("n", _row_length(body.get("E", body.get("U")), 1))
    if out.get("n") is None:
        out.pop("n", None)
    return out


def _row_length(rows: Any, per: int) -> int | None:
    if isinstance(rows, list) and rows and isinstance(rows[0], list):
        return len(rows[0]) // per
    return None


def validate(doc: Any, schema_name: str) -> Any:
    """Check ``doc`` against a named schema; returns a copy with structures in the "kind" form."""
    if isinstance(doc, dict):
        doc = {k: _keyed_structure(v) if k in STRUCTURE_FIELDS else v for k, v in doc.items()}
    schema = SCHEMAS[schema_name]
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        # the deepest error names the most specific field
        err = max(errors, key=lambda e: len(e.absolute_path))
        parts = list(err.absolute_path)
        if err.validator == "required" and isinstance(err.instance, dict):
            parts += [p for p in err.validator_value if p not in err.instance][:1]
        raise InputError(_path(parts), err.message)
    return doc


# ---------------------------------------------------------------------------
# scalar and matrix conversion
# ---------------------------------------------------------------------------


def scalar(x: Any, field: str) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(field, "scalars must be integers or strings")
    if isinstance(x, int):
        return Scalar(x)
    try:
        return parse_scalar(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(field, f"cannot parse scalar {x!r}: {exc}") from None


def vector(xs: Any, field: str, length: int | None = None) -> tuple[Scalar, ...]:
    if not isinstance(xs, list):
        raise InputError(field, "expected a list of scalars")
    if length is not None and len(xs) != length:
        raise InputError(field, f"expected length {length}, got {len(xs)}")
    return tuple(scalar(x, f"{field}/{i}") for i, x in enumerate(xs))


def matrix(rows: Any, field: str, shape: tuple[int | None, int | None] | None = None) -> Matrix:
    if not isinstance(rows, list):
        raise InputError(field, "expected a list of rows")
    r, c = shape if shape is not None else (None, None)
    if r is not None and len(rows) != r:
        raise InputError(field, f"expected {r} rows, got {len(rows)}")
    width = c if c is not None else (len(rows[0]) if rows and isinstance(rows[0], list) else 0)
    data = [vector(row, f"{field}/{i}", width) for i, row in enumerate(rows)]
    return Matrix(data, width)


def square(rows: Any, field: str, n: int | None = None) -> Matrix:
    m = matrix(rows, field, (n, n) if n is not None else None)
    if m.rows != m.cols:
        raise InputError(field, f"expected a square matrix, got shape {m.shape}")
    return m


def antisym(rows: Any, field: str, n: int | None = None) -> Matrix:
    m = square(rows, field, n)
    if not m.is_antisymmetric():
        raise InputError(field, "matrix is not antisymmetric")
    return m


def subspace(rows: Any, field: str, n: int) -> Subspace:
    return Subspace(n, matrix(rows, field, (None, n)).row_list())


# ---------------------------------------------------------------------------
# structures
# ---------------------------------------------------------------------------


def structure(doc: dict, field: str = "structure") -> dc.LinearDirac:
    kind = doc["kind"]
    try:
        if kind == "basis":
            n = doc["n"]
            vs = matrix(doc["vectors"], f"{field}/vectors", (None, 2 * n))
            return dc.LinearDirac(n, Subspace(2 * n, vs.row_list()))
        if kind == "E_eps":
            n = doc["n"]
            E = matrix(doc["E"], f"{field}/E", (None, n))
            eps = antisym(doc["eps"], f"{field}/eps", E.rows)
            return dc.from_E_eps(dc.EEpsForm.from_basis(n, E.row_list(), eps))
        if kind == "pi_U":
            n = doc["n"]
            U = matrix(doc["U"], f"{field}/U", (None, n))
            pi = antisym(doc["pi"], f"{field}/pi", U.rows)
            return dc.from_pi_U(dc.PiUForm.from_basis(n, U.row_list(), pi))
        if kind == "complex":
            return dc.from_complex(square(doc["J"], f"{field}/J"))
        if kind == "poisson":
            return dc.from_poisson(antisym(doc["pi"], f"{field}/pi"))
        if kind == "presymplectic":
            return dc.from_presymplectic(antisym(doc["omega"], f"{field}/omega"))
        if kind == "symplectic_gc":
            return dc.from_symplectic_gc(antisym(doc["omega"], f"{field}/omega"))
        if kind == "tangent":
            return dc.tangent(doc["n"])
        if kind == "cotangent":
            return dc.cotangent(doc["n"])
    except InputError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(field, str(exc) or type(exc).__name__) from None
    raise InputError(f"{field}/kind", f"unknown kind {kind!r}")


def load_structure_doc(doc: Any) -> dc.LinearDirac:
    doc = validate(doc, "structure")
    return structure(doc["structure"])


def load_btransform(doc: Any) -> tuple[dc.LinearDirac, Matrix]:
    doc = validate(doc, "btransform")
    d = structure(doc["structure"])
    return d, antisym(doc["B"], "B", d.n)


def _map_matrix(doc: dict, d1: dc.LinearDirac, d2: dc.LinearDirac) -> Matrix:
    return matrix(doc["f"], "f", (d2.n, d1.n))


def load_map(doc: Any) -> DiracMapProblem:
    doc = validate(doc, "map")
    d1 = structure(doc["d1"], "d1")
    d2 = structure(doc["d2"], "d2")
    return DiracMapProblem(_map_matrix(doc, d1, d2), d1, d2)


def load_abm(doc: Any) -> tuple[Matrix, Matrix, dc.LinearDirac, dc.LinearDirac]:
    doc = validate(doc, "abm")
    d1 = structure(doc["d1"], "d1")
    d2 = structure(doc["d2"], "d2")
    return _map_matrix(doc, d1, d2), antisym(doc["B"], "B", d1.n), d1, d2


# ---------------------------------------------------------------------------
# algebras and group data
# ---------------------------------------------------------------------------


def algebra(doc: Any, field: str = "algebra") -> LieAlgebra:
    if isinstance(doc, str):
        try:
            return builtin(doc)
        except ValueError as exc:
            raise InputError(field, str(exc)) from None
    n = doc["dim"]
    brackets = {}
    for t, entry in enumerate(doc.get("brackets", [])):
        f = f"{field}/brackets/{t}"
        i, j = entry["i"], entry["j"]
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f, f"index pair ({i}, {j}) out of range for dimension {n}")
        if (i, j) in brackets or (j, i) in brackets:
            raise InputError(f, f"bracket ({i}, {j}) given twice")
        brackets[(i, j)] = vector(entry["result"], f"{f}/result", n)
    try:
        return LieAlgebra.from_brackets(n, brackets)
    except ValueError as exc:
        raise InputError(field, str(exc)) from None


def three_form(flat: Any, n: int, field: str = "H") -> ThreeForm:
    vals = vector(flat, field, comb(n, 3))
    return ThreeForm.from_flat(n, vals)


def load_dirac_datum(doc: Any) -> DiracGroupDatum:
    doc = validate(doc, "dirac_datum")
    g = algebra(doc["algebra"])
    k = subspace(doc["k"], "k", g.dim)
    m = g.dim - k.dim
    if len(doc["eps"]) != g.dim:
        raise InputError("eps", f"expected {g.dim} matrices, one per basis vector, got {len(doc['eps'])}")
    eps = tuple(antisym(e, f"eps/{c}", m) for c, e in enumerate(doc["eps"]))
    return DiracGroupDatum(g, k, eps)


def _E_eps(doc: dict, g: LieAlgebra) -> tuple[Subspace, Matrix]:
    rows = matrix(doc["E"], "E", (None, g.dim))
    eps = antisym(doc["eps"], "eps", rows.rows)
    E = Subspace(g.dim, rows.row_list())
    if E.dim != rows.rows:
        raise InputError("E", "rows are not independent")
    # rewrite eps in the stored basis of E
    form = dc.EEpsForm.from_basis(g.dim, rows.row_list(), eps)
    return form.E, form.eps


def load_dual_datum(doc: Any) -> DualDiracGroupDatum:
    doc = validate(doc, "dual_datum")
    g = algebra(doc["algebra"])
    E, eps = _E_eps(doc, g)
    return DualDiracGroupDatum(g, E, eps)


def load_gc_datum(doc: Any) -> GCGroupDatum:
    doc = validate(doc, "gc_datum")
    g = algebra(doc["algebra"])
    try:
        return GCGroupDatum(g, subspace(doc["k"], "k", g.dim))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError("algebra", str(exc)) from None


def load_twisted_datum(doc: Any) -> TwistedDualDiracGroupDatum:
    doc = validate(doc, "twisted_datum")
    g = algebra(doc["algebra"])
    E, eps = _E_eps(doc, g)
    try:
        H = three_form(doc["H"], g.dim)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError("H", str(exc)) from None
    return TwistedDualDiracGroupDatum(g, E, eps, H)


def load_cocycle_space(doc: Any) -> tuple[LieAlgebra, Subspace]:
    doc = validate(doc, "cocycle_space")
    g = algebra(doc["algebra"])
    return g, subspace(doc["E"], "E", g.dim)


def load_lie_integrable(doc: Any) -> tuple[LieAlgebra, dc.LinearDirac, ThreeForm | None]:
    doc = validate(doc, "lie_integrable")
    g = algebra(doc["algebra"])
    d = structure(doc["structure"])
    if d.n != g.dim:
        raise InputError("structure", f"structure has dimension {d.n}, algebra has dimension {g.dim}")
    H = three_form(doc["H"], g.dim) if "H" in doc else None
    return g, d, H


def load_lie_bracket(doc: Any) -> tuple[LieAlgebra, InvariantSection, InvariantSection, ThreeForm | None]:
    doc = validate(doc, "lie_bracket")
    g = algebra(doc["algebra"])
    n = g.dim
    secs = [
        InvariantSection(vector(doc[s]["x"], f"{s}/x", n), vector(doc[s]["xi"], f"{s}/xi", n)) for s in ("a", "b")
    ]
    H = three_form(doc["H"], n) if "H" in doc else None
    return g, secs[0], secs[1], H


def load_lie_schouten(doc: Any):
    doc = validate(doc, "lie_schouten")
    g = algebra(doc["algebra"])
    k = subspace(doc["k"], "k", g.dim) if "k" in doc else Subspace.zero(g.dim)
    m = g.dim - k.dim
    P = antisym(doc["P"], "P", m)
    Q = antisym(doc["Q"], "Q", m)
    comp = subspace(doc["complement"], "complement", g.dim) if "complement" in doc else None
    return g, k, P, Q, comp


# ---------------------------------------------------------------------------
# output encoding
# ---------------------------------------------------------------------------


def enc_scalar(x: Scalar) -> str | int:
    if x.is_real() and x.re.denominator == 1:
        return int(x.re)
    return format_scalar(x)


def enc_vector(v) -> list:
    return [enc_scalar(x) for x in v]


def enc_matrix(m: Matrix) -> list:
    return [enc_vector(r) for r in m.row_list()]


def enc_subspace(s: Subspace) -> list:
    return [enc_vector(v) for v in s.vectors]


def enc_table3(t) -> list:
    return [[enc_vector(r) for r in m] for m in t]


def enc_structure(d: dc.LinearDirac) -> dict:
    return {"kind": "basis", "n": d.n, "vectors": enc_subspace(d.sub)}


def enc_E_eps(form: dc.EEpsForm) -> dict:
    return {"E": enc_subspace(form.E), "eps": enc_matrix(form.eps)}


def enc_pi_U(form: dc.PiUForm) -> dict:
    return {"U": enc_subspace(form.U), "pi": enc_matrix(form.pi)}


def enc_problem(p: DiracMapProblem) -> dict:
    return {"f": enc_matrix(p.f), "d1": enc_structure(p.d1), "d2": enc_structure(p.d2)}
