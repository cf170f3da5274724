"""JSON interchange format for algebras, functionals and LSA products.

Example::

    {"format_version": 1, "field": "rational", "dim": 2, "basis": ["e1", "e2"],
     "brackets": [{"i": 0, "j": 1, "k": 1, "c": "1"}], "functional": ["0", "1"]}

Indices are 0-based.  Rational scalars are ``"p/q"`` strings (integers are
accepted too); complex scalars are ``{"re": x, "im": y}`` objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from ..errors import InvalidAlgebraError, LieToolError, ParseError
from ..field_linalg import EXACT, Field, Scalar, Vector, approx, parse_rational
from ..lie_core import LieAlgebra
from ..lsa import LsaProduct

FORMAT_VERSION = 1
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AlgebraFile:
    algebra: LieAlgebra
    functional: Optional[Vector] = None
    lsa: Optional[LsaProduct] = None


def encode_scalar(value: Scalar, field: Field) -> Any:
    if field.is_exact:
        return str(value)
    z = complex(value)
    return {"re": z.real, "im": z.imag}


def decode_scalar(raw: Any, field: Field) -> Scalar:
    if field.is_exact:
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise ParseError(f"rational scalars must be 'p/q' strings, got {raw!r}")
        return parse_rational(str(raw))
    if isinstance(raw, dict):
        try:
            return complex(float(raw["re"]), float(raw.get("im", 0.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad complex scalar {raw!r}") from exc
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return complex(float(raw))
    raise ParseError(f"complex scalars must be {{re, im}} objects, got {raw!r}")


def _field_from(doc: dict) -> Field:
    name = doc.get("field", "rational")
    if name == "rational":
        return EXACT
    if name == "complex64":
        tol = doc.get("tolerance", DEFAULT_TOLERANCE)
        if not isinstance(tol, (int, float)) or isinstance(tol, bool) or tol <= 0:
            raise ParseError(f"tolerance must be a positive number, got {tol!r}")
        return approx(float(tol))
    raise ParseError(f"unknown field {name!r}; expected 'rational' or 'complex64'")


def _index(entry: dict, key: str, dim: int) -> int:
    v = entry.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"index {key!r} must be an integer in {entry!r}")
    if not 0 <= v < dim:
        raise ParseError(f"index {key}={v} out of range for dim {dim}")
    return v


def _triples(raw: Any, dim: int, field: Field, what: str, ordered: bool) -> list[tuple[int, int, int, Scalar]]:
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list")
    out = []
    for entry in raw:
        if not isinstance(entry, dict) or "c" not in entry:
            raise ParseError(f"{what} entries need i, j, k and c: {entry!r}")
        i, j, k = (_index(entry, key, dim) for key in ("i", "j", "k"))
        if ordered and i >= j:
            raise ParseError(f"bracket entries need i < j, got i={i}, j={j}")
        out.append((i, j, k, decode_scalar(entry["c"], field)))
    return out


def from_dict(doc: Any) -> AlgebraFile:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    field = _field_from(doc)
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError(f"dim must be a nonnegative integer, got {dim!r}")
    basis = doc.get("basis")
    if basis is None:
        basis = [f"e{i + 1}" for i in range(dim)]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"basis must be a list of {dim} labels")
    entries = _triples(doc.get("brackets", []), dim, field, "brackets", ordered=True)
    try:
        L = LieAlgebra.from_brackets(dim, entries, basis, field)
    except (InvalidAlgebraError, LieToolError) as exc:
        raise ParseError(str(exc)) from exc
    functional = None
    if doc.get("functional") is not None:
        raw = doc["functional"]
        if not isinstance(raw, list) or len(raw) != dim:
            raise ParseError(f"functional must list {dim} coordinates")
        functional = tuple(decode_scalar(c, field) for c in raw)
    lsa = None
    if doc.get("lsa") is not None:
        lsa = LsaProduct.from_entries(dim, _triples(doc["lsa"], dim, field, "lsa", ordered=False), field)
    return AlgebraFile(L, functional, lsa)


def to_dict(af: AlgebraFile) -> dict:
    L = af.algebra
    doc: dict[str, Any] = {"format_version": FORMAT_VERSION}
    if L.field.is_exact:
        doc["field"] = "rational"
    else:
        doc["field"] = "complex64"
        doc["tolerance"] = L.field.tolerance
    doc["dim"] = L.dim
    doc["basis"] = list(L.labels)
    doc["brackets"] = [
        {"i": i, "j": j, "k": k, "c": encode_scalar(c, L.field)} for i, j, k, c in L.brackets
    ]
    if af.functional is not None:
        doc["functional"] = [encode_scalar(c, L.field) for c in af.functional]
    if af.lsa is not None:
        doc["lsa"] = [
            {"i": i, "j": j, "k": k, "c": encode_scalar(c, L.field)} for i, j, k, c in af.lsa.entries()
        ]
    return doc


def loads(text: str) -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def dumps(af: AlgebraFile) -> str:
    return json.dumps(to_dict(af), indent=2) + "\n"


def load(path: str | Path) -> AlgebraFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)
