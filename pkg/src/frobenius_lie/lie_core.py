"""Lie algebras given by structure constants.

``[e_i, e_j] = sum_k c[k][i][j] e_k`` is stored sparsely as triples
``(i, j, k) -> c`` with ``i < j``; the lower half is implied by antisymmetry.
Indices are zero-based throughout the Python API.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional, Union

from .errors import DimensionError, FieldMismatchError, InvalidAlgebraError
from .field_linalg import (
    EXACT,
    Field,
    Matrix,
    Scalar,
    Vector,
    format_scalar,
    kernel_basis,
    span_basis,
)

BracketEntries = Union[Mapping[tuple[int, int, int], object], Iterable[tuple[int, int, int, object]]]


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra by structure constants.

    Construction does not check the Jacobi identity; call :func:`validate`
    (analysis entry points do so through :func:`require_valid`).
    """

    dim: int
    brackets: tuple[tuple[int, int, int, Scalar], ...]
    labels: tuple[str, ...]
    field: Field = EXACT

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        entries: BracketEntries = (),
        labels: Optional[Sequence[str]] = None,
        field: Field = EXACT,
    ) -> "LieAlgebra":
        """Build from ``(i, j, k, c)`` entries meaning ``[e_i, e_j] += c e_k``.

        Entries with ``i > j`` are folded into ``(j, i)`` with the sign
        flipped; ``i == j`` cannot be represented and is rejected.
        """
        if dim < 0:
            raise DimensionError("dimension must be nonnegative")
        if isinstance(entries, Mapping):
            items = [(i, j, k, c) for (i, j, k), c in entries.items()]
        else:
            items = list(entries)
        acc: dict[tuple[int, int, int], Scalar] = {}
        for i, j, k, c in items:
            for idx in (i, j, k):
                if not 0 <= idx < dim:
                    raise DimensionError(f"basis index {idx} out of range for dimension {dim}")
            c = field.coerce(c)
            if i == j:
                if c != 0:
                    raise InvalidAlgebraError(f"[e{i}, e{i}] must vanish (antisymmetry)")
                continue
            if i > j:
                i, j, c = j, i, -c
            acc[(i, j, k)] = acc.get((i, j, k), field.zero) + c
        stored = tuple(sorted((i, j, k, c) for (i, j, k), c in acc.items() if c != 0))
        if labels is None:
            labels = tuple(f"e{t + 1}" for t in range(dim))
        labels = tuple(labels)
        if len(labels) != dim:
            raise DimensionError("one label per basis vector is required")
        return cls(dim, stored, labels, field)

    # -- cached dense views -------------------------------------------------

    @cached_property
    def structure(self) -> dict[tuple[int, int], dict[int, Scalar]]:
        """``{(i, j): {k: c}}`` for ``i < j`` with nonzero brackets."""
        out: dict[tuple[int, int], dict[int, Scalar]] = {}
        for i, j, k, c in self.brackets:
            out.setdefault((i, j), {})[k] = c
        return out

    @cached_property
    def ad_basis(self) -> tuple[Matrix, ...]:
        """``ad(e_i)`` for every basis vector; column ``j`` holds ``[e_i, e_j]``."""
        p = self.dim
        z = self.field.zero
        mats = [[[z] * p for _ in range(p)] for _ in range(p)]
        for i, j, k, c in self.brackets:
            mats[i][k][j] += c
            mats[j][k][i] -= c
        return tuple(Matrix(m, self.field) for m in mats)

    def coefficient(self, i: int, j: int, k: int) -> Scalar:
        return self.ad_basis[i][k, j]

    # -- vectors ------------------------------------------------------------

    def vector(self, coords: Sequence[object]) -> Vector:
        if len(coords) != self.dim:
            raise DimensionError(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field.coerce(c) for c in coords)

    def basis_vector(self, i: int) -> Vector:
        z, o = self.field.zero, self.field.one
        return tuple(o if t == i else z for t in range(self.dim))

    def zero_vector(self) -> Vector:
        return (self.field.zero,) * self.dim

    def bracket(self, x: Sequence[object], y: Sequence[object]) -> Vector:
        return bracket(self, x, y)

    def ad(self, x: Sequence[object]) -> Matrix:
        return ad(self, x)

    def format_vector(self, v: Sequence[Scalar]) -> str:
        return format_combination(v, self.labels)


def format_combination(v: Sequence[Scalar], labels: Sequence[str]) -> str:
    parts = []
    for c, name in zip(v, labels):
        if c == 0:
            continue
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{format_scalar(c)}*{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    residual: Vector


@dataclass(frozen=True)
class ValidationReport:
    dim: int
    labels: tuple[str, ...]
    violations: tuple[JacobiViolation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> list[str]:
        lines = []
        for v in self.violations:
            i, j, k = v.triple
            names = ", ".join(self.labels[t] for t in (i, j, k))
            lines.append(
                f"Jacobi fails on ({names}): residual {format_combination(v.residual, self.labels)}"
            )
        return lines


def jacobiator(L: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """``[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]``."""
    adm = L.ad_basis
    terms = (
        adm[i].apply(adm[j].col(k)),
        adm[j].apply(adm[k].col(i)),
        adm[k].apply(adm[i].col(j)),
    )
    return tuple(a + b + c for a, b, c in zip(*terms))


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on every triple ``i < j < k``.

    Antisymmetry holds by storage; the Jacobiator is alternating, so the
    ordered triples cover all cases.
    """
    return _validate_cached(L)


@lru_cache(maxsize=512)
def _validate_cached(L: LieAlgebra) -> ValidationReport:
    p = L.dim
    scale = max((abs(c) for *_, c in L.brackets), default=1.0)
    violations = []
    for i in range(p):
        for j in range(i + 1, p):
            for k in range(j + 1, p):
                r = jacobiator(L, i, j, k)
                if any(not L.field.is_zero(x, scale * scale) for x in r):
                    violations.append(JacobiViolation((i, j, k), r))
    return ValidationReport(p, L.labels, tuple(violations))


def require_valid(L: LieAlgebra) -> ValidationReport:
    report = validate(L)
    if not report.ok:
        raise InvalidAlgebraError("; ".join(report.describe()))
    return report


# ---------------------------------------------------------------------------
# brackets and adjoints
# ---------------------------------------------------------------------------


def bracket(L: LieAlgebra, x: Sequence[object], y: Sequence[object]) -> Vector:
    x = L.vector(x)
    y = L.vector(y)
    out = list(L.zero_vector())
    for i, j, k, c in L.brackets:
        w = x[i] * y[j] - x[j] * y[i]
        if w:
            out[k] += c * w
    return tuple(out)


def ad(L: LieAlgebra, x: Sequence[object]) -> Matrix:
    """Matrix of ``y -> [x, y]``."""
    x = L.vector(x)
    result = Matrix.zeros(L.dim, L.dim, L.field)
    for xi, m in zip(x, L.ad_basis):
        if xi:
            result = result + m.scale(xi)
    return result


def derived_ideal_basis(L: LieAlgebra) -> list[Vector]:
    """Reduced basis of ``span{[e_i, e_j]}``."""
    images = []
    for (i, j), col in L.structure.items():
        v = list(L.zero_vector())
        for k, c in col.items():
            v[k] = c
        images.append(tuple(v))
    return span_basis(images, L.dim, L.field)


def center_basis(L: LieAlgebra) -> list[Vector]:
    """Kernel of ``x -> ([x, e_1], ..., [x, e_p])``."""
    if L.dim == 0:
        return []
    rows = []
    for m in L.ad_basis:
        rows.extend((-m).rows)
    return kernel_basis(Matrix(rows, L.field, ncols=L.dim))


def is_unimodular(L: LieAlgebra) -> bool:
    return all(L.field.is_zero(m.trace()) for m in L.ad_basis)


def closed_one_forms_basis(L: LieAlgebra) -> list[Vector]:
    """Annihilator of the derived ideal, in dual-basis coordinates."""
    derived = derived_ideal_basis(L)
    if not derived:
        return [L.basis_vector(i) for i in range(L.dim)]
    return kernel_basis(Matrix(derived, L.field, ncols=L.dim))


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    """Block-diagonal direct sum; both summands become ideals."""
    if L1.field.kind != L2.field.kind:
        raise FieldMismatchError("summands live over different fields")
    shift = L1.dim
    entries = list(L1.brackets) + [(i + shift, j + shift, k + shift, c) for i, j, k, c in L2.brackets]
    labels = list(L1.labels) + list(L2.labels)
    if set(L1.labels) & set(L2.labels):
        labels = [f"{s}_1" for s in L1.labels] + [f"{s}_2" for s in L2.labels]
    return LieAlgebra.from_brackets(L1.dim + L2.dim, entries, labels, L1.field)


def abelian(dim: int, field: Field = EXACT) -> LieAlgebra:
    return LieAlgebra.from_brackets(dim, (), None, field)
