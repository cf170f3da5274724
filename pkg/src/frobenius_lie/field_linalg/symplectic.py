"""Darboux bases for nondegenerate skew forms."""

from __future__ import annotations

from ..errors import DegenerateFormError, DimensionError
from .matrix import Matrix, Vector
from .scalars import EXACT, Field


def standard_form(n: int, field: Field = EXACT) -> Matrix:
    """The block form ``[[0, I], [-I, 0]]``: ``w(e_i, e_{n+j}) = delta_ij``."""
    z, o = field.zero, field.one
    rows = []
    for i in range(2 * n):
        row = [z] * (2 * n)
        if i < n:
            row[n + i] = o
        else:
            row[i - n] = -o
        rows.append(row)
    return Matrix(rows, field)


def darboux_basis(omega: Matrix) -> Matrix:
    """Return ``P`` whose columns form a Darboux basis, so ``P.T @ omega @ P`` is standard.

    Symplectic Gram-Schmidt: take the first remaining vector ``e``, pair it with
    the first remaining ``f`` with ``w(e, f) != 0`` (the largest pairing in the
    approximate field), rescale ``f`` so the pairing is one, and project the
    rest onto the symplectic complement of ``span(e, f)``.
    """
    field = omega.field
    if not omega.is_square:
        raise DimensionError("skew form must be square")
    p = omega.nrows
    if p % 2:
        raise DegenerateFormError("a nondegenerate skew form needs even dimension")
    if not (omega + omega.T).is_zero():
        raise ValueError("form is not skew-symmetric")

    def w(x: Vector, y: Vector):
        return sum((a * b for a, b in zip(x, omega.apply(y))), field.zero)

    scale = max(omega.max_abs(), 1.0)
    remaining: list[Vector] = [tuple(field.one if i == j else field.zero for i in range(p)) for j in range(p)]
    es: list[Vector] = []
    fs: list[Vector] = []
    while remaining:
        e = remaining.pop(0)
        pairings = [(k, w(e, v)) for k, v in enumerate(remaining)]
        if field.is_exact:
            hit = next(((k, c) for k, c in pairings if c != 0), None)
        else:
            hit = max(pairings, key=lambda kc: abs(kc[1]), default=None)
            if hit is not None and field.is_zero(hit[1], scale):
                hit = None
        if hit is None:
            raise DegenerateFormError("skew form is degenerate")
        k, c = hit
        f = tuple(a / c for a in remaining.pop(k))
        es.append(e)
        fs.append(f)
        projected = []
        for v in remaining:
            a, b = w(v, f), w(v, e)
            projected.append(tuple(vi - a * ei + b * fi for vi, ei, fi in zip(v, e, f)))
        remaining = projected
    return Matrix.from_columns(es + fs, field)
