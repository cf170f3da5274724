"""Frobenius functionals, principal elements and the objects they induce.

Conventions: ``omega[i][j] = w(e_i, e_j) = -alpha([e_i, e_j])``; column ``i``
of ``q_matrix`` holds ``q(e_i) = w(e_i, .)`` in dual coordinates, so
``q(x) = q_matrix @ x`` and ``q_matrix == omega.T``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal, Optional

from .errors import DegenerateFormError, DimensionError
from .field_linalg import Matrix, Scalar, Vector, inverse, rank, solve_linear
from .lie_core import (
    LieAlgebra,
    center_basis,
    closed_one_forms_basis,
    derived_ideal_basis,
    require_valid,
)


def coboundary_form(L: LieAlgebra, alpha: Sequence[object]) -> Matrix:
    """Matrix of ``w(x, y) = -alpha([x, y])``."""
    alpha = L.vector(alpha)
    rows = []
    for m in L.ad_basis:
        # row i: -alpha^T ad(e_i)
        rows.append(tuple(-sum((a * c for a, c in zip(alpha, m.col(j)) if a), L.field.zero) for j in range(L.dim)))
    return Matrix(rows, L.field, ncols=L.dim)


def closedness_residual(L: LieAlgebra, omega: Matrix, i: int, j: int, k: int) -> Scalar:
    """``w([e_i,e_j],e_k) + w([e_j,e_k],e_i) + w([e_k,e_i],e_j)``."""
    adm = L.ad_basis

    def w(x: Vector, t: int) -> Scalar:
        return sum((a * omega[s, t] for s, a in enumerate(x) if a), L.field.zero)

    return w(adm[i].col(j), k) + w(adm[j].col(k), i) + w(adm[k].col(i), j)


def is_frobenius_functional(L: LieAlgebra, alpha: Sequence[object]) -> bool:
    """True iff ``d alpha`` is nondegenerate (full rank, so never in odd dimension)."""
    if L.dim == 0 or L.dim % 2:
        return False
    return rank(coboundary_form(L, alpha)) == L.dim


@dataclass(frozen=True)
class FunctionalSearch:
    """Outcome of :func:`frobenius_search`.

    ``status`` is ``"found"``, ``"certified-none"`` (a proof that no
    Frobenius functional exists) or ``"not-found"`` (the search budget ran out;
    evidence, not proof).
    """

    functional: Optional[Vector]
    status: Literal["found", "certified-none", "not-found"]
    reason: str
    tried: int


def _integer_sweep(p: int):
    values = (-2, -1, 1, 2)
    for support in range(2, p + 1):
        for positions in itertools.combinations(range(p), support):
            for coeffs in itertools.product(values, repeat=support):
                v = [0] * p
                for pos, c in zip(positions, coeffs):
                    v[pos] = c
                yield v


def frobenius_search(
    L: LieAlgebra, seed: int = 0, budget: int = 5000, random_trials: int = 200
) -> FunctionalSearch:
    """Deterministic search for a Frobenius functional.

    Order: dual basis vectors, then integer combinations with entries in
    ``{-2..2}`` by increasing support (at most ``budget`` of them), then
    ``random_trials`` rational functionals drawn with ``random.Random(seed)``
    with numerators in ``[-20, 20]`` and denominators in ``[1, 20]``.
    """
    require_valid(L)
    p = L.dim
    if p == 0:
        return FunctionalSearch(None, "certified-none", "zero algebra", 0)
    if p % 2:
        return FunctionalSearch(None, "certified-none", "odd dimension", 0)
    if center_basis(L):
        return FunctionalSearch(None, "certified-none", "nontrivial center lies in every radical", 0)
    tried = 0
    for i in range(p):
        tried += 1
        alpha = L.basis_vector(i)
        if is_frobenius_functional(L, alpha):
            return FunctionalSearch(alpha, "found", f"dual basis vector {L.labels[i]}*", tried)
    for v in itertools.islice(_integer_sweep(p), budget):
        tried += 1
        alpha = L.vector(v)
        if is_frobenius_functional(L, alpha):
            return FunctionalSearch(alpha, "found", "small integer combination", tried)
    rng = random.Random(seed)
    for _ in range(random_trials):
        tried += 1
        alpha = L.vector(random_rational_vector(rng, p))
        if is_frobenius_functional(L, alpha):
            return FunctionalSearch(alpha, "found", f"random rational functional (seed {seed})", tried)
    return FunctionalSearch(None, "not-found", "search budget exhausted", tried)


def random_rational_vector(rng: random.Random, p: int) -> list[Fraction]:
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(p)]


def find_frobenius_functional(L: LieAlgebra, seed: int = 0) -> Optional[Vector]:
    return frobenius_search(L, seed).functional


@dataclass(frozen=True)
class FrobeniusStructure:
    algebra: LieAlgebra
    alpha: Vector
    omega: Matrix
    q_matrix: Matrix
    x0: Vector

    @cached_property
    def q_inverse(self) -> Matrix:
        return inverse(self.q_matrix)

    @property
    def n(self) -> int:
        return self.algebra.dim // 2

    def q(self, x: Sequence[object]) -> Vector:
        return self.q_matrix.apply(self.algebra.vector(x))

    def q_inv(self, beta: Sequence[object]) -> Vector:
        return self.q_inverse.apply(self.algebra.vector(beta))

    def omega_of(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        return sum((a * b for a, b in zip(x, self.omega.apply(y)) if a), self.algebra.field.zero)


def principal_element(L: LieAlgebra, alpha: Sequence[object]) -> FrobeniusStructure:
    """Full Frobenius structure with ``x0 = q^{-1}(alpha)``."""
    require_valid(L)
    alpha = L.vector(alpha)
    omega = coboundary_form(L, alpha)
    if L.dim == 0 or rank(omega) < L.dim:
        raise DegenerateFormError("d(alpha) is degenerate: alpha is not a Frobenius functional")
    q_matrix = omega.T
    x0 = solve_linear(q_matrix, alpha)
    if x0 is None:
        raise DegenerateFormError("q(x) = alpha has no solution")
    return FrobeniusStructure(L, alpha, omega, q_matrix, x0)


def right_nil_basis(F: FrobeniusStructure) -> list[Vector]:
    """``q^{-1}`` of a basis of closed 1-forms."""
    return [F.q_inv(beta) for beta in closed_one_forms_basis(F.algebra)]


def right_unit_set(F: FrobeniusStructure) -> tuple[Vector, list[Vector]]:
    """Affine description ``x0 + span(right-nils)`` of all right-units."""
    return F.x0, right_nil_basis(F)


def conformal_factor(F: FrobeniusStructure, v: Sequence[object]) -> Optional[Scalar]:
    """The ``lam`` with ``w([v,x],y) + w(x,[v,y]) = lam w(x,y)``, or ``None``."""
    A = F.algebra.ad(v)
    lhs = A.T @ F.omega + F.omega @ A
    col = Matrix.from_columns([F.omega.vec()], F.omega.field)
    sol = solve_linear(col, lhs.vec())
    return None if sol is None else sol[0]


@dataclass(frozen=True)
class TraceCheck:
    trace: Scalar
    n: int
    trace_ok: bool
    outside_derived_ideal: bool

    @property
    def passed(self) -> bool:
        return self.trace_ok and self.outside_derived_ideal


def trace_identity_check(F: FrobeniusStructure, y0: Optional[Sequence[object]] = None) -> TraceCheck:
    """Check ``trace(ad y0) = -n`` and ``y0`` outside ``[G, G]`` for a right-unit ``y0``.

    ``y0`` defaults to the principal element.
    """
    L = F.algebra
    if L.dim % 2:
        raise DimensionError("Frobenius algebras have even dimension")
    y = F.x0 if y0 is None else L.vector(y0)
    n = L.dim // 2
    tr = L.ad(y).trace()
    derived = derived_ideal_basis(L)
    if derived:
        outside = solve_linear(Matrix.from_columns(derived, L.field, nrows=L.dim), y) is None
    else:
        outside = any(not L.field.is_zero(c) for c in y)
    return TraceCheck(tr, n, L.field.eq(tr, L.field.coerce(-n)), outside)


def r_tensor(F: FrobeniusStructure) -> Matrix:
    """``r = q^{-1}`` read as a skew 2-tensor on the dual space."""
    r = F.q_inverse
    if not (r + r.T).is_zero():
        raise DegenerateFormError("q^{-1} is not skew-symmetric")
    return r
