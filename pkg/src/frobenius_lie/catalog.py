"""Constructors for the concrete algebras: aff(n), gl(n) x| M(n,p) and the G_{k,xi} family."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from .errors import CspViolation, DimensionError, LieToolError
from .field_linalg import EXACT, Field, Matrix, Scalar, Vector, approx
from .lie_core import LieAlgebra


def gl_semidirect(n: int, p: int, field: Field = EXACT) -> LieAlgebra:
    """``gl(n) x| M(n, p)`` with gl(n) acting by left multiplication.

    Basis: ``E_ij`` row-major, then ``F_ab`` row-major (written ``f_a`` when
    ``p == 1``).  ``[E_ij, E_kl] = d_jk E_il - d_li E_kj``,
    ``[E_ij, F_ab] = d_ja F_ib``.
    """
    if n < 1 or p < 1:
        raise DimensionError("n and p must be positive")
    if n % p:
        raise DimensionError(f"p = {p} must divide n = {n}")
    sep = "_" if n >= 10 or p >= 10 else ""

    def E(i: int, j: int) -> int:
        return i * n + j

    def Fi(a: int, b: int) -> int:
        return n * n + a * p + b

    labels = [f"E{i + 1}{sep}{j + 1}" for i in range(n) for j in range(n)]
    if p == 1:
        labels += [f"f{a + 1}" for a in range(n)]
    else:
        labels += [f"F{a + 1}{sep}{b + 1}" for a in range(n) for b in range(p)]
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if E(i, j) >= E(k, l):
                        continue
                    if j == k:
                        entries.append((E(i, j), E(k, l), E(i, l), 1))
                    if l == i:
                        entries.append((E(i, j), E(k, l), E(k, j), -1))
            for b in range(p):
                entries.append((E(i, j), Fi(j, b), Fi(i, b), 1))
    return LieAlgebra.from_brackets(n * n + n * p, entries, labels, field)


def aff(n: int, field: Field = EXACT) -> LieAlgebra:
    """Lie algebra of affine motions of K^n: ``gl(n) x| K^n``, dimension ``n^2 + n``."""
    if n < 1:
        raise DimensionError("aff(n) needs n >= 1")
    return gl_semidirect(n, 1, field)


# ---------------------------------------------------------------------------
# the G_{k,xi} family
# ---------------------------------------------------------------------------


def csp_check(M: Matrix, k: object, n: int) -> bool:
    """Is ``xi`` (matrix ``M``) conformal with factor ``k`` for ``sum e*_{n+i} ^ e*_i``?

    Checked through the coefficient conditions ``k d_ij = M[j][i] + M[n+i][n+j]``,
    ``M[i][n+j] = M[j][n+i]``, ``M[n+i][j] = M[n+j][i]``.
    """
    if M.shape != (2 * n, 2 * n):
        raise DimensionError(f"xi must be {2 * n}x{2 * n}")
    f = M.field
    k = f.coerce(k)
    scale = max(M.max_abs(), abs(k), 1.0)
    for i in range(n):
        for j in range(n):
            target = k if i == j else f.zero
            if not f.eq(M[j, i] + M[n + i, n + j], target, scale):
                return False
            if not f.eq(M[i, n + j], M[j, n + i], scale):
                return False
            if not f.eq(M[n + i, j], M[n + j, i], scale):
                return False
    return True


@dataclass(frozen=True)
class GkXiSpec:
    """Parameters of ``G_{k,xi}``: ``M`` is the matrix of ``xi`` on ``e_1..e_2n``."""

    n: int
    k: Scalar
    M: Matrix

    @classmethod
    def make(cls, n: int, k: object, M: Sequence[Sequence[object]] | Matrix, field: Field = EXACT) -> "GkXiSpec":
        mat = M if isinstance(M, Matrix) else Matrix(M, field)
        return cls(n, mat.field.coerce(k), mat)

    @property
    def field(self) -> Field:
        return self.M.field

    def check(self) -> None:
        if self.n < 1:
            raise CspViolation("n must be at least 1")
        if self.M.shape != (2 * self.n, 2 * self.n):
            raise CspViolation(f"xi must be {2 * self.n}x{2 * self.n}, got {self.M.shape}")
        if self.field.is_zero(self.k):
            raise CspViolation("k must be nonzero")
        if not csp_check(self.M, self.k, self.n):
            raise CspViolation("xi is not conformal with factor k")


def gkxi_labels(n: int) -> list[str]:
    return ["e-1", "e0"] + [f"e{t}" for t in range(1, 2 * n + 1)]


def g_k_xi(spec: GkXiSpec) -> LieAlgebra:
    """Algebra on ``(e-1, e0, e1..e2n)``: ``[e_i, e_{n+j}] = d_ij e0``,
    ``[e-1, e0] = k e0``, ``[e-1, e_t] = sum_s M[s][t] e_s``.
    """
    spec.check()
    n = spec.n
    entries: list[tuple[int, int, int, object]] = [(0, 1, 1, spec.k)]
    for i in range(1, n + 1):
        entries.append((i + 1, n + i + 1, 1, 1))
    for t in range(2 * n):
        for s in range(2 * n):
            c = spec.M[s, t]
            if c != 0:
                entries.append((0, t + 2, s + 2, c))
    return LieAlgebra.from_brackets(2 * n + 2, entries, gkxi_labels(n), spec.field)


def golden_spec(n: int) -> GkXiSpec:
    """``k = 1`` with ``k_i = 2``, ``k_i' = 1``: every xi-block has char poly ``T^2 - T - 1``."""
    if n < 2:
        raise DimensionError("the golden instance needs n >= 2")
    z = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        z[i][i] = 2
        z[n + i][n + i] = -1
        z[n + i][i] = 1
        z[i][n + i] = -1
    return GkXiSpec.make(n, 1, z)


def golden_instance(n: int) -> LieAlgebra:
    return g_k_xi(golden_spec(n))


def diagonal_spec(n: int, rates: Sequence[object], field: Field = EXACT) -> GkXiSpec:
    if len(rates) != n:
        raise DimensionError(f"expected {n} rates, got {len(rates)}")
    rs = [field.coerce(r) for r in rates]
    return GkXiSpec(n, field.one, Matrix.diag(rs + [field.one - r for r in rs], field))


def diagonal_instance(n: int, rates: Sequence[object], field: Field = EXACT) -> LieAlgebra:
    """``k = 1``, ``M = diag(rates, 1 - rates)``."""
    return g_k_xi(diagonal_spec(n, rates, field))


def pi_power_instance(n: int, tolerance: float = 1e-9) -> LieAlgebra:
    """Diagonal instance with rates ``pi, pi^2, ..., pi^n`` over the approximate field."""
    return diagonal_instance(n, [math.pi**i for i in range(1, n + 1)], approx(tolerance))


def spec_g7a() -> GkXiSpec:
    return GkXiSpec.make(1, 1, [[0, 0], [0, 1]])


def spec_g7b() -> GkXiSpec:
    return GkXiSpec.make(1, -2, [[-1, -1], [0, -1]])


def spec_g7c(k_tilde: object = 1) -> GkXiSpec:
    kt = EXACT.coerce(k_tilde)
    return GkXiSpec.make(1, 2 * kt, [[kt, 1], [-1, kt]])


def aff1_example() -> LieAlgebra:
    """The two-dimensional algebra ``[e1, e2] = e2``."""
    return LieAlgebra.from_brackets(2, [(0, 1, 1, 1)], ["e1", "e2"])


PRESETS = ("aff1", "g7a", "g7b", "g7c", "golden")


def preset_spec(name: str, *, k_tilde: object = 1, n: int = 2) -> Optional[GkXiSpec]:
    if name == "g7a":
        return spec_g7a()
    if name == "g7b":
        return spec_g7b()
    if name == "g7c":
        return spec_g7c(k_tilde)
    if name == "golden":
        return golden_spec(n)
    return None


def example_preset(name: str, *, k_tilde: object = 1, n: int = 2) -> tuple[LieAlgebra, Vector]:
    """A worked example and its canonical Frobenius functional.

    ``aff1`` comes with ``e2*``; the ``G_{k,xi}`` presets with ``e0*``.
    """
    if name == "aff1":
        L = aff1_example()
        return L, L.basis_vector(1)
    spec = preset_spec(name, k_tilde=k_tilde, n=n)
    if spec is None:
        raise LieToolError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    L = g_k_xi(spec)
    return L, L.basis_vector(1)
