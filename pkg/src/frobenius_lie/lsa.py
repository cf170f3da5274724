"""Left-symmetric products, in particular the one induced by a Frobenius form.

The product is held as its left multiplication operators: column ``j`` of
``left[i]`` is ``e_i . e_j``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .checks import CheckResult
from .errors import DimensionError, LsaAxiomError
from .field_linalg import EXACT, Field, Matrix, Scalar, Vector
from .frobenius import FrobeniusStructure
from .lie_core import LieAlgebra


@dataclass(frozen=True)
class LsaProduct:
    dim: int
    left: tuple[Matrix, ...]
    field: Field = EXACT

    @classmethod
    def from_entries(
        cls, dim: int, entries: Iterable[tuple[int, int, int, object]], field: Field = EXACT
    ) -> "LsaProduct":
        """Build from ``(i, j, k, c)`` meaning ``e_i . e_j += c e_k``; not verified."""
        z = field.zero
        mats = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            if not all(0 <= t < dim for t in (i, j, k)):
                raise DimensionError(f"index out of range in ({i}, {j}, {k})")
            mats[i][k][j] += field.coerce(c)
        return cls(dim, tuple(Matrix(m, field, ncols=dim) for m in mats), field)

    @classmethod
    def zero(cls, dim: int, field: Field = EXACT) -> "LsaProduct":
        return cls(dim, tuple(Matrix.zeros(dim, dim, field) for _ in range(dim)), field)

    def product(self, x: Sequence[object], y: Sequence[object]) -> Vector:
        return left_mult(self, x).apply(y)

    def entries(self) -> list[tuple[int, int, int, Scalar]]:
        """Sparse ``(i, j, k, c)`` triples of the multiplication tensor."""
        out = []
        for i, m in enumerate(self.left):
            for j in range(self.dim):
                for k in range(self.dim):
                    c = m[k, j]
                    if c != 0:
                        out.append((i, j, k, c))
        return out


def _combine(P: LsaProduct, mats: Sequence[Matrix], x: Sequence[object]) -> Matrix:
    if len(x) != P.dim:
        raise DimensionError(f"expected {P.dim} coordinates, got {len(x)}")
    terms = [(P.field.coerce(c), m.rows) for c, m in zip(x, mats) if c]
    z = P.field.zero
    n = P.dim
    rows = tuple(
        tuple(sum((c * rs[r][s] for c, rs in terms), z) for s in range(n)) for r in range(n)
    )
    return Matrix._trusted(rows, P.field, n)


def left_mult(P: LsaProduct, x: Sequence[object]) -> Matrix:
    """Matrix of ``y -> x . y``."""
    return _combine(P, P.left, x)


def right_mult(P: LsaProduct, y: Sequence[object]) -> Matrix:
    """Matrix of ``x -> x . y``; column ``i`` is ``e_i . y``."""
    if len(y) != P.dim:
        raise DimensionError(f"expected {P.dim} coordinates, got {len(y)}")
    y = tuple(P.field.coerce(c) for c in y)
    return Matrix.from_columns([m.apply(y) for m in P.left], P.field, nrows=P.dim)


def is_right_unit(P: LsaProduct, y: Sequence[object]) -> bool:
    return right_mult(P, y).equals(Matrix.identity(P.dim, P.field))


def is_right_nil(P: LsaProduct, y: Sequence[object]) -> bool:
    return right_mult(P, y).is_zero()


def left_rep_check(P: LsaProduct, L: LieAlgebra) -> CheckResult:
    """``L_[x,y] == [L_x, L_y]`` on basis pairs (equivalent to left-symmetry)."""
    failures = []
    for i in range(P.dim):
        for j in range(i + 1, P.dim):
            lhs = left_mult(P, L.ad_basis[i].col(j))
            rhs = P.left[i].commutator(P.left[j])
            if not lhs.equals(rhs):
                failures.append((i, j))
    return CheckResult("left representation", not failures, tuple(failures))


def commutator_check(P: LsaProduct, L: LieAlgebra) -> CheckResult:
    """``e_i e_j - e_j e_i == [e_i, e_j]`` on basis pairs."""
    failures = []
    for i in range(P.dim):
        for j in range(i + 1, P.dim):
            lhs = tuple(a - b for a, b in zip(P.left[i].col(j), P.left[j].col(i)))
            rhs = L.ad_basis[i].col(j)
            if any(not P.field.eq(a, b) for a, b in zip(lhs, rhs)):
                failures.append((i, j))
    return CheckResult("commutator", not failures, tuple(failures))


def left_symmetry_failures(P: LsaProduct) -> list[tuple[int, int, int]]:
    """Triples where ``(xy)z - x(yz) != (yx)z - y(xz)`` on basis vectors."""
    bad = []
    n = P.dim
    for i in range(n):
        for j in range(i + 1, n):
            # column k of each side is the associator (e_i e_j) e_k - e_i (e_j e_k), etc.
            lhs = left_mult(P, P.left[i].col(j)) - P.left[i] @ P.left[j]
            rhs = left_mult(P, P.left[j].col(i)) - P.left[j] @ P.left[i]
            diff = lhs - rhs
            for k in range(n):
                if any(not P.field.is_zero(v) for v in diff.col(k)):
                    bad.append((i, j, k))
    return bad


def lsa_from_frobenius(F: FrobeniusStructure, verify: bool = True) -> LsaProduct:
    """Product defined by ``w(x.y, z) = -w(y, [x, z])``.

    For fixed ``i`` the right-hand sides of all ``e_i . e_j`` form the matrix
    ``ad(e_i)^T omega``; one multiplication by ``q^{-1}`` solves them all, giving
    ``L_{e_i} = q^{-1} ad(e_i)^T omega``.
    """
    L = F.algebra
    r = F.q_inverse
    left = tuple(r @ (m.T @ F.omega) for m in L.ad_basis)
    P = LsaProduct(L.dim, left, L.field)
    if verify:
        rep = left_rep_check(P, L)
        com = commutator_check(P, L)
        if not (rep.passed and com.passed):
            raise LsaAxiomError(
                f"induced product fails the LSA axioms: left-symmetry {rep.failures}, "
                f"commutator {com.failures}"
            )
    return P
