"""Derivation algebras, inner/outer splitting, and the principal-element semisimplicity check."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import GkXiSpec, csp_check
from .checks import CheckResult
from .errors import CspViolation, DimensionError
from .field_linalg import Matrix, in_span, independent_subset, kernel_from_rref, rref, rref_sparse
from .frobenius import FrobeniusStructure
from .lie_core import LieAlgebra, require_valid
from .spectral import JordanPair, is_semisimple, jordan_chevalley


@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple[Matrix, ...]
    inner_basis: tuple[Matrix, ...]
    inner_generators: tuple[int, ...]  # basis indices i whose ad(e_i) form inner_basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def inner_dim(self) -> int:
        return len(self.inner_basis)

    @property
    def outer_dim(self) -> int:
        return self.dim - self.inner_dim


def _bracket_table(L: LieAlgebra) -> list[list[dict[int, object]]]:
    p = L.dim
    table: list[list[dict[int, object]]] = [[{} for _ in range(p)] for _ in range(p)]
    for i, j, k, c in L.brackets:
        table[i][j][k] = c
        table[j][i][k] = -c
    return table


def derivation_rows(L: LieAlgebra) -> list[dict[int, object]]:
    """Sparse rows of ``D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0`` for ``i < j``.

    Unknown ``D[a][b]`` (coefficient of ``e_a`` in ``D e_b``) sits in column
    ``a * p + b``.  Pairs with ``i > j`` repeat these rows up to sign and
    ``i == j`` is trivial, so they are not assembled.
    """
    p = L.dim
    br = _bracket_table(L)
    rows = []
    for i in range(p):
        for j in range(i + 1, p):
            for k in range(p):
                row: dict[int, object] = {}
                for m, c in br[i][j].items():
                    row[k * p + m] = row.get(k * p + m, 0) + c
                for a in range(p):
                    c = br[a][j].get(k)
                    if c:
                        row[a * p + i] = row.get(a * p + i, 0) - c
                for b in range(p):
                    c = br[i][b].get(k)
                    if c:
                        row[b * p + j] = row.get(b * p + j, 0) - c
                row = {col: v for col, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def _unvec(v, p: int, field) -> Matrix:
    return Matrix([v[a * p:(a + 1) * p] for a in range(p)], field, ncols=p)


def derivation_basis(L: LieAlgebra) -> DerivationSpace:
    require_valid(L)
    p = L.dim
    field = L.field
    rows = derivation_rows(L)
    if field.is_exact:
        pivots = rref_sparse(rows)
    else:
        pivots = rref([[r.get(c, 0j) for c in range(p * p)] for r in rows], p * p, field)
    kernel = kernel_from_rref(pivots, p * p, field)
    basis = tuple(_unvec(v, p, field) for v in kernel)
    ads = [m.vec() for m in L.ad_basis]
    keep = independent_subset(ads, p * p, field)
    inner = tuple(L.ad_basis[i] for i in keep)
    return DerivationSpace(basis, inner, tuple(keep))


def is_derivation(L: LieAlgebra, D: Matrix) -> bool:
    """``D[x, y] = [Dx, y] + [x, Dy]`` on all basis pairs."""
    if D.shape != (L.dim, L.dim):
        raise DimensionError("derivation must be a dim x dim matrix")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = D.apply(L.ad_basis[i].col(j))
            r1 = L.bracket(D.col(i), L.basis_vector(j))
            r2 = L.bracket(L.basis_vector(i), D.col(j))
            if any(not L.field.eq(a, b + c) for a, b, c in zip(lhs, r1, r2)):
                return False
    return True


def all_derivations_inner(L: LieAlgebra) -> bool:
    return derivation_basis(L).outer_dim == 0


def is_inner(space: DerivationSpace, D: Matrix) -> bool:
    """Membership of ``D`` in ``span{ad(x)}``, decided by an exact linear solve."""
    return in_span([m.vec() for m in space.inner_basis], D.vec(), D.field)


def gkxi_outer_derivation(spec: GkXiSpec, k_prime: object, xi_prime: Matrix) -> Matrix:
    """``D(e-1) = 0``, ``D(e0) = k' e0``, ``D(e_t) = xi'(e_t)`` on ``G_{k,xi}``."""
    from .catalog import g_k_xi

    field = spec.field
    n = spec.n
    k_prime = field.coerce(k_prime)
    if not csp_check(xi_prime, k_prime, n):
        raise CspViolation("xi' is not conformal with factor k'")
    if not (xi_prime @ spec.M).equals(spec.M @ xi_prime):
        raise CspViolation("xi' must commute with xi")
    p = 2 * n + 2
    z = field.zero
    rows = [[z] * p for _ in range(p)]
    rows[1][1] = k_prime
    for s in range(2 * n):
        for t in range(2 * n):
            rows[s + 2][t + 2] = xi_prime[s, t]
    D = Matrix(rows, field)
    if not is_derivation(g_k_xi(spec), D):
        raise AssertionError("constructed map fails the derivation identity")
    return D


@dataclass(frozen=True)
class PipelineReport:
    all_inner: bool
    derivation_dim: int
    outer_dim: int
    jordan: JordanPair
    nilpotent_zero: bool
    semisimple: bool

    @property
    def consistent(self) -> bool:
        """Only-inner-derivations must force a zero nilpotent part."""
        return self.nilpotent_zero or not self.all_inner

    def as_check(self) -> CheckResult:
        return CheckResult(
            "principal semisimplicity",
            self.consistent,
            () if self.consistent else ("inner derivations but nonzero nilpotent part",),
            {"all_inner": self.all_inner, "nilpotent_zero": self.nilpotent_zero},
        )


def principal_semisimplicity_pipeline(L: LieAlgebra, F: FrobeniusStructure) -> PipelineReport:
    """Compute derivations and the Jordan-Chevalley split of ``ad(x0)`` side by side."""
    if F.algebra != L:
        raise ValueError("Frobenius structure belongs to a different algebra")
    space = derivation_basis(L)
    pair = jordan_chevalley(L.ad(F.x0))
    return PipelineReport(
        all_inner=space.outer_dim == 0,
        derivation_dim=space.dim,
        outer_dim=space.outer_dim,
        jordan=pair,
        nilpotent_zero=pair.n.is_zero(),
        semisimple=is_semisimple(pair.s),
    )
