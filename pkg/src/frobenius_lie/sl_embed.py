"""Traceless affine embedding of an LSA-equipped Lie algebra into sl(p+1).

``phi(x) = [[L_x - t I, x], [0, -t]]`` with ``t = Tr(L_x) / (p + 1)``.  The
uncorrected block ``[[L_x, x], [0, -Tr L_x]]`` is traceless too but its
commutator picks up ``Tr(L_x) y - Tr(L_y) x`` in the translation column, so
it is kept only behind ``trace_corrected=False`` for comparison.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .checks import CheckResult
from .errors import DimensionError, LsaAxiomError
from .field_linalg import Matrix, Scalar, rank, solve_linear
from .lie_core import LieAlgebra
from .lsa import LsaProduct, commutator_check, left_mult, left_rep_check


@dataclass(frozen=True)
class SlEmbedding:
    images: tuple[Matrix, ...]
    trace_corrected: bool = True

    @property
    def size(self) -> int:
        return self.images[0].nrows if self.images else 0

    def image(self, x: Sequence[Scalar]) -> Matrix:
        out = Matrix.zeros(self.size, self.size, self.images[0].field)
        for c, m in zip(x, self.images):
            if c:
                out = out + m.scale(c)
        return out


def _block(P: LsaProduct, x: Sequence[Scalar], trace_corrected: bool) -> Matrix:
    p = P.dim
    field = P.field
    Lx = left_mult(P, x)
    tr = Lx.trace()
    shift = tr / (p + 1) if trace_corrected else field.zero
    corner = -tr / (p + 1) if trace_corrected else -tr
    rows = []
    for i in range(p):
        rows.append(tuple(Lx[i, j] - (shift if i == j else field.zero) for j in range(p)) + (x[i],))
    rows.append((field.zero,) * p + (corner,))
    return Matrix(rows, field)


def embed(L: LieAlgebra, P: LsaProduct, trace_corrected: bool = True) -> SlEmbedding:
    if L.dim == 0:
        raise DimensionError("the zero algebra has nothing to embed")
    if P.dim != L.dim:
        raise DimensionError("product and algebra dimensions differ")
    rep, com = left_rep_check(P, L), commutator_check(P, L)
    if not (rep.passed and com.passed):
        raise LsaAxiomError("product is not an LSA structure on this algebra")
    images = tuple(_block(P, L.basis_vector(i), trace_corrected) for i in range(L.dim))
    return SlEmbedding(images, trace_corrected)


def verify_embedding(E: SlEmbedding, L: LieAlgebra) -> CheckResult:
    """Traceless images, bracket preservation on all pairs, and injectivity."""
    traces = [i for i, m in enumerate(E.images) if not L.field.is_zero(m.trace())]
    broken = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = E.images[i].commutator(E.images[j])
            rhs = E.image(L.ad_basis[i].col(j))
            if not lhs.equals(rhs):
                broken.append((i, j))
    r = rank(Matrix([m.vec() for m in E.images], L.field)) if E.images else 0
    failures = []
    if traces:
        failures.append(f"nonzero trace on {[L.labels[i] for i in traces]}")
    if broken:
        failures.append(
            "bracket not preserved on " + ", ".join(f"({L.labels[i]}, {L.labels[j]})" for i, j in broken)
        )
    if r != L.dim:
        failures.append(f"images span rank {r} < {L.dim}")
    return CheckResult(
        "sl embedding",
        not failures,
        tuple(failures),
        {"traceless": not traces, "homomorphism": not broken, "broken_pairs": broken, "rank": r},
    )


def restricted_ad(E: SlEmbedding, L: LieAlgebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of ``Y -> [phi(x), Y]`` on ``phi(G)`` in the basis ``phi(e_i)``."""
    X = E.image(L.vector(x))
    span = Matrix.from_columns([m.vec() for m in E.images], L.field)
    cols = []
    for m in E.images:
        coords = solve_linear(span, X.commutator(m).vec())
        if coords is None:
            raise ValueError("phi(G) is not closed under brackets")
        cols.append(coords)
    return Matrix.from_columns(cols, L.field)
