"""Semisimplicity, nilpotency, Jordan-Chevalley splitting and eigenvalue reports."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

from .checks import CheckResult
from .errors import ConvergenceError, DimensionError, UnsupportedFieldError
from .field_linalg import (
    Matrix,
    Polynomial,
    Scalar,
    Vector,
    approx,
    char_poly,
    is_squarefree,
    kernel_basis,
    min_poly,
    poly_xgcd,
    roots_exact,
    roots_numeric,
    squarefree_decomposition,
    squarefree_part,
)

REALNESS_TOL = 1e-9
CLUSTER_TOL = 1e-7


def _require_exact(A: Matrix, what: str) -> None:
    if not A.field.is_exact:
        raise UnsupportedFieldError(f"{what} needs the exact field; use eigen_report instead")


def _require_square(A: Matrix) -> None:
    if not A.is_square:
        raise DimensionError("operator matrix must be square")


def is_semisimple(A: Matrix) -> bool:
    """Semisimple over C iff the minimal polynomial is squarefree."""
    _require_exact(A, "semisimplicity test")
    _require_square(A)
    return is_squarefree(min_poly(A))


def is_nilpotent(A: Matrix) -> bool:
    _require_square(A)
    if A.field.is_exact:
        return A.power(A.nrows).is_zero()
    scale = max(A.max_abs(), 1.0) ** A.nrows
    return A.power(A.nrows).max_abs() <= A.field.tolerance * scale


@dataclass(frozen=True)
class JordanPair:
    s: Matrix
    n: Matrix
    iterations: int


def jordan_chevalley(A: Matrix) -> JordanPair:
    """Split ``A = s + n`` with ``s`` semisimple, ``n`` nilpotent, ``[s, n] = 0``.

    Newton iteration on the squarefree part ``f`` of the characteristic
    polynomial: ``s <- s - f(s) h(s)`` with ``h = 1/f' mod f``.  Each step
    squares the nilpotent defect ``f(s)``, so ``ceil(log2 dim) + 1`` steps
    suffice.
    """
    _require_exact(A, "Jordan-Chevalley decomposition")
    _require_square(A)
    dim = A.nrows
    if dim == 0:
        return JordanPair(A, A, 0)
    f = squarefree_part(char_poly(A))
    g, h, _ = poly_xgcd(f.derivative(), f)
    if g.degree != 0:
        raise AssertionError("squarefree part shares a factor with its derivative")
    s = A
    limit = math.ceil(math.log2(dim)) + 1 if dim > 1 else 1
    steps = 0
    while True:
        defect = f.at_matrix(s)
        if defect.is_zero():
            break
        if steps >= limit:
            raise ConvergenceError("Jordan-Chevalley iteration did not terminate")
        s = s - defect @ h.at_matrix(s)
        steps += 1
    pair = JordanPair(s, A - s, steps)
    check = verify_jordan_pair(A, pair)
    if not check.passed:
        raise AssertionError(f"Jordan-Chevalley invariants failed: {check.failures}")
    return pair


def verify_jordan_pair(A: Matrix, pair: JordanPair) -> CheckResult:
    s, n = pair.s, pair.n
    results = {
        "sum": (s + n).equals(A),
        "commute": (s @ n).equals(n @ s),
        "semisimple": is_semisimple(s),
        "nilpotent": is_nilpotent(n),
        "s_commutes_with_A": (s @ A).equals(A @ s),
        "n_commutes_with_A": (n @ A).equals(A @ n),
    }
    failures = tuple(k for k, ok in results.items() if not ok)
    return CheckResult("jordan-chevalley", not failures, failures, results)


# ---------------------------------------------------------------------------
# eigenvalue reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eigenvalue:
    value: Scalar
    algebraic: int
    geometric: int
    eigenvectors: tuple[Vector, ...]


@dataclass(frozen=True)
class EigenReport:
    """Spectrum of an operator.

    Exact field: ``eigenvalues`` are the rational ones, ``residual_factor``
    is the remaining rational-root-free factor of the characteristic
    polynomial, and ``residual_roots`` are its complex roots (numeric, with
    multiplicity).  Approximate field: ``eigenvalues`` are clusters of the
    numeric roots and ``residual_factor`` is ``None``.
    """

    kind: Literal["exact", "approx"]
    dim: int
    char_poly: Polynomial
    eigenvalues: tuple[Eigenvalue, ...]
    residual_factor: Optional[Polynomial]
    residual_roots: tuple[complex, ...]
    diagonalizable_over_C: bool
    diagonalizable_over_base: bool
    base_field: Literal["R", "C"]
    numeric_assisted: bool
    separation_certified: Optional[bool]

    @property
    def nonreal_roots(self) -> tuple[complex, ...]:
        return tuple(z for z in self.residual_roots if abs(z.imag) > REALNESS_TOL)

    def multiset(self) -> list[complex]:
        """All eigenvalues with algebraic multiplicity, as complex numbers."""
        out = []
        for e in self.eigenvalues:
            out.extend([complex(e.value)] * e.algebraic)
        if self.kind == "exact":
            out.extend(self.residual_roots)
        return sorted(out, key=lambda z: (z.real, z.imag))


def _eigenspace(A: Matrix, lam: Scalar, tolerance: Optional[float] = None) -> list[Vector]:
    shifted = A - Matrix.identity(A.nrows, A.field).scale(lam)
    if tolerance is not None and not A.field.is_exact:
        shifted = shifted.to_field(approx(tolerance))
    return kernel_basis(shifted)


def _certify(g: Polynomial, roots: list[complex]) -> bool:
    """Inclusion discs ``|z - c| <= deg |g(c)/g'(c)|`` for a squarefree real ``g``.

    Certified when the discs are pairwise disjoint, every root called
    non-real has a disc clear of the real axis, and every root called real has
    a conjugation-symmetric enlargement of its disc that meets no other disc.
    """
    gc = [complex(c) for c in g.coeffs]
    dgc = [k * c for k, c in enumerate(gc)][1:]

    def ev(cs, x):
        acc = 0j
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    n = g.degree
    discs = []
    for z in roots:
        d = ev(dgc, z)
        if d == 0:
            return False
        discs.append((z, n * abs(ev(gc, z)) / abs(d)))
    for a in range(len(discs)):
        za, ra = discs[a]
        real = abs(za.imag) <= REALNESS_TOL
        if not real and abs(za.imag) <= ra:
            return False
        centre, radius = (complex(za.real, 0), ra + abs(za.imag)) if real else (za, ra)
        for b in range(len(discs)):
            if a != b:
                zb, rb = discs[b]
                if abs(centre - zb) <= radius + rb:
                    return False
    return True


def eigen_report(A: Matrix, cluster_tol: float = CLUSTER_TOL) -> EigenReport:
    _require_square(A)
    if A.field.is_exact:
        return _eigen_report_exact(A)
    return _eigen_report_approx(A, cluster_tol)


def _eigen_report_exact(A: Matrix) -> EigenReport:
    p = char_poly(A)
    rational, residual = roots_exact(p)
    eigs = []
    for lam, mult in rational:
        space = _eigenspace(A, lam)
        eigs.append(Eigenvalue(lam, mult, len(space), tuple(space)))
    over_c = is_squarefree(min_poly(A))
    residual_roots: list[complex] = []
    certified: Optional[bool] = None
    if residual.degree >= 1:
        certified = True
        for g, mult in squarefree_decomposition(residual):
            rs = roots_numeric(g)
            certified = certified and _certify(g, rs)
            residual_roots.extend(z for z in rs for _ in range(mult))
        residual_roots.sort(key=lambda z: (z.real, z.imag))
    all_real = all(abs(z.imag) <= REALNESS_TOL for z in residual_roots)
    return EigenReport(
        kind="exact",
        dim=A.nrows,
        char_poly=p,
        eigenvalues=tuple(eigs),
        residual_factor=residual,
        residual_roots=tuple(residual_roots),
        diagonalizable_over_C=over_c,
        diagonalizable_over_base=over_c and all_real,
        base_field="R",
        numeric_assisted=residual.degree >= 1,
        separation_certified=certified,
    )


def _cluster(roots: list[complex], tol: float) -> list[list[complex]]:
    clusters: list[list[complex]] = []
    for z in roots:
        for c in clusters:
            if abs(z - c[0]) <= tol * (1 + abs(c[0])):
                c.append(z)
                break
        else:
            clusters.append([z])
    return clusters


def _eigen_report_approx(A: Matrix, cluster_tol: float) -> EigenReport:
    p = char_poly(A)
    roots = roots_numeric(p) if p.degree >= 1 else []
    eigs = []
    rank_tol = max(A.field.tolerance, cluster_tol)
    for c in _cluster(roots, cluster_tol):
        lam = sum(c) / len(c)
        space = _eigenspace(A, lam, rank_tol)
        eigs.append(Eigenvalue(lam, len(c), len(space), tuple(space)))
    eigs.sort(key=lambda e: (e.value.real, e.value.imag))
    over_c = sum(e.geometric for e in eigs) == A.nrows
    return EigenReport(
        kind="approx",
        dim=A.nrows,
        char_poly=p,
        eigenvalues=tuple(eigs),
        residual_factor=None,
        residual_roots=tuple(roots),
        diagonalizable_over_C=over_c,
        diagonalizable_over_base=over_c,
        base_field="C",
        numeric_assisted=True,
        separation_certified=None,
    )


def eigen_totals_consistent(report: EigenReport) -> bool:
    """Sum of algebraic multiplicities plus residual degree equals the dimension."""
    alg = sum(e.algebraic for e in report.eigenvalues)
    if report.kind == "exact":
        alg += report.residual_factor.degree if report.residual_factor.degree > 0 else 0
    return alg == report.dim and all(e.geometric <= e.algebraic for e in report.eigenvalues)

