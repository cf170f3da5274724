"""Structural identities every Frobenius structure must satisfy, shared by the
property tests and the acceptance run."""

from __future__ import annotations

import random
from collections.abc import Iterator

from frobenius_lie.catalog import example_preset
from frobenius_lie.field_linalg import Matrix
from frobenius_lie.frobenius import (
    FrobeniusStructure,
    closedness_residual,
    conformal_factor,
    is_frobenius_functional,
    principal_element,
    random_rational_vector,
    right_nil_basis,
    trace_identity_check,
)
from frobenius_lie.lie_core import LieAlgebra, derived_ideal_basis, is_unimodular
from frobenius_lie.lsa import (
    commutator_check,
    is_right_unit,
    left_mult,
    left_rep_check,
    left_symmetry_failures,
    lsa_from_frobenius,
)

PRESET_NAMES = ("aff1", "g7a", "g7b", "g7c", "golden")


def random_frobenius_functionals(L: LieAlgebra, count: int, seed: int) -> Iterator[tuple]:
    rng = random.Random(seed)
    found = 0
    while found < count:
        alpha = L.vector(random_rational_vector(rng, L.dim))
        if is_frobenius_functional(L, alpha):
            found += 1
            yield alpha


def structure_failures(F: FrobeniusStructure) -> list[str]:
    """Names of the identities that fail for ``F`` (empty when all hold)."""
    L = F.algebra
    p = L.dim
    P = lsa_from_frobenius(F, verify=False)
    Q = F.q_matrix
    bad: list[str] = []

    def check(name: str, ok: bool) -> None:
        if not ok:
            bad.append(name)

    # <q(e_i . y), z> = -<q(y), [e_i, z]>  <=>  Q L_i = -ad_i^T Q
    check("q-equivariance", all(Q @ Li == -(adi.T @ Q) for Li, adi in zip(P.left, L.ad_basis)))
    check("closedness", all(
        closedness_residual(L, F.omega, i, j, k) == 0
        for i in range(p) for j in range(i + 1, p) for k in range(j + 1, p)
    ))
    check("left symmetry", not left_symmetry_failures(P))
    check("left representation", left_rep_check(P, L).passed)
    check("commutator", commutator_check(P, L).passed)

    nils = right_nil_basis(F)
    units = [F.x0] + [tuple(a + b for a, b in zip(F.x0, v)) for v in nils]
    if nils:
        units.append(tuple(a + sum((m + 2) * v[t] for m, v in enumerate(nils)) for t, a in enumerate(F.x0)))
    eye = Matrix.identity(p, L.field)
    check("right units", all(is_right_unit(P, y) for y in units))
    check("L_y0 = I + ad(y0)", all(left_mult(P, y) == eye + L.ad(y) for y in units))
    check("conformal x0", conformal_factor(F, F.x0) == -1)
    check("conformal right-nil", all(conformal_factor(F, v) == 0 for v in nils))
    tc = trace_identity_check(F)
    check("trace ad(x0) = -dim/2", 2 * tc.trace == -p)
    check("x0 outside [G,G]", tc.outside_derived_ideal)
    check("not unimodular", not is_unimodular(L))
    derived = derived_ideal_basis(L)
    check("dim right-nils", len(nils) == p - len(derived))
    return bad


def preset_structures(count: int = 100, seed: int = 0) -> Iterator[tuple[str, FrobeniusStructure]]:
    for name in PRESET_NAMES:
        L, alpha = example_preset(name)
        yield name, principal_element(L, alpha)
        for a in random_frobenius_functionals(L, count, seed):
            yield name, principal_element(L, a)
