from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobenius_lie.catalog import (
    GkXiSpec,
    aff,
    aff1_example,
    csp_check,
    diagonal_instance,
    example_preset,
    g_k_xi,
    gl_semidirect,
    golden_instance,
    golden_spec,
    spec_g7a,
    spec_g7b,
    spec_g7c,
)
from frobenius_lie.errors import CspViolation, DimensionError, LieToolError
from frobenius_lie.field_linalg import Matrix, Polynomial, char_poly
from frobenius_lie.frobenius import is_frobenius_functional, principal_element
from frobenius_lie.lie_core import center_basis, is_unimodular, validate

from conftest import small_rationals


def brackets(L):
    return {(L.labels[i], L.labels[j]): L.format_vector(L.bracket(L.basis_vector(i), L.basis_vector(j)))
            for i, j, _, _ in L.brackets}


def test_aff1_is_the_two_dimensional_example():
    L = aff(1)
    assert L.labels == ("E11", "f1")
    assert L.brackets == aff1_example().brackets


def test_aff_properties():
    L = aff(2)
    assert L.dim == 6 and validate(L).ok and center_basis(L) == []
    for n in (1, 2, 3):
        assert not is_unimodular(aff(n))
    with pytest.raises(DimensionError):
        aff(0)


def test_gl_semidirect():
    assert gl_semidirect(2, 1).brackets == aff(2).brackets
    L = gl_semidirect(2, 2)
    assert L.dim == 8 and validate(L).ok
    with pytest.raises(DimensionError):
        gl_semidirect(3, 2)


def test_g7a_brackets():
    L = g_k_xi(spec_g7a())
    assert brackets(L) == {("e-1", "e0"): "e0", ("e-1", "e2"): "e2", ("e1", "e2"): "e0"}


def test_g7b_and_g7c_brackets():
    b = brackets(example_preset("g7b")[0])
    assert b[("e-1", "e1")] == "-e1" and b[("e-1", "e2")] == "-e1 - e2" and b[("e-1", "e0")] == "-2*e0"
    c = brackets(example_preset("g7c")[0])
    assert c[("e-1", "e1")] == "e1 - e2" and c[("e-1", "e2")] == "e1 + e2" and c[("e-1", "e0")] == "2*e0"


def test_csp_violations():
    with pytest.raises(CspViolation):
        g_k_xi(GkXiSpec.make(2, 2, [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    with pytest.raises(CspViolation):
        g_k_xi(GkXiSpec.make(1, 1, [[1, 0], [0, 1]]))
    with pytest.raises(CspViolation):
        g_k_xi(GkXiSpec.make(1, 0, [[0, 0], [0, 0]]))
    with pytest.raises(CspViolation):
        g_k_xi(GkXiSpec.make(2, 1, [[1, 0], [0, 0]]))


def test_csp_examples():
    assert csp_check(Matrix.diag([0, 1]), 1, 1)
    assert csp_check(Matrix.identity(4), 2, 2)
    assert not csp_check(Matrix.identity(4), 1, 2)


def _omega(n):
    # sum e*_{n+i} ^ e*_i : w(e_i, e_{n+i}) = -1
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = -1
        rows[n + i][i] = 1
    return Matrix(rows)


@given(st.lists(small_rationals, min_size=16, max_size=16), small_rationals)
def test_csp_matches_conformal_identity(entries, k):
    M = Matrix([entries[4 * r:4 * r + 4] for r in range(4)])
    W = _omega(2)
    conformal = M.T @ W + W @ M == W.scale(k)
    assert csp_check(M, k, 2) == conformal
    if conformal:
        assert M.trace() == 2 * k


@given(st.lists(small_rationals, min_size=2, max_size=2), small_rationals, small_rationals)
def test_conformal_maps_pass(diag, off1, off2):
    # block form [[A, B], [C, k - A^T]] with B, C symmetric is conformal
    a, b = diag
    k = Fraction(3)
    M = Matrix([[a, 0, off1, 0], [0, b, 0, off2], [off2, 0, k - a, 0], [0, off1, 0, k - b]])
    assert csp_check(M, k, 2)


def test_golden_instance():
    spec = golden_spec(2)
    assert csp_check(spec.M, 1, 2)
    ki, kpi = 2, 1
    assert ki * (1 - ki) + kpi**2 == -1
    assert char_poly(Matrix([[2, -1], [1, -1]])) == Polynomial([-1, -1, 1])
    L = golden_instance(2)
    target = Polynomial([-1, -1, 1]) ** 2
    assert target.divides(char_poly(L.ad(L.basis_vector(0))))
    with pytest.raises(DimensionError):
        golden_instance(1)


def test_diagonal_instance():
    assert diagonal_instance(1, [0]).brackets == g_k_xi(spec_g7a()).brackets
    with pytest.raises(DimensionError):
        diagonal_instance(2, [1])


def test_presets():
    L, a = example_preset("aff1")
    assert a == (0, 1)
    L, a = example_preset("g7b")
    assert principal_element(L, a).x0 == (Fraction(1, 2), 0, 0, 0)
    with pytest.raises(LieToolError):
        example_preset("nope")


@pytest.mark.parametrize(
    "spec",
    [spec_g7a(), spec_g7b(), spec_g7c(Fraction(3, 2)), golden_spec(2), golden_spec(3)],
    ids=["g7a", "g7b", "g7c-3/2", "golden2", "golden3"],
)
def test_g_family_structure(spec):
    L = g_k_xi(spec)
    assert validate(L).ok
    alpha = L.basis_vector(1)
    assert is_frobenius_functional(L, alpha)
    F = principal_element(L, alpha)
    assert F.x0 == tuple(-1 / spec.k if i == 0 else 0 for i in range(L.dim))
    p = L.dim
    block = [[0] * p for _ in range(p)]
    block[1][1] = spec.k
    for s in range(p - 2):
        for t in range(p - 2):
            block[s + 2][t + 2] = spec.M[s, t]
    assert L.ad(F.x0) == Matrix(block).scale(-1 / spec.k)
