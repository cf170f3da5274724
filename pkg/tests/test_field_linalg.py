from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobenius_lie.errors import (
    ConvergenceError,
    DegenerateFormError,
    DimensionError,
    FieldMismatchError,
    ParseError,
    UnsupportedFieldError,
)
from frobenius_lie.field_linalg import (
    EXACT,
    Matrix,
    Polynomial,
    approx,
    char_poly,
    darboux_basis,
    det,
    inverse,
    is_squarefree,
    kernel_basis,
    min_poly,
    parse_rational,
    poly_gcd,
    rank,
    roots_exact,
    roots_numeric,
    solve_linear,
    squarefree_decomposition,
    squarefree_part,
    standard_form,
)

from conftest import F, small_rationals, square_matrices


def P(*coeffs):
    return Polynomial(list(coeffs))


# -- scalars ---------------------------------------------------------------


def test_exact_field_refuses_floats():
    with pytest.raises(FieldMismatchError):
        EXACT.coerce(0.5)
    with pytest.raises(FieldMismatchError):
        Matrix([[1, 0.5]])


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        Matrix.identity(2) + Matrix.identity(2, approx())


def test_rationals_are_reduced():
    assert parse_rational("6/-4") == Fraction(-3, 2)
    assert Matrix([["2/4"]])[0, 0] == Fraction(1, 2)


def test_zero_denominator_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("abc")


def test_field_context_invariants():
    assert EXACT.tolerance == 0
    with pytest.raises(ValueError):
        approx(0.0)


# -- solve / kernel --------------------------------------------------------


def test_solve_identity():
    assert solve_linear(Matrix.identity(2), (3, 5)) == (3, 5)


def test_solve_rotation():
    assert solve_linear(Matrix([[0, -1], [1, 0]]), (0, 1)) == (1, 0)


def test_solve_inconsistent():
    assert solve_linear(Matrix([[1, 1], [2, 2]]), (1, 0)) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear(Matrix.identity(2), (1, 2, 3))


def test_solve_approx_residual():
    A = Matrix([[2, 1], [1, 3]], approx())
    x = solve_linear(A, (1, 2))
    r = [a - b for a, b in zip(A.apply(x), (1, 2))]
    assert max(abs(v) for v in r) <= 1e-9 * (1 + math.hypot(1, 2))


def test_kernel_examples():
    assert kernel_basis(Matrix([[0, 0], [0, 1]])) == [(1, 0)]
    assert kernel_basis(Matrix.identity(3)) == []
    (v,) = kernel_basis(Matrix([[1, 2], [2, 4]]))
    assert v[0] * -1 == v[1] * 2  # proportional to (2, -1)


def test_det_and_inverse():
    A = Matrix([[2, 1], [7, 4]])
    assert det(A) == 1
    assert inverse(A) == Matrix([[4, -1], [-7, 2]])
    with pytest.raises(DegenerateFormError):
        inverse(Matrix([[1, 2], [2, 4]]))


@given(square_matrices(3), st.lists(small_rationals, min_size=3, max_size=3))
def test_solve_returns_a_solution_when_one_exists(rows, x):
    A = Matrix(rows)
    b = A.apply(x)
    sol = solve_linear(A, b)
    assert sol is not None and A.apply(sol) == b


@given(square_matrices(4))
def test_rank_nullity(rows):
    A = Matrix(rows)
    ker = kernel_basis(A)
    assert rank(A) + len(ker) == 4
    assert all(not any(A.apply(v)) for v in ker)


# -- polynomials -----------------------------------------------------------


def test_char_poly_examples():
    assert char_poly(Matrix.diag([1, 2])) == P(2, -3, 1)
    assert char_poly(Matrix([[0, -1], [1, 0]])) == P(1, 0, 1)


def test_char_poly_non_square():
    with pytest.raises(DimensionError):
        char_poly(Matrix([[1, 2]]))


def test_min_poly_examples():
    assert min_poly(Matrix.identity(3)) == P(-1, 1)
    assert min_poly(Matrix([[1, 1], [0, 1]])) == P(-1, 1) ** 2
    assert min_poly(Matrix.diag([2, 2, 3])) == P(-2, 1) * P(-3, 1)


def test_min_poly_refuses_approx():
    with pytest.raises(UnsupportedFieldError):
        min_poly(Matrix.identity(2, approx()))


def test_squarefree_part_examples():
    golden = P(-1, -1, 1)
    assert squarefree_part(golden**2) == golden
    assert squarefree_part(P(0, 0, 0, 1)) == P(0, 1)
    p = P(0, 1) * P(1, 1) * P(F(1, 2), 1) ** 2
    assert squarefree_part(p) == P(0, 1) * P(1, 1) * P(F(1, 2), 1)
    with pytest.raises(ValueError):
        squarefree_part(Polynomial([]))


def test_yun_decomposition():
    p = P(0, 1) * P(F(1, 2), 1) ** 2 * P(-1, -1, 1) ** 3
    dec = dict((m, g) for g, m in squarefree_decomposition(p))
    assert dec == {1: P(0, 1), 2: P(F(1, 2), 1), 3: P(-1, -1, 1)}


def test_roots_exact_examples():
    assert roots_exact(P(-2, -1, 1)) == ([(F(-1), 1), (F(2), 1)], P(1))
    assert roots_exact(P(-1, -1, 1)) == ([], P(-1, -1, 1))
    p = P(0, 1) * P(1, 1) * P(F(1, 2), 1) ** 2
    assert roots_exact(p) == ([(F(-1), 1), (F(-1, 2), 2), (F(0), 1)], P(1))


def test_roots_numeric_examples():
    r = roots_numeric(Polynomial([1, 0, 1], approx()))
    assert abs(r[0] + 1j) < 1e-9 and abs(r[1] - 1j) < 1e-9
    phi = (1 + math.sqrt(5)) / 2
    r = roots_numeric(P(-1, -1, 1))
    assert abs(r[0] - (1 - phi)) < 1e-9 and abs(r[1] - phi) < 1e-9
    (z,) = roots_numeric(Polynomial([-3.141592653589793, 1], approx()))
    assert abs(z - 3.141592653589793) < 1e-12


def test_roots_numeric_needs_degree():
    with pytest.raises(ValueError):
        roots_numeric(P(3))


def test_roots_numeric_reports_non_convergence():
    with pytest.raises(ConvergenceError):
        roots_numeric(P(*range(1, 12)), max_sweeps=1)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_roots_numeric_residual_and_count(roots):
    p = Polynomial.from_roots([F(r) for r in roots])
    found = roots_numeric(p)
    assert len(found) == p.degree
    norm1 = sum(abs(c) for c in p.coeffs)
    for z in found:
        val = sum(complex(c) * z**k for k, c in enumerate(p.coeffs))
        assert abs(val) <= 1e-9 * (1 + norm1)


@given(square_matrices(3))
def test_cayley_hamilton(rows):
    A = Matrix(rows)
    assert char_poly(A).at_matrix(A).is_zero()


@given(square_matrices(3))
def test_min_poly_divides_char_poly(rows):
    A = Matrix(rows)
    m, c = min_poly(A), char_poly(A)
    assert m.divides(c)
    assert squarefree_part(m) == squarefree_part(c)


@given(square_matrices(3))
def test_squarefree_part_is_coprime_to_derivative(rows):
    f = squarefree_part(char_poly(Matrix(rows)))
    assert poly_gcd(f, f.derivative()).degree == 0
    assert is_squarefree(f)


# -- symplectic ------------------------------------------------------------


def test_darboux_standard_form_is_fixed():
    S = standard_form(2)
    assert darboux_basis(S) == Matrix.identity(4)


def test_darboux_aff1():
    W = Matrix([[0, -1], [1, 0]])
    Pm = darboux_basis(W)
    assert Pm.T @ W @ Pm == Matrix([[0, 1], [-1, 0]])


def test_darboux_errors():
    with pytest.raises(DegenerateFormError):
        darboux_basis(Matrix.zeros(3, 3))
    with pytest.raises(DegenerateFormError):
        darboux_basis(Matrix.zeros(2, 2))
    with pytest.raises(ValueError):
        darboux_basis(Matrix([[0, 1], [1, 0]]))


@given(square_matrices(4))
def test_darboux_property(rows):
    B = Matrix(rows)
    W = B - B.T
    if rank(W) < 4:
        return
    Pm = darboux_basis(W)
    assert Pm.T @ W @ Pm == standard_form(2)


def test_darboux_approx_within_tolerance():
    W = Matrix([[0, 2.5, 0, 1], [-2.5, 0, 3, 0], [0, -3, 0, 1.5], [-1, 0, -1.5, 0]], approx())
    Pm = darboux_basis(W)
    assert (Pm.T @ W @ Pm).equals(standard_form(2, approx()))
