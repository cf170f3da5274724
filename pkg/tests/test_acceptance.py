"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest, where the
lines are repeated in the terminal summary.
"""

from __future__ import annotations

import math
import time
import timeit
from fractions import Fraction

from frobenius_lie import lie_core
from frobenius_lie.catalog import aff, example_preset, golden_instance, pi_power_instance
from frobenius_lie.derivations import derivation_basis, principal_semisimplicity_pipeline
from frobenius_lie.field_linalg import Matrix, Polynomial, char_poly, rank
from frobenius_lie.frobenius import find_frobenius_functional, principal_element, right_nil_basis
from frobenius_lie.lie_core import LieAlgebra
from frobenius_lie.lsa import lsa_from_frobenius
from frobenius_lie.sl_embed import embed, verify_embedding
from frobenius_lie.spectral import eigen_report, is_semisimple, jordan_chevalley, verify_jordan_pair

from property_suite import PRESET_NAMES, preset_structures, structure_failures

H = Fraction(1, 2)
RESULTS: list[str] = []


def _record(number: int, title: str, checks: dict[str, bool], note: str = "") -> None:
    failed = [k for k, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title}"
    if failed:
        line += f" -- failed: {', '.join(failed)}"
    if note:
        line += f" ({note})"
    RESULTS.append(line)
    print(line)
    assert not failed, line


def _aff1_fixture():
    lie_core._validate_cached.cache_clear()
    L = LieAlgebra.from_brackets(2, [(0, 1, 1, 1)], ["e1", "e2"])
    F = principal_element(L, (0, 1))
    P = lsa_from_frobenius(F)
    return L, F, P, L.ad(F.x0).trace()


def test_criterion_01_aff1_fixture():
    L, F, P, tr = _aff1_fixture()
    e1, e2 = (1, 0), (0, 1)
    best = min(timeit.repeat(_aff1_fixture, number=1, repeat=50))
    _record(1, "aff(1) fixture: LSA table, q map, x0, trace", {
        "e1e1 = -e1": P.product(e1, e1) == (-1, 0),
        "e1e2 = 0": P.product(e1, e2) == (0, 0),
        "e2e1 = -e2": P.product(e2, e1) == (0, -1),
        "e2e2 = 0": P.product(e2, e2) == (0, 0),
        "q(e1) = -e2*": F.q(e1) == (0, -1),
        "q(e2) = e1*": F.q(e2) == (1, 0),
        "x0 = -e1": F.x0 == (-1, 0),
        "trace ad(x0) = -1": tr == -1,
        "< 1 ms": best < 1e-3,
    }, f"{best * 1e3:.3f} ms")


def test_criterion_02_example_a():
    L, a = example_preset("g7a")
    F = principal_element(L, a)
    A = L.ad(F.x0)
    nils = right_nil_basis(F)
    target = [(0, 1, 0, 0), (0, 0, 0, 1)]
    _record(2, "example (a): x0, diagonal ad(x0), semisimple, right-nils", {
        "x0 = -e-1": F.x0 == (-1, 0, 0, 0),
        "ad(x0) = -diag(0,1,0,1)": A == Matrix.diag([0, -1, 0, -1]),
        "semisimple": is_semisimple(A),
        "right-nils span {e0, e2}": len(nils) == 2 and rank(Matrix(nils + target)) == 2,
    })


def test_criterion_03_example_b():
    L, a = example_preset("g7b")
    F = principal_element(L, a)
    A = L.ad(F.x0)
    T = Polynomial([0, 1])
    expected = T * Polynomial([1, 1]) * Polynomial([H, 1]) ** 2
    rep = eigen_report(A)
    half = [e for e in rep.eigenvalues if e.value == -H]
    pair = jordan_chevalley(A)
    _record(3, "example (b): char poly, 1-dim eigenspace, Jordan-Chevalley", {
        "char poly T(T+1)(T+1/2)^2": char_poly(A) == expected,
        "eigenspace of -1/2 = span (0,0,1,0)": len(half) == 1 and half[0].eigenvectors == ((0, 0, 1, 0),),
        "nilpotent part nonzero": not pair.n.is_zero(),
        "JordanPair invariants": verify_jordan_pair(A, pair).passed,
    })


def test_criterion_04_example_c():
    L, a = example_preset("g7c", k_tilde=1)
    F = principal_element(L, a)
    rep = eigen_report(L.ad(F.x0))
    nonreal = rep.nonreal_roots
    expected = [complex(-0.5, -0.5), complex(-0.5, 0.5)]
    _record(4, "example (c): diagonalizable over C, not over R", {
        "diagonalizable over C": rep.diagonalizable_over_C,
        "not diagonalizable over R": not rep.diagonalizable_over_base,
        "one conjugate pair": len(nonreal) == 2 and abs(nonreal[0] - nonreal[1].conjugate()) < 1e-9,
        "roots within 1e-9": len(nonreal) == 2 and all(abs(z - w) < 1e-9 for z, w in zip(nonreal, expected)),
    }, "computed roots " + ", ".join(f"{z:.12g}" for z in nonreal))


def test_criterion_05_golden():
    L = golden_instance(2)
    F = principal_element(L, L.basis_vector(1))
    plus = Polynomial([-1, 1, 1]) ** 2
    minus = Polynomial([-1, -1, 1]) ** 2
    _record(5, "golden instance n=2: squared golden factor", {
        "(T^2+T-1)^2 | char_poly(ad x0)": plus.divides(char_poly(L.ad(F.x0))),
        "(T^2-T-1)^2 | char_poly(ad e-1)": minus.divides(char_poly(L.ad(L.basis_vector(0)))),
    })


def test_criterion_06_pi_powers():
    L = pi_power_instance(3)
    F = principal_element(L, L.basis_vector(1))
    got = eigen_report(L.ad(F.x0)).multiset()
    pis = [math.pi**i for i in (1, 2, 3)]
    expected = sorted(-v for v in [0.0, 1.0] + pis + [1 - p for p in pis])
    err = max(abs(z - w) for z, w in zip(got, expected))
    _record(6, "pi-power instance n=3: spectrum of ad(x0) (overall sign -1)", {
        "eight eigenvalues": len(got) == 8,
        "within 1e-7": err < 1e-7,
    }, f"max error {err:.1e}")


def test_criterion_07_aff_derivations():
    t0 = time.perf_counter()
    dims = {n: derivation_basis(aff(n)) for n in (1, 2, 3)}
    elapsed = time.perf_counter() - t0
    checks = {f"aff({n}): dim {n * n + n}, outer 0": (S.dim, S.outer_dim) == (n * n + n, 0) for n, S in dims.items()}
    checks["< 5 s"] = elapsed < 5
    _record(7, "aff(n) has only inner derivations, n = 1, 2, 3", checks, f"{elapsed:.2f} s")


def test_criterion_08_semisimplicity_pipeline():
    L = aff(2)
    F = principal_element(L, find_frobenius_functional(L, seed=0))
    r_aff = principal_semisimplicity_pipeline(L, F)
    G, a = example_preset("g7b")
    r_b = principal_semisimplicity_pipeline(G, principal_element(G, a))
    _record(8, "inner derivations force a zero nilpotent part", {
        "aff(2): all inner": r_aff.all_inner,
        "aff(2): nilpotent part exactly zero": r_aff.nilpotent_zero,
        "example (b): has outer derivations": not r_b.all_inner,
        "example (b): nilpotent part nonzero": not r_b.nilpotent_zero,
        "both consistent": r_aff.consistent and r_b.consistent,
    })


def test_criterion_09_embeddings():
    checks = {}
    for name in PRESET_NAMES:
        L, a = example_preset(name)
        E = embed(L, lsa_from_frobenius(principal_element(L, a)))
        checks[f"{name} embeds"] = verify_embedding(E, L).passed and E.size == L.dim + 1
    L, a = example_preset("aff1")
    literal = verify_embedding(embed(L, lsa_from_frobenius(principal_element(L, a)), trace_corrected=False), L)
    checks["uncorrected block form fails on (e1, e2)"] = (
        not literal.details["homomorphism"] and literal.details["broken_pairs"] == [(0, 1)]
    )
    _record(9, "traceless embedding into sl(p+1)", checks)


def test_criterion_10_property_suites():
    failures: dict[str, set[str]] = {}
    count = 0
    for name, F in preset_structures(count=100, seed=0):
        count += 1
        for bad in structure_failures(F):
            failures.setdefault(name, set()).add(bad)
    checks = {f"{name}": name not in failures for name in PRESET_NAMES}
    detail = f"{count} structures"
    if failures:
        detail += "; " + "; ".join(f"{k}: {sorted(v)}" for k, v in failures.items())
    _record(10, "structural identities over presets and 100 random functionals each", checks, detail)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
