"""Structured analysis report and its text rendering.

The report is a plain JSON-compatible dict; every number in it is already a
string produced by ``format_scalar``, and the text view only re-lays those
strings out, so the two renderings cannot disagree.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any, Optional

from ..derivations import derivation_basis
from ..errors import DegenerateFormError, LieToolError
from ..field_linalg import Matrix, Scalar, format_scalar
from ..frobenius import (
    FrobeniusStructure,
    conformal_factor,
    frobenius_search,
    is_frobenius_functional,
    principal_element,
    right_nil_basis,
    trace_identity_check,
)
from ..lie_core import LieAlgebra, derived_ideal_basis, is_unimodular, validate
from ..lsa import LsaProduct, commutator_check, left_rep_check, lsa_from_frobenius
from ..sl_embed import embed, verify_embedding
from ..spectral import eigen_report, jordan_chevalley


def _s(v: Scalar) -> str:
    return format_scalar(v)


def _vec(v: Sequence[Scalar]) -> list[str]:
    return [_s(c) for c in v]


def _mat(m: Matrix) -> list[list[str]]:
    return [[_s(c) for c in row] for row in m.rows]


def skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def _ok(**fields: Any) -> dict:
    return {"status": "ok", **fields}


def lsa_table(P: LsaProduct, L: LieAlgebra) -> list[str]:
    rows = []
    for i in range(L.dim):
        for j in range(L.dim):
            prod = P.product(L.basis_vector(i), L.basis_vector(j))
            rows.append(f"{L.labels[i]}.{L.labels[j]} = {L.format_vector(prod)}")
    return rows


def _spectrum_section(A: Matrix) -> dict:
    rep = eigen_report(A)
    eigs = [
        {
            "value": _s(e.value),
            "algebraic": e.algebraic,
            "geometric": e.geometric,
            "eigenvectors": [_vec(v) for v in e.eigenvectors],
        }
        for e in rep.eigenvalues
    ]
    diag_c = rep.diagonalizable_over_C
    summary = "diagonalizable over C" if diag_c else "not diagonalizable over C"
    if rep.base_field == "R":
        summary += "; " + ("diagonalizable over R" if rep.diagonalizable_over_base else "not diagonalizable over R")
    section = _ok(
        char_poly=str(rep.char_poly),
        eigenvalues=eigs,
        eigenvalue_multiset=[format_scalar(e.value) for e in rep.eigenvalues for _ in range(e.algebraic)],
        residual_factor=None if rep.residual_factor is None else str(rep.residual_factor),
        residual_roots=[repr(z) for z in rep.residual_roots] if rep.kind == "exact" else [],
        diagonalizable_over_C=diag_c,
        diagonalizable_over_base=rep.diagonalizable_over_base,
        base_field=rep.base_field,
        numeric_assisted=rep.numeric_assisted,
        separation_certified=rep.separation_certified,
        summary=summary,
    )
    return section


def build_report(
    L: LieAlgebra,
    functional: Optional[Sequence[object]] = None,
    seed: int = 0,
) -> dict:
    """Run the whole pipeline; sections that cannot run carry a reason instead."""
    report: dict[str, Any] = {
        "algebra": {"dim": L.dim, "basis": list(L.labels), "field": L.field.kind},
    }
    val = validate(L)
    report["validation"] = _ok(valid=val.ok, violations=val.describe())
    if not val.ok:
        for key in ("frobenius", "lsa", "right_units", "conformal", "trace_identity",
                    "spectrum", "jordan", "derivations", "embedding", "unimodular"):
            report[key] = skipped("algebra fails the Jacobi identity")
        return report
    report["unimodular"] = _ok(value=is_unimodular(L))

    F: Optional[FrobeniusStructure] = None
    if functional is not None:
        alpha = L.vector(functional)
        source = "given"
        if not is_frobenius_functional(L, alpha):
            alpha = None
            reason = "given functional is degenerate"
    else:
        search = frobenius_search(L, seed=seed)
        alpha, source, reason = search.functional, f"search ({search.reason})", search.reason
        if search.status == "certified-none":
            reason = f"no Frobenius functional exists: {search.reason}"
        elif search.status == "not-found":
            reason = f"no Frobenius functional found: {search.reason}"
    if alpha is not None:
        try:
            F = principal_element(L, alpha)
        except DegenerateFormError as exc:
            reason = str(exc)
    if F is None:
        for key in ("frobenius", "lsa", "right_units", "conformal", "trace_identity", "spectrum", "jordan", "embedding"):
            report[key] = skipped(reason)
    else:
        report["frobenius"] = _ok(
            alpha=_vec(F.alpha),
            source=source,
            det_omega=_s(F.omega.det()),
            omega=_mat(F.omega),
            x0=_vec(F.x0),
            x0_text=L.format_vector(F.x0),
        )
        P = lsa_from_frobenius(F)
        report["lsa"] = _ok(
            table=lsa_table(P, L),
            left_representation=left_rep_check(P, L).passed,
            commutator_is_bracket=commutator_check(P, L).passed,
        )
        nils = right_nil_basis(F)
        report["right_units"] = _ok(
            base=_vec(F.x0),
            right_nils=[_vec(v) for v in nils],
            right_nils_text=[L.format_vector(v) for v in nils],
            derived_ideal_dim=len(derived_ideal_basis(L)),
        )
        lam = conformal_factor(F, F.x0)
        report["conformal"] = _ok(
            x0=None if lam is None else _s(lam),
            right_nils=[None if (c := conformal_factor(F, v)) is None else _s(c) for v in nils],
        )
        tc = trace_identity_check(F)
        report["trace_identity"] = _ok(
            trace=_s(tc.trace), expected=_s(L.field.coerce(-tc.n)),
            outside_derived_ideal=tc.outside_derived_ideal, passed=tc.passed,
        )
        A = L.ad(F.x0)
        report["ad_x0"] = _mat(A)
        report["spectrum"] = _spectrum_section(A)
        if L.field.is_exact:
            pair = jordan_chevalley(A)
            report["jordan"] = _ok(
                semisimple=_mat(pair.s), nilpotent=_mat(pair.n),
                nilpotent_zero=pair.n.is_zero(), iterations=pair.iterations,
            )
        else:
            report["jordan"] = skipped("Jordan-Chevalley splitting needs the exact field")
        try:
            E = embed(L, P)
            chk = verify_embedding(E, L)
            report["embedding"] = _ok(size=E.size, passed=chk.passed, failures=list(chk.failures))
        except LieToolError as exc:
            report["embedding"] = skipped(str(exc))
    space = derivation_basis(L)
    report["derivations"] = _ok(total=space.dim, inner=space.inner_dim, outer=space.outer_dim,
                                all_inner=space.outer_dim == 0)
    return report


def _render_value(v: Any) -> str:
    if isinstance(v, list):
        if v and all(isinstance(r, list) and all(isinstance(c, str) for c in r) for r in v):
            return "[" + "; ".join(", ".join(r) for r in v) + "]"
        if all(isinstance(c, (str, type(None))) for c in v):
            return "(" + ", ".join("-" if c is None else c for c in v) + ")"
    if v is None:
        return "-"
    return str(v)


def render_text(report: dict) -> str:
    lines = []
    for name, section in report.items():
        lines.append(f"== {name} ==")
        if isinstance(section, dict):
            for key, value in section.items():
                if key == "eigenvalues":
                    for e in value:
                        vecs = "; ".join("(" + ", ".join(v) + ")" for v in e["eigenvectors"])
                        lines.append(
                            f"  eigenvalue {e['value']}: algebraic {e['algebraic']}, "
                            f"geometric {e['geometric']}, eigenvectors {vecs or '-'}"
                        )
                elif key == "table":
                    lines.append("  table:")
                    lines.extend(f"    {row}" for row in value)
                else:
                    lines.append(f"  {key}: {_render_value(value)}")
        else:
            lines.append(f"  {_render_value(section)}")
    return "\n".join(lines) + "\n"
