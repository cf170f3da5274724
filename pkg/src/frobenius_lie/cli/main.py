"""``frobenius-lie`` command line.

Exit codes: 0 ok, 1 parse or usage error, 2 validation failure,
3 embedding verification failure, 4 no Frobenius functional.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..catalog import (
    PRESETS,
    GkXiSpec,
    aff,
    diagonal_spec,
    example_preset,
    g_k_xi,
    gl_semidirect,
    golden_spec,
)
from ..errors import CspViolation, LieToolError, LsaAxiomError, ParseError
from ..field_linalg import EXACT, Matrix, parse_rational
from ..frobenius import frobenius_search, is_frobenius_functional, principal_element
from ..lie_core import validate
from ..lsa import lsa_from_frobenius
from ..sl_embed import embed, verify_embedding
from .fileformat import AlgebraFile, dumps, encode_scalar, load
from .report import build_report, render_text

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_VERIFY, EXIT_NOT_FROBENIUS = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors share the parse-error code
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _rationals(text: str) -> list:
    return [parse_rational(t) for t in text.split(",") if t.strip()]


def _matrix(text: str) -> Matrix:
    rows = [_rationals(r) for r in text.split(";")]
    return Matrix(rows, EXACT)


def _source(args: argparse.Namespace) -> AlgebraFile:
    if getattr(args, "preset", None):
        L, alpha = example_preset(args.preset, k_tilde=parse_rational(args.k_tilde), n=args.n)
        return AlgebraFile(L, alpha)
    if not args.path:
        raise ParseError("give an algebra file or --preset")
    return load(args.path)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_validate(args: argparse.Namespace) -> int:
    af = load(args.path)
    rep = validate(af.algebra)
    if rep.ok:
        print(f"valid Lie algebra of dimension {rep.dim}")
        return EXIT_OK
    for line in rep.describe():
        print(line)
    return EXIT_INVALID


def cmd_analyze(args: argparse.Namespace) -> int:
    af = _source(args)
    functional = _rationals(args.functional) if args.functional else af.functional
    if args.functional and not af.algebra.field.is_exact:
        functional = [af.algebra.field.coerce(c) for c in functional]
    if functional is not None and len(functional) != af.algebra.dim:
        raise ParseError(f"functional needs {af.algebra.dim} coordinates")
    report = build_report(af.algebra, functional, seed=args.seed)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report), end="")
    if report["validation"]["valid"] is False:
        return EXIT_INVALID
    if report["frobenius"]["status"] != "ok":
        return EXIT_NOT_FROBENIUS
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    af = _source(args)
    L = af.algebra
    rep = validate(L)
    if not rep.ok:
        for line in rep.describe():
            print(line)
        return EXIT_INVALID
    P = af.lsa
    if P is None:
        alpha = _rationals(args.functional) if args.functional else af.functional
        if alpha is None:
            alpha = frobenius_search(L, seed=args.seed).functional
        if alpha is None or not is_frobenius_functional(L, alpha):
            _err("no LSA given and no Frobenius functional available")
            return EXIT_NOT_FROBENIUS
        P = lsa_from_frobenius(principal_element(L, alpha))
    try:
        E = embed(L, P)
    except LsaAxiomError as exc:
        _err(str(exc))
        return EXIT_VERIFY
    chk = verify_embedding(E, L)
    if not chk.passed:
        for f in chk.failures:
            _err(f)
        return EXIT_VERIFY
    doc = {
        "size": E.size,
        "basis": list(L.labels),
        "images": [
            {"label": lab, "matrix": [[encode_scalar(c, L.field) for c in row] for row in m.rows]}
            for lab, m in zip(L.labels, E.images)
        ],
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    name = args.name
    functional = None
    if name == "aff":
        L = aff(args.n)
    elif name == "gl-semidirect":
        L = gl_semidirect(args.n, args.p)
    elif name in PRESETS:
        L, functional = example_preset(name, k_tilde=parse_rational(args.k_tilde), n=args.n)
    else:
        if name == "gkxi":
            if args.k is None or (args.diag is None) == (args.matrix is None):
                raise ParseError("gkxi needs --k and exactly one of --diag / --matrix")
            M = Matrix.diag(_rationals(args.diag)) if args.diag else _matrix(args.matrix)
            spec = GkXiSpec.make(args.n, parse_rational(args.k), M)
        elif name == "diagonal":
            if args.rates is None:
                raise ParseError("diagonal needs --rates")
            spec = diagonal_spec(args.n, _rationals(args.rates))
        else:
            spec = golden_spec(args.n)
        L = g_k_xi(spec)
        functional = L.basis_vector(1)
    print(dumps(AlgebraFile(L, functional)), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frobenius-lie", description="Frobenius Lie algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check antisymmetry and the Jacobi identity")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    for cmd, func, helptext in (
        ("analyze", cmd_analyze, "run the full Frobenius/LSA/spectral pipeline"),
        ("embed", cmd_embed, "write the traceless affine embedding into sl(p+1)"),
    ):
        p = sub.add_parser(cmd, help=helptext)
        p.add_argument("path", nargs="?")
        p.add_argument("--preset", choices=PRESETS)
        p.add_argument("--k-tilde", default="1", help="parameter of the g7c preset")
        p.add_argument("--n", type=int, default=2, help="size parameter of the golden preset")
        p.add_argument("--functional", help="comma-separated coordinates, e.g. 0,1,0,0")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)
        if cmd == "analyze":
            p.add_argument("--format", choices=("text", "json"), default="text")
        else:
            p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("catalog", help="emit a catalog algebra as a file")
    p.add_argument("name", choices=("aff", "gl-semidirect", "gkxi", "golden", "diagonal") + PRESETS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--k", help="nonzero rational k of G_{k,xi}")
    p.add_argument("--diag", help="diagonal of xi, 2n comma-separated rationals")
    p.add_argument("--matrix", help="xi as rows separated by ';', entries by ','")
    p.add_argument("--rates", help="n comma-separated rates for the diagonal family")
    p.add_argument("--k-tilde", default="1")
    p.set_defaults(func=cmd_catalog)
    return parser


def _default_n(args: argparse.Namespace) -> None:
    if getattr(args, "command", None) == "catalog" and args.n is None:
        args.n = 1 if args.name in ("aff", "gl-semidirect", "gkxi", "diagonal") else 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _default_n(args)
    try:
        return args.func(args)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except CspViolation as exc:
        _err(str(exc))
        return EXIT_INVALID
    except LieToolError as exc:
        _err(str(exc))
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())
