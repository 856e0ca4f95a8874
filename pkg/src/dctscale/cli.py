"""Command-line front end.

Verbs: ``gen`` (print exact/structural matrices), ``scale`` (double a seed
and report its error), ``metrics`` (one figure-of-merit row), ``apply``
(transform vectors from a file, optionally through the exact integer
path), ``tables`` (recompute the bundled reference tables with deltas),
and ``verify`` (residuals of all exact identities).

Output is deterministic: identical arguments produce byte-identical text.
All output for a command is assembled first and printed in one piece, so
failures never leave partial output behind.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import analysis, catalog, fastpath
from .exact import (
    IDENTITY_NAMES,
    StructuralKind,
    TransformKind,
    structural_matrix,
    transform_matrix,
    verify_identity,
)
from .matkit import as_real, frobenius_distance
from .scaler import METHOD_IDS, normalize_method, scale, scale_to

RESIDUAL_BOUND = 1e-10


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep diagnostics to one line on stderr
        raise _CliError(message)


_TRANSFORM_KINDS = ("dct2", "dct4", "dst4")
_STRUCTURAL_KINDS = {
    "B": StructuralKind.B,
    "G": StructuralKind.G,
    "A": StructuralKind.A,
    "D": StructuralKind.D,
    "shuffle": StructuralKind.PERFECT_SHUFFLE,
    "bitrev": StructuralKind.BIT_REVERSAL,
}


def _matrix_csv(mat: np.ndarray) -> list[str]:
    return [",".join(f"{v:.12g}" for v in row) for row in np.atleast_2d(mat)]


def _load_seed(approx: str, size: int, method: str):
    """Scaled transform for a catalog id (from 8 points) or 'exact' seed."""
    if approx == "exact":
        seed = transform_matrix(TransformKind.DCT2, size // 2)
        return scale(seed, method)
    entry = catalog.load(approx)
    return scale_to(
        entry.matrix,
        size,
        method,
        base_cost=(entry.baseline_adds, entry.baseline_shifts),
    )


def _cmd_gen(args) -> tuple[str, int]:
    if args.kind in _TRANSFORM_KINDS:
        mat = transform_matrix(TransformKind(args.kind), args.size)
    else:
        mat = as_real(structural_matrix(_STRUCTURAL_KINDS[args.kind], args.size))
    if args.format == "json":
        doc = {
            "kind": args.kind,
            "size": args.size,
            "matrix": [[float(v) for v in row] for row in mat],
        }
        return json.dumps(doc, indent=2) + "\n", 0
    return "\n".join(_matrix_csv(mat)) + "\n", 0


def _cmd_scale(args) -> tuple[str, int]:
    method = normalize_method(args.method)
    scaled = _load_seed(args.approx, args.size, method)
    exact = transform_matrix(TransformKind.DCT2, args.size)
    err = frobenius_distance(scaled.c_hat, exact)
    mat = scaled.c_hat if args.orthogonalize else scaled.dense
    lines = _matrix_csv(mat)
    lines.append(f"frobenius error vs exact: {err:.3f}")
    return "\n".join(lines) + "\n", 0


def _cmd_metrics(args) -> tuple[str, int]:
    method = normalize_method(args.method)
    report = analysis.evaluate(args.approx, method, size=args.size, rho=args.rho)
    line = (
        f"approx={args.approx} method={method} size={args.size} rho={args.rho:g} "
        f"d={report.d:.2f} eps={report.epsilon:.3f} mse={report.mse:.2f} "
        f"cg={report.cg:.2f} eta={report.eta:.2f} frob={report.frob:.3f} "
        f"adds={report.adds} shifts={report.shifts}"
    )
    return line + "\n", 0


def _read_vectors(path: Path, size: int) -> list[list[str]]:
    if not path.is_file():
        raise _CliError(f"input file not found: {path}")
    vectors = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != size:
            raise _CliError(
                f"line {lineno}: expected {size} values, got {len(tokens)}"
            )
        vectors.append(tokens)
    if not vectors:
        raise _CliError(f"no vectors found in {path}")
    return vectors


def _cmd_apply(args) -> tuple[str, int]:
    method = normalize_method(args.method)
    scaled = _load_seed(args.approx, args.size, method)
    vectors = _read_vectors(Path(args.input), args.size)
    lines = []
    if args.int:
        if scaled.factored is None:
            raise _CliError("--int needs a dyadic method (JAM or I..VII)")
        for tokens in vectors:
            try:
                vec = [int(t) for t in tokens]
            except ValueError:
                raise _CliError(f"--int requires integer inputs, got {tokens!r}") from None
            result = fastpath.apply(scaled.factored, vec)
            lines.append(" ".join(str(v) for v in result))
    else:
        for tokens in vectors:
            vec = np.array([float(t) for t in tokens])
            result = scaled.dense @ vec
            lines.append(" ".join(f"{v:.10g}" for v in result))
    return "\n".join(lines) + "\n", 0


def _cmd_tables(args) -> tuple[str, int]:
    ids = analysis.TABLE_IDS if args.id == "all" else (args.id,)
    docs = [analysis.reproduce_table(i) for i in ids]
    if args.format == "md":
        out = "\n".join(doc.to_markdown() for doc in docs)
    elif args.format == "csv":
        rows = [analysis.CSV_HEADER]
        for doc in docs:
            rows.extend(doc.csv_rows())
        out = "\r\n".join(rows) + "\r\n"
    else:
        out = json.dumps([doc.payload() for doc in docs], indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(out)
        return "", 0
    return out, 0


def _cmd_verify(args) -> tuple[str, int]:
    if args.max_size < 2:
        raise _CliError("--max-size must be at least 2")
    sizes = []
    n = 2
    while n <= args.max_size:
        sizes.append(n)
        n *= 2
    lines = []
    worst = 0.0
    for name in IDENTITY_NAMES:
        for size in sizes:
            residual = verify_identity(name, size)
            worst = max(worst, residual)
            lines.append(f"{name:<22} N={size:<4d} residual={residual:.3e}")
    lines.append(f"max residual: {worst:.3e}")
    ok = worst <= RESIDUAL_BOUND
    lines.append(
        "all identities verified" if ok else "IDENTITY CHECK FAILED"
    )
    return "\n".join(lines) + "\n", 0 if ok else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="dctscale", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="print an exact transform or structural matrix")
    p.add_argument(
        "--kind",
        required=True,
        choices=_TRANSFORM_KINDS + tuple(_STRUCTURAL_KINDS),
    )
    p.add_argument(
        "--size",
        required=True,
        type=int,
        help="matrix order (half-size for shuffle; power of two for bitrev)",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("scale", help="double a seed transform and report its error")
    p.add_argument("--approx", required=True, help="catalog id or 'exact'")
    p.add_argument("--method", required=True, help="|".join(METHOD_IDS))
    p.add_argument("--size", required=True, type=int, choices=(16, 32, 64))
    p.add_argument(
        "--orthogonalize",
        action="store_true",
        help="print the orthogonalized transform instead of the raw one",
    )
    p.set_defaults(handler=_cmd_scale)

    p = sub.add_parser("metrics", help="print one figure-of-merit row")
    p.add_argument("--approx", required=True)
    p.add_argument("--method", required=True)
    p.add_argument("--size", required=True, type=int, choices=(16, 32, 64))
    p.add_argument("--rho", type=float, default=0.95)
    p.set_defaults(handler=_cmd_metrics)

    p = sub.add_parser("apply", help="transform vectors from a file")
    p.add_argument("--approx", required=True)
    p.add_argument("--method", required=True)
    p.add_argument("--size", required=True, type=int, choices=(16, 32, 64))
    p.add_argument("--input", required=True, help="one whitespace-separated vector per line")
    p.add_argument(
        "--int",
        action="store_true",
        help="integer inputs; use the exact dyadic path and print exact values",
    )
    p.set_defaults(handler=_cmd_apply)

    p = sub.add_parser("tables", help="recompute reference tables with deltas")
    p.add_argument("--id", required=True, help="table id or 'all'")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(handler=_cmd_tables)

    p = sub.add_parser("verify", help="residuals of all exact identities")
    p.add_argument("--max-size", type=int, default=64)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        out, code = args.handler(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if out:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
