"""Command line front end.

    hypersym decompose A.json [--standard]
    hypersym check A.json --det222 | --star 1,1 | --resultant | --witness | --witness-ff 7 [--degree 3]
    hypersym tables --chartable 4 | --dims 2 3 [--ranks] | --chern 4 2

Reports are JSON on stdout unless ``--text`` is given.  Exit codes:
0 ok, 1 invalid input, 2 failed internal check, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .combinat import class_size, character_table, format_partition
from .dims import dimension_table
from .exactnum import parse_cyclo
from .hypermatrix import Hypermatrix, InvalidInputError
from .symmetry import (
    MembershipError,
    ResourceLimitError,
    decompose_full,
    decompose_isotypic,
    format_label,
    membership,
    standard_shape,
    subspace_rank,
)
from .vanishing import (
    DegenerateSystemError,
    cayley_det_222,
    chern_top,
    diag_system,
    resultant_n2,
    star_condition,
    witness_n2,
    witness_search_ff,
)

EXIT_CODES = {"ok": 0, "invalid-input": 1, "check-failed": 2, "resource-limit": 3}


class CheckFailed(RuntimeError):
    pass


def parse_vector(text: str, order: int) -> list:
    return [parse_cyclo(part, order) for part in text.split(",")]


def _load(args) -> Hypermatrix:
    path = args.file or args.input
    if path is None:
        raise InvalidInputError("no input hypermatrix given (use a file argument or --input)")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return Hypermatrix.from_json(text)


# ---------------------------------------------------------------------------


def cmd_decompose(args) -> tuple[dict, str]:
    F = _load(args)
    report = decompose_full(F) if args.standard else decompose_isotypic(F)
    if not report.recomposes():
        raise CheckFailed("components do not recompose to the input")
    payload = report.to_json_obj()
    payload["membership"] = membership(F).to_json_obj()
    payload["nonzero"] = [format_label(lab) for lab in report.nonzero_labels()]
    lines = [f"n={F.n} d={F.d} root_order={F.root_order}"]
    for lab, h in report.components.items():
        lines.append(f"  {format_label(lab):<12} {'zero' if h.is_zero() else 'nonzero'}")
    return payload, "\n".join(lines)


def cmd_check(args) -> tuple[dict, str]:
    F = _load(args)
    if args.det222:
        value = cayley_det_222(F)
        return {"check": "det222", "mode": "exact", "value": value.to_json(), "zero": value.is_zero()}, f"Det = {value}"
    if args.star is not None:
        v = parse_vector(args.star, F.root_order)
        ok = star_condition(F, v)
        return {"check": "star", "mode": "exact", "vector": [x.to_json() for x in v], "holds": ok}, f"star condition: {ok}"
    if args.resultant:
        if F.n != 2:
            raise InvalidInputError("--resultant needs n=2")
        try:
            value = resultant_n2(diag_system(F))
        except DegenerateSystemError as exc:
            return {"check": "resultant", "mode": "exact", "value": None, "degenerate": str(exc)}, str(exc)
        return (
            {"check": "resultant", "mode": "exact", "value": value.to_json(), "zero": value.is_zero()},
            f"Res(G_1, G_2) = {value}",
        )
    if args.witness:
        if F.n != 2:
            raise InvalidInputError("--witness needs n=2; use --witness-ff for larger n")
        rep = witness_n2(F)
        shown = None if rep.witness is None else "(" + ", ".join(str(x) for x in rep.witness) + ")"
        return {"check": "witness", **rep.to_json_obj()}, f"[{rep.mode}] {rep.status}: {shown}"
    if args.witness_ff is not None:
        rep = witness_search_ff(F, args.witness_ff, degree=args.degree)
        return {"check": "witness-ff", **rep.to_json_obj()}, f"[{rep.mode}] {rep.status}: {rep.witness}"
    raise InvalidInputError("check needs one of --det222, --star, --resultant, --witness, --witness-ff")


def cmd_tables(args) -> tuple[dict, str]:
    if args.chartable is not None:
        d = args.chartable
        if d < 1:
            raise InvalidInputError("--chartable needs d >= 1")
        rows, cols, table = character_table(d)
        payload = {
            "d": d,
            "classes": [format_partition(mu) for mu in cols],
            "class_sizes": [class_size(mu) for mu in cols],
            "rows": [{"label": format_partition(lam), "values": vals} for lam, vals in zip(rows, table)],
        }
        width = max(8, max(len(format_partition(c)) for c in cols) + 2)
        lines = [" " * 12 + "".join(f"{format_partition(c):>{width}}" for c in cols)]
        lines.append(f"{'size':<12}" + "".join(f"{class_size(c):>{width}}" for c in cols))
        for lam, vals in zip(rows, table):
            lines.append(f"{format_partition(lam):<12}" + "".join(f"{v:>{width}}" for v in vals))
        return payload, "\n".join(lines)
    if args.dims is not None:
        n, d = args.dims
        if n < 1 or d < 1:
            raise InvalidInputError("--dims needs n, d >= 1")
        table = dimension_table(n, d)
        payload = table.to_json_obj()
        text = table.to_text()
        if args.ranks:
            ranks = {format_partition(s): subspace_rank(s, n) for s, *_ in table.rows}
            if d >= 3:
                std = standard_shape(d)
                for m in range(1, d):
                    ranks[format_label((std, m))] = subspace_rank((std, m), n)
            payload["ranks"] = ranks
            text += "\nexact ranks: " + ", ".join(f"{k}={v}" for k, v in ranks.items())
        return payload, text
    if args.chern is not None:
        n, d = args.chern
        if n < 1:
            raise InvalidInputError("--chern needs n >= 1")
        value = chern_top(n, d)
        return {"n": n, "d": d, "chern_top": value}, f"c_{n - 1}(Omega_P^{n - 1}({d})) = {value}"
    raise InvalidInputError("tables needs one of --chartable, --dims, --chern")


# ---------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--input", default=default, help="hypermatrix JSON file ('-' for stdin)")
    parser.add_argument("--output", default=default, help="write the report here instead of stdout")
    parser.add_argument(
        "--text", action="store_true", default=False if default is None else default, help="human readable output"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersym", description=__doc__.split("\n")[0])
    _global_flags(parser, None)
    # same flags after the subcommand; SUPPRESS keeps them from clobbering the global values
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="isotypic decomposition")
    p.add_argument("file", nargs="?")
    p.add_argument("--standard", action="store_true", help="split W_(d-1,1) into cyclic eigencomponents")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", parents=[common], help="vanishing checks")
    p.add_argument("file", nargs="?")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--star", metavar="VECTOR", help="comma separated cyclotomic literals, e.g. 1,1 or 1/2+w^2,0")
    g.add_argument("--det222", action="store_true")
    g.add_argument("--resultant", action="store_true")
    g.add_argument("--witness", action="store_true", help="exact witness for n=2")
    g.add_argument("--witness-ff", type=int, metavar="P", help="finite field evidence search")
    p.add_argument("--degree", type=int, default=1, help="with --witness-ff: search over GF(P^DEGREE)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tables", parents=[common], help="character tables, dimensions, Chern numbers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--chartable", type=int, metavar="D")
    g.add_argument("--dims", type=int, nargs=2, metavar=("N", "D"))
    g.add_argument("--chern", type=int, nargs=2, metavar=("N", "D"))
    p.add_argument("--ranks", action="store_true", help="with --dims: also compute exact projector ranks")
    p.set_defaults(func=cmd_tables, file=None)
    return parser


def run(argv: list[str] | None = None) -> tuple[str, dict, str, argparse.Namespace | None]:
    """Execute a command; returns (status, payload, text, parsed args)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            raise
        return "invalid-input", {"status": "invalid-input", "error": "bad command line"}, "error: bad command line", None
    try:
        payload, text = args.func(args)
        status = "ok"
    except (InvalidInputError, MembershipError, ValueError) as exc:
        status, payload, text = "invalid-input", {"error": str(exc)}, f"error: {exc}"
    except CheckFailed as exc:
        status, payload, text = "check-failed", {"error": str(exc)}, f"check failed: {exc}"
    except ResourceLimitError as exc:
        status, payload, text = "resource-limit", {"error": str(exc)}, f"resource limit: {exc}"
    payload = {"status": status, "command": args.command, **payload}
    return status, payload, text, args


def main(argv: list[str] | None = None) -> int:
    status, payload, text, args = run(argv)
    out = text if getattr(args, "text", False) else json.dumps(payload, indent=2)
    if getattr(args, "output", None):
        Path(args.output).write_text(out + "\n")
    else:
        print(out)
    return EXIT_CODES[status]


if __name__ == "__main__":
    sys.exit(main())
