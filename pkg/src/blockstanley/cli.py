"""Command-line front end.

Exit status: 0 on success, 1 when a check fails (verify, subprime,
filtration), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

from .compression import CompressionLimitExceeded, compress_greedy
from .core import INF, BlockDecomposition
from .elementary import elementary_decomposition
from .formats import (
    IdealDocument,
    ParseError,
    decomposition_json,
    dumps,
    filtration_json,
    parse_document,
    render_decomposition_text,
    render_filtration,
    render_ideal,
    stanley_json,
)
from .gnomon import gnomon_decomposition
from .oracle import sufficient_truncation, verify_partition
from .stanley import decomposition_to_stanley
from .subprime import (
    SearchLimitExceeded,
    exists_subprime_ordering,
    is_prime_filtration,
    is_subprime_ordered,
    subprime_filtration,
)

log = logging.getLogger("blockstanley")

COMMANDS = ("elementary", "gnomon", "stanley", "compress", "subprime", "filtration", "verify", "count")


class UsageError(Exception):
    pass


def _parse_perm(text: str, size: int, what: str) -> List[int]:
    try:
        perm = [int(t) - 1 for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of 1-based indices") from None
    if sorted(perm) != list(range(size)):
        raise UsageError(f"{what} {text!r} is not a permutation of 1..{size}")
    return perm


def _order(text: str, size: int, what: str) -> List[int]:
    if text == "input":
        return list(range(size))
    if text == "reverse":
        return list(range(size))[::-1]
    return _parse_perm(text, size, what)


def _read_source(source: Optional[str]) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def _load(args) -> IdealDocument:
    names = args.vars.split(",") if args.vars else None
    doc = parse_document(_read_source(args.source), n=args.n, variable_names=names)
    if doc.dropped:
        log.warning(
            "dropped redundant generators: %s",
            ", ".join(str(list(g)) for g in doc.dropped),
        )
    if args.decomposition:
        with open(args.decomposition, encoding="utf-8") as fh:
            other = parse_document(fh.read(), n=doc.n)
        if other.decomposition is None:
            raise UsageError(f"{args.decomposition} holds no blocks")
        doc.decomposition = other.decomposition
    return doc


def _computed(doc: IdealDocument, args, method: str) -> BlockDecomposition:
    I = doc.ideal
    if method == "elementary":
        return elementary_decomposition(I)
    # subprime/filtration read --order as a block order
    by_blocks = args.command in ("subprime", "filtration")
    order = None if by_blocks else _order(args.order, len(I.generators), "--order")
    pi = _parse_perm(args.pi, I.n, "--pi") if args.pi else None
    return gnomon_decomposition(I, order, pi)


def _decomposition(doc: IdealDocument, args, default_method: str) -> BlockDecomposition:
    if doc.decomposition is not None:
        return doc.decomposition
    return _computed(doc, args, args.method or default_method)


def _emit_decomposition(D, doc, args, out, title=None):
    if args.format == "structured":
        out.write(dumps(decomposition_json(D, doc.variable_names, doc.ideal)))
        return
    if title:
        out.write(f"# {title}\n")
    out.write(render_decomposition_text(D))


def cmd_elementary(doc, args, out):
    D = elementary_decomposition(doc.ideal)
    _emit_decomposition(D, doc, args, out, f"elementary decomposition of {render_ideal(doc.ideal, doc.variable_names)}")
    return 0


def cmd_gnomon(doc, args, out):
    D = _computed(doc, args, "gnomon")
    _emit_decomposition(D, doc, args, out, f"gnomon decomposition of {render_ideal(doc.ideal, doc.variable_names)}")
    return 0


def cmd_stanley(doc, args, out):
    spaces = decomposition_to_stanley(_decomposition(doc, args, "gnomon"))
    names = doc.variable_names
    if args.format == "structured":
        out.write(dumps({"n": doc.n, "count": len(spaces), "spaces": [stanley_json(S, names) for S in spaces]}))
    else:
        for S in spaces:
            out.write(S.render(names) + "\n")
        out.write(f"# {len(spaces)} Stanley spaces\n")
    return 0


def cmd_compress(doc, args, out):
    D = compress_greedy(_decomposition(doc, args, "elementary"), args.max_subset)
    _emit_decomposition(D, doc, args, out, f"incompressible decomposition, {len(D)} blocks")
    return 0


def _ordered(doc, args):
    D = _decomposition(doc, args, "gnomon").nonempty()
    if args.order == "search":
        found = exists_subprime_ordering(D, doc.ideal, args.max_subset)
        return D, found
    D = D.reordered(_order(args.order, len(D), "--order"))
    return D, tuple(range(len(D))) if is_subprime_ordered(D, doc.ideal) else None


def cmd_subprime(doc, args, out, require_filtration=False):
    D, found = _ordered(doc, args)
    ok = found is not None
    F = subprime_filtration(D.reordered(found), doc.ideal) if ok else None
    if args.format == "structured":
        body = {"subprime": ok}
        if ok:
            body["order"] = [k + 1 for k in found]
            body["filtration"] = filtration_json(F)
            body["prime"] = is_prime_filtration(F)
        out.write(dumps(body))
    else:
        if not ok:
            what = "no subprime ordering exists" if args.order == "search" else "not subprime in this order"
            out.write(f"{what}\n")
        else:
            if args.order == "search":
                out.write("subprime ordering: " + ",".join(str(k + 1) for k in found) + "\n")
            elif not require_filtration:
                out.write("subprime\n")
            out.write(render_filtration(F, doc.variable_names))
            if require_filtration:
                out.write(("prime" if is_prime_filtration(F) else "not prime") + " filtration\n")
    return 0 if ok else 1


def cmd_filtration(doc, args, out):
    return cmd_subprime(doc, args, out, require_filtration=True)


def cmd_verify(doc, args, out):
    if doc.decomposition is None:
        raise UsageError("verify needs blocks: pass a decomposition document or --decomposition")
    D = doc.decomposition
    if args.truncation is not None:
        need = sufficient_truncation(doc.ideal, D)
        if args.truncation < need:
            raise UsageError(f"--truncation {args.truncation} is below the sufficient bound {need}")
    report = verify_partition(D, doc.ideal, args.truncation)
    if args.format == "structured":
        out.write(dumps({
            "ok": report.ok,
            "truncation": report.truncation,
            "counterexample": list(report.counterexample) if report.counterexample else None,
            "reason": report.reason,
        }))
    elif report.ok:
        out.write(f"ok: blocks partition the standard monomials (checked on [0,{report.truncation})^{doc.n})\n")
    else:
        out.write(f"FAILED: {report.reason}\n")
    return 0 if report.ok else 1


def cmd_count(doc, args, out):
    D = _decomposition(doc, args, "gnomon").nonempty()
    spaces = len(decomposition_to_stanley(D))
    total = 0
    for B in D:
        size = B.size()
        if size is INF:
            total = INF
            break
        total += size
    if args.format == "structured":
        out.write(dumps({"blocks": len(D), "stanley_spaces": spaces, "standard_monomials": str(total) if total is INF else total}))
    else:
        out.write(f"blocks: {len(D)}\nstanley spaces: {spaces}\nstandard monomials: {total}\n")
    return 0


HANDLERS = {
    "elementary": cmd_elementary,
    "gnomon": cmd_gnomon,
    "stanley": cmd_stanley,
    "compress": cmd_compress,
    "subprime": cmd_subprime,
    "filtration": cmd_filtration,
    "verify": cmd_verify,
    "count": cmd_count,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", nargs="?", help="file, inline ideal (e.g. 'x^3*y^9, x^7*y^5'), or '-' for stdin")
    common.add_argument("--n", type=int, help="ambient dimension for inline monomials")
    common.add_argument("--vars", help="comma-separated variable names")
    common.add_argument("--decomposition", metavar="FILE", help="read blocks from FILE")
    common.add_argument("--method", choices=("elementary", "gnomon"), help="decomposition to build when no blocks are given")
    common.add_argument(
        "--order", default="input",
        help="generator order for gnomon (input|reverse|1-based perm); block order for subprime/filtration (also 'search')",
    )
    common.add_argument("--pi", help="variable order as a 1-based permutation, e.g. 2,1")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--truncation", type=int, help="oracle grid bound for verify")
    common.add_argument("--max-subset", type=int, default=20, help="block cap for exhaustive searches")

    parser = argparse.ArgumentParser(prog="blockstanley", description="Block and Stanley decompositions of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(format="warning: %(message)s", level=logging.WARNING)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc = _load(args)
        if args.order == "search" and args.command not in ("subprime", "filtration"):
            raise UsageError("--order search applies only to subprime and filtration")
        return HANDLERS[args.command](doc, args, out)
    except (ParseError, UsageError, SearchLimitExceeded, CompressionLimitExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
