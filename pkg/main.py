"""
Command-line front end for the iSchur toolkit.

Subcommands:
1. basis       - list Xi_{2n,2r}
2. mult        - multiply two elements of S^i(n, r) by the oracle and/or the closed formulas
3. verify      - run a named verification suite and print its report
4. tensor-act  - act with a U^i(n) generator on a basis vector of the tensor space
5. table       - write every nonzero structure constant [A][B] to a JSON file

stdout carries JSON only; progress and errors go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage / input error.
"""

import argparse
import os
import sys
from typing import List, Optional

from config_manager import describe_data_dir, get_caps, get_output_dir, load_config
from errors import ISchurError
from json_codec import dumps, index_from_text, load_json_arg, schur_from_json
from schur import SchurElement, basis, formula_product, oracle_product, product
from suites import SUITES, run_suite
from tensor import (
    TensorVector,
    gl_action,
    iota_image,
    parse_generator,
    ui_action_closed,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _log(message: str, quiet: bool = False):
    if not quiet:
        print(message, file=sys.stderr)


def _emit(obj):
    print(dumps(obj))


def _formula_mul(X: SchurElement, Y: SchurElement) -> SchurElement:
    """Bilinear extension of formula_product"""
    total = SchurElement.zero(X.n, X.r)
    for L, a in X.terms():
        for A, b in Y.terms():
            total = total + formula_product(L, A).scale(a * b)
    return total


# ===== Subcommands =====

def cmd_basis(args) -> int:
    caps = get_caps()
    matrices = basis(args.n, args.r, cap=caps["max_basis"])
    _log(f"🧮 |Xi| = {len(matrices)} at (n, r) = ({args.n}, {args.r})", args.quiet)
    _emit([A.to_json() for A in matrices])
    return EXIT_OK


def cmd_mult(args) -> int:
    X = schur_from_json(load_json_arg(args.lhs), args.n, args.r)
    Y = schur_from_json(load_json_arg(args.rhs), X.n, X.r)

    if args.method == "oracle":
        _emit(product(X, Y).to_json())
        return EXIT_OK
    if args.method == "formula":
        _emit(_formula_mul(X, Y).to_json())
        return EXIT_OK

    oracle = product(X, Y)
    formula = _formula_mul(X, Y)
    match = oracle == formula
    _emit({"method": "both", "oracle": oracle.to_json(), "formula": formula.to_json(), "match": match})
    if not match:
        _log("❌ Formula and oracle products differ", args.quiet)
        return EXIT_FAILURE
    _log("✅ Formula and oracle products agree", args.quiet)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = load_config()
    jbox = args.jbox if args.jbox is not None else config["default_jbox"]
    r_set = [int(x) for x in args.r_set.split(",")] if args.r_set else None
    _log(f"🔧 Running suite '{args.suite}' at (n, r) = ({args.n}, {args.r})", args.quiet)

    report = run_suite(args.suite, args.n, args.r, threads=args.threads,
                       jbox=jbox, m_max=args.m_max, r_set=r_set,
                       perturb=args.perturb or None)
    _emit(report.to_json(timing=args.timing))

    if args.timing:
        _log(f"⏱️  {report.cases} cases in {report.wall_time:.2f}s", args.quiet)
    if report.ok:
        _log(f"✅ {report.cases} cases, no failures", args.quiet)
        return EXIT_OK
    _log(f"❌ {report.failure_count} of {report.cases} cases failed; first: {report.failed[0].label}", args.quiet)
    return EXIT_FAILURE


def cmd_tensor_act(args) -> int:
    index = index_from_text(args.index)
    if args.r is not None and args.r != len(index):
        _log(f"❌ --index has {len(index)} entries but --r is {args.r}")
        return EXIT_USAGE
    gen = parse_generator(args.gen, args.n)
    vec = TensorVector.basis(args.n, index)

    if args.via == "closed":
        _emit(ui_action_closed(gen, vec).to_json())
        return EXIT_OK
    if args.via == "gl":
        _emit(gl_action(iota_image(gen, args.n), vec).to_json())
        return EXIT_OK

    closed = ui_action_closed(gen, vec)
    pulled = gl_action(iota_image(gen, args.n), vec)
    match = closed == pulled
    _emit({"closed": closed.to_json(), "gl": pulled.to_json(), "match": match})
    return EXIT_OK if match else EXIT_FAILURE


def cmd_table(args) -> int:
    caps = get_caps()
    matrices = basis(args.n, args.r, cap=caps["max_basis"])
    # basis order on both sides, so the file is the same on every run
    records = []
    for A in matrices:
        for B in matrices:
            if A.co() != B.ro():
                continue
            value = oracle_product(A, B)
            records.append({"A": A.to_json(), "B": B.to_json(), "product": value.to_json()})

    out = args.out or os.path.join(get_output_dir(), f"table_n{args.n}_r{args.r}.json")
    parent = os.path.dirname(out)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(dumps(records, indent=2))

    _log(f"📁 Wrote {len(records)} products to {out}", args.quiet)
    _emit({"file": out, "records": len(records)})
    return EXIT_OK


# ===== Parser =====

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ischur",
        description="Exact computations in the type C q-Schur algebra S^i(n, r)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # The 36 basis matrices of S^i(2, 2)
  python main.py basis --n 2 --r 2

  # [E_21]^2 at (1, 1) by both methods
  python main.py mult --lhs '[[0,1],[1,0]]' --rhs '[[0,1],[1,0]]' --method both

  # Short formulas against the oracle
  python main.py verify short --n 2 --r 2

  # t acting on w_(1)
  python main.py tensor-act --n 1 --gen t --index 1
        """,
    )
    parser.add_argument("--quiet", action="store_true", help="Suppress progress lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="List the basis matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=cmd_basis)

    p = sub.add_parser("mult", help="Multiply two elements")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--lhs", required=True, help="Matrix or element JSON, or @file")
    p.add_argument("--rhs", required=True, help="Matrix or element JSON, or @file")
    p.add_argument("--method", choices=("oracle", "formula", "both"), default="oracle")
    p.set_defaults(handler=cmd_mult)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--jbox", type=int, help="j entries range over [-jbox, jbox]")
    p.add_argument("--m-max", dest="m_max", type=int, help="Largest multiplicity m")
    p.add_argument("--r-set", dest="r_set", help="Comma-separated ranks for the stability suite")
    p.add_argument("--perturb", action="store_true", help="Perturb every formal side (negative control)")
    p.add_argument("--timing", action="store_true", help="Include wall time in the report")
    p.add_argument("--threads", type=int, help="Worker threads (default: ISCHUR_THREADS or config)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("tensor-act", help="Act with a generator on a tensor basis vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--gen", required=True, help="d_j, dinv_j, e_h, f_h or t")
    p.add_argument("--index", required=True, help="Comma-separated i_1,...,i_r")
    p.add_argument("--via", choices=("closed", "gl", "both"), default="closed")
    p.set_defaults(handler=cmd_tensor_act)

    p = sub.add_parser("table", help="Write all structure constants to a file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", help="Output file (default: <data dir>/<output_dir>/table_n<n>_r<r>.json)")
    p.set_defaults(handler=cmd_table)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table" and not args.quiet:
        describe_data_dir()

    try:
        return args.handler(args)
    except ValueError as e:
        # ISchurError input errors subclass ValueError
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except ISchurError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
