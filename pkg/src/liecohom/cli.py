"""Command-line interface.

Commands: validate, cohomology, quotient, catalog, selftest.  Reports go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 Jacobi violation,
2 not an ideal, 3 parse error or unknown key, 4 dimension cap exceeded,
5 selftest failure.
"""

import argparse
import json
import sys

from .catalog import catalog_entry, catalog_keys, describe
from .ce_complex import DEFAULT_MAX_DIM, cohomology
from .errors import (
    DimensionCapExceeded,
    Error,
    JacobiViolation,
    NotAnIdeal,
    ParseError,
)
from .field_arith import format_scalar
from .lie_core import algebra_from_json, ideal_check, jacobi_check
from .mc_numeric import DEFAULT_STEP, DEFAULT_TOL
from .quotient_pipeline import dense_quotient_cohomology, pipeline_input_from_json
from .selftest import run_selftest

EXIT_OK = 0
EXIT_JACOBI = 1
EXIT_NOT_IDEAL = 2
EXIT_PARSE = 3
EXIT_DIM_CAP = 4
EXIT_SELFTEST = 5


def _fail(message, code):
    print("error: %s" % message, file=sys.stderr)
    return code


def _load_document(path):
    """Read a JSON file holding either an algebra or a pipeline input."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON in %s: %s" % (path, exc)) from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be a JSON object")
    if "algebra" in doc:
        return pipeline_input_from_json(doc)
    return algebra_from_json(doc)


def _vector_text(v):
    return "(%s)" % ", ".join(format_scalar(x) for x in v)


def _print_violations(violations, as_json):
    if as_json:
        payload = {
            "status": "jacobi_violation",
            "violations": [
                {"i": i, "j": j, "k": k, "residual": [format_scalar(x) for x in res]}
                for i, j, k, res in violations
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print("jacobi: FAIL (%d violations)" % len(violations))
        for i, j, k, res in violations:
            print("  triple (%d, %d, %d): residual %s" % (i, j, k, _vector_text(res)))


def _print_witness(witness, as_json):
    i, w, result = witness
    if as_json:
        payload = {
            "status": "not_an_ideal",
            "witness": {
                "i": i,
                "w": [format_scalar(x) for x in w],
                "bracket": [format_scalar(x) for x in result],
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print("ideal: FAIL")
        print("  [e_%d, %s] = %s leaves the subspace" % (i, _vector_text(w), _vector_text(result)))


def cmd_validate(args):
    try:
        parsed = _load_document(args.path)
    except Error as exc:
        return _fail(str(exc), EXIT_PARSE)
    if hasattr(parsed, "algebra"):
        algebra, ideal = parsed.algebra, parsed.ideal
    else:
        algebra, ideal = parsed, None
    violations = jacobi_check(algebra)
    if violations:
        _print_violations(violations, args.json)
        return EXIT_JACOBI
    if ideal is not None:
        witness = ideal_check(algebra, ideal)
        if witness is not None:
            _print_witness(witness, args.json)
            return EXIT_NOT_IDEAL
    if args.json:
        print(json.dumps({"status": "ok", "algebra": algebra.name,
                          "dimension": algebra.dim}))
    else:
        print("algebra: %s" % algebra.name)
        print("dimension: %d" % algebra.dim)
        print("jacobi: ok")
        if ideal is not None:
            print("ideal: ok (dimension %d)" % ideal.size)
    return EXIT_OK


def _format_report_text(report, with_representatives):
    lines = [
        "algebra: %s" % report.algebra,
        "dimension: %d" % report.dim,
        "betti: %s" % " ".join(str(b) for b in report.betti),
        "ranks: %s" % " ".join(str(r) for r in report.ranks),
    ]
    if with_representatives:
        lines.append("representatives:")
        for degree, forms in enumerate(report.representatives):
            for form in forms:
                lines.append("  degree %d: %s" % (degree, form))
    return "\n".join(lines)


def cmd_cohomology(args):
    try:
        parsed = _load_document(args.path)
    except Error as exc:
        return _fail(str(exc), EXIT_PARSE)
    if hasattr(parsed, "algebra"):
        return _fail(
            "document carries an ideal; use the quotient command", EXIT_PARSE
        )
    try:
        report = cohomology(parsed, max_dim=args.max_dim)
    except JacobiViolation as exc:
        _print_violations(exc.violations, args.json)
        return EXIT_JACOBI
    except DimensionCapExceeded as exc:
        return _fail(str(exc), EXIT_DIM_CAP)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(_format_report_text(report, args.representatives))
    return EXIT_OK


def cmd_quotient(args):
    try:
        parsed = _load_document(args.path)
    except Error as exc:
        return _fail(str(exc), EXIT_PARSE)
    if not hasattr(parsed, "algebra"):
        return _fail("document has no ideal; use the cohomology command", EXIT_PARSE)
    try:
        report = dense_quotient_cohomology(
            parsed, check_chain_iso=not args.no_chain_iso, max_dim=args.max_dim
        )
    except JacobiViolation as exc:
        _print_violations(exc.violations, args.json)
        return EXIT_JACOBI
    except NotAnIdeal as exc:
        _print_witness(exc.witness, args.json)
        return EXIT_NOT_IDEAL
    except DimensionCapExceeded as exc:
        return _fail(str(exc), EXIT_DIM_CAP)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print("algebra: %s" % report.algebra)
        print("quotient_dim: %d" % report.quotient_dim)
        print("abelian_quotient: %s" % ("true" if report.abelian_quotient else "false"))
        print("chain_iso: %s" % ("verified" if report.chain_iso_verified else "skipped"))
        print("betti: %s" % " ".join(str(b) for b in report.report.betti))
        print("ranks: %s" % " ".join(str(r) for r in report.report.ranks))
        if args.representatives:
            print("representatives:")
            for degree, forms in enumerate(report.report.representatives):
                for form in forms:
                    print("  degree %d: %s" % (degree, form))
        if report.note:
            print("note: %s" % report.note)
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        if args.json:
            print(json.dumps({"keys": catalog_keys()}, indent=2))
        else:
            for key in catalog_keys():
                print("%s: %s" % (key, describe(key)))
        return EXIT_OK
    try:
        entry = catalog_entry(args.key)
    except ParseError as exc:
        return _fail(str(exc), EXIT_PARSE)
    if args.doc:
        # just the input document, ready to feed back to the other commands
        print(json.dumps(entry.document, indent=2))
        return EXIT_OK
    if args.json:
        print(json.dumps({
            "key": entry.key,
            "note": entry.note,
            "expected_betti": entry.expected_betti,
            "document": entry.document,
        }, indent=2))
    else:
        print("key: %s" % entry.key)
        print("note: %s" % entry.note)
        print("expected betti: %s" % " ".join(str(b) for b in entry.expected_betti))
        print(json.dumps(entry.document, indent=2))
    return EXIT_OK


def cmd_selftest(args):
    ok = run_selftest(seed=args.seed, tol=args.tol, step=args.step)
    return EXIT_OK if ok else EXIT_SELFTEST


def _seed_type(text):
    value = int(text)
    if not (0 <= value < 2**64):
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liecohom",
        description="Exact Lie algebra cohomology and dense-quotient reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a document and check Jacobi/ideal")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="Betti numbers of an algebra document")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--representatives", action="store_true",
                   help="print representative cocycles")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="dimension cap (default %(default)s)")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("quotient", help="dense-subgroup quotient cohomology")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--representatives", action="store_true",
                   help="print representative cocycles")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="dimension cap (default %(default)s)")
    p.add_argument("--no-chain-iso", action="store_true",
                   help="skip the chain-level isomorphism verification")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("catalog", help="list or show built-in examples")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("key", nargs="?",
                   help="catalog key for show (e.g. so3, abelian_5)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--doc", action="store_true",
                   help="print only the input document (pipe to a file and "
                        "feed it back to validate/cohomology/quotient)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("selftest", help="run the built-in property suites")
    p.add_argument("--seed", type=_seed_type, default=0,
                   help="randomness seed (default %(default)s)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help="numeric tolerance (default %(default)s)")
    p.add_argument("--step", type=float, default=DEFAULT_STEP,
                   help="finite-difference step (default %(default)s)")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "show" and args.key is None:
        return _fail("catalog show needs a key", EXIT_PARSE)
    return args.func(args)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
