"""Command-line front end: ``coserial classify|localize|arq|verify|gen``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import CoserialError, NotSerialInput
from .quiver import ValuedQuiver, emit_dsl, parse_quiver

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _read_quiver(path: str) -> ValuedQuiver:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_quiver(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_classify(args) -> int:
    from .classify import classify

    q = _read_quiver(args.file)
    report = classify(q, coalgebra_finite_dimensional=args.finite_dimensional)
    sys.stdout.write(_dump(report.to_json()))
    serial = all(c.shape.is_serial for c in report.components)
    return EXIT_OK if serial else EXIT_NEGATIVE


def cmd_localize(args) -> int:
    from .localize import localize_quiver

    q = _read_quiver(args.file)
    keep = [k.strip() for k in args.keep.split(",") if k.strip()]
    res = localize_quiver(q, keep)
    evidence = _dump(res.to_json())
    if res.is_finite:
        sys.stdout.write(emit_dsl(res.quiver))
    else:
        pairs = ", ".join(f"{x}->{z}" for x, z in res.infinite_label)
        sys.stderr.write(f"infinite label for {pairs}\n")
    if args.evidence:
        _write(args.evidence, evidence)
    else:
        sys.stdout.write("---\n" + evidence)
    return EXIT_OK if res.is_finite else EXIT_NEGATIVE


def cmd_arq(args) -> int:
    from .arquiver import ar_sequence, build_ar_quiver, verify_almost_split

    q = _read_quiver(args.file)
    try:
        arq = build_ar_quiver(q, args.depth)
    except NotSerialInput as exc:
        witness = exc.witness.to_json() if exc.witness is not None else None
        sys.stderr.write(f"not serial: {exc}\n")
        sys.stderr.write(_dump({"witness": witness}))
        return EXIT_NEGATIVE
    data = arq.to_json()
    failed = 0
    if args.verify:
        results = []
        bound = min(args.depth + 1, 6)
        for node in sorted(arq.sequences, key=lambda n: n.sort_key()):
            seq = ar_sequence(q, node, realization=arq.realization)
            v = verify_almost_split(q, seq, pool_dim_bound=bound)
            failed += not v.value
            results.append({"left": node.name, "ok": v.value, "failures": v.extra.get("failures", [])})
        data["verification"] = {"pool_dim_bound": bound, "results": results}
    if args.dot:
        _write(args.dot, arq.to_dot())
    if args.json:
        _write(args.json, _dump(data))
    else:
        sys.stdout.write(_dump(data))
    if args.verify:
        sys.stderr.write(f"verified {len(arq.sequences) - failed}/{len(arq.sequences)} almost split sequences\n")
    return EXIT_NEGATIVE if failed else EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES, run_suite

    if args.suite not in SUITES:
        sys.stderr.write(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}\n")
        return EXIT_ERROR
    results = run_suite(args.suite, args.seed)
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    from .fixtures import fixture_text

    text = fixture_text(args.name, args.size)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coserial", description="Serial coalgebra workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a valued quiver")
    p.add_argument("file", help="quiver DSL file, or - for stdin")
    p.add_argument("--finite-dimensional", action="store_true",
                   help="treat the coalgebra as finite dimensional (affects crown Hom-computability)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("localize", help="localize at a set of kept vertices")
    p.add_argument("file")
    p.add_argument("--keep", required=True, help="comma separated kept vertices")
    p.add_argument("--evidence", metavar="PATH", help="write the JSON evidence here instead of stdout")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("arq", help="build the Auslander-Reiten quiver of a serial quiver")
    p.add_argument("file")
    p.add_argument("--depth", type=int, required=True, help="largest Loewy length to include")
    p.add_argument("--verify", action="store_true", help="verify every almost split sequence")
    p.add_argument("--dot", metavar="OUT", help="write Graphviz DOT here")
    p.add_argument("--json", metavar="OUT", help="write the JSON dump here instead of stdout")
    p.set_defaults(func=cmd_arq)

    p = sub.add_parser("verify", help="run an oracle suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=None, help="fuzz seed (default: $COSERIAL_SEED or 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a fixture quiver in the DSL")
    p.add_argument("name", help="line, crown, two-loop, vee, triangle, window-biinfinite, window-right, window-left")
    p.add_argument("size", nargs="?", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.command == "arq" and args.depth < 1:
        sys.stderr.write("error: --depth must be at least 1\n")
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CoserialError, KeyError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
