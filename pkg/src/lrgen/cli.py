"""Command-line interface: ``lrgen <command> ...``.

Exit codes: 0 success, 1 failed verification or DISAGREE, 2 malformed or
invalid input, 3 a search guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import verify
from .errors import LRGenError, SearchSpaceTooLarge
from .generic import generic_extension
from .oracle import MAX_B, FieldParam, brute_generic_ext, dump_matrices, realize
from .pickets import (
    end_dim, format_object, from_ext_tableau, gamma_hat, hom_dim, hom_leq, parse_object,
)
from .star import StarTrace, fill, star_ext, star_lr1
from .tableau import ExtTableau, LRTableau, empty_rows, ext, parse, render, serialize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class _Output:
    """Collects ``key=value`` lines; ``--json`` emits the same fields as an object."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.fields: dict[str, object] = {}
        self.lines: list[str] = []

    def add(self, key: str, value, text: str | None = None) -> None:
        self.fields[key] = value
        self.lines.append(text if text is not None else f"{key}={value}")

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.fields, sort_keys=False))
        else:
            for line in self.lines:
                print(line)


def _arg(value: str) -> str:
    return sys.stdin.readline().strip() if value == "-" else value


def _drawing(out: _Output, key: str, t, convention: str | None) -> None:
    if convention:
        out.add(f"{key}_drawing", render(t, convention), render(t, convention))


def cmd_star(args) -> int:
    left, right = parse(_arg(args.left)), parse(_arg(args.right))
    out = _Output(args.json)
    trace = StarTrace()
    if isinstance(left, ExtTableau) or isinstance(right, ExtTableau):
        Y, X = ext(left), ext(right)
        T, s = fill(X.tab, Y.free)
        result = star_ext(X, Y, trace)
        if args.trace:
            out.add("fill", serialize(ExtTableau(T, s)))
    else:
        result = star_lr1(right, left, trace)
    out.add("result", serialize(result), serialize(result))
    if args.trace:
        out.add("counters", trace.counters, "counters=" + ",".join(map(str, trace.counters)))
    _drawing(out, "result", result, args.render)
    out.emit()
    return EXIT_OK


def cmd_fill(args) -> int:
    t = parse(_arg(args.tableau))
    tab = t.tab if isinstance(t, ExtTableau) else t
    result, leftover = fill(tab, args.n)
    out = _Output(args.json)
    if args.trace:
        out.add("L", empty_rows(tab), "L=" + ",".join(map(str, empty_rows(tab))))
    out.add("result", serialize(ExtTableau(result, leftover)), serialize(ExtTableau(result, leftover)))
    _drawing(out, "result", result, args.render)
    out.emit()
    return EXIT_OK


def cmd_decompose(args) -> int:
    M = from_ext_tableau(ext(parse(_arg(args.tableau))))
    out = _Output(args.json)
    out.add("object", format_object(M), format_object(M))
    out.emit()
    return EXIT_OK


def cmd_compose(args) -> int:
    t = gamma_hat(parse_object(_arg(args.object)))
    out = _Output(args.json)
    out.add("tableau", serialize(t), serialize(t))
    _drawing(out, "tableau", t, args.render)
    out.emit()
    return EXIT_OK


def _int_result(args, key: str, value: int) -> int:
    out = _Output(args.json)
    out.add(key, value, str(value))
    out.emit()
    return EXIT_OK


def cmd_homdim(args) -> int:
    return _int_result(args, "homdim", hom_dim(parse_object(_arg(args.M)), parse_object(_arg(args.N))))


def cmd_endo(args) -> int:
    return _int_result(args, "end_dim", end_dim(parse_object(_arg(args.M))))


def cmd_homorder(args) -> int:
    verdict = "LEQ" if hom_leq(parse_object(_arg(args.M)), parse_object(_arg(args.N))) else "NOT_LEQ"
    out = _Output(args.json)
    out.add("homorder", verdict, verdict)
    out.emit()
    return EXIT_OK


def cmd_genext(args) -> int:
    U = generic_extension(parse_object(_arg(args.N)), parse_object(_arg(args.M)))
    out = _Output(args.json)
    out.add("generic", format_object(U), format_object(U))
    out.emit()
    return EXIT_OK


def cmd_oracle(args) -> int:
    N, M = parse_object(_arg(args.N)), parse_object(_arg(args.M))
    fp = FieldParam(args.prime)
    out = _Output(args.json)
    if args.dump_matrices:
        for name, X in (("N", N), ("M", M)):
            out.add(f"matrices_{name}", dump_matrices(realize(X, fp)),
                    f"# {name}\n" + dump_matrices(realize(X, fp)))
    brute = brute_generic_ext(N, M, fp, args.max_b, args.method)
    combinatorial = generic_extension(N, M)
    verdict = "AGREE" if brute == combinatorial else "DISAGREE"
    out.add("oracle", format_object(brute))
    out.add("combinatorial", format_object(combinatorial))
    out.add("verdict", verdict, verdict)
    out.emit()
    return EXIT_OK if verdict == "AGREE" else EXIT_FAIL


def cmd_verify(args) -> int:
    fp = FieldParam(args.prime)
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    status = EXIT_OK
    out = _Output(args.json)
    for name in names:
        start = time.perf_counter()
        if name == "table":
            res = verify.table_suite(args.max_b, (args.prime,))
        elif name == "roundtrip":
            res = verify.roundtrip_suite(max_b=args.max_b, max_free=args.max_free, fp=fp)
        elif name == "main":
            res = verify.main_suite(args.max_b, args.max_free, fp)
        elif name == "assoc":
            res = verify.assoc_suite(args.samples, seed=args.seed)
        elif name == "lemmas":
            res = verify.lemmas_suite(args.max_b, fp)
        elif name == "fields":
            res = verify.fields_suite(min(args.max_b, 4), min(args.max_free, 2))
        else:
            res = verify.minimality_suite(min(args.max_b, 4), min(args.max_free, 1), fp)
        elapsed = time.perf_counter() - start
        text = res.summary()
        if args.timing:
            text += f" in {elapsed:.2f}s"
        out.add(name, {"ok": res.ok, "checked": res.checked, "failures": res.failures}, text)
        for failure in res.failures[:10]:
            out.lines.append(f"  {failure}")
        if not res.ok:
            status = EXIT_FAIL
    out.emit()
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrgen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit a JSON object")
        return p

    render_opt = {"choices": ["definition", "paper"], "default": None,
                  "help": "also print an ASCII drawing"}

    p = command("star", cmd_star, "compute LEFT * RIGHT (extended form if either has free=)")
    p.add_argument("left", help="tableau Y (quotient side)")
    p.add_argument("right", help="tableau X (sub side)")
    p.add_argument("--render", **render_opt)
    p.add_argument("--trace", action="store_true", help="print the counters n_0..n_s")

    p = command("fill", cmd_fill, "compute (emptyset, n) * (X, 0)")
    p.add_argument("tableau")
    p.add_argument("n", type=int)
    p.add_argument("--render", **render_opt)
    p.add_argument("--trace", action="store_true", help="print the list of entry-free rows")

    p = command("decompose", cmd_decompose, "tableau -> picket form")
    p.add_argument("tableau")

    p = command("compose", cmd_compose, "picket form -> tableau")
    p.add_argument("object")
    p.add_argument("--render", **render_opt)

    p = command("homdim", cmd_homdim, "dim Hom(M, N)")
    p.add_argument("M")
    p.add_argument("N")

    p = command("endo", cmd_endo, "dim End(M)")
    p.add_argument("M")

    p = command("homorder", cmd_homorder, "is M <=hom N (picket test objects)")
    p.add_argument("M")
    p.add_argument("N")

    p = command("genext", cmd_genext, "generic extension N * M")
    p.add_argument("N", help="quotient")
    p.add_argument("M", help="sub-object")

    p = command("oracle", cmd_oracle, "brute-force N * M over F_p and compare")
    p.add_argument("N")
    p.add_argument("M")
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--max-b", type=int, default=MAX_B)
    p.add_argument("--method", choices=["subobjects", "morphisms"], default="subobjects")
    p.add_argument("--dump-matrices", action="store_true")

    p = command("verify", cmd_verify, "run exhaustive verification suites")
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    p.add_argument("--max-b", type=int, default=5)
    p.add_argument("--max-free", type=int, default=3)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="append elapsed time (not byte-stable)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except LRGenError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
