"""Command-line interface.

Exit codes: 0 success or a true verdict, 1 usage/parse/domain error, 2 a
negative verdict, 3 a cross-check disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from collections.abc import Sequence

from . import io
from .chowring import evaluate_top, parse_class
from .complexes import alexander_dual, contract, enumerate_asd, flip, is_asd, is_pre_asd, require_asd
from .errors import ASDError, Defect, ParseError
from .intersection import (
    METHODS,
    check_monomial,
    cross_check,
    intersection_number,
    intersection_table,
)
from .invariants import betti_numbers, euler_characteristic, poincare_polynomial
from .threshold import LengthVector, find_realization, is_generic

OK, ERROR, NEGATIVE, DISAGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _emit_csv(rows: list[list]) -> None:
    buf = _io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    sys.stdout.write(buf.getvalue())


def cmd_check(args) -> int:
    obj = io.load(args.path)
    if args.what == "generic":
        if not isinstance(obj, LengthVector):
            raise ParseError("--what generic needs a length-vector file")
        verdict = is_generic(obj)
    else:
        K = io.load_complex(args.path)
        verdict = is_asd(K) if args.what == "asd" else is_pre_asd(K)
    print("true" if verdict else "false")
    return OK if verdict else NEGATIVE


def cmd_dual(args) -> int:
    _emit_json(io.complex_to_dict(alexander_dual(io.load_complex(args.path))))
    return OK


def cmd_flip(args) -> int:
    K = io.load_complex(args.path)
    _emit_json(io.complex_to_dict(flip(K, _ints(args.facet))))
    return OK


def cmd_contract(args) -> int:
    K = io.load_complex(args.path)
    _emit_json(io.complex_to_dict(contract(K, _ints(args.face))))
    return OK


def cmd_enumerate(args) -> int:
    found = enumerate_asd(args.n, args.mode)
    _emit_json({"n": args.n, "mode": args.mode, "count": len(found),
                "complexes": [io.complex_to_dict(K) for K in found]})
    return OK


def cmd_realize(args) -> int:
    res = find_realization(io.load_complex(args.path))
    if res.realizable:
        _emit_json({"realizable": True, **io.lengths_to_dict(res.lengths)})
        return OK
    _emit_json({"realizable": False,
                "certificate": [[label, str(w)] for label, w in res.certificate]})
    return NEGATIVE


def cmd_poincare(args) -> int:
    P = poincare_polynomial(io.load_complex(args.path))
    _emit_json({"coeffs": list(P.coeffs), "polynomial": str(P)})
    return OK


def cmd_betti(args) -> int:
    K = io.load_complex(args.path)
    _emit_json({"betti": betti_numbers(K), "euler": euler_characteristic(K)})
    return OK


def _all_row(K, d) -> tuple[list, bool]:
    vals = [intersection_number(K, d, m) for m in METHODS]
    agree = len(set(vals)) == 1
    return [*d, *vals, "agree" if agree else "disagree"], agree


def cmd_psi(args) -> int:
    K = io.load_complex(args.path)
    require_asd(K)
    d = check_monomial(K, _ints(args.d))
    header = [f"d{i}" for i in range(1, K.n + 1)]
    if args.method == "all":
        row, agree = _all_row(K, d)
        _emit_csv([header + [*METHODS, "agreement"], row])
        return OK if agree else DISAGREE
    _emit_csv([header + ["value", "method"], [*d, intersection_number(K, d, args.method), args.method]])
    return OK


def cmd_psitable(args) -> int:
    K = io.load_complex(args.path)
    table = intersection_table(K, args.method)
    header = [f"d{i}" for i in range(1, K.n + 1)]
    _emit_csv([header + ["value", "method"]] + [[*d, v, args.method] for d, v in table.items()])
    return OK


def cmd_crosscheck(args) -> int:
    K = io.load_complex(args.path)
    report = cross_check(K)
    header = [f"d{i}" for i in range(1, K.n + 1)]
    rows = [header + [*METHODS, "agreement"]]
    for d, *vals in report.rows:
        rows.append([*d, *vals, "agree" if len(set(vals)) == 1 else "disagree"])
    _emit_csv(rows)
    return OK if report.ok else DISAGREE


def cmd_chow_eval(args) -> int:
    K = io.load_complex(args.path)
    require_asd(K)
    x = parse_class(K, args.expression)
    top = x.part(x.top)
    _emit_json({"class": str(x), "degrees": x.degrees(),
                "top": evaluate_top(top) if top.terms or x.is_zero() else None})
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asdcomp", description="Computations with Alexander self-dual complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, path=True):
        sp = sub.add_parser(name, help=help_)
        if path:
            sp.add_argument("path", help="complex or length-vector JSON file")
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "test ASD / preASD / genericity").add_argument(
        "--what", choices=["asd", "preasd", "generic"], default="asd")
    add("dual", cmd_dual, "Alexander dual")
    add("flip", cmd_flip, "flip a facet").add_argument("--facet", required=True, help="e.g. 1,2")
    add("contract", cmd_contract, "contract a face").add_argument("--face", required=True, help="e.g. 1,2")
    sp = add("enumerate", cmd_enumerate, "all ASD complexes on n vertices", path=False)
    sp.add_argument("n", type=int)
    sp.add_argument("--mode", choices=["labeled", "up_to_relabeling"], default="labeled")
    add("realize", cmd_realize, "realize as a threshold complex")
    add("poincare", cmd_poincare, "Poincare polynomial")
    add("betti", cmd_betti, "Betti numbers and Euler characteristic")
    sp = add("psi", cmd_psi, "one psi intersection number (CSV)")
    sp.add_argument("--d", required=True, help="exponents, e.g. 1,0,0,0")
    sp.add_argument("--method", choices=[*METHODS, "all"], default="recursion")
    add("psitable", cmd_psitable, "all top psi intersection numbers (CSV)").add_argument(
        "--method", choices=list(METHODS), default="recursion")
    add("chow-eval", cmd_chow_eval, "evaluate a cycle expression").add_argument(
        "expression", help="e.g. '(1 2)(4 5) + 3*(2 3 4)'")
    add("crosscheck", cmd_crosscheck, "three-way psi cross-check (CSV)")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ASDError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR
    except Defect as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
