"""Command-line front end.

Exit codes: 0 pass, 1 unreadable input, 2 property failure or size cap,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (OminusAlgebra, check_mv_equations, check_supervariety, is_mv_algebra,
                      validate_ominus_algebra)
from .complex import dual_algebra, double_dual_isomorphism
from .constructions import boolean_difference, enumerate_ominus, mv_chain, nm4
from .errors import InternalInvariantBroken, SizeCap, SpaceInvalid
from .io import (ParseError, algebra_document, algebra_dot, document_kind, dumps, loads,
                 parse_algebra, parse_space, space_document, space_dot)
from .order import DistLattice, validate_poset
from .report import Check, Report, merge
from .space import (OminusSpace, check_dual_supervariety, check_expansion_and_unit, check_mv6_dual,
                    extended_dual, is_mv_space, validate_ominus_space)

OK, PARSE, FAIL, INTERNAL = 0, 1, 2, 3

DEMOS = {
    "l3": lambda: mv_chain(3),
    "nm4": nm4,
    "boolean2": lambda: boolean_difference(2),
    "chain2": lambda: mv_chain(2),
}


class Invalid(Exception):
    def __init__(self, report: Report):
        super().__init__(report.title)
        self.report = report


def _read(path: str) -> tuple[dict, str]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text), text


def _load_algebra(doc: dict, text: str) -> OminusAlgebra:
    L, table, name = parse_algebra(doc, text)
    pr = validate_poset(L.poset)
    if not pr.ok:
        raise Invalid(pr)
    report = validate_ominus_algebra(L, table)
    if not report.ok:
        raise Invalid(report)
    return OminusAlgebra(L, table, name, check=False)


def _load_space(doc: dict, text: str, validate: bool = True) -> OminusSpace:
    S = parse_space(doc, text)
    if validate:
        report = validate_ominus_space(S)
        if not report.ok:
            raise Invalid(report)
    return S


def _load(path: str):
    doc, text = _read(path)
    kind = document_kind(doc)
    return (kind, _load_algebra(doc, text) if kind == "algebra" else _load_space(doc, text))


def _emit(args, report: Report, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(text if text is not None else report.format())


# -- subcommands ----------------------------------------------------------------

def cmd_check(args) -> int:
    doc, text = _read(args.path)
    kind = document_kind(doc)
    if kind == "algebra":
        L, table, name = parse_algebra(doc, text)
        pr = validate_poset(L.poset)
        report = pr if not pr.ok else validate_ominus_algebra(L, table)
    else:
        S = parse_space(doc, text)
        report = validate_ominus_space(S)
        if report.ok:
            report = merge("ominus_space", report, check_expansion_and_unit(S), prefix=False)
    _emit(args, report)
    return OK if report.ok else FAIL


def cmd_dualize(args) -> int:
    doc, text = _read(args.path)
    A = _load_algebra(doc, text)
    S = extended_dual(A)
    S.name = f"dual({A.name})" if A.name else ""
    out = dumps(space_document(S))
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return OK


def cmd_mvcheck(args) -> int:
    kind, obj = _load(args.path)
    if kind == "algebra":
        A, S = obj, extended_dual(obj)
    else:
        S, A = obj, dual_algebra(obj)
    eq, sv = check_mv_equations(A), check_supervariety(A)
    dsv = check_dual_supervariety(S, args.associativity)
    mv6 = check_mv6_dual(S)
    dual = Report("dual", tuple(dsv.checks) + tuple(Check("v", c.ok, c.witness, c.detail) for c in mv6))
    alg_mv, _ = is_mv_algebra(A)
    space_mv, _ = is_mv_space(S, args.associativity)
    report = merge("mvcheck", eq, sv, dual)
    report = Report(report.title, report.checks, {"algebra_mv": alg_mv, "space_mv": space_mv})
    _emit(args, report, report.format() + f"\nMV: {'yes' if alg_mv else 'no'} (algebraic) / "
                                          f"{'yes' if space_mv else 'no'} (dual)")
    if alg_mv != space_mv:
        print("error: algebraic and dual verdicts disagree", file=sys.stderr)
        return INTERNAL
    return OK if alg_mv else FAIL


def cmd_roundtrip(args) -> int:
    doc, text = _read(args.path)
    A = _load_algebra(doc, text)
    dd = double_dual_isomorphism(A)
    C = dd.dual.lattice
    rows = [f"  {A.labels[a]} -> {C.labels[dd.mapping[a]]}" for a in range(A.size)]
    _emit(args, dd.report, dd.report.format() + "\nhat:\n" + "\n".join(rows))
    return OK if dd.ok else INTERNAL


def _lattice_spec(spec: str) -> DistLattice:
    kind, _, arg = spec.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise ParseError(f"bad lattice spec {spec!r}; use chain:N or boolean:N") from None
    if kind == "chain" and n >= 1:
        return DistLattice.chain(n)
    if kind == "boolean" and n >= 0:
        return DistLattice.boolean(n)
    raise ParseError(f"bad lattice spec {spec!r}; use chain:N or boolean:N")


def cmd_enumerate(args) -> int:
    L = _lattice_spec(args.lattice)
    count = 0
    for A in enumerate_ominus(L):
        if args.mv_only and not is_mv_algebra(A)[0]:
            continue
        count += 1
        if not args.count_only:
            print(json.dumps(algebra_document(A), ensure_ascii=False))
    if args.count_only:
        print(count)
    return OK


def cmd_export_dot(args) -> int:
    kind, obj = _load(args.path)
    if kind == "algebra":
        if args.what == "dual":
            S = extended_dual(obj)
            S.name = f"dual({obj.name})" if obj.name else "dual"
            text = space_dot(S)
        else:
            text = algebra_dot(obj)
    else:
        text = space_dot(obj) if args.what == "dual" else algebra_dot(dual_algebra(obj))
    sys.stdout.write(text)
    return OK


def cmd_demo(args) -> int:
    if args.name:
        sys.stdout.write(dumps(algebra_document(DEMOS[args.name]())))
        return OK
    for key in ("l3", "nm4"):
        A = DEMOS[key]()
        S = extended_dual(A)
        mv, cert = is_mv_algebra(A)
        print(f"{A.name}: {A.size} elements, dual has {S.size} points, i = {list(S.i)}")
        print(f"  + : {sorted(S.plus.items())}")
        print(f"  * : {sorted(S.star.items())}")
        print(f"  MV: {'yes' if mv else 'no'}" + ("" if mv else f", fails {cert.name} at {cert.witness}"))
        print(f"  double dual: {'ok' if double_dual_isomorphism(A).ok else 'FAILED'}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ominus-duality",
                                description="Finite duality for (-)-algebras and MV membership.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, path=True):
        sp = sub.add_parser(name, help=help_)
        if path:
            sp.add_argument("path", help="algebra or space document (JSON), or - for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "validate an algebra or space document")
    d = add("dualize", cmd_dualize, "emit the extended dual of an algebra")
    d.add_argument("-o", "--out", help="write the space document here")
    m = add("mvcheck", cmd_mvcheck, "decide MV membership equationally and dually")
    m.add_argument("--associativity", choices=["subterms", "literal"], default="subterms")
    add("roundtrip", cmd_roundtrip, "check the double-dual isomorphism")
    e = add("enumerate", cmd_enumerate, "list every (-)-structure on a small lattice", path=False)
    e.add_argument("lattice", help="chain:N or boolean:N")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--mv-only", action="store_true")
    x = add("export-dot", cmd_export_dot, "Hasse diagram in DOT")
    x.add_argument("--what", choices=["algebra", "dual"], default="algebra")
    dm = add("demo", cmd_demo, "print a built-in algebra document or a short tour", path=False)
    dm.add_argument("name", nargs="?", choices=sorted(DEMOS))
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE
    except Invalid as exc:
        _emit(args, exc.report)
        return FAIL
    except (SizeCap, SpaceInvalid) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    except InternalInvariantBroken as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except Exception as exc:  # anything else is a bug in the library
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
