"""The ``bicat`` command.

Every command reads documents, calls one library function and writes a plain
text report to standard output.  Constructed documents go to ``--output``
(or standard output when no file is named).

Exit status: 0 pass or constructed, 1 axiom violation or counterexample,
2 unreadable or ill-formed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import fixtures
from ..adjunctions import Adjunction, check_adjunction, mate_left, mate_right
from ..calculus import boundary, evaluate, from_json
from ..core import generators as gen
from ..core.model import ValidationReport, Violation
from ..core.validate import validate_bicategory
from ..errors import BicatError, IllTyped, MalformedInput, SchemaError, UnknownCell
from ..functors import validate_lax_functor, validate_lax_transformation, validate_modification
from ..quillen import (
    Counterexample,
    check_certificate,
    check_hypotheses,
    check_inc_lax_terminal,
    check_preserves_inc,
    construct_G,
    construct_unit_counit,
    find_inc_lax_terminal,
    whitehead,
)
from ..quillen.theorem_a import build_slices
from ..slice import change_of_slice, lax_slice
from . import schema

PASS, FAIL, INPUT_ERROR = 0, 1, 2

INPUT_ERRORS = (SchemaError, MalformedInput, UnknownCell, IllTyped, OSError, UnicodeDecodeError)

MONOIDS = {"trivial": gen.TRIVIAL, "z2": gen.Z2, "z3": gen.Z3, "join2": gen.JOIN2}

BICATEGORIES = {"one": gen.one, "bz2": gen.bz2, "p2": gen.p2}


class Usage(Exception):
    """Bad combination of arguments or document kinds."""


# -- io --------------------------------------------------------------------------


def read(path, *kinds):
    text = Path(path).read_text(encoding="utf-8")
    kind, value = schema.parse(text)
    if kinds and kind not in kinds:
        raise Usage(f"{path}: expected a {' or '.join(kinds)} document, got {kind}")
    return kind, value


def emit(args, kind, value):
    text = schema.serialize(kind, value)
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def report(args, rep, title):
    """Print ``rep`` as text, write it as a document if asked, return the exit code."""
    sys.stdout.write(rep.text(title).rstrip("\n") + "\n")
    if getattr(args, "output", None):
        Path(args.output).write_text(schema.dumps("report", schema.report_to_json(rep, title)), encoding="utf-8")
    return PASS if rep.ok else FAIL


def functor_arg(args):
    return read(args.functor, "functor")[1]


def adjunction_arg(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise Usage(f"an adjunction is f,g,eta,eps; got {text!r}")
    return Adjunction(*parts)


# -- commands --------------------------------------------------------------------


def cmd_validate(args):
    kind, value = read(args.file)
    if kind == "bicategory":
        return report(args, validate_bicategory(value), f"bicategory {value.name or args.file}")
    if kind == "functor":
        return report(args, validate_lax_functor(value), f"lax functor {value.name or args.file}")
    if kind == "transformation":
        return report(args, validate_lax_transformation(value), f"lax transformation {value.name or args.file}")
    if kind == "modification":
        return report(args, validate_modification(value), f"modification {value.name or args.file}")
    if kind == "certificate":
        return report(args, check_certificate(value), "certificate")
    if kind == "terminal-data":
        if not args.functor:
            raise Usage("validating terminal data needs --functor")
        F = functor_arg(args)
        slices = build_slices(F)
        found = []
        for x in sorted(value):
            if x not in slices:
                raise Usage(f"{x!r} is not an object of the functor's target")
            rep = check_inc_lax_terminal(slices[x].bicat, value[x])
            found.extend(Violation(f"{x}:{v.axiom}", v.witness, v.lhs, v.rhs) for v in rep.violations)
        return report(args, ValidationReport.from_violations(found, objects=sorted(value)), "terminal data")
    return report(args, value, "report")


def cmd_gen(args):
    if args.family == "chaotic":
        if args.size is None or args.size < 1:
            raise Usage("gen chaotic needs --size N with N >= 1")
        emit(args, "bicategory", gen.chaotic(args.size))
    elif args.family == "deloop":
        emit(args, "bicategory", gen.deloop_monoid(MONOIDS[args.monoid]))
    elif args.family == "two-group":
        emit(args, "bicategory", gen.two_group_z2(args.cocycle == "nontrivial"))
    else:
        if args.name in BICATEGORIES:
            emit(args, "bicategory", BICATEGORIES[args.name]())
        elif args.name in fixtures.FUNCTORS:
            emit(args, "functor", fixtures.FUNCTORS[args.name]())
        else:
            raise Usage(f"unknown fixture {args.name!r}; choose from {', '.join(fixture_names())}")
    return PASS


def fixture_names():
    return sorted(BICATEGORIES) + sorted(fixtures.FUNCTORS)


def cmd_slice(args):
    F = functor_arg(args)
    emit(args, "bicategory", lax_slice(F, args.object).bicat)
    return PASS


def cmd_change_of_slice(args):
    F = functor_arg(args)
    if args.one_cell not in F.tgt.one_cells:
        raise UnknownCell(args.one_cell, "1-cell")
    emit(args, "functor", change_of_slice(F, args.one_cell))
    return PASS


def cmd_terminal(args):
    F = functor_arg(args)
    objects = [args.object] if args.object else F.tgt.sorted_objects()
    found, data = [], {}
    for x in objects:
        d = find_inc_lax_terminal(lax_slice(F, x).bicat)
        if d is None:
            found.append(Violation("no-inc-lax-terminal", (x,)))
        else:
            data[x] = d
            if args.output:
                sys.stdout.write(f"slice over {x}: terminal {d.terminal} (candidates {', '.join(d.candidates)})\n")
    if found:
        return report(args, ValidationReport.from_violations(found), "inc-lax terminal objects")
    emit(args, "terminal-data", data)
    return PASS


def _terminal_for(F, args, slices):
    if args.terminal_data:
        terminal = read(args.terminal_data, "terminal-data")[1]
        missing = sorted(set(slices) - set(terminal))
        if missing:
            raise Usage(f"terminal data is missing objects {', '.join(missing)}")
        return terminal, []
    terminal, found = {}, []
    for x, S in slices.items():
        d = find_inc_lax_terminal(S.bicat)
        if d is None:
            found.append(Violation("no-inc-lax-terminal", (x,)))
        terminal[x] = d
    return terminal, found


def cmd_preserves_inc(args):
    F = functor_arg(args)
    C = F.tgt
    if args.one_cell not in C.one_cells:
        raise UnknownCell(args.one_cell, "1-cell")
    x, y = C.one_cells[args.one_cell]
    slices = {x: lax_slice(F, x), y: lax_slice(F, y)}
    terminal, found = _terminal_for(F, args, slices)
    if found:
        return report(args, ValidationReport.from_violations(found), f"preserves-inc {args.one_cell}")
    Fu = change_of_slice(F, args.one_cell, slices[x], slices[y])
    return report(args, check_preserves_inc(Fu, terminal[x], terminal[y]), f"preserves-inc {args.one_cell}")


def cmd_quillen_a(args):
    F = functor_arg(args)
    rep = validate_lax_functor(F)
    if not rep.ok:
        return report(args, rep, "quillen-a: F")
    slices = build_slices(F)
    terminal, found = _terminal_for(F, args, slices)
    if found:
        return report(args, ValidationReport.from_violations(found), "quillen-a: hypotheses")
    reports = check_hypotheses(F, slices, terminal)
    found = [Violation(f"{k}:{v.axiom}", v.witness, v.lhs, v.rhs) for k, r in reports.items() for v in r.violations]
    if found:
        return report(args, ValidationReport.from_violations(found), "quillen-a: hypotheses")
    G = construct_G(F, slices, terminal)
    eta, eps = construct_unit_counit(F, G, slices, terminal)
    parts = {"G": validate_lax_functor(G), "eta": validate_lax_transformation(eta), "eps": validate_lax_transformation(eps)}
    found = [Violation(f"{k}:{v.axiom}", v.witness, v.lhs, v.rhs) for k, r in parts.items() for v in r.violations]
    info = {
        "G.classification": parts["G"].info.get("classification"),
        "eta.strong": parts["eta"].info.get("strong"),
        "eps.strong": parts["eps"].info.get("strong"),
    }
    if args.save_dir:
        out = Path(args.save_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "G.json").write_text(schema.serialize("functor", G), encoding="utf-8")
        (out / "eta.json").write_text(schema.serialize("transformation", eta), encoding="utf-8")
        (out / "eps.json").write_text(schema.serialize("transformation", eps), encoding="utf-8")
        (out / "terminal.json").write_text(schema.serialize("terminal-data", terminal), encoding="utf-8")
    return report(args, ValidationReport.from_violations(found, **info), "quillen-a")


def cmd_whitehead(args):
    F = read(args.file, "functor")[1]
    result = whitehead(F)
    if isinstance(result, Counterexample):
        sys.stdout.write(result.text())
        rep = ValidationReport.from_violations(
            [Violation(result.condition, result.witness)], detail=result.detail
        )
        if args.output:
            Path(args.output).write_text(
                schema.dumps("report", schema.report_to_json(rep, "whitehead counterexample")), encoding="utf-8"
            )
        return FAIL
    sys.stdout.write("whitehead: biequivalence certificate constructed\n")
    for key in sorted(result.evidence):
        sys.stdout.write(f"  {key}: {result.evidence[key]}\n")
    if args.output:
        emit(args, "certificate", result)
    return PASS


def cmd_check_cert(args):
    cert = read(args.file, "certificate")[1]
    return report(args, check_certificate(cert), "certificate")


def _bicategory_arg(args):
    return read(args.bicategory, "bicategory")[1]


def cmd_adjunction_check(args):
    B = _bicategory_arg(args)
    adj = Adjunction(args.f, args.g, args.eta, args.eps)
    for cell, table in ((adj.f, B.one_cells), (adj.g, B.one_cells), (adj.eta, B.two_cells), (adj.eps, B.two_cells)):
        if cell not in table:
            raise UnknownCell(cell, "cell")
    return report(args, check_adjunction(B, adj), f"adjunction ({adj.f}, {adj.g})")


def cmd_mate(args):
    B = _bicategory_arg(args)
    adj0, adj1 = adjunction_arg(args.first), adjunction_arg(args.second)
    for adj in (adj0, adj1):
        rep = check_adjunction(B, adj)
        if not rep.ok:
            return report(args, rep, f"adjunction ({adj.f}, {adj.g})")
    if args.cell not in B.two_cells:
        raise UnknownCell(args.cell, "2-cell")
    op = mate_right if args.direction == "right" else mate_left
    result = op(B, adj0, adj1, args.a, args.b, args.cell)
    s, t = B.boundary(result)
    sys.stdout.write(f"{result}: {s} => {t}\n")
    return PASS


def cmd_eval(args):
    import json

    B = _bicategory_arg(args)
    try:
        data = json.loads(args.expr)
    except json.JSONDecodeError as exc:
        raise SchemaError(["expr"], f"not JSON: {exc.msg}") from None
    e = from_json(data)
    s, t = boundary(B, e)
    sys.stdout.write(f"{evaluate(B, e)}: {s} => {t}\n")
    return PASS


# -- parser ----------------------------------------------------------------------


def _output(p):
    p.add_argument("-o", "--output", help="write the resulting document to this file")


def build_parser():
    parser = argparse.ArgumentParser(prog="bicat", description="Finite bicategories: validators and constructions.", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check every axiom of a document")
    p.add_argument("file")
    p.add_argument("--functor", help="the functor whose slices terminal data refers to")
    _output(p)

    p = add("gen", cmd_gen, "generate a fixture document")
    p.add_argument("family", choices=["chaotic", "deloop", "two-group", "fixture"])
    p.add_argument("--size", type=int, help="number of objects for chaotic")
    p.add_argument("--monoid", choices=sorted(MONOIDS), default="z2")
    p.add_argument("--cocycle", choices=["trivial", "nontrivial"], default="nontrivial")
    p.add_argument("--name", help=f"fixture name: {', '.join(fixture_names())}")
    _output(p)

    p = add("slice", cmd_slice, "build the lax slice of a functor over an object")
    p.add_argument("--functor", required=True)
    p.add_argument("--object", required=True)
    _output(p)

    p = add("change-of-slice", cmd_change_of_slice, "the strict functor between slices induced by a 1-cell")
    p.add_argument("--functor", required=True)
    p.add_argument("--one-cell", required=True)
    _output(p)

    p = add("terminal", cmd_terminal, "find inc-lax terminal objects of slices")
    p.add_argument("--functor", required=True)
    p.add_argument("--object")
    _output(p)

    p = add("preserves-inc", cmd_preserves_inc, "check that change of slice preserves initial components")
    p.add_argument("--functor", required=True)
    p.add_argument("--one-cell", required=True)
    p.add_argument("--terminal-data")
    _output(p)

    p = add("quillen-a", cmd_quillen_a, "construct G, eta and eps from inc-lax terminal slices")
    p.add_argument("--functor", required=True)
    p.add_argument("--terminal-data")
    p.add_argument("--save-dir", help="write G, eta, eps and the terminal data here")
    _output(p)

    p = add("whitehead", cmd_whitehead, "certify a pseudofunctor as a biequivalence or find a counterexample")
    p.add_argument("file")
    _output(p)

    p = add("check-cert", cmd_check_cert, "independently re-check a biequivalence certificate")
    p.add_argument("file")
    _output(p)

    p = add("adjunction-check", cmd_adjunction_check, "check the triangle identities")
    p.add_argument("--bicategory", required=True)
    for flag in ("--f", "--g", "--eta", "--eps"):
        p.add_argument(flag, required=True)
    _output(p)

    p = add("mate", cmd_mate, "transport a 2-cell along two adjunctions")
    p.add_argument("--bicategory", required=True)
    p.add_argument("--first", required=True, help="f0,g0,eta0,eps0")
    p.add_argument("--second", required=True, help="f1,g1,eta1,eps1")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cell", required=True)
    p.add_argument("--direction", choices=["right", "left"], default="right")

    p = add("eval", cmd_eval, "evaluate a 2-cell expression")
    p.add_argument("--bicategory", required=True)
    p.add_argument("--expr", required=True, help='nested-list JSON, e.g. ["id2", "g"]')
    return parser


def run(argv=None):
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Usage, *INPUT_ERRORS) as exc:
        sys.stderr.write(f"bicat: error: {exc}\n")
        return INPUT_ERROR
    except BicatError as exc:
        sys.stderr.write(f"bicat: {type(exc).__name__}: {exc}\n")
        return FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
