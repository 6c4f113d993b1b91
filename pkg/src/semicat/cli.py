"""``semicat`` command line.

Exit status: 0 when the property holds or the construction succeeds, 1 when
it fails or nothing is found, 2 on usage, parse or validation errors.
"""

import argparse
import json
import os
import sys

from . import io
from .coident import coidentifier, coidentifier_semiadjunction
from .completion import DEFAULT_CAP, complete_semifunctor, idempotent_completion
from .errors import SemicatError
from .gallery import build, entry_names, failures, run_all
from .kernel import FinCategory
from .morphprop import (
    cc_semi_isomorphism,
    cc_semisplit_epi,
    cc_semisplit_mono,
    fc_semisplit_epi_witness,
    fc_semisplit_mono_witness,
    is_fc_semi_epi,
    is_fc_semi_mono,
)
from .props import (
    PSolution,
    Verdict,
    is_faithful,
    is_full,
    is_naturally_semifull,
    is_semifull,
    is_semifully_faithful,
    is_semiseparable,
    is_separable,
    normalize_mode,
    solve_P,
)
from .semiadj import (
    Semiadjunction,
    compose_semiadjunctions,
    promote_left_semiadjoint,
    promote_right_semiadjoint,
    rafael,
    validate_semiadjunction,
)
from .semifunctor import IdemNatTransf, enumerate_semifunctors, idempotent_nat_transfs, is_functor
from .transform import (
    Transformation,
    enumerate_seminatural,
    find_semi_inverse,
    natural_semisplit_epi_witness,
    natural_semisplit_mono_witness,
)

__all__ = ["main", "build_parser"]

PROPERTIES = {
    "functor": None,
    "faithful": is_faithful,
    "full": is_full,
    "semifull": is_semifull,
    "sff": is_semifully_faithful,
    "semifully-faithful": is_semifully_faithful,
    "separable": is_separable,
    "sep": is_separable,
    "naturally-semifull": is_naturally_semifull,
    "nat-semifull": is_naturally_semifull,
    "semiseparable": is_semiseparable,
    "semisep": is_semiseparable,
}
MORPHISM_PREDICATES = ("semi-mono", "semi-epi", "semisplit-mono", "semisplit-epi", "semi-iso")


class _Failure(Exception):
    """Raised inside a command to exit 2 with a message."""


# evidence as JSON


def jsonable(value):
    if isinstance(value, PSolution):
        return {"mode": value.mode, "assignment": [[x, y, d, v] for (x, y, d), v in value.assignment.items()]}
    if isinstance(value, (Transformation, IdemNatTransf)):
        return {"components": dict(value.components)}
    if isinstance(value, Verdict):
        return {"holds": value.holds, "witness": jsonable(value.witness),
                "counterexample": jsonable(value.counterexample)}
    if isinstance(value, dict):
        if any(isinstance(k, tuple) for k in value):
            return [[*k, jsonable(v)] if isinstance(k, tuple) else [k, jsonable(v)] for k, v in value.items()]
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _emit(args, verdict, human):
    if args.json:
        print(json.dumps(jsonable(verdict), sort_keys=True, ensure_ascii=False))
    else:
        print(human)


def _load(path, kind):
    return io.load(path, kind)


def _one(paths, flag):
    if not paths:
        raise _Failure(f"{flag} is required")
    if len(paths) != 1:
        raise _Failure(f"{flag} takes exactly one file here")
    return paths[0]


def _write(obj, path, refs=None):
    io.dump(obj, path, refs)


# commands


def cmd_validate(args):
    doc = io.load_document(args.file)
    base = "." if args.file == "-" else os.path.dirname(os.path.abspath(args.file))
    obj = io.to_object(doc, base)
    if isinstance(obj, Semiadjunction):
        validate_semiadjunction(obj)
    _emit(args, {"valid": True, "kind": doc.kind}, f"valid {doc.kind}")
    return 0


def cmd_check(args):
    prop = args.property
    if prop == "semi-iso":
        return _check_semi_iso(args)
    if prop == "morphism":
        return _check_morphism(args)
    fun = _load(_one(args.F, "-F"), "semifunctor")
    if prop == "functor":
        verdict = Verdict(is_functor(fun), witness=None,
                          counterexample=None if is_functor(fun) else
                          {"identity_images": {x: fun.id_image(x) for x in fun.source.objects}})
    else:
        verdict = PROPERTIES[prop](fun)
    out = jsonable(verdict)
    out["property"] = prop
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    else:
        print(f"{prop}: {'true' if verdict else 'false'}")
        if verdict.witness is not None:
            print(f"witness: {json.dumps(jsonable(verdict.witness), ensure_ascii=False)}")
        if verdict.counterexample is not None:
            print(f"counterexample: {json.dumps(jsonable(verdict.counterexample), ensure_ascii=False)}")
    return 0 if verdict else 1


def _check_semi_iso(args):
    alpha = _load(_one(args.F, "-F"), "transformation")
    beta = find_semi_inverse(alpha)
    mono = natural_semisplit_mono_witness(alpha)
    epi = natural_semisplit_epi_witness(alpha)
    out = {"property": "semi-iso", "holds": beta is not None, "witness": jsonable(beta),
           "semisplit_mono_witness": jsonable(mono), "semisplit_epi_witness": jsonable(epi)}
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    else:
        print(f"semi-iso: {'true' if beta is not None else 'false'}")
        if beta is not None:
            print(f"semi-inverse: {json.dumps(dict(beta.components), ensure_ascii=False)}")
        print(f"natural semisplit-mono: {'yes' if mono is not None else 'no'}")
        print(f"natural semisplit-epi: {'yes' if epi is not None else 'no'}")
    return 0 if beta is not None else 1


def _check_morphism(args):
    if args.pred is None or args.morphism is None or args.object is None:
        raise _Failure("check morphism needs --pred, --morphism and --object")
    fun = _load(_one(args.F, "-F"), "semifunctor")
    fun2 = _load(args.functor2, "semifunctor") if args.functor2 else fun
    c, f = args.object, args.morphism
    c2 = args.object2 or c
    two = args.functor2 is not None or args.object2 is not None
    pred = args.pred
    if pred == "semi-mono":
        holds, witness = is_fc_semi_mono(fun, c, f), None
    elif pred == "semi-epi":
        holds, witness = is_fc_semi_epi(fun, c, f), None
    elif pred == "semisplit-mono":
        witness = cc_semisplit_mono(fun, c, fun2, c2, f) if two else fc_semisplit_mono_witness(fun, c, f)
        holds = witness is not None
    elif pred == "semisplit-epi":
        witness = cc_semisplit_epi(fun, c, fun2, c2, f) if two else fc_semisplit_epi_witness(fun, c, f)
        holds = witness is not None
    else:
        witness = cc_semi_isomorphism(fun, c, fun2, c2, f)
        holds = witness is not None
    out = {"property": pred, "morphism": f, "holds": holds, "witness": witness}
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    else:
        print(f"{pred}({f}): {'true' if holds else 'false'}" + (f", witness {witness}" if witness else ""))
    return 0 if holds else 1


def cmd_solve_p(args):
    fun = _load(_one(args.F, "-F"), "semifunctor")
    mode = normalize_mode(args.mode)
    sol = solve_P(fun, mode)
    if sol is None:
        _emit(args, {"mode": mode, "holds": False, "witness": None}, f"no P solution in mode {mode}")
        return 1
    if args.output:
        _write(sol, args.output)
        if args.output == "-":
            return 0
    _emit(args, {"mode": mode, "holds": True, "witness": jsonable(sol)},
          f"P solution found in mode {mode} ({len(sol.assignment)} cells)")
    return 0


def cmd_complete(args):
    cap = args.completion_cap
    if args.F:
        result = complete_semifunctor(_load(_one(args.F, "-F"), "semifunctor"), cap)
    else:
        result = idempotent_completion(_load(_one(args.C, "-C"), "category"), cap)
    if args.output:
        _write(result, args.output)
    if args.output != "-":
        cat = result if isinstance(result, FinCategory) else result.source
        print(f"completion: {len(cat.objects)} objects, {len(cat)} morphisms", file=sys.stderr)
    return 0


def cmd_coident(args):
    e = _load(_one(args.E, "-E"), "idem-nat")
    if args.C:
        cat = _load(_one(args.C, "-C"), "category")
        if cat != e.base:
            raise _Failure("the idempotent lives on a different category than -C")
    cat = e.base
    quotient, h, l = coidentifier(cat, e)
    adj = coidentifier_semiadjunction(cat, e)
    out = args.output or "."
    os.makedirs(out, exist_ok=True)
    names = {"base": "category.semicat.json", "quotient": "quotient.semicat.json",
             "H": "H.semicat.json", "L": "L.semicat.json", "adj": "L_adj_H.semicat.json"}
    refs = {cat: names["base"], quotient: names["quotient"]}
    _write(cat, os.path.join(out, names["base"]))
    _write(quotient, os.path.join(out, names["quotient"]))
    _write(h, os.path.join(out, names["H"]), refs)
    _write(l, os.path.join(out, names["L"]), refs)
    _write(adj, os.path.join(out, names["adj"]), refs)
    _emit(args, {"morphisms": len(quotient), "files": sorted(names.values())},
          f"coidentifier with {len(quotient)} morphisms written to {out}")
    return 0


def cmd_adj(args):
    if args.action == "validate":
        adj = _load(_one(args.A, "-A"), "semiadjunction")
        validate_semiadjunction(adj)
        _emit(args, {"valid": True}, "semitriangular identities hold")
        return 0
    if args.action == "compose":
        if len(args.A or []) != 2:
            raise _Failure("adj compose takes -A twice")
        a1, a2 = (_load(p, "semiadjunction") for p in args.A)
        adj = validate_semiadjunction(compose_semiadjunctions(validate_semiadjunction(a1), validate_semiadjunction(a2)))
    else:
        data = _load(_one(args.A, "-A"), "semiadjunction")
        promote = promote_left_semiadjoint if args.side == "left" else promote_right_semiadjoint
        adj = promote(data.F, data.G, data.unit, data.counit)
    if args.output:
        _write(adj, args.output)
    if args.output != "-":
        _emit(args, {"unit": dict(adj.unit), "counit": dict(adj.counit)}, f"{args.action}: semiadjunction built")
    return 0


def cmd_rafael(args):
    adj = validate_semiadjunction(_load(_one(args.A, "-A"), "semiadjunction"))
    mode = normalize_mode(args.mode)
    found = rafael(adj, args.side, mode, threads=args.threads)
    out = {"side": args.side, "mode": mode, "holds": found is not None,
           "witness": None if found is None else {"transformation": jsonable(found.transformation),
                                                  "P": jsonable(found.solution)}}
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    else:
        name = "ν" if args.side == "left" else "γ"
        print(f"rafael {args.side} {mode}: {'found' if found else 'not found'}")
        if found:
            print(f"{name}: {json.dumps(dict(found.transformation.components), ensure_ascii=False)}")
    return 0 if found is not None else 1


def cmd_gallery(args):
    if args.action == "list":
        for name in entry_names():
            entry = build(name, max_set_size=args.max_set_size)
            print(f"{name}: {entry.description}")
        return 0
    names = args.names or entry_names()
    unknown = [n for n in names if n not in entry_names()]
    if unknown:
        raise _Failure(f"unknown gallery entries: {', '.join(unknown)}")
    report = run_all(names, max_set_size=args.max_set_size)
    bad = failures(report)
    if args.json:
        print(json.dumps({name: [{"property": p, "expected": jsonable(e), "actual": jsonable(a), "ok": ok}
                                 for p, e, a, ok in rows] for name, rows in report.items()},
                         sort_keys=True, ensure_ascii=False))
    else:
        for name, rows in report.items():
            for prop, expected, actual, ok in rows:
                print(f"{'PASS' if ok else 'FAIL'}  {name}: {prop}" + ("" if ok else f" (expected {expected!r}, got {actual!r})"))
        total = sum(len(r) for r in report.values())
        print(f"{total - len(bad)}/{total} expectations hold, {len(bad)} failures")
    return 0 if not bad else 1


def cmd_enumerate(args):
    what = args.what
    if what == "seminatural":
        if len(args.F or []) != 2:
            raise _Failure("enumerate seminatural takes -F twice")
        f, g = (_load(p, "semifunctor") for p in args.F)
        found = [dict(t.components) for t in enumerate_seminatural(f, g)]
    elif what == "idem-nat":
        found = [dict(e.components) for e in idempotent_nat_transfs(_load(_one(args.C, "-C"), "category"))]
    else:
        if len(args.C or []) != 2:
            raise _Failure("enumerate semifunctors takes -C twice (source, target)")
        src, tgt = (_load(p, "category") for p in args.C)
        found = [{"object_map": dict(s.obj_map), "morphism_map": dict(s.mor_map)}
                 for s in enumerate_semifunctors(src, tgt, limit=args.limit)]
    if args.json:
        print(json.dumps({"count": len(found), "items": found}, sort_keys=True, ensure_ascii=False))
    else:
        for item in found:
            print(json.dumps(item, sort_keys=True, ensure_ascii=False))
        print(f"{len(found)} found", file=sys.stderr)
    return 0 if found else 1


# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable verdict")
    common.add_argument("--threads", type=int, default=1, help="workers for transformation searches")
    common.add_argument("-F", action="append", metavar="FILE", help="semifunctor or transformation file")
    common.add_argument("-C", action="append", metavar="FILE", help="category file")
    common.add_argument("-A", action="append", metavar="FILE", help="semiadjunction file")
    common.add_argument("-E", action="append", metavar="FILE", help="idempotent natural transformation file")
    common.add_argument("-o", "--output", metavar="PATH", help="output file or directory ('-' for stdout)")
    common.add_argument("--completion-cap", type=int, default=DEFAULT_CAP)

    parser = argparse.ArgumentParser(prog="semicat", description="Finite semifunctors, semiadjunctions and their properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a document")
    p.add_argument("file", help="document path or '-'")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="decide a property")
    p.add_argument("property", choices=sorted(PROPERTIES) + ["semi-iso", "morphism"])
    p.add_argument("--pred", choices=MORPHISM_PREDICATES)
    p.add_argument("--object", help="object C for morphism predicates")
    p.add_argument("--morphism", help="morphism id for morphism predicates")
    p.add_argument("--functor2", metavar="FILE", help="second semifunctor F' (defaults to F)")
    p.add_argument("--object2", help="second object C' (defaults to C)")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("solve-p", parents=[common], help="search the transformation P")
    p.add_argument("--mode", required=True)
    p.set_defaults(run=cmd_solve_p)

    p = sub.add_parser("complete", parents=[common], help="idempotent completion of -C (or F♮ of -F)")
    p.set_defaults(run=cmd_complete)

    p = sub.add_parser("coident", parents=[common], help="coidentifier of -C by -E")
    p.set_defaults(run=cmd_coident)

    p = sub.add_parser("adj", parents=[common], help="semiadjunction tools")
    p.add_argument("action", choices=["validate", "compose", "promote"])
    p.add_argument("--side", choices=["left", "right"], default="right",
                   help="for promote: which semiadjoint the data already is")
    p.set_defaults(run=cmd_adj)

    p = sub.add_parser("rafael", parents=[common], help="unit/counit witness for a property")
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--mode", required=True)
    p.set_defaults(run=cmd_rafael)

    p = sub.add_parser("gallery", parents=[common], help="worked examples")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("names", nargs="*")
    p.add_argument("--max-set-size", type=int, default=2)
    p.set_defaults(run=cmd_gallery)

    p = sub.add_parser("enumerate", parents=[common], help="list transformations or semifunctors")
    p.add_argument("what", choices=["seminatural", "idem-nat", "semifunctors"])
    p.add_argument("--limit", type=int)
    p.set_defaults(run=cmd_enumerate)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(args)
    except (_Failure, SemicatError, KeyError, ValueError, OSError) as err:
        print(f"semicat: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
