"""Command-line front end.

Subcommands: check, colorings, search, invariant, homology, compare,
extend.  All output is a single JSON document with sorted keys, so runs
are byte-for-byte reproducible (including across --jobs settings).

Exit codes: 0 success, 1 validation failure, 2 input error, 3 guard
exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import io as qio
from .algebra import verify_relations
from .braids import braid_or_knot, colorings_of_closure
from .errors import CheckFailed, GuardExceeded, InputError
from .fox import alexander_polynomial
from .homology import (ComplexConfig, cocycle_space, cohomology, is_cocycle_2,
                       is_cocycle_3)
from .invariants import (cocycle_invariant, dynamical_extension,
                         module_invariant, multiset_contained)
from .quandles import verify_axioms


def _emit(doc: dict, out_path: str | None) -> None:
    text = qio.dumps_document(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_word(args):
    if getattr(args, "knot", None):
        return braid_or_knot(args.knot)
    if getattr(args, "braid", None):
        return braid_or_knot(args.braid)
    raise InputError("no braid word or knot name given")


def cmd_check(args) -> int:
    kind = args.kind
    if kind == "quandle":
        # verify the raw table so a failing table is a check failure, not an
        # input error
        if args.target.split(":")[0] in ("dihedral", "alexander", "trivial"):
            table = [list(r) for r in qio.load_quandle(args.target).table]
        else:
            doc = qio._load_json(args.target)
            if "table" not in doc:
                raise InputError("quandle document is missing 'table'")
            table = doc["table"]
        report = verify_axioms(table)
    elif kind == "rep":
        quandle = qio.load_quandle(args.quandle) if args.quandle else None
        rep = qio.load_rep(args.target, quandle=quandle)
        report = verify_relations(rep)
    elif kind == "cocycle":
        quandle = qio.load_quandle(args.quandle) if args.quandle else None
        rep = qio.load_rep(args.rep, quandle=quandle)
        kappa = qio.load_cochain(args.target, rep=rep, degree=args.degree)
        cfg = ComplexConfig(rep=rep, variant=args.variant)
        ok = (is_cocycle_2(cfg, kappa) if kappa.degree == 2
              else is_cocycle_3(cfg, kappa))
        report = type("R", (), {})()
        report.passed = ok
        report.failures = [] if ok else [f"degree-{kappa.degree} cocycle condition fails"]
    else:
        raise InputError(f"unknown check kind {kind!r}")
    _emit({"check": kind, "target": args.target, "passed": report.passed,
           "failures": list(report.failures)}, args.out)
    if not report.passed:
        raise CheckFailed("; ".join(report.failures) or "check failed")
    return 0


def cmd_colorings(args) -> int:
    q = qio.load_quandle(args.quandle)
    w = _load_word(args)
    cols = colorings_of_closure(q, w, guard=args.guard, jobs=args.jobs)
    _emit({"quandle": args.quandle, "braid": list(w.letters),
           "strands": w.strands, "count": len(cols),
           "colorings": [list(c) for c in cols]}, args.out)
    return 0


def cmd_search(args) -> int:
    q = qio.load_quandle(args.quandle)
    rep = qio.load_rep(args.rep, quandle=q, modulus=args.prime)
    if rep.modulus != args.prime:
        raise InputError(
            f"rep modulus {rep.modulus} disagrees with search prime {args.prime}")
    cfg = ComplexConfig(rep=rep, variant=args.variant)
    basis = cocycle_space(cfg, args.degree)
    _emit({"degree": args.degree, "quandle": args.quandle, "rep": args.rep,
           "prime": args.prime, "variant": args.variant,
           "dimension": len(basis),
           "basis": [qio.cochain_to_doc(k) for k in basis]}, args.out)
    return 0


def cmd_invariant(args) -> int:
    w = _load_word(args)
    if args.kind == "alexander":
        poly = alexander_polynomial(w)
        _emit({"invariant": "alexander", "braid": list(w.letters),
               "strands": w.strands,
               "polynomial": {str(e): c for e, c in sorted(poly.items())},
               "display": _poly_str(poly)}, args.out)
        return 0
    q = qio.load_quandle(args.quandle)
    rep = qio.load_rep(args.rep, quandle=q)
    meta = {"quandle": args.quandle, "rep": args.rep,
            "braid": list(w.letters), "strands": w.strands}
    if args.kind == "module":
        inv = module_invariant(q, rep, w, jobs=args.jobs)
        _emit({"invariant": "module", **meta,
               "colorings": len(inv.entries),
               "multiset": [list(e) for e in inv.entries]}, args.out)
        return 0
    if args.kind == "cocycle":
        kappa = qio.load_cochain(args.cocycle, rep=rep)
        inv = cocycle_invariant(q, rep, kappa, w, jobs=args.jobs)
        _emit({"invariant": "cocycle", **meta, "cocycle": args.cocycle,
               "modulus": inv.modulus, "dim": inv.dim,
               "colorings": len(inv.entries),
               "multiset": [list(e) for e in inv.entries]}, args.out)
        return 0
    raise InputError(f"unknown invariant kind {args.kind!r}")


def cmd_homology(args) -> int:
    q = qio.load_quandle(args.quandle)
    rep = qio.load_rep(args.rep, quandle=q)
    cfg = ComplexConfig(rep=rep, variant=args.variant, basepoint=args.basepoint)
    factors = cohomology(cfg, args.degree)
    _emit({"degree": args.degree, "quandle": args.quandle, "rep": args.rep,
           "variant": args.variant, "invariant_factors": factors}, args.out)
    return 0


def cmd_compare(args) -> int:
    from .invariants import InvariantMultiset
    docs = []
    for path in (args.a, args.b):
        doc = qio._load_json(path)
        if "multiset" not in doc:
            raise InputError(f"{path} is not an invariant document")
        docs.append(InvariantMultiset(
            entries=tuple(tuple(e) for e in doc["multiset"]),
            modulus=doc.get("modulus", 0), dim=doc.get("dim", 0)))
    contained = multiset_contained(docs[0], docs[1])
    _emit({"contained": contained, "a": args.a, "b": args.b}, args.out)
    return 0


def cmd_extend(args) -> int:
    q = qio.load_quandle(args.quandle)
    rep = qio.load_rep(args.rep, quandle=q)
    kappa = qio.load_cochain(args.cocycle, rep=rep) if args.cocycle else None
    table, report, quandle = dynamical_extension(q, rep, kappa, guard=args.guard)
    _emit({"quandle": args.quandle, "rep": args.rep,
           "size": len(table), "passed": report.passed,
           "failures": list(report.failures),
           "table": [list(r) for r in table]}, args.out)
    if not report.passed:
        raise CheckFailed("extension does not satisfy the quandle axioms")
    return 0


def _poly_str(poly) -> str:
    if not poly:
        return "0"
    terms = []
    for e in sorted(poly, reverse=True):
        c = poly[e]
        mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if e != 0 and abs(c) == 1:
            coef = "-" if c < 0 else ""
        else:
            coef = str(c)
        terms.append(coef + ("" if e == 0 else mono))
    return " + ".join(terms).replace("+ -", "- ")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandlekit",
        description="quandle cocycle and module invariants of closed braids")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write the output document here")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--guard", type=int, default=10 ** 7)

    p = sub.add_parser("check", help="validate a quandle, rep, or cocycle")
    p.add_argument("kind", choices=["quandle", "rep", "cocycle"])
    p.add_argument("target")
    p.add_argument("--quandle", default=None)
    p.add_argument("--rep", default=None)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--variant", choices=["rack", "quandle"], default="quandle")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("colorings", help="enumerate closure colorings")
    p.add_argument("quandle")
    p.add_argument("braid", help="braid text or knot name")
    common(p)
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("search", help="basis of the cocycle space over Z_p")
    p.add_argument("degree", type=int, choices=[2, 3])
    p.add_argument("quandle")
    p.add_argument("rep")
    p.add_argument("prime", type=int)
    p.add_argument("--variant", choices=["rack", "quandle"], default="quandle")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("invariant", help="compute a link invariant")
    p.add_argument("kind", choices=["cocycle", "module", "alexander"])
    p.add_argument("--quandle", default=None)
    p.add_argument("--rep", default=None)
    p.add_argument("--cocycle", default=None)
    p.add_argument("--knot", default=None)
    p.add_argument("--braid", default=None)
    common(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("homology", help="cohomology invariant factors")
    p.add_argument("degree", type=int)
    p.add_argument("--quandle", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--variant", choices=["rack", "quandle"], default="quandle")
    p.add_argument("--basepoint", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("compare", help="multiset containment of two invariants")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("extend", help="dynamical extension quandle")
    p.add_argument("--quandle", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--cocycle", default=None)
    common(p)
    p.set_defaults(func=cmd_extend)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CheckFailed as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
