"""coring-lab: verify corings, comodules and entwinings given by structure constants.

Every verb reads its object with ``--in`` (a JSON file, or ``catalog:<id>``
for a built-in example) and writes a JSON report to ``--out`` or stdout.
Exit status: 0 when every check passes, 1 when a check fails or an expected
verdict mismatches, 2 on unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .algebra import field_extension, separability_idempotent
from .comodule import check_bicomodule, check_comodule, round_trip_report
from .coring import (base_change, check_coring, opposite_coring,
                     sweedler_coring, tensor_coring)
from .cosep import coseparability
from .duals import LEFT, RIGHT, dual_radical, dual_ring, is_semisimple_coring, psi
from .entwine import check_entwining, entwined_coring, tensor_entwining
from .serialize import InputError, dumps, load
from .theorem import DEFAULT_EXTENSIONS, main_theorem_report


def read(spec: str, kind: str):
    """Load an object from a file or from ``catalog:<id>``."""
    if spec.startswith("catalog:"):
        ident = spec.split(":", 1)[1]
        if kind == "algebra" and ident in catalog.ALGEBRAS:
            return catalog.ALGEBRAS[ident]()
        try:
            e = catalog.entry(ident)
        except KeyError:
            raise InputError(f"unknown catalog entry {ident!r}") from None
        if e.kind != kind:
            raise InputError(f"catalog entry {ident!r} has kind {e.kind}, expected {kind}")
        return e.build()
    return load(spec, kind)


def parse_poly(text: str) -> list:
    """Coefficients, highest degree first, as "1,0,-2"."""
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse polynomial coefficients {text!r}") from None


def extension(text: str, assume_irreducible: bool = False):
    try:
        return field_extension(parse_poly(text), assume_irreducible=assume_irreducible)
    except ValueError as err:
        raise InputError(f"--ext {text}: {err}") from None


def _bool_arg(text: str) -> bool:
    if text.lower() in ("true", "t", "1", "yes"):
        return True
    if text.lower() in ("false", "f", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


# -- verbs ---------------------------------------------------------------------

def cmd_check(args):
    c = read(args.input, "coring")
    rep = check_coring(c)
    return {"coring": c.name, "dim": c.dim, "report": rep.to_json()}, rep.ok


def _expect(out: dict, key: str, value: bool, expected):
    out[key] = value
    if expected is None:
        return True
    out["expected"] = expected
    return value == expected


def cmd_cosep(args):
    c = read(args.input, "coring")
    w = coseparability(c)
    out = {"coring": c.name}
    ok = _expect(out, "coseparable", w is not None, args.expect)
    if w is not None:
        out["witness"] = w.to_json()
    return out, ok


def cmd_semisimple(args):
    c = read(args.input, "coring")
    v = is_semisimple_coring(c)
    out = {"coring": c.name, "details": v.to_json()}
    return out, _expect(out, "semisimple", v.semisimple, args.expect)


def cmd_dual(args):
    c = read(args.input, "coring")
    side = LEFT if args.side == "left" else RIGHT
    ring = dual_ring(c, side)
    sep = separability_idempotent(ring.algebra)
    out = {"coring": c.name, "side": args.side, "algebra": ring.algebra.to_json(),
           "embedding": ring.embedding.to_json(), "radical_dim": dual_radical(c, side).dim,
           "separability_idempotent": None if sep is None else sep.to_json(),
           "report": ring.report.to_json()}
    return out, ring.report.ok


def _constructed(c):
    rep = check_coring(c)
    return {"coring": c.to_json(), "report": rep.to_json()}, rep.ok


def cmd_tensor(args):
    return _constructed(tensor_coring(read(args.input, "coring"), read(args.other, "coring")))


def cmd_opposite(args):
    return _constructed(opposite_coring(read(args.input, "coring")))


def cmd_basechange(args):
    c = read(args.input, "coring")
    kk = extension(args.ext, args.assume_irreducible)
    out, ok = _constructed(base_change(c, kk))
    cert = psi(c, kk)
    out["psi"] = cert.to_json()
    return out, ok and cert.report.ok


def cmd_sweedler(args):
    a = read(args.input, "algebra")
    sub = [list(a.unit)]
    if args.sub:
        try:
            sub = [[Fraction(str(x)) for x in v] for v in json.loads(args.sub)]
            return _constructed(sweedler_coring(a, sub))
        except (json.JSONDecodeError, TypeError, ValueError) as err:
            raise InputError(f"--sub: {err}") from None
    return _constructed(sweedler_coring(a, sub))


def cmd_theorem(args):
    c = read(args.input, "coring")
    exts = [extension(p) for p in (args.ext or [])] or None
    tests = [read(p, "coring") for p in (args.with_ or [])] or None
    rep = main_theorem_report(c, exts, tests)
    out = rep.to_json(timings=args.timings)
    if not rep.hypothesis:
        out["status"] = "not applicable: " + rep.hypothesis_note
    w = coseparability(c)
    sep = separability_idempotent(dual_ring(c, RIGHT).algebra)
    out["witnesses"] = {
        "cointegral": None if w is None else w.to_json(),
        "right_dual_separability_idempotent": None if sep is None else sep.to_json(),
    }
    return out, rep.consistent


def cmd_check_comodule(args):
    m = read(args.input, "comodule")
    rep = check_comodule(m)
    return {"comodule": m.name, "side": m.side, "report": rep.to_json()}, rep.ok


def cmd_check_bicomodule(args):
    m = read(args.input, "bicomodule")
    rep = check_bicomodule(m)
    return {"bicomodule": m.name, "report": rep.to_json()}, rep.ok


def cmd_bicomod_equiv(args):
    m = read(args.input, "bicomodule")
    rep = round_trip_report(m)
    return {"bicomodule": m.name, "report": rep.to_json()}, rep.ok


def cmd_entwine(args):
    e = read(args.input, "entwining")
    if args.action == "check":
        rep = check_entwining(e)
        return {"entwining": e.name, "report": rep.to_json()}, rep.ok
    if args.action == "coring":
        rep = check_entwining(e)
        if not rep.ok:
            return {"entwining": e.name, "report": rep.to_json()}, False
        return _constructed(entwined_coring(e))
    if not args.other:
        raise InputError("entwine tensor needs --with")
    result = tensor_entwining(e, read(args.other, "entwining"))
    return result.to_json(), result.report.ok


def cmd_catalog(args):
    if args.list:
        return {"entries": [e.to_json() for e in catalog.entries(pattern=args.filter)]}, True
    out = catalog.run_catalog(args.filter, timings=args.timings)
    return out, out["ok"]


def cmd_export(args):
    if args.id in catalog.ALGEBRAS:
        return catalog.ALGEBRAS[args.id]().to_json(), True
    try:
        e = catalog.entry(args.id)
    except KeyError:
        raise InputError(f"unknown catalog entry {args.id!r}") from None
    return e.build().to_json(), True


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coring-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, needs_input=True):
        sp = sub.add_parser(name, help=help)
        if needs_input:
            sp.add_argument("--in", dest="input", required=True,
                            help="JSON file, or catalog:<id> for a built-in object")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.set_defaults(fn=fn)
        return sp

    verb("check", cmd_check, "run the coring axiom checker")
    for name, fn, what in (("cosep", cmd_cosep, "coseparability with γ and π witnesses"),
                           ("semisimple", cmd_semisimple, "semisimplicity decision")):
        verb(name, fn, what).add_argument("--expect", type=_bool_arg,
                                          help="fail unless the verdict equals this")
    verb("dual", cmd_dual, "structure constants of a dual ring").add_argument(
        "--side", choices=["left", "right"], default="right")
    verb("tensor", cmd_tensor, "tensor product coring C ⊗_k D").add_argument(
        "--with", dest="other", required=True, help="the second coring")
    verb("opposite", cmd_opposite, "opposite coring")
    sp = verb("basechange", cmd_basechange, "base change to K = Q[x]/(minpoly) with Ψ certificate")
    sp.add_argument("--ext", required=True, help="minimal polynomial, e.g. 1,0,1 for x^2+1")
    sp.add_argument("--assume-irreducible", action="store_true",
                    help="skip the irreducibility check for degree above 4")
    verb("sweedler", cmd_sweedler, "Sweedler coring A ⊗_B A (--in is an algebra)").add_argument(
        "--sub", help="JSON list of vectors spanning B (default: the scalars)")
    sp = verb("theorem", cmd_theorem, "evaluate conditions (i)-(iv) and the C* cross-check")
    sp.add_argument("--ext", action="append",
                    help="extension minimal polynomial (repeatable; default "
                         + "; ".join(",".join(map(str, e)) for e in DEFAULT_EXTENSIONS) + ")")
    sp.add_argument("--with", dest="with_", action="append",
                    help="semisimple test coring (repeatable; default trivial, comatrix(2), grouplike(2))")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings")
    verb("check-comodule", cmd_check_comodule, "comodule axiom checker")
    verb("check-bicomodule", cmd_check_bicomodule, "bicomodule axiom checker")
    verb("bicomod-equiv", cmd_bicomod_equiv, "bicomodule <-> tensor-coring comodule round trip")
    sp = verb("entwine", cmd_entwine, "entwining structures")
    sp.add_argument("action", choices=["check", "coring", "tensor"])
    sp.add_argument("--with", dest="other", help="second entwining for 'tensor'")
    sp = verb("catalog", cmd_catalog, "run the built-in catalog", needs_input=False)
    sp.add_argument("--filter", help="glob on entry ids, e.g. 'trivial-*'")
    sp.add_argument("--list", action="store_true", help="list entries and expected verdicts only")
    sp.add_argument("--timings", action="store_true", help="include per-entry timings")
    verb("export", cmd_export, "print a catalog object (or named algebra) as JSON", needs_input=False).add_argument("id")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, ok = args.fn(args)
    except InputError as err:
        print(f"coring-lab: {err}", file=sys.stderr)
        return 2
    text = dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
