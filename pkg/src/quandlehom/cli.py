"""Command line front end. Every command prints one JSON document.

Quandles and diagrams are read from files or named with ``@``:
``--quandle @R3``, ``--diagram @borromean``. Exit status is 0 on success,
2 for unreadable or invalid input and 3 when a mathematical precondition
fails (for example a cochain that is not a cocycle).
"""

import argparse
import json
import os
import sys

from . import chains, cocycles, diagram, fixtures, invariants
from . import quandle as qmod
from .cocycles import chi
from .errors import ParseError, QuandleError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _fail({"error": "UsageError", "message": message}, 2)


def _fail(payload, code):
    sys.stderr.write(json.dumps(payload, separators=(",", ":")) + "\n")
    sys.exit(code)


# -- input resolution ---------------------------------------------------------

def _quandle(spec):
    if spec.startswith("@"):
        return qmod.builtin(spec)
    if os.path.exists(spec):
        return qmod.load(spec)
    return qmod.builtin(spec)


def _diagram(spec):
    if spec.startswith("@"):
        return fixtures.diagram(spec[1:])
    if os.path.exists(spec):
        return diagram.load(spec)
    stem = os.path.splitext(os.path.basename(spec))[0]
    if stem in fixtures.NAMES or stem in fixtures._ALIASES:
        return fixtures.diagram(stem)
    raise ParseError(f"no such diagram file or fixture: {spec}")


# cochains that can be named instead of read from a file
NAMED_COCYCLES = {
    "s4_six": lambda: chi(qmod.s4(), (0, 1), (1, 0), (2, 0), (0, 2), (1, 2), (2, 1), modulus=2),
    "t2_refined": invariants.refined_phi,
}


def _cocycle(spec, q):
    if spec.startswith("@"):
        try:
            return NAMED_COCYCLES[spec[1:]]()
        except KeyError:
            raise ParseError(f"unknown cocycle {spec!r}; known: {sorted(NAMED_COCYCLES)}") from None
    return cocycles.load(spec, q)


def _coeff(text):
    t = text.strip()
    if t in ("Z", "0"):
        return 0
    if t.startswith("Z"):
        t = t[1:]
    try:
        m = int(t)
    except ValueError:
        raise ParseError(f"coefficients must be Z or Zm, not {text!r}") from None
    if m < 2:
        raise ParseError("modulus must be at least 2")
    return m


# -- commands -------------------------------------------------------------------

def cmd_quandle(a):
    if a.action == "check":
        q = _quandle(a.file)
        return {"valid": True, "order": q.order, "kei": qmod.is_kei(q)}, f"valid quandle of order {q.order}"
    if a.action == "orbits":
        q = _quandle(a.file)
        blocks = [list(b) for b in qmod.orbits(q).blocks]
        return {"orbits": blocks}, " ".join("{" + ",".join(map(str, b)) + "}" for b in blocks)
    if a.n is None:
        raise ParseError("quandle make needs --n")
    if a.family == "dihedral":
        q = qmod.dihedral(a.n)
    elif a.family == "trivial":
        q = qmod.trivial(a.n)
    else:
        if a.t is None:
            raise ParseError("alexander quandles need --t")
        q = qmod.alexander(a.n, a.t)
    text = "\n".join(" ".join(map(str, row)) for row in q.table)
    return q.to_dict(), text


def cmd_homology(a):
    q = _quandle(a.quandle)
    m = _coeff(a.coeff)
    if a.command == "homology":
        g = chains.homology(q, a.degree, a.sign, a.theory, m)
    else:
        g = chains.cohomology(q, a.degree, a.sign, m, a.theory)
    return g.to_dict(), str(g)


def cmd_cocycles(a):
    q = _quandle(a.quandle)
    m = _coeff(a.coeff)
    basis = cocycles.cocycle_space(q, a.degree, a.sign, m)
    reps = [c for c in basis if cocycles.is_coboundary(c, a.sign) is None]
    h = chains.cohomology(q, a.degree, a.sign, m)
    out = {
        "cohomology": h.to_dict(),
        "basis": [c.to_dict() for c in basis],
        "representatives": [c.to_dict() for c in reps],
    }
    lines = [f"H^{a.degree} = {h}", f"{len(basis)} cocycle generators, {len(reps)} not coboundaries"]
    return out, "\n".join(lines)


def cmd_verify(a):
    q = _quandle(a.quandle)
    report = chains.verify_chain_axioms(q, a.max_degree)
    return {"ok": True, "checked": report}, "all identities hold"


def cmd_diagram(a):
    d = _diagram(a.diagram)
    n = len(d.crossings)
    out = {
        "crossings": n,
        "components": len(d.components),
        "arcs": len(d.arcs),
        "faces": len(diagram.faces(d)),
        "writhe": [d.writhe(c) for c in range(n)],
        "epsilon": diagram.epsilon_signs(d),
        "pd": d.to_pd(),
    }
    return out, "\n".join(f"{k}: {v}" for k, v in out.items())


def cmd_color_count(a):
    n = invariants.col_count(_diagram(a.diagram), _quandle(a.quandle))
    return {"col": n}, str(n)


def cmd_invariant(a):
    q = _quandle(a.quandle)
    g = invariants.phi_invariant(_diagram(a.diagram), q, _cocycle(a.cocycle, q), a.signs)
    return g.to_dict(), str(g)


def cmd_refined(a):
    d = _diagram(a.diagram)
    phi = _cocycle(a.cocycle, qmod.trivial(2)) if a.cocycle else None
    r = invariants.refined_invariant(d, phi)
    return r.to_dict(), str(r)


def cmd_trivial_crossings(a):
    d = _diagram(a.diagram)
    cs = sorted(invariants.trivially_colored(d, _quandle(a.quandle)))
    out = {"crossings": cs, "pd": [list(d.crossings[c]) for c in cs]}
    return out, ", ".join(f"X{list(d.crossings[c])}" for c in cs) or "none"


def cmd_mod3(a):
    r = invariants.mod3_criterion(_diagram(a.diagram))
    return r, f"sign sum {r['sign_sum']}: " + ("predicts" if r["predicts_trivial"] else "no prediction")


def cmd_proper_link(a):
    ok = invariants.proper_link_test(_diagram(a.diagram))
    return {"proper": ok}, "proper" if ok else "not proper"


def build_parser():
    p = _Parser(prog="quandlehom", description="Quandle homology and cocycle invariants of links.")
    p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    p.add_argument("--output", "-o", help="write the result to this file")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("quandle", help="check, build or split quandles")
    s.add_argument("action", choices=["check", "make", "orbits"])
    s.add_argument("file", nargs="?", help="quandle file or @name (check, orbits)")
    s.add_argument("--family", choices=["dihedral", "trivial", "alexander"], default="dihedral")
    s.add_argument("--n", type=int)
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_quandle)

    for name in ("homology", "cohomology"):
        s = sub.add_parser(name, help=f"{name} groups of a quandle")
        s.add_argument("--quandle", required=True)
        s.add_argument("--degree", type=int, required=True)
        s.add_argument("--sign", choices=["+", "-"], default="+")
        s.add_argument("--theory", choices=["R", "D", "Q"], default="Q")
        s.add_argument("--coeff", default="Z")
        s.set_defaults(func=cmd_homology)

    s = sub.add_parser("cocycles", help="cocycle generators and non-trivial representatives")
    s.add_argument("--quandle", required=True)
    s.add_argument("--degree", type=int, choices=[2, 3], required=True)
    s.add_argument("--sign", choices=["+", "-"], default="+")
    s.add_argument("--coeff", default="Z")
    s.set_defaults(func=cmd_cocycles)

    s = sub.add_parser("verify-complex", help="check the chain complex identities")
    s.add_argument("--quandle", required=True)
    s.add_argument("--max-degree", type=int, default=4)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("diagram", help="summary of a link diagram")
    s.add_argument("--diagram", required=True)
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("color-count", help="number of proper colourings")
    s.add_argument("--diagram", required=True)
    s.add_argument("--quandle", required=True)
    s.set_defaults(func=cmd_color_count)

    s = sub.add_parser("invariant", help="cocycle state-sum invariant")
    s.add_argument("--diagram", required=True)
    s.add_argument("--quandle", required=True)
    s.add_argument("--cocycle", required=True, help="cochain file or @s4_six / @t2_refined")
    s.add_argument("--signs", choices=list(invariants.SIGN_MODES), default="checkerboard")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("refined", help="three-variable invariant of a 3-component link")
    s.add_argument("--diagram", required=True)
    s.add_argument("--cocycle", help="positive 2-cocycle of T2 over Z4 (default chi(0,1)+chi(1,0))")
    s.set_defaults(func=cmd_refined)

    s = sub.add_parser("trivial-crossings", help="crossings coloured trivially by every colouring")
    s.add_argument("--diagram", required=True)
    s.add_argument("--quandle", required=True)
    s.set_defaults(func=cmd_trivial_crossings)

    s = sub.add_parser("mod3", help="sign-sum criterion for trivially 3-coloured crossings")
    s.add_argument("--diagram", required=True)
    s.set_defaults(func=cmd_mod3)

    s = sub.add_parser("proper-link", help="whether every component has even total linking")
    s.add_argument("--diagram", required=True)
    s.set_defaults(func=cmd_proper_link)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result, text = args.func(args)
    except QuandleError as e:
        _fail(e.to_dict(), e.exit_code)
    except OSError as e:
        _fail({"error": "FileError", "message": str(e)}, 2)
    out = text if args.pretty else json.dumps(result, separators=(",", ":"))
    if args.output:
        with open(args.output, "w") as f:
            f.write(out + "\n")
    else:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
