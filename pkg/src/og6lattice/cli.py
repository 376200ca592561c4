"""Command-line front end.

Every subcommand prints human-readable text, or canonical JSON with --json.
Exit codes: 0 computed, 1 internal failure (or a failing claim), 2 bad input.
"""
import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import _linalg as la
from . import cones, mukai, orbits, serialize
from .claims import verify_claims
from .errors import InternalError, LatticeError
from .isometry import Isometry, membership
from .lattice import discriminant_group, divisibility, is_primitive, q_value

BASIS_NAMES = ("e1", "f1", "e2", "f2", "e3", "f3", "zeta", "eps")


class InputError(LatticeError):
    """Malformed command-line input."""


# parsing

def _load(text):
    """JSON from a literal string or from a file path (optionally prefixed by @)."""
    path = text[1:] if text.startswith("@") else text
    if os.path.isfile(path):
        with open(path) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise InputError("cannot parse %r as JSON or a file path" % text) from None


def _symbolic(text, lattice):
    """Integer combination of named OG6 basis vectors, e.g. 'zeta+eps' or '2e1-f1'."""
    if lattice.rank != 8:
        raise InputError("named basis vectors need the OG6 lattice")
    coords = [0] * 8
    s = text.replace(" ", "")
    pos = 0
    for m in re.finditer(r"([+-]?)(\d*)\*?(e1|f1|e2|f2|e3|f3|zeta|eps)", s):
        if m.start() != pos:
            raise InputError("cannot parse vector %r" % text)
        c = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        coords[BASIS_NAMES.index(m.group(3))] += c
        pos = m.end()
    if pos != len(s) or not s:
        raise InputError("cannot parse vector %r" % text)
    return tuple(coords)


def parse_vector(text, lattice, rational=False):
    text = text.strip()
    if text.startswith("["):
        items = _load(text)
    elif re.search(r"[a-z]", text):
        items = _symbolic(text, lattice)
    else:
        items = [x for x in text.split(",") if x.strip()]
    try:
        vals = tuple(Fraction(str(x).strip()) for x in items)
    except (ValueError, ZeroDivisionError):
        raise InputError("cannot parse vector %r" % text) from None
    if not rational:
        if any(v.denominator != 1 for v in vals):
            raise InputError("vector %r must be integral" % text)
        vals = tuple(int(v) for v in vals)
    return vals


def parse_lattice(text):
    try:
        return serialize.lattice_from_json(_load(text) if text.strip().startswith("{") else text)
    except (KeyError, ValueError, TypeError) as exc:
        if isinstance(exc, LatticeError):
            raise
        raise InputError("cannot parse lattice %r" % text) from None


def _lattice_vector(args, text):
    lat = parse_lattice(args.lattice)
    coords = parse_vector(text, lat)
    if len(coords) != lat.rank:
        raise InputError("vector has %d coordinates, lattice rank is %d" % (len(coords), lat.rank))
    return lat.vector(coords)


def parse_matrix(text, lattice):
    obj = _load(text)
    if isinstance(obj, dict):
        obj = obj.get("matrix")
    try:
        m = la.as_matrix(obj)
    except (TypeError, ValueError):
        raise InputError("cannot parse matrix") from None
    return Isometry(m, lattice)


def parse_pic(text):
    obj = _load(text)
    basis = obj["basis"] if isinstance(obj, dict) else obj
    ambient = cones.OG6
    if isinstance(obj, dict) and "ambient" in obj:
        ambient = parse_lattice(json.dumps(obj["ambient"]) if isinstance(obj["ambient"], dict)
                                else obj["ambient"])
    try:
        basis = tuple(tuple(int(x) for x in b) for b in basis)
    except (TypeError, ValueError):
        raise InputError("pic basis must be a list of integer vectors") from None
    return cones.PicardData(basis, ambient)


# commands; each returns a JSON-ready object and a text rendering

def _fmt_vec(v):
    return "(" + ", ".join(str(serialize.number(x)) for x in v) + ")"


def cmd_lattice_info(args):
    lat = parse_lattice(args.lattice)
    grp = discriminant_group(lat)
    qs = [{"class": list(x.coeffs), "q": serialize.number(q_value(x))} for x in grp.elements()]
    out = {"rank": lat.rank, "det": lat.det, "signature": list(la.signature(lat.gram)),
           "discriminant_orders": list(grp.orders), "q_values": qs}
    text = "rank %d, det %d, signature %s\ndiscriminant group orders %s\n" % (
        lat.rank, lat.det, tuple(out["signature"]), list(grp.orders))
    text += "\n".join("  class %s: q = %s" % (q["class"], q["q"]) for q in qs)
    return out, text


def cmd_vector_invariants(args):
    v = _lattice_vector(args, args.v)
    if v.is_zero():
        from .errors import ZeroVector
        raise ZeroVector("zero vector")
    out = {"vector": list(v.coords), "norm": v.norm(), "div": divisibility(v),
           "primitive": is_primitive(v)}
    if is_primitive(v) and len(v.lattice.u_planes()) >= 2:
        inv = orbits.orbit_invariants(v)
        out["disc_class"] = list(inv.disc.coeffs)
        out["canonical"] = list(orbits.canonical_representative(v.lattice, inv).coords)
    text = "\n".join("%s: %s" % (k, out[k]) for k in sorted(out))
    return out, text


def cmd_orbit_test(args):
    v, w = _lattice_vector(args, args.v), _lattice_vector(args, args.w)
    if args.group == "oplus":
        same = orbits.same_orbit_O_plus_og6(v, w)
    else:
        same = orbits.same_orbit_SOtilde_plus(v, w)
    out = {"group": args.group, "same_orbit": same}
    return out, "same %s-orbit: %s" % ("O+" if args.group == "oplus" else "SO~+", same)


def cmd_orbit_transport(args):
    v, w = _lattice_vector(args, args.v), _lattice_vector(args, args.w)
    word = orbits.o_plus_witness(v, w) if args.group == "oplus" else orbits.transport(v, w)
    g = word.evaluate()
    out = {"word": serialize.word_to_json(word), "matrix": [list(r) for r in g.matrix],
           "maps_v_to_w": la.matvec(g.matrix, v.coords) == w.coords}
    text = "word of length %d maps %s to %s: %s" % (len(word), _fmt_vec(v.coords), _fmt_vec(w.coords),
                                                   out["maps_v_to_w"])
    return out, text


def cmd_orbit_oracle(args):
    v = _lattice_vector(args, args.v)
    orbit = orbits.orbit_oracle_bfs(orbits.eichler_generators(v.lattice), v, args.box)
    out = {"box": args.box, "size": len(orbit), "orbit": [list(x.coords) for x in orbit]}
    return out, "%d vectors in the box orbit of %s" % (len(orbit), _fmt_vec(v.coords))


def cmd_isometry_check(args):
    lat = parse_lattice(args.lattice)
    g = parse_matrix(args.matrix, lat)
    mem = membership(g)
    out = mem.as_dict()
    return out, "\n".join("%s: %s" % (k, out[k]) for k in sorted(out))


def cmd_isometry_decompose(args):
    lat = parse_lattice(args.lattice)
    g = parse_matrix(args.matrix, lat)
    if lat.gram == mukai.OG6.gram:
        word = mukai.decompose_monodromy(Isometry(g.matrix, mukai.OG6))
    else:
        word = orbits.decompose_SOplus_U2(g, depth=args.depth)
        if isinstance(word, orbits.DepthExceeded):
            out = {"depth_exceeded": {"depth": word.depth, "explored": word.explored}}
            return out, "no word of length <= %d (%d elements explored)" % (word.depth, word.explored)
    out = serialize.word_to_json(word)
    kinds = [a["kind"] for a in out["atoms"]]
    return out, "word of length %d: %s" % (len(word), " ".join(kinds) or "(empty)")


def cmd_divisor_classify(args):
    args.lattice = "og6"
    v = _lattice_vector(args, args.v)
    c = cones.classify_divisor(v)
    out = serialize.to_plain(c)
    return out, "%s (norm %d, div %d): %s" % (c.kind, c.norm, c.div, c.witness)


def _wall_text(walls):
    return ", ".join(_fmt_vec(w.ambient) for w in walls) or "none"


def cmd_cone_query(args):
    pic = parse_pic(args.pic)
    x = parse_vector(args.x, cones.OG6, rational=True)
    k = parse_vector(args.k, cones.OG6, rational=True)
    query = cones.kahler_chamber_query if args.mode == "kahler" else cones.birational_kahler_closure_query
    rep = query(pic, x, k)
    out = serialize.to_plain(rep)
    out["mode"] = args.mode
    text = "in_chamber: %s\non_boundary: %s\nseparating walls: %s\nwalls through x: %s" % (
        rep.in_chamber, rep.on_boundary, _wall_text(rep.separating_walls), _wall_text(rep.walls_through_x))
    return out, text


def cmd_lagrangian_check(args):
    args.lattice = "og6"
    rep = cones.detect_lagrangian(_lattice_vector(args, args.v))
    out = serialize.to_plain(rep)
    text = "primitive part %s, divisibility %d; fibration over %s with %s-polarized fibres" % (
        _fmt_vec(rep.primitive_part), rep.divisibility, rep.base, rep.fiber_polarization)
    return out, text


def cmd_scan(args):
    rep = cones.isotropic_div2_scan(args.box)
    out = serialize.to_plain(rep)
    out["residues"] = {str(r): c for r, c in rep.residues}
    out["supported_on_4_6"] = rep.supported_on_4_6
    text = "box %d: %d vectors, %d primitive of divisibility 2, residues mod 8 %s, isotropic %d" % (
        rep.box, rep.scanned, rep.primitive_div2, dict(rep.residues), rep.isotropic)
    return out, text


def cmd_verify_claims(args):
    results = verify_claims(args.seed, args.scale, args.box, args.depth, args.jobs, args.tamper)
    claims = []
    for r in results:
        item = {"id": r.id, "status": r.status, "detail": r.detail}
        if args.timings:
            item["runtime"] = round(r.runtime, 3)
        claims.append(item)
    ok = all(r.passed for r in results)
    out = {"seed": args.seed, "scale": args.scale, "passed": ok, "claims": claims}
    lines = []
    for r in results:
        t = " [%.2fs]" % r.runtime if args.timings else ""
        lines.append("%s %s: %s%s" % ("PASS" if r.passed else "FAIL", r.id, r.detail, t))
    lines.append("%d/%d claims pass" % (sum(r.passed for r in results), len(results)))
    return out, "\n".join(lines), (0 if ok else 1)


# parser

def build_parser():
    p = argparse.ArgumentParser(prog="og6lattice", description="Lattice computations for OG6-type manifolds.")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name, func, help_text, lattice=True):
        q = parent.add_parser(name, help=help_text)
        q.add_argument("--json", action="store_true", help="emit canonical JSON")
        if lattice:
            q.add_argument("--lattice", default="og6",
                           help="og6, mukai, u3, u2, u, w-perp, 'k,m' for U^k+(-2)^m, or a JSON Gram document")
        q.set_defaults(func=func)
        return q

    def group(name, help_text):
        return sub.add_parser(name, help=help_text).add_subparsers(dest="action", required=True)

    g = group("lattice", "lattice data")
    leaf(g, "info", cmd_lattice_info, "rank, determinant, signature, discriminant form")

    g = group("vector", "vector data")
    q = leaf(g, "invariants", cmd_vector_invariants, "norm, divisibility, discriminant class")
    q.add_argument("v", help="coordinates '1,0,...', a JSON list, or names like 'zeta+eps'")

    g = group("orbit", "orbits of primitive vectors")
    for name, func in (("test", cmd_orbit_test), ("transport", cmd_orbit_transport)):
        q = leaf(g, name, func, "decide orbit equality" if name == "test" else "isometry word mapping v to w")
        q.add_argument("v")
        q.add_argument("w")
        q.add_argument("--group", choices=("sotilde", "oplus"), default="sotilde")
    q = leaf(g, "oracle", cmd_orbit_oracle, "brute-force orbit inside a coordinate box")
    q.add_argument("v")
    q.add_argument("--box", type=int, default=2)

    g = group("isometry", "isometries")
    q = leaf(g, "check", cmd_isometry_check, "group membership flags")
    q.add_argument("matrix", help="JSON matrix (or {'matrix': ...}) or a file path")
    q = leaf(g, "decompose", cmd_isometry_decompose, "word decomposition (OG6 monodromy or SO+(U^2))")
    q.add_argument("matrix")
    q.add_argument("--depth", type=int, default=12)

    g = group("divisor", "divisor classes of OG6")
    q = leaf(g, "classify", cmd_divisor_classify, "wall type of a primitive class", lattice=False)
    q.add_argument("v")

    g = group("cone", "chamber queries")
    q = leaf(g, "query", cmd_cone_query, "is x in the chamber of k", lattice=False)
    q.add_argument("--pic", required=True, help="JSON {'basis': [...]} or a file path")
    q.add_argument("--x", required=True)
    q.add_argument("--k", required=True)
    q.add_argument("--mode", choices=("kahler", "bk"), default="kahler")

    g = group("lagrangian", "isotropic classes")
    q = leaf(g, "check", cmd_lagrangian_check, "lagrangian fibration report", lattice=False)
    q.add_argument("v")

    g = group("scan", "exhaustive scans")
    q = leaf(g, "iso-div2", cmd_scan, "norms mod 8 of primitive divisibility-2 vectors", lattice=False)
    q.add_argument("--box", type=int, required=True)

    q = sub.add_parser("verify-claims", help="run the self-verification battery")
    q.add_argument("--json", action="store_true")
    q.add_argument("--scale", choices=("smoke", "full"), default="smoke")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--box", type=int, default=None, help="override the scan and BFS box")
    q.add_argument("--depth", type=int, default=12, help="word-search depth")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--timings", action="store_true", help="include runtimes (breaks bit-identical output)")
    q.add_argument("--tamper", action="store_true", help="negative control: corrupt the OG6 Gram matrix")
    q.set_defaults(func=cmd_verify_claims)
    return p


def _emit(args, out, text, stream):
    if getattr(args, "json", False):
        print(serialize.dumps(out), file=stream)
    else:
        print(text, file=stream)


def run_command(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        res = args.func(args)
    except (LatticeError, KeyError, ValueError) as exc:
        code, kind, message = 2, type(exc).__name__, str(exc)
    except (InternalError, AssertionError) as exc:
        code, kind, message = 1, type(exc).__name__, str(exc)
    else:
        out, text, code = res if len(res) == 3 else res + (0,)
        _emit(args, out, text, stdout)
        return code
    err = {"error": {"type": kind, "message": message}}
    if getattr(args, "json", False):
        print(serialize.dumps(err), file=stdout)
    else:
        print("error (%s): %s" % (kind, message), file=stderr)
    return code


def main():
    sys.exit(run_command())
