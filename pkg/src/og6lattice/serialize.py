"""JSON encoding of lattices, vectors, isometries, words and reports.

Output is canonical: sorted keys, integers as JSON numbers, rationals as
"p/q" strings.  Nothing is ever written as a float.
"""
import dataclasses
import json
from fractions import Fraction

from . import _linalg as la
from .isometry import Isometry, IsometryWord, Opaque, Reflection, Transvection
from .lattice import DiscriminantElement, Lattice, LatticeVector, standard_lattice

NAMED = {
    "og6": lambda: standard_lattice(3, 2),
    "u3": lambda: standard_lattice(3, 0),
    "u2": lambda: standard_lattice(2, 0),
    "u": lambda: standard_lattice(1, 0),
    "w-perp": lambda: standard_lattice(3, 1),
}


def _mukai():
    from .mukai import MUKAI
    return MUKAI


def lattice_to_json(lat):
    out = {"gram": [list(r) for r in lat.gram]}
    if lat.tag:
        out["tag"] = "+".join(lat.tag)
    return out


def lattice_from_json(obj):
    """Lattice from a document, a name ("og6", "mukai", ...), or "k,m" for U^k + (-2)^m."""
    if isinstance(obj, str):
        key = obj.strip().lower()
        if key == "mukai":
            return _mukai()
        if key in NAMED:
            return NAMED[key]()
        if "," in key:
            k, m = (int(x) for x in key.split(","))
            return standard_lattice(k, m)
        return lattice_from_json(json.loads(obj))
    tag = obj.get("tag")
    if isinstance(tag, str):
        tag = tuple(tag.split("+")) if tag else None
    return Lattice(la.as_matrix(obj["gram"]), tag)


def number(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def parse_number(s):
    return Fraction(s) if isinstance(s, str) else Fraction(s)


def vector_to_json(v):
    return {"coords": list(v.coords)}


def isometry_to_json(g):
    return {"matrix": [list(r) for r in g.matrix]}


def atom_to_json(atom):
    if isinstance(atom, Transvection):
        return {"kind": "transvection", "e": list(atom.e), "a": list(atom.a)}
    if isinstance(atom, Reflection):
        return {"kind": "reflection", "D": list(atom.D)}
    return {"kind": "opaque", "matrix": [list(r) for r in atom.mat], "label": atom.label}


def atom_from_json(obj):
    kind = obj["kind"]
    if kind == "transvection":
        return Transvection(tuple(obj["e"]), tuple(obj["a"]))
    if kind == "reflection":
        return Reflection(tuple(obj["D"]))
    if kind == "opaque":
        return Opaque(la.as_matrix(obj["matrix"]), obj.get("label", ""))
    raise ValueError("unknown atom kind %r" % (kind,))


def word_to_json(word):
    return {"atoms": [atom_to_json(a) for a in word.atoms]}


def word_from_json(obj, lattice):
    return IsometryWord(tuple(atom_from_json(a) for a in obj["atoms"]), lattice)


def mukai_to_json(x):
    return {"r": x.r, "c": list(x.c), "s": x.s}


def mukai_from_json(obj):
    from .mukai import MukaiVector
    return MukaiVector(obj["r"], tuple(obj["c"]), obj["s"])


def to_plain(obj):
    """Recursively convert library objects into JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return number(obj)
    if isinstance(obj, Lattice):
        return lattice_to_json(obj)
    if isinstance(obj, DiscriminantElement):
        return {"coeffs": list(obj.coeffs), "orders": list(obj.group.orders)}
    if isinstance(obj, LatticeVector):
        return list(obj.coords)
    if isinstance(obj, Isometry):
        return isometry_to_json(obj)
    if isinstance(obj, IsometryWord):
        return word_to_json(obj)
    if isinstance(obj, (Transvection, Reflection, Opaque)):
        return atom_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_plain(v) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    if dataclasses.is_dataclass(obj):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)
                if not f.name.startswith("_")}
    raise TypeError("cannot serialize %r" % (type(obj),))


def dumps(obj):
    return json.dumps(to_plain(obj), sort_keys=True)
