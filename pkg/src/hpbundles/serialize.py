"""Machine-readable forms of every value type.

Coefficients travel as exact fraction strings ("1", "-3", "1/2"); term
lists are emitted sorted by (p+q, p) so identical values always print
byte-identically.  parse(print(x)) == x for each type here.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import convex
from .errors import DomainError
from .hntypes import HNType, ReductiveClass
from .poly import LaurentPoly
from .series import FactoredRational, TruncatedSeries


def fraction_to_str(c):
    return str(c)


def parse_fraction(value):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise DomainError("expected an integer or a fraction string, got %r" % (value,))


def poly_to_obj(p):
    return [
        {"p": e[0], "q": e[1], "c": fraction_to_str(c)}
        for e, c in p.sorted_terms()
    ]


def poly_from_obj(obj):
    terms = {}
    for entry in obj:
        terms[(int(entry["p"]), int(entry["q"]))] = parse_fraction(entry["c"])
    return LaurentPoly(terms)


def rational_to_obj(f):
    return {
        "scalar": fraction_to_str(f.scalar),
        "num": poly_to_obj(f.num),
        "den": [
            {"a": a, "b": b, "k": k} for (a, b), k in sorted(f.den.items())
        ],
    }


def rational_from_obj(obj):
    den = {(int(e["a"]), int(e["b"])): int(e["k"]) for e in obj.get("den", [])}
    return FactoredRational(
        poly_from_obj(obj.get("num", [])), den, parse_fraction(obj.get("scalar", 1))
    )


def series_to_obj(s):
    return {"order": s.order, "terms": poly_to_obj(s.as_poly())}


def series_from_obj(obj):
    return TruncatedSeries(poly_from_obj(obj["terms"]).terms(), int(obj["order"]))


def _vector_to_obj(v):
    return [x.numerator if x.denominator == 1 else fraction_to_str(x) for x in v]


def _vector_from_obj(obj):
    return tuple(parse_fraction(x) for x in obj)


def weight_system_to_obj(ws):
    return {
        "dim": ws.dim,
        "weights": [{"v": _vector_to_obj(v), "mult": m} for v, m in ws.weights],
        "roots": [_vector_to_obj(r) for r in ws.roots],
        "chamber": [_vector_to_obj(s) for s in ws.chamber],
    }


def weight_system_from_obj(obj):
    try:
        return convex.WeightSystem(
            dim=int(obj["dim"]),
            weights=tuple((_vector_from_obj(w["v"]), int(w["mult"])) for w in obj["weights"]),
            roots=tuple(_vector_from_obj(r) for r in obj.get("roots", [])),
            chamber=tuple(_vector_from_obj(s) for s in obj.get("chamber", [])),
        )
    except (KeyError, TypeError) as err:
        raise DomainError("malformed weight system: %s" % err) from err


def beta_index_to_obj(bi):
    return {
        "beta": _vector_to_obj(bi.beta),
        "support": [_vector_to_obj(v) for v in bi.support],
    }


def hn_type_to_obj(t, codim=None):
    obj = {"quotients": [[r, d] for r, d in t.quotients]}
    if codim is not None:
        obj["codim"] = codim
    return obj


def hn_type_from_obj(obj):
    return HNType(tuple((int(r), int(d)) for r, d in obj["quotients"]))


def reductive_class_to_obj(c, codim=None):
    obj = {
        "pairs": [[m, r] for m, r in c.pairs],
        "dim": c.dim,
        "at_dimension_bound": c.at_dimension_bound,
    }
    if codim is not None:
        obj["codim"] = codim
    return obj


def reductive_class_from_obj(obj):
    return ReductiveClass(
        tuple((int(m), int(r)) for m, r in obj["pairs"]),
        at_dimension_bound=bool(obj.get("at_dimension_bound", False)),
    )


def dumps(obj):
    """Deterministic JSON text (stable key order, no whitespace drift)."""
    return json.dumps(obj, indent=2, sort_keys=False)
