"""Command line front end.

Exit codes: 0 success, 1 domain error (bad genus, odd degree, malformed
input), 2 internal invariant violation (a built-in identity failed or a
golden file mismatched), 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import acceptance, convex, serialize
from .errors import DomainError, InternalCheckError
from .hntypes import codim_hn, codim_deeper_stratum, enumerate_hn_types, enumerate_reductive_classes
from .rank2 import hodge_deligne_stable_rank2, hp_moduli_stable_rank2, moduli_dimension_rank2
from .semistable import SemistableSeries

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(USAGE_EXIT)


def build_parser():
    parser = _Parser(prog="hpbundles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate series and polynomials")
    compute_sub = compute.add_subparsers(dest="target", required=True)

    ss = compute_sub.add_parser("ss", help="semistable-locus series")
    ss.add_argument("--rank", type=int, required=True)
    ss.add_argument("--deg", type=int, required=True)
    ss.add_argument("--genus", type=int, required=True)
    ss.add_argument("--order", type=int, default=None)
    _output_flags(ss)

    stable2 = compute_sub.add_parser("stable2", help="stable rank-2 moduli polynomial, even degree")
    stable2.add_argument("--genus", type=int, required=True)
    stable2.add_argument("--deg", type=int, default=None, help="optional; must be even")
    stable2.add_argument("--deligne", action="store_true", help="emit the compact-support polynomial")
    stable2.add_argument("--golden", default=None, help="compare against (or create) a golden JSON file")
    _output_flags(stable2)

    enum = sub.add_parser("enumerate", help="finite index sets")
    enum_sub = enum.add_subparsers(dest="target", required=True)

    hn = enum_sub.add_parser("hn-types", help="filtration types under a codimension cap")
    hn.add_argument("--rank", type=int, required=True)
    hn.add_argument("--deg", type=int, required=True)
    hn.add_argument("--genus", type=int, required=True)
    hn.add_argument("--max-codim", type=int, required=True)
    _output_flags(hn)

    rc = enum_sub.add_parser("reductive-classes", help="blow-up stabilizer classes")
    rc.add_argument("--rank", type=int, required=True)
    rc.add_argument("--deg", type=int, required=True)
    rc.add_argument("--genus", type=int, default=None, help="optionally report codimensions")
    _output_flags(rc)

    beta = sub.add_parser("beta", help="convex geometry of weight systems")
    beta_sub = beta.add_subparsers(dest="target", required=True)
    bidx = beta_sub.add_parser("index-set", help="unstable indices of a weight system")
    bidx.add_argument("--system", required=True, help="weight system JSON file")
    _output_flags(bidx)

    verify = sub.add_parser("verify", help="run the bundled verification suite")
    verify.add_argument("--genus", type=int, default=None)

    return parser


def _output_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    group.add_argument("--text", action="store_true")


def _default_order():
    raw = os.environ.get("HP_MODULI_ORDER_DEFAULT")
    if raw is None:
        return 12
    try:
        return int(raw)
    except ValueError as err:
        raise DomainError("HP_MODULI_ORDER_DEFAULT must be an integer") from err


def _emit(args, obj, text):
    if args.json:
        print(serialize.dumps(obj))
    else:
        print(text)


def _cmd_ss(args):
    order = args.order if args.order is not None else _default_order()
    evaluator = SemistableSeries()
    series = evaluator.series(args.rank, args.deg, args.genus, order)
    meta = {
        "rank": args.rank,
        "deg": args.deg,
        "genus": args.genus,
        "order": order,
        "sections_dim": args.deg + args.rank * (1 - args.genus),
        "memo_hits": evaluator.hits,
        "memo_misses": evaluator.misses,
        "types_used": evaluator.types_used,
    }
    obj = {"meta": meta, "series": serialize.series_to_obj(series)}
    text = "%s\n# meta: %s" % (series, json.dumps(meta))
    _emit(args, obj, text)
    return 0


def _cmd_stable2(args):
    if args.deg is not None and args.deg % 2 != 0:
        raise DomainError("degree must be even")
    if args.deligne:
        poly = hodge_deligne_stable_rank2(args.genus)
        kind = "hodge-deligne"
    else:
        poly = hp_moduli_stable_rank2(args.genus)
        kind = "hodge-poincare"
    obj = {
        "kind": kind,
        "genus": args.genus,
        "dim": moduli_dimension_rank2(args.genus),
        "poly": serialize.poly_to_obj(poly),
    }
    if args.golden:
        return _golden_compare(args.golden, obj)
    _emit(args, obj, str(poly))
    return 0


def _golden_compare(path, obj):
    payload = serialize.dumps(obj)
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as handle:
            stored = handle.read()
        if json.loads(stored) != json.loads(payload):
            raise InternalCheckError("golden file %s does not match the computed value" % path)
        print("golden match: %s" % path)
        return 0
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(payload + "\n")
    print("golden written: %s" % path)
    return 0


def _cmd_hn_types(args):
    types = enumerate_hn_types(args.rank, args.deg, args.genus, args.max_codim)
    entries = [serialize.hn_type_to_obj(t, codim=codim_hn(t, args.genus)) for t in types]
    obj = {
        "rank": args.rank,
        "deg": args.deg,
        "genus": args.genus,
        "max_codim": args.max_codim,
        "count": len(types),
        "types": entries,
    }
    if args.genus == 1:
        obj["warnings"] = ["genus 1: codimension bounds degenerate; downstream series need genus >= 2"]
    lines = ["%s  codim %d" % (t.quotients, e["codim"]) for t, e in zip(types, entries)]
    _emit(args, obj, "\n".join(lines) if lines else "(none)")
    return 0


def _cmd_reductive_classes(args):
    classes = enumerate_reductive_classes(args.rank, args.deg)
    entries = []
    for c in classes:
        codim = codim_deeper_stratum(c, args.rank, args.genus) if args.genus else None
        entries.append(serialize.reductive_class_to_obj(c, codim=codim))
    obj = {"rank": args.rank, "deg": args.deg, "count": len(classes), "classes": entries}
    if args.genus == 1:
        obj["warnings"] = ["genus 1: codimension bounds degenerate; downstream series need genus >= 2"]
    lines = []
    for c, e in zip(classes, entries):
        extra = "  codim %s" % e["codim"] if e.get("codim") is not None else ""
        flag = "  (dimension bound)" if c.at_dimension_bound else ""
        lines.append("%s  dim %d%s%s" % (c.pairs, c.dim, extra, flag))
    _emit(args, obj, "\n".join(lines) if lines else "(none)")
    return 0


def _cmd_index_set(args):
    try:
        with open(args.system, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as err:
        raise DomainError("cannot read weight system: %s" % err) from err
    ws = serialize.weight_system_from_obj(raw)
    indices = convex.index_set(ws)
    entries = []
    for bi in indices:
        entry = serialize.beta_index_to_obj(bi)
        entry["codim"] = convex.stratum_codim(ws, bi)
        entries.append(entry)
    obj = {"count": len(indices), "indices": entries}
    lines = ["beta=%s  codim %d" % (e["beta"], e["codim"]) for e in entries]
    _emit(args, obj, "\n".join(lines) if lines else "(none)")
    return 0


def _cmd_verify(args):
    if args.genus is not None and args.genus < 2:
        raise DomainError("genus out of supported range")
    ok = acceptance.run_all(genus=args.genus)
    return 0 if ok else 2


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        if args.command == "compute" and args.target == "ss":
            return _cmd_ss(args)
        if args.command == "compute" and args.target == "stable2":
            return _cmd_stable2(args)
        if args.command == "enumerate" and args.target == "hn-types":
            return _cmd_hn_types(args)
        if args.command == "enumerate" and args.target == "reductive-classes":
            return _cmd_reductive_classes(args)
        if args.command == "beta" and args.target == "index-set":
            return _cmd_index_set(args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    except DomainError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except InternalCheckError as err:
        print("internal check failed: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
