"""Command-line front end: ``sidonkit {verify,construct,slice,walsh,code,table}``.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

import numpy as np

from . import codes, families, sidon, vbf
from .errors import CapacityError, FormatError
from .gf2core import default_modulus

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _flag(value):
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _emit(args, record, lines):
    if args.json:
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def _kv(record, keys):
    parts = []
    for k in keys:
        v = record[k]
        parts.append(f"{k}={_flag(v) if isinstance(v, bool) or v is None else v}")
    return " ".join(parts)


# ---------- verify

def cmd_verify(args):
    M = sidon.read_point_set(args.file)
    is_s = sidon.is_sidon(M)
    record = {"t": M.t, "size": len(M), "sidon": is_s}
    if args.maximal:
        record["maximal"] = sidon.is_maximal_sidon(M) if is_s else None
    if args.sum_free:
        record["sum_free"] = sidon.is_sum_free(M)
    _emit(args, record, [_kv(record, record)])
    return EXIT_OK if is_s else EXIT_FAIL


# ---------- construct / slice

def _slice_record(M, out_path, label):
    res = sidon.best_hyperplane_slice(M)
    rec = {
        "a": res.a,
        "side": res.side,
        "size": len(res.sliced),
        "dim": res.sliced.t,
        "sidon": sidon.is_sidon(res.sliced),
    }
    if out_path:
        sidon.write_point_set(res.sliced, out_path, comment=f"{label}; hyperplane a={res.a} side={res.side}")
    return rec


def cmd_construct(args):
    spec = families.FamilySpec.parse(args.family, args.n)
    if spec.family == "mult-subgroup":
        M = families.mult_subgroup_sidon(spec.n)
        nonzero = sidon.PointSet(M.t, M.points[M.points != 0])
        record = {
            "family": "mult-subgroup",
            "n": spec.n,
            "size": len(M),
            "dim": M.t,
            "sidon": sidon.is_sidon(M),
            "sum_free": sidon.is_sum_free(nonzero),
        }
        lines = [_kv(record, record)]
        emitted_ok = record["sidon"]
        label = f"mult-subgroup n={spec.n}"
    else:
        F = spec.function()
        apn = vbf.is_apn(F) if F.n == F.m else None
        M = families.graph(F)
        record = {
            "family": args.family,
            "n": F.n,
            "apn": apn,
            "linearity": vbf.linearity(F),
            "graph_dim": M.t,
            "graph_size": len(M),
        }
        lines = [_kv(record, record)]
        emitted_ok = bool(apn)
        label = f"graph of {args.family} n={F.n}"
    if args.slice:
        rec = _slice_record(M, args.out, label)
        record["slice"] = rec
        lines.append("slice " + _kv(rec, rec))
        emitted_ok = rec["sidon"]
    elif args.out:
        sidon.write_point_set(M, args.out, comment=label)
    _emit(args, record, lines)
    return EXIT_OK if emitted_ok else EXIT_FAIL


def cmd_slice(args):
    M = sidon.read_point_set(args.file)
    record = {"t": M.t, "size": len(M), "linearity": sidon.set_linearity(M)}
    rec = _slice_record(M, args.out, f"slice of {args.file}")
    record["slice"] = rec
    _emit(args, record, [_kv(record, ["t", "size", "linearity"]), "slice " + _kv(rec, rec)])
    return EXIT_OK if rec["sidon"] else EXIT_FAIL


# ---------- walsh

def cmd_walsh(args):
    F = vbf.read_truth_table(args.file)
    spectrum = vbf.walsh_spectrum(F)
    nontrivial = spectrum.as_matrix()[1:].reshape(-1)
    hist = Counter(int(v) for v in nontrivial)
    record = {
        "n": F.n,
        "m": F.m,
        "linearity": int(np.abs(nontrivial).max()) if nontrivial.size else 0,
        "differential_uniformity": vbf.differential_uniformity(F),
        "apn": vbf.is_apn(F) if F.n == F.m else None,
        "quadratic": vbf.is_quadratic(F) if F.n <= 16 else None,
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }
    lines = [_kv(record, ["n", "m", "linearity", "differential_uniformity", "apn", "quadratic"])]
    lines.append("histogram " + " ".join(f"{k}:{v}" for k, v in record["histogram"].items()))
    _emit(args, record, lines)
    return EXIT_OK


# ---------- code

def cmd_code(args):
    M = sidon.read_point_set(args.from_set)
    try:
        code = codes.sidon_to_code(M)
    except codes.RankDeficientError as exc:
        print(f"error: {exc}; project the set to its span first", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok = codes.verify_distance_ge5(code)
    record = {"length": code.length, "dimension": code.dimension, "check_bits": code.t, "distance_ge5": ok}
    params = f"[{code.length}, {code.dimension}, >=5]"
    if args.exact_distance:
        d = codes.exact_min_distance(code, cap=5)
        record["min_distance"] = d.value if d.exact else None
        record["witness"] = list(d.witness)
        params = f"[{code.length}, {code.dimension}, {d}]"
    if args.out:
        codes.export_parity_check(code, args.out)
    lines = [f"code {params} " + _kv(record, [k for k in record if k != "witness"])]
    _emit(args, record, lines)
    return EXIT_OK if ok else EXIT_FAIL


# ---------- table

def table_rows(t_min=3, t_max=25, max_n=10, apn_files=()):
    """Rows of formula bounds and constructed sizes, one per dimension t.

    Each construction entry is a dict ``{"size", "source"}`` where source is
    ``"computed"`` (built and Sidon-verified here) or ``"formula"``.
    """
    if not 3 <= t_min <= t_max <= 25:
        raise ValueError("need 3 <= t_min <= t_max <= 25")
    rows = {t: {"t": t, "bound": families.sidon_upper_bound(t), "classical": families.classical_size(t)}
            for t in range(t_min, t_max + 1)}

    def put(t, key, size, source):
        if t in rows:
            rows[t][key] = {"size": size, "source": source}

    def computed_slice(F):
        S = families.apn_slice_sidon(F)
        if not sidon.is_sidon(S):
            raise AssertionError("constructed slice is not Sidon")
        return len(S)

    for n in range(2, (t_max + 1) // 2 + 1):
        t = 2 * n
        if t_min <= t <= t_max:
            if n <= max_n:
                M = families.mult_subgroup_sidon(n)
                put(t, "subgroup", len(M) if sidon.is_sidon(M) else 0, "computed")
            else:
                put(t, "subgroup", (1 << n) + (2 if n % 2 == 0 else 1), "formula")
        t = 2 * n - 1
        if not t_min <= t <= t_max:
            continue
        if n >= 3:
            if n <= max_n:
                put(t, "gold", computed_slice(families.gold_function(default_modulus(n))), "computed")
            else:
                lin = 1 << ((n + 1) // 2) if n % 2 else 1 << (n // 2 + 1)
                put(t, "gold", families.apn_slice_size(n, lin), "formula")
        if n >= 5 and n % 2:
            if n <= max_n:
                put(t, "inverse", computed_slice(families.inverse_function(default_modulus(n))), "computed")
            else:
                put(t, "inverse", families.apn_slice_size(n, families.inverse_linearity_formula(n)), "formula")
        if n % 5 == 0:
            if n <= max_n:
                put(t, "dobbertin", computed_slice(families.dobbertin_function(default_modulus(n))), "computed")
            else:
                lin = families.dobbertin_conjectured_linearity(n)
                put(t, "dobbertin", families.apn_slice_size(n, lin), "formula")
    for path in apn_files:
        F = vbf.read_truth_table(path)
        put(2 * F.n - 1, "file", computed_slice(F), "computed")
    return [rows[t] for t in sorted(rows)]


TABLE_COLUMNS = ["bound", "classical", "subgroup", "gold", "inverse", "dobbertin", "file"]


def cmd_table(args):
    rows = table_rows(args.t_min, args.t_max, args.max_n, args.apn_file)
    if args.json:
        print(json.dumps(rows))
        return EXIT_OK
    print(f"{'t':>3} " + " ".join(f"{c:>11}" for c in TABLE_COLUMNS))
    for row in rows:
        cells = []
        for c in TABLE_COLUMNS:
            v = row.get(c)
            if v is None:
                cells.append(f"{'-':>11}")
            elif isinstance(v, dict):
                mark = "*" if v["source"] == "formula" else ""
                cells.append(f"{str(v['size']) + mark:>11}")
            else:
                cells.append(f"{v:>11}")
        print(f"{row['t']:>3} " + " ".join(cells))
    print("bound: Brouwer-Tolhuizen formula; classical: closed-form size;")
    print("other columns: largest hyperplane slice / subgroup set, built and verified Sidon;")
    print("* = closed-form value only (outside the computed envelope)")
    below = [str(r["t"]) for r in rows if r["classical"] > r["bound"]]
    if below:
        print(f"note: for t={','.join(below)} the bound formula is below an attained size")
    return EXIT_OK


# ---------- entry point

def build_parser():
    parser = argparse.ArgumentParser(prog="sidonkit", description="Sidon sets from APN functions, Walsh spectra and distance-5 codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "check the Sidon property of a point-set file")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--sum-free", action="store_true")

    p = add("construct", cmd_construct, "build a named family (gold:k, inverse, dobbertin, mult-subgroup, file:PATH)")
    p.add_argument("family")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--slice", action="store_true", help="emit the largest hyperplane slice")
    p.add_argument("--out", help="write the resulting point set here")

    p = add("slice", cmd_slice, "largest hyperplane slice of a point-set file")
    p.add_argument("file")
    p.add_argument("--out")

    p = add("walsh", cmd_walsh, "Walsh/differential analysis of a truth-table file")
    p.add_argument("file")

    p = add("code", cmd_code, "parity-check matrix of the distance-5 code of a Sidon set")
    p.add_argument("--from-set", required=True)
    p.add_argument("--out")
    p.add_argument("--exact-distance", action="store_true")

    p = add("table", cmd_table, "formula bounds and constructed sizes per dimension")
    p.add_argument("--t-min", type=int, default=3)
    p.add_argument("--t-max", type=int, default=25)
    p.add_argument("--max-n", type=int, default=10, help="largest n built explicitly")
    p.add_argument("--apn-file", action="append", default=[], help="extra APN truth table to slice")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
