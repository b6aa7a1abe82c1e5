"""Command-line interface.

Exit codes: 0 success, 1 computation ended in an Unknown status,
2 input or usage error.  All output is deterministic byte-for-byte for
identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arrangement import builtin, format_arrangement, parse_arrangement
from .errors import ArrinvError
from .freeness import certify_inductively_free
from .lattice import FlatLattice
from .oracle import (bseq_exactness_check, default_cutoff, dim_Dp,
                     euler_exactness_check, fr_predicted_hilbert,
                     hilbert_table, promote_to_polynomial,
                     psi_truncated_from_table, terao_B_membership_check,
                     wedge_degrees)
from .polyring import BivariatePolynomial
from .stengine import (cached_certificate, conjecture_checks, psi_auto,
                       psi_free, psi_generic)

BUILTIN_NAMES = ("boolean(N)", "generic_plus_one(N)", "x3", "x3_h_y",
                 "x3_h_x", "three_generic")


def _add_input_args(sub):
    sub.add_argument("--input", metavar="FILE",
                     help="arrangement file (dim line + integer rows)")
    sub.add_argument("--builtin", metavar="NAME",
                     help="builtin arrangement name")


def _add_format_args(sub):
    sub.add_argument("--json", action="store_true", help="JSON output")
    sub.add_argument("--tsv", action="store_true", help="TSV output")


def _load(args):
    if bool(args.input) == bool(args.builtin):
        raise UsageError("exactly one of --input/--builtin is required")
    if args.builtin:
        return builtin(args.builtin)
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc))
    return parse_arrangement(text, label=args.input)


class UsageError(Exception):
    pass


def _poly_json(p):
    return p.to_json()


def _poly_human(p, vars_=("x", "t")):
    if p.is_zero():
        return "0"
    terms = []
    for (i, j), c in sorted(p.coeffs.items()):
        part = "" if c == 1 and (i or j) else (
            "-" if c == -1 and (i or j) else str(c))
        if i:
            part += ("*" if part not in ("", "-") else "") + vars_[0]
            if i > 1:
                part += "^%d" % i
        if j:
            part += ("*" if part not in ("", "-") or i else "") + vars_[1]
            if j > 1:
                part += "^%d" % j
        terms.append(part)
    out = terms[0]
    for term in terms[1:]:
        out += (" - " + term[1:]) if term.startswith("-") else (" + " + term)
    return out


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _parse_hyperplane(spec, arr):
    """Index or exact coefficient vector ('1,0,0,0' or '1 0 0 0')."""
    toks = spec.replace(",", " ").split()
    if len(toks) == 1 and len(toks[0]) <= 6:
        try:
            h = int(toks[0])
        except ValueError:
            raise UsageError("bad hyperplane spec %r" % spec)
        if not 0 <= h < len(arr):
            raise UsageError("hyperplane index %d out of range" % h)
        return h
    try:
        vec = tuple(int(t) for t in toks)
    except ValueError:
        raise UsageError("bad hyperplane spec %r" % spec)
    from .arrangement import canonical_form
    cf = canonical_form(vec)
    for i, f in enumerate(arr.forms):
        if f == cf:
            return i
    raise UsageError("no hyperplane with coefficients %r" % (vec,))


# -----------------------------------------------------------------------------
# subcommands

def cmd_charpoly(args):
    arr = _load(args)
    lat = FlatLattice(arr)
    chi = lat.characteristic_polynomial()
    poly = BivariatePolynomial(
        {(0, j): Fraction(c) for j, c in enumerate(chi) if c})
    if args.json:
        out = {"chi": _poly_json(poly), "ell": arr.ell,
               "n_hyperplanes": len(arr)}
        if args.betti:
            out["betti"] = lat.betti_numbers()
        _emit_json(out)
    elif args.tsv:
        print("\t".join(str(c) for c in chi))
    else:
        print("chi(A;t) =", _poly_human(poly, ("x", "t")))
        if args.betti:
            print("betti:", " ".join(str(b) for b in lat.betti_numbers()))
    return 0


def cmd_lattice(args):
    arr = _load(args)
    lat = FlatLattice(arr)
    mu = lat.mobius()
    if args.json:
        flats = [{"codim": f.codim, "hyperplanes": list(f.indices()),
                  "mobius": mu[f.bitset],
                  "basis": [list(r) for r in f.rows]}
                 for f in lat.flats()]
        _emit_json({"ell": arr.ell, "flats": flats})
    else:
        for f in lat.flats():
            print("codim %d  mu %3d  hyperplanes %s"
                  % (f.codim, mu[f.bitset], list(f.indices())))
    return 0


def cmd_freeness(args):
    arr = _load(args)
    cert = certify_inductively_free(arr, budget=args.budget)
    payload = {
        "status": cert.status,
        "exponents": list(cert.exponents) if cert.exponents else None,
        "witness": cert.witness,
        "trace": [list(entry) for entry in cert.trace],
    }
    if args.json:
        _emit_json(payload)
    else:
        print("status:", cert.status)
        if cert.exponents:
            print("exponents:", list(cert.exponents))
        print("witness:", cert.witness)
        if args.trace:
            for op, h, detail in cert.trace:
                print("  %s h=%s  %s" % (op, h, detail))
    return 0 if cert.status != "Unknown" else 1


def cmd_st_poly(args):
    arr = _load(args)
    hint = None
    if args.delete_hyperplane is not None:
        h = _parse_hyperplane(args.delete_hyperplane, arr)
        hint = arr.forms[h]
        arr = arr.delete(h)
    if args.method == "free":
        cert = cached_certificate(arr)
        if not cert.is_free:
            print("not certified free; use --method auto", file=sys.stderr)
            return 1
        psi = psi_free(cert.exponents)
        result_psi, reduced, trace = psi, psi.substitute("t", -1), [
            ("free-formula", None, "exp %s" % (list(cert.exponents),))]
        status = "ok"
    elif args.method == "generic":
        psi = psi_generic(arr.ell)
        result_psi, reduced = psi, psi.substitute("t", -1)
        trace = [("generic", None, "ell=%d" % arr.ell)]
        status = "ok"
    else:
        r = psi_auto(arr, parent_hint=hint)
        status = r.status
        result_psi, reduced, trace = r.psi, r.reduced, r.method_trace
    if status != "ok":
        if args.json:
            _emit_json({"status": status})
        else:
            print("status:", status)
        return 1
    target = reduced if args.reduced else result_psi
    if args.json:
        out = {"status": "ok", "psi": _poly_json(target)}
        if args.trace:
            out["trace"] = [[op, list(h) if isinstance(h, tuple) else h,
                             detail] for op, h, detail in trace]
        _emit_json(out)
    elif args.tsv:
        for (i, j), c in sorted(target.coeffs.items()):
            print("%d\t%d\t%s" % (i, j, c))
    else:
        print(_poly_human(target))
        if args.trace:
            for op, h, detail in trace:
                print("  %s %s  %s" % (op, h, detail))
    return 0


def cmd_conjectures(args):
    arr = _load(args)
    r = psi_auto(arr)
    if not r.ok:
        print("status: unknown", file=sys.stderr)
        return 1
    rep = conjecture_checks(r.reduced, len(arr)).as_dict()
    rep["essential"] = arr.rank() == arr.ell
    if args.json:
        _emit_json(rep)
    else:
        for k in sorted(rep):
            print("%s: %s" % (k, rep[k]))
    return 0


def cmd_oracle(args):
    arr = _load(args)
    pmax = args.pmax if args.pmax is not None else arr.ell
    dmax = args.dmax if args.dmax is not None else default_cutoff(arr)
    check = args.check
    if check in ("euler", "bseq", "teraoB", "fr") and args.hyperplane is None:
        raise UsageError("--check %s needs --hyperplane" % check)
    h = (_parse_hyperplane(args.hyperplane, arr)
         if args.hyperplane is not None else None)
    if check == "euler":
        rows = {p: euler_exactness_check(arr, h, p, dmax)
                for p in range(1, pmax + 1)}
        return _emit_check(args, "euler_defect", rows)
    if check == "bseq":
        rows = {p: bseq_exactness_check(arr, h, p, dmax)
                for p in range(1, pmax + 1)}
        return _emit_check(args, "bseq_defect", rows)
    if check == "teraoB":
        res = terao_B_membership_check(arr, h, dmax)
        if args.json:
            _emit_json({"teraoB": res})
        else:
            print("teraoB:", "\t".join("pass" if v else "FAIL"
                                       for v in res))
        return 0 if all(res) else 1
    if check == "fr":
        cert = cached_certificate(arr)
        rcert = cached_certificate(arr.restrict(h))
        if not (cert.is_free and rcert.is_free):
            print("fr prediction needs the arrangement and its "
                  "restriction certified free", file=sys.stderr)
            return 1
        d_shift = (len(arr) - 1) - len(arr.restrict(h))
        pred = fr_predicted_hilbert(
            wedge_degrees(cert.exponents, 1),
            wedge_degrees(rcert.exponents, 0), d_shift, arr.ell, dmax)
        deleted = arr.delete(h)
        oracle = [dim_Dp(deleted, 1, d) for d in range(dmax + 1)]
        predicted = [int(c) for c in pred.rational_coefficients()]
        if args.json:
            _emit_json({"predicted": predicted, "oracle": oracle})
        else:
            print("predicted:", "\t".join(map(str, predicted)))
            print("oracle:   ", "\t".join(map(str, oracle)))
        return 0 if predicted == oracle else 1
    if check == "psi":
        table = hilbert_table(arr, cutoff=dmax)
        series = psi_truncated_from_table(table)
        poly = promote_to_polynomial(series)
        if args.json:
            out = {"cutoff": dmax,
                   "promoted": poly is not None,
                   "psi": _poly_json(poly) if poly is not None else None}
            _emit_json(out)
        else:
            if poly is not None:
                print(_poly_human(poly))
            else:
                print("truncation only (no zero tail); raise --dmax")
        return 0 if poly is not None else 1
    # default: the dimension table
    table = hilbert_table(arr, cutoff=dmax)
    if args.json:
        _emit_json({"cutoff": dmax, "dims": table.dims[:pmax + 1]})
    else:
        print("p\\d\t" + "\t".join(str(d) for d in range(dmax + 1)))
        for p in range(pmax + 1):
            print("%d\t%s" % (p, "\t".join(map(str, table.dims[p]))))
    return 0


def _emit_check(args, label, rows):
    ok = all(not any(v) for v in rows.values())
    if args.json:
        _emit_json({label: {str(p): v for p, v in rows.items()}})
    else:
        for p in sorted(rows):
            print("p=%d\t%s" % (p, "\t".join(map(str, rows[p]))))
    return 0 if ok else 1


def cmd_builtin(args):
    if args.list:
        for name in BUILTIN_NAMES:
            print(name)
        return 0
    if not args.name:
        raise UsageError("builtin needs a NAME or --list")
    arr = builtin(args.name)
    sys.stdout.write(format_arrangement(arr))
    return 0


def cmd_verify(args):
    from .verify import run_all
    numbers = None
    if args.items:
        try:
            numbers = {int(tok) for tok in args.items.split(",")}
        except ValueError:
            raise UsageError("bad --items list %r" % args.items)
    results = run_all(numbers)
    failed = 0
    for item in results:
        status = "PASS" if item.passed else "FAIL"
        print("item %2d %-45s %s (%.1fs)"
              % (item.number, item.name, status, item.seconds))
        if not item.passed:
            failed += 1
            print("        %s" % item.detail)
    print("%d/%d items passed" % (len(results) - failed, len(results)))
    return 0 if failed == 0 else 1


# -----------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="arrinv",
        description="Exact invariants of central hyperplane arrangements.")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sp = subs.add_parser("charpoly", help="characteristic polynomial")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.add_argument("--betti", action="store_true")
    sp.set_defaults(func=cmd_charpoly)

    sp = subs.add_parser("lattice", help="intersection lattice with mu")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = subs.add_parser("freeness", help="inductive freeness certificate")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.add_argument("--budget", type=int, default=20000)
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_freeness)

    sp = subs.add_parser("st-poly",
                         help="bivariate Psi from the derivation modules")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.add_argument("--method", choices=("auto", "free", "generic"),
                    default="auto")
    sp.add_argument("--delete-hyperplane", metavar="H",
                    help="index or coefficient vector to delete first")
    sp.add_argument("--reduced", action="store_true",
                    help="emit the t=-1 specialization")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_st_poly)

    sp = subs.add_parser("conjectures", help="reduced-polynomial report")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.set_defaults(func=cmd_conjectures)

    sp = subs.add_parser("oracle", help="degreewise kernel computations")
    _add_input_args(sp)
    _add_format_args(sp)
    sp.add_argument("--pmax", type=int)
    sp.add_argument("--dmax", type=int)
    sp.add_argument("--check",
                    choices=("euler", "bseq", "teraoB", "psi", "fr"))
    sp.add_argument("--hyperplane", metavar="H")
    sp.set_defaults(func=cmd_oracle)

    sp = subs.add_parser("builtin", help="emit a builtin arrangement file")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_builtin)

    sp = subs.add_parser("verify-paper-examples",
                         help="run the acceptance suite")
    sp.add_argument("--items", metavar="N,N,...",
                    help="restrict to the listed item numbers")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize success paths
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ArrinvError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
