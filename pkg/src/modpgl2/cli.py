"""Batch command-line front end.

Scalars are printed as z^k, the k-th power of the generator z of the storage
field F_{q^(2m)}; 0 is printed as 0.  On input, --z2 and --lambda accept z^k,
zeta^k (zeta the generator of F_q) or a plain integer (an element of F_p).

Exit codes: 0 success, 1 a verification or comparison failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .characters import fmt_rep
from .setting import Setting, setting

FORMATS = ("json", "csv", "md")

COLUMN_DOCS = {
    "types": "niveau, exps (exponent pair mod q-1, or level-2 orbit mod q^2-1), det",
    "xscheme": "n, z2, kind, i, coords|t|side, rho, type",
    "satake": "n, component, t, label (ordered pair), regular",
    "lmap": "n, z2, component, coords, x (XPoint), rho",
    "correspond": "n, component, coords, gamma, u2, x (XPoint), rho",
    "compare-gk": "h, s, lam, from_L (gamma, u2), from_GK (gamma, u2), ok",
    "serre": "r, s, digits, first_not_in, second_not_in_exp_r_minus_1, second_not_in_exp_r, membership_matched",
    "phigamma": "build: phi/gamma matrices as {val, prec, coeffs}; check: cocycle/commutation/det report; "
    "lattice: weights, shifts, h2, psi_stable, relations per normalization",
    "verify": "suite, check, ok, detail",
}


class UsageError(Exception):
    pass


def parse_scalar(st: Setting, text: str) -> int:
    B = st.big
    text = text.strip()
    try:
        if text.startswith("zeta^"):
            return st.zeta_pow(int(text[5:]))
        if text.startswith("z^"):
            return B.gen_pow(int(text[2:]))
        return B.from_int(int(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse scalar {text!r}") from exc


def coeff_scalar(st: Setting, text: str, name: str) -> int:
    a = parse_scalar(st, text)
    if a == 0:
        raise UsageError(f"{name} must be nonzero")
    if not st.in_coeff(a):
        raise UsageError(f"{name}={text} is not in F_(q^{st.m})")
    return a


# output

def _cell(v):
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return str(v)


def emit(rows, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
        return
    if isinstance(rows, dict):
        rows = [rows]
    cols = sorted({k for r in rows for k in r})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in cols])
        out.write(buf.getvalue())
        return
    out.write("| " + " | ".join(cols) + " |\n")
    out.write("|" + "---|" * len(cols) + "\n")
    for r in rows:
        out.write("| " + " | ".join(_cell(r.get(c)).replace("|", "\\|") for c in cols) + " |\n")


# commands

def cmd_types(st, args):
    from .types_weights import enumerate_types

    dets = [args.det] if args.det is not None else range(st.q - 1)
    rows = []
    for d in dets:
        for niveau in (1, 2):
            for tau in enumerate_types(st, d, niveau):
                rows.append({"det": d % (st.q - 1), "niveau": niveau, "exps": list(tau.exps)})
    return rows, 0


def _type_dict(tau):
    return {"niveau": tau.niveau, "exps": list(tau.exps)}


def cmd_xscheme(st, args):
    from .xscheme import enumerate_points, iota, orbit_to_type, position_dict

    z2 = coeff_scalar(st, args.z2, "z2")
    ns = [args.n] if args.n is not None else list(st.n_range())
    rows = []
    for n in ns:
        for pt in enumerate_points(st, n, z2):
            row = {"n": n, "z2": st.fmt_scalar(z2)}
            row.update(position_dict(st, pt.pos))
            row["rho"] = fmt_rep(st, iota(st, pt))
            row["type"] = _type_dict(orbit_to_type(st, pt))
            rows.append(row)
    return rows, 0


def cmd_satake(st, args):
    from .satake import components, enumerate_spoints, spoint_dict

    ns = [args.n] if args.n is not None else list(st.n_range())
    rows = []
    if args.points:
        z2 = coeff_scalar(st, args.z2, "z2")
        for n in ns:
            rows.extend(spoint_dict(st, s) for s in enumerate_spoints(st, n, z2))
        return rows, 0
    for n in ns:
        for c in components(st, n):
            rows.append({"n": n, "component": c.i, "t": list(c.t), "label": list(c.label), "regular": c.regular})
    return rows, 0


def cmd_lmap(st, args):
    from .lmorphism import L, rho_of
    from .satake import enumerate_spoints, spoint_dict
    from .xscheme import xpoint_dict

    z2 = coeff_scalar(st, args.z2, "z2")
    ns = [args.n] if args.n is not None else list(st.n_range())
    rows = []
    for n in ns:
        for s in enumerate_spoints(st, n, z2):
            d = spoint_dict(st, s)
            rows.append({"n": n, "z2": d["z2"], "component": d["component"], "coords": d["coords"],
                         "x": xpoint_dict(st, L(st, s)), "rho": fmt_rep(st, rho_of(st, s))})
    return rows, 0


def cmd_correspond(st, args):
    from .lmorphism import correspondence_rows
    from .satake import spoint_dict
    from .xscheme import xpoint_dict

    z2 = coeff_scalar(st, args.z2, "z2")
    rows = []
    for row in correspondence_rows(st, z2, supersingular_only=not args.all_points):
        d = spoint_dict(st, row.s)
        gamma, u2 = row.hecke
        rows.append({"n": row.s.n, "component": d["component"], "coords": d["coords"],
                     "gamma": list(gamma), "u2": st.fmt_scalar(u2),
                     "x": xpoint_dict(st, row.x), "rho": fmt_rep(st, row.rho)})
    return rows, 0


def cmd_compare_gk(st, args):
    from .heckegk import compare_GK, enumerate_irreducibles, gk_side, params_from_L

    rows = []
    status = 0
    for rho in enumerate_irreducibles(st):
        ours, theirs = params_from_L(st, rho), gk_side(st, rho)
        ok = compare_GK(st, rho)
        status |= 0 if ok else 1
        rows.append({"h": rho.h, "s": rho.s, "lam": st.fmt_scalar(rho.lam),
                     "from_L": [list(ours.gamma), st.fmt_scalar(ours.u2)],
                     "from_GK": [list(theirs.gamma), st.fmt_scalar(theirs.u2)], "ok": ok})
    return rows, status


def cmd_serre(st, args):
    from .types_weights import generic_writings, serre_report

    if st.f == 1:
        raise UsageError("the Serre-weight argument needs f > 1")
    rows = [serre_report(st, tw, args.reading == "cyclic", args.mode) for tw in generic_writings(st)]
    claims = ("first_not_in", "second_not_in_exp_r_minus_1", "second_not_in_exp_r", "membership_matched")
    status = 0 if all(r[c] for r in rows for c in claims) else 1
    return rows, status


def cmd_phigamma(st, args):
    from .phigamma import (
        PSI_NORMALIZATIONS,
        build_irreducible_module,
        check_psi_stable,
        check_semilinearity,
        exterior_det_check,
        matrix_json,
        sample_units,
        sharp_lattice,
        torsion_dual_relations,
    )

    if args.action == "lattice":
        hs = [args.h] if args.h is not None else range(1, st.q)
        rows = []
        for h in hs:
            lat = sharp_lattice(st, h)
            row = {"h": h, "weights": list(lat.weights[:2]), "shifts": list(lat.shifts), "h2": lat.h2,
                   "h2_is_h(q-1)": lat.h2 == h * (st.q - 1)}
            for norm in PSI_NORMALIZATIONS:
                rel = torsion_dual_relations(st, h, normalization=norm)
                row[f"psi_stable_{norm}"] = check_psi_stable(st, lat, normalization=norm)
                row[f"relations_{norm}"] = [v for k, v in rel.items() if "=" in k]
            rows.append(row)
        ok = all(r["psi_stable_canonical"] and r["h2_is_h(q-1)"] for r in rows)
        return rows, 0 if ok else 1
    h = 1 if args.h is None else args.h
    lam = coeff_scalar(st, args.lam, "lambda")
    if args.kprec is not None and args.kprec < args.tprec + 3:
        raise UsageError("--kprec must be at least --tprec + 3")
    D = build_irreducible_module(st, h, args.dim, args.s, lam, N=args.tprec, K=args.kprec)
    units = sample_units(D.R, args.units, args.seed)
    if args.action == "build":
        report = {"dim": args.dim, "h": h, "s": args.s, "lambda": st.fmt_scalar(lam), "tprec": args.tprec,
                  "phi": matrix_json(st, D.A),
                  "gamma": [{"unit": list(u), "matrix": matrix_json(st, D.G(u))} for u in units]}
        return report, 0
    semi = check_semilinearity(D, units)
    det = exterior_det_check(D, h, units)
    report = {"dim": args.dim, "h": h, "s": args.s, "lambda": st.fmt_scalar(lam),
              "semilinearity": semi, "exterior_det": det, "ok": semi["ok"] and det["ok"]}
    return report, 0 if report["ok"] else 1


def cmd_verify(st, args):
    from .verify import run_suite

    rows = run_suite(st, args.suite, args.seed)
    return rows, 0 if all(r["ok"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--f", type=int, default=1, help="residue degree, q = p^f")
    common.add_argument("--ext", type=int, default=2, dest="m",
                        help="coefficient field F_{q^m} (default m=2)")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="modpgl2", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, parents=[common], help=kw.pop("help"),
                           description=f"Columns: {COLUMN_DOCS[name]}")
        p.set_defaults(func=fn)
        return p

    p = add("types", cmd_types, help="tame inertial types by determinant")
    p.add_argument("--det", type=int)
    p = add("xscheme", cmd_xscheme, help="points of X(q) with their Galois parameters")
    p.add_argument("--n", type=int)
    p.add_argument("--z2", default="1")
    p = add("satake", cmd_satake, help="components (or points) of S(q)")
    p.add_argument("--n", type=int)
    p.add_argument("--z2", default="1")
    p.add_argument("--points", action="store_true")
    p = add("lmap", cmd_lmap, help="L on every point of S(q) over the coefficient field")
    p.add_argument("--n", type=int)
    p.add_argument("--z2", default="1")
    p = add("correspond", cmd_correspond, help="correspondence table (supersingular rows by default)")
    p.add_argument("--z2", default="1")
    p.add_argument("--all-points", action="store_true")
    add("compare-gk", cmd_compare_gk, help="Hecke parameters from L against the GK formula")
    p = add("serre", cmd_serre, help="Serre-weight non-membership report")
    p.add_argument("--mode", choices=("values", "formal"), default="values")
    p.add_argument("--reading", choices=("cyclic", "chain"), default="cyclic")
    p = add("phigamma", cmd_phigamma, help="(phi, Gamma)-modules: build, check, lattice")
    p.add_argument("action", choices=("build", "check", "lattice"))
    p.add_argument("--n", type=int, default=2, dest="dim", help="dimension")
    p.add_argument("--h", type=int)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--lambda", default="1", dest="lam")
    p.add_argument("--tprec", type=int, default=44)
    p.add_argument("--kprec", type=int)
    p.add_argument("--units", type=int, default=6)
    p = add("verify", cmd_verify, help="run the invariant suite")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        st = setting(args.p, args.f, args.m)
        rows, status = args.func(st, args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(rows, args.format, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
