"""Invariant checks run by the ``verify`` command, grouped by module.

Each check yields (name, ok, detail).  Sizes scale with q; everything is
exhaustive over the declared coefficient field except where a sample is noted.
"""

from __future__ import annotations

import random

from .arith.padic import OFRing, lt_series_mod_pi
from .arith.series import Laurent
from .characters import Character, det_rep, iso_key, twist
from .heckegk import compare_GK, enumerate_irreducibles, gk_params, params_from_L
from .lmorphism import L, direct_rho, rho_of, supersingular_bijection, weight_label_rows
from .phigamma import (
    build_irreducible_module,
    check_psi_stable,
    check_semilinearity,
    exterior_det_check,
    fbar_in_one_plus_t,
    psi,
    sample_units,
    sharp_lattice,
    torsion_dual_relations,
)
from .satake import components, enumerate_spoints, supersingular_points, twist_action_s
from .setting import Setting
from .types_weights import (
    all_weights,
    digits_to_weight,
    enumerate_types,
    generic_writings,
    hw,
    serre_report,
    weight_to_digits,
)
from .xscheme import closed_positions, enumerate_points, iota, iota_inverse, twist_action

SUITES = ("arith", "types", "xscheme", "satake", "lmorphism", "heckegk", "serre", "phigamma")


def _group(st: Setting, rng: random.Random, limit: int):
    scalars = list(st.coeff_scalars())
    gs = [(k, z) for k in range(st.q - 1) for z in scalars]
    if len(gs) > limit:
        gs = rng.sample(gs, limit)
    return gs


def check_arith(st: Setting, rng: random.Random):
    R = OFRing(st.p, 22, f=st.f)
    N = 20
    ok = True
    for _ in range(5):
        a, b = R.random_unit(rng), R.random_unit(rng)
        sa, sb = lt_series_mod_pi(R, a, N), lt_series_mod_pi(R, b, N)
        sab = lt_series_mod_pi(R, R.mul(a, b), N)
        ok &= sa.compose(sb).equal_to(sab, N) and sb.compose(sa).equal_to(sab, N)
        inv = lt_series_mod_pi(R, R.inv(a), N)
        ok &= sa.compose(inv).equal_to(Laurent.monomial(R.residue_field, 1), N)
    yield "lubin-tate [a][b] = [ab], [u][u^-1] = t", ok, f"mod (pi, t^{N})"
    C = st.coeff
    z = C.zeta
    orbit = [z]
    for _ in range(st.m):
        orbit.append(C.frobenius(orbit[-1], st.f))
    order_ok = orbit[st.m] == z and len(set(orbit[: st.m])) == st.m
    zq = C.embed(st.fq, st.fq.zeta)
    yield "q-Frobenius has order m and fixes zeta", order_ok and C.frobenius(zq, st.f) == zq, ""


def check_types(st: Setting, rng: random.Random):
    q = st.q
    ok = True
    tot1 = tot2 = 0
    for d in range(q - 1):
        n = st.n_of_det(d)
        c1, c2 = len(set(enumerate_types(st, d, 1))), len(set(enumerate_types(st, d, 2)))
        tot1, tot2 = tot1 + c1, tot2 + c2
        want = ((q - 1) // 2, (q + 1) // 2) if n % 2 == 0 else ((q + 1) // 2, (q - 1) // 2)
        ok &= (c1, c2) == want
    yield "type counts per determinant", ok, ""
    yield "type totals", tot1 == tot2 == (q * q - q) // 2, f"{tot1}, {tot2}"
    ws = all_weights(st)
    yield "digit dictionary is a bijection", all(digits_to_weight(st, weight_to_digits(st, w)) == w for w in ws), ""
    images = {}
    for w in ws:
        if w.r <= q - 2:
            images.setdefault(hw(st, w), []).append(w)
    yield "hw injective for r <= q-2", all(len(v) == 1 for v in images.values()), ""


def check_xscheme(st: Setting, rng: random.Random):
    B = st.big
    scalars = list(st.coeff_scalars())
    bij = sign = comm = True
    for n in st.n_range():
        for z2 in st.fq_scalars():
            pts = enumerate_points(st, n, z2)
            keys = {iso_key(st, iota(st, pt)) for pt in pts}
            bij &= len(keys) == len(pts)
            bij &= all(iota_inverse(st, iota(st, pt)) == pt for pt in pts)
            r = st.canonical_sqrt(z2)
            for pt in pts:
                other = iota(st, pt, B.neg(r))
                sign &= iso_key(st, other) == iso_key(st, twist(st, iota(st, pt), Character(0, B.neg(1))))
    yield "iota injective with closed-form inverse", bij, ""
    yield "root signs differ by unr(-1)", sign, ""
    gs = _group(st, rng, 40)
    for n in st.n_range():
        pts = enumerate_points(st, n, 1)
        for pt in rng.sample(pts, min(len(pts), 30)):
            for g in gs:
                lhs = iota(st, twist_action(st, g, pt))
                rhs = twist(st, iota(st, pt), Character(g[0], g[1]))
                comm &= iso_key(st, lhs) == iso_key(st, rhs)
    yield "iota intertwines the twisting actions", comm, "sampled"
    counts = all(len(closed_positions(st, n)) == len(enumerate_types(st, st.d_of(n), 2)) for n in st.n_range())
    yield "closed points per fiber = niveau-2 count", counts, ""


def check_satake(st: Setting, rng: random.Random):
    q = st.q
    pattern = True
    for n in st.n_range():
        comps = components(st, n)
        if n % 2 == 0:
            pattern &= len(comps) == (q + 1) // 2
            pattern &= [c.regular for c in comps] == [False] + [True] * ((q - 3) // 2) + [False]
        else:
            pattern &= len(comps) == (q - 1) // 2 and all(c.regular for c in comps)
    yield "component counts and regularity", pattern, ""
    B = st.big
    gs = _group(st, rng, 20)
    action = True
    for n in st.n_range():
        for s in rng.sample(enumerate_spoints(st, n, 1), 10):
            for g in gs:
                for h in gs[:5]:
                    gh = ((g[0] + h[0]) % (q - 1), B.mul(g[1], h[1]))
                    action &= twist_action_s(st, g, twist_action_s(st, h, s)) == twist_action_s(st, gh, s)
    yield "twisting is a group action", action, "sampled"
    counts = all(len(supersingular_points(st, n, 1)) == len(enumerate_types(st, st.d_of(n), 2)) for n in st.n_range())
    yield "supersingular points = niveau-2 count", counts, ""


def check_lmorphism(st: Setting, rng: random.Random):
    B = st.big
    gs = _group(st, rng, 30)
    equiv = rule = roots = True
    for n in st.n_range():
        for s in enumerate_spoints(st, n, 1):
            x = L(st, s)
            rule &= iso_key(st, rho_of(st, s)) == iso_key(st, direct_rho(st, s))
            roots &= iso_key(st, rho_of(st, s, B.neg(1))) == iso_key(st, rho_of(st, s))
            for g in rng.sample(gs, min(5, len(gs))):
                equiv &= L(st, twist_action_s(st, g, s)) == twist_action(st, g, x)
    yield "L equivariant", equiv, "sampled group elements"
    yield "base rules + transport = direct rule", rule, ""
    yield "parameter independent of the root", roots, ""
    bij = True
    for z2 in st.fq_scalars():
        try:
            bij &= len(supersingular_bijection(st, z2)) == (st.q ** 2 - st.q) // 2
        except AssertionError:
            bij = False
    yield "supersingular bijection", bij, ""
    rows = [row for n in st.n_range() for row in weight_label_rows(st, n)]
    yield "weight labels: hw matches the Satake line label", all(r["match"] for r in rows), f"{len(rows)} lines"


def check_heckegk(st: Setting, rng: random.Random):
    irr = enumerate_irreducibles(st)
    if len(irr) > 2000:
        irr = rng.sample(irr, 2000)
    yield "GK comparison", all(compare_GK(st, r) for r in irr), f"{len(irr)} triples"
    yield "u2 = determinant scalar", all(params_from_L(st, r).u2 == det_rep(st, r).lam for r in irr[:300]), ""
    yield "gamma = hw(F(h-1))", all(gk_params(st, h).gamma == tuple(sorted(hw(st, _w(st, h - 1)))) for h in range(1, st.q)), ""


def _w(st, r):
    from .types_weights import weight

    return weight(st, r, 0)


def check_serre(st: Setting, rng: random.Random):
    if st.f == 1:
        yield "serre non-membership", True, "skipped: needs f > 1"
        return
    for mode in ("values", "formal"):
        for cyclic in (True, False):
            rows = [serre_report(st, tw, cyclic, mode) for tw in generic_writings(st)]
            keys = [k for k in rows[0] if k not in ("r", "s", "digits")] if rows else []
            bad = [r for r in rows if not all(r[k] for k in keys)]
            reading = "cyclic" if cyclic else "chain"
            yield f"serre {mode} {reading}", not bad, f"{len(bad)} of {len(rows)} writings fail"


def check_phigamma(st: Setting, rng: random.Random):
    q = st.q
    ok_semi = ok_det = ok_fbar = True
    for n, h in ((1, 1), (2, 1), (2, q - 1)):
        D = build_irreducible_module(st, h, n)
        units = sample_units(D.R)
        rep = check_semilinearity(D, units)
        ok_semi &= rep["ok"] and rep["precision"] >= 40
        ok_det &= exterior_det_check(D, h, units)["ok"]
        ok_fbar &= fbar_in_one_plus_t(D, units)
    yield "cocycle and commutation", ok_semi, "relative precision >= 40"
    yield "top exterior power scalars", ok_det, ""
    yield "fbar in 1 + t F_q[[t]]", ok_fbar, ""
    F = st.big
    x = Laurent(F, [rng.randrange(F.order) for _ in range(30)], -3, 27)
    yield "psi phi = id", psi(x.frobenius_t(q), q) == x, ""
    stable = all(check_psi_stable(st, sharp_lattice(st, h)) for h in range(1, q))
    yield "sharp lattice psi-stable", stable, ""
    for norm in ("canonical", "trace"):
        pats = {tuple(v for k, v in torsion_dual_relations(st, h, normalization=norm).items() if "=" in k)
                for h in range(1, q)}
        yield f"torsion-dual pattern constant ({norm})", len(pats) == 1, str(sorted(pats))


CHECKS = {
    "arith": check_arith,
    "types": check_types,
    "xscheme": check_xscheme,
    "satake": check_satake,
    "lmorphism": check_lmorphism,
    "heckegk": check_heckegk,
    "serre": check_serre,
    "phigamma": check_phigamma,
}


def run_suite(st: Setting, suite: str = "all", seed: int = 0):
    names = SUITES if suite == "all" else (suite,)
    rows = []
    for name in names:
        rng = random.Random(seed)
        for check, ok, detail in CHECKS[name](st, rng):
            rows.append({"suite": name, "check": check, "ok": bool(ok), "detail": detail})
    return rows
