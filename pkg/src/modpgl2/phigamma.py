"""Mod-p Lubin-Tate (phi, Gamma)-modules over truncated Laurent series.

phi acts on k((t)) by t -> t^q (trivially on k), a unit u of o_F by
t -> [u](t) mod pi.  A module of dimension n is given by its phi-matrix A
(column j holds phi(e_j)) and a Gamma-evaluator u -> G(u) (column j holds
u(e_j)).  Scalars live in the storage field of the setting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith.padic import OFRing, binomial_power, fbar, headroom_exponent, lt_series_mod_pi, padic_exponent
from .arith.series import Laurent, PrecisionError, mat_det, mat_map, mat_mul
from .characters import is_q_primitive
from .setting import Setting

PSI_NORMALIZATIONS = ("canonical", "trace")


def ofring_for(st: Setting, K: int) -> OFRing:
    """Unramified o_F with residue field F_q."""
    return OFRing(st.p, K, f=st.f)


def sample_units(R: OFRing, count: int = 6, seed: int = 0) -> list:
    """Teichmuller lift of the generator, 1 + pi, 1 + pi^2, then seeded random units."""
    F = R.residue_field
    units = [R.teichmuller(F.zeta), R.add(R.one, R.pi), R.add(R.one, R.mul(R.pi, R.pi))]
    rng = random.Random(seed)
    while len(units) < count:
        units.append(R.random_unit(rng))
    return units


@dataclass
class PhiGammaModule:
    st: Setting
    R: OFRing
    N: int
    A: list
    exponents: list
    s: int = 0
    scalar: int = 1
    M: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.A)

    @property
    def field(self):
        return self.st.big

    def omega(self, u) -> int:
        """omega(u bar) in the storage field."""
        st = self.st
        return st.big.embed(self.R.residue_field, self.R.reduce(u))

    def substitution(self, u) -> Laurent:
        """[u](t) mod pi, coefficients in the storage field."""
        key = ("lt", tuple(u))
        if key not in self._cache:
            self._cache[key] = lt_series_mod_pi(self.R, u, self.N).embed(self.field)
        return self._cache[key]

    def fbar(self, u) -> Laurent:
        key = ("fbar", tuple(u))
        if key not in self._cache:
            self._cache[key] = fbar(self.R, u, self.N).embed(self.field)
        return self._cache[key]

    def act(self, u, x: Laurent) -> Laurent:
        """u(x): substitute t -> [u](t)."""
        return x.compose(self.substitution(u))

    def G(self, u, M: int | None = None) -> list:
        """Matrix of u, with the p-adic exponents reduced mod p^M."""
        M = self.M if M is None else M
        key = ("G", tuple(u), M)
        if key in self._cache:
            return self._cache[key]
        B = self.field
        mod = self.st.p**M
        w = self.fbar(u)
        if w.prec > mod:
            w = w.truncate(mod)
        base = B.pow(self.omega(u), self.s % (self.st.q - 1))
        n = self.dim
        G = [[Laurent.zero(B) for _ in range(n)] for _ in range(n)]
        for j, (num, den) in enumerate(self.exponents):
            e = padic_exponent(num, den, self.st.p, M)
            G[j][j] = binomial_power(w, e, mod).scale(base)
        self._cache[key] = G
        return G

    def phi_entry(self, x: Laurent) -> Laurent:
        return x.frobenius_t(self.st.q)


def build_irreducible_module(st: Setting, h: int, n: int, s: int = 0, lam: int = 1,
                             N: int = 44, K: int | None = None) -> PhiGammaModule:
    """Basis e_0..e_{n-1} with phi(e_j) = lam e_{j+1}, phi(e_{n-1}) = (-1)^(n-1) lam t^(-h(q-1)) e_0
    and u(e_j) = omega(u)^s fbar_u^(h q^j (q-1)/(q^n-1)) e_j."""
    q = st.q
    B = st.big
    if n == 1:
        if h < 0:
            raise ValueError("h must be nonnegative")
    elif not is_q_primitive(q, h, n):
        raise ValueError(f"h={h} is not q-primitive at level {n}")
    if lam == 0:
        raise ValueError("lam must be nonzero")
    M = headroom_exponent(st.p, N)
    K = N + 3 if K is None else K
    if K < N + 3:
        raise PrecisionError(f"o_F precision K={K} is below N+3={N + 3}")
    A = [[Laurent.zero(B) for _ in range(n)] for _ in range(n)]
    for j in range(n - 1):
        A[j + 1][j] = Laurent.monomial(B, 0, lam)
    corner = lam if n % 2 == 1 else B.neg(lam)
    A[0][n - 1] = Laurent.monomial(B, -h * (q - 1), corner)
    exps = [(h * q**j * (q - 1), q**n - 1) for j in range(n)]
    return PhiGammaModule(st, ofring_for(st, K), N, A, exps, s, lam, M)


def tensor_with_character(D: PhiGammaModule, s: int, lam: int) -> PhiGammaModule:
    """D tensor omega^s unr(lam): A times lam, each G(u) times omega(u)^s."""
    A = mat_map(D.A, lambda x: x.scale(lam))
    return PhiGammaModule(D.st, D.R, D.N, A, list(D.exponents), D.s + s, D.st.big.mul(D.scalar, lam), D.M)


def _residual(lhs, rhs):
    """(first differing degree or None, worst relative precision) over matrix entries."""
    worst_diff = None
    rel = None
    for row_l, row_r in zip(lhs, rhs):
        for a, b in zip(row_l, row_r):
            if a.is_zero() and a.exact and b.is_zero() and b.exact:
                continue
            d = a - b
            if not d.is_zero():
                worst_diff = d.val if worst_diff is None else min(worst_diff, d.val)
            ref = b if not b.is_zero() else a
            if d.prec is not None and not ref.is_zero():
                r = d.prec - ref.val
                rel = r if rel is None else min(rel, r)
    return worst_diff, rel


def check_semilinearity(D: PhiGammaModule, units) -> dict:
    """Cocycle G(uv) = G(u) u(G(v)) and commutation G(u) u(A) = A phi(G(u))."""
    R = D.R
    report = {"cocycle": [], "commutation": []}
    for u in units:
        Gu = D.G(u)
        lhs = mat_mul(Gu, mat_map(D.A, lambda x: D.act(u, x)))
        rhs = mat_mul(D.A, mat_map(Gu, D.phi_entry))
        diff, rel = _residual(lhs, rhs)
        report["commutation"].append({"ok": diff is None, "first_difference": diff, "relative_precision": rel})
    for u in units:
        for v in units[:3]:
            Guv = D.G(R.mul(u, v))
            rhs = mat_mul(D.G(u), mat_map(D.G(v), lambda x: D.act(u, x)))
            diff, rel = _residual(Guv, rhs)
            report["cocycle"].append({"ok": diff is None, "first_difference": diff, "relative_precision": rel})
    report["ok"] = all(r["ok"] for k in ("cocycle", "commutation") for r in report[k])
    precs = [r["relative_precision"] for k in ("cocycle", "commutation") for r in report[k]
             if r["relative_precision"] is not None]
    report["precision"] = min(precs) if precs else None
    return report


def exterior_det_check(D: PhiGammaModule, h: int, units) -> dict:
    """phi and u on x = t^h e_0 ^ ... ^ e_{n-1}: expected lam^n and omega(u)^(h + n s)."""
    st = D.st
    B = st.big
    n = D.dim
    t_h = Laurent.monomial(B, h)
    phi_x = D.phi_entry(t_h) * mat_det(D.A)
    phi_scalar = phi_x * Laurent.monomial(B, -h)
    expected_phi = Laurent.monomial(B, 0, B.pow(D.scalar, n))
    out = {"phi_ok": phi_scalar == expected_phi and phi_scalar.exact, "gamma": []}
    for u in units:
        ut = D.substitution(u)
        gx = (ut ** h) * mat_det(D.G(u)) * Laurent.monomial(B, -h)
        expected = Laurent.monomial(B, 0, B.pow(D.omega(u), (h + n * D.s) % (st.q - 1)))
        diff = gx - expected
        out["gamma"].append({"ok": diff.is_zero(), "precision": diff.prec})
    out["ok"] = out["phi_ok"] and all(g["ok"] for g in out["gamma"])
    return out


def fbar_in_one_plus_t(D: PhiGammaModule, units) -> bool:
    st = D.st
    for u in units:
        w = D.fbar(u)
        if w.valuation() != 0 or w.coeff(0) != 1:
            return False
        if not all(st.big.in_subfield(st.f, int(c)) for c in w.coeffs):
            return False
    return True


# psi

def psi(x: Laurent, q: int, normalization: str = "canonical") -> Laurent:
    """Left inverse of phi.

    canonical: sum a_j t^j -> sum a_{qj} t^j.
    trace: additionally adds sum a_{qj+q-1} t^j, i.e. psi(t^(q-1)) = 1, which is
    the reduction of q^-1 phi^-1 Tr for the special Lubin-Tate group over Q_p.
    """
    base = x.psi(q)
    if normalization == "canonical":
        return base
    if normalization == "trace":
        return base + x.shift(1).psi(q).shift(-1)
    raise ValueError(f"unknown normalization {normalization!r}")


def monomial_inverse(A):
    n = len(A)
    B = A[0][0].field
    inv = [[Laurent.zero(B) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            a = A[i][j]
            if not (a.is_zero() and a.exact):
                if not a.exact or len(a.coeffs) != 1 or not (inv[j][i].is_zero()):
                    raise ValueError("only monomial phi-matrices are inverted exactly")
                inv[j][i] = a.inverse()
    return inv


def psi_module(D: PhiGammaModule, coords, normalization: str = "canonical"):
    """psi on D in the basis e: coordinates psi(A^-1 c)."""
    Ainv = monomial_inverse(D.A)
    q = D.st.q
    col = mat_mul(Ainv, [[c] for c in coords])
    return [psi(row[0], q, normalization) for row in col]


@dataclass(frozen=True)
class SharpLattice:
    h: int
    q: int
    weights: tuple[int, int, int]
    shifts: tuple[int, int]
    i_exps: tuple[int, int, int]

    @property
    def h2(self) -> int:
        return self.i_exps[0] + self.i_exps[1] * self.q


def sharp_lattice(st: Setting, h: int) -> SharpLattice:
    """k[[t]] f_0 + k[[t]] f_1 with f_j = t^(h_j) e_j inside the module of ind(omega_{2f}^h)."""
    q = st.q
    if not 1 <= h <= q - 1:
        raise ValueError(f"h={h} out of range 1..{q - 1}")
    k = (h - 1, q - h, h - 1)
    i = tuple(q - 1 - k[2 - j] for j in range(3))
    return SharpLattice(h, q, k, (0, i[1]), i)


def lattice_coordinates(L: SharpLattice, coords):
    """Coordinates in f_0, f_1 of an element given in e_0, e_1."""
    return [c.shift(-sh) for c, sh in zip(coords, L.shifts)]


def in_lattice(L: SharpLattice, coords) -> bool:
    return all(c.is_zero() or c.val >= 0 for c in lattice_coordinates(L, coords))


def lattice_element(st: Setting, L: SharpLattice, j: int, a: int):
    """t^a f_j, in e-coordinates."""
    B = st.big
    coords = [Laurent.zero(B), Laurent.zero(B)]
    coords[j] = Laurent.monomial(B, a + L.shifts[j])
    return coords


def check_psi_stable(st: Setting, L: SharpLattice, D: PhiGammaModule | None = None,
                     normalization: str = "canonical") -> bool:
    """psi(D#) lies in D#.

    Every element of k[[t]] is sum_{i<q} t^i phi(g_i), so psi(sum a_j f_j) =
    sum g_i psi(t^i f_j) and it suffices to test t^i f_j for 0 <= i < q.
    """
    D = build_irreducible_module(st, L.h, 2) if D is None else D
    for j in range(2):
        for i in range(st.q):
            if not in_lattice(L, psi_module(D, lattice_element(st, L, j, i), normalization)):
                return False
    return True


def _dual_value(L: SharpLattice, idx: int, coords) -> int:
    """e'_idx(d): constant term of the f_idx-coordinate."""
    c = lattice_coordinates(L, coords)[idx]
    if not c.is_zero() and c.val < 0:
        raise ValueError("element is not in the lattice")
    return c.coeff(0)


def torsion_dual_relations(st: Setting, h: int, D: PhiGammaModule | None = None,
                           normalization: str = "canonical") -> dict:
    """Truth values of t^k1 phi(e'_0) = e'_1 and t^k0 phi(e'_1) = -e'_0.

    The dual Frobenius is phi(l)(d) = l(psi(d)) and t acts by (t l)(d) = l(t d).
    Both sides vanish on t^B D# for B beyond the tested range, so testing the
    k-basis t^a f_j of D#/t^B D# decides each relation.
    """
    B = st.big
    L = sharp_lattice(st, h)
    D = build_irreducible_module(st, h, 2) if D is None else D
    k0, k1, _ = L.weights
    bound = st.q * (max(k0, k1) + max(L.shifts) + 2)
    rel1 = rel2 = True
    for j in range(2):
        for a in range(bound):
            d = lattice_element(st, L, j, a)
            d1 = [c.shift(k1) for c in d]
            d0 = [c.shift(k0) for c in d]
            lhs1 = _dual_value(L, 0, psi_module(D, d1, normalization))
            lhs2 = _dual_value(L, 1, psi_module(D, d0, normalization))
            if lhs1 != _dual_value(L, 1, d):
                rel1 = False
            if lhs2 != B.neg(_dual_value(L, 0, d)):
                rel2 = False
    return {
        "h": h,
        "q": st.q,
        "normalization": normalization,
        "weights": [k0, k1],
        "t^k1 phi(e'0) = e'1": rel1,
        "t^k0 phi(e'1) = -e'0": rel2,
    }


def matrix_json(st: Setting, Mx) -> list:
    """Entries as {val, prec, coeffs} with coefficients as field codes."""
    out = []
    for row in Mx:
        out.append([
            {"val": int(x.valuation()) if not x.is_zero() else None,
             "prec": x.prec,
             "coeffs": [int(c) for c in x.coeffs]}
            for x in row
        ])
    return out
