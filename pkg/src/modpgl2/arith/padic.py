"""The ring o_F / p^K for a monogenic o_F, and Lubin-Tate multiplication series.

o_F = Z_p[x]/(g) with g monic: either a lift of the Conway polynomial of the
residue field (unramified, uniformizer p) or an Eisenstein polynomial
(totally ramified, uniformizer x).  Elements are tuples of integers mod p^K.

The Lubin-Tate group is the special one with Frobenius series
phi(t) = pi*t + t^q.  [a](t) is built degree by degree; each new coefficient
is an exact division by pi, so coefficient k is only known modulo
pi^(e*K - k + 1).  The recursion tracks that and refuses to hand out a
coefficient whose residue mod pi is not determined.
"""

from __future__ import annotations

from math import comb

from .conway import conway_polynomial
from .fields import GF, get_field
from .series import Laurent, PrecisionError


class OFRing:
    """o_F / p^K."""

    def __init__(self, p: int, K: int, f: int = 1, eisenstein: tuple[int, ...] | None = None):
        self.p = p
        self.K = K
        self.mod = p**K
        if eisenstein is not None:
            g = tuple(int(c) for c in eisenstein)
            e = len(g)
            if g[0] % p or g[0] % (p * p) == 0 or any(c % p for c in g):
                raise ValueError("polynomial is not Eisenstein")
            self.e, self.f = e, 1
            self.g = g
            self.ramified = True
        else:
            self.e, self.f = 1, f
            self.g = tuple(conway_polynomial(p, f))
            self.ramified = False
        self.deg = len(self.g)
        self.q = p**self.f
        self.residue_field: GF = get_field(p, self.f)
        self.zero = (0,) * self.deg
        self.one = (1,) + (0,) * (self.deg - 1)
        if self.ramified:
            self.pi = (0, 1) + (0,) * (self.deg - 2) if self.deg > 1 else (p,)
        else:
            self.pi = (p,) + (0,) * (self.deg - 1)
        # pi-adic digits available
        self.pi_prec = self.e * K

    def __repr__(self):
        kind = "ramified" if self.ramified else "unramified"
        return f"OFRing(p={self.p}, K={self.K}, {kind}, g={self.g})"

    def elem(self, coords) -> tuple:
        c = [int(x) % self.mod for x in coords] + [0] * self.deg
        return tuple(c[: self.deg])

    def from_int(self, n: int) -> tuple:
        return self.elem([n])

    def add(self, a, b):
        m = self.mod
        return tuple((x + y) % m for x, y in zip(a, b))

    def sub(self, a, b):
        m = self.mod
        return tuple((x - y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.mod
        return tuple((-x) % m for x in a)

    def mul(self, a, b):
        d, m, g = self.deg, self.mod, self.g
        if d == 1:
            return ((a[0] * b[0]) % m,)
        res = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        for k in range(2 * d - 2, d - 1, -1):
            c = res[k]
            if c:
                for i in range(d):
                    res[k - d + i] -= c * g[i]
        return tuple(r % m for r in res[:d])

    def scal(self, n: int, a):
        m = self.mod
        return tuple((n * x) % m for x in a)

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def reduce(self, a) -> int:
        """Residue class in the residue field (as a field code)."""
        if self.ramified:
            return a[0] % self.p
        return sum((c % self.p) * self.p**i for i, c in enumerate(a))

    def is_unit(self, a) -> bool:
        return self.reduce(a) != 0

    def lift(self, code: int) -> tuple:
        """Naive coordinate lift of a residue field element."""
        if self.ramified:
            return self.elem([code])
        return self.elem([(code // self.p**i) % self.p for i in range(self.f)])

    def inv(self, a):
        r = self.reduce(a)
        if r == 0:
            raise ZeroDivisionError("not a unit")
        y = self.lift(self.residue_field.inv(r))
        two = self.from_int(2)
        for _ in range(self.K.bit_length() + 1):
            y = self.mul(y, self.sub(two, self.mul(a, y)))
        return y

    def div_pi(self, a):
        """Exact division by the uniformizer (raises if a is not divisible)."""
        p = self.p
        if self.reduce(a) != 0:
            raise PrecisionError("element is not divisible by the uniformizer")
        if not self.ramified:
            return tuple(x // p for x in a)
        # x^e = -(g_{e-1} x^{e-1} + ... + g_0) with g_0 = p*u0, so
        # p = -x (x^{e-1} + g_{e-1} x^{e-2} + ... + g_1) / u0
        g = self.g
        u0 = (g[0] // p) % self.mod
        cof = list(g[1:]) + [1]  # x^{e-1} + g_{e-1}x^{e-2} + ... + g_1
        y0p = a[0] // p
        t = self.mul(self.elem([y0p]), self.elem(cof))
        t = self.neg(self.mul(t, self.inv(self.elem([u0]))))
        rest = tuple(list(a[1:]) + [0])
        return self.add(t, rest)

    def teichmuller(self, code: int) -> tuple:
        """Teichmuller lift of a residue field element."""
        if code == 0:
            return self.zero
        x = self.lift(code)
        for _ in range(self.K + 1):
            x = self.pow(x, self.q)
        return x

    def random_unit(self, rng) -> tuple:
        """A unit drawn with a random.Random instance."""
        while True:
            a = self.elem([rng.randrange(self.mod) for _ in range(self.deg)])
            if self.is_unit(a):
                return a


def lt_mult_series(R: OFRing, a, N: int) -> list:
    """Coefficients c_0..c_{N-1} of [a](t) in o_F/p^K.

    Solves [a](pi t + t^q) = pi [a](t) + [a](t)^q degree by degree.  Requires
    a unit or a = pi and enough pi-adic headroom: coefficient d is known mod
    pi^(e*K - d + 1), which must stay >= 1 for d < N.
    """
    q = R.q
    if not (R.is_unit(a) or tuple(a) == R.pi):
        raise ValueError("[a] is only built for units and the uniformizer")
    if R.K < N + 2:
        raise PrecisionError(f"o_F precision K={R.K} is too small for t-precision N={N}")
    if tuple(a) == R.pi:
        c = [R.zero] * N
        if N > 1:
            c[1] = R.pi
        if q < N:
            c[q] = R.add(c[q], R.one)
        return c
    c = [R.zero] * N
    if N < 2:
        return c
    c[1] = R.elem(a)
    # pw[k][d] = coefficient of t^d in [a](t)^k, filled lazily degree by degree
    pw = [None] + [[R.zero] * N for _ in range(q)]
    pw[1][1] = c[1]
    pi_pows = [R.one]
    for _ in range(N):
        pi_pows.append(R.mul(pi_pows[-1], R.pi))
    for d in range(2, N):
        # powers at degree d for k >= 2 only involve c_j with j <= d - 1
        for k in range(2, q + 1):
            if k > d:
                break
            acc = R.zero
            prev = pw[k - 1]
            for i in range(k - 1, d):
                cj = c[d - i]
                if any(cj) and any(prev[i]):
                    acc = R.add(acc, R.mul(prev[i], cj))
            pw[k][d] = acc
        # left side: sum over j + k(q-1) = d, 1 <= j < d, k >= 1, of c_j C(j,k) pi^(j-k)
        lhs = R.zero
        k = 1
        while k * (q - 1) < d:
            j = d - k * (q - 1)
            if j >= k and any(c[j]):
                term = R.mul(c[j], R.scal(comb(j, k), pi_pows[j - k]))
                lhs = R.add(lhs, term)
            k += 1
        E = R.sub(lhs, pw[q][d])
        # c_d (pi - pi^d) = E
        quotient = R.div_pi(E)
        c[d] = R.mul(quotient, R.inv(R.sub(R.one, pi_pows[d - 1])))
        pw[1][d] = c[d]
    return c


def lt_series_mod_pi(R: OFRing, a, N: int) -> Laurent:
    """[a](t) mod (pi, t^N) as a series over the residue field."""
    coeffs = lt_mult_series(R, a, N)
    return Laurent(R.residue_field, [R.reduce(x) for x in coeffs], 0, N)


def fbar(R: OFRing, u, N: int) -> Laurent:
    """omega(u) t / ([u](t) mod pi), an element of 1 + t F_q[[t]] known mod t^N."""
    if not R.is_unit(u):
        raise ValueError("fbar needs a unit")
    lt = lt_series_mod_pi(R, u, N + 1)
    unit_part = lt.shift(-1)
    return unit_part.inverse().scale(R.reduce(u))


def padic_exponent(num: int, den: int, p: int, m: int) -> int:
    """The residue mod p^m of the p-adic integer num/den (den prime to p)."""
    mod = p**m
    if den % p == 0:
        raise ValueError("denominator must be prime to p")
    return (num * pow(den, -1, mod)) % mod


def headroom_exponent(p: int, N: int) -> int:
    """Smallest m with p^m >= N."""
    m = 0
    while p**m < N:
        m += 1
    return m


def binomial_power(w: Laurent, s: int, p_power: int) -> Laurent:
    """w^s for w in 1 + tF[[t]], with s an integer representative modulo p_power.

    Valid modulo t^min(prec(w), p_power): (1+v)^(p^m) = 1 + v^(p^m) in
    characteristic p, so the residue of s mod p^m determines the result there.
    """
    if w.valuation() != 0 or w.coeff(0) != 1:
        raise ValueError("binomial_power needs a series with constant term 1")
    n = w.prec if w.prec is not None else p_power
    if n > p_power:
        raise PrecisionError(f"precision {n} exceeds the exponent headroom {p_power}")
    if s < 0:
        raise ValueError("pass the nonnegative residue of the exponent")
    base = w.truncate(n) if w.prec is None else w
    return base**s if s else Laurent(w.field, [1], 0, n)


def reduction_is_homomorphism(R: OFRing, a, b) -> bool:
    F = R.residue_field
    s = R.reduce(R.add(a, b)) == F.add(R.reduce(a), R.reduce(b))
    m = R.reduce(R.mul(a, b)) == F.mul(R.reduce(a), R.reduce(b))
    return s and m
