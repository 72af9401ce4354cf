"""Mod-p characters and semisimple two-dimensional representations.

A level-1 character omega_f^a unr(lam) is stored as (a mod q-1, lam) with lam
a nonzero scalar of the storage field.  Frobenius convention: unr(lam) sends
geometric Frobenius to lam and omega_f(pi) = 1, so ind(omega_{2f}^h) (with its
normalizing unramified twist) has determinant omega_f^h on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setting import Setting
from .types_weights import InertialType, niveau1, niveau2


@dataclass(frozen=True, order=True)
class Character:
    a: int
    lam: int


@dataclass(frozen=True)
class Split:
    chi1: Character
    chi2: Character

    kind = "split"


@dataclass(frozen=True)
class Irred:
    """ind(omega_{2f}^h) tensor omega_f^s unr(lam)."""

    h: int
    s: int
    lam: int

    kind = "irred"


def character(st: Setting, a: int, lam: int) -> Character:
    if lam == 0:
        raise ValueError("unramified scalar must be nonzero")
    return Character(a % (st.q - 1), lam)


def _char_key(st: Setting, c: Character):
    return (c.a, st.big.log(c.lam))


def split(st: Setting, c1: Character, c2: Character) -> Split:
    c1 = character(st, c1.a, c1.lam)
    c2 = character(st, c2.a, c2.lam)
    if _char_key(st, c2) < _char_key(st, c1):
        c1, c2 = c2, c1
    return Split(c1, c2)


def is_q_primitive(q: int, h: int, n: int) -> bool:
    """True iff the {1,q,...,q^(n-1)}-orbit of h mod q^n-1 has n elements."""
    M = q**n - 1
    if not 1 <= h <= M - 1:
        raise ValueError(f"h={h} out of range 1..{M - 1}")
    orbit = {(h * q**i) % M for i in range(n)}
    return len(orbit) == n


def level2_exponent(st: Setting, h: int, s: int) -> int:
    q = st.q
    return (h + s * (q + 1)) % (q * q - 1)


def _representations(st: Setting, E: int):
    # (h, s) with 1 <= h <= q-1 and h + s(q+1) = E mod q^2-1
    q = st.q
    M = q * q - 1
    out = []
    for h in range(1, q):
        diff = (E - h) % M
        if diff % (q + 1) == 0:
            out.append((h, diff // (q + 1)))
    return out


def _canonical_lam(st: Setting, lam: int) -> int:
    B = st.big
    other = B.neg(lam)
    return lam if B.log(lam) <= B.log(other) else other


def irred(st: Setting, h: int, s: int, lam: int) -> Irred:
    """Normal form of ind(omega_{2f}^h) tensor omega_f^s unr(lam).

    h may be any q-primitive level-2 exponent; the result has 1 <= h <= q-1,
    the smallest level-2 exponent in its {1,q}-orbit that admits such a
    representation, and lam replaced by the canonical one of +-lam.
    """
    q = st.q
    M = q * q - 1
    if lam == 0:
        raise ValueError("unramified scalar must be nonzero")
    E = level2_exponent(st, h, s)
    if E % (q + 1) == 0:
        raise ValueError(f"level-2 exponent {E} is not q-primitive")
    for cand in sorted({E, (q * E) % M}):
        reps = _representations(st, cand)
        if reps:
            h0, s0 = reps[0]
            return Irred(h0, s0, _canonical_lam(st, lam))
    raise AssertionError("every primitive orbit has a representative with 1 <= h <= q-1")


def irred_from_level2(st: Setting, E: int, lam: int) -> Irred:
    return irred(st, E, 0, lam)


def det_rep(st: Setting, rho) -> Character:
    B = st.big
    if isinstance(rho, Split):
        return character(st, rho.chi1.a + rho.chi2.a, B.mul(rho.chi1.lam, rho.chi2.lam))
    return character(st, rho.h + 2 * rho.s, B.mul(rho.lam, rho.lam))


def twist(st: Setting, rho, eta: Character):
    B = st.big
    if isinstance(rho, Split):
        return split(
            st,
            Character(rho.chi1.a + eta.a, B.mul(rho.chi1.lam, eta.lam)),
            Character(rho.chi2.a + eta.a, B.mul(rho.chi2.lam, eta.lam)),
        )
    return irred(st, rho.h, rho.s + eta.a, B.mul(rho.lam, eta.lam))


def iso_equal(st: Setting, r1, r2) -> bool:
    """Isomorphism test straight from the classification, independent of the normal form."""
    B = st.big
    if type(r1) is not type(r2):
        return False
    if isinstance(r1, Split):
        pair1 = [(r1.chi1.a % (st.q - 1), r1.chi1.lam), (r1.chi2.a % (st.q - 1), r1.chi2.lam)]
        pair2 = [(r2.chi1.a % (st.q - 1), r2.chi1.lam), (r2.chi2.a % (st.q - 1), r2.chi2.lam)]
        return pair1 == pair2 or pair1 == pair2[::-1]
    q = st.q
    M = q * q - 1
    e1 = level2_exponent(st, r1.h, r1.s)
    e2 = level2_exponent(st, r2.h, r2.s)
    same_orbit = e2 in (e1, (q * e1) % M)
    return same_orbit and B.mul(r1.lam, r1.lam) == B.mul(r2.lam, r2.lam)


def iso_key(st: Setting, rho):
    """Hashable key that is equal exactly for isomorphic representations."""
    B = st.big
    if isinstance(rho, Split):
        return ("split",) + tuple(sorted([_char_key(st, rho.chi1), _char_key(st, rho.chi2)]))
    q = st.q
    M = q * q - 1
    e = level2_exponent(st, rho.h, rho.s)
    return ("irred", min(e, (q * e) % M), B.log(B.mul(rho.lam, rho.lam)))


def restrict_to_inertia(st: Setting, rho) -> InertialType:
    if isinstance(rho, Split):
        return niveau1(st, rho.chi1.a, rho.chi2.a)
    return niveau2(st, level2_exponent(st, rho.h, rho.s))


def fmt_rep(st: Setting, rho) -> str:
    if isinstance(rho, Split):
        parts = [f"w^{c.a}*unr({st.fmt_scalar(c.lam)})" for c in (rho.chi1, rho.chi2)]
        return " + ".join(parts)
    return f"ind(w2^{rho.h})*w^{rho.s}*unr({st.fmt_scalar(rho.lam)})"
