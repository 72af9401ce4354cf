"""Parameters of supersingular Hecke modules and the comparison with Galois parameters.

A supersingular module is recorded by (gamma, u2, weights): gamma the W-orbit
of a T(F_q)-character as a sorted exponent pair, u2 the scalar by which U^2
acts, and optionally the pair (k0, k1) of its weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, Irred, irred, iso_key
from .lmorphism import rho_of
from .satake import central_character_data, supersingular_points
from .setting import Setting
from .xscheme import iota_inverse


@dataclass(frozen=True)
class ModuleParams:
    gamma: tuple[int, int]
    u2: int
    weights: tuple[int, int] | None = None


def orbit(st: Setting, a: int, b: int) -> tuple[int, int]:
    m = st.q - 1
    return tuple(sorted((a % m, b % m)))


def gk_params(st: Setting, h: int) -> ModuleParams:
    """Parameters attached to ind(omega_{2f}^h) with 1 <= h <= q-1."""
    q = st.q
    if not 1 <= h <= q - 1:
        raise ValueError(f"h={h} out of range 1..{q - 1}")
    weights = (h - 1, q - h)
    if weights in ((0, 0), (q - 1, q - 1)):
        raise AssertionError(f"weights {weights} do not occur for supersingular modules")
    return ModuleParams(orbit(st, h - 1, 0), 1, weights)


def gk_twist(st: Setting, m: ModuleParams, eta: Character) -> ModuleParams:
    """Twist by omega^s unr(lam): gamma times (s, s), u2 times lam^2; weights unchanged."""
    B = st.big
    g = orbit(st, m.gamma[0] + eta.a, m.gamma[1] + eta.a)
    return ModuleParams(g, B.mul(m.u2, B.mul(eta.lam, eta.lam)), m.weights)


def params_from_L(st: Setting, rho: Irred) -> ModuleParams:
    """(gamma, u2) of the supersingular point whose Galois parameter is rho."""
    pt = iota_inverse(st, rho)
    target = iso_key(st, rho)
    matches = [s for s in supersingular_points(st, pt.n, pt.z2) if iso_key(st, rho_of(st, s)) == target]
    if len(matches) != 1:
        raise AssertionError(f"{len(matches)} supersingular points have parameter {rho}")
    gamma, u2 = central_character_data(st, matches[0])
    return ModuleParams(gamma, u2)


def gk_side(st: Setting, rho: Irred) -> ModuleParams:
    base = gk_params(st, rho.h)
    return gk_twist(st, base, Character(rho.s, rho.lam))


def compare_GK(st: Setting, rho: Irred) -> bool:
    ours = params_from_L(st, rho)
    theirs = gk_side(st, rho)
    return (ours.gamma, ours.u2) == (theirs.gamma, theirs.u2)


def enumerate_irreducibles(st: Setting, normalize: bool = False):
    """Every triple Irred{h, s, lam} with lam in the declared field.

    With normalize=True, one normal form per isomorphism class instead.
    """
    triples = [Irred(h, s, lam) for h in range(1, st.q) for s in range(st.q - 1) for lam in st.coeff_scalars()]
    if not normalize:
        return triples
    classes = {}
    for rho in triples:
        classes.setdefault(iso_key(st, rho), irred(st, rho.h, rho.s, rho.lam))
    return [classes[k] for k in sorted(classes)]
