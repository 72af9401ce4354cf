"""Tame inertial types, GL2(F_q)-weights and their digit dictionary.

Exponent conventions: a niveau-1 type is an unordered pair of powers of
omega_f (mod q-1); a niveau-2 type is the {1,q}-orbit of a power of
omega_{2f} (mod q^2-1) not divisible by q+1.  Since omega_{2f}^(q+1) = omega_f,
the determinant of the niveau-2 type with exponent H is omega_f^H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setting import Setting


@dataclass(frozen=True, order=True)
class InertialType:
    niveau: int
    exps: tuple[int, int]

    def det_exponent(self, st: Setting) -> int:
        if self.niveau == 1:
            return sum(self.exps) % (st.q - 1)
        return self.exps[0] % (st.q - 1)


def niveau1(st: Setting, a: int, b: int) -> InertialType:
    m = st.q - 1
    return InertialType(1, tuple(sorted((a % m, b % m))))


def niveau2(st: Setting, H: int) -> InertialType:
    q = st.q
    M = q * q - 1
    H %= M
    if H % (q + 1) == 0:
        raise ValueError(f"exponent {H} is not q-primitive at level 2")
    return InertialType(2, tuple(sorted((H, (q * H) % M))))


def basic_even_table(st: Setting):
    """Types of determinant omega_f: (niveau-1 list, niveau-2 list) indexed by r."""
    q = st.q
    n1, n2 = [], []
    for r in range(0, q, 2):
        s = -(r // 2)
        if r <= q - 3:
            n1.append((r, niveau1(st, r + 1 + s, s)))
        n2.append((r, niveau2(st, r + 1 + s * (q + 1))))
    return n1, n2


def basic_odd_table(st: Setting):
    """Types of trivial determinant: (niveau-1 list, niveau-2 list) indexed by r."""
    q = st.q
    n1, n2 = [], []
    for r in range(-1, q - 1, 2):
        s = -((r + 1) // 2)
        n1.append((r, niveau1(st, r + 1 + s, s)))
        if r >= 1:
            n2.append((r, niveau2(st, r + 1 + s * (q + 1))))
    return n1, n2


def twist_type(st: Setting, tau: InertialType, k: int) -> InertialType:
    """tau tensor omega_f^k."""
    if tau.niveau == 1:
        return niveau1(st, tau.exps[0] + k, tau.exps[1] + k)
    return niveau2(st, tau.exps[0] + k * (st.q + 1))


def enumerate_types(st: Setting, d: int, niveau: int) -> list[InertialType]:
    """Types with determinant omega_f^d, from the basic tables twisted by omega_f."""
    q = st.q
    d %= q - 1
    n = st.n_of_det(d)
    if n % 2 == 0:
        table, k = basic_even_table(st), n // 2
    else:
        table, k = basic_odd_table(st), (n + 1) // 2
    rows = table[0] if niveau == 1 else table[1]
    return sorted(twist_type(st, tau, k) for _, tau in rows)


# weights

@dataclass(frozen=True, order=True)
class Weight:
    """F(r) tensor det^s with 0 <= r <= q-1 and s mod q-1."""

    r: int
    s: int


def weight(st: Setting, r: int, s: int) -> Weight:
    if not 0 <= r <= st.q - 1:
        raise ValueError(f"r={r} out of range")
    return Weight(r, s % (st.q - 1))


def all_weights(st: Setting) -> list[Weight]:
    return [Weight(r, s) for r in range(st.q) for s in range(st.q - 1)]


def hw(st: Setting, w: Weight) -> tuple[int, int]:
    """Highest weight (r+s, s) mod q-1."""
    m = st.q - 1
    return ((w.r + w.s) % m, w.s % m)


def chain_weight_labels(st: Setting, parity: str, shift: int = 0) -> dict:
    """Weight pair (sigma, sigma') of each component of a chain, twisted by det^shift.

    Interior component i carries F(r) det^s(r) and F(q-3-r) det^(s(r)+r+1), with
    r = 2i, s(r) = -i on even chains and r = 2i-1, s(r) = -i on odd ones.  The two
    outer components of an odd chain carry a single weight, placed on the side
    whose Satake branch lands there: (None, F(q-2)) on the left and
    (F(q-2) det^((q-1)/2), None) on the right.
    """
    q, half = st.q, st.half

    def pair(r, s):
        return weight(st, r, s + shift), weight(st, q - 3 - r, s + r + 1 + shift)

    if parity == "even":
        return {i: pair(2 * i, -i) for i in range(half)}
    labels = {i: pair(2 * i - 1, -i) for i in range(1, half)}
    labels[0] = (None, weight(st, q - 2, shift))
    labels[half] = (weight(st, q - 2, half + shift), None)
    return labels


def digits(st: Setting, r: int) -> tuple[int, ...]:
    p = st.p
    return tuple((r // p**i) % p for i in range(st.f))


@dataclass(frozen=True)
class WeightDigits:
    digits: tuple[int, ...]
    s: int


def weight_to_digits(st: Setting, w: Weight) -> WeightDigits:
    return WeightDigits(digits(st, w.r), w.s)


def digits_to_weight(st: Setting, wd: WeightDigits) -> Weight:
    r = sum(c * st.p**i for i, c in enumerate(wd.digits))
    return weight(st, r, wd.s)


# niveau-2 types written as omega_{2f}^(r+1) tensor omega_f^s, and Serre-weight conditions

@dataclass(frozen=True)
class TypeWriting:
    """tau = ind-type of omega_{2f}^(r+1) twisted by omega_f^s, with -1 <= r <= q-2."""

    r: int
    s: int


def type_writings(st: Setting, tau: InertialType) -> list[TypeWriting]:
    """Both writings of a niveau-2 type, one per element of its {1,q}-orbit."""
    if tau.niveau != 2:
        raise ValueError("only niveau-2 types have writings")
    q = st.q
    M = q * q - 1
    out = []
    for E in tau.exps:
        for h in range(1, q):
            diff = (E - h) % M
            if diff % (q + 1) == 0:
                out.append(TypeWriting(h - 1, (diff // (q + 1)) % (q - 1)))
    return sorted(set(out), key=lambda w: (w.r, w.s))


def writing_type(st: Setting, tw: TypeWriting) -> InertialType:
    return niveau2(st, tw.r + 1 + tw.s * (st.q + 1))


def other_writing(st: Setting, tw: TypeWriting) -> TypeWriting:
    """omega_{2f}^(r+1) omega_f^s is isomorphic to omega_{2f}^(q-r) omega_f^(s+r)."""
    return TypeWriting(st.q - 1 - tw.r, (tw.s + tw.r) % (st.q - 1))


def shifted_digits(st: Setting, tw: TypeWriting) -> tuple[int, ...]:
    """(r_0, ..., r_{f-1}) with r+1 = sum (r_i + 1) p^i."""
    return tuple(d - 1 for d in digits(st, tw.r + 1))


def digits_generic(st: Setting, rd: tuple[int, ...]) -> bool:
    p = st.p
    return 1 <= rd[0] <= p - 2 and all(0 <= x <= p - 3 for x in rd[1:])


def is_generic(st: Setting, tau: InertialType) -> bool:
    """Genericity of a niveau-2 type, checked on both writings (they must agree)."""
    verdicts = {digits_generic(st, shifted_digits(st, tw)) for tw in type_writings(st, tau)}
    if len(verdicts) != 1:
        raise AssertionError(f"genericity of {tau} depends on the writing")
    return verdicts.pop()


# affine entries eps*x + c are stored as (eps, c)

def allowed_entries(st: Setting, i: int) -> list[tuple[int, int]]:
    p = st.p
    if i == 0:
        return [(1, 0), (1, -1), (-1, p - 2), (-1, p - 1)]
    return [(1, 0), (1, 1), (-1, p - 2), (-1, p - 3)]


def _linked(st: Setting, lam, cyclic: bool) -> bool:
    p, f = st.p, st.f
    for i in range(f):
        if i == f - 1 and not cyclic:
            break
        trigger = {(1, 0), (1, -1)} if i == 0 else {(1, 0), (1, 1)}
        if lam[i] in trigger and lam[(i + 1) % f] not in {(1, 0), (-1, p - 2)}:
            return False
    return True


def lambda_candidates_i_ii(st: Setting, cyclic: bool = True) -> list[tuple[tuple[int, int], ...]]:
    """Tuples satisfying the first two digit conditions (a superset of the true set)."""
    from itertools import product

    tuples = product(*(allowed_entries(st, i) for i in range(st.f)))
    return [lam for lam in tuples if _linked(st, lam, cyclic)]


def evaluate(lam, rd) -> tuple[int, ...]:
    return tuple(eps * x + c for (eps, c), x in zip(lam, rd))


def identity_tuple(st: Setting):
    return tuple((1, 0) for _ in range(st.f))


def membership_weight(st: Setting, tw: TypeWriting) -> Weight:
    """(r_0, ..., r_{f-1}) tensor det^s, attached to the identity tuple."""
    return digits_to_weight(st, WeightDigits(shifted_digits(st, tw), tw.s))


def translation_target(st: Setting, w: Weight, rd):
    """The digits of w read as x_i + c_i in the variables of the writing."""
    return tuple((1, a - x) for a, x in zip(digits(st, w.r), rd))


def matching_candidates(st: Setting, w: Weight, tw: TypeWriting, cyclic: bool = True,
                        mode: str = "values"):
    """Candidates that could produce w from the writing tw.

    mode "values" compares lam_i(r_i) with the digits of w, the sound test.
    mode "formal" compares lam with x_i + (a_i - r_i) as affine functions.
    """
    rd = shifted_digits(st, tw)
    target = digits(st, w.r)
    cands = lambda_candidates_i_ii(st, cyclic)
    if mode == "values":
        return [lam for lam in cands if evaluate(lam, rd) == target]
    if mode == "formal":
        sym = translation_target(st, w, rd)
        return [lam for lam in cands if lam == sym]
    raise ValueError(f"unknown mode {mode!r}")


def not_in_W_tau(st: Setting, w: Weight, tw: TypeWriting, cyclic: bool = True,
                 mode: str = "values") -> bool:
    """True when no (i)-(ii) candidate matches w, which proves w is not a Serre weight of tau."""
    if st.f == 1:
        raise ValueError("the non-membership argument needs f > 1")
    if not digits_generic(st, shifted_digits(st, tw)):
        raise ValueError(f"type written as {tw} is not generic")
    return not matching_candidates(st, w, tw, cyclic, mode)


def diagonal_pair_weights(st: Setting, tw: TypeWriting, shift: int) -> tuple[Weight, Weight]:
    """F(r) tensor det^s and F(q-1-r) tensor det^(s+r+shift)."""
    q = st.q
    return weight(st, tw.r, tw.s), weight(st, q - 1 - tw.r, tw.s + tw.r + shift)


def generic_writings(st: Setting) -> list[TypeWriting]:
    out = []
    for r in range(0, st.q - 1):
        tw = TypeWriting(r, 0)
        if digits_generic(st, shifted_digits(st, tw)):
            out.extend(TypeWriting(r, s) for s in range(st.q - 1))
    return out


def serre_report(st: Setting, tw: TypeWriting, cyclic: bool, mode: str) -> dict:
    """The two non-membership claims and the membership claim for one writing.

    The first weight is tested in the writing tw, the second in the other
    writing, as in the argument being replayed.
    """
    tw2 = other_writing(st, tw)
    first, _ = diagonal_pair_weights(st, tw, 0)
    row = {
        "r": tw.r,
        "s": tw.s,
        "digits": list(shifted_digits(st, tw)),
        "first_not_in": not_in_W_tau(st, first, tw, cyclic, mode),
    }
    for shift, key in ((-1, "second_not_in_exp_r_minus_1"), (0, "second_not_in_exp_r")):
        _, second = diagonal_pair_weights(st, tw, shift)
        row[key] = not_in_W_tau(st, second, tw2, cyclic, mode)
    ident = identity_tuple(st)
    row["membership_matched"] = ident in matching_candidates(
        st, membership_weight(st, tw), tw, cyclic, mode
    )
    return row
