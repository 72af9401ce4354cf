"""The morphism L: S(q) -> X(q), its composite with the Galois parametrization,
and the supersingular bijection.

L is built from the two base fibers (n = 0 and n = q-2, z2 = 1) and transported
to the other fibers with g = (zeta^sigma_n, r(z2)).  ``direct_rho`` is a second,
fiber-by-fiber rule used to check that bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, irred, iso_key, split
from .satake import (
    NonRegular,
    Regular,
    SPoint,
    central_character_data,
    component,
    components,
    is_supersingular,
    supersingular_points,
    twist_action_s,
)
from .setting import Setting
from .types_weights import chain_weight_labels, hw
from .xscheme import (
    InfinityEnd,
    Node,
    OriginEnd,
    Outer,
    Smooth,
    XPoint,
    base_n,
    iota,
    resolve_root,
    sigma,
)


def _L_base(st: Setting, s: SPoint):
    """Position on the base chain for a point of a base fiber."""
    B = st.big
    L = st.half
    i, c = s.i, s.coords
    if s.n % 2 == 0:
        if isinstance(c, NonRegular):
            if c.z1 == 0:
                return OriginEnd() if i == 0 else InfinityEnd()
            return Smooth(0, c.z1) if i == 0 else Smooth(L - 1, B.inv(c.z1))
        if c.x == 0 and c.y == 0:
            return Node(i)
        if c.x:
            return Smooth(i, c.x)
        return Smooth(i - 1, B.inv(c.y))
    if c.x == 0 and c.y == 0:
        return Node(i)
    if c.x:
        if i == L:
            return Outer("right", B.add(c.x, B.inv(c.x)))
        return Smooth(i, c.x)
    if i == 1:
        return Outer("left", B.add(c.y, B.inv(c.y)))
    return Smooth(i - 1, B.inv(c.y))


def L(st: Setting, s: SPoint, root: int | None = None) -> XPoint:
    """L(s) for the chosen square root of z2 (default: the canonical one)."""
    B = st.big
    r = resolve_root(st, s.z2, root)
    k = sigma(st, s.n)
    base = twist_action_s(st, ((-k) % (st.q - 1), B.inv(r)), s)
    if base.n != base_n(st, s.n) or base.z2 != 1:
        raise AssertionError("transport did not land on the base fiber")
    return XPoint(s.n, s.z2, _L_base(st, base))


def script_L(st: Setting, s: SPoint, root: int | None = None) -> XPoint:
    """L precomposed with the Satake identification, which is the identity on points here."""
    return L(st, s, root)


def rho_of(st: Setting, s: SPoint, root: int | None = None):
    """Galois parameter of s; the two choices of root give isomorphic answers."""
    return iota(st, L(st, s, root), root)


def direct_rho(st: Setting, s: SPoint):
    """Galois parameter of s read straight off the component label.

    A nonzero coordinate c attached to the torus character (a, b) gives
    omega^(a+1) unr(c) + omega^b unr(z2/c); a supersingular point gives the
    irreducible ind(omega_2^(a-b+1)) omega^b unr(sqrt z2).
    """
    B = st.big
    m = st.q - 1
    a, b = component(st, s.n, s.i).label
    c = s.coords
    if is_supersingular(s):
        return irred(st, (a - b) % m + 1, b, st.canonical_sqrt(s.z2))
    if isinstance(c, NonRegular):
        val = c.z1
    elif c.x:
        val = c.x
    else:
        val, a, b = c.y, b, a
    return split(st, Character(a + 1, val), Character(b, B.div(s.z2, val)))


def branch_landings(st: Setting, n: int) -> list[dict]:
    """Where each line of each Satake component of fiber n goes under L (z2 = 1).

    A regular component with torus label (a, b) has an x-line labelled (a, b)
    and a y-line labelled (b, a); a non-regular one has the z1-line.  The chart is read
    off by scaling: if L(c) and L(zeta c) sit at v and zeta v the line lands
    around 0, if at v and v/zeta around infinity.
    """
    B = st.big
    c = B.zeta
    c2 = B.mul(c, c)
    out = []
    for comp in components(st, n):
        a, b = comp.label
        if comp.regular:
            lines = (("x", (a, b), lambda v: Regular(v, 0)), ("y", (b, a), lambda v: Regular(0, v)))
        else:
            lines = (("z1", (a, b), NonRegular),)
        for name, label, make in lines:
            p1 = L(st, SPoint(n, 1, comp.i, make(c))).pos
            p2 = L(st, SPoint(n, 1, comp.i, make(c2))).pos
            if isinstance(p1, Outer):
                chain_index, side = (0 if p1.side == "left" else st.half), p1.side
            elif isinstance(p1, Smooth) and isinstance(p2, Smooth) and p1.i == p2.i:
                ratio = B.div(p2.x, p1.x)
                side = "zero" if ratio == c else "infinity" if ratio == B.inv(c) else "?"
                chain_index = p1.i
            else:
                chain_index, side = None, "?"
            out.append({"component": comp.i, "line": name, "label": label,
                        "chain_component": chain_index, "side": side})
    return out


def weight_label_rows(st: Setting, n: int) -> list[dict]:
    """branch_landings joined with the chain weight on the landing side and its highest weight."""
    labels = chain_weight_labels(st, st.parity(n), sigma(st, n))
    rows = []
    for row in branch_landings(st, n):
        slot = 0 if row["side"] in ("zero", "right") else 1
        w = labels.get(row["chain_component"], (None, None))[slot]
        row = dict(row, weight=None if w is None else (w.r, w.s), hw=None if w is None else hw(st, w))
        row["match"] = row["hw"] == row["label"]
        rows.append(row)
    return rows


@dataclass(frozen=True)
class CorrespondenceRow:
    s: SPoint
    hecke: tuple
    x: XPoint
    rho: object


def correspondence_rows(st: Setting, z2: int, supersingular_only: bool = True, degree=None):
    from .satake import enumerate_spoints

    rows = []
    for n in st.n_range():
        pts = supersingular_points(st, n, z2) if supersingular_only else enumerate_spoints(st, n, z2, degree)
        for s in pts:
            rows.append(CorrespondenceRow(s, central_character_data(st, s), L(st, s), rho_of(st, s)))
    return rows


def supersingular_bijection(st: Setting, z2: int):
    """(s, rho) over all supersingular points with the given z2.

    Raises when two points share a parameter or when an irreducible class with
    determinant scalar z2 is missed.
    """
    pairs = []
    seen = {}
    for n in st.n_range():
        for s in supersingular_points(st, n, z2):
            rho = rho_of(st, s)
            key = iso_key(st, rho)
            if rho.kind != "irred":
                raise AssertionError(f"supersingular point {s} has reducible parameter")
            if key in seen:
                raise AssertionError(f"{s} and {seen[key]} have the same parameter")
            seen[key] = s
            pairs.append((s, rho))
    expected = irreducible_classes(st, z2)
    if set(seen) != expected:
        raise AssertionError("supersingular parameters miss some irreducible classes")
    return pairs


def irreducible_classes(st: Setting, z2: int) -> set:
    """iso keys of all Irred{h,s,lam} with lam^2 = z2, by brute force over h, s and the roots."""
    B = st.big
    q = st.q
    r = st.canonical_sqrt(z2)
    keys = set()
    for h in range(1, q):
        for s in range(q - 1):
            for lam in (r, B.neg(r)):
                keys.add(iso_key(st, irred(st, h, s, lam)))
    return keys
