"""The q-scheme X(q): chains of projective lines and their Galois parametrization.

For each n in {0..q-2} (determinant omega_f^(1+n)) and each z2 the fiber is a
chain of projective lines C_0, ..., C_{L-1}, the point at infinity of C_i glued
to the origin of C_{i+1}.  L = (q-1)/2 for even n and (q+1)/2 for odd n.  On odd
chains the two outer components carry an affine coordinate t whose point at
infinity is the node joining them to the rest of the chain.

Every fiber is identified with a base fiber (n = 0 or n = q-2, z2 = 1) by the
element g_{n,z2} = (zeta^sigma_n, r(z2)) of Gm(F_q) x Gm, where r(z2) is the
canonical square root; positions are compared through that identification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, Irred, Split, irred, iso_key, restrict_to_inertia, split, twist
from .setting import Setting


@dataclass(frozen=True)
class Smooth:
    """[x:1] on an interior component C_i (x != 0)."""

    i: int
    x: int
    kind = "smooth"


@dataclass(frozen=True)
class Node:
    """The node C_{i-1} cap C_i, i.e. the origin of C_i."""

    i: int
    kind = "node"


@dataclass(frozen=True)
class OriginEnd:
    kind = "origin"


@dataclass(frozen=True)
class InfinityEnd:
    kind = "infinity"


@dataclass(frozen=True)
class Outer:
    """Affine point t on an outer component of an odd chain."""

    side: str
    t: int
    kind = "outer"


@dataclass(frozen=True)
class XPoint:
    n: int
    z2: int
    pos: object


def chain_length(st: Setting, n: int) -> int:
    return (st.q - 1) // 2 if n % 2 == 0 else (st.q + 1) // 2


def interior_components(st: Setting, n: int) -> range:
    L = chain_length(st, n)
    return range(L) if n % 2 == 0 else range(1, L - 1)


def sigma(st: Setting, n: int) -> int:
    """Exponent of zeta in the identification of fiber n with its base fiber."""
    if n % 2 == 0:
        return n // 2
    return ((n + 1) // 2 - st.half) % (st.q - 1)


def base_n(st: Setting, n: int) -> int:
    return 0 if n % 2 == 0 else st.q - 2


def check_point(st: Setting, pt: XPoint) -> None:
    n, pos = pt.n, pt.pos
    if not 0 <= n <= st.q - 2:
        raise ValueError(f"component index {n} out of range")
    if pt.z2 == 0:
        raise ValueError("z2 must be nonzero")
    L = chain_length(st, n)
    if isinstance(pos, Smooth):
        if pos.i not in interior_components(st, n) or pos.x == 0:
            raise ValueError(f"invalid smooth position {pos}")
    elif isinstance(pos, Node):
        if not 1 <= pos.i <= L - 1:
            raise ValueError(f"invalid node {pos}")
    elif isinstance(pos, (OriginEnd, InfinityEnd)):
        if n % 2:
            raise ValueError("odd chains have no free extremities")
    elif isinstance(pos, Outer):
        if n % 2 == 0 or pos.side not in ("left", "right"):
            raise ValueError(f"invalid outer position {pos}")
    else:
        raise ValueError(f"unknown position {pos!r}")


def point_on_component(st: Setting, n: int, z2: int, i: int, x: int, y: int) -> XPoint:
    """[x:y] on the interior component C_i, with nodes stored canonically."""
    B = st.big
    L = chain_length(st, n)
    if i not in interior_components(st, n):
        raise ValueError(f"C_{i} is not an interior component")
    if x == 0 and y == 0:
        raise ValueError("[0:0] is not a point")
    if x and y:
        return XPoint(n, z2, Smooth(i, B.div(x, y)))
    if x == 0:
        pos = OriginEnd() if i == 0 and n % 2 == 0 else Node(i)
    else:
        pos = InfinityEnd() if i == L - 1 and n % 2 == 0 else Node(i + 1)
    return XPoint(n, z2, pos)


def solve_trace(st: Setting, t: int) -> int:
    """A root z of z^2 - t z + 1 in the storage field (the other root is 1/z)."""
    B = st.big
    disc = B.sub(B.mul(t, t), B.from_int(4))
    root = B.sqrt(disc)
    if root is None:
        raise ValueError("discriminant has no square root in the storage field")
    return B.mul(B.add(t, root), B.inv(B.from_int(2)))


def iota_base(st: Setting, parity: str, pos):
    """Image of a position on the base fiber (z2 = 1, n = 0 or q-2)."""
    B = st.big
    q = st.q
    if parity == "even":
        if isinstance(pos, Smooth):
            i = pos.i
            return split(st, Character(i + 1, pos.x), Character(-i, B.inv(pos.x)))
        if isinstance(pos, OriginEnd):
            return irred(st, 1, 0, 1)
        if isinstance(pos, Node):
            return irred(st, 2 * pos.i + 1, -pos.i, 1)
        if isinstance(pos, InfinityEnd):
            return irred(st, q, -st.half, 1)
    else:
        if isinstance(pos, Smooth):
            i = pos.i
            return split(st, Character(i, pos.x), Character(-i, B.inv(pos.x)))
        if isinstance(pos, Node):
            return irred(st, 2 * pos.i, -pos.i, 1)
        if isinstance(pos, Outer):
            z = solve_trace(st, pos.t)
            a = 0 if pos.side == "left" else st.half
            return split(st, Character(a, z), Character(a, B.inv(z)))
    raise ValueError(f"position {pos!r} does not lie on a {parity} chain")


def resolve_root(st: Setting, z2: int, root: int | None) -> int:
    B = st.big
    if root is None:
        return st.canonical_sqrt(z2)
    if B.mul(root, root) != z2:
        raise ValueError("square root does not square to z2")
    return root


def iota(st: Setting, pt: XPoint, root: int | None = None):
    """The semisimple representation attached to pt (for the given root of z2)."""
    check_point(st, pt)
    r = resolve_root(st, pt.z2, root)
    rho0 = iota_base(st, st.parity(pt.n), pt.pos)
    return twist(st, rho0, Character(sigma(st, pt.n), r))


def closed_positions(st: Setting, n: int):
    L = chain_length(st, n)
    out = [Node(i) for i in range(1, L)]
    if n % 2 == 0:
        out = [OriginEnd()] + out + [InfinityEnd()]
    return out


def iota_inverse(st: Setting, rho, root: int | None = None) -> XPoint:
    """The point whose image is isomorphic to rho, by inverting the rules."""
    from .characters import det_rep

    B = st.big
    q = st.q
    det = det_rep(st, rho)
    n = st.n_of_det(det.a)
    z2 = det.lam
    r = resolve_root(st, z2, root)
    rho0 = twist(st, rho, Character(-sigma(st, n), B.inv(r)))
    L = chain_length(st, n)
    if isinstance(rho0, Irred):
        target = iso_key(st, rho0)
        for pos in closed_positions(st, n):
            if iso_key(st, iota_base(st, st.parity(n), pos)) == target:
                return XPoint(n, z2, pos)
        raise AssertionError("irreducible representation missed by the closed points")
    c1, c2 = rho0.chi1, rho0.chi2
    m = q - 1
    if n % 2 == 0:
        for i in range(L):
            for a, b in ((c1, c2), (c2, c1)):
                if a.a == (i + 1) % m and b.a == (-i) % m:
                    return XPoint(n, z2, Smooth(i, a.lam))
    else:
        if c1.a == c2.a:
            side = "left" if c1.a == 0 else "right"
            return XPoint(n, z2, Outer(side, B.add(c1.lam, c2.lam)))
        for i in range(1, L - 1):
            for a, b in ((c1, c2), (c2, c1)):
                if a.a == i % m and b.a == (-i) % m:
                    return XPoint(n, z2, Smooth(i, a.lam))
    raise AssertionError(f"split representation {rho} has no preimage")


def negate_position(st: Setting, pos):
    B = st.big
    if isinstance(pos, Smooth):
        return Smooth(pos.i, B.neg(pos.x))
    if isinstance(pos, Outer):
        return Outer(pos.side, B.neg(pos.t))
    return pos


def reverse_position(st: Setting, n: int, pos):
    """Chain reversal C_j <-> C_{L-1-j}, [x:y] -> [y:x]."""
    B = st.big
    L = chain_length(st, n)
    if isinstance(pos, Smooth):
        return Smooth(L - 1 - pos.i, B.inv(pos.x))
    if isinstance(pos, Node):
        return Node(L - pos.i)
    if isinstance(pos, OriginEnd):
        return InfinityEnd()
    if isinstance(pos, InfinityEnd):
        return OriginEnd()
    if isinstance(pos, Outer):
        return Outer("right" if pos.side == "left" else "left", pos.t)
    raise ValueError(f"unknown position {pos!r}")


def stabilizer_part(st: Setting, g, n: int, z2: int):
    """(reverse, negate) flags of g_{n',z2'}^-1 g g_{n,z2}, which fixes the base fiber."""
    B = st.big
    k, z = g
    m = st.q - 1
    n2 = (n + 2 * k) % m
    z2b = B.mul(z2, B.mul(z, z))
    zeta_part = (sigma(st, n) + k - sigma(st, n2)) % m
    z_part = B.div(B.mul(z, st.canonical_sqrt(z2)), st.canonical_sqrt(z2b))
    if zeta_part not in (0, st.half) or z_part not in (1, B.neg(1)):
        raise AssertionError("identification elements do not differ by a stabilizer element")
    return n2, z2b, zeta_part != 0, z_part != 1


def twist_action(st: Setting, g, pt: XPoint) -> XPoint:
    """Action of g = (k, z), meaning (zeta^k, z), on X(q).

    The fiber moves to (n + 2k, z2 z^2).  Positions are preserved through the
    identification with the base fiber, up to the residual stabilizer element:
    its z-part -1 negates coordinates and its zeta-part zeta^((q-1)/2) reverses
    the chain.
    """
    n2, z2b, rev, neg = stabilizer_part(st, g, pt.n, pt.z2)
    pos = pt.pos
    if neg:
        pos = negate_position(st, pos)
    if rev:
        pos = reverse_position(st, pt.n, pos)
    return XPoint(n2, z2b, pos)


def orbit_to_type(st: Setting, pt: XPoint):
    return restrict_to_inertia(st, iota(st, pt))


def orbit_label(pt: XPoint):
    """Torus orbit containing pt: a component's open part or a closed point."""
    pos = pt.pos
    if isinstance(pos, Smooth):
        return ("open", pos.i)
    if isinstance(pos, Outer):
        return ("open", pos.side)
    return ("closed", pos.kind, getattr(pos, "i", None))


def enumerate_points(st: Setting, n: int, z2: int, degree: int | None = None):
    """All points of the fiber (n, z2) with coordinates in F_{p^degree} (default: F_{q^m})."""
    B = st.big
    degree = st.f * st.m if degree is None else degree
    pts = [XPoint(n, z2, pos) for pos in closed_positions(st, n)]
    scalars = list(B.subfield_elements(degree))
    for i in interior_components(st, n):
        pts.extend(XPoint(n, z2, Smooth(i, x)) for x in scalars if x)
    if n % 2:
        for side in ("left", "right"):
            pts.extend(XPoint(n, z2, Outer(side, t)) for t in scalars)
    return pts


def position_dict(st: Setting, pos) -> dict:
    d = {"kind": pos.kind}
    if isinstance(pos, Smooth):
        d.update(i=pos.i, coords=[st.fmt_scalar(pos.x), st.fmt_scalar(1)])
    elif isinstance(pos, Node):
        d.update(i=pos.i)
    elif isinstance(pos, Outer):
        d.update(side=pos.side, t=st.fmt_scalar(pos.t))
    return d


def xpoint_dict(st: Setting, pt: XPoint) -> dict:
    return {"n": pt.n, "z2": st.fmt_scalar(pt.z2), "position": position_dict(st, pt.pos)}


__all__ = [
    "InfinityEnd",
    "Irred",
    "Node",
    "OriginEnd",
    "Outer",
    "Smooth",
    "Split",
    "XPoint",
    "chain_length",
    "enumerate_points",
    "iota",
    "iota_inverse",
    "orbit_to_type",
    "point_on_component",
    "twist_action",
]
