"""The Satake scheme S(q): W-orbits in the dual torus times singular diagonal matrices.

A torus value diag(zeta^a, zeta^b) is stored as its exponent pair (a, b) mod q-1.
The fiber over (zeta^n, z2) is a disjoint union of components, one per W-orbit
of torus values with determinant zeta^n, listed in a fixed order by ordered
labels.  A regular component (a != b) has coordinates (x, y) with xy = 0, x
attached to the first entry of the label; a non-regular one (a = b) has the
single Steinberg coordinate z1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setting import Setting


@dataclass(frozen=True)
class Regular:
    x: int
    y: int
    kind = "regular"


@dataclass(frozen=True)
class NonRegular:
    z1: int
    kind = "nonregular"


@dataclass(frozen=True)
class SPoint:
    n: int
    z2: int
    i: int
    coords: object


@dataclass(frozen=True)
class ComponentLabel:
    n: int
    i: int
    t: tuple[int, int]
    label: tuple[int, int]

    @property
    def regular(self) -> bool:
        return self.label[0] != self.label[1]


def components(st: Setting, n: int) -> list[ComponentLabel]:
    """The ordered components of the fiber over zeta^n."""
    m = st.q - 1
    L = st.half
    out = []
    if n % 2 == 0:
        s = n // 2
        for i in range(L + 1):
            t = (i % m, (-i) % m)
            out.append(ComponentLabel(n, i, t, ((t[0] + s) % m, (t[1] + s) % m)))
    else:
        s = (n + 1) // 2
        for i in range(1, L + 1):
            t = ((i - 1 + L) % m, (-i + L) % m)
            out.append(ComponentLabel(n, i, t, ((t[0] + s) % m, (t[1] + s) % m)))
    return out


def component(st: Setting, n: int, i: int) -> ComponentLabel:
    for c in components(st, n):
        if c.i == i:
            return c
    raise ValueError(f"no component {i} over zeta^{n}")


def check_spoint(st: Setting, s: SPoint) -> None:
    c = component(st, s.n, s.i)
    if s.z2 == 0:
        raise ValueError("z2 must be nonzero")
    if c.regular:
        if not isinstance(s.coords, Regular):
            raise ValueError("regular component needs (x, y) coordinates")
        if s.coords.x and s.coords.y:
            raise ValueError("singular diagonal coordinates need xy = 0")
    elif not isinstance(s.coords, NonRegular):
        raise ValueError("non-regular component needs a Steinberg coordinate")


def locate_label(st: Setting, n: int, a: int, b: int):
    """(component index, swapped?) of the orbit of (a, b) in the fiber over zeta^n."""
    m = st.q - 1
    a, b = a % m, b % m
    for c in components(st, n):
        if c.label == (a, b):
            return c.i, False
        if c.label == (b, a):
            return c.i, True
    raise ValueError(f"torus value ({a}, {b}) has no component over zeta^{n}")


def twist_action_s(st: Setting, g, s: SPoint) -> SPoint:
    """(zeta^k, z): torus orbit times diag(zeta^k, zeta^k), coordinates times z, z2 times z^2."""
    B = st.big
    k, z = g
    m = st.q - 1
    a, b = component(st, s.n, s.i).label
    n2 = (s.n + 2 * k) % m
    i2, swapped = locate_label(st, n2, a + k, b + k)
    if isinstance(s.coords, Regular):
        x, y = B.mul(z, s.coords.x), B.mul(z, s.coords.y)
        coords = Regular(y, x) if swapped else Regular(x, y)
    else:
        coords = NonRegular(B.mul(z, s.coords.z1))
    return SPoint(n2, B.mul(s.z2, B.mul(z, z)), i2, coords)


def is_supersingular(s: SPoint) -> bool:
    c = s.coords
    return (c.x == 0 and c.y == 0) if isinstance(c, Regular) else c.z1 == 0


def supersingular_points(st: Setting, n: int, z2: int) -> list[SPoint]:
    out = []
    for c in components(st, n):
        coords = Regular(0, 0) if c.regular else NonRegular(0)
        out.append(SPoint(n, z2, c.i, coords))
    return out


def enumerate_spoints(st: Setting, n: int, z2: int, degree: int | None = None) -> list[SPoint]:
    """All points of the fiber with coordinates in F_{p^degree} (default: F_{q^m})."""
    degree = st.f * st.m if degree is None else degree
    scalars = list(st.big.subfield_elements(degree))
    out = []
    for c in components(st, n):
        if c.regular:
            out.append(SPoint(n, z2, c.i, Regular(0, 0)))
            for v in scalars:
                if v:
                    out.append(SPoint(n, z2, c.i, Regular(v, 0)))
                    out.append(SPoint(n, z2, c.i, Regular(0, v)))
        else:
            out.extend(SPoint(n, z2, c.i, NonRegular(v)) for v in scalars)
    return out


def central_character_data(st: Setting, s: SPoint):
    """(gamma, u2): the W-orbit of the torus character as a sorted exponent pair, and the U^2 scalar."""
    a, b = component(st, s.n, s.i).label
    return tuple(sorted((a, b))), s.z2


def spoint_dict(st: Setting, s: SPoint) -> dict:
    c = component(st, s.n, s.i)
    if isinstance(s.coords, Regular):
        coords = {"kind": "regular", "x": st.fmt_scalar(s.coords.x), "y": st.fmt_scalar(s.coords.y)}
    else:
        coords = {"kind": "nonregular", "z1": st.fmt_scalar(s.coords.z1)}
    return {
        "n": s.n,
        "z2": st.fmt_scalar(s.z2),
        "component": c.i,
        "label": [list(c.label), [c.label[1], c.label[0]]],
        "coords": coords,
    }
