"""The residue field size q = p^f together with the coefficient fields in use.

Unramified scalars live in F_{q^m} (the declared coefficient field).  Square
roots of z2 and the roots of z + 1/z = t need F_{q^{2m}}, which is where every
scalar is actually stored; the declared field is a subfield of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith.fields import GF, get_field


@dataclass(frozen=True)
class Setting:
    p: int
    f: int = 1
    m: int = 2
    q: int = field(init=False)

    def __post_init__(self):
        from sympy import isprime

        if self.p < 3 or not isprime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.f < 1 or self.m < 1:
            raise ValueError("f and m must be positive")
        object.__setattr__(self, "q", self.p**self.f)

    @property
    def fq(self) -> GF:
        return get_field(self.p, self.f)

    @property
    def coeff(self) -> GF:
        """The declared coefficient field F_{q^m}."""
        return get_field(self.p, self.f * self.m)

    @property
    def big(self) -> GF:
        """F_{q^{2m}}, where all scalars are stored."""
        return get_field(self.p, 2 * self.f * self.m)

    @property
    def half(self) -> int:
        return (self.q - 1) // 2

    def parity(self, n: int) -> str:
        return "even" if n % 2 == 0 else "odd"

    def n_range(self):
        return range(self.q - 1)

    def d_of(self, n: int) -> int:
        return (1 + n) % (self.q - 1)

    def n_of_det(self, d: int) -> int:
        return (d - 1) % (self.q - 1)

    # scalars
    def scalar(self, a: int, src: GF | None = None) -> int:
        """Embed a code of src (default: the declared field) into the storage field."""
        src = self.coeff if src is None else src
        return self.big.embed(src, a)

    def zeta_pow(self, k: int) -> int:
        """zeta^k for the distinguished generator of F_q^x, as a stored scalar."""
        return self.big.embed(self.fq, self.fq.gen_pow(k))

    def in_coeff(self, a: int) -> bool:
        return self.big.in_subfield(self.f * self.m, a)

    def coeff_scalars(self, include_zero: bool = False):
        """All elements of the declared field, as stored scalars."""
        for a in self.big.subfield_elements(self.f * self.m):
            if a or include_zero:
                yield a

    def fq_scalars(self):
        for a in self.big.subfield_elements(self.f):
            if a:
                yield a

    def canonical_sqrt(self, z: int) -> int:
        """The square root of z (in the declared field) with the smaller discrete log."""
        r = self.big.sqrt(z)
        if r is None:
            raise ValueError("no square root in the storage field")
        return r

    def fmt_scalar(self, a: int) -> str:
        if a == 0:
            return "0"
        return f"z^{self.big.log(a)}"


@lru_cache(maxsize=None)
def setting(p: int, f: int = 1, m: int = 2) -> Setting:
    return Setting(p, f, m)
