"""Finite fields F_{p^d} built from the Conway-style table.

Elements are plain ints: the coordinate vector (c_0, ..., c_{d-1}) in the basis
1, x, ..., x^{d-1} of F_p[x]/(C_{p,d}) is encoded as sum c_i p^i.  The class of x
is the distinguished generator of the multiplicative group, so discrete logs
are taken with respect to it.  Because the defining polynomials are
subfield-compatible, the generator of F_{p^e} is the norm-type power
g_d^((p^d-1)/(p^e-1)) of the generator of F_{p^d} whenever e | d.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .conway import conway_polynomial


class GF:
    """The field with p**d elements, with exhaustive log/exp tables."""

    def __init__(self, p: int, d: int):
        self.p = p
        self.d = d
        self.order = p**d
        self.modulus = conway_polynomial(p, d)
        n = self.order - 1
        self.mult_order = n

        digits = np.zeros((self.order, d), dtype=np.int64)
        codes = np.arange(self.order)
        for i in range(d):
            digits[:, i] = (codes // p**i) % p
        self.digits = digits
        self._place = np.array([p**i for i in range(d)], dtype=np.int64)

        exp = [0] * n
        log = [-1] * self.order
        cur = [1] + [0] * (d - 1)
        for k in range(n):
            code = self._encode(cur)
            if log[code] != -1:
                raise ValueError("defining polynomial is not primitive")
            exp[k] = code
            log[code] = k
            cur = self._times_x(cur)
        self._exp = exp
        self._log = log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)

        neg = [self._encode([(-c) % p for c in digits[a]]) for a in range(self.order)]
        self._neg = neg
        # Zech logarithms: 1 + g^k = g^zech[k], or -1 when 1 + g^k = 0
        zech = [-1] * n
        for k in range(n):
            dg = digits[exp[k]].copy()
            dg[0] = (dg[0] + 1) % p
            zech[k] = log[self._encode(dg)]
        self._zech = zech

    def _encode(self, coords) -> int:
        return int(sum(int(c) * self.p**i for i, c in enumerate(coords)))

    def _times_x(self, coords):
        p, d = self.p, self.d
        if d == 1:
            return [(coords[0] * (-self.modulus[0])) % p]
        top = coords[-1]
        out = [0] + list(coords[:-1])
        return [(out[i] - top * self.modulus[i]) % p for i in range(d)]

    def __repr__(self):
        return f"GF({self.p}^{self.d})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self):
        return hash((self.p, self.d))

    # scalar arithmetic
    @property
    def zeta(self) -> int:
        """Distinguished generator of the multiplicative group."""
        return self._exp[1 % self.mult_order]

    def gen_pow(self, k: int) -> int:
        return self._exp[k % self.mult_order]

    def log(self, a: int) -> int:
        """Discrete log with respect to zeta."""
        k = self._log[a]
        if k < 0:
            raise ZeroDivisionError("log of zero")
        return k

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.mult_order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.mult_order]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.mult_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % self.mult_order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self.mult_order]

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a^(p^k)."""
        return self.pow(a, self.p**k)

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime field."""
        return n % self.p

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    def sqrt(self, a: int) -> int | None:
        """The square root with the smaller discrete log, or None."""
        if a == 0:
            return 0
        k = self._log[a]
        if k % 2:
            return None
        return self._exp[k // 2]

    # subfields
    def subfield_index(self, e: int) -> int:
        if self.d % e:
            raise ValueError(f"F_{self.p}^{e} is not a subfield of {self}")
        return (self.order - 1) // (self.p**e - 1)

    def embed(self, sub: GF, a: int) -> int:
        """Image of a in self under the Conway-compatible embedding of sub."""
        if a == 0:
            return 0
        return self._exp[(sub.log(a) * self.subfield_index(sub.d)) % self.mult_order]

    def restrict(self, sub: GF, a: int) -> int:
        """Inverse of embed; raises if a does not lie in sub."""
        if a == 0:
            return 0
        idx = self.subfield_index(sub.d)
        k = self._log[a]
        if k % idx:
            raise ValueError("element does not lie in the subfield")
        return sub.gen_pow(k // idx)

    def in_subfield(self, e: int, a: int) -> bool:
        return a == 0 or self._log[a] % self.subfield_index(e) == 0

    def subfield_elements(self, e: int):
        idx = self.subfield_index(e)
        yield 0
        for k in range(0, self.mult_order, idx):
            yield self._exp[k]

    # vectorized helpers on integer arrays of codes
    def vmul_scalar(self, c: int, arr: np.ndarray) -> np.ndarray:
        if c == 0:
            return np.zeros_like(arr)
        lg = self.log_table[arr]
        out = self.exp_table[(lg + self._log[c]) % self.mult_order]
        out[arr == 0] = 0
        return out

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = self.exp_table[(self.log_table[a] + self.log_table[b]) % self.mult_order]
        out[(a == 0) | (b == 0)] = 0
        return out

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.encode_digits((self.digits[a] + self.digits[b]) % self.p)

    def vneg(self, a: np.ndarray) -> np.ndarray:
        return self.encode_digits((-self.digits[a]) % self.p)

    def encode_digits(self, dg: np.ndarray) -> np.ndarray:
        return dg @ self._place


@lru_cache(maxsize=None)
def get_field(p: int, d: int) -> GF:
    """Shared instance of F_{p^d}."""
    return GF(p, d)
