"""Truncated Laurent series over a finite field with tracked precision.

A series is  sum_i c_i t^(val+i) + O(t^prec).  ``prec`` is the absolute
precision (None for an exact, finite Laurent polynomial).  Every operation
records the precision it can guarantee, and never more.
"""

from __future__ import annotations

import math

import numpy as np

from .fields import GF


class PrecisionError(ArithmeticError):
    """Raised when a result would depend on coefficients that are not known."""


def _inf(x):
    return math.inf if x is None else x


def _fin(x):
    return None if x == math.inf else int(x)


class Laurent:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field: GF, coeffs, val: int = 0, prec: int | None = None):
        arr = np.asarray(coeffs, dtype=np.int64).ravel()
        if prec is not None:
            keep = max(prec - val, 0)
            if len(arr) < keep:
                arr = np.concatenate([arr, np.zeros(keep - len(arr), dtype=np.int64)])
            arr = arr[:keep]
        nz = np.flatnonzero(arr)
        if len(nz) == 0:
            self.field = field
            self.coeffs = np.zeros(0, dtype=np.int64)
            self.val = prec if prec is not None else 0
            self.prec = prec
            return
        start = int(nz[0])
        if prec is None:
            arr = arr[start : int(nz[-1]) + 1]
        else:
            arr = arr[start:]
        self.field = field
        self.coeffs = arr
        self.val = val + start
        self.prec = prec

    # constructors
    @classmethod
    def zero(cls, field: GF, prec: int | None = None) -> Laurent:
        return cls(field, [], 0, prec)

    @classmethod
    def one(cls, field: GF) -> Laurent:
        return cls(field, [1], 0, None)

    @classmethod
    def monomial(cls, field: GF, k: int, c: int = 1) -> Laurent:
        return cls(field, [c], k, None)

    # basic queries
    @property
    def exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def valuation(self):
        return math.inf if self.is_zero() else self.val

    def rel_prec(self):
        return _inf(self.prec) - self.val if not self.is_zero() else 0

    def coeff(self, k: int) -> int:
        if k >= _inf(self.prec):
            raise PrecisionError(f"coefficient of t^{k} is beyond precision {self.prec}")
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return int(self.coeffs[i])
        return 0

    def coeff_list(self, start: int, stop: int) -> list[int]:
        return [self.coeff(k) for k in range(start, stop)]

    def __repr__(self):
        terms = [f"{int(c)}*t^{self.val + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return body if self.prec is None else f"{body} + O(t^{self.prec})"

    def truncate(self, prec: int) -> Laurent:
        if prec > _inf(self.prec):
            raise PrecisionError(f"cannot raise precision {self.prec} to {prec}")
        return Laurent(self.field, self.coeffs, self.val, prec)

    def _window(self, lo: int, hi: int) -> np.ndarray:
        # coefficients of t^lo..t^(hi-1); positions beyond a finite precision are unused by callers
        out = np.zeros(hi - lo, dtype=np.int64)
        a0 = max(self.val, lo)
        a1 = min(self.val + len(self.coeffs), hi)
        if a1 > a0:
            out[a0 - lo : a1 - lo] = self.coeffs[a0 - self.val : a1 - self.val]
        return out

    # ring operations
    def __add__(self, other: Laurent) -> Laurent:
        F = self.field
        prec = _fin(min(_inf(self.prec), _inf(other.prec)))
        if self.is_zero() and self.exact:
            return other.truncate(prec) if prec is not None else other
        if other.is_zero() and other.exact:
            return self.truncate(prec) if prec is not None else self
        lo = min(self.valuation(), other.valuation(), _inf(prec))
        if lo == math.inf:
            return Laurent.zero(F, prec)
        lo = int(lo)
        if prec is None:
            hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        else:
            hi = prec
        s = F.vadd(self._window(lo, hi), other._window(lo, hi))
        return Laurent(F, s, lo, prec)

    def __neg__(self) -> Laurent:
        return Laurent(self.field, self.field.vneg(self.coeffs), self.val, self.prec)

    def __sub__(self, other: Laurent) -> Laurent:
        return self + (-other)

    def scale(self, c: int) -> Laurent:
        """Multiply by a field scalar."""
        return Laurent(self.field, self.field.vmul_scalar(c, self.coeffs), self.val, self.prec)

    def shift(self, k: int) -> Laurent:
        """Multiply by t^k."""
        prec = None if self.prec is None else self.prec + k
        return Laurent(self.field, self.coeffs, self.val + k, prec)

    def __mul__(self, other: Laurent) -> Laurent:
        F = self.field
        if (self.is_zero() and self.exact) or (other.is_zero() and other.exact):
            return Laurent.zero(F)
        # an inexact zero stores val = prec, so these are valid lower bounds
        va, vb = self.val, other.val
        prec = min(va + _inf(other.prec), vb + _inf(self.prec))
        if self.is_zero() or other.is_zero():
            return Laurent.zero(F, int(prec))
        val = va + vb
        if prec == math.inf:
            length = len(self.coeffs) + len(other.coeffs) - 1
        else:
            length = int(prec) - val
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        acc = np.zeros((length, F.d), dtype=np.int64)
        for i in np.flatnonzero(a):
            if i >= length:
                break
            seg = b[: length - i]
            acc[i : i + len(seg)] += F.digits[F.vmul_scalar(int(a[i]), seg)]
        coeffs = F.encode_digits(acc % F.p)
        return Laurent(F, coeffs, val, _fin(prec))

    def inverse(self, prec: int | None = None) -> Laurent:
        """Multiplicative inverse; an exact non-monomial input needs a target precision."""
        F = self.field
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series with no known nonzero coefficient")
        v = self.val
        if self.exact and len(self.coeffs) == 1:
            return Laurent(F, [F.inv(int(self.coeffs[0]))], -v, None)
        if self.exact:
            if prec is None:
                raise PrecisionError("inverse of a non-monomial exact series needs a precision")
            n = prec + v
        else:
            n = self.prec - v
            if prec is not None:
                n = min(n, prec + v)
        a = self._window(v, v + n)
        b = np.zeros(n, dtype=np.int64)
        inv0 = F.inv(int(a[0]))
        b[0] = inv0
        dg = F.digits
        for k in range(1, n):
            prods = F.vmul(a[1 : k + 1], b[k - 1 :: -1][:k])
            s = F.encode_digits(dg[prods].sum(axis=0) % F.p)
            b[k] = F.neg(F.mul(int(s), inv0))
        return Laurent(F, b, -v, n - v)

    def __truediv__(self, other: Laurent) -> Laurent:
        return self * other.inverse()

    def __pow__(self, e: int) -> Laurent:
        if e < 0:
            return self.inverse() ** (-e)
        result = Laurent.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # equality up to the common precision
    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def equal_to(self, other: Laurent, prec: int) -> bool:
        """Equality modulo t^prec; raises if either side is not known that far."""
        known = min(_inf(self.prec), _inf(other.prec))
        if prec > known:
            raise PrecisionError(f"comparison to t^{prec} exceeds known precision {known}")
        return (self - other).truncate(prec).is_zero()

    # substitutions
    def compose(self, g: Laurent, prec: int | None = None) -> Laurent:
        """self(g) for g of valuation exactly 1.

        The result is known to t^min(prec(self), val(self) + relprec(g)); an
        explicit ``prec`` caps it, and is required when that bound is infinite
        but a negative power of g is involved.
        """
        if g.valuation() != 1:
            raise ValueError("composition argument must have valuation 1")
        F = self.field
        if self.is_zero():
            return Laurent.zero(F, self.prec)
        v = self.val
        target = min(_inf(self.prec), v + g.rel_prec())
        if prec is not None:
            target = min(target, prec)
        if target == math.inf:
            if v < 0:
                raise PrecisionError("negative powers of an exact argument need a precision")
            rel = None
            gw = lead_g = g
        else:
            rel = int(target) - v
            gw = g.truncate(min(_inf(g.prec), rel))
            lead_g = g.truncate(min(_inf(g.prec), rel + 1))
        top = v + len(self.coeffs) - 1
        if rel is not None:
            top = min(top, v + rel - 1)
        acc = Laurent.zero(F)
        for k in range(top, v - 1, -1):
            acc = acc * gw + Laurent(F, [int(self.coeffs[k - v])], 0, None)
            if rel is not None and _inf(acc.prec) > rel:
                acc = acc.truncate(rel)
        if v == 0:
            res = acc
        else:
            res = acc * (lead_g ** v)
        if _inf(res.prec) > target:
            res = res.truncate(int(target))
        return res

    def frobenius_t(self, q: int) -> Laurent:
        """t -> t^q (coefficients untouched)."""
        F = self.field
        if self.is_zero():
            return Laurent.zero(F, None if self.prec is None else q * self.prec)
        n = len(self.coeffs)
        out = np.zeros((n - 1) * q + 1, dtype=np.int64)
        out[::q] = self.coeffs
        prec = None if self.prec is None else q * self.prec
        return Laurent(F, out, q * self.val, prec)

    def psi(self, q: int) -> Laurent:
        """sum a_j t^j -> sum a_{qj} t^j; the output knows a_{qj} only for qj < prec."""
        F = self.field
        prec = None if self.prec is None else -((-self.prec) // q)
        if self.is_zero():
            return Laurent.zero(F, prec)
        lo = -((-self.val) // q)
        hi = (self.val + len(self.coeffs) - 1) // q + 1
        if prec is not None:
            hi = max(hi, prec)
        out = np.zeros(max(hi - lo, 0), dtype=np.int64)
        for j in range(lo, hi):
            k = q * j
            if self.val <= k < self.val + len(self.coeffs):
                out[j - lo] = self.coeffs[k - self.val]
        return Laurent(F, out, lo, prec)

    def map_coefficients(self, target: GF, fn) -> Laurent:
        return Laurent(target, [fn(int(c)) for c in self.coeffs], self.val, self.prec)

    def embed(self, target: GF) -> Laurent:
        """Coefficients pushed into an extension field."""
        return self.map_coefficients(target, lambda c: target.embed(self.field, c))

    def first_difference(self, other: Laurent):
        """Lowest degree where the series differ (None if equal to common precision)."""
        d = self - other
        return None if d.is_zero() else d.val


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for l in range(k):
                if A[i][l].is_zero() and A[i][l].exact or B[l][j].is_zero() and B[l][j].exact:
                    continue
                term = A[i][l] * B[l][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else Laurent.zero(A[0][0].field))
        out.append(row)
    return out


def mat_map(A, fn):
    return [[fn(x) for x in row] for row in A]


def mat_det(A):
    """Leibniz expansion; fine for the tiny dimensions used here."""
    from itertools import permutations

    n = len(A)
    F = A[0][0].field
    total = Laurent.zero(F)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Laurent.one(F)
        skip = False
        for i in range(n):
            e = A[perm[i]][i]
            if e.is_zero() and e.exact:
                skip = True
                break
            term = term * e
        if skip:
            continue
        total = total - term if inversions % 2 else total + term
    return total
