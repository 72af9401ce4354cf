"""Conway-style defining polynomials for prime fields' extensions.

A polynomial for (p, d) is monic of degree d, primitive, and compatible with
every proper subfield: if x is a root for degree d and e | d, then
x^((p^d-1)/(p^e-1)) is a root of the polynomial for degree e.  Among all such
polynomials the table holds the least one in the Conway order, so the entries
agree with the standard Conway polynomials.

Polynomials are stored as coefficient tuples, constant term first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

# (p, d) -> coefficients c_0..c_{d-1}, c_d = 1; produced by conway_search
CONWAY_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 1): (1,),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (3, 4): (2, 0, 0, 2),
    (3, 5): (1, 2, 0, 0, 0),
    (3, 6): (2, 2, 1, 0, 2, 0),
    (3, 7): (1, 0, 2, 0, 0, 0, 0),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0),
    (5, 1): (3,),
    (5, 2): (2, 4),
    (5, 3): (3, 3, 0),
    (5, 4): (2, 4, 4, 0),
    (5, 5): (3, 4, 0, 0, 0),
    (5, 6): (2, 0, 1, 4, 1, 0),
    (7, 1): (4,),
    (7, 2): (3, 6),
    (7, 3): (4, 0, 6),
    (7, 4): (3, 4, 5, 0),
    (11, 1): (9,),
    (11, 2): (2, 7),
    (11, 3): (9, 2, 0),
    (11, 4): (2, 10, 8, 0),
    (13, 1): (11,),
    (13, 2): (2, 12),
    (13, 3): (11, 2, 0),
    (13, 4): (2, 12, 3, 0),
}


def _polymulmod(a, b, mod, p):
    d = len(mod) - 1
    res = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for k in range(len(res) - 1, d - 1, -1):
        c = res[k]
        if c:
            for i in range(d):
                res[k - d + i] = (res[k - d + i] - c * mod[i]) % p
    return res[:d]


def _polypowmod(a, e, mod, p):
    d = len(mod) - 1
    result = [1] + [0] * (d - 1)
    base = list(a) + [0] * (d - len(a))
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _eval_at(poly, elem, mod, p):
    # Horner evaluation of poly (coefficients mod p) at an element of F_p[x]/mod
    d = len(mod) - 1
    acc = [0] * d
    for c in reversed(poly):
        acc = _polymulmod(acc, elem, mod, p)
        acc[0] = (acc[0] + c) % p
    return acc


def is_primitive(mod: tuple[int, ...] | list[int], p: int) -> bool:
    """True iff x has multiplicative order p^d - 1 modulo mod (so mod is irreducible)."""
    from sympy import factorint

    d = len(mod) - 1
    order = p**d - 1
    x = [0, 1] + [0] * (d - 2) if d > 1 else [(-mod[0]) % p]
    one = [1] + [0] * (d - 1)
    if _polypowmod(x, order, mod, p) != one:
        return False
    return all(_polypowmod(x, order // r, mod, p) != one for r in factorint(order))


def _conway_key(coeffs, p):
    # Conway order: compare (-1)^i * a_{d-i}, i = 1..d, lexicographically
    d = len(coeffs)
    return tuple(((-1) ** i * coeffs[d - i]) % p for i in range(1, d + 1))


def _candidates(p, d):
    # yields coefficient tuples (c_0..c_{d-1}) in Conway order
    for key in product(range(p), repeat=d):
        coeffs = [0] * d
        for i in range(1, d + 1):
            coeffs[d - i] = ((-1) ** i * key[i - 1]) % p
        yield tuple(coeffs)


def is_compatible(coeffs, p: int, lookup) -> bool:
    d = len(coeffs)
    mod = list(coeffs) + [1]
    x = [0, 1] + [0] * (d - 2) if d > 1 else [(-coeffs[0]) % p]
    for e in range(1, d):
        if d % e:
            continue
        sub = list(lookup(p, e)) + [1]
        y = _polypowmod(x, (p**d - 1) // (p**e - 1), mod, p)
        if any(_eval_at(sub, y, mod, p)):
            return False
    return True


@lru_cache(maxsize=None)
def conway_search(p: int, d: int) -> tuple[int, ...]:
    """Least primitive, subfield-compatible polynomial in the Conway order (brute force)."""
    for coeffs in _candidates(p, d):
        if coeffs[0] == 0:
            continue
        mod = list(coeffs) + [1]
        if is_primitive(mod, p) and is_compatible(coeffs, p, conway_search):
            return coeffs
    raise ValueError(f"no Conway-style polynomial found for p={p}, d={d}")


def conway_polynomial(p: int, d: int) -> tuple[int, ...]:
    """Coefficients (constant first, monic term omitted) for the degree-d extension of F_p."""
    try:
        return CONWAY_TABLE[(p, d)]
    except KeyError:
        return conway_search(p, d)
