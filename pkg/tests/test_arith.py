from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st_

from modpgl2.arith.conway import CONWAY_TABLE, conway_search, is_primitive
from modpgl2.arith.fields import get_field
from modpgl2.arith.padic import (
    OFRing,
    binomial_power,
    fbar,
    headroom_exponent,
    lt_series_mod_pi,
    padic_exponent,
    reduction_is_homomorphism,
)
from modpgl2.arith.series import Laurent, PrecisionError

FIELDS = [(3, 1), (3, 2), (5, 1), (5, 2), (3, 4), (7, 2)]


# finite fields

def test_prime_field_product():
    F = get_field(5, 1)
    assert F.mul(2, 3) == 1


def test_log_of_one_is_zero():
    for p, d in FIELDS:
        assert get_field(p, d).log(1) == 0


def test_f9_log_table():
    F = get_field(3, 2)
    z = F.zeta
    assert F.log(F.pow(z, 5)) == 5
    # full table, frozen from an exhaustive run of x -> x*zeta mod x^2 + 2x + 2
    assert [F.gen_pow(k) for k in range(8)] == [1, 3, 4, 7, 2, 6, 8, 5]


@pytest.mark.parametrize("key", sorted(CONWAY_TABLE))
def test_conway_table_matches_search(key):
    p, d = key
    if p**d > 10**6:
        pytest.skip("brute-force search too large")
    assert CONWAY_TABLE[key] == conway_search(*key)


def test_known_conway_polynomials():
    # published values: x^2+2x+2, x^2+4x+2, x^2+6x+3, x^3+2x+1
    assert CONWAY_TABLE[(3, 2)] == (2, 2)
    assert CONWAY_TABLE[(5, 2)] == (2, 4)
    assert CONWAY_TABLE[(7, 2)] == (3, 6)
    assert CONWAY_TABLE[(3, 3)] == (1, 2, 0)


def test_non_primitive_rejected():
    # x^2 + 1 over F_3: x has order 4, not 8
    assert not is_primitive([1, 0, 1], 3)


def test_embeddings_compatible():
    for p, d, e in [(3, 4, 2), (3, 2, 1), (5, 4, 2), (3, 8, 4)]:
        big, small = get_field(p, d), get_field(p, e)
        norm_exp = (p**d - 1) // (p**e - 1)
        assert big.pow(big.zeta, norm_exp) == big.embed(small, small.zeta)


def test_frobenius_order():
    F = get_field(3, 4)
    z = F.zeta
    assert F.frobenius(z, 4) == z
    assert all(F.frobenius(z, k) != z for k in (1, 2, 3))


def field_and_elems(n):
    return st_.sampled_from(FIELDS).flatmap(
        lambda pd: st_.tuples(st_.just(get_field(*pd)),
                              *[st_.integers(0, pd[0] ** pd[1] - 1)] * n))


@given(field_and_elems(3))
def test_field_axioms(data):
    F, a, b, c = data
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.gen_pow(F.log(a)) == a


@given(field_and_elems(2))
def test_frobenius_additive_and_multiplicative(data):
    F, a, b = data
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


@given(st_.integers(0, 8), st_.integers(0, 8))
def test_embed_is_ring_map(a, b):
    big, small = get_field(3, 4), get_field(3, 2)
    e = lambda x: big.embed(small, x)
    assert e(small.add(a, b)) == big.add(e(a), e(b))
    assert e(small.mul(a, b)) == big.mul(e(a), e(b))
    assert big.restrict(small, e(a)) == a


# Laurent series

F3 = get_field(3, 1)


def series(F, coeffs, val=0, prec=None):
    return Laurent(F, coeffs, val, prec)


def test_binomial_power_examples():
    w = series(F3, [1, 1], 0, 9)
    assert binomial_power(w, 0, 9) == series(F3, [1], 0, 9)
    out = binomial_power(series(F3, [1, 1], 0, 9), 9, 9)
    assert out.coeff_list(0, 9) == [1] + [0] * 8
    e = padic_exponent(2, 8, 3, 2)
    assert e == 7
    seven = binomial_power(w, 7, 9)
    assert seven.coeff_list(0, 9) == [comb(7, k) % 3 for k in range(9)]
    assert (seven ** 4).equal_to(w, 9)


def test_binomial_power_precision_guard():
    with pytest.raises(PrecisionError):
        binomial_power(series(F3, [1, 1], 0, 20), 7, 9)


def test_headroom_exponent():
    assert headroom_exponent(3, 44) == 4
    assert headroom_exponent(5, 44) == 3
    assert headroom_exponent(3, 27) == 3


@given(st_.lists(st_.integers(0, 2), min_size=1, max_size=12), st_.lists(st_.integers(0, 2), min_size=1, max_size=12))
def test_series_product_inverse(a, b):
    x = series(F3, [1] + a, 0, 15)
    y = series(F3, b, 0, 15)
    assert (x * y) * x.inverse() == y


@given(st_.lists(st_.integers(0, 2), min_size=1, max_size=15), st_.integers(-5, 5))
def test_psi_left_inverse_of_phi(a, v):
    x = series(F3, a, v)
    assert x.frobenius_t(3).psi(3) == x


@given(st_.lists(st_.integers(0, 2), min_size=2, max_size=8),
       st_.lists(st_.integers(0, 2), min_size=2, max_size=8))
def test_compose_is_associative(a, b):
    g = series(F3, [1] + a, 1, 12)
    h = series(F3, [2] + b, 1, 12)
    x = series(F3, [1, 2, 0, 1], 0, 12)
    assert x.compose(g).compose(h).equal_to(x.compose(g.compose(h)), 11)


def test_psi_examples():
    q = 3
    t = lambda k: Laurent.monomial(F3, k)
    assert t(q).psi(q) == t(1)
    assert t(1).psi(q).is_zero()
    lhs = (series(F3, [1, 1]) ** q) * t(2 * q)
    assert lhs.psi(q) == series(F3, [1, 1]) * t(2)


# Lubin-Tate

def lt_oracle(p: int, a: int, N: int) -> list[int]:
    """[a](t) mod p over Q_p from exact rational arithmetic.

    Solves [a](p t + t^p) = p [a](t) + [a](t)^p one degree at a time with
    Fractions; an independent route from the unit recursion in the package.
    """
    c = [Fraction(0)] * N
    c[1] = Fraction(a)

    def power(coeffs, k):
        out = [Fraction(1)] + [Fraction(0)] * (N - 1)
        for _ in range(k):
            out = [sum(out[i] * coeffs[d - i] for i in range(d + 1)) for d in range(N)]
        return out

    phi = [Fraction(0)] * N
    phi[1] = Fraction(p)
    if p < N:
        phi[p] = Fraction(1)
    for d in range(2, N):
        # coefficient of t^d on both sides, with c_d still zero
        lhs = sum(c[j] * power(phi, j)[d] for j in range(1, d))
        rhs = power(c, p)[d]
        # lhs gains c_d p^d, rhs gains p c_d
        c[d] = (rhs - lhs) / (p**d - p)
    out = []
    for x in c:
        assert x.denominator % p
        out.append(int(x.numerator * pow(x.denominator, -1, p)) % p)
    return out


@pytest.mark.parametrize("p", [3, 5])
def test_lt_two_matches_rational_oracle(p):
    N = 9
    R = OFRing(p, N + 3)
    got = lt_series_mod_pi(R, R.from_int(2), N).coeff_list(0, N)
    assert got == lt_oracle(p, 2, N)


def test_lt_two_frozen_q3():
    R = OFRing(3, 12)
    two = lt_series_mod_pi(R, R.from_int(2), 9)
    assert two.coeff_list(0, 9) == [0, 2, 0, 1, 0, 2, 0, 2, 0]
    four = lt_series_mod_pi(R, R.from_int(4), 9)
    assert two.compose(two).equal_to(four, 9)


def test_lt_trivial_cases():
    R = OFRing(5, 12)
    one = lt_series_mod_pi(R, R.one, 10)
    assert one == Laurent.monomial(R.residue_field, 1).truncate(10)
    pi = lt_series_mod_pi(R, R.pi, 10)
    assert pi == Laurent.monomial(R.residue_field, 5).truncate(10)


def test_lt_precision_guard():
    R = OFRing(3, 8)
    with pytest.raises(PrecisionError):
        lt_series_mod_pi(R, R.from_int(2), 10)


def test_fbar_examples():
    R = OFRing(3, 12)
    F = R.residue_field
    assert fbar(R, R.one, 9) == Laurent.one(F).truncate(9)
    teich = R.teichmuller(F.zeta)
    assert fbar(R, teich, 9) == Laurent.one(F).truncate(9)
    four = fbar(R, R.from_int(4), 8)
    assert four.coeff_list(0, 8) == [1, 0, 2, 0, 2, 0, 0, 0]


def test_fbar_cocycle():
    R = OFRing(3, 14, f=2)
    u, v = R.add(R.one, R.pi), R.from_int(2)
    N = 10
    uv = fbar(R, R.mul(u, v), N)
    acted = fbar(R, v, N).compose(lt_series_mod_pi(R, u, N + 1))
    assert uv.equal_to(fbar(R, u, N) * acted, N)


@given(st_.integers(0, 10**6), st_.integers(0, 10**6))
def test_lt_multiplicative(sa, sb):
    import random

    R = OFRing(3, 15, f=2)
    a, b = R.random_unit(random.Random(sa)), R.random_unit(random.Random(sb))
    N = 12
    lhs = lt_series_mod_pi(R, a, N).compose(lt_series_mod_pi(R, b, N))
    assert lhs.equal_to(lt_series_mod_pi(R, R.mul(a, b), N), N)


@given(st_.integers(0, 10**6), st_.integers(0, 10**6))
def test_reduction_is_homomorphism(sa, sb):
    import random

    R = OFRing(5, 6, f=2)
    assert reduction_is_homomorphism(R, R.random_unit(random.Random(sa)), R.random_unit(random.Random(sb)))
