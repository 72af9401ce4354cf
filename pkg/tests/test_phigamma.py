import pytest
from hypothesis import given
from hypothesis import strategies as st_

from modpgl2.arith.series import Laurent, PrecisionError
from modpgl2.phigamma import (
    PSI_NORMALIZATIONS,
    PhiGammaModule,
    build_irreducible_module,
    check_psi_stable,
    check_semilinearity,
    exterior_det_check,
    fbar_in_one_plus_t,
    matrix_json,
    psi,
    sample_units,
    sharp_lattice,
    tensor_with_character,
    torsion_dual_relations,
)
from modpgl2.setting import setting

S3, S5 = setting(3), setting(5)


def with_matrix(D, A):
    return PhiGammaModule(D.st, D.R, D.N, A, list(D.exponents), D.s, D.scalar, D.M)


def test_q3_level2_matrix():
    st = S3
    B = st.big
    D = build_irreducible_module(st, 1, 2, N=12)
    assert D.A[0][0].is_zero() and D.A[1][1].is_zero()
    assert D.A[1][0] == Laurent.monomial(B, 0, 1)
    assert D.A[0][1] == Laurent.monomial(B, -2, B.neg(1))
    assert D.exponents == [(2, 8), (6, 8)]


def test_trivial_rank_one():
    st = S5
    D = build_irreducible_module(st, 0, 1, N=12)
    assert D.A == [[Laurent.monomial(st.big, 0, 1)]]
    one = Laurent.monomial(st.big, 0, 1)
    for u in sample_units(D.R, 4):
        assert (D.G(u)[0][0] - one).is_zero()


def test_teichmuller_acts_by_omega_power():
    st = S3
    D = build_irreducible_module(st, 1, 2, N=12)
    u = sample_units(D.R, 1)[0]
    assert fbar_in_one_plus_t(D, [u])
    one = Laurent.monomial(st.big, 0, 1)
    for j in range(2):
        assert (D.fbar(u) - one).is_zero()
        assert (D.G(u)[j][j] - one).is_zero()


@pytest.mark.parametrize("p,f,n,h", [(3, 1, 2, 1), (3, 1, 3, 1), (5, 1, 2, 3), (3, 2, 2, 1)])
def test_semilinearity_to_t40(p, f, n, h):
    st = setting(p, f)
    D = build_irreducible_module(st, h, n, N=44)
    rep = check_semilinearity(D, sample_units(D.R, 4))
    assert rep["ok"], rep
    assert rep["precision"] >= 40


def test_corrupted_matrix_breaks_commutation():
    st = S3
    B = st.big
    D = build_irreducible_module(st, 1, 2, N=20)
    A = [row[:] for row in D.A]
    A[1][0] = A[1][0] + Laurent.monomial(B, 3, 1)
    rep = check_semilinearity(with_matrix(D, A), sample_units(D.R, 3))
    assert not rep["ok"]
    assert any(r["first_difference"] is not None for r in rep["commutation"])


def test_wrong_exponent_breaks_commutation():
    st = S5
    D = build_irreducible_module(st, 2, 2, N=20)
    bad = PhiGammaModule(st, D.R, D.N, D.A, [D.exponents[1], D.exponents[0]], D.s, D.scalar, D.M)
    assert not check_semilinearity(bad, sample_units(D.R, 3))["ok"]


@pytest.mark.parametrize("n", [2, 3])
def test_exterior_determinant(n):
    D = build_irreducible_module(S3, 1, n, N=20)
    rep = exterior_det_check(D, 1, sample_units(D.R, 4))
    assert rep["ok"], rep


def test_twisted_determinant():
    st = S5
    D = tensor_with_character(build_irreducible_module(st, 3, 2, N=20), 1, st.big.from_int(2))
    assert exterior_det_check(D, 3, sample_units(D.R, 3))["ok"]


def test_tensor_with_character():
    st = S5
    B = st.big
    D = build_irreducible_module(st, 1, 2, N=12)
    same = tensor_with_character(D, 0, 1)
    assert same.A == D.A and same.s == D.s
    two = B.from_int(2)
    T = tensor_with_character(D, 0, two)
    assert T.A[1][0] == Laurent.monomial(B, 0, two)
    twice = tensor_with_character(tensor_with_character(D, 1, two), 2, two)
    once = tensor_with_character(D, 3, B.mul(two, two))
    assert twice.A == once.A and twice.s == once.s and twice.scalar == once.scalar
    assert check_semilinearity(twice, sample_units(D.R, 3))["ok"]


def test_guards():
    with pytest.raises(PrecisionError):
        build_irreducible_module(S3, 1, 2, N=20, K=22)
    with pytest.raises(ValueError):
        build_irreducible_module(S3, 4, 2)
    with pytest.raises(ValueError):
        build_irreducible_module(S3, 1, 2, lam=0)
    with pytest.raises(ValueError):
        psi(Laurent.monomial(S3.big, 0, 1), 3, "other")


def test_psi_examples():
    B = S3.big
    x = Laurent.monomial(B, 3, 1) + Laurent.monomial(B, 2, 1) + Laurent.monomial(B, 6, 2)
    assert psi(x, 3, "canonical") == Laurent.monomial(B, 1, 1) + Laurent.monomial(B, 2, 2)
    assert psi(Laurent.monomial(B, 2, 1), 3, "trace") == Laurent.monomial(B, 0, 1)
    assert psi(Laurent.monomial(B, 2, 1), 3, "canonical").is_zero()


@given(st_.lists(st_.integers(0, 8), min_size=1, max_size=8), st_.sampled_from(PSI_NORMALIZATIONS))
def test_psi_left_inverse_of_phi(cs, norm):
    B = S3.big
    x = sum((Laurent.monomial(B, j, c) for j, c in enumerate(cs)), Laurent.zero(B))
    assert psi(x.frobenius_t(3), 3, norm) == x


def test_lattice_examples():
    L = sharp_lattice(S3, 1)
    assert L.weights[:2] == (0, 2) and L.shifts == (0, 0)
    L = sharp_lattice(S3, 2)
    assert L.weights[:2] == (1, 1) and L.shifts == (0, 1) and L.h2 == 4
    with pytest.raises(ValueError):
        sharp_lattice(S3, 3)


@pytest.mark.parametrize("p,h", [(3, 1), (3, 2), (5, 1), (5, 3), (7, 4)])
@pytest.mark.parametrize("norm", PSI_NORMALIZATIONS)
def test_lattice_psi_stable(p, h, norm):
    st = setting(p)
    L = sharp_lattice(st, h)
    assert L.h2 == h * (st.q - 1)
    assert check_psi_stable(st, L, normalization=norm)


@pytest.mark.parametrize("norm,want", [("canonical", False), ("trace", True)])
def test_torsion_relations(norm, want):
    for h in (1, 2):
        rep = torsion_dual_relations(S3, h, normalization=norm)
        assert rep["t^k1 phi(e'0) = e'1"] is want
        assert rep["t^k0 phi(e'1) = -e'0"] is want


def test_wrong_sign_breaks_torsion_relation():
    st = S5
    D = build_irreducible_module(st, 2, 2)
    A = [row[:] for row in D.A]
    A[0][1] = A[0][1].scale(st.big.neg(1))
    rep = torsion_dual_relations(st, 2, D=with_matrix(D, A), normalization="trace")
    assert not (rep["t^k1 phi(e'0) = e'1"] and rep["t^k0 phi(e'1) = -e'0"])


def test_matrix_json_shape():
    D = build_irreducible_module(S3, 1, 2, N=12)
    js = matrix_json(S3, D.A)
    assert js[0][0]["val"] is None
    assert js[0][1]["val"] == -2 and js[1][0] == {"val": 0, "prec": None, "coeffs": [1]}
