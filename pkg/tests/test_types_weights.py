from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st_

from modpgl2.setting import setting
from modpgl2.types_weights import (
    TypeWriting,
    Weight,
    all_weights,
    chain_weight_labels,
    digits,
    digits_to_weight,
    enumerate_types,
    generic_writings,
    hw,
    identity_tuple,
    is_generic,
    lambda_candidates_i_ii,
    matching_candidates,
    membership_weight,
    niveau1,
    not_in_W_tau,
    other_writing,
    serre_report,
    shifted_digits,
    type_writings,
    weight,
    weight_to_digits,
    writing_type,
)


def test_q5_det1_types():
    st = setting(5)
    n1 = enumerate_types(st, 1, 1)
    assert {t.exps for t in n1} == {(0, 1), (2, 3)}
    assert len(set(enumerate_types(st, 1, 2))) == 3


def test_q3_totals():
    st = setting(3)
    assert sum(len(set(enumerate_types(st, d, 1))) for d in range(2)) == 3
    assert sum(len(set(enumerate_types(st, d, 2))) for d in range(2)) == 3


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_types_cover_brute_force(p, f):
    # every niveau-1 pair and every primitive level-2 orbit shows up exactly once, at its determinant
    st = setting(p, f)
    q = st.q
    pairs = {niveau1(st, a, b) for a in range(q - 1) for b in range(q - 1)}
    listed = [t for d in range(q - 1) for t in enumerate_types(st, d, 1)]
    assert sorted(listed) == sorted(pairs)
    for t in listed:
        assert t in enumerate_types(st, t.det_exponent(st), 1)
    M = q * q - 1
    orbits = {tuple(sorted((E, q * E % M))) for E in range(M) if E % (q + 1)}
    lv2 = [t.exps for d in range(q - 1) for t in enumerate_types(st, d, 2)]
    assert sorted(lv2) == sorted(orbits)


def test_hw_examples():
    st = setting(5)
    assert hw(st, weight(st, 0, 0)) == (0, 0)
    assert hw(st, weight(st, 2, 1)) == (3, 1)
    assert hw(st, weight(st, 3, 0)) == (3, 0)


def test_hw_injective_below_q_minus_1():
    st = setting(7)
    ws = [w for w in all_weights(st) if w.r <= st.q - 2]
    assert len({hw(st, w) for w in ws}) == len(ws)
    # the known coincidence: F(q-1) and F(0) share highest weights
    assert hw(st, weight(st, st.q - 1, 2)) == hw(st, weight(st, 0, 2))


def test_digit_examples():
    assert digits(setting(3, 2), 5) == (2, 1)
    assert digits(setting(3, 3), 0) == (0, 0, 0)
    assert digits(setting(5, 2), 13) == (3, 2)


@pytest.mark.parametrize("p,f", [(3, 2), (5, 2), (3, 3)])
def test_digit_dictionary_bijective(p, f):
    st = setting(p, f)
    ws = all_weights(st)
    assert len(ws) == st.q * (st.q - 1)
    assert all(digits_to_weight(st, weight_to_digits(st, w)) == w for w in ws)


def test_generic_examples():
    st = setting(3, 2)
    assert shifted_digits(st, TypeWriting(4, 0)) == (1, 0)
    tau = writing_type(st, TypeWriting(4, 0))
    assert is_generic(st, tau)
    assert not is_generic(st, writing_type(st, TypeWriting(3, 0)))
    st1 = setting(3)
    assert is_generic(st1, writing_type(st1, TypeWriting(1, 0)))


@pytest.mark.parametrize("p,f", [(3, 2), (5, 2), (7, 1)])
def test_writings_are_the_two_orbit_representatives(p, f):
    st = setting(p, f)
    for tw in generic_writings(st):
        tws = type_writings(st, writing_type(st, tw))
        assert set(tws) == {tw, other_writing(st, tw)}


def brute_candidates(p, f, cyclic):
    """Conditions (i) and (ii) evaluated on symbolic names, independently of the package encoding."""
    first = ["x", "x-1", "p-2-x", "p-1-x"]
    rest = ["x", "x+1", "p-2-x", "p-3-x"]
    trig0, trig = {"x", "x-1"}, {"x", "x+1"}
    ok_next = {"x", "p-2-x"}
    out = set()
    for lam in product(first, *[rest] * (f - 1)):
        good = True
        for i in range(f if cyclic else f - 1):
            t = trig0 if i == 0 else trig
            if lam[i] in t and lam[(i + 1) % f] not in ok_next:
                good = False
        if good:
            out.add(lam)
    return out


NAMES = {(1, 0): "x", (1, -1): "x-1", (1, 1): "x+1"}


def name(st, entry):
    p = st.p
    eps, c = entry
    if eps == 1:
        return NAMES[entry]
    return {p - 1: "p-1-x", p - 2: "p-2-x", p - 3: "p-3-x"}[c]


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (3, 2), (5, 2), (5, 3)])
@pytest.mark.parametrize("cyclic", [True, False])
def test_candidates_match_brute_force(p, f, cyclic):
    st = setting(p, f)
    got = {tuple(name(st, e) for e in lam) for lam in lambda_candidates_i_ii(st, cyclic)}
    assert got == brute_candidates(p, f, cyclic)


def test_candidate_examples():
    for p, f in [(3, 2), (5, 2), (5, 3)]:
        st = setting(p, f)
        cands = lambda_candidates_i_ii(st)
        assert identity_tuple(st) in cands
        assert ((-1, p - 1),) + ((-1, p - 3),) * (f - 1) in cands
    assert len(lambda_candidates_i_ii(setting(3))) >= 2
    # frozen from the brute force above
    assert len(lambda_candidates_i_ii(setting(5, 2), True)) == 9
    assert len(lambda_candidates_i_ii(setting(5, 2), False)) == 12


def test_not_in_w_tau_guards():
    with pytest.raises(ValueError):
        not_in_W_tau(setting(5), Weight(1, 0), TypeWriting(1, 0))
    st = setting(3, 2)
    with pytest.raises(ValueError):
        not_in_W_tau(st, Weight(1, 0), TypeWriting(3, 0))


@pytest.mark.parametrize("p", [3, 5])
def test_membership_weight_always_matched(p):
    st = setting(p, 2)
    for cyclic in (True, False):
        for mode in ("values", "formal"):
            for tw in generic_writings(st):
                assert identity_tuple(st) in matching_candidates(st, membership_weight(st, tw), tw, cyclic, mode)


@pytest.mark.parametrize("p", [3, 5])
def test_formal_replay_certifies_every_writing(p):
    # the affine-form comparison, a weaker statement than the value-level certificate
    st = setting(p, 2)
    for cyclic in (True, False):
        for tw in generic_writings(st):
            row = serre_report(st, tw, cyclic, "formal")
            assert all(v for k, v in row.items() if k not in ("r", "s", "digits")), row


def test_value_certificate_fails_on_coincident_digits():
    # p = 3, digits (1, 0): the target x_1 + 1 and the candidate p-2-x_1 agree at x_1 = 0
    st = setting(3, 2)
    row = serre_report(st, TypeWriting(4, 0), True, "values")
    assert not row["first_not_in"]
    assert row["membership_matched"]


def test_second_weight_exponents_agree():
    for p in (3, 5):
        st = setting(p, 2)
        for cyclic in (True, False):
            for mode in ("values", "formal"):
                for tw in generic_writings(st):
                    row = serre_report(st, tw, cyclic, mode)
                    assert row["second_not_in_exp_r_minus_1"] == row["second_not_in_exp_r"]


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_chain_weight_label_shapes(p, f):
    st = setting(p, f)
    even = chain_weight_labels(st, "even")
    odd = chain_weight_labels(st, "odd")
    assert sorted(even) == list(range(st.half))
    assert sorted(odd) == list(range(st.half + 1))
    assert odd[0][0] is None and odd[st.half][1] is None
    assert even[0] == (weight(st, 0, 0), weight(st, st.q - 3, 1))


@given(st_.integers(0, 7))
def test_chain_labels_shift_with_det(k):
    st = setting(3, 2)
    base = chain_weight_labels(st, "odd")
    shifted = chain_weight_labels(st, "odd", k)
    for idx in base:
        for w0, w1 in zip(base[idx], shifted[idx]):
            if w0 is None:
                assert w1 is None
            else:
                assert (w1.r, w1.s) == (w0.r, (w0.s + k) % 8)
