import pytest
from hypothesis import given
from hypothesis import strategies as st_

from modpgl2.satake import (
    NonRegular,
    Regular,
    SPoint,
    central_character_data,
    check_spoint,
    component,
    components,
    enumerate_spoints,
    spoint_dict,
    supersingular_points,
    twist_action_s,
)
from modpgl2.setting import setting
from modpgl2.types_weights import enumerate_types

S3, S5 = setting(3), setting(5)


def test_q5_even_components():
    comps = components(S5, 0)
    assert [c.t for c in comps] == [(0, 0), (1, 3), (2, 2)]
    assert [c.regular for c in comps] == [False, True, False]


def test_q5_odd_components():
    comps = components(S5, 3)
    assert [c.t for c in comps] == [(2, 1), (3, 0)]
    assert all(c.regular for c in comps)


def test_q3_even_components():
    comps = components(S3, 0)
    assert [c.i for c in comps] == [0, 1]
    assert not any(c.regular for c in comps)


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_component_pattern(p, f):
    st = setting(p, f)
    q = st.q
    for n in st.n_range():
        comps = components(st, n)
        if n % 2 == 0:
            assert len(comps) == (q + 1) // 2
            assert [c.regular for c in comps] == [False] + [True] * ((q - 3) // 2) + [False]
        else:
            assert len(comps) == (q - 1) // 2 and all(c.regular for c in comps)
        assert len(supersingular_points(st, n, 1)) == len(enumerate_types(st, st.d_of(n), 2))
        # determinant of each torus value is zeta^n
        assert all((c.label[0] + c.label[1]) % (q - 1) == n for c in comps)


def test_twist_examples():
    st = S5
    B = st.big
    s = SPoint(0, 1, 1, Regular(B.from_int(2), 0))
    assert twist_action_s(st, (0, 1), s) == s
    z = B.from_int(3)
    out = twist_action_s(st, (0, z), s)
    assert out.coords == Regular(B.from_int(1), 0) and out.z2 == B.from_int(4)
    base = SPoint(0, 1, 0, NonRegular(0))
    moved = twist_action_s(st, (1, 1), base)
    assert moved.n == 2 and component(st, 2, moved.i).label == (1, 1)


def test_supersingular_counts():
    assert len(supersingular_points(S5, 0, 1)) == 3
    assert len(supersingular_points(S5, 3, 1)) == 2
    assert sum(len(supersingular_points(S3, n, 1)) for n in S3.n_range()) == 3


def test_central_character_examples():
    st = S5
    assert central_character_data(st, SPoint(0, 1, 0, NonRegular(0))) == ((0, 0), 1)
    gamma, u2 = central_character_data(st, SPoint(0, 1, 1, Regular(0, 0)))
    assert gamma == (1, 3)
    z = st.big.from_int(3)
    assert central_character_data(st, SPoint(0, z, 1, Regular(0, 0)))[1] == z


def test_invalid_points_rejected():
    st = S5
    with pytest.raises(ValueError):
        check_spoint(st, SPoint(0, 1, 1, Regular(1, 1)))
    with pytest.raises(ValueError):
        check_spoint(st, SPoint(0, 1, 0, Regular(0, 0)))
    with pytest.raises(ValueError):
        check_spoint(st, SPoint(0, 1, 1, NonRegular(0)))
    with pytest.raises(ValueError):
        check_spoint(st, SPoint(0, 0, 0, NonRegular(0)))


def test_spoint_json_shape():
    d = spoint_dict(S5, SPoint(0, 1, 1, Regular(2, 0)))
    assert d["coords"] == {"kind": "regular", "x": S5.fmt_scalar(2), "y": "0"}


def test_ordering_preserved_from_base_fibers():
    # twisting the base ordering by (zeta^s, 1) gives the listed ordering of fiber n
    for st in (S3, S5, setting(7)):
        for n in st.n_range():
            base = 0 if n % 2 == 0 else st.q - 2
            k = (n - base) // 2
            labels = [((c.label[0] + k) % (st.q - 1), (c.label[1] + k) % (st.q - 1)) for c in components(st, base)]
            assert labels == [c.label for c in components(st, n)]


SP5 = [s for n in S5.n_range() for s in enumerate_spoints(S5, n, 1)]
group = st_.tuples(st_.integers(0, 3), st_.integers(0, 23))


@given(st_.sampled_from(SP5), group, group)
def test_group_action(s, g, h):
    st = S5
    C, B = st.coeff, st.big
    g = (g[0], B.embed(C, C.gen_pow(g[1])))
    h = (h[0], B.embed(C, C.gen_pow(h[1])))
    gh = ((g[0] + h[0]) % 4, B.mul(g[1], h[1]))
    assert twist_action_s(st, g, twist_action_s(st, h, s)) == twist_action_s(st, gh, s)
    check_spoint(st, twist_action_s(st, g, s))
