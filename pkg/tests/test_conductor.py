import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reescond.conductor import (
    ResourceCapExceeded,
    check_equalJ,
    check_radical_containment,
    colon_L_into_R,
    conductor,
    conductor_member_oracle,
    conductor_of,
    dim_criterion_check,
    reachability_member,
    relevant_generators,
    valla_check,
    ydeg2_implies_containment_check,
)
from reescond.monomial_ideal import MonomialIdeal, mi_is_m_primary, mi_member, parse_ideal
from reescond.rees import ReesPresentation, is_linear_type
from strategies import exponents, monomial_ideals

SQUARE = "x1^2, x1*x2, x2^2"
C4 = "x1*x2, x2*x3, x3*x4, x1*x4"
LOOPS = "x1^2, x2^2, x3^2, x4^2, x1*x2, x3*x4"
NONSQFREE = "x1*x2*x3, x1*x2*x6, x1*x3*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x2*x3*x6, x3*x4*x6"
NOT_FIBER = "x1^2*x5, x1*x3*x4, x2^2*x5, x2*x3^2, x3^2*x5, x4^3"
PRIMARY_C = "x1^6, x1*x2^5, x2^2*x3^4, x2^3*x3^3, x4"

_cache: dict = {}


def P_(text) -> ReesPresentation:
    if text not in _cache:
        _cache[text] = ReesPresentation(parse_ideal(text))
    return _cache[text]


def mono(P, text):
    return tuple(parse_ideal(f"vars: {P.n}\n{text}").gens[0])


def test_colon_examples():
    P = P_(SQUARE)
    (h,) = relevant_generators(P)
    assert colon_L_into_R(P, h) == parse_ideal("x1, x2")
    g = P.taylor_syzygies()[0]
    assert colon_L_into_R(P, g).is_unit()
    Q = P_(C4)
    (h,) = relevant_generators(Q)
    assert colon_L_into_R(Q, h) == MonomialIdeal.maximal(4)


def test_colon_rejects_non_multigraded():
    P = P_(SQUARE)
    bad = {(1, 0, 1, 0, 0): 1, (0, 1, 1, 0, 0): -1}
    with pytest.raises(ValueError):
        colon_L_into_R(P, bad)


def test_conductor_examples():
    assert conductor(P_(SQUARE)).conductor == parse_ideal("x1, x2")
    m = MonomialIdeal.maximal(4)
    assert conductor(P_(LOOPS)).conductor == m * m
    rep = conductor(P_("x1, x2, x3"))
    assert rep.conductor.is_unit() and rep.linear_type
    assert conductor_of(MonomialIdeal.zero(2)).conductor.is_unit()


def test_reachability_examples():
    P = P_(SQUARE)
    L = P.taylor_syzygies()
    assert reachability_member(L, L[1], P)
    (h,) = relevant_generators(P)
    a, b = h
    x1 = P.lift_x((1, 0))
    shifted = {tuple(p + q for p, q in zip(a, x1)): 1, tuple(p + q for p, q in zip(b, x1)): -1}
    assert reachability_member(L, shifted, P)
    assert not reachability_member(L, h, P)
    assert reachability_member(L, (a, a), P)
    Q = P_(NONSQFREE)
    with pytest.raises(ResourceCapExceeded):
        conductor_member_oracle(Q, mono(Q, "x4"), cap=2)


def test_oracle_examples():
    P = P_(NONSQFREE)
    assert not conductor_member_oracle(P, mono(P, "x4"))
    assert conductor_member_oracle(P, mono(P, "x4^2"))
    Q = P_(NOT_FIBER)
    assert not conductor_member_oracle(Q, mono(Q, "x1^2*x5"))
    assert conductor_member_oracle(P_("x1, x2"), (0, 0))


def test_fixture_ideals():
    c2 = conductor(P_(NONSQFREE), full=False).conductor
    assert mi_member(mono(P_(NONSQFREE), "x4^2"), c2) and not mi_member(mono(P_(NONSQFREE), "x4"), c2)
    c3 = conductor(P_(NOT_FIBER), full=False).conductor
    assert not mi_member(mono(P_(NOT_FIBER), "x1^2*x5"), c3)
    ca = conductor(P_(PRIMARY_C), full=False).conductor
    assert mi_is_m_primary(ca) and not mi_is_m_primary(P_(PRIMARY_C).ideal)


def test_equal_J_examples():
    assert check_equalJ(P_(SQUARE), (1, 0))
    rep = conductor(P_(C4))
    assert all(check_equalJ(P_(C4), r, rep) for r in rep.conductor.gens)
    assert check_equalJ(P_("x1, x2"), (0, 0))
    with pytest.raises(ValueError):
        check_equalJ(P_(SQUARE), (0, 0))


def test_checker_examples():
    assert check_radical_containment(P_(SQUARE))
    assert check_radical_containment(P_("x1, x2"))

    lin = ReesPresentation(parse_ideal("vars: 3\nx1, x2"))
    res = valla_check(lin, (0, 0, 1))
    assert res.upper_ok and res.k_min == 1 and res.linear_type_before and res.linear_type_after

    sq3 = ReesPresentation(parse_ideal("vars: 3\n" + SQUARE))
    res = valla_check(sq3, (0, 0, 1))
    assert res.upper_ok and res.k_min is not None
    with pytest.raises(ValueError):
        valla_check(P_("x1*x2"), (1, 0))

    d = dim_criterion_check(P_(SQUARE))
    assert (d.applicable, d.lhs, d.rhs) == (True, True, True)
    assert dim_criterion_check(P_(PRIMARY_C)).applicable
    d = dim_criterion_check(P_("x1*x2, x1*x3, x2*x3, x1*x4, x2*x4, x3*x4"))
    assert (d.applicable, d.lhs, d.rhs) == (True, False, False)

    y = ydeg2_implies_containment_check(P_(SQUARE))
    assert y.applicable and y.holds
    y = ydeg2_implies_containment_check(P_(NOT_FIBER))
    assert not y.applicable and not y.holds
    y = ydeg2_implies_containment_check(P_("x1, x2"))
    assert y.applicable and y.holds


small = monomial_ideals(max_n=3, max_gens=5, max_deg=3)


@settings(max_examples=40)
@given(small)
def test_fast_path_matches_full(a):
    P = ReesPresentation(a)
    full = conductor(P)
    fast = conductor(P, full=False)
    assert full.conductor == fast.conductor
    assert full.conductor.is_unit() == is_linear_type(P)
    assert len(fast.per_generator) + len(fast.skipped) == len(full.per_generator)


@settings(max_examples=40)
@given(st.data())
def test_oracle_agrees_with_engine(data):
    a = data.draw(small)
    P = ReesPresentation(a)
    C = conductor(P, full=False).conductor
    for _ in range(3):
        u = data.draw(exponents(a.nvars, 4))
        assert conductor_member_oracle(P, u) == mi_member(u, C)


@settings(max_examples=30)
@given(st.data())
def test_reachability_matches_groebner_membership(data):
    a = data.draw(small)
    P = ReesPresentation(a)
    L = P.taylor_syzygies()
    for h in P.J_basis():
        u = P.lift_x(data.draw(exponents(a.nvars, 2)))
        x, y = h
        g = {tuple(p + q for p, q in zip(x, u)): 1, tuple(p + q for p, q in zip(y, u)): -1}
        assert reachability_member(L, g, P) == P.L.contains_raw(g)


@settings(max_examples=25)
@given(st.data())
def test_scaled_conductor_is_unchanged(data):
    a = data.draw(small)
    u = data.draw(exponents(a.nvars, 3))
    assert conductor_of(a.scale(u), full=False).conductor == conductor_of(a, full=False).conductor


def test_parallel_colons_match_serial():
    P = P_(NONSQFREE)
    serial = conductor(P)
    par = conductor(P, jobs=2)
    assert par.conductor == serial.conductor
    assert [c for _, c in par.per_generator] == [c for _, c in serial.per_generator]
