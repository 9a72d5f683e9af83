import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reescond.groebner import IdealHandle
from reescond.monomial_ideal import MonomialIdeal, parse_ideal
from reescond.rees import (
    ReesPresentation,
    dim_rees,
    dim_sym,
    is_fiber_type,
    is_linear_type,
    max_ydegree_of_J,
    minimal_rees_generators,
)
from strategies import exponents, monomial_ideals

NOT_FIBER = "x1^2*x5, x1*x3*x4, x2^2*x5, x2*x3^2, x3^2*x5, x4^3"


def pres(text) -> ReesPresentation:
    return ReesPresentation(parse_ideal(text))


def y_index(P, text) -> int:
    g = tuple(parse_ideal(f"vars: {P.n}\n{text}").gens[0])
    return P.gens.index(g)


def bin_(P, plus: dict, minus: dict) -> dict:
    """Binomial from {generator text: y-exponent} on each side."""

    def mono(side):
        e = [0] * (P.n + P.m)
        for text, k in side.items():
            e[P.n + y_index(P, text)] += k
        return tuple(e)

    return {mono(plus): 1, mono(minus): -1}


def x_mono(P, text, ys=None):
    e = list(parse_ideal(f"vars: {P.n}\n{text}").gens[0]) + [0] * P.m
    for t, k in (ys or {}).items():
        e[P.n + y_index(P, t)] += k
    return tuple(e)


@pytest.fixture(scope="module")
def square():
    return pres("x1^2, x1*x2, x2^2")


def test_taylor_syzygies(square):
    P = square
    L = P.taylor_syzygies()
    assert len(L) == 3
    i, j = y_index(P, "x1^2"), y_index(P, "x2^2")
    outer = {x_mono(P, "x2^2", {"x1^2": 1}): 1, x_mono(P, "x1^2", {"x2^2": 1}): -1}
    assert any(g in (outer, {k: -v for k, v in outer.items()}) for g in L)
    # the x1^2 / x2^2 syzygy is redundant modulo the other two
    rest = [g for g in L if g not in (outer, {k: -v for k, v in outer.items()})]
    assert i != j and len(rest) == 2
    assert IdealHandle(P.T, rest) == IdealHandle(P.T, L)
    assert pres("x1*x2").taylor_syzygies() == []
    P2 = pres("x1*x2, x3*x4")
    (g,) = P2.taylor_syzygies()
    want = {x_mono(P2, "x3*x4", {"x1*x2": 1}): 1, x_mono(P2, "x1*x2", {"x3*x4": 1}): -1}
    assert g in (want, {k: -v for k, v in want.items()})


def test_rees_ideal_examples(square):
    P = square
    J = P.J
    for g in [
        {x_mono(P, "x2", {"x1^2": 1}): 1, x_mono(P, "x1", {"x1*x2": 1}): -1},
        {x_mono(P, "x2", {"x1*x2": 1}): 1, x_mono(P, "x1", {"x2^2": 1}): -1},
        bin_(P, {"x1^2": 1, "x2^2": 1}, {"x1*x2": 2}),
    ]:
        assert J.contains_raw(g)
    assert pres("x1^2*x2").J.raw_groebner() == []
    P2 = pres("x1, x2")
    assert P2.J == P2.L and len(P2.J_basis()) == 1


def test_fiber_ideal_examples(square):
    (h,) = square.H.raw_groebner()
    assert square.lift_fiber(h) in (
        bin_(square, {"x1^2": 1, "x2^2": 1}, {"x1*x2": 2}),
        bin_(square, {"x1*x2": 2}, {"x1^2": 1, "x2^2": 1}),
    )
    assert pres("x1, x2").H.raw_groebner() == []
    C4 = pres("x1*x2, x2*x3, x3*x4, x1*x4")
    (h,) = C4.H.raw_groebner()
    assert C4.lift_fiber(h) in (
        bin_(C4, {"x1*x2": 1, "x3*x4": 1}, {"x2*x3": 1, "x1*x4": 1}),
        bin_(C4, {"x2*x3": 1, "x1*x4": 1}, {"x1*x2": 1, "x3*x4": 1}),
    )


def test_type_flags(square):
    assert is_linear_type(pres("x1, x2, x3"))
    assert not is_linear_type(square)
    assert is_fiber_type(square)
    assert is_linear_type(pres("x1*x2, x1*x3, x2*x3"))


def test_ydegree(square):
    assert max_ydegree_of_J(pres("x1, x2, x3")) == 1
    assert max_ydegree_of_J(pres("x1^3")) == 0
    assert max_ydegree_of_J(square) == 2
    assert len(minimal_rees_generators(square)) == 3
    # recorded engine value for a non fiber type ideal
    P = pres(NOT_FIBER)
    assert max_ydegree_of_J(P) == 9
    assert not is_fiber_type(P)


def test_dimensions(square):
    assert dim_sym(square) == dim_rees(square) == 3
    P = pres("x1, x2")
    assert dim_sym(P) == dim_rees(P) == 3
    assert dim_rees(pres("x1, x2, x3")) == 4
    assert dim_sym(pres("x1*x2, x1*x3, x2*x3, x1*x4, x2*x4, x3*x4")) == 6


small_ideals = monomial_ideals(max_n=3, max_gens=4, max_deg=3)


@settings(max_examples=40)
@given(small_ideals)
def test_presentation_invariants(a):
    P = ReesPresentation(a)
    J = P.J
    # L inside J
    assert all(J.contains_raw(g, P.J_order) for g in P.taylor_syzygies())
    for g in P.J_basis():
        a_, b_ = g
        assert sorted(g.values()) == [-1, 1]
        assert P.multidegree(a_) == P.multidegree(b_)
        assert not P.substitute(g, with_t=True)
    for h in P.H.raw_groebner():
        lifted = P.lift_fiber(h)
        assert not P.substitute(lifted, with_t=True)
        assert not P.substitute(lifted, with_t=False)
        assert J.contains_raw(lifted, P.J_order)


@settings(max_examples=40)
@given(small_ideals)
def test_type_implications(a):
    P = ReesPresentation(a)
    lt, ft = is_linear_type(P), is_fiber_type(P)
    if lt:
        assert ft
    if ft and not P.H.raw_groebner():
        assert lt


@settings(max_examples=30)
@given(st.data())
def test_scaling_leaves_rees_ideal_unchanged(data):
    a = data.draw(small_ideals)
    u = data.draw(exponents(a.nvars, 3))
    P, Q = ReesPresentation(a), ReesPresentation(a.scale(u))
    assert P.T == Q.T
    assert P.J_basis() == Q.J_basis()
    assert IdealHandle(P.T, P.taylor_syzygies()) == IdealHandle(Q.T, Q.taylor_syzygies())


def test_zero_ideal_rejected():
    with pytest.raises(ValueError):
        ReesPresentation(MonomialIdeal.zero(2))


def test_fiber_ideal_is_graded_by_t():
    # y1*y2*y3 - y4*y5 dies under y_j -> f_j but not under y_j -> f_j t
    P = pres("x1*x2, x3*x4, x5*x6, x1*x3*x5, x2*x4*x6")
    g = bin_(P, {"x1*x2": 1, "x3*x4": 1, "x5*x6": 1}, {"x1*x3*x5": 1, "x2*x4*x6": 1})
    assert not P.substitute(g, with_t=False)
    assert P.substitute(g, with_t=True)
    assert not P.HT().contains_raw(g)
    assert all(sum(a[P.n:]) == sum(b[P.n:]) for a, b in map(tuple, map(P.lift_fiber, P.H.raw_groebner())))
