import pytest
from hypothesis import given
from hypothesis import strategies as st

from reescond.groebner import IdealHandle, colon_by_poly, ideal_intersection
from reescond.monomial_ideal import (
    MonomialIdeal,
    ParseError,
    mi_colon,
    mi_colon_monomial,
    mi_intersection,
    mi_is_m_primary,
    mi_is_nzd,
    mi_is_squarefree,
    mi_member,
    mi_minimalize,
    mi_mu,
    mi_radical,
    mi_sum,
    parse_ideal,
    render_ideal,
)
from reescond.poly import VarContext
from strategies import exponents, ideal_pairs, monomial_ideals


def I(text):
    return parse_ideal(text)


def test_minimalize_examples():
    assert mi_minimalize([(1, 0), (1, 1)]).gens == ((1, 0),)
    assert mi_minimalize([], nvars=3).is_zero()
    v = I("x1*x2, x1*x3, x2*x3")
    assert len(v.gens) == 3


def test_arithmetic_examples():
    assert mi_intersection(I("vars: 3\nx1, x2"), I("vars: 3\nx2, x3")) == I("x2, x1*x3")
    a = I("x1^2*x2, x3")
    assert mi_colon(a, MonomialIdeal.unit(3)) == a
    assert mi_colon_monomial(I("x1*x2*x3"), (0, 1, 0)) == I("vars: 3\nx1*x3")


def test_radical_examples():
    assert mi_radical(I("x1^2")) == I("x1")
    assert mi_radical(I("x1^6, x1*x2^5, x2^2*x3^4, x2^3*x3^3, x4")) == I("x1, x2*x3, x4")
    sq = I("x1*x2, x2*x3")
    assert mi_radical(sq) == sq


def test_primary_and_mu():
    a = I("x1^2, x2^3")
    assert mi_is_m_primary(a) and mi_mu(a) == 2
    assert not mi_is_m_primary(I("vars: 2\nx1"))
    assert not mi_is_m_primary(MonomialIdeal.unit(2))


def test_nzd_examples():
    assert mi_is_nzd(I("vars: 4\nx1*x2, x3"), (0, 0, 0, 1))
    assert not mi_is_nzd(I("x1*x2"), (1, 0))
    assert not mi_is_nzd(I("x1^2, x2^2"), (1, 1))
    with pytest.raises(ValueError):
        mi_is_nzd(MonomialIdeal.unit(2), (1, 0))


def test_parse_examples():
    a = I("x1^2*x2, x3")
    assert a.nvars == 3 and len(a.gens) == 2
    assert I("vars: 5\nx1*x2").nvars == 5
    assert I("1, x1").is_unit()
    assert I("vars: 2\n0").is_zero()


@pytest.mark.parametrize(
    "text,line,col",
    [("x0", 1, 1), ("x1, x2^-1", 1, 5), ("x1\nx2 + x3", 2, 1), ("vars: 2\nx3", 1, 1)],
)
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_ideal(text)
    assert (exc.value.line, exc.value.col) == (line, col)


@given(monomial_ideals(max_n=5, max_deg=5, proper=False))
def test_render_roundtrip(a):
    assert parse_ideal(render_ideal(a)) == a
    if a.is_unit():
        return
    bare = parse_ideal(render_ideal(a, header=False))
    assert bare.extend(a.nvars) == a


@given(st.data())
def test_colon_of_sum_is_intersection_of_colons(data):
    n = data.draw(st.integers(1, 4))
    a, b, c = (MonomialIdeal(n, data.draw(st.lists(exponents(n, 4), min_size=1, max_size=4))) for _ in range(3))
    assert mi_colon(a, mi_sum(b, c)) == mi_intersection(mi_colon(a, b), mi_colon(a, c))


@given(ideal_pairs())
def test_radical_idempotent_and_monotone(pair):
    a, b = pair
    r = mi_radical(a)
    assert mi_radical(r) == r
    assert mi_is_squarefree(r)
    small = mi_intersection(a, b)
    assert mi_radical(small) <= mi_radical(a)


@given(ideal_pairs(max_n=3, max_gens=4, max_deg=3))
def test_agrees_with_groebner_engine(pair):
    a, b = pair
    n = a.nvars
    ctx = VarContext.standard(n)
    A = IdealHandle(ctx, [{tuple(g): 1} for g in a.gens])
    B = IdealHandle(ctx, [{tuple(g): 1} for g in b.gens])

    def back(h):
        return MonomialIdeal(n, [next(iter(g)) for g in h.raw_groebner()])

    assert back(ideal_intersection(A, B)) == mi_intersection(a, b)
    for v in b.gens:
        assert back(colon_by_poly(A, {tuple(v): 1})) == mi_colon_monomial(a, v)
    for g in b.gens:
        assert A.contains_raw({tuple(g): 1}) == mi_member(g, a)
