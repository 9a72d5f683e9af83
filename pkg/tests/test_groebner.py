import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from reescond.groebner import (
    IdealHandle,
    buchberger,
    colon_by_poly,
    elimination_ideal,
    ideal_intersection,
    krull_dimension_of_quotient,
    minimalize_graded,
    normal_form,
    s_polynomial,
    saturation,
)
from reescond.monomial_ideal import MonomialIdeal, mi_colon_monomial, mi_intersection
from reescond.poly import MonomialOrder, Polynomial, VarContext, parse_polynomial
from strategies import exponents, ideal_pairs, polynomials

X2 = VarContext.standard(2)
X3 = VarContext.standard(3)


def P(text, ctx=X3, order=None):
    return parse_polynomial(text, ctx, order)


def monic(p: Polynomial) -> dict:
    lc = p.lc
    return {m: c / lc for m, c in p.as_dict().items()}


def mono_ideal(ctx, a: MonomialIdeal) -> IdealHandle:
    return IdealHandle(ctx, [{tuple(g): 1} for g in a.gens])


def handle_to_monomial(h: IdealHandle, n: int) -> MonomialIdeal:
    gens = []
    for g in h.raw_groebner():
        assert len(g) == 1, f"non-monomial {g}"
        gens.append(next(iter(g)))
    return MonomialIdeal(n, gens)


# -- spec examples --------------------------------------------------------------


def test_normal_form_examples():
    lex = MonomialOrder.lex(3)
    assert normal_form(P("x1*x2", order=lex), [P("x1", order=lex)], lex).is_zero()
    assert normal_form(P("x1 + x2", order=lex), [P("x1 - x2", order=lex)], lex) == P("2*x2")
    f = P("x1^2 + 3*x3")
    assert normal_form(f, []) == f


def test_groebner_examples():
    lex = MonomialOrder.lex(3)
    assert buchberger([P("x1 - x2", order=lex)], lex) == [P("x1 - x2", order=lex)]
    gens = [P("x1^2*x2"), P("x1^3"), P("x1*x2")]
    gb = buchberger(gens)
    assert sorted(sorted_items(g.as_dict()) for g in gb) == [(((1, 1, 0), 1),), (((3, 0, 0), 1),)]


def test_membership_examples():
    I = IdealHandle(X3, [P("x1")])
    assert P("x1^2") in I
    assert P("x2") not in I


def test_cusp_elimination():
    ctx = VarContext(("x1", "y1", "y2"), 1)
    I = IdealHandle(ctx, [P("y1 - x1^2", ctx), P("y2 - x1^3", ctx)])
    E = elimination_ideal(I, ["x1"])
    (g,) = E.groebner()
    assert monic(g) == {(3, 0): 1, (0, 2): -1} or monic(g) == {(0, 2): 1, (3, 0): -1}
    assert elimination_ideal(I, []) is I
    assert elimination_ideal(IdealHandle(X3, [P("x1")]), [0]).is_zero()


def test_intersection_examples():
    a = IdealHandle(X3, [P("x1")])
    b = IdealHandle(X3, [P("x2")])
    assert ideal_intersection(a, b) == IdealHandle(X3, [P("x1*x2")])
    assert ideal_intersection(a, a) == a
    c = IdealHandle(X3, [P("x1"), P("x2")])
    d = IdealHandle(X3, [P("x2"), P("x3")])
    assert ideal_intersection(c, d) == IdealHandle(X3, [P("x2"), P("x1*x3")])


def test_colon_and_saturation_examples():
    I = IdealHandle(X2, [P("x1*x2", X2)])
    assert colon_by_poly(I, P("x1", X2)) == IdealHandle(X2, [P("x2", X2)])
    assert colon_by_poly(I, P("1", X2)) == I
    assert saturation(I, P("x1", X2)) == IdealHandle(X2, [P("x2", X2)])
    assert saturation(I, P("1", X2)) == I
    K = IdealHandle(X2, [P("x1^2*x2", X2), P("x1*x2^2", X2)])
    assert saturation(K, P("x1*x2", X2)).is_unit()


def test_dimension_examples():
    assert krull_dimension_of_quotient(IdealHandle(X3, [])) == 3
    assert krull_dimension_of_quotient(IdealHandle(X2, [P("x1*x2", X2)])) == 1
    assert krull_dimension_of_quotient(IdealHandle(X2, [P("1", X2)])) == -1


def test_minimalize_graded_examples():
    gens = [P("x1"), P("x1^2")]
    assert minimalize_graded(gens) == [P("x1")]
    assert minimalize_graded([P("x1"), P("x2")]) == [P("x1"), P("x2")]
    with pytest.raises(ValueError):
        minimalize_graded([P("x1 + x2^2")])


# -- properties -------------------------------------------------------------------


def _sympy_gb(polys, order, n):
    xs = sympy.symbols(f"x1:{n + 1}")
    exprs = [sum(c * sympy.prod(x**e for x, e in zip(xs, m)) for m, c in p.items()) for p in polys]
    G = sympy.groebner(exprs, *xs, order=order)
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *xs)
        out.append({tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})
    return out


@settings(max_examples=40)
@given(st.data())
def test_reduced_basis_matches_sympy(data):
    n = data.draw(st.integers(2, 3))
    polys = data.draw(st.lists(polynomials(n, max_terms=3, max_deg=2), min_size=1, max_size=3))
    polys = [p for p in polys if p]
    if not polys:
        return
    ctx = VarContext.standard(n)
    for ours, theirs in [(MonomialOrder.degrevlex(n), "grevlex"), (MonomialOrder.lex(n), "lex")]:
        gb = buchberger([Polynomial(ctx, p, ours) for p in polys], ours)
        want = _sympy_gb(polys, theirs, n)
        got = [monic(g) for g in gb]
        want = [{m: c / w[max(w, key=ours.key)] for m, c in w.items()} for w in want]
        assert sorted(map(sorted_items, got)) == sorted(map(sorted_items, want))


def sorted_items(d):
    return tuple(sorted(d.items()))


@given(st.data())
def test_reduced_basis_is_canonical(data):
    n = 3
    polys = [p for p in data.draw(st.lists(polynomials(n, max_terms=3, max_deg=2), min_size=1, max_size=3)) if p]
    if not polys:
        return
    order = MonomialOrder.degrevlex(n)
    gens = [Polynomial(X3, p, order) for p in polys]
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    mixed = list(gens)
    for _ in range(2):
        a, b = rng.choice(gens), rng.choice(gens)
        mult = Polynomial(X3, {tuple(rng.randint(0, 1) for _ in range(n)): rng.randint(1, 3)}, order)
        mixed.append(a * mult + b)
    rng.shuffle(mixed)
    assert [g.as_dict() for g in buchberger(gens, order)] == [g.as_dict() for g in buchberger(mixed, order)]


@given(st.data())
def test_s_pairs_reduce_to_zero(data):
    polys = [p for p in data.draw(st.lists(polynomials(3, max_terms=3, max_deg=2), min_size=1, max_size=3)) if p]
    if not polys:
        return
    order = MonomialOrder.degrevlex(3)
    gb = buchberger([Polynomial(X3, p, order) for p in polys], order)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            assert normal_form(s_polynomial(gb[i], gb[j], order), gb, order).is_zero()


@given(st.data())
def test_binomial_input_gives_binomial_basis(data):
    n = 4
    ctx = VarContext.standard(n)
    gens = []
    for _ in range(data.draw(st.integers(1, 3))):
        a = data.draw(exponents(n, 3))
        b = data.draw(exponents(n, 3))
        if a != b:
            gens.append(Polynomial.binomial(ctx, a, b))
    if not gens:
        return
    order = data.draw(st.sampled_from([MonomialOrder.lex(n), MonomialOrder.degrevlex(n)]))
    for g in buchberger(gens, order):
        assert g.is_pure_difference_binomial()


@given(ideal_pairs(max_n=3, max_gens=3, max_deg=3))
def test_monomial_intersection_and_colon_agree(pair):
    a, b = pair
    ctx = VarContext.standard(a.nvars)
    A, B = mono_ideal(ctx, a), mono_ideal(ctx, b)
    assert handle_to_monomial(ideal_intersection(A, B), a.nvars) == mi_intersection(a, b)
    v = b.gens[0]
    assert handle_to_monomial(colon_by_poly(A, {tuple(v): 1}), a.nvars) == mi_colon_monomial(a, v)
