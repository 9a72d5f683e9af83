"""Buchberger's algorithm and the ideal operations built on it.

The engine works on "raw" polynomials, ``dict[exponent tuple, int]``, kept
primitive (integer coefficients, content 1, positive leading coefficient).
:class:`IdealHandle` wraps generators given as :class:`Polynomial` and caches
reduced bases per monomial order.
"""

from __future__ import annotations

import heapq
import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from operator import add, sub
from typing import Iterable, Sequence

from .poly import ContextMismatch, MonomialOrder, Polynomial, VarContext, multidegree_of

_MASKS: dict[tuple, int] = {}


def _mask(e: tuple) -> int:
    m = _MASKS.get(e)
    if m is None:
        m = 0
        for i, x in enumerate(e):
            if x:
                m |= 1 << i
        if len(_MASKS) > 2_000_000:
            _MASKS.clear()
        _MASKS[e] = m
    return m


def _primitive(f: dict) -> dict:
    if not f:
        return f
    g = 0
    for v in f.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g != 1:
        f = {k: v // g for k, v in f.items()}
    return f


def _make_entry(f: dict, key, sugar=0):
    """Reducer record ``[lm, mask, lc, terms, sugar]`` with a positive lc."""
    terms = sorted(f.items(), key=lambda t: key(t[0]), reverse=True)
    if terms[0][1] < 0:
        terms = [(e, -v) for e, v in terms]
    lm, lc = terms[0]
    return [lm, _mask(lm), lc, terms, sugar]


def _nf(f: dict, reducers: Sequence, key, full: bool = True) -> tuple[dict, int]:
    """Fraction-free normal form.

    Returns ``(r, s)`` with ``s * f - r`` in the ideal of ``reducers``;
    ``s`` is a positive integer.  Reducers are tried in stored order and
    the leading term is always treated first.
    """
    f = dict(f)
    rem: dict = {}
    scale = 1
    while f:
        m = max(f, key=key)
        c = f[m]
        mm = _mask(m)
        for red in reducers:
            lm = red[0]
            if not (red[1] & ~mm) and all(a >= b for a, b in zip(m, lm)):
                break
        else:
            if not full:
                f.update(rem)
                return f, scale
            rem[m] = c
            del f[m]
            continue
        lc = red[2]
        g = gcd(c, lc)
        a, b = lc // g, c // g
        if a != 1:
            scale *= a
            f = {k: v * a for k, v in f.items()}
            if rem:
                rem = {k: v * a for k, v in rem.items()}
        del f[m]
        q = tuple(map(sub, m, lm))
        for e, v in red[3][1:]:
            e2 = tuple(map(add, e, q))
            nv = f.get(e2, 0) - b * v
            if nv:
                f[e2] = nv
            else:
                del f[e2]
    return rem, scale


def _spoly(p, q, lcm):
    u = tuple(map(sub, lcm, p[0]))
    v = tuple(map(sub, lcm, q[0]))
    g = gcd(p[2], q[2])
    a, b = q[2] // g, p[2] // g
    s: dict = {}
    for e, c in p[3][1:]:
        k = tuple(map(add, e, u))
        s[k] = s.get(k, 0) + a * c
    for e, c in q[3][1:]:
        k = tuple(map(add, e, v))
        nv = s.get(k, 0) - b * c
        if nv:
            s[k] = nv
        else:
            s.pop(k, None)
    return s, u, v


def _wdeg(e, w):
    return sum(a * b for a, b in zip(e, w))


def groebner_raw(polys: Iterable[dict], order: MonomialOrder, weights: Sequence[int] | None = None) -> list[dict]:
    """Reduced Groebner basis of raw polynomials.

    Pairs are chosen by smallest sugar (weighted degree of the lcm for
    homogeneous input), ties broken by the smallest lcm in ``order``.
    Redundant pairs are dropped with the Gebauer-Moeller installation of
    Buchberger's coprime and chain criteria.  Output is primitive, sorted by
    leading monomial, descending.
    """
    key = order.key
    w = tuple(weights) if weights is not None else (1,) * order.nvars
    basis: list = []
    active: list[int] = []
    reducers: list = []
    live: dict[int, tuple] = {}
    heap: list = []
    seq = 0

    def install(entry):
        nonlocal seq, reducers, active
        k = len(basis)
        basis.append(entry)
        lm_h, mask_h = entry[0], entry[1]
        cand = []
        for i in active:
            lm_i = basis[i][0]
            cand.append((i, tuple(map(max, lm_i, lm_h)), not (basis[i][1] & mask_h)))
        kept = []
        for idx, (i, L, coprime) in enumerate(cand):
            if coprime:
                kept.append((i, L, coprime))
                continue
            redundant = False
            for _, L2, _ in cand[idx + 1:]:
                if all(a <= b for a, b in zip(L2, L)):
                    redundant = True
                    break
            if not redundant:
                for _, L2, _ in kept:
                    if all(a <= b for a, b in zip(L2, L)):
                        redundant = True
                        break
            if not redundant:
                kept.append((i, L, coprime))
        # chain criterion on old pairs
        dead = []
        for s, (i, j, L) in live.items():
            if not (mask_h & ~_mask(L)) and all(a <= b for a, b in zip(lm_h, L)):
                if tuple(map(max, basis[i][0], lm_h)) != L and tuple(map(max, basis[j][0], lm_h)) != L:
                    dead.append(s)
        for s in dead:
            del live[s]
        for i, L, coprime in kept:
            if coprime:
                continue
            sug = max(basis[i][4] + _wdeg(L, w) - _wdeg(basis[i][0], w), entry[4] + _wdeg(L, w) - _wdeg(lm_h, w))
            live[seq] = (i, k, L)
            heapq.heappush(heap, (sug, key(L), seq))
            seq += 1
        active = [i for i in active if not (all(a <= b for a, b in zip(lm_h, basis[i][0])))]
        active.append(k)
        reducers = [basis[i] for i in active]

    start = []
    for f in polys:
        f = {tuple(e): int(c) for e, c in f.items() if c}
        if f:
            e = _make_entry(_primitive(f), key)
            e[4] = max(_wdeg(m, w) for m, _ in e[3])
            start.append(e)
    start.sort(key=lambda e: (e[4], key(e[0])))
    for e in start:
        r, _ = _nf(dict(e[3]), reducers, key)
        if r:
            ent = _make_entry(_primitive(r), key, e[4])
            install(ent)

    while heap:
        sug, _, s = heapq.heappop(heap)
        pair = live.pop(s, None)
        if pair is None:
            continue
        i, j, L = pair
        sp, _, _ = _spoly(basis[i], basis[j], L)
        if not sp:
            continue
        r, _ = _nf(sp, reducers, key)
        if r:
            install(_make_entry(_primitive(r), key, sug))

    final = [basis[i] for i in active]
    out = []
    for idx, g in enumerate(final):
        others = final[:idx] + final[idx + 1:]
        r, _ = _nf(dict(g[3]), others, key)
        r = _primitive(r)
        out.append(_make_entry(r, key))
    out.sort(key=lambda e: key(e[0]), reverse=True)
    return [dict(e[3]) for e in out]


def reducers_of(gb: Sequence[dict], order: MonomialOrder) -> list:
    return [_make_entry(g, order.key) for g in gb]


def is_unit_basis(gb: Sequence[dict]) -> bool:
    return any(len(g) == 1 and not any(next(iter(g))) for g in gb)


# -- public wrappers ---------------------------------------------------------


def _to_raw(p: Polynomial) -> dict:
    den = 1
    for c, _ in p.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return {tuple(m): int(c * den) for c, m in p.terms}


def _from_raw(ctx: VarContext, f: dict, order: MonomialOrder | None = None) -> Polynomial:
    return Polynomial(ctx, f, order)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (exact, over Q)."""
    order = order or f.order
    for b in basis:
        f._same(b)
    reds = [_make_entry(_to_raw(b), order.key) for b in basis if b]
    if not f:
        return f
    raw = _to_raw(f)
    den = Fraction(f.terms[0][0]) / raw[tuple(f.terms[0][1])]
    r, s = _nf(raw, reds, order.key)
    return Polynomial(f.ctx, {m: c * den / s for m, c in r.items()}, order)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None, weights=None) -> list[Polynomial]:
    if not gens:
        return []
    ctx = gens[0].ctx
    order = order or MonomialOrder.degrevlex(ctx.nvars)
    for g in gens:
        gens[0]._same(g)
    return [_from_raw(ctx, g, order) for g in groebner_raw([_to_raw(g) for g in gens if g], order, weights)]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    a = _make_entry(_to_raw(f), order.key)
    b = _make_entry(_to_raw(g), order.key)
    s, _, _ = _spoly(a, b, tuple(map(max, a[0], b[0])))
    return Polynomial(f.ctx, s, order)


class IdealHandle:
    """An ideal of ``ctx`` given by generators, with per-order GB caching.

    ``weights`` is a positive grading used only to steer pair selection.
    """

    def __init__(self, ctx: VarContext, generators: Iterable[Polynomial | dict] = (), weights=None):
        self.ctx = ctx
        raw = []
        for g in generators:
            if isinstance(g, Polynomial):
                if g.ctx != ctx:
                    raise ContextMismatch("generator outside the ideal's context")
                g = _to_raw(g)
            g = {tuple(e): c for e, c in g.items() if c}
            if g:
                raw.append(g)
        self._raw = raw
        self.weights = tuple(weights) if weights is not None else None
        self._gb: dict[MonomialOrder, list[dict]] = {}
        self._reducers: dict[MonomialOrder, list] = {}
        self._lock = threading.Lock()

    @property
    def generators(self) -> list[Polynomial]:
        return [_from_raw(self.ctx, g) for g in self._raw]

    @property
    def raw_generators(self) -> list[dict]:
        return list(self._raw)

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.degrevlex(self.ctx.nvars)

    def raw_groebner(self, order: MonomialOrder | None = None) -> list[dict]:
        order = order or self.default_order()
        with self._lock:
            gb = self._gb.get(order)
        if gb is None:
            gb = groebner_raw(self._raw, order, self.weights)
            with self._lock:
                self._gb.setdefault(order, gb)
        return gb

    def seed_groebner(self, order: MonomialOrder, gb: list[dict]):
        """Record an already-known reduced basis (e.g. from elimination)."""
        with self._lock:
            self._gb.setdefault(order, gb)

    def groebner(self, order: MonomialOrder | None = None) -> list[Polynomial]:
        order = order or self.default_order()
        return [_from_raw(self.ctx, g, order) for g in self.raw_groebner(order)]

    def reducers(self, order: MonomialOrder | None = None) -> list:
        order = order or self.default_order()
        with self._lock:
            r = self._reducers.get(order)
        if r is None:
            r = reducers_of(self.raw_groebner(order), order)
            with self._lock:
                self._reducers[order] = r
        return r

    def contains_raw(self, f: dict, order: MonomialOrder | None = None) -> bool:
        order = order or self.default_order()
        if not f:
            return True
        r, _ = _nf(f, self.reducers(order), order.key)
        return not r

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def is_zero(self) -> bool:
        return not self._raw

    def is_unit(self) -> bool:
        return is_unit_basis(self.raw_groebner())

    def issubset(self, other: "IdealHandle") -> bool:
        order = other.default_order()
        return all(other.contains_raw(g, order) for g in self._raw)

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        return self.raw_groebner() == other.raw_groebner()

    __hash__ = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators[:6])
        more = ", ..." if len(self._raw) > 6 else ""
        return f"IdealHandle({gens}{more})"


def ideal_member(f: Polynomial, ideal: IdealHandle, order: MonomialOrder | None = None) -> bool:
    if f.ctx != ideal.ctx:
        raise ContextMismatch("polynomial outside the ideal's context")
    return ideal.contains_raw(_to_raw(f), order)


def _restrict_order(order: MonomialOrder, keep: Sequence[int]) -> MonomialOrder:
    pos = {old: new for new, old in enumerate(keep)}
    if order.kind == "degrevlex":
        return MonomialOrder.degrevlex(len(keep))
    if order.kind == "lex":
        return MonomialOrder.lex(len(keep))
    blocks = [tuple(pos[i] for i in b if i in pos) for b in order.blocks]
    return MonomialOrder.block(len(keep), *[b for b in blocks if b])


def _as_indices(ctx: VarContext, variables: Iterable[int | str]) -> list[int]:
    return sorted({ctx.index(v) if isinstance(v, str) else int(v) for v in variables})


def elimination_ideal(ideal: IdealHandle, eliminate: Iterable[int | str], order: MonomialOrder | None = None) -> IdealHandle:
    """``ideal`` intersected with the subring free of ``eliminate``.

    ``order`` must be an elimination order for those variables; by default
    the block order (eliminated block degrevlex) > (rest degrevlex).
    """
    ctx = ideal.ctx
    elim = _as_indices(ctx, eliminate)
    if not elim:
        return ideal
    order = order or MonomialOrder.elimination(ctx.nvars, elim)
    keep = [i for i in range(ctx.nvars) if i not in set(elim)]
    gb = ideal.raw_groebner(order)
    emask = 0
    for i in elim:
        emask |= 1 << i
    out = []
    for g in gb:
        if all(not (_mask(e) & emask) for e in g):
            out.append({tuple(e[i] for i in keep): c for e, c in g.items()})
    sub_ctx = ctx.drop(elim)
    w = None if ideal.weights is None else [ideal.weights[i] for i in keep]
    res = IdealHandle(sub_ctx, out, w)
    res.seed_groebner(_restrict_order(order, keep), out)
    return res


def _lift(f: dict, extra: int = 1) -> dict:
    z = (0,) * extra
    return {e + z: c for e, c in f.items()}


def ideal_intersection(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``a`` intersected with ``b`` via ``t*a + (1-t)*b``, eliminating ``t``."""
    if a.ctx != b.ctx:
        raise ContextMismatch("intersection of ideals in different contexts")
    if a.is_zero() or b.is_zero():
        return IdealHandle(a.ctx, [], a.weights)
    ctx = a.ctx.with_tag()
    n = a.ctx.nvars
    gens = []
    for f in a.raw_generators:
        gens.append({e[:n] + (1,): c for e, c in _lift(f).items()})
    for f in b.raw_generators:
        g = _lift(f)
        for e, c in f.items():
            g[e + (1,)] = -c
        gens.append(g)
    w = None if a.weights is None else a.weights + (0,)
    big = IdealHandle(ctx, gens, w)
    return elimination_ideal(big, [n])


def _exact_divide(f: dict, h: dict, order: MonomialOrder) -> dict:
    key = order.key
    hterms = sorted(h.items(), key=lambda t: key(t[0]), reverse=True)
    hlm, hlc = hterms[0]
    f = {e: Fraction(c) for e, c in f.items()}
    q: dict = {}
    while f:
        m = max(f, key=key)
        if not all(a >= b for a, b in zip(m, hlm)):
            raise AssertionError("exact division failed: not a multiple")
        u = tuple(map(sub, m, hlm))
        c = f[m] / hlc
        q[u] = c
        for e, v in hterms:
            k = tuple(map(add, e, u))
            nv = f.get(k, 0) - c * v
            if nv:
                f[k] = nv
            else:
                f.pop(k, None)
    den = 1
    for c in q.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive({e: int(c * den) for e, c in q.items()})


def colon_by_poly(ideal: IdealHandle, h: Polynomial | dict) -> IdealHandle:
    """``ideal : (h)``, as ``(ideal ∩ (h)) / h``."""
    ctx = ideal.ctx
    if isinstance(h, Polynomial):
        if h.ctx != ctx:
            raise ContextMismatch("colon by a polynomial from another context")
        h = _to_raw(h)
    if not h:
        raise ValueError("colon by the zero polynomial")
    hi = IdealHandle(ctx, [h], ideal.weights)
    inter = ideal_intersection(ideal, hi)
    order = ideal.default_order()
    quots = [_exact_divide(g, h, order) for g in inter.raw_generators]
    return IdealHandle(ctx, quots, ideal.weights)


def saturation(ideal: IdealHandle, h: Polynomial | dict) -> IdealHandle:
    """``ideal : h^infinity`` by the Rabinowitsch trick."""
    ctx = ideal.ctx
    if isinstance(h, Polynomial):
        h = _to_raw(h)
    if not h:
        raise ValueError("saturation by the zero polynomial")
    n = ctx.nvars
    big_ctx = ctx.with_tag()
    gens = [_lift(f) for f in ideal.raw_generators]
    rab = {(0,) * (n + 1): 1}
    for e, c in h.items():
        rab[e + (1,)] = rab.get(e + (1,), 0) - c
    gens.append(rab)
    return elimination_ideal(IdealHandle(big_ctx, gens), [n])


@lru_cache(maxsize=4096)
def _min_transversal(edges: frozenset) -> int:
    if not edges:
        return 0
    e = min(edges, key=lambda x: (bin(x).count("1"), x))
    best = None
    v = 0
    x = e
    while x:
        if x & 1:
            rest = frozenset(f for f in edges if not (f >> v) & 1)
            cand = 1 + _min_transversal(rest)
            if best is None or cand < best:
                best = cand
        x >>= 1
        v += 1
    return best


def dimension_from_leading_monomials(lms: Iterable[tuple], nvars: int) -> int:
    """Largest variable set containing the support of no leading monomial."""
    masks = {_mask(tuple(m)) for m in lms}
    if 0 in masks:
        return -1
    minimal = frozenset(m for m in masks if not any(o != m and (o & ~m) == 0 for o in masks))
    return nvars - _min_transversal(minimal)


def krull_dimension_of_quotient(ideal: IdealHandle, order: MonomialOrder | None = None) -> int:
    order = order or ideal.default_order()
    gb = ideal.raw_groebner(order)
    key = order.key
    lms = [max(g, key=key) for g in gb]
    return dimension_from_leading_monomials(lms, ideal.ctx.nvars)


def minimalize_graded(gens: Sequence[Polynomial], grading: Sequence[Sequence[int]] | None = None) -> list[Polynomial]:
    """A non-redundant subset generating the same ideal.

    Every generator must be homogeneous for the (multidegree, aux-degree)
    grading (standard degree if ``grading`` is None).
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ctx = gens[0].ctx
    for g in gens:
        if not g.is_homogeneous(grading):
            raise ValueError(f"generator {g} is not homogeneous")

    def weight(g):
        m = g.terms[0][1]
        if grading is None:
            return m.degree
        return sum(multidegree_of(m, grading, ctx.n_base))

    ordered = sorted(gens, key=weight)
    kept: list[Polynomial] = []
    for g in ordered:
        if kept and ideal_member(g, IdealHandle(ctx, kept)):
            continue
        kept.append(g)
    return kept
