"""Exact monomials, monomial orders and sparse polynomials over Q.

Monomials are exponent tuples.  :class:`Monomial` is a thin ``tuple``
subclass adding the algebra; every function in the package also accepts
plain tuples, which is what the Groebner engine passes around internally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

EXP_LIMIT = 2**31 - 1
TAG = "t_"


class ContextMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names: a base block ``x1..xn`` then auxiliaries."""

    names: tuple[str, ...]
    n_base: int

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if not 0 <= self.n_base <= len(self.names):
            raise ValueError("n_base out of range")

    @classmethod
    def standard(cls, n: int, m: int = 0, tag: bool = False) -> "VarContext":
        names = [f"x{i}" for i in range(1, n + 1)]
        names += [f"y{j}" for j in range(1, m + 1)]
        if tag:
            names.append(TAG)
        return cls(tuple(names), n)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def n_aux(self) -> int:
        return len(self.names) - self.n_base

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_tag(self) -> "VarContext":
        """Same context with the reserved tag variable appended."""
        if TAG in self.names:
            raise ValueError("context already carries the tag variable")
        return VarContext(self.names + (TAG,), self.n_base)

    def drop(self, indices: Iterable[int]) -> "VarContext":
        gone = set(indices)
        keep = [i for i in range(self.nvars) if i not in gone]
        n_base = sum(1 for i in keep if i < self.n_base)
        return VarContext(tuple(self.names[i] for i in keep), n_base)

    def unit(self) -> "Monomial":
        return Monomial((0,) * self.nvars)

    def var(self, name: str) -> "Monomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Monomial(e)


class Monomial(tuple):
    """Exponent vector.  ``a * b`` multiplies, ``a / b`` divides exactly."""

    __slots__ = ()

    def __new__(cls, exps: Iterable[int] = ()):
        exps = tuple(int(e) for e in exps)
        for e in exps:
            if e < 0 or e > EXP_LIMIT:
                raise OverflowError(f"exponent {e} out of range")
        return super().__new__(cls, exps)

    @property
    def degree(self) -> int:
        return sum(self)

    def __mul__(self, other):
        return monomial_mul(self, other)

    def __truediv__(self, other):
        return monomial_divide(self, other)

    def divides(self, other: Sequence[int]) -> bool:
        return divides(self, other)

    def lcm(self, other):
        return monomial_lcm_gcd(self, other)[0]

    def gcd(self, other):
        return monomial_lcm_gcd(self, other)[1]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self) if e)

    def __repr__(self):
        return f"Monomial({tuple(self)})"


def _check(a, b):
    if len(a) != len(b):
        raise ContextMismatch(f"monomials of length {len(a)} and {len(b)}")


def monomial_mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check(a, b)
    return Monomial(x + y for x, y in zip(a, b))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``a | b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_divide(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check(a, b)
    if not divides(b, a):
        raise NotDivisible(f"{tuple(b)} does not divide {tuple(a)}")
    return Monomial(x - y for x, y in zip(a, b))


def monomial_lcm_gcd(a: Sequence[int], b: Sequence[int]) -> tuple[Monomial, Monomial]:
    _check(a, b)
    return (Monomial(map(max, a, b)), Monomial(map(min, a, b)))


def multidegree_of(m: Sequence[int], grading: Sequence[Sequence[int]], n_base: int) -> tuple[int, ...]:
    """Z^n degree of ``x^b y^v``: ``b + sum_j v_j * grading[j]``.

    Trailing exponents beyond ``n_base + len(grading)`` (the tag variable)
    carry degree zero.
    """
    aux = m[n_base:n_base + len(grading)]
    if len(m) < n_base + len(grading):
        raise ContextMismatch("grading longer than the auxiliary block")
    deg = list(m[:n_base])
    for v, g in zip(aux, grading):
        if len(g) != n_base:
            raise ContextMismatch("grading entry of wrong length")
        if v:
            for i, gi in enumerate(g):
                deg[i] += v * gi
    return tuple(deg)


# -- monomial orders ---------------------------------------------------------


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True, eq=True)
class MonomialOrder:
    """A monomial order given by sort keys; larger key means larger monomial.

    ``kind`` is ``"lex"``, ``"degrevlex"`` or ``"block"``.  A block order
    compares the blocks lexicographically (first block most significant)
    and each block by degrevlex, so the first block is eliminated.
    """

    kind: str
    nvars: int
    blocks: tuple[tuple[int, ...], ...] = ()
    _memo: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block":
            flat = sorted(i for b in self.blocks for i in b)
            if flat != list(range(self.nvars)):
                raise ValueError("blocks must partition the variables")

    @classmethod
    def lex(cls, nvars: int) -> "MonomialOrder":
        return cls("lex", nvars)

    @classmethod
    def degrevlex(cls, nvars: int) -> "MonomialOrder":
        return cls("degrevlex", nvars)

    @classmethod
    def block(cls, nvars: int, *blocks: Iterable[int]) -> "MonomialOrder":
        blocks = tuple(tuple(b) for b in blocks if len(tuple(b)))
        covered = {i for b in blocks for i in b}
        rest = tuple(i for i in range(nvars) if i not in covered)
        if rest:
            blocks = blocks + (rest,)
        if len(blocks) == 1:
            return cls.degrevlex(nvars) if blocks[0] == tuple(range(nvars)) else cls("block", nvars, blocks)
        return cls("block", nvars, blocks)

    @classmethod
    def elimination(cls, nvars: int, eliminate: Iterable[int]) -> "MonomialOrder":
        return cls.block(nvars, sorted(set(eliminate)))

    def key(self, e):
        k = self._memo.get(e)
        if k is None:
            if self.kind == "lex":
                k = tuple(e)
            elif self.kind == "degrevlex":
                k = _degrevlex_key(e)
            else:
                k = tuple(_degrevlex_key([e[i] for i in b]) for b in self.blocks)
            if len(self._memo) > 2_000_000:
                self._memo.clear()
            self._memo[e] = k
        return k

    def compare(self, a, b) -> int:
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return (ka > kb) - (ka < kb)


# -- polynomials ---------------------------------------------------------------


def _coef(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(c)


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    Terms are kept as ``(coefficient, monomial)`` pairs sorted strictly
    descending in ``order``; zero coefficients never appear.
    """

    __slots__ = ("ctx", "order", "terms")

    def __init__(self, ctx: VarContext, terms: Mapping[Sequence[int], object] | Iterable = (), order: MonomialOrder | None = None):
        self.ctx = ctx
        self.order = order or MonomialOrder.degrevlex(ctx.nvars)
        if self.order.nvars != ctx.nvars:
            raise ContextMismatch("order and context disagree on variable count")
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = ((m, c) for c, m in terms)
        acc: dict[tuple, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != ctx.nvars:
                raise ContextMismatch(f"monomial {m} not in a {ctx.nvars}-variable context")
            acc[m] = acc.get(m, 0) + _coef(c)
        key = self.order.key
        self.terms = tuple(
            (c, Monomial(m)) for m, c in sorted(acc.items(), key=lambda t: key(t[0]), reverse=True) if c
        )

    @classmethod
    def monomial(cls, ctx, m, c=1, order=None) -> "Polynomial":
        return cls(ctx, {tuple(m): c}, order)

    @classmethod
    def binomial(cls, ctx, a, b, order=None) -> "Polynomial":
        """The pure difference ``a - b``."""
        return cls(ctx, [(1, a), (-1, b)], order)

    def as_dict(self) -> dict[tuple, Fraction]:
        return {tuple(m): c for c, m in self.terms}

    def _like(self, d) -> "Polynomial":
        return Polynomial(self.ctx, d, self.order)

    def _same(self, other: "Polynomial"):
        if other.ctx != self.ctx:
            raise ContextMismatch("polynomials live in different contexts")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.as_dict() == other.as_dict()
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.as_dict().items())))

    @property
    def lm(self) -> Monomial:
        return self.terms[0][1]

    @property
    def lc(self) -> Fraction:
        return self.terms[0][0]

    def monomials(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        d = self.as_dict()
        for c, m in other.terms:
            d[tuple(m)] = d.get(tuple(m), 0) + c
        return self._like(d)

    def __neg__(self):
        return self._like({tuple(m): -c for c, m in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._same(other)
            d: dict = {}
            for c1, m1 in self.terms:
                for c2, m2 in other.terms:
                    m = tuple(a + b for a, b in zip(m1, m2))
                    d[m] = d.get(m, 0) + c1 * c2
            return self._like(d)
        c = _coef(other)
        return self._like({tuple(m): c * a for a, m in self.terms})

    __rmul__ = __mul__

    def mul_term(self, c, t: Sequence[int]) -> "Polynomial":
        c = _coef(c)
        return self._like({tuple(a + b for a, b in zip(m, t)): c * a_ for a_, m in self.terms})

    def combine(self, q: "Polynomial", c, t: Sequence[int]) -> "Polynomial":
        """``self - c * t * q``: the single reduction step."""
        return poly_combine(self, q, c, t)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        return Polynomial(self.ctx, self.as_dict(), order)

    def total_degree(self) -> int:
        return max((m.degree for _, m in self.terms), default=-1)

    def variables_used(self) -> set[int]:
        return {i for _, m in self.terms for i, e in enumerate(m) if e}

    def is_pure_difference_binomial(self) -> bool:
        return len(self.terms) == 2 and {self.terms[0][0], self.terms[1][0]} == {1, -1}

    def is_homogeneous(self, grading: Sequence[Sequence[int]] | None = None) -> bool:
        """Homogeneous in the (multidegree, aux-degree) grading; standard
        total degree when ``grading`` is None."""
        if not self.terms:
            return True
        if grading is None:
            return len({m.degree for _, m in self.terms}) == 1
        n = self.ctx.n_base
        degs = {
            (multidegree_of(m, grading, n), sum(m[n:n + len(grading)])) for _, m in self.terms
        }
        return len(degs) == 1

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)!r})"

    def __str__(self):
        return render_polynomial(self)


def poly_combine(p: Polynomial, q: Polynomial, c, t: Sequence[int]) -> Polynomial:
    p._same(q)
    if len(t) != p.ctx.nvars:
        raise ContextMismatch("multiplier monomial in the wrong context")
    c = _coef(c)
    if c == 0:
        return p
    d = p.as_dict()
    for a, m in q.terms:
        k = tuple(x + y for x, y in zip(m, t))
        d[k] = d.get(k, 0) - c * a
    return p._like(d)


# -- text ---------------------------------------------------------------------


def render_monomial(m: Sequence[int], ctx: VarContext | None = None) -> str:
    names = ctx.names if ctx is not None else tuple(f"x{i}" for i in range(1, len(m) + 1))
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def _render_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (c, m) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = render_monomial(m, p.ctx)
        if mono == "1":
            body = _render_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_render_coef(a)}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?(?:\s*\*\s*[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?)*)?")


def parse_polynomial(text: str, ctx: VarContext, order: MonomialOrder | None = None) -> Polynomial:
    """Parse the output format of :func:`render_polynomial`."""
    s = text.strip()
    if s == "0":
        return Polynomial(ctx, {}, order)
    pos = 0
    terms: dict[tuple, Fraction] = {}
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or (mt.group(2) is None and mt.group(3) is None):
            raise ValueError(f"cannot parse polynomial at column {pos + 1}: {text!r}")
        sign = -1 if mt.group(1) == "-" else 1
        c = Fraction(mt.group(2)) if mt.group(2) else Fraction(1)
        e = [0] * ctx.nvars
        if mt.group(3):
            for factor in mt.group(3).split("*"):
                factor = factor.strip()
                name, _, exp = factor.partition("^")
                try:
                    e[ctx.index(name)] += int(exp) if exp else 1
                except ValueError:
                    raise ValueError(f"unknown variable {name!r}") from None
        terms[tuple(e)] = terms.get(tuple(e), 0) + sign * c
        pos = mt.end()
    return Polynomial(ctx, terms, order)
