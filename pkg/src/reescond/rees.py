"""Presentation T = R[y_1..y_m] -> R(I) of the Rees algebra of a monomial ideal.

Holds the linear relations L (Taylor syzygies), the Rees ideal J (kernel of
y_j -> f_j t) and the fiber ideal H (kernel of K[y] -> K[f_1 t, ..., f_m t]).
All three are pure-difference binomial ideals, graded by
deg x_i = e_i, deg y_j = deg f_j.
"""

from __future__ import annotations

import threading
from itertools import combinations
from typing import Sequence

from .groebner import (
    IdealHandle,
    elimination_ideal,
    krull_dimension_of_quotient,
    minimalize_graded,
)
from .monomial_ideal import MonomialIdeal
from .poly import MonomialOrder, Polynomial, VarContext, multidegree_of


class GradingError(AssertionError):
    """An engine result broke the Z^n-grading (signals a bug)."""


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


class ReesPresentation:
    """Rees algebra presentation of a nonzero monomial ideal.

    Generators are minimalized first, so ``m`` is the minimal number of
    generators.  ``L``, ``J`` and ``H`` are computed lazily and cached.
    """

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_zero():
            raise ValueError("the zero ideal has no Rees presentation")
        self.ideal = ideal
        self.n = ideal.nvars
        self.gens: tuple[tuple[int, ...], ...] = tuple(tuple(g) for g in ideal.gens)
        self.m = len(self.gens)
        self.base = VarContext.standard(self.n)
        self.T = VarContext.standard(self.n, self.m)
        self.grading = self.gens
        self.weights = (1,) * self.n + tuple(sum(f) for f in self.gens)
        self.x_idx = tuple(range(self.n))
        self.y_idx = tuple(range(self.n, self.n + self.m))
        # t > y > x, lex between blocks, degrevlex inside
        self.J_order = MonomialOrder.block(self.T.nvars, self.y_idx, self.x_idx)
        self._lock = threading.RLock()
        self._L: IdealHandle | None = None
        self._J: IdealHandle | None = None
        self._H: IdealHandle | None = None

    # -- generators -----------------------------------------------------------

    def y(self, j: int) -> tuple[int, ...]:
        return _unit(self.T.nvars, self.n + j)

    def lift_x(self, u: Sequence[int]) -> tuple[int, ...]:
        return tuple(u) + (0,) * self.m

    def lift_y(self, v: Sequence[int]) -> tuple[int, ...]:
        return (0,) * self.n + tuple(v)

    def multidegree(self, mono: Sequence[int]) -> tuple[int, ...]:
        return multidegree_of(mono, self.grading, self.n)

    def taylor_syzygies(self) -> list[dict]:
        """``(lcm/f_i) y_i - (lcm/f_j) y_j`` for all ``i < j``."""
        out = []
        for i, j in combinations(range(self.m), 2):
            fi, fj = self.gens[i], self.gens[j]
            lcm = tuple(map(max, fi, fj))
            a = tuple(p - q for p, q in zip(lcm, fi)) + self.y(i)[self.n:]
            b = tuple(p - q for p, q in zip(lcm, fj)) + self.y(j)[self.n:]
            out.append({a: 1, b: -1})
        return out

    def substitute(self, f: dict, with_t: bool = True) -> dict:
        """Image of a T-polynomial under x -> x, y_j -> f_j t (or f_j).

        Keys are ``(x exponents, t exponent)`` (t exponent 0 if not
        ``with_t``).
        """
        out: dict = {}
        for e, c in f.items():
            x = list(e[:self.n])
            deg_t = 0
            for j, v in enumerate(e[self.n:self.n + self.m]):
                if v:
                    deg_t += v
                    for i, a in enumerate(self.gens[j]):
                        x[i] += v * a
            k = (tuple(x), deg_t if with_t else 0)
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        return out

    # -- ideals ---------------------------------------------------------------

    @property
    def L(self) -> IdealHandle:
        with self._lock:
            if self._L is None:
                self._L = IdealHandle(self.T, self.taylor_syzygies(), self.weights)
            return self._L

    @property
    def J(self) -> IdealHandle:
        with self._lock:
            if self._J is None:
                self._J = self._compute_J()
            return self._J

    @property
    def H(self) -> IdealHandle:
        with self._lock:
            if self._H is None:
                self._H = self._compute_H()
            return self._H

    def _toric_generators(self) -> tuple[VarContext, list[dict], tuple[int, ...]]:
        big = self.T.with_tag()
        N = big.nvars
        gens = []
        for j, f in enumerate(self.gens):
            y = _unit(N, self.n + j)
            ft = tuple(f) + (0,) * self.m + (1,)
            gens.append({y: 1, ft: -1})
        return big, gens, self.weights + (0,)

    def _compute_J(self) -> IdealHandle:
        big, gens, w = self._toric_generators()
        t = big.nvars - 1
        order = MonomialOrder.block(big.nvars, (t,), self.y_idx, self.x_idx)
        J = elimination_ideal(IdealHandle(big, gens, w), [t], order)
        for g in J.raw_groebner(self.J_order):
            self._check_relation(g, with_t=True)
        return J

    def _compute_H(self) -> IdealHandle:
        big, gens, w = self._toric_generators()
        t = big.nvars - 1
        order = MonomialOrder.block(big.nvars, self.x_idx + (t,), self.y_idx)
        H = elimination_ideal(IdealHandle(big, gens, w), self.x_idx + (t,), order)
        for g in H.raw_groebner():
            self._check_relation(self.lift_fiber(g), with_t=True)
        return H

    def _check_relation(self, g: dict, with_t: bool):
        if len(g) != 2 or sorted(g.values()) != [-1, 1]:
            raise GradingError(f"non-binomial relation {g}")
        a, b = g
        if self.multidegree(a) != self.multidegree(b):
            raise GradingError(f"relation {g} is not multigraded")
        if self.substitute(g, with_t):
            raise GradingError(f"relation {g} does not vanish under y_j -> f_j t")

    def lift_fiber(self, h: dict) -> dict:
        """A K[y] polynomial as an element of T."""
        return {(0,) * self.n + tuple(e): c for e, c in h.items()}

    def J_basis(self) -> list[dict]:
        """Reduced Groebner basis of J (block order y > x)."""
        return self.J.raw_groebner(self.J_order)

    def polynomial(self, f: dict) -> Polynomial:
        return Polynomial(self.T, f)

    def HT(self) -> IdealHandle:
        return IdealHandle(self.T, [self.lift_fiber(h) for h in self.H.raw_groebner()], self.weights)

    def __repr__(self):
        return f"ReesPresentation({self.ideal})"


def linear_relations(P: ReesPresentation) -> IdealHandle:
    return P.L


def rees_ideal(P: ReesPresentation) -> IdealHandle:
    return P.J


def fiber_ideal(P: ReesPresentation) -> IdealHandle:
    return P.H


def is_linear_type(P: ReesPresentation) -> bool:
    L = P.L
    return all(L.contains_raw(g) for g in P.J_basis())


def is_fiber_type(P: ReesPresentation) -> bool:
    LH = IdealHandle(P.T, P.L.raw_generators + P.HT().raw_generators, P.weights)
    return all(LH.contains_raw(g) for g in P.J_basis())


def ydegree(P: ReesPresentation, f: Polynomial | dict) -> int:
    mons = f.monomials() if isinstance(f, Polynomial) else list(f)
    return max((sum(m[P.n:]) for m in mons), default=0)


def minimal_rees_generators(P: ReesPresentation) -> list[Polynomial]:
    gb = [Polynomial(P.T, g) for g in P.J_basis()]
    return minimalize_graded(gb, P.grading)


def max_ydegree_of_J(P: ReesPresentation) -> int:
    return max((ydegree(P, g) for g in minimal_rees_generators(P)), default=0)


def dim_sym(P: ReesPresentation) -> int:
    """Krull dimension of S(I) = T/L."""
    return krull_dimension_of_quotient(P.L)


def dim_rees(P: ReesPresentation) -> int:
    """Krull dimension of R(I) = T/J; always n + 1."""
    d = krull_dimension_of_quotient(P.J, P.J_order)
    if d != P.n + 1:
        raise AssertionError(f"dim R(I) = {d}, expected {P.n + 1}")
    return d


__all__ = [
    "GradingError",
    "ReesPresentation",
    "dim_rees",
    "dim_sym",
    "fiber_ideal",
    "is_fiber_type",
    "is_linear_type",
    "linear_relations",
    "max_ydegree_of_J",
    "minimal_rees_generators",
    "rees_ideal",
    "ydegree",
]
