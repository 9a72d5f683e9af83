"""The conductor C(I) = (L :_T J) ∩ R and checkers for its properties."""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groebner import colon_by_poly, elimination_ideal
from .monomial_ideal import (
    MonomialIdeal,
    mi_intersection,
    mi_intersection_all,
    mi_is_m_primary,
    mi_is_nzd,
    mi_member,
    mi_mu,
    mi_radical,
    mi_sum,
)
from .poly import Polynomial
from .rees import GradingError, ReesPresentation, dim_rees, dim_sym, is_fiber_type, max_ydegree_of_J

DEFAULT_K_MAX = 10
DEFAULT_BFS_CAP = 10**6


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass
class ConductorReport:
    """C(I) plus the per-generator colon ideals ``(L : h) ∩ R``.

    ``skipped`` lists J-generators whose colon was not computed because the
    running intersection already lay inside it (only with ``full=False``);
    they do not change ``conductor``.
    """

    conductor: MonomialIdeal
    per_generator: list[tuple[dict, MonomialIdeal]]
    linear_type: bool
    fiber_type: bool | None = None
    skipped: list[dict] = field(default_factory=list)


def _times(u: Sequence[int], h: dict) -> dict:
    return {tuple(a + b for a, b in zip(u, e)): c for e, c in h.items()}


def colon_L_into_R(P: ReesPresentation, h: dict | Polynomial) -> MonomialIdeal:
    """``(L :_T h) ∩ R`` for a multigraded binomial ``h`` of T."""
    if isinstance(h, Polynomial):
        h = {tuple(m): int(c) for c, m in h.terms}
    a, b = list(h)
    if P.multidegree(a) != P.multidegree(b):
        raise ValueError("colon by a binomial that is not multigraded")
    if P.L.contains_raw(h):
        return MonomialIdeal.unit(P.n)
    colon = colon_by_poly(P.L, h)
    base = elimination_ideal(colon, P.y_idx)
    gens = []
    for g in base.raw_generators:
        if len(g) != 1:
            raise GradingError(f"non-monomial element {g} in (L : h) ∩ R")
        gens.append(next(iter(g)))
    return MonomialIdeal(P.n, gens)


def relevant_generators(P: ReesPresentation) -> list[dict]:
    """Reduced-GB generators of J not already in L."""
    L = P.L
    return [h for h in P.J_basis() if not L.contains_raw(h)]


def _colon_job(args):
    n, gens, h = args
    return colon_L_into_R(ReesPresentation(MonomialIdeal(n, gens)), h)


def conductor(
    P: ReesPresentation, full: bool = True, with_fiber_type: bool = False, jobs: int = 1
) -> ConductorReport:
    """Compute C(I) as the intersection of ``(L : h) ∩ R`` over J's basis.

    With ``full=False`` a generator ``h`` is skipped when every generator
    ``u`` of the running intersection already has ``u*h`` in L; the result
    is the same, only ``per_generator`` is shorter.  ``jobs > 1`` spreads
    the colons over worker processes (implies ``full``).
    """
    rel = relevant_generators(P)
    ft = is_fiber_type(P) if with_fiber_type else None
    if not rel:
        return ConductorReport(MonomialIdeal.unit(P.n), [], True, True if with_fiber_type else None)
    if jobs > 1 and len(rel) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            cols = list(ex.map(_colon_job, [(P.n, P.gens, h) for h in rel]))
        return ConductorReport(mi_intersection_all(cols, P.n), list(zip(rel, cols)), False, ft)
    L = P.L
    cur: MonomialIdeal | None = None
    per: list[tuple[dict, MonomialIdeal]] = []
    skipped: list[dict] = []
    for h in rel:
        if not full and cur is not None and all(L.contains_raw(_times(P.lift_x(u), h)) for u in cur.gens):
            skipped.append(h)
            continue
        col = colon_L_into_R(P, h)
        per.append((h, col))
        cur = col if cur is None else mi_intersection(cur, col)
    return ConductorReport(cur, per, False, ft, skipped)


def conductor_of(ideal: MonomialIdeal, **kw) -> ConductorReport:
    """Conductor of any monomial ideal; (0) and (1) have conductor (1)."""
    if ideal.is_zero() or ideal.is_unit():
        return ConductorReport(MonomialIdeal.unit(ideal.nvars), [], True, True)
    return conductor(ReesPresentation(ideal), **kw)


# -- reachability oracle ----------------------------------------------------


def _split(g) -> tuple[tuple, tuple]:
    if isinstance(g, Polynomial):
        if not g.is_pure_difference_binomial():
            raise ValueError(f"{g} is not a pure-difference binomial")
        (c1, m1), (_, m2) = g.terms
        return (tuple(m1), tuple(m2)) if c1 > 0 else (tuple(m2), tuple(m1))
    if len(g) != 2 or sorted(g.values()) != [-1, 1]:
        raise ValueError(f"{g} is not a pure-difference binomial")
    (m1, c1), (m2, _) = g.items()
    return (m1, m2) if c1 > 0 else (m2, m1)


def reachable(moves: Sequence[tuple[tuple, tuple]], start: tuple, goal: tuple, cap: int = DEFAULT_BFS_CAP) -> bool:
    """Breadth-first search over substitution chains ``m -> m * q / p``."""
    if start == goal:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for p, q in moves:
            for src, dst in ((p, q), (q, p)):
                if all(a >= b for a, b in zip(m, src)):
                    nxt = tuple(a - b + c for a, b, c in zip(m, src, dst))
                    if nxt in seen:
                        continue
                    if nxt == goal:
                        return True
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise ResourceCapExceeded(f"substitution search exceeded {cap} monomials")
                    queue.append(nxt)
    return False


def reachability_member(
    Lgens: Iterable[dict | Polynomial],
    target: dict | Polynomial | tuple[tuple, tuple],
    P: ReesPresentation | None = None,
    cap: int = DEFAULT_BFS_CAP,
) -> bool:
    """Membership of a pure-difference binomial in a pure-difference binomial
    ideal, decided by connectivity of its two monomials.

    With ``P`` given, both monomials must share multidegree and y-degree.
    """
    if isinstance(target, tuple):
        a, b = target
    elif not target:
        return True
    else:
        a, b = _split(target)
    if P is not None:
        if P.multidegree(a) != P.multidegree(b) or sum(a[P.n:]) != sum(b[P.n:]):
            raise ValueError("target binomial is not homogeneous")
    moves = [_split(g) for g in Lgens]
    return reachable(moves, tuple(a), tuple(b), cap)


def conductor_member_oracle(P: ReesPresentation, u: Sequence[int], cap: int = DEFAULT_BFS_CAP) -> bool:
    """``u in C(I)`` decided without Groebner bases on L."""
    gens = P.L.raw_generators
    moves = [_split(g) for g in gens]
    lu = P.lift_x(u)
    for h in P.J_basis():
        a, b = _split(h)
        a = tuple(x + y for x, y in zip(a, lu))
        b = tuple(x + y for x, y in zip(b, lu))
        if not reachable(moves, a, b, cap):
            return False
    return True


# -- checkers ----------------------------------------------------------------


def check_equalJ(P: ReesPresentation, r: Sequence[int], report: ConductorReport | None = None) -> bool:
    """``L : r == J`` for a nonzero monomial ``r`` in C(I)."""
    report = report or conductor(P)
    if not mi_member(r, report.conductor):
        raise ValueError(f"{tuple(r)} is not in the conductor")
    colon = colon_by_poly(P.L, {P.lift_x(r): 1})
    return colon.raw_groebner(P.J_order) == P.J_basis()


def check_radical_containment(P: ReesPresentation, report: ConductorReport | None = None) -> bool:
    report = report or conductor(P)
    return mi_radical(P.ideal) <= mi_radical(report.conductor)


@dataclass
class VallaResult:
    upper_ok: bool
    k_min: int | None
    linear_type_before: bool
    linear_type_after: bool


def valla_check(P: ReesPresentation, u: Sequence[int], k_max: int = DEFAULT_K_MAX) -> VallaResult:
    """Compare C((I, u)) with (C(I), u) for a non-zerodivisor monomial ``u``.

    ``upper_ok``: C((I,u)) ⊆ (C(I), u).  ``k_min``: least ``1 <= k <= k_max``
    with (C(I), u^k) ⊆ C((I,u)), or None.
    """
    I = P.ideal
    u = tuple(u)
    if not mi_is_nzd(I, u):
        raise ValueError(f"{u} is a zerodivisor modulo I")
    c_before = conductor(P, full=False).conductor
    I2 = mi_sum(I, MonomialIdeal(I.nvars, [u]))
    c_after = conductor_of(I2, full=False).conductor
    upper_ok = c_after <= mi_sum(c_before, MonomialIdeal(I.nvars, [u]))
    k_min = None
    if c_before <= c_after:
        for k in range(1, k_max + 1):
            if mi_member(tuple(k * a for a in u), c_after):
                k_min = k
                break
    return VallaResult(upper_ok, k_min, c_before.is_unit(), c_after.is_unit())


@dataclass
class DimCriterion:
    applicable: bool
    lhs: bool
    rhs: bool


def dim_criterion_check(P: ReesPresentation, report: ConductorReport | None = None) -> DimCriterion:
    """dim S(I) = dim R(I) versus mu(I) <= n + 1, applicable when C(I) is m-primary."""
    report = report or conductor(P, full=False)
    applicable = mi_is_m_primary(report.conductor)
    lhs = dim_sym(P) == dim_rees(P)
    rhs = mi_mu(P.ideal) <= P.n + 1
    return DimCriterion(applicable, lhs, rhs)


@dataclass
class Ydeg2Check:
    applicable: bool
    holds: bool


def ydeg2_implies_containment_check(P: ReesPresentation, report: ConductorReport | None = None) -> Ydeg2Check:
    report = report or conductor(P, full=False)
    return Ydeg2Check(max_ydegree_of_J(P) <= 2, P.ideal <= report.conductor)


@dataclass
class FiberContainmentProbe:
    fiber_type: bool
    contained: bool

    @property
    def violation(self) -> bool:
        return self.fiber_type and not self.contained


def fiber_type_containment_probe(P: ReesPresentation, report: ConductorReport | None = None) -> FiberContainmentProbe:
    """Empirical probe: does fiber type force I ⊆ C(I)?  Reports, never asserts."""
    report = report or conductor(P, full=False)
    return FiberContainmentProbe(is_fiber_type(P), P.ideal <= report.conductor)


__all__ = [
    "ConductorReport",
    "DimCriterion",
    "FiberContainmentProbe",
    "ResourceCapExceeded",
    "VallaResult",
    "Ydeg2Check",
    "check_equalJ",
    "check_radical_containment",
    "colon_L_into_R",
    "conductor",
    "conductor_member_oracle",
    "conductor_of",
    "dim_criterion_check",
    "fiber_type_containment_probe",
    "reachability_member",
    "reachable",
    "relevant_generators",
    "valla_check",
    "ydeg2_implies_containment_check",
]
