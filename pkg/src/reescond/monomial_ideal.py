"""Combinatorial arithmetic on monomial ideals of K[x1..xn].

No Groebner bases are involved, so these routines double as an
independent oracle for the engine in :mod:`reescond.groebner`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import Monomial, divides, render_monomial


def _sort_key(e):
    # ascending degree; within a degree, larger in degrevlex first
    return (sum(e), tuple(reversed(e)))


def _minimal(gens: Iterable[Sequence[int]]) -> tuple[Monomial, ...]:
    kept: list[tuple] = []
    for g in sorted({tuple(g) for g in gens}, key=_sort_key):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(Monomial(g) for g in kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators.

    The unit ideal is ``(1)``, the zero ideal has no generators.
    """

    nvars: int
    gens: tuple[Monomial, ...]

    def __init__(self, nvars: int, gens: Iterable[Sequence[int]] = ()):
        gens = list(gens)
        for g in gens:
            if len(g) != nvars:
                raise ValueError(f"generator {tuple(g)} has {len(g)} exponents, expected {nvars}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", _minimal(gens))

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, [(0,) * nvars])

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, [])

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, [tuple(int(i == j) for j in range(nvars)) for i in range(nvars)])

    @property
    def min_gens(self) -> tuple[Monomial, ...]:
        return self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    def __contains__(self, u) -> bool:
        return mi_member(u, self)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(mi_member(g, other) for g in self.gens)

    def __add__(self, other):
        return mi_sum(self, other)

    def __and__(self, other):
        return mi_intersection(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same(self, other)
        return MonomialIdeal(self.nvars, [tuple(a + b for a, b in zip(f, g)) for f in self.gens for g in other.gens])

    def scale(self, u: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, [tuple(a + b for a, b in zip(g, u)) for g in self.gens])

    def extend(self, nvars: int) -> "MonomialIdeal":
        """The same generators viewed in more variables."""
        pad = (0,) * (nvars - self.nvars)
        return MonomialIdeal(nvars, [tuple(g) + pad for g in self.gens])

    def strings(self) -> list[str]:
        return [render_monomial(g) for g in self.gens]

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.strings()) + ")"

    def __repr__(self):
        return f"MonomialIdeal({self.nvars}, {str(self)})"


def _same(a: MonomialIdeal, b: MonomialIdeal):
    if a.nvars != b.nvars:
        raise ValueError(f"ideals in {a.nvars} and {b.nvars} variables")


def mi_minimalize(gens: Iterable[Sequence[int]], nvars: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if nvars is None:
        nvars = len(gens[0]) if gens else 0
    return MonomialIdeal(nvars, gens)


def mi_member(u: Sequence[int], ideal: MonomialIdeal) -> bool:
    if len(u) != ideal.nvars:
        raise ValueError("monomial outside the ideal's ring")
    return any(divides(g, u) for g in ideal.gens)


def mi_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same(a, b)
    return MonomialIdeal(a.nvars, a.gens + b.gens)


def mi_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same(a, b)
    return MonomialIdeal(a.nvars, [tuple(map(max, f, g)) for f in a.gens for g in b.gens])


def mi_intersection_all(ideals: Iterable[MonomialIdeal], nvars: int) -> MonomialIdeal:
    out = MonomialIdeal.unit(nvars)
    for i in ideals:
        out = mi_intersection(out, i)
    return out


def mi_colon_monomial(a: MonomialIdeal, v: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(a.nvars, [tuple(max(x - y, 0) for x, y in zip(g, v)) for g in a.gens])


def mi_colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """``a : b``, the intersection of ``a : v`` over generators ``v`` of ``b``."""
    _same(a, b)
    return mi_intersection_all((mi_colon_monomial(a, v) for v in b.gens), a.nvars)


def mi_radical(a: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(a.nvars, [tuple(min(x, 1) for x in g) for g in a.gens])


def mi_is_m_primary(a: MonomialIdeal) -> bool:
    """Proper, and every variable has a pure power among the generators."""
    if a.is_zero() or a.is_unit():
        return False
    seen = set()
    for g in a.gens:
        supp = [i for i, x in enumerate(g) if x]
        if len(supp) == 1:
            seen.add(supp[0])
    return len(seen) == a.nvars


def mi_mu(a: MonomialIdeal) -> int:
    return len(a.gens)


def mi_is_squarefree(a: MonomialIdeal) -> bool:
    return all(x <= 1 for g in a.gens for x in g)


def mi_is_nzd(a: MonomialIdeal, u: Sequence[int]) -> bool:
    """True when ``u`` is a non-zerodivisor modulo ``a``, i.e. ``a : u = a``."""
    if a.is_unit():
        raise ValueError("non-zerodivisor test needs a proper ideal")
    return mi_colon_monomial(a, u) == a


# -- text format -------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_HEADER = re.compile(r"^\s*vars\s*:\s*(\S+)\s*$")
_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``x1^2*x2, x3`` style text with an optional ``vars: n`` header.

    Generators are separated by commas or newlines; ``1`` is the unit
    monomial and ``0`` contributes nothing.
    """
    declared = None
    monos: list[dict[int, int]] = []
    max_index = 0
    for lineno, line in enumerate(text.splitlines() or [""], 1):
        hm = _HEADER.match(line)
        if hm:
            if declared is not None or monos:
                raise ParseError("vars header must come first", lineno, 1)
            try:
                declared = int(hm.group(1))
            except ValueError:
                raise ParseError(f"bad variable count {hm.group(1)!r}", lineno, line.index(hm.group(1)) + 1) from None
            if declared < 1:
                raise ParseError("variable count must be positive", lineno, 1)
            continue
        col = 0
        for chunk in line.split(","):
            start = col + len(chunk) - len(chunk.lstrip()) + 1
            col += len(chunk) + 1
            token = chunk.strip()
            if not token:
                continue
            if token == "0":
                continue
            exps: dict[int, int] = {}
            if token != "1":
                fcol = start
                for factor in token.split("*"):
                    f = factor.strip()
                    m = _FACTOR.match(f)
                    if not m:
                        raise ParseError(f"malformed factor {f!r}", lineno, fcol)
                    idx = int(m.group(1))
                    e = int(m.group(2)) if m.group(2) is not None else 1
                    if idx == 0:
                        raise ParseError("variable index must start at 1", lineno, fcol)
                    if e < 0:
                        raise ParseError(f"negative exponent {e}", lineno, fcol)
                    exps[idx] = exps.get(idx, 0) + e
                    max_index = max(max_index, idx)
                    fcol += len(factor) + 1
            monos.append(exps)
    n = declared if declared is not None else max_index
    if declared is not None and max_index > declared:
        raise ParseError(f"variable x{max_index} exceeds declared count {declared}", 1, 1)
    if n == 0:
        n = 1 if monos else 0
        if n == 0:
            raise ParseError("empty ideal without a vars header", 1, 1)
    gens = [tuple(m.get(i, 0) for i in range(1, n + 1)) for m in monos]
    return MonomialIdeal(n, gens)


def render_ideal(a: MonomialIdeal, header: bool = True) -> str:
    body = ", ".join(a.strings()) if a.gens else "0"
    return f"vars: {a.nvars}\n{body}" if header else body
