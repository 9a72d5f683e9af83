"""Bounded Veronese ideals and edge ideals of graphs, with closed-form
conductors that the general engine can be checked against."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .groebner import IdealHandle
from .monomial_ideal import (
    MonomialIdeal,
    mi_intersection_all,
    mi_is_m_primary,
    mi_sum,
)
from .rees import ReesPresentation

# -- bounded Veronese ----------------------------------------------------------


@dataclass(frozen=True)
class VeroneseParams:
    n: int
    d: int
    c: int

    def __post_init__(self):
        if self.n < 1 or self.d < 0 or self.c < 0:
            raise ValueError(f"need n >= 1, d >= 0, c >= 0, got {self}")


class VeroneseStatus(Enum):
    ZERO = "Zero"
    UNIT = "Unit"
    IN_RANGE = "InRange"


@dataclass(frozen=True)
class NormalizedVeronese:
    reduced: VeroneseParams
    status: VeroneseStatus
    shift: int = 0  # exponent of (x1...xn) split off by the reductions


def _as_params(p) -> VeroneseParams:
    return p if isinstance(p, VeroneseParams) else VeroneseParams(*p)


def bounded_veronese(p: VeroneseParams | tuple) -> MonomialIdeal:
    """Degree-``d`` monomials in ``n`` variables with all exponents ``<= c``."""
    p = _as_params(p)
    gens = [e for e in itertools.product(range(min(p.c, p.d) + 1), repeat=p.n) if sum(e) == p.d]
    return MonomialIdeal(p.n, gens)


def veronese_normalize(p: VeroneseParams | tuple) -> NormalizedVeronese:
    """Reduce to ``1 <= c <= d <= (n-1)c`` or report a zero/unit ideal.

    ``I_{n,d,c}`` with ``(n-1)c < d <= nc`` is ``(x1...xn)^(d-(n-1)c)``
    times ``I_{n,(nc-d)(n-1),nc-d}``, and the monomial factor changes
    neither L nor J.
    """
    p = _as_params(p)
    n, d, c = p.n, p.d, p.c
    if d > n * c:
        return NormalizedVeronese(p, VeroneseStatus.ZERO)
    shift = 0
    while True:
        c = min(c, d)
        if (n - 1) * c < d <= n * c:
            shift += d - (n - 1) * c
            d, c = (n * c - d) * (n - 1), n * c - d
            continue
        break
    status = VeroneseStatus.UNIT if d == 0 else VeroneseStatus.IN_RANGE
    return NormalizedVeronese(VeroneseParams(n, d, c), status, shift)


def veronese_conductor_formula(p: VeroneseParams | tuple) -> MonomialIdeal:
    p = _as_params(p)
    norm = veronese_normalize(p)
    if norm.status is not VeroneseStatus.IN_RANGE:
        return MonomialIdeal.unit(p.n)
    n, d, c = norm.reduced.n, norm.reduced.d, norm.reduced.c
    if (d, c) in ((n - 1, 1), (1, 1)):
        return MonomialIdeal.unit(n)
    q = (d - 2) // c
    return bounded_veronese(VeroneseParams(n, q + 1, 1))


def veronese_is_linear_type(p: VeroneseParams | tuple) -> bool:
    p = _as_params(p)
    return p.n == 1 or p.d <= 1 or p.d >= p.n * p.c - 1


# -- graphs --------------------------------------------------------------------


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``1..n``; an edge ``(i, i)`` is a loop."""

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        norm = []
        for e in edges:
            i, j = sorted(int(v) for v in e)
            if not (1 <= i and j <= n):
                raise ValueError(f"edge {tuple(e)} outside vertices 1..{n}")
            norm.append((i, j))
        if len(set(norm)) != len(norm):
            raise ValueError("parallel edges are not allowed")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def has_loops(self) -> bool:
        return any(i == j for i, j in self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            if j == v:
                out.add(i)
        return out

    def is_connected(self) -> bool:
        seen, stack = {1}, [1]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def edge_monomial(n: int, e: Edge) -> tuple[int, ...]:
    x = [0] * n
    x[e[0] - 1] += 1
    x[e[1] - 1] += 1
    return tuple(x)


def edge_ideal(G: Graph) -> MonomialIdeal:
    if not G.edges:
        raise ValueError("edge ideal needs at least one edge")
    return MonomialIdeal(G.n, [edge_monomial(G.n, e) for e in G.edges])


def _monomial_edge(x: Sequence[int]) -> Edge:
    supp = [i + 1 for i, a in enumerate(x) for _ in range(a)]
    return (supp[0], supp[1])


def edge_order(G: Graph) -> list[Edge]:
    """Edges in the order of the edge ideal's generators, i.e. ``y_j <-> edge j``."""
    return [_monomial_edge(g) for g in edge_ideal(G).gens]


@dataclass(frozen=True)
class WalkRelation:
    """A fiber binomial ``y^plus - y^minus`` with its walk data."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    edges: tuple[tuple[Edge, int], ...]  # (edge, multiplicity)
    vertices: frozenset[int]
    neighborhood: MonomialIdeal = field(compare=False)

    @property
    def binomial(self) -> dict:
        return {self.plus: 1, self.minus: -1}

    @property
    def degree(self) -> int:
        return sum(self.plus)


def _walk_relation(G: Graph, order: list[Edge], plus, minus) -> WalkRelation:
    mult: dict[Edge, int] = {}
    for j, (a, b) in enumerate(zip(plus, minus)):
        if a + b:
            mult[order[j]] = a + b
    verts = frozenset(v for e in mult for v in e)
    nb = sorted({a for i, j in G.edges for a, b in ((i, j), (j, i)) if b in verts})
    N = MonomialIdeal(G.n, [tuple(int(k == i - 1) for k in range(G.n)) for i in nb])
    return WalkRelation(tuple(plus), tuple(minus), tuple(sorted(mult.items())), verts, N)


def graph_presentation(G: Graph) -> ReesPresentation:
    return ReesPresentation(edge_ideal(G))


def primitive_walk_relations(G: Graph, P: ReesPresentation | None = None) -> list[WalkRelation]:
    """The reduced Groebner basis of the fiber ideal, decoded as walks.

    Reduced-basis elements of a toric ideal are primitive binomials, and
    primitive binomials of the edge ring are the primitive even closed walks.
    """
    P = P or graph_presentation(G)
    order = edge_order(G)
    out = []
    for h in P.H.raw_groebner():
        (a, ca), (b, _) = h.items()
        plus, minus = (a, b) if ca > 0 else (b, a)
        out.append(_walk_relation(G, order, plus, minus))
    return out


def graph_conductor_formula(G: Graph, P: ReesPresentation | None = None) -> MonomialIdeal:
    """``I(G)`` plus the intersection of ``N_walk`` over fiber generators.

    C is contained in ``L : h`` for every primitive walk ``h`` and the colon
    ``(L : h) ∩ R = I(G) + N_walk``; intersecting over a generating set of
    the fiber ideal already gives all of C, so the reduced basis suffices.
    """
    walks = primitive_walk_relations(G, P)
    if not walks:
        return MonomialIdeal.unit(G.n)
    return mi_sum(edge_ideal(G), mi_intersection_all((w.neighborhood for w in walks), G.n))


@dataclass(frozen=True)
class GraphPrimaryCriteria:
    c_primary: bool
    c_equals_m: bool
    walk_condition: bool

    @property
    def agree(self) -> bool:
        return self.c_primary == self.c_equals_m == self.walk_condition


def graph_primary_criteria(G: Graph) -> GraphPrimaryCriteria:
    """Three equivalent descriptions of ``C(I(G)) = m`` for simple graphs.

    The walk condition asks for at least one walk, since a linear-type
    graph has ``C = (1)``.
    """
    if G.has_loops:
        raise ValueError("the criteria only hold for graphs without loops")
    P = graph_presentation(G)
    walks = primitive_walk_relations(G, P)
    C = graph_conductor_formula(G, P)
    m = MonomialIdeal.maximal(G.n)
    cond = bool(walks) and all(m <= w.neighborhood for w in walks)
    return GraphPrimaryCriteria(mi_is_m_primary(C), C == m, cond)


# -- walk oracle -----------------------------------------------------------------


def _closed_walks(G: Graph, max_len: int):
    """Closed walks of even length ``<= max_len`` with no vertex repeated at
    an even distance (other than start and end).

    A repeat at even distance splits off an even closed subwalk whose
    binomial divides both halves, so such walks are never primitive.
    """
    adj = {v: sorted(G.neighbors(v)) for v in range(1, G.n + 1)}
    for s in range(1, G.n + 1):
        path = [s]
        pos = {s: [0]}

        def extend():
            k = len(path)
            for w in adj[path[-1]]:
                if w == s and k % 2 == 0:
                    yield list(path) + [s]
                    continue
                if any((k - q) % 2 == 0 for q in pos.get(w, ())):
                    continue
                if k + 1 > max_len:
                    continue
                path.append(w)
                pos.setdefault(w, []).append(k)
                yield from extend()
                pos[w].pop()
                path.pop()

        yield from extend()


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def enumerate_walks_oracle(G: Graph, max_len: int | None = None) -> list[WalkRelation]:
    """Primitive even closed walk binomials by exhaustive search.

    Independent of Groebner bases; ``max_len`` defaults to ``2|E|``.
    """
    if max_len is None:
        max_len = 2 * len(G.edges)
    if max_len % 2:
        raise ValueError("max_len must be even")
    order = edge_order(G)
    index = {e: j for j, e in enumerate(order)}
    m = len(order)
    found: set[tuple] = set()
    for walk in _closed_walks(G, max_len):
        plus, minus = [0] * m, [0] * m
        for k in range(len(walk) - 1):
            e = tuple(sorted((walk[k], walk[k + 1])))
            (plus if k % 2 == 0 else minus)[index[e]] += 1
        if plus == minus:
            continue
        found.add(tuple(sorted((tuple(plus), tuple(minus)))))
    keep = []
    for a, b in found:
        dominated = any(
            (c, d) != (a, b) and ((_divides(c, a) and _divides(d, b)) or (_divides(c, b) and _divides(d, a)))
            for c, d in found
        )
        if not dominated:
            keep.append((a, b))
    # orient so that plus is larger in lex
    keep.sort(reverse=True)
    return [_walk_relation(G, order, max(a, b), min(a, b)) for a, b in keep]


def walks_generate_fiber(G: Graph, walks: Sequence[WalkRelation], P: ReesPresentation | None = None) -> bool:
    """Mutual membership between ``walks`` and the fiber ideal's basis."""
    P = P or graph_presentation(G)
    H = P.H
    if not all(H.contains_raw(w.binomial) for w in walks):
        return False
    W = IdealHandle(H.ctx, [w.binomial for w in walks], H.weights)
    return all(W.contains_raw(h) for h in H.raw_groebner())


# -- enumeration and file format -------------------------------------------------


def _canonical(n: int, edges: Iterable[Edge]) -> tuple[Edge, ...]:
    edges = list(edges)
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        img = tuple(sorted(tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in edges))
        if best is None or img < best:
            best = img
    return best


def connected_graphs(max_vertices: int = 5, loops: bool = True) -> list[Graph]:
    """Connected graphs with at least one edge on ``1..max_vertices`` vertices,
    one per isomorphism class."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        simple = set()
        for mask in range(1 << len(pairs)):
            es = [p for k, p in enumerate(pairs) if mask >> k & 1]
            if Graph(n, es).is_connected():
                simple.add(_canonical(n, es))
        seen = set()
        for es in sorted(simple):
            loop_sets = range(1 << n) if loops else [0]
            for lm in loop_sets:
                full = list(es) + [(v, v) for v in range(1, n + 1) if lm >> (v - 1) & 1]
                if not full:
                    continue
                key = _canonical(n, full)
                if key not in seen:
                    seen.add(key)
                    out.append(Graph(n, key))
    return out


def parse_graph(text: str) -> Graph:
    """``vertices: n`` followed by one ``i j`` edge per line."""
    lines = [(k, ln.split("#")[0].strip()) for k, ln in enumerate(text.splitlines(), 1)]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines or not lines[0][1].startswith("vertices:"):
        raise ValueError("graph file must start with 'vertices: n'")
    try:
        n = int(lines[0][1].split(":", 1)[1])
    except ValueError:
        raise ValueError(f"line {lines[0][0]}: bad vertex count") from None
    edges = []
    for k, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"line {k}: expected 'i j', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ValueError(f"invalid graph: {exc}") from None


def render_graph(G: Graph) -> str:
    return "\n".join([f"vertices: {G.n}"] + [f"{i} {j}" for i, j in G.edges]) + "\n"


TWO_BLOCK_EDGES = [(1, 4), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 6), (6, 9), (9, 10), (10, 6)]


def two_block_graph() -> Graph:
    """Square 1-2-3-4 joined through vertex 5 to two triangles at vertex 6."""
    return Graph(10, TWO_BLOCK_EDGES)


__all__ = [
    "TWO_BLOCK_EDGES",
    "Graph",
    "GraphPrimaryCriteria",
    "NormalizedVeronese",
    "VeroneseParams",
    "VeroneseStatus",
    "WalkRelation",
    "bounded_veronese",
    "connected_graphs",
    "edge_ideal",
    "edge_order",
    "enumerate_walks_oracle",
    "two_block_graph",
    "graph_conductor_formula",
    "graph_presentation",
    "graph_primary_criteria",
    "parse_graph",
    "primitive_walk_relations",
    "render_graph",
    "veronese_conductor_formula",
    "veronese_is_linear_type",
    "veronese_normalize",
    "walks_generate_fiber",
]
