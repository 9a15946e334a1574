"""Simple undirected graphs and the constructions used throughout.

Vertices are 0..order-1; edges are stored normalized (u < v, sorted,
deduplicated). Graphs are immutable after construction, hashable, and
compare by (order, edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadParams, EmptyGraph, OutOfRange, SelfLoop, UnknownFamily

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Build via new_graph or a generator."""

    order: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def new_graph(order: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validating constructor: checks ranges, rejects loops, normalizes."""
    if order < 0:
        raise BadParams(f"order must be nonnegative, got {order}")
    seen: set[Edge] = set()
    for e in edge_list:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise SelfLoop(f"edge ({u},{v}) is a loop")
        if not (0 <= u < order) or not (0 <= v < order):
            raise OutOfRange(f"edge ({u},{v}) outside [0,{order})")
        if u > v:
            u, v = v, u
        seen.add((u, v))
    return Graph(order, tuple(sorted(seen)))


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees with the extremes delta (min) and Delta (max)."""

    degrees: tuple[int, ...]
    delta: int
    Delta: int

    @property
    def is_regular(self) -> bool:
        return self.delta == self.Delta


def degrees(g: Graph) -> DegreeProfile:
    """Degree sequence of g. Raises EmptyGraph when order is 0."""
    if g.order == 0:
        raise EmptyGraph("degree extremes undefined on the empty graph")
    degs = tuple(len(ns) for ns in g.adjacency)
    return DegreeProfile(degs, min(degs), max(degs))


def _check_vertices(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    """Sorted, deduplicated vertex tuple; OutOfRange on bad ids."""
    out = sorted(set(int(v) for v in members))
    if out and (out[0] < 0 or out[-1] >= g.order):
        raise OutOfRange(f"vertex outside [0,{g.order})")
    return tuple(out)


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on `members`, relabeled 0..k-1 in ascending original order.

    Returns (subgraph, kept) where kept[new_id] = original id.
    """
    kept = _check_vertices(g, members)
    relabel = {v: i for i, v in enumerate(kept)}
    inside = [(relabel[u], relabel[v]) for u, v in g.edges
              if u in relabel and v in relabel]
    return Graph(len(kept), tuple(sorted(inside))), kept


def derived_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of non-maximal degree.

    Returns (subgraph, kept); kept maps new ids back to original ids.
    A regular graph derives to the graph on 0 vertices.
    """
    prof = degrees(g)
    keep = [v for v in range(g.order) if prof.degrees[v] < prof.Delta]
    return induced_subgraph(g, keep)


def cone(g: Graph) -> Graph:
    """Join a new apex vertex (highest index) to every vertex of g."""
    if g.order == 0:
        raise EmptyGraph("cone needs at least one base vertex")
    apex = g.order
    edges = list(g.edges) + [(v, apex) for v in range(g.order)]
    return Graph(apex + 1, tuple(sorted(edges)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (x, y) gets index x*h.order + y."""
    if g.order == 0 or h.order == 0:
        raise EmptyGraph("cartesian product needs nonempty factors")
    nh = h.order
    edges = []
    for x in range(g.order):
        for y1, y2 in h.edges:
            edges.append((x * nh + y1, x * nh + y2))
    for x1, x2 in g.edges:
        for y in range(nh):
            edges.append((x1 * nh + y, x2 * nh + y))
    return Graph(g.order * nh, tuple(sorted(edges)))


def connected_components(g: Graph) -> int:
    """Number of connected components (isolated vertices count)."""
    seen = [False] * g.order
    count = 0
    for start in range(g.order):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


# ---------------------------------------------------------------------------
# named families

def _path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def _empty(n: int) -> Graph:
    if n < 0:
        raise BadParams("empty needs n >= 0")
    return Graph(n, ())


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParams("complete_bipartite needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def _complete_split(m: int, s: int) -> Graph:
    # join of K_m (vertices 0..m-1) with s isolated vertices
    if m < 0 or s < 0 or m + s < 1:
        raise BadParams("complete_split needs m, s >= 0 and m+s >= 1")
    edges = list(combinations(range(m), 2))
    edges += [(i, m + j) for i in range(m) for j in range(s)]
    return Graph(m + s, tuple(sorted(edges)))


def _star(n: int) -> Graph:
    # n total vertices: center 0 joined to 1..n-1
    if n < 1:
        raise BadParams("star needs n >= 1")
    return Graph(n, tuple((0, v) for v in range(1, n)))


_FAMILIES = {
    "path": (_path, 1),
    "cycle": (_cycle, 1),
    "complete": (_complete, 1),
    "empty": (_empty, 1),
    "complete_bipartite": (_complete_bipartite, 2),
    "complete_split": (_complete_split, 2),
    "star": (_star, 1),
}


def generate_family(family: str, params: Sequence[int]) -> Graph:
    """Canonical labeled graph from a named family."""
    key = family.replace("-", "_")
    if key not in _FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}")
    fn, arity = _FAMILIES[key]
    if len(params) != arity:
        raise BadParams(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*[int(p) for p in params])


# ---------------------------------------------------------------------------
# edge-list text format: first non-comment line "n m", then m lines "u v";
# lines starting with '#' are comments.

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise BadParams("edge-list input is empty")
    head = lines[0].split()
    if len(head) != 2:
        raise BadParams(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise BadParams(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise BadParams(f"expected edge line 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.order} {g.size}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
