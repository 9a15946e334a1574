"""Exact maximum-independent-set oracle.

Deterministic branch and bound over vertex bitmasks: branch on the
lowest-id vertex of maximum remaining degree, explore the include branch
first, prune when current + remaining cannot beat the incumbent. With an
unexhausted budget the result is a certified lower bound instead of the
exact value (exhausted=False).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadParams
from .graphs import Graph, _check_vertices

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class ExactResult:
    alpha: int
    witness: tuple[int, ...]
    nodes_explored: int
    exhausted: bool


def is_independent(g: Graph, members: Iterable[int]) -> bool:
    """True iff no edge of g has both endpoints in members."""
    s = set(_check_vertices(g, members))
    return not any(u in s and v in s for u, v in g.edges)


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.order
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def max_independent_set(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> ExactResult:
    """Maximum independent set of g, exact unless the node budget runs out."""
    if node_budget < 1:
        raise BadParams("node_budget must be >= 1")
    n = g.order
    if n == 0:
        return ExactResult(0, (), 0, True)
    masks = _neighbor_masks(g)
    best = -1
    best_set = 0
    nodes = 0
    exhausted = True
    stack = [((1 << n) - 1, 0)]
    while stack:
        if nodes >= node_budget:
            exhausted = False
            break
        nodes += 1
        rem, chosen = stack.pop()
        k = chosen.bit_count()
        if k > best:
            best = k
            best_set = chosen
        if rem == 0 or k + rem.bit_count() <= best:
            continue
        # lowest-id vertex of maximum degree within the remaining set
        branch = -1
        branch_deg = -1
        m = rem
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (masks[v] & rem).bit_count()
            if d > branch_deg:
                branch_deg = d
                branch = v
        # exclude pushed first so the include branch is explored first
        stack.append((rem & ~(1 << branch), chosen))
        stack.append((rem & ~(masks[branch] | (1 << branch)), chosen | (1 << branch)))
    witness = tuple(v for v in range(n) if best_set >> v & 1)
    return ExactResult(max(best, 0), witness, nodes, exhausted)
