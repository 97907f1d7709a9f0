"""Exact brute-force searches that define ground truth for every constructive
guarantee, plus the Gallai-Roy orientation construction.

The induced-path searches run depth-first over extendable induced paths with
bitset pruning; they are exact whenever the search budget is not exhausted,
and best-effort results are always flagged, never silently returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels_jit, _kernels_py
from .backend import use_jit
from .graphs import ColoredGraph, Graph, GraphError, Path, _bits


class BudgetExceededError(GraphError):
    """Search budget exhausted while on_exceed='error'."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exact searches. on_exceed is 'error' or 'flag'."""

    max_vertices: int = 25
    max_nodes: int = 10**8
    on_exceed: str = "error"

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_nodes < 1:
            raise GraphError("budget caps must be positive")
        if self.on_exceed not in ("error", "flag"):
            raise GraphError("on_exceed must be 'error' or 'flag'")


@dataclass(frozen=True)
class SearchResult:
    """A search outcome: the path found, whether it is proved optimal, and
    how many search nodes were spent."""

    path: Path
    exact: bool
    nodes: int


def _dense_colors(cg: ColoredGraph) -> tuple[list[int], int]:
    remap: dict[int, int] = {}
    dense = []
    for c in cg.coloring.colors:
        if c not in remap:
            remap[c] = len(remap)
        dense.append(remap[c])
    return dense, len(remap)


def _check_budget(g: Graph, budget: SearchBudget) -> None:
    if g.n == 0:
        raise GraphError("no path of order >= 1 exists in the empty graph")
    if g.n > budget.max_vertices and budget.on_exceed == "error":
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the exact-search cap {budget.max_vertices}"
        )


def _finish(raw_path: list[int], nodes: int, exceeded: bool, budget: SearchBudget,
            normalize: bool = True) -> SearchResult:
    if exceeded and budget.on_exceed == "error":
        raise BudgetExceededError(f"search exceeded {budget.max_nodes} nodes")
    vs = tuple(raw_path)
    if normalize and len(vs) > 1 and vs[0] > vs[-1]:
        vs = tuple(reversed(vs))
    return SearchResult(Path(vs), exact=not exceeded, nodes=nodes)


def longest_induced_path(g: Graph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """A maximum-order induced path of g (exact unless the budget ran out).

    A vertex may extend the path only when adjacent to the last vertex and
    non-adjacent to every earlier path vertex. The returned path is oriented
    with its smaller endpoint first.
    """
    _check_budget(g, budget)
    if use_jit(g.n):
        masks = np.array(g.masks, dtype=np.int64)
        ln, arr, nodes, exceeded = _kernels_jit.longest_induced_path(masks, g.n, budget.max_nodes)
        return _finish([int(v) for v in arr[:ln]], int(nodes), bool(exceeded), budget)
    raw, nodes, exceeded = _kernels_py.longest_induced_path(g.masks, g.n, budget.max_nodes)
    return _finish(raw, nodes, exceeded, budget)


def longest_induced_rainbow_path(cg: ColoredGraph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """A maximum-order induced path whose vertices have pairwise distinct colors."""
    g = cg.graph
    _check_budget(g, budget)
    dense, palette = _dense_colors(cg)
    if use_jit(g.n, palette):
        masks = np.array(g.masks, dtype=np.int64)
        carr = np.array(dense, dtype=np.int64)
        ln, arr, nodes, exceeded = _kernels_jit.longest_induced_rainbow_path(
            masks, g.n, carr, budget.max_nodes
        )
        return _finish([int(v) for v in arr[:ln]], int(nodes), bool(exceeded), budget)
    raw, nodes, exceeded = _kernels_py.longest_induced_rainbow_path(
        g.masks, g.n, dense, budget.max_nodes
    )
    return _finish(raw, nodes, exceeded, budget)


def max_colorful_induced_path_from(
    cg: ColoredGraph, start: int, budget: SearchBudget = SearchBudget()
) -> SearchResult:
    """Induced path starting at `start` maximizing the number of distinct
    colors seen; ties prefer smaller order, then lexicographic sequence."""
    g = cg.graph
    if not 0 <= start < g.n:
        raise GraphError(f"start vertex {start} not in graph")
    _check_budget(g, budget)
    dense, palette = _dense_colors(cg)
    if use_jit(g.n, palette):
        masks = np.array(g.masks, dtype=np.int64)
        carr = np.array(dense, dtype=np.int64)
        ln, arr, nodes, exceeded = _kernels_jit.most_colorful_path_from(
            masks, g.n, carr, start, budget.max_nodes
        )
        return _finish([int(v) for v in arr[:ln]], int(nodes), bool(exceeded), budget,
                       normalize=False)
    raw, nodes, exceeded = _kernels_py.most_colorful_path_from(
        g.masks, g.n, dense, start, budget.max_nodes
    )
    return _finish(raw, nodes, exceeded, budget, normalize=False)


def orient_by_color(cg: ColoredGraph) -> list[tuple[int, int]]:
    """Arcs of the color orientation: each edge points at its larger color.

    The coloring is proper, so every edge gets a strict direction and the
    resulting digraph is acyclic (colors strictly increase along arcs).
    """
    arcs = []
    for u, v in cg.graph.edges():
        if cg.color_of(u) < cg.color_of(v):
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return arcs


def gallai_roy_rainbow_path(cg: ColoredGraph) -> Path:
    """Longest directed path of the color orientation, found by dynamic
    programming in color-sorted order.

    Colors strictly increase along the path, so it is rainbow; by the
    Gallai-Roy theorem its order is at least the chromatic number.
    """
    g = cg.graph
    if g.n == 0:
        raise GraphError("no path of order >= 1 exists in the empty graph")
    order = sorted(range(g.n), key=lambda v: (cg.color_of(v), v))
    dp = [1] * g.n
    pred = [-1] * g.n
    for v in order:
        cv = cg.color_of(v)
        for u in _bits(g.masks[v]):
            if cg.color_of(u) < cv and dp[u] + 1 > dp[v]:
                dp[v] = dp[u] + 1
                pred[v] = u
    end = max(range(g.n), key=lambda v: (dp[v], -v))
    rev = [end]
    while pred[rev[-1]] != -1:
        rev.append(pred[rev[-1]])
    return Path(tuple(reversed(rev)))
