"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (adjacency lists, recursive search,
full re-classification of every candidate) and shares no machinery with the
package's pruned bitmask searches.
"""

from __future__ import annotations

from itertools import combinations, product

from rainbowpath.graphs import ColoredGraph, Graph


def adjacency_lists(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges():
        adj[u].append(v)
        adj[v].append(u)
    return adj


def is_induced_seq(g: Graph, seq: list[int]) -> bool:
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            if g.has_edge(seq[i], seq[j]):
                return False
    return True


def naive_triangle_free(g: Graph) -> bool:
    return not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in combinations(range(g.n), 3)
    )


def _all_paths(g: Graph):
    """Every simple path (as a vertex list), extended by adjacency only.

    No induced/rainbow pruning: each complete sequence is classified by the
    caller.
    """
    adj = adjacency_lists(g)

    def extend(seq: list[int], used: set[int]):
        yield seq
        for w in adj[seq[-1]]:
            if w not in used:
                used.add(w)
                seq.append(w)
                yield from extend(seq, used)
                seq.pop()
                used.remove(w)

    for start in range(g.n):
        yield from extend([start], {start})


def naive_longest_induced_path_order(g: Graph) -> int:
    best = 0
    for seq in _all_paths(g):
        if len(seq) > best and is_induced_seq(g, seq):
            best = len(seq)
    return best


def naive_longest_induced_rainbow_path_order(cg: ColoredGraph) -> int:
    g = cg.graph
    best = 0
    for seq in _all_paths(g):
        if len(seq) <= best:
            continue
        colors = [cg.color_of(v) for v in seq]
        if len(set(colors)) == len(seq) and is_induced_seq(g, seq):
            best = len(seq)
    return best


def naive_most_colorful_from(cg: ColoredGraph, start: int) -> int:
    g = cg.graph
    best = 0
    for seq in _all_paths(g):
        if seq[0] != start or not is_induced_seq(g, seq):
            continue
        best = max(best, len({cg.color_of(v) for v in seq}))
    return best


def naive_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    edges = list(g.edges())
    if not edges:
        return 1
    for k in range(1, g.n + 1):
        for assign in product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def naive_canonical_colorings(g: Graph, max_colors: int) -> set[tuple[int, ...]]:
    """Brute force all assignments, keep proper ones, canonicalize, dedupe."""
    edges = list(g.edges())
    out: set[tuple[int, ...]] = set()
    for assign in product(range(1, max_colors + 1), repeat=g.n):
        if any(assign[u] == assign[v] for u, v in edges):
            continue
        rename: dict[int, int] = {}
        canon = []
        for c in assign:
            if c not in rename:
                rename[c] = len(rename) + 1
            canon.append(rename[c])
        out.add(tuple(canon))
    return out


def is_bipartite_bfs(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in range(g.n):
                if g.has_edge(v, u):
                    if side[u] == -1:
                        side[u] = 1 - side[v]
                        queue.append(u)
                    elif side[u] == side[v]:
                        return False
    return True
