"""Exact and heuristic proper coloring: chromatic number, optimal witnesses,
and canonical enumeration of proper colorings.

The exact solver decides k-colorability for increasing k between a
clique/odd-cycle lower bound and the DSATUR upper bound, so the returned
chi is proved optimal. Results are memoized per graph; Graph is immutable
and hashable, which makes the cache safe.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graphs import Coloring, Graph, GraphError, _bits


class TooLargeError(GraphError):
    """Graph exceeds the configured cap for exact chromatic search."""


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic number with an optimal witness coloring.

    lower_bound_certificate is ("clique", vertices) or ("odd_cycle", vertices)
    when a nontrivial lower bound was found, else None.
    """

    chi: int
    witness: Coloring
    lower_bound_certificate: tuple[str, tuple[int, ...]] | None = None


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy DSATUR coloring: highest saturation first, ties by degree then id.

    Deterministic; palette size is an upper bound on chi(g).
    """
    colors = [0] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = min(uncolored, key=lambda u: (-len(neighbor_colors[u]), -g.degree(u), u))
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in _bits(g.masks[v]):
            if colors[u] == 0:
                neighbor_colors[u].add(c)
    return Coloring(tuple(colors))


def _greedy_clique(g: Graph) -> tuple[int, ...]:
    """Greedy maximal clique grown from the highest-degree vertex."""
    if g.n == 0:
        return ()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best: tuple[int, ...] = (order[0],)
    for start in order[: min(g.n, 8)]:
        clique = [start]
        common = g.masks[start]
        while common:
            v = min(_bits(common), key=lambda u: (-(g.masks[u] & common).bit_count(), u))
            clique.append(v)
            common &= g.masks[v]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def _odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd cycle witnessing non-bipartiteness, or None if g is bipartite."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _bits(g.masks[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    # close the cycle through the lowest common BFS ancestor
                    anc = [v]
                    while parent[anc[-1]] != -1:
                        anc.append(parent[anc[-1]])
                    anc_pos = {x: i for i, x in enumerate(anc)}
                    trail = [u]
                    while trail[-1] not in anc_pos:
                        trail.append(parent[trail[-1]])
                    meet = trail.pop()
                    return tuple(anc[: anc_pos[meet] + 1] + list(reversed(trail)))
    return None


def _k_colorable(g: Graph, k: int) -> Coloring | None:
    """Backtracking k-colorability with DSATUR vertex choice and color-class
    symmetry breaking (a vertex may open at most one fresh color)."""
    n = g.n
    colors = [0] * n
    forbidden = [0] * n  # bitmask of colors 1..k already used by neighbors

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            key = (-forbidden[v].bit_count(), -g.degree(v), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def assign(v: int, used: int) -> bool:
        limit = min(used + 1, k)
        for c in range(1, limit + 1):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            ok = True
            for u in _bits(g.masks[v]):
                if not colors[u] and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
                    if forbidden[u].bit_count() >= k:
                        ok = False
            if ok:
                nxt = pick()
                if nxt == -1:
                    return True
                if assign(nxt, max(used, c)):
                    return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colors[v] = 0
        return False

    if n == 0:
        return Coloring(())
    first = pick()
    if assign(first, 0):
        return Coloring(tuple(colors))
    return None


@functools.lru_cache(maxsize=200_000)
def chromatic_number(g: Graph, max_vertices: int = 64) -> ChromaticResult:
    """Exact chromatic number with optimal witness, proved by k-colorability search.

    Raises TooLargeError if g has more than max_vertices vertices. The empty
    graph gets chi = 0 with an empty witness.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"{g.n} vertices is too large for exact search (cap {max_vertices})")
    if g.n == 0:
        return ChromaticResult(0, Coloring(()))
    if g.edge_count == 0:
        return ChromaticResult(1, Coloring((1,) * g.n))

    upper = dsatur_coloring(g)
    clique = _greedy_clique(g)
    lb = max(2, len(clique))
    certificate: tuple[str, tuple[int, ...]] | None = ("clique", clique) if len(clique) >= 2 else None
    if lb == 2:
        cycle = _odd_cycle(g)
        if cycle is not None:
            lb = 3
            certificate = ("odd_cycle", cycle)
    if upper.palette_size == lb:
        return ChromaticResult(lb, upper, certificate)

    for k in range(lb, upper.palette_size):
        witness = _k_colorable(g, k)
        if witness is not None:
            return ChromaticResult(k, witness, certificate)
    return ChromaticResult(upper.palette_size, upper, certificate)


def canonical_form(coloring: Coloring) -> Coloring:
    """Rename colors by first occurrence along vertex id order (1, 2, ...)."""
    rename: dict[int, int] = {}
    out = []
    for c in coloring.colors:
        if c not in rename:
            rename[c] = len(rename) + 1
        out.append(rename[c])
    return Coloring(tuple(out))


def iter_colorings(g: Graph, max_colors: int) -> Iterator[Coloring]:
    """Stream canonical proper colorings of g using at most max_colors colors.

    Canonical means colors are named by first occurrence along vertex order,
    so no two emitted colorings are color permutations of each other. Emission
    order is lexicographic over vertex-id-ordered assignments.
    """
    if max_colors < 1:
        return
    n = g.n
    if n == 0:
        yield Coloring(())
        return
    lower = [
        [u for u in _bits(g.masks[v]) if u < v]
        for v in range(n)
    ]
    colors = [0] * n

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if v == n:
            yield Coloring(tuple(colors))
            return
        taken = {colors[u] for u in lower[v]}
        for c in range(1, min(used + 1, max_colors) + 1):
            if c in taken:
                continue
            colors[v] = c
            yield from rec(v + 1, max(used, c))
        colors[v] = 0

    yield from rec(0, 0)


@dataclass(frozen=True)
class ColoringEnumeration:
    colorings: tuple[Coloring, ...]
    truncated: bool


def enumerate_colorings(g: Graph, max_colors: int, cap: int) -> ColoringEnumeration:
    """Collect up to cap canonical proper colorings, reporting truncation."""
    if cap < 0:
        raise GraphError("cap must be non-negative")
    out: list[Coloring] = []
    truncated = False
    for coloring in iter_colorings(g, max_colors):
        if len(out) == cap:
            truncated = True
            break
        out.append(coloring)
    return ColoringEnumeration(tuple(out), truncated)
