"""Triangle-free graph families: cycles, Mycielski iterates, Kneser graphs,
and seeded random triangle-free graphs for corpus building."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graphs import Graph, GraphError, build_graph


def cycle_graph(n: int) -> Graph:
    """The n-cycle, n >= 3."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: 2n+1 vertices, 3m+n edges.

    Preserves triangle-freeness and raises the chromatic number by exactly
    one. Vertex layout: originals 0..n-1, shadow of v at n+v, apex at 2n.
    """
    n = g.n
    edges: list[tuple[int, int]] = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    apex = 2 * n
    edges.extend((n + v, apex) for v in range(n))
    return build_graph(2 * n + 1, edges)


def mycielski_iterates(depth: int) -> list[Graph]:
    """K2 followed by its first `depth` Mycielski iterates (chi = 2..depth+2)."""
    if depth < 0:
        raise GraphError("depth must be non-negative")
    out = [build_graph(2, [(0, 1)])]
    for _ in range(depth):
        out.append(mycielskian(out[-1]))
    return out


def kneser_graph(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of [n] in lexicographic order, edges between
    disjoint subsets. Triangle-free whenever n < 3k. Requires n >= 2k >= 2."""
    if k < 1 or n < 2 * k:
        raise GraphError(f"kneser parameters need n >= 2k >= 2, got n={n}, k={k}")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return build_graph(len(subsets), edges)


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def random_triangle_free(n: int, p: float, seed: int) -> Graph:
    """Seeded random triangle-free graph.

    Candidate edges are visited in a seeded random order; each is kept with
    probability p unless it would close a triangle. The output is always
    triangle-free and identical for identical seeds.
    """
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rng = random.Random(seed)
    candidates = list(combinations(range(n), 2))
    rng.shuffle(candidates)
    masks = [0] * n
    for u, v in candidates:
        if rng.random() >= p:
            continue
        if masks[u] & masks[v]:
            continue
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


GENERATOR_KINDS = ("cycle", "mycielskian-iterate", "kneser", "random-triangle-free")


@dataclass(frozen=True)
class GeneratorSpec:
    """Validated recipe for one generated family."""

    kind: str
    parameters: tuple[int, ...]
    seed: int = 0
    p: float = 0.0
    count: int = 1

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise GraphError(f"unknown generator kind {self.kind!r}")
        if self.kind == "cycle":
            if len(self.parameters) != 1 or self.parameters[0] < 3:
                raise GraphError("cycle needs one parameter n >= 3")
        elif self.kind == "mycielskian-iterate":
            if len(self.parameters) != 1 or self.parameters[0] < 0:
                raise GraphError("mycielskian-iterate needs a depth >= 0")
        elif self.kind == "kneser":
            if len(self.parameters) != 2 or self.parameters[0] < 2 * self.parameters[1] or self.parameters[1] < 1:
                raise GraphError("kneser needs parameters n >= 2k >= 2")
        else:
            if len(self.parameters) != 1 or self.parameters[0] < 0:
                raise GraphError("random-triangle-free needs one parameter n >= 0")
            if not 0 <= self.p <= 1:
                raise GraphError("edge probability outside [0, 1]")
            if self.count < 1:
                raise GraphError("count must be positive")

    def graphs(self) -> Iterator[Graph]:
        if self.kind == "cycle":
            yield cycle_graph(self.parameters[0])
        elif self.kind == "mycielskian-iterate":
            yield from mycielski_iterates(self.parameters[0])
        elif self.kind == "kneser":
            yield kneser_graph(*self.parameters)
        else:
            for i in range(self.count):
                yield random_triangle_free(self.parameters[0], self.p, self.seed + i)
