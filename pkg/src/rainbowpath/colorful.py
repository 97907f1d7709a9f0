"""Recursive construction of an induced path seeing many distinct colors.

From a start vertex v with color c, remove the whole color class of c; some
component of the remainder keeps a high chromatic number. Walk a shortest
path P from v to that component, let w be its penultimate vertex, delete
w's fan inside the component (an independent set, by triangle-freeness),
recurse from a fan vertex bridging into the strongest remaining component,
and splice: R = P_w followed by the recursive path. Each level contributes
the removed color, which the recursive path cannot contain, so R sees at
least ceil(chi_lb / 2) distinct colors while staying induced.

The recursion trusts the caller's chromatic lower bound and passes it down
decremented by two, exactly like the induction it implements; strict mode
additionally recomputes the exact chromatic number of every recursed
subgraph for trace auditing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chromatic import chromatic_number, dsatur_coloring
from .graphs import (
    ColoredGraph,
    GraphError,
    Path,
    _bits,
    classify_path,
    connected_components,
    induced_subgraph,
    is_triangle_free,
    shortest_path_to_set,
)


@dataclass(frozen=True)
class ColorfulStep:
    """One recursion level of the construction (vertex ids are original)."""

    level: int
    chi_lb: int
    start: int
    removed_color: int
    active_vertices: tuple[int, ...]
    after_removal: tuple[int, ...]
    chosen_component: tuple[int, ...]
    approach_path: tuple[int, ...]
    pivot: int
    pivot_fan: tuple[int, ...]
    pruned_vertices: tuple[int, ...]
    second_component: tuple[int, ...]
    bridge: int
    recursed_vertices: tuple[int, ...]
    sub_path: tuple[int, ...]
    assembled: tuple[int, ...]
    recomputed_chi: int | None


@dataclass(frozen=True)
class ColorfulResult:
    path: Path
    steps: tuple[ColorfulStep, ...]


def _subset_components(cg: ColoredGraph, subset: set[int]) -> list[tuple[int, ...]]:
    """Connected components of the induced subgraph, by ascending min id."""
    sub = induced_subgraph(cg.graph, subset)
    return [
        tuple(sub.to_parent[v] for v in comp)
        for comp in connected_components(sub.graph)
    ]


def _subset_chi(cg: ColoredGraph, subset: tuple[int, ...]) -> int:
    return chromatic_number(induced_subgraph(cg.graph, subset).graph).chi


def _shortest_in_subset(cg: ColoredGraph, subset: set[int], source: int,
                        targets: set[int]) -> tuple[int, ...]:
    sub = induced_subgraph(cg.graph, subset)
    path = shortest_path_to_set(
        sub.graph, sub.to_sub[source], {sub.to_sub[t] for t in targets}
    )
    return tuple(sub.to_parent[v] for v in path.vertices)


def colorful_path_from(cg: ColoredGraph, start: int, chi_lb: int,
                       strict: bool = False) -> ColorfulResult:
    """Induced path from `start` seeing at least ceil(chi_lb/2) colors.

    Requires a connected triangle-free graph and chi_lb no larger than the
    exact chromatic number (checked against a cheap upper bound; a genuinely
    overstated bound surfaces as a structural error during recursion).
    """
    g = cg.graph
    if not 0 <= start < g.n:
        raise GraphError(f"start vertex {start} not in graph")
    if chi_lb < 1:
        raise GraphError("chromatic lower bound must be positive")
    if not is_triangle_free(g):
        raise GraphError("construction requires a triangle-free graph")
    if len(connected_components(g)) != 1:
        raise GraphError("construction requires a connected graph")
    if chi_lb > dsatur_coloring(g).palette_size:
        raise GraphError(
            f"chromatic lower bound {chi_lb} exceeds a verifiable upper bound"
        )

    steps: list[ColorfulStep] = []
    path = _recurse(cg, frozenset(range(g.n)), start, chi_lb, 0, steps, strict)
    steps.sort(key=lambda st: st.level)
    result = Path(path)
    report = classify_path(cg, result.vertices)
    if not report.is_induced or report.color_count < -(-chi_lb // 2):
        raise GraphError("construction produced an invalid path; is chi_lb too large?")
    return ColorfulResult(path=result, steps=tuple(steps))


def _recurse(cg: ColoredGraph, active: frozenset[int], v: int, chi_lb: int,
             level: int, steps: list[ColorfulStep], strict: bool = False) -> tuple[int, ...]:
    if chi_lb <= 2:
        return (v,)
    g = cg.graph
    c = cg.color_of(v)
    remaining = {u for u in active if cg.color_of(u) != c}
    if not remaining:
        raise GraphError(f"no vertices left after removing color {c}; chi_lb overstated")

    components = _subset_components(cg, remaining)
    c1 = max(components, key=lambda comp: _subset_chi(cg, comp))
    c1_set = set(c1)

    p = _shortest_in_subset(cg, set(active), v, c1_set)
    w = p[-2]
    fan = tuple(sorted(u for u in _bits(g.masks[w]) if u in c1_set))
    for a in fan:
        for b in fan:
            if a < b and g.has_edge(a, b):
                raise GraphError("fan is not independent; graph has a triangle")

    pruned = tuple(sorted(c1_set - set(fan)))
    if not pruned:
        raise GraphError("component vanished after fan removal; chi_lb overstated")
    sub_components = _subset_components(cg, set(pruned))
    c2 = max(sub_components, key=lambda comp: _subset_chi(cg, comp))
    c2_set = set(c2)

    bridge = -1
    for u in fan:
        if g.masks[u] & _mask(c2_set):
            bridge = u
            break
    if bridge == -1:
        raise GraphError("no fan vertex reaches the second component")

    recursed = frozenset(c2_set | {bridge})
    q = _recurse(cg, recursed, bridge, chi_lb - 2, level + 1, steps, strict)
    if any(cg.color_of(u) == c for u in q):
        raise GraphError("recursive path reused the removed color")

    assembled = p[:-1] + q
    steps.append(
        ColorfulStep(
            level=level,
            chi_lb=chi_lb,
            start=v,
            removed_color=c,
            active_vertices=tuple(sorted(active)),
            after_removal=tuple(sorted(remaining)),
            chosen_component=c1,
            approach_path=p,
            pivot=w,
            pivot_fan=fan,
            pruned_vertices=pruned,
            second_component=c2,
            bridge=bridge,
            recursed_vertices=tuple(sorted(recursed)),
            sub_path=q,
            assembled=assembled,
            recomputed_chi=_subset_chi(cg, tuple(sorted(recursed))) if strict else None,
        ),
    )
    return assembled


def _mask(vertices: set[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
