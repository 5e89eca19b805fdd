"""Exhaustive reference searches for small instances.

Nothing here is meant to be fast; every search refuses instances above its cap
instead of truncating.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterator
from functools import lru_cache

import networkx as nx
import numpy as np

from ..utils.union_find import UnionFind
from .circle import AlternatingPath, Circle, is_noncrossing, split_at_vertex
from .colored_cost import Coloring, complete_coloring, merged_graph
from .graph import (
    ColoredMultigraph,
    CycleDecomposition,
    EdgeColor,
    Pair,
    ensure_within_cap,
    pair,
)
from .scenario import KBreak, Scenario, apply_move

__all__ = [
    "DEFAULT_MACD_ORACLE_CAP",
    "DEFAULT_MISA_ORACLE_CAP",
    "DEFAULT_ORACLE_CAP",
    "brute_macd",
    "brute_mcps",
    "brute_min_cost",
    "brute_min_length",
    "brute_misa",
    "brute_misa_circle",
    "brute_noncrossing_decomposition",
    "max_cycle_decomposition",
    "parsimonious_scenarios",
]

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 5
DEFAULT_MACD_ORACLE_CAP = 8
DEFAULT_MISA_ORACLE_CAP = 12

State = tuple[Pair, ...]

_UNREACHABLE = -(1 << 30)


def _state(pairs: list[Pair] | tuple[Pair, ...]) -> State:
    return tuple(sorted(pairs))


def _moves(state: State) -> Iterator[tuple[State, tuple[Pair, Pair], tuple[Pair, Pair]]]:
    """Every 2-break on a black edge multiset, as (next state, removed, added)."""

    seen: set[State] = set()
    for i in range(len(state)):
        for j in range(i + 1, len(state)):
            (a, b), (c, d) = state[i], state[j]
            rest = state[:i] + state[i + 1 : j] + state[j + 1 :]
            for added in ((pair(a, c), pair(b, d)), (pair(a, d), pair(b, c))):
                if sorted(added) == sorted((state[i], state[j])):
                    continue
                following = _state(rest + added)
                if following in seen:
                    continue
                seen.add(following)
                yield following, (state[i], state[j]), added


def _distances_to(target: State, depth: int) -> dict[State, int]:
    """BFS distances from ``target``; a 2-break can always be undone, so distances are symmetric."""

    distances = {target: 0}
    frontier = deque([target])
    while frontier:
        state = frontier.popleft()
        if distances[state] == depth:
            continue
        for following, _, _ in _moves(state):
            if following not in distances:
                distances[following] = distances[state] + 1
                frontier.append(following)
    return distances


def brute_min_length(graph: ColoredMultigraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Breadth-first 2-break distance to the terminal graph."""

    ensure_within_cap("brute_min_length", graph.size, cap)
    start = _state(graph.black_signature())
    target = _state(graph.gray_signature())
    distances = {start: 0}
    frontier = deque([start])
    while frontier:
        state = frontier.popleft()
        if state == target:
            return distances[state]
        for following, _, _ in _moves(state):
            if following not in distances:
                distances[following] = distances[state] + 1
                frontier.append(following)
    msg = "Terminal grafiğe ulaşılamadı."
    raise RuntimeError(msg)


def _move_cost(removed: tuple[Pair, Pair], added: tuple[Pair, Pair], col: Coloring) -> int:
    def colored(pairs: tuple[Pair, Pair]) -> list[Pair]:
        return sorted(pair(col[u], col[v]) for u, v in pairs)

    return 0 if colored(removed) == colored(added) else 1


def brute_min_cost(
    graph: ColoredMultigraph, col: Coloring | None = None, cap: int = DEFAULT_ORACLE_CAP
) -> int:
    """0-1 breadth-first search for the cheapest scenario of any length."""

    ensure_within_cap("brute_min_cost", graph.size, cap)
    coloring = complete_coloring(graph, col)
    start = _state(graph.black_signature())
    target = _state(graph.gray_signature())
    best = {start: 0}
    frontier = deque([start])
    while frontier:
        state = frontier.popleft()
        if state == target:
            return best[state]
        for following, removed, added in _moves(state):
            cost = best[state] + _move_cost(removed, added, coloring)
            if cost < best.get(following, cost + 1):
                best[following] = cost
                if cost == best[state]:
                    frontier.appendleft(following)
                else:
                    frontier.append(following)
    msg = "Terminal grafiğe ulaşılamadı."
    raise RuntimeError(msg)


def brute_mcps(
    graph: ColoredMultigraph, col: Coloring | None = None, cap: int = DEFAULT_ORACLE_CAP
) -> int:
    """Cheapest scenario among those of minimum length, by exhaustive depth-first search."""

    ensure_within_cap("brute_mcps", graph.size, cap)
    coloring = complete_coloring(graph, col)
    start = _state(graph.black_signature())
    length = brute_min_length(graph, cap)
    distances = _distances_to(_state(graph.gray_signature()), length)

    @lru_cache(maxsize=None)
    def cheapest(state: State) -> int:
        remaining = distances[state]
        if remaining == 0:
            return 0
        return min(
            _move_cost(removed, added, coloring) + cheapest(following)
            for following, removed, added in _moves(state)
            if distances.get(following) == remaining - 1
        )

    return cheapest(start)


def parsimonious_scenarios(
    graph: ColoredMultigraph, cap: int = DEFAULT_ORACLE_CAP
) -> Iterator[Scenario]:
    """Every shortest scenario; added edges keep the removed labels in order."""

    ensure_within_cap("parsimonious_scenarios", graph.size, cap)
    length = brute_min_length(graph, cap)
    distances = _distances_to(_state(graph.gray_signature()), length)

    def extend(state: ColoredMultigraph, moves: tuple[KBreak, ...]) -> Iterator[Scenario]:
        remaining = length - len(moves)
        if remaining == 0:
            yield Scenario(moves)
            return
        black = state.black
        for i in range(len(black)):
            for j in range(i + 1, len(black)):
                (a, b), (c, d) = black[i].ends, black[j].ends
                options = {
                    tuple(sorted(added)): added
                    for added in ((pair(a, c), pair(b, d)), (pair(a, d), pair(b, c)))
                    if sorted(added) != sorted((black[i].ends, black[j].ends))
                }
                for added in options.values():
                    move = KBreak.two_break(black[i], black[j], added[0], added[1])
                    following = apply_move(state, move)
                    if distances.get(_state(following.black_signature())) == remaining - 1:
                        yield from extend(following, (*moves, move))

    yield from extend(graph, ())


def _arc_edges(start: int, end: int) -> frozenset[int]:
    return frozenset(range(start, end))


def _independent(first: tuple[int, int], second: tuple[int, int]) -> bool:
    small, large = sorted((_arc_edges(*first), _arc_edges(*second)), key=len)
    if not small & large:
        return True
    if small <= large:
        return first[0] != second[0] and first[1] != second[1]
    return False


def brute_misa(path: AlternatingPath, cap: int = DEFAULT_MISA_ORACLE_CAP) -> int:
    """Largest pairwise independent set among all arcs of ``path``."""

    ensure_within_cap("brute_misa", path.length, cap)
    arcs = [
        (i, j)
        for i in range(len(path.vertices))
        for j in range(i + 2, len(path.vertices), 2)
        if path.colors[i] == path.colors[j]
    ]
    best = 0

    def choose(index: int, chosen: list[tuple[int, int]]) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(arcs) - index <= best:
            return
        for position in range(index, len(arcs)):
            arc = arcs[position]
            if all(_independent(arc, other) for other in chosen):
                chosen.append(arc)
                choose(position + 1, chosen)
                chosen.pop()

    choose(0, [])
    return best


def brute_misa_circle(
    circle: Circle, col: Coloring | None = None, cap: int = DEFAULT_MISA_ORACLE_CAP
) -> int:
    """Largest independent arc set over every way of cutting the circle into a path."""

    return max(
        brute_misa(split_at_vertex(circle, vertex, col), cap) for vertex in circle.vertices
    )


def _balanced_masks(graph: ColoredMultigraph) -> tuple[list[int], list[int]]:
    """Edge labels in bit order and every nonempty balanced subset as a bitmask."""

    labels = sorted(graph.labels)
    vertices = {vertex: index for index, vertex in enumerate(graph.vertices)}
    effect = np.zeros((len(labels), len(vertices)), dtype=np.int64)
    for bit, label in enumerate(labels):
        edge = graph.edge(label)
        step = 1 if edge.color is EdgeColor.BLACK else -1
        for end in edge.ends:
            effect[bit, vertices[end]] += step

    masks = np.arange(1, 1 << len(labels), dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(labels), dtype=np.int64)) & 1
    balanced = ~(bits @ effect).any(axis=1)
    return labels, [int(mask) for mask in masks[balanced]]


def _partitions(graph: ColoredMultigraph, connected_only: bool) -> Iterator[list[int]]:
    labels, masks = _balanced_masks(graph)
    if connected_only:
        masks = [mask for mask in masks if _is_connected(graph, labels, mask)]
    full = (1 << len(labels)) - 1

    def extend(remaining: int, parts: list[int]) -> Iterator[list[int]]:
        if not remaining:
            yield list(parts)
            return
        lowest = remaining & -remaining
        for mask in masks:
            if mask & lowest and mask & remaining == mask:
                parts.append(mask)
                yield from extend(remaining ^ mask, parts)
                parts.pop()

    yield from extend(full, [])


def _is_connected(graph: ColoredMultigraph, labels: list[int], mask: int) -> bool:
    chosen = [graph.edge(label) for bit, label in enumerate(labels) if mask >> bit & 1]
    forest: UnionFind[str] = UnionFind(end for edge in chosen for end in edge.ends)
    for edge in chosen:
        forest.unite(*edge.ends)
    return len(forest.groups()) == 1


def brute_macd(graph: ColoredMultigraph, cap: int = DEFAULT_MACD_ORACLE_CAP) -> int:
    """Most parts in any partition of the edges into balanced subsets."""

    ensure_within_cap("brute_macd", graph.size, cap)
    if not graph.size:
        return 0
    labels, masks = _balanced_masks(graph)
    by_lowest: dict[int, list[int]] = {}
    for mask in masks:
        by_lowest.setdefault(mask & -mask, []).append(mask)

    @lru_cache(maxsize=None)
    def most(remaining: int) -> int:
        if not remaining:
            return 0
        lowest = remaining & -remaining
        return max(
            (
                1 + most(remaining ^ mask)
                for mask in by_lowest.get(lowest, [])
                if mask & remaining == mask
            ),
            default=_UNREACHABLE,
        )

    return most((1 << len(labels)) - 1)


def brute_noncrossing_decomposition(
    circle: Circle, col: Coloring | None = None, cap: int = DEFAULT_ORACLE_CAP
) -> int:
    """Largest cycle decomposition of the merged circle that crosses nowhere on the circle."""

    ensure_within_cap("brute_noncrossing_decomposition", circle.size, cap)
    merged = merged_graph(circle.graph, col).graph
    labels = sorted(merged.labels)
    best = 0
    for parts in _partitions(merged, connected_only=True):
        if len(parts) <= best:
            continue
        decomposition = CycleDecomposition(
            tuple(
                frozenset(label for bit, label in enumerate(labels) if mask >> bit & 1)
                for mask in parts
            )
        )
        if is_noncrossing(decomposition, circle):
            best = len(parts)
    return best


def max_cycle_decomposition(graph: nx.Graph) -> int:
    """Most cycles an edge-disjoint cover of a simple undirected graph can have."""

    edges = sorted(tuple(sorted(map(str, edge))) for edge in graph.edges)
    index = {edge: bit for bit, edge in enumerate(edges)}
    cycles: list[int] = []
    for cycle in nx.simple_cycles(graph):
        mask = 0
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            mask |= 1 << index[tuple(sorted((str(u), str(v))))]
        cycles.append(mask)

    @lru_cache(maxsize=None)
    def most(remaining: int) -> int:
        if not remaining:
            return 0
        lowest = remaining & -remaining
        return max(
            (
                1 + most(remaining ^ mask)
                for mask in cycles
                if mask & lowest and mask & remaining == mask
            ),
            default=_UNREACHABLE,
        )

    result = most((1 << len(edges)) - 1)
    if result < 0:
        msg = "Grafiğin kenarları döngülere ayrılamıyor."
        raise RuntimeError(msg)
    return result
