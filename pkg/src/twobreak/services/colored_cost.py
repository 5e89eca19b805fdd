"""Colored 2-break cost, color-merged graphs and minimum-cost scenarios."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Mapping
from dataclasses import dataclass

from ..utils.union_find import UnionFind
from .graph import (
    DEFAULT_EXACT_CAP,
    TELOMERE,
    TELOMERE_COLOR,
    ColoredMultigraph,
    CycleDecomposition,
    Edge,
    Pair,
    is_terminal,
    macd_exact,
    pair,
)
from .scenario import (
    KBreak,
    Scenario,
    ScenarioDecomposition,
    ScenarioError,
    apply_move,
    parsimonious_scenario,
    replay,
)

__all__ = [
    "Coloring",
    "ColoringError",
    "MergedGraph",
    "ZeroCostError",
    "complete_coloring",
    "merged_graph",
    "min_cost_scenario",
    "project_scenario_to_merged",
    "scenario_cost",
    "two_break_cost",
    "zero_cost_sort",
]

logger = logging.getLogger(__name__)

Coloring = Mapping[str, str]


class ColoringError(RuntimeError):
    """Raised when a coloring leaves a vertex of the graph uncolored."""


class ZeroCostError(RuntimeError):
    """Raised when zero-cost sorting is asked for a graph whose merged graph is not terminal."""


def complete_coloring(graph: ColoredMultigraph, col: Coloring | None = None) -> dict[str, str]:
    """Return a coloring total on ``graph``.

    Uses ``col`` (or the graph's own colors); the telomere vertex defaults to
    the reserved color, every other missing vertex is an error.
    """

    source = graph.colors if col is None else col
    result: dict[str, str] = {}
    missing: list[str] = []
    for vertex in graph.vertices:
        if vertex in source:
            if source[vertex] == TELOMERE_COLOR and vertex != TELOMERE:
                msg = f"'{TELOMERE_COLOR}' rengi telomere ayrılmıştır: {vertex!r}"
                raise ColoringError(msg)
            result[vertex] = source[vertex]
        elif vertex == TELOMERE:
            result[vertex] = TELOMERE_COLOR
        else:
            missing.append(vertex)
    if missing:
        msg = f"Renk atanmamış köşeler: {missing}"
        raise ColoringError(msg)
    return result


def _colored(ends: Pair, col: Coloring) -> Pair:
    return pair(col[ends[0]], col[ends[1]])


def two_break_cost(move: KBreak, col: Coloring) -> int:
    """0 if the move keeps the multiset of colored endpoint pairs, 1 otherwise."""

    before = Counter(_colored(edge.ends, col) for edge in move.removed)
    after = Counter(_colored(edge.ends, col) for edge in move.added)
    return 0 if before == after else 1


def scenario_cost(scenario: Scenario, col: Coloring) -> int:
    return sum(two_break_cost(move, col) for move in scenario)


@dataclass(frozen=True, slots=True)
class MergedGraph:
    """Quotient of ``source`` by vertex color; edge labels are shared with the source."""

    graph: ColoredMultigraph
    source: ColoredMultigraph
    coloring: Mapping[str, str]


def merged_graph(graph: ColoredMultigraph, col: Coloring | None = None) -> MergedGraph:
    """Merge vertices of equal color, keeping every edge and its label."""

    coloring = complete_coloring(graph, col)

    def image(edge: Edge) -> Edge:
        return Edge(edge.label, _colored(edge.ends, coloring), edge.color)

    merged = ColoredMultigraph(
        vertices=tuple(set(coloring.values())),
        black=tuple(image(edge) for edge in graph.black),
        gray=tuple(image(edge) for edge in graph.gray),
        colors={color: color for color in coloring.values()},
    )
    return MergedGraph(graph=merged, source=graph, coloring=coloring)


def _orient(
    first: Pair, second: Pair, added: tuple[Pair, Pair]
) -> tuple[str, str, str, str, bool] | None:
    """Find a, b, c, d with first=(a,b), second=(c,d) and added={(a,c),(b,d)}.

    The flag tells whether ``added[0]`` is the (a,c) edge.
    """

    for a, b in (first, first[::-1]):
        for c, d in (second, second[::-1]):
            if pair(a, c) == added[0] and pair(b, d) == added[1]:
                return a, b, c, d, True
            if pair(a, c) == added[1] and pair(b, d) == added[0]:
                return a, b, c, d, False
    return None


def project_scenario_to_merged(
    graph: ColoredMultigraph, col: Coloring | None, scenario: Scenario
) -> tuple[Scenario, ScenarioDecomposition]:
    """Project a complete 2-break scenario onto the color-merged graph.

    Labels are reassigned so that the source and merged graphs keep
    conforming labelings: a zero-cost move swaps the two labels onto the
    edges that keep their colored endpoints, a cost-1 move is replayed on
    the merged graph and joins its two labels into one part.
    """

    coloring = complete_coloring(graph, col)
    final = replay(graph, scenario)[-1]
    if not is_terminal(final):
        msg = "Senaryo tamamlanmamış: son grafik terminal değil."
        raise ScenarioError(msg, len(scenario))

    ours = {edge.label: edge.label for edge in graph.black}
    our_ends = {edge.label: edge.ends for edge in graph.black}
    merged = merged_graph(graph, coloring).graph
    forest: UnionFind[int] = UnionFind(ours)
    projected: list[KBreak] = []

    for index, move in enumerate(scenario):
        if move.k != 2:
            raise ScenarioError("Yalnızca 2-break senaryoları izdüşürülebilir.", index)
        first, second = move.removed
        i, j = ours[first.label], ours[second.label]
        added = (move.added[0].ends, move.added[1].ends)
        oriented = _orient(first.ends, second.ends, added)

        if oriented is None:
            # the move puts both edges back where they were
            slots = [(first.ends, i), (second.ends, j)]
            for edge in move.added:
                slot = next(item for item in slots if item[0] == edge.ends)
                slots.remove(slot)
                ours[edge.label] = slot[1]
            continue

        a, b, c, d, first_is_ac = oriented
        if two_break_cost(move, coloring) == 0:
            if coloring[a] != coloring[d]:
                a, b, c, d = b, a, d, c
                first_is_ac = not first_is_ac
            label_ac, label_bd = j, i
        else:
            label_ac, label_bd = i, j
            forest.unite(i, j)
            merged_move = KBreak.two_break(
                merged.edge(i),
                merged.edge(j),
                pair(coloring[a], coloring[c]),
                pair(coloring[b], coloring[d]),
            )
            merged = apply_move(merged, merged_move, index)
            projected.append(merged_move)

        ac_edge, bd_edge = (move.added[0], move.added[1]) if first_is_ac else move.added[::-1]
        ours[ac_edge.label], ours[bd_edge.label] = label_ac, label_bd
        our_ends[label_ac], our_ends[label_bd] = pair(a, c), pair(b, d)

    gray_by_ends: dict[Pair, list[int]] = defaultdict(list)
    for edge in graph.gray:
        gray_by_ends[edge.ends].append(edge.label)
    twin: dict[int, int] = {}
    for label in sorted(our_ends):
        twin[label] = gray_by_ends[our_ends[label]].pop(0)

    parts = [
        frozenset(group) | frozenset(twin[label] for label in group)
        for group in forest.groups()
    ]
    return Scenario(tuple(projected)), CycleDecomposition(tuple(parts))


def _unmatched(state: ColoredMultigraph) -> tuple[list[Edge], list[Edge]]:
    """Black and gray edges left after pairing parallel edges, lowest labels first."""

    grays: dict[Pair, list[Edge]] = defaultdict(list)
    for edge in state.gray:
        grays[edge.ends].append(edge)

    black_rest: list[Edge] = []
    for edge in state.black:
        if grays[edge.ends]:
            grays[edge.ends].pop(0)
        else:
            black_rest.append(edge)
    gray_rest = sorted(
        (edge for edges in grays.values() for edge in edges), key=lambda edge: edge.label
    )
    return black_rest, gray_rest


def _zero_cost_step(state: ColoredMultigraph, col: Coloring) -> list[KBreak]:
    """One or two cost-0 moves that create a new length-1 cycle."""

    black_rest, gray_rest = _unmatched(state)
    lowest = black_rest[0]
    u, v = lowest.ends
    wanted = (col[u], col[v])

    for gray in gray_rest:
        x, y = gray.ends
        if (col[x], col[y]) == wanted:
            u_twin, v_twin = x, y
            break
        if (col[y], col[x]) == wanted:
            u_twin, v_twin = y, x
            break
    else:
        msg = f"{lowest.ends} için renkleri eşleşen gri kenar yok."
        raise ZeroCostError(msg)

    at_u = [edge for edge in black_rest if u_twin in edge.ends]
    at_v = [edge for edge in black_rest if v_twin in edge.ends]
    x_edge = lowest if lowest in at_u else at_u[0]
    y_options = [edge for edge in at_v if edge.label != x_edge.label]
    y_edge = lowest if lowest in y_options and x_edge != lowest else y_options[0]
    p = x_edge.other(u_twin)
    r = y_edge.other(v_twin)

    if lowest in (x_edge, y_edge):
        return [KBreak.two_break(x_edge, y_edge, (u_twin, v_twin), (p, r))]

    first = KBreak.two_break(lowest, x_edge, (v, u_twin), (u, p))
    second = KBreak.two_break(first.added[0], y_edge, (u_twin, v_twin), (v, r))
    return [first, second]


def zero_cost_sort(graph: ColoredMultigraph, col: Coloring | None = None) -> Scenario:
    """Sort ``graph`` with cost-0 moves only; requires a terminal merged graph."""

    coloring = complete_coloring(graph, col)
    if not is_terminal(merged_graph(graph, coloring).graph):
        msg = "Renk birleştirilmiş grafik terminal değil; sıfır maliyetli senaryo yok."
        raise ZeroCostError(msg)

    state = graph
    moves: list[KBreak] = []
    for _ in range(2 * graph.size + 1):
        if is_terminal(state):
            logger.debug("Sıfır maliyetli sıralama: %d hamle", len(moves))
            return Scenario(tuple(moves))
        for move in _zero_cost_step(state, coloring):
            if two_break_cost(move, coloring):
                msg = "Sıfır maliyetli adım maliyetli çıktı."
                raise ZeroCostError(msg)
            state = apply_move(state, move, len(moves))
            moves.append(move)

    msg = "Sıfır maliyetli sıralama sonlanmadı."
    raise ZeroCostError(msg)


def _lift_move(state: ColoredMultigraph, merged_move: KBreak, col: Coloring) -> KBreak:
    """A move on ``state`` whose image in the merged graph is ``merged_move``."""

    i, j = merged_move.removed_labels
    first, second = state.edge(i), state.edge(j)
    a, b = first.ends
    c, d = second.ends
    wanted = {edge.label: edge.ends for edge in merged_move.added}

    for new_first, new_second in (((a, c), (b, d)), ((a, d), (b, c)), ((a, b), (c, d))):
        for label_first, label_second in ((i, j), (j, i)):
            if (
                _colored(new_first, col) == wanted[label_first]
                and _colored(new_second, col) == wanted[label_second]
            ):
                return KBreak.two_break(
                    first, second, new_first, new_second, (label_first, label_second)
                )

    msg = "Birleştirilmiş grafikteki hamle kaynak grafiğe taşınamadı."
    raise ScenarioError(msg)


def min_cost_scenario(
    graph: ColoredMultigraph, col: Coloring | None = None, cap: int = DEFAULT_EXACT_CAP
) -> tuple[int, Scenario]:
    """Minimum-cost scenario: lift a parsimonious merged-graph scenario, then sort at cost 0."""

    coloring = complete_coloring(graph, col)
    merged = merged_graph(graph, coloring).graph
    cycles, decomposition = macd_exact(merged, cap)

    state = graph
    lifted: list[KBreak] = []
    for move in parsimonious_scenario(merged, decomposition):
        move_on_graph = _lift_move(state, move, coloring)
        state = apply_move(state, move_on_graph, len(lifted))
        lifted.append(move_on_graph)

    scenario = Scenario(tuple(lifted)) + zero_cost_sort(state, coloring)
    cost = scenario_cost(scenario, coloring)
    expected = merged.size - cycles
    if cost != expected:
        msg = f"Minimum maliyet tutarsız: {cost} != e(J)-c(J) = {expected}"
        raise ScenarioError(msg)
    logger.debug("Minimum maliyet %d, senaryo uzunluğu %d", cost, len(scenario))
    return cost, scenario
