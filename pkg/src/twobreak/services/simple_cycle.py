"""Simple cycles: their Eulerian circles and minimum-cost parsimonious scenarios."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from .circle import Circle, CircleError, mcps_circle
from .colored_cost import Coloring, complete_coloring
from .graph import ColoredMultigraph, Edge, EdgeColor, connected_components
from .scenario import KBreak, Scenario

__all__ = [
    "CircleLift",
    "SimpleCycleError",
    "degree_two_vertices",
    "eulerian_circles",
    "mcps_simple_cycle",
]

logger = logging.getLogger(__name__)


class SimpleCycleError(RuntimeError):
    """Raised when a graph is not a simple cycle."""


@dataclass(frozen=True, slots=True)
class CircleLift:
    """A circle together with the map sending each of its vertices to the cycle's vertex."""

    circle: Circle
    vertex_map: Mapping[str, str]

    def merged(self) -> ColoredMultigraph:
        """Merge mapped vertices back; yields the original simple cycle."""

        def image(edge: Edge) -> Edge:
            u, v = edge.ends
            return Edge(edge.label, (self.vertex_map[u], self.vertex_map[v]), edge.color)

        graph = self.circle.graph
        return ColoredMultigraph(
            vertices=tuple(set(self.vertex_map.values())),
            black=tuple(image(edge) for edge in graph.black),
            gray=tuple(image(edge) for edge in graph.gray),
        )


def degree_two_vertices(graph: ColoredMultigraph) -> list[str]:
    """Vertices with two black and two gray edge ends, d(S) of a simple cycle."""

    return [v for v in graph.vertices if graph.degree(v, EdgeColor.BLACK) == 2]


def _check_shape(graph: ColoredMultigraph) -> None:
    for vertex in graph.vertices:
        degree = graph.degree(vertex, EdgeColor.BLACK)
        if degree not in (1, 2):
            msg = f"{vertex!r} köşesinin siyah derecesi {degree}; 1 ya da 2 olmalı."
            raise SimpleCycleError(msg)
    if len(connected_components(graph)) != 1:
        msg = "Basit döngü bağlantılı olmalı."
        raise SimpleCycleError(msg)


def _fresh(vertex: str, suffix: int, taken: set[str]) -> str:
    name = f"{vertex}#{suffix}"
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def _split(
    graph: ColoredMultigraph, vertex: str, taken: set[str]
) -> list[tuple[ColoredMultigraph, str, str]]:
    """Every way of splitting ``vertex`` into two degree-(1, 1) copies."""

    first, second = _fresh(vertex, 1, taken), _fresh(vertex, 2, taken)

    def rewire(edges: list[Edge], targets: tuple[str, str]) -> list[Edge]:
        if len(edges) == 1:
            return [Edge(edges[0].label, (first, second), edges[0].color)]
        return [
            Edge(edge.label, (target, edge.other(vertex)), edge.color)
            for edge, target in zip(edges, targets)
        ]

    blacks = graph.incident(vertex, EdgeColor.BLACK)
    grays = graph.incident(vertex, EdgeColor.GRAY)
    new_black = rewire(blacks, (first, second))
    pairings = [(first, second)] if len(grays) == 1 else [(first, second), (second, first)]

    untouched_black = [e for e in graph.black if vertex not in e.ends]
    untouched_gray = [e for e in graph.gray if vertex not in e.ends]
    vertices = [v for v in graph.vertices if v != vertex] + [first, second]
    return [
        (
            ColoredMultigraph(
                vertices=tuple(vertices),
                black=tuple(untouched_black + new_black),
                gray=tuple(untouched_gray + rewire(grays, targets)),
            ),
            first,
            second,
        )
        for targets in pairings
    ]


def eulerian_circles(graph: ColoredMultigraph) -> list[CircleLift]:
    """All circles obtained by splitting every degree-2 vertex of a simple cycle.

    A loop at a split vertex forces the split; otherwise both gray pairings are
    kept. At most 2^d(S) circles result.
    """

    _check_shape(graph)
    taken = set(graph.vertices)
    pending: list[tuple[ColoredMultigraph, dict[str, str]]] = [
        (graph, {v: v for v in graph.vertices})
    ]
    lifts: list[CircleLift] = []
    while pending:
        current, vertex_map = pending.pop()
        doubled = degree_two_vertices(current)
        if not doubled:
            try:
                circle = Circle.from_graph(current)
            except CircleError as exc:
                msg = f"Grafik basit döngü değil: {exc}"
                raise SimpleCycleError(msg) from exc
            lifts.append(CircleLift(circle=circle, vertex_map=vertex_map))
            continue
        vertex = doubled[0]
        for lifted, first, second in reversed(_split(current, vertex, taken)):
            image = vertex_map[vertex]
            extended = {v: t for v, t in vertex_map.items() if v != vertex}
            extended[first] = image
            extended[second] = image
            pending.append((lifted, extended))

    logger.debug("Basit döngü: d(S)=%d, %d çember", len(degree_two_vertices(graph)), len(lifts))
    return lifts


def _translate(scenario: Scenario, vertex_map: Mapping[str, str]) -> Scenario:
    def image(edge: Edge) -> Edge:
        u, v = edge.ends
        return Edge(edge.label, (vertex_map[u], vertex_map[v]), edge.color)

    return Scenario(
        tuple(
            KBreak(
                removed=tuple(image(edge) for edge in move.removed),
                added=tuple(image(edge) for edge in move.added),
            )
            for move in scenario
        )
    )


def mcps_simple_cycle(
    graph: ColoredMultigraph, col: Coloring | None = None
) -> tuple[int, Scenario]:
    """Cheapest circle lift; its scenario is mapped back onto ``graph``."""

    coloring = complete_coloring(graph, col)
    best: tuple[int, Scenario, CircleLift] | None = None
    for lift in eulerian_circles(graph):
        pulled_back = {v: coloring[image] for v, image in lift.vertex_map.items()}
        cost, scenario = mcps_circle(lift.circle, pulled_back)
        if best is None or cost < best[0]:
            best = (cost, scenario, lift)

    if best is None:
        msg = "Basit döngünün hiç Euler çemberi yok."
        raise SimpleCycleError(msg)
    cost, scenario, lift = best
    return cost, _translate(scenario, lift.vertex_map)
