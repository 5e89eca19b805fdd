"""Circle instances whose cheapest scenario encodes a maximum cycle decomposition."""

from __future__ import annotations

import logging
from collections import Counter

import networkx as nx

from .circle import Circle
from .colored_cost import merged_graph
from .graph import ColoredMultigraph, pair

__all__ = ["ReductionError", "reduce_macd_to_circle", "verify_reduction"]

logger = logging.getLogger(__name__)


class ReductionError(RuntimeError):
    """Raised when a graph cannot be reduced or a reduced instance is inconsistent."""


def _ordered(graph: nx.Graph) -> nx.Graph:
    ordered = nx.Graph()
    ordered.add_nodes_from(sorted(graph.nodes, key=str))
    ordered.add_edges_from(sorted((tuple(sorted(edge, key=str)) for edge in graph.edges), key=str))
    return ordered


def reduce_macd_to_circle(graph: nx.Graph) -> tuple[Circle, dict[str, str]]:
    """Lay an Eulerian circuit of ``graph`` out as a circle colored by the circuit's vertices.

    Vertices v(2i-1) and v(2i) take the color of the i-th circuit vertex, so
    gray edges merge into loops and black edges merge onto the edges of
    ``graph``.
    """

    if graph.is_multigraph() or graph.is_directed() or nx.number_of_selfloops(graph):
        msg = "Girdi basit ve yönsüz bir grafik olmalı."
        raise ReductionError(msg)
    if graph.number_of_edges() == 0 or not nx.is_connected(graph):
        msg = "Girdi bağlantılı ve en az bir kenarlı olmalı."
        raise ReductionError(msg)
    if not nx.is_eulerian(graph):
        msg = "Girdinin tüm dereceleri çift olmalı."
        raise ReductionError(msg)

    ordered = _ordered(graph)
    source = min(ordered.nodes, key=str)
    walk = [str(u) for u, _ in nx.eulerian_circuit(ordered, source=source)]
    size = len(walk)

    names = [f"v{index}" for index in range(1, 2 * size + 1)]
    colors = {names[2 * i]: walk[i] for i in range(size)}
    colors.update({names[2 * i + 1]: walk[i] for i in range(size)})
    gray = [(names[2 * i], names[2 * i + 1]) for i in range(size)]
    black = [(names[2 * i + 1], names[(2 * i + 2) % (2 * size)]) for i in range(size)]

    circle = Circle.from_graph(ColoredMultigraph.from_pairs(black, gray, colors=colors))
    verify_reduction(graph, circle, colors)
    logger.debug("İndirgeme: %d kenarlı grafikten %d köşeli çember", size, 2 * size)
    return circle, colors


def verify_reduction(graph: nx.Graph, circle: Circle, colors: dict[str, str]) -> None:
    """Check that merging the circle by color gives back ``graph`` plus gray loops."""

    merged = merged_graph(circle.graph, colors).graph
    expected = Counter(pair(str(u), str(v)) for u, v in graph.edges)
    if Counter(edge.ends for edge in merged.black) != expected:
        msg = "Birleştirilmiş siyah kenarlar kaynak grafiğin kenarlarıyla eşleşmiyor."
        raise ReductionError(msg)
    if not all(edge.is_loop for edge in merged.gray):
        msg = "Birleştirilmiş gri kenarların hepsi döngü olmalı."
        raise ReductionError(msg)
