"""Circles, arcs and the minimum-cost parsimonious scenario of a circle."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .colored_cost import Coloring, complete_coloring, scenario_cost, two_break_cost
from .graph import (
    ColoredMultigraph,
    CycleDecomposition,
    Edge,
    EdgeColor,
    connected_components,
)
from .scenario import KBreak, Scenario, apply_move, parsimonious_scenario

__all__ = [
    "AlternatingPath",
    "Arc",
    "Circle",
    "CircleError",
    "MisaResult",
    "is_independent",
    "is_noncrossing",
    "mcps_circle",
    "misa_path",
    "misa_to_decomposition",
    "split_at_vertex",
]

logger = logging.getLogger(__name__)

_SKIP = 0
_ARC = -1


class CircleError(RuntimeError):
    """Raised when a graph is not a circle or an arc set does not fit its circle."""


@dataclass(frozen=True, slots=True)
class Circle:
    """A connected graph whose vertices all have one black and one gray edge.

    ``edges[k]`` joins ``vertices[k]`` and ``vertices[k + 1]`` (cyclically) and
    ``edges[0]`` is black.
    """

    graph: ColoredMultigraph
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def from_graph(cls, graph: ColoredMultigraph) -> Circle:
        if not graph.black:
            msg = "Boş grafik bir çember değildir."
            raise CircleError(msg)
        for vertex in graph.vertices:
            black = graph.degree(vertex, EdgeColor.BLACK)
            gray = graph.degree(vertex, EdgeColor.GRAY)
            if black != 1 or gray != 1:
                msg = f"{vertex!r} köşesinin dereceleri ({black}, {gray}); (1, 1) olmalı."
                raise CircleError(msg)

        by_vertex: dict[tuple[str, EdgeColor], Edge] = {}
        for edge in graph.edges:
            for end in edge.ends:
                by_vertex[(end, edge.color)] = edge

        start = graph.black[0]
        vertices = [start.ends[0]]
        edges = [start]
        current = start.ends[1]
        color = EdgeColor.GRAY
        while current != vertices[0]:
            edge = by_vertex[(current, color)]
            vertices.append(current)
            edges.append(edge)
            current = edge.other(current)
            color = EdgeColor.BLACK if color is EdgeColor.GRAY else EdgeColor.GRAY

        if len(edges) != len(graph.edges):
            msg = "Grafik bağlantılı değil; tek bir çember bekleniyordu."
            raise CircleError(msg)
        return cls(graph=graph, vertices=tuple(vertices), edges=tuple(edges))

    @property
    def size(self) -> int:
        return self.graph.size

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(edge.label for edge in self.edges)


@dataclass(frozen=True, slots=True)
class AlternatingPath:
    """Vertex sequence v0..vl with alternating edge colors."""

    vertices: tuple[str, ...]
    colors: tuple[str, ...]
    labels: tuple[int, ...]
    first_color: EdgeColor = EdgeColor.BLACK

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.colors) or len(self.labels) != max(
            len(self.vertices) - 1, 0
        ):
            msg = "Yol köşe, renk ve kenar sayıları uyumsuz."
            raise CircleError(msg)

    @classmethod
    def from_colors(
        cls, colors: Sequence[str], first_color: EdgeColor = EdgeColor.BLACK
    ) -> AlternatingPath:
        """Path whose vertices are named by position, for tests and oracles."""

        return cls(
            vertices=tuple(f"p{index}" for index in range(len(colors))),
            colors=tuple(colors),
            labels=tuple(range(1, len(colors))),
            first_color=first_color,
        )

    @property
    def length(self) -> int:
        return len(self.labels)

    def edge_color(self, index: int) -> EdgeColor:
        if index % 2 == 0:
            return self.first_color
        return EdgeColor.GRAY if self.first_color is EdgeColor.BLACK else EdgeColor.BLACK


@dataclass(frozen=True, slots=True, order=True)
class Arc:
    """Path edges ``start`` .. ``end - 1`` between two same-colored vertices."""

    start: int
    end: int

    @property
    def edges(self) -> range:
        return range(self.start, self.end)

    def overlaps(self, other: Arc) -> bool:
        if self.end <= other.start or other.end <= self.start:
            return False
        if self.start < other.start and other.end < self.end:
            return False
        if other.start < self.start and self.end < other.end:
            return False
        return True


@dataclass(frozen=True, slots=True)
class MisaResult:
    size: int
    arcs: tuple[Arc, ...]


def is_independent(arcs: Iterable[Arc]) -> bool:
    return not any(first.overlaps(second) for first, second in combinations(list(arcs), 2))


def split_at_vertex(
    circle: Circle, vertex: str, col: Coloring | None = None
) -> AlternatingPath:
    """Cut ``circle`` at ``vertex``; the vertex appears at both ends of the path."""

    if vertex not in circle.vertices:
        msg = f"{vertex!r} köşesi çemberde yok."
        raise CircleError(msg)
    coloring = complete_coloring(circle.graph, col)
    shift = circle.vertices.index(vertex)
    vertices = circle.vertices[shift:] + circle.vertices[:shift] + (vertex,)
    edges = circle.edges[shift:] + circle.edges[:shift]
    return AlternatingPath(
        vertices=vertices,
        colors=tuple(coloring[v] for v in vertices),
        labels=tuple(edge.label for edge in edges),
        first_color=edges[0].color,
    )


def misa_path(path: AlternatingPath) -> MisaResult:
    """Maximum independent arc set of a path by interval dynamic programming.

    table[i, j] is the best size on v_i..v_j; a cell either ignores v_j, closes
    the arc (i, j) around the best inner set, or splits at a vertex k that
    starts an arc ending at j.
    """

    last = path.length
    if last < 2:
        return MisaResult(0, ())

    codes: dict[str, int] = {}
    color_code = [codes.setdefault(color, len(codes)) for color in path.colors]
    partners: list[np.ndarray] = []
    for j in range(last + 1):
        partners.append(
            np.array(
                [k for k in range(j % 2, j - 1, 2) if color_code[k] == color_code[j]],
                dtype=np.int64,
            )
        )

    table = np.zeros((last + 1, last + 1), dtype=np.int32)
    choice = np.zeros((last + 1, last + 1), dtype=np.int32)

    for i in range(last - 1, -1, -1):
        row = table[i]
        for j in range(i + 2, last + 1):
            best = int(row[j - 1])
            pick = _SKIP
            ks = partners[j]
            if ks.size:
                if (j - i) % 2 == 0 and color_code[i] == color_code[j]:
                    closed = int(table[i + 1, j - 1]) + 1
                    if closed > best:
                        best, pick = closed, _ARC
                lo = int(np.searchsorted(ks, i, side="right"))
                if lo < ks.size:
                    splits = ks[lo:]
                    sums = row[splits] + table[splits, j]
                    at = int(sums.argmax())
                    if int(sums[at]) > best:
                        best, pick = int(sums[at]), int(splits[at])
            row[j] = best
            choice[i, j] = pick

    arcs: list[Arc] = []
    pending = [(0, last)]
    while pending:
        i, j = pending.pop()
        if j - i < 2 or table[i, j] == 0:
            continue
        pick = int(choice[i, j])
        if pick == _SKIP:
            pending.append((i, j - 1))
        elif pick == _ARC:
            arcs.append(Arc(i, j))
            pending.append((i + 1, j - 1))
        else:
            pending.extend(((i, pick), (pick, j)))

    size = int(table[0, last])
    logger.debug("MISA: %d kenarlı yol, boyut %d", last, size)
    return MisaResult(size, tuple(sorted(arcs)))


def _extract_arc(
    verts: list[str], labs: list[int], arc: frozenset[int], color_of: dict[int, EdgeColor]
) -> tuple[list[str], list[int], Edge, Edge, int, int]:
    """Split the arc ``arc`` off the circle given by ``verts``/``labs``.

    Returns the new outer circle, the two added edges (inner first) and the
    labels of the removed edges.
    """

    size = len(labs)
    start = next(t for t in range(size) if labs[t] in arc and labs[t - 1] not in arc)
    black_end_first = color_of[labs[start]] is EdgeColor.BLACK
    window = start if black_end_first else (start - 1) % size

    verts = verts[window:] + verts[:window]
    labs = labs[window:] + labs[:window]
    reach = len(arc) + 1
    if black_end_first:
        black_end, neighbour = labs[0], labs[reach - 1]
    else:
        black_end, neighbour = labs[reach - 1], labs[0]
    offset = 0 if black_end_first else 1
    if set(labs[offset : offset + len(arc)]) != arc:
        msg = "Yay çember üzerinde bitişik değil."
        raise CircleError(msg)

    inner = Edge(black_end, (verts[1], verts[reach - 1]), EdgeColor.BLACK)
    outer = Edge(neighbour, (verts[0], verts[reach]), EdgeColor.BLACK)
    return (
        [verts[0], *verts[reach:]],
        [neighbour, *labs[reach:]],
        inner,
        outer,
        black_end,
        neighbour,
    )


def mcps_circle(circle: Circle, col: Coloring | None = None) -> tuple[int, Scenario]:
    """Minimum cost among parsimonious scenarios of a circle, with a scenario reaching it.

    Minimal arcs of a maximum independent set are split off one by one at
    cost 0; the remaining circles are sorted parsimoniously.
    """

    coloring = complete_coloring(circle.graph, col)
    path = split_at_vertex(circle, circle.vertices[0], coloring)
    misa = misa_path(path)

    color_of = {edge.label: edge.color for edge in circle.edges}
    pending = [frozenset(path.labels[arc.start : arc.end]) for arc in misa.arcs]
    verts, labs = list(circle.vertices), list(circle.labels)
    state = circle.graph
    moves: list[KBreak] = []

    while len(pending) > 1:
        arc = next(a for a in pending if not any(b < a for b in pending))
        verts, labs, inner, outer, black_end, neighbour = _extract_arc(verts, labs, arc, color_of)
        move = KBreak(removed=(state.edge(black_end), state.edge(neighbour)), added=(inner, outer))
        if two_break_cost(move, coloring):
            msg = "Yay ayırma hamlesinin maliyeti sıfır olmalı."
            raise CircleError(msg)
        state = apply_move(state, move, len(moves))
        moves.append(move)
        pending = [a - arc if arc < a else a for a in pending if a != arc]

    residual = CycleDecomposition(tuple(connected_components(state)))
    scenario = Scenario(tuple(moves)) + parsimonious_scenario(state, residual)

    cost = scenario_cost(scenario, coloring)
    if cost != circle.size - misa.size or len(scenario) != circle.size - 1:
        msg = f"Çember maliyeti tutarsız: {cost} != {circle.size} - {misa.size}"
        raise CircleError(msg)
    return cost, scenario


def misa_to_decomposition(circle: Circle, arcs: Iterable[Arc]) -> CycleDecomposition:
    """Cycle decomposition of the merged circle built from an independent arc set.

    Arcs index the path obtained by cutting ``circle`` at its first vertex.
    A maximal arc contributes the edges no other remaining arc covers.
    """

    labels = circle.labels
    pending = sorted(arcs)
    parts: list[frozenset[int]] = []
    while pending:
        outer = next(
            a
            for a in pending
            if not any(b != a and b.start <= a.start and a.end <= b.end for b in pending)
        )
        pending.remove(outer)
        covered = {t for other in pending for t in other.edges}
        parts.append(frozenset(labels[t] for t in outer.edges if t not in covered))

    if set().union(*parts) != set(labels):
        msg = "Yay kümesi çemberin tüm kenarlarını kapsamıyor."
        raise CircleError(msg)
    return CycleDecomposition(tuple(part for part in parts if part))


def is_noncrossing(decomposition: CycleDecomposition, circle: Circle) -> bool:
    """True iff no two parts interleave around the circle."""

    position = {label: index for index, label in enumerate(circle.labels)}
    if set().union(*decomposition.parts) != set(position):
        msg = "Ayrıştırma etiketleri çemberin etiketleriyle eşleşmiyor."
        raise CircleError(msg)

    owner = [0] * len(position)
    for part_index, part in enumerate(decomposition.parts):
        for label in part:
            owner[position[label]] = part_index

    for first, second in combinations(range(len(decomposition)), 2):
        sequence = [part for part in owner if part in (first, second)]
        changes = sum(1 for t in range(len(sequence)) if sequence[t] != sequence[t - 1])
        if changes >= 4:
            return False
    return True
