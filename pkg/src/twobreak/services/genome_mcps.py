"""Minimum-cost parsimonious DCJ scenarios between two genomes.

The breakpoint graph splits into circles, which are solved directly, and
telomere-to-telomere segments. Segments whose end edges are both black (AA)
must each be closed by one whose end edges are both gray (BB); the cheapest
pairing is a minimum-cost perfect matching.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from ..utils.assignment import Assignment, min_cost_perfect_matching
from ..utils.chunk import spread
from .circle import Circle, mcps_circle
from .colored_cost import Coloring, complete_coloring, scenario_cost
from .genome import (
    DcjMove,
    Genome,
    apply_dcj,
    breakpoint_graph,
    dcj_cost,
    lift_scenario_to_dcj,
)
from .graph import (
    TELOMERE,
    TELOMERE_COLOR,
    ColoredMultigraph,
    CycleDecomposition,
    Edge,
    EdgeColor,
    connected_components,
)
from .scenario import Scenario
from .simple_cycle import mcps_simple_cycle

__all__ = [
    "BreakpointStructureError",
    "GenomeSolution",
    "PathPool",
    "PathSegment",
    "SegmentKind",
    "decompose_breakpoint",
    "maximum_decomposition",
    "mcps_genomes",
    "pair_weight",
    "weight_matrix",
]

logger = logging.getLogger(__name__)

ColorKey = tuple[str, ...]


class BreakpointStructureError(RuntimeError):
    """Raised when a graph lacks the structure of a breakpoint graph."""


class SegmentKind(StrEnum):
    AA = "AA"
    BB = "BB"


@dataclass(frozen=True, slots=True)
class PathSegment:
    """Alternating path from the telomere back to the telomere."""

    kind: SegmentKind
    vertices: tuple[str, ...]
    labels: tuple[int, ...]

    def color_key(self, col: Coloring) -> ColorKey:
        return tuple(col[vertex] for vertex in self.vertices)


@dataclass(slots=True)
class PathPool:
    circles: list[Circle] = field(default_factory=list)
    closed_segments: int = 0
    aa_paths: list[PathSegment] = field(default_factory=list)
    bb_paths: list[PathSegment] = field(default_factory=list)


@dataclass(slots=True)
class GenomeSolution:
    """Cost, the 2-break scenario on the breakpoint graph and its DCJ form."""

    cost: int
    scenario: Scenario
    dcj: list[DcjMove]
    graph: ColoredMultigraph
    pool: PathPool
    matching: Assignment

    @property
    def cycles(self) -> int:
        return len(self.pool.circles) + len(self.pool.aa_paths)

    def summary(self) -> dict[str, int]:
        return {
            "edges": self.graph.size,
            "cycles": self.cycles,
            "circles": len(self.pool.circles),
            "closed_segments": self.pool.closed_segments,
            "aa_paths": len(self.pool.aa_paths),
            "bb_paths": len(self.pool.bb_paths),
            "matching_cost": self.matching.total,
        }


def _segment(
    graph: ColoredMultigraph, start: Edge, by_vertex: dict[tuple[str, EdgeColor], Edge]
) -> tuple[tuple[str, ...], list[Edge]]:
    vertices = [TELOMERE]
    edges = [start]
    current = start.other(TELOMERE)
    while current != TELOMERE:
        vertices.append(current)
        color = EdgeColor.GRAY if edges[-1].color is EdgeColor.BLACK else EdgeColor.BLACK
        step = by_vertex.get((current, color))
        if step is None:
            msg = f"{current!r} köşesinde alternatif yol kesiliyor."
            raise BreakpointStructureError(msg)
        edges.append(step)
        current = step.other(current)
    vertices.append(TELOMERE)
    return tuple(vertices), edges


def decompose_breakpoint(graph: ColoredMultigraph) -> PathPool:
    """Split a breakpoint graph into circles and AA/BB telomere segments."""

    by_vertex: dict[tuple[str, EdgeColor], Edge] = {}
    for vertex in graph.vertices:
        if vertex == TELOMERE:
            continue
        black = graph.degree(vertex, EdgeColor.BLACK)
        gray = graph.degree(vertex, EdgeColor.GRAY)
        if black != 1 or gray != 1:
            msg = f"{vertex!r} köşesinin dereceleri ({black}, {gray}); (1, 1) bekleniyordu."
            raise BreakpointStructureError(msg)
    for edge in graph.edges:
        for end in edge.ends:
            if end != TELOMERE:
                by_vertex[(end, edge.color)] = edge

    pool = PathPool()
    for component in connected_components(graph):
        sub = graph.restrict(component)
        if not sub.has_vertex(TELOMERE):
            pool.circles.append(Circle.from_graph(sub))

    visited: set[int] = set()
    for edge in graph.edges:
        if TELOMERE not in edge.ends or edge.label in visited:
            continue
        if edge.is_loop:
            vertices: tuple[str, ...] = (TELOMERE, TELOMERE)
            edges = [edge]
        else:
            vertices, edges = _segment(graph, edge, by_vertex)
        visited.update(e.label for e in edges)
        labels = tuple(e.label for e in edges)
        first, last = edges[0].color, edges[-1].color
        if first is not last:
            pool.circles.append(Circle.from_graph(graph.restrict(labels)))
            pool.closed_segments += 1
        elif first is EdgeColor.BLACK:
            pool.aa_paths.append(PathSegment(SegmentKind.AA, vertices, labels))
        else:
            pool.bb_paths.append(PathSegment(SegmentKind.BB, vertices, labels))

    if len(pool.aa_paths) != len(pool.bb_paths):
        msg = f"AA ({len(pool.aa_paths)}) ve BB ({len(pool.bb_paths)}) yol sayıları eşit değil."
        raise BreakpointStructureError(msg)
    logger.debug(
        "Kırılma noktası grafiği: %d çember (%d kapalı parça), %d AA/BB çifti",
        len(pool.circles),
        pool.closed_segments,
        len(pool.aa_paths),
    )
    return pool


def maximum_decomposition(pool: PathPool) -> CycleDecomposition:
    """Circles plus AA/BB segments paired in order; every pairing gives a maximum decomposition."""

    parts = [frozenset(circle.labels) for circle in pool.circles]
    parts.extend(
        frozenset(aa.labels + bb.labels) for aa, bb in zip(pool.aa_paths, pool.bb_paths)
    )
    return CycleDecomposition(tuple(parts))


def _union_of_keys(black_key: ColorKey, gray_key: ColorKey) -> ColoredMultigraph:
    """Simple cycle made of an AA path and a BB path with the given vertex colors."""

    colors = {TELOMERE: TELOMERE_COLOR}
    black: list[tuple[str, str]] = []
    gray: list[tuple[str, str]] = []
    for prefix, key, leading in (("a", black_key, black), ("b", gray_key, gray)):
        trailing = gray if leading is black else black
        names = [TELOMERE] + [f"{prefix}{i}" for i in range(1, len(key) - 1)] + [TELOMERE]
        for name, color in zip(names[1:-1], key[1:-1]):
            colors[name] = color
        for step in range(len(names) - 1):
            target = leading if step % 2 == 0 else trailing
            target.append((names[step], names[step + 1]))
    return ColoredMultigraph.from_pairs(black, gray, colors=colors)


def _weight_of_keys(keys: tuple[ColorKey, ColorKey]) -> int:
    graph = _union_of_keys(*keys)
    cost, _ = mcps_simple_cycle(graph)
    return cost


def _weights_batch(batch: list[tuple[ColorKey, ColorKey]]) -> list[int]:
    return [_weight_of_keys(keys) for keys in batch]


def pair_weight(first: PathSegment, second: PathSegment, col: Coloring) -> int:
    """MCPS cost of the simple cycle formed by an AA and a BB segment."""

    if first.kind is not SegmentKind.AA or second.kind is not SegmentKind.BB:
        msg = "Ağırlık bir AA ve bir BB yolu için hesaplanır."
        raise BreakpointStructureError(msg)
    return _weight_of_keys((first.color_key(col), second.color_key(col)))


def weight_matrix(
    aa_paths: Sequence[PathSegment],
    bb_paths: Sequence[PathSegment],
    col: Coloring,
    jobs: int = 1,
) -> np.ndarray:
    """Pair weights; segments with equal color sequences share one evaluation."""

    aa_keys = [segment.color_key(col) for segment in aa_paths]
    bb_keys = [segment.color_key(col) for segment in bb_paths]
    wanted = sorted({(a, b) for a in set(aa_keys) for b in set(bb_keys)})

    if jobs > 1 and len(wanted) > jobs:
        batches = spread(wanted, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            values = [value for batch in executor.map(_weights_batch, batches) for value in batch]
    else:
        values = _weights_batch(wanted)
    known = dict(zip(wanted, values))

    matrix = np.zeros((len(aa_keys), len(bb_keys)), dtype=np.int64)
    for row, a in enumerate(aa_keys):
        for column, b in enumerate(bb_keys):
            matrix[row, column] = known[(a, b)]
    logger.debug("Ağırlık tablosu %dx%d, %d farklı değer", *matrix.shape, len(wanted))
    return matrix


def mcps_genomes(
    first: Genome, second: Genome, col: Coloring, jobs: int = 1
) -> GenomeSolution:
    """Minimum-cost parsimonious DCJ scenario transforming ``first`` into ``second``."""

    if first.unoriented or second.unoriented:
        msg = "Yönsüz genler bu yolda desteklenmiyor; genel grafik komutunu kullanın."
        raise BreakpointStructureError(msg)

    graph = breakpoint_graph(first, second, col)
    coloring = complete_coloring(graph, col)
    pool = decompose_breakpoint(graph)

    cost = 0
    parts: list[Scenario] = []
    for circle in pool.circles:
        circle_cost, circle_scenario = mcps_circle(circle, coloring)
        cost += circle_cost
        parts.append(circle_scenario)

    weights = weight_matrix(pool.aa_paths, pool.bb_paths, coloring, jobs)
    matching = min_cost_perfect_matching(weights)
    for row, column in matching.pairs:
        labels = pool.aa_paths[row].labels + pool.bb_paths[column].labels
        pair_cost, pair_scenario = mcps_simple_cycle(graph.restrict(labels), coloring)
        if pair_cost != weights[row, column]:
            msg = f"Çift maliyeti tablodan farklı: {pair_cost} != {weights[row, column]}"
            raise BreakpointStructureError(msg)
        cost += pair_cost
        parts.append(pair_scenario)

    scenario = Scenario.concatenate(parts)
    cycles = len(pool.circles) + len(pool.aa_paths)
    if len(scenario) != graph.size - cycles or scenario_cost(scenario, coloring) != cost:
        msg = "Birleştirilen senaryo tutumlu değil ya da maliyeti tutmuyor."
        raise BreakpointStructureError(msg)

    dcj = lift_scenario_to_dcj(first, second, scenario)
    state, lifted_cost = first, 0
    for move in dcj:
        lifted_cost += dcj_cost(move, state, coloring)
        state = apply_dcj(state, move)
    if lifted_cost != cost:
        msg = f"DCJ maliyeti ({lifted_cost}) 2-break maliyetinden ({cost}) farklı."
        raise BreakpointStructureError(msg)

    logger.info(
        "Genom MCPS: n=%d e=%d c=%d maliyet=%d", first.gene_count, graph.size, cycles, cost
    )
    return GenomeSolution(
        cost=cost, scenario=scenario, dcj=dcj, graph=graph, pool=pool, matching=matching
    )
