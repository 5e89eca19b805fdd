"""k-break moves, scenario replay, scenario cycle decompositions and parsimonious sorting."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from ..utils.union_find import UnionFind
from .graph import (
    ColoredMultigraph,
    CycleDecomposition,
    Edge,
    EdgeColor,
    GraphError,
    Pair,
    Traversal,
    alternating_circuits,
    apply_k_break,
    is_terminal,
)

__all__ = [
    "KBreak",
    "Scenario",
    "ScenarioDecomposition",
    "ScenarioError",
    "ScenarioReport",
    "apply_move",
    "parsimonious_scenario",
    "replay",
    "scenario_cycle_decomposition",
    "sort_walk",
    "validate_scenario",
]

logger = logging.getLogger(__name__)

ScenarioDecomposition = CycleDecomposition


class ScenarioError(RuntimeError):
    """Raised when a scenario cannot be replayed on its graph."""

    def __init__(self, message: str, index: int | None = None) -> None:
        prefix = f"{index}. hamle: " if index is not None else ""
        super().__init__(f"{prefix}{message}")
        self.index = index


@dataclass(frozen=True, slots=True)
class KBreak:
    """Replacement of k black edges by k black edges on the same endpoints."""

    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]

    def __post_init__(self) -> None:
        removed, added = tuple(self.removed), tuple(self.added)
        object.__setattr__(self, "removed", removed)
        object.__setattr__(self, "added", added)
        if len(removed) < 2 or len(removed) != len(added):
            msg = "k-break en az iki kenar silip aynı sayıda kenar eklemeli."
            raise GraphError(msg)
        if any(edge.color is not EdgeColor.BLACK for edge in removed + added):
            msg = "k-break yalnızca siyah kenarlardan oluşur."
            raise GraphError(msg)
        if sorted(edge.label for edge in removed) != sorted(edge.label for edge in added):
            msg = "Eklenen etiketler silinen etiketlerin permütasyonu olmalı."
            raise GraphError(msg)
        if Counter(end for e in removed for end in e.ends) != Counter(
            end for e in added for end in e.ends
        ):
            msg = "k-break uç çokluklarını korumalı."
            raise GraphError(msg)

    @classmethod
    def two_break(
        cls,
        first: Edge,
        second: Edge,
        new_first: Pair,
        new_second: Pair,
        labels: tuple[int, int] | None = None,
    ) -> KBreak:
        """Replace ``first`` and ``second``; new edges take ``labels`` (default: in order)."""

        label_first, label_second = labels or (first.label, second.label)
        return cls(
            removed=(first, second),
            added=(
                Edge(label_first, new_first, EdgeColor.BLACK),
                Edge(label_second, new_second, EdgeColor.BLACK),
            ),
        )

    @property
    def k(self) -> int:
        return len(self.removed)

    @property
    def removed_labels(self) -> tuple[int, ...]:
        return tuple(edge.label for edge in self.removed)


@dataclass(frozen=True, slots=True)
class Scenario:
    """Ordered sequence of k-breaks."""

    moves: tuple[KBreak, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[KBreak]:
        return iter(self.moves)

    def __add__(self, other: Scenario) -> Scenario:
        return Scenario(self.moves + other.moves)

    @classmethod
    def concatenate(cls, parts: Iterable[Scenario]) -> Scenario:
        return cls(tuple(move for part in parts for move in part.moves))


@dataclass(slots=True)
class ScenarioReport:
    """Outcome of replaying a scenario."""

    length: int
    final_terminal: bool
    intermediate_eulerian: bool
    cost: int | None = None


def apply_move(
    state: ColoredMultigraph, move: KBreak, index: int | None = None
) -> ColoredMultigraph:
    """Apply ``move`` after checking its removed edges match ``state``."""

    for edge in move.removed:
        try:
            current = state.edge(edge.label)
        except GraphError as exc:
            raise ScenarioError(str(exc), index) from exc
        if current.color is not EdgeColor.BLACK or current.ends != edge.ends:
            msg = f"{edge.label} etiketli siyah kenar {edge.ends} değil, {current.ends}."
            raise ScenarioError(msg, index)
    try:
        return apply_k_break(
            state,
            move.removed_labels,
            [edge.ends for edge in move.added],
            [edge.label for edge in move.added],
        )
    except GraphError as exc:
        raise ScenarioError(str(exc), index) from exc


def replay(graph: ColoredMultigraph, scenario: Scenario) -> list[ColoredMultigraph]:
    """Return the graph before every move and after the last one."""

    states = [graph]
    for index, move in enumerate(scenario):
        states.append(apply_move(states[-1], move, index))
    return states


def _black_degrees(graph: ColoredMultigraph) -> Counter[str]:
    return Counter(end for edge in graph.black for end in edge.ends)


def validate_scenario(
    graph: ColoredMultigraph,
    scenario: Scenario,
    cost: Callable[[KBreak], int] | None = None,
) -> ScenarioReport:
    """Replay ``scenario`` and report its length, terminality and optional cost."""

    states = replay(graph, scenario)
    degrees = _black_degrees(graph)
    report = ScenarioReport(
        length=len(scenario),
        final_terminal=is_terminal(states[-1]),
        intermediate_eulerian=all(_black_degrees(state) == degrees for state in states),
    )
    if cost is not None:
        report.cost = sum(cost(move) for move in scenario)
    return report


def scenario_cycle_decomposition(
    graph: ColoredMultigraph, scenario: Scenario
) -> ScenarioDecomposition:
    """The cycle decomposition induced by a complete scenario.

    Black labels removed by the same move are merged; each black label is then
    matched with a gray label on the same endpoints in the final graph, pairing
    labels in sorted order within each endpoint pair.
    """

    final = replay(graph, scenario)[-1]
    if not is_terminal(final):
        msg = "Senaryo tamamlanmamış: son grafik terminal değil."
        raise ScenarioError(msg, len(scenario))

    forest: UnionFind[int] = UnionFind(edge.label for edge in graph.black)
    for move in scenario:
        first, *others = move.removed_labels
        for label in others:
            forest.unite(first, label)

    gray_by_ends: dict[Pair, list[int]] = defaultdict(list)
    for edge in final.gray:
        gray_by_ends[edge.ends].append(edge.label)
    black_by_ends: dict[Pair, list[int]] = defaultdict(list)
    for edge in final.black:
        black_by_ends[edge.ends].append(edge.label)

    twin: dict[int, int] = {}
    for ends, blacks in black_by_ends.items():
        twin.update(zip(sorted(blacks), sorted(gray_by_ends[ends])))

    parts = [
        frozenset(group) | frozenset(twin[label] for label in group)
        for group in forest.groups()
    ]
    return CycleDecomposition(tuple(parts))


def sort_walk(walk: Sequence[Traversal]) -> list[KBreak]:
    """Sort one closed alternating walk into length-1 cycles.

    The walk's first vertex is kept as an anchor. Each move joins the anchor to
    the far end of the next black edge and lays the current black edge onto
    the gray edge between them, which detaches a length-1 cycle.
    """

    if len(walk) % 2 or walk[0].edge.color is not EdgeColor.BLACK:
        msg = "Alternatif yürüyüş siyah kenarla başlamalı ve çift uzunlukta olmalı."
        raise GraphError(msg)

    anchor = walk[0].tail
    current = walk[0].edge
    far_end = walk[0].head
    moves: list[KBreak] = []
    for position in range(2, len(walk), 2):
        gray_step, black_step = walk[position - 1], walk[position]
        detached = Edge(current.label, (far_end, gray_step.head), EdgeColor.BLACK)
        continuing = Edge(black_step.edge.label, (anchor, black_step.head), EdgeColor.BLACK)
        moves.append(KBreak(removed=(current, black_step.edge), added=(detached, continuing)))
        current, far_end = continuing, black_step.head
    return moves


def parsimonious_scenario(
    graph: ColoredMultigraph, decomposition: CycleDecomposition
) -> Scenario:
    """Build a 2-break scenario sorting every part of ``decomposition`` separately.

    Each part costs its number of black edges minus one; a part that splits
    into several alternating walks costs one less per extra walk.
    """

    try:
        decomposition.check(graph)
    except GraphError as exc:
        raise ScenarioError(f"Geçersiz ayrıştırma: {exc}") from exc

    moves: list[KBreak] = []
    for part in decomposition:
        for walk in alternating_circuits(graph, part):
            moves.extend(sort_walk(walk))
    logger.debug(
        "Tutumlu senaryo: e=%d parça=%d uzunluk=%d", graph.size, len(decomposition), len(moves)
    )
    return Scenario(tuple(moves))
