"""Eulerian 2-edge-colored multigraphs, k-breaks and exact cycle decomposition."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from typing import NamedTuple

from ..utils.union_find import UnionFind

__all__ = [
    "DEFAULT_EXACT_CAP",
    "TELOMERE",
    "TELOMERE_COLOR",
    "ColoredMultigraph",
    "CycleDecomposition",
    "Edge",
    "EdgeColor",
    "GraphError",
    "InstanceCapError",
    "Pair",
    "Traversal",
    "alternating_circuits",
    "apply_k_break",
    "connected_components",
    "degree_balance",
    "ensure_within_cap",
    "enumerate_macds",
    "is_balanced",
    "is_terminal",
    "macd_exact",
    "pair",
]

logger = logging.getLogger(__name__)

TELOMERE = "o"
TELOMERE_COLOR = "o"
DEFAULT_EXACT_CAP = 10

Pair = tuple[str, str]


class GraphError(RuntimeError):
    """Raised when a graph or a k-break violates the multigraph model."""


class InstanceCapError(RuntimeError):
    """Raised when an exhaustive search is asked to run above its size cap."""

    def __init__(self, operation: str, size: int, cap: int) -> None:
        super().__init__(f"{operation}: e={size} sınırı aşıyor (sınır {cap}).")
        self.operation = operation
        self.size = size
        self.cap = cap


def ensure_within_cap(operation: str, size: int, cap: int) -> None:
    if size > cap:
        raise InstanceCapError(operation, size, cap)


class EdgeColor(StrEnum):
    BLACK = "black"
    GRAY = "gray"


def pair(u: str, v: str) -> Pair:
    """Return the unordered pair ``{u, v}`` in canonical order."""

    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, slots=True)
class Edge:
    """A labeled black or gray edge; endpoints are stored in canonical order."""

    label: int
    ends: Pair
    color: EdgeColor

    def __post_init__(self) -> None:
        object.__setattr__(self, "ends", pair(*self.ends))

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    def other(self, vertex: str) -> str:
        """Return the endpoint opposite to ``vertex``."""

        first, second = self.ends
        if vertex == first:
            return second
        if vertex == second:
            return first
        msg = f"{vertex!r} köşesi {self.label} etiketli kenarın ucu değil."
        raise GraphError(msg)


class Traversal(NamedTuple):
    """One edge of a closed walk, crossed from ``tail`` to ``head``."""

    edge: Edge
    tail: str
    head: str


@dataclass(frozen=True, slots=True, eq=False)
class ColoredMultigraph:
    """Eulerian multigraph with black and gray edges and an optional vertex coloring.

    Instances are immutable; equality compares the endpoint multisets of both
    edge colors and ignores labels.
    """

    vertices: tuple[str, ...]
    black: tuple[Edge, ...]
    gray: tuple[Edge, ...]
    colors: Mapping[str, str] = field(default_factory=dict)
    _index: dict[int, Edge] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        vertices = tuple(sorted(set(self.vertices)))
        black = tuple(sorted(self.black, key=lambda edge: edge.label))
        gray = tuple(sorted(self.gray, key=lambda edge: edge.label))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "black", black)
        object.__setattr__(self, "gray", gray)
        object.__setattr__(self, "colors", dict(self.colors))

        if len(black) != len(gray):
            msg = f"Siyah ({len(black)}) ve gri ({len(gray)}) kenar sayıları eşit değil."
            raise GraphError(msg)

        known = set(vertices)
        index: dict[int, Edge] = {}
        for edge, expected in [(e, EdgeColor.BLACK) for e in black] + [
            (e, EdgeColor.GRAY) for e in gray
        ]:
            if edge.color is not expected:
                msg = f"{edge.label} etiketli kenarın rengi {expected} olmalı."
                raise GraphError(msg)
            if edge.label in index:
                msg = f"{edge.label} etiketi birden fazla kenarda kullanılmış."
                raise GraphError(msg)
            for end in edge.ends:
                if end not in known:
                    msg = f"{edge.label} etiketli kenarın ucu {end!r} tanımlı değil."
                    raise GraphError(msg)
            index[edge.label] = edge
        object.__setattr__(self, "_index", index)

        unknown = set(self.colors) - known
        if unknown:
            msg = f"Renklendirmede grafikte olmayan köşeler var: {sorted(unknown)}"
            raise GraphError(msg)

        balance = _degree_counter(black)
        balance.subtract(_degree_counter(gray))
        unbalanced = sorted(vertex for vertex, value in balance.items() if value)
        if unbalanced:
            msg = f"Grafik Euler değil; dengesiz köşeler: {unbalanced}"
            raise GraphError(msg)

    @classmethod
    def from_pairs(
        cls,
        black: Iterable[Pair],
        gray: Iterable[Pair],
        *,
        colors: Mapping[str, str] | None = None,
        vertices: Iterable[str] = (),
    ) -> ColoredMultigraph:
        """Build a graph labeling black edges 1..e and gray edges e+1..2e."""

        black_pairs = list(black)
        gray_pairs = list(gray)
        size = len(black_pairs)
        black_edges = tuple(
            Edge(label, (u, v), EdgeColor.BLACK)
            for label, (u, v) in enumerate(black_pairs, start=1)
        )
        gray_edges = tuple(
            Edge(label, (u, v), EdgeColor.GRAY)
            for label, (u, v) in enumerate(gray_pairs, start=size + 1)
        )
        all_vertices = set(vertices)
        for u, v in black_pairs + gray_pairs:
            all_vertices.update((u, v))
        return cls(
            vertices=tuple(all_vertices),
            black=black_edges,
            gray=gray_edges,
            colors=dict(colors or {}),
        )

    @property
    def size(self) -> int:
        """Number of black edges, e(G)."""

        return len(self.black)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.black + self.gray

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(self._index)

    def edge(self, label: int) -> Edge:
        try:
            return self._index[label]
        except KeyError:
            msg = f"{label} etiketli kenar bulunamadı."
            raise GraphError(msg) from None

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._vertex_set()

    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def degree(self, vertex: str, color: EdgeColor) -> int:
        """Degree of ``vertex`` in one color; a loop counts twice."""

        if not self.has_vertex(vertex):
            msg = f"{vertex!r} köşesi grafikte yok."
            raise GraphError(msg)
        edges = self.black if color is EdgeColor.BLACK else self.gray
        return sum(edge.ends.count(vertex) for edge in edges)

    def incident(self, vertex: str, color: EdgeColor) -> list[Edge]:
        edges = self.black if color is EdgeColor.BLACK else self.gray
        return [edge for edge in edges if vertex in edge.ends]

    def black_signature(self) -> tuple[Pair, ...]:
        return tuple(sorted(edge.ends for edge in self.black))

    def gray_signature(self) -> tuple[Pair, ...]:
        return tuple(sorted(edge.ends for edge in self.gray))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredMultigraph):
            return NotImplemented
        return (
            self.black_signature() == other.black_signature()
            and self.gray_signature() == other.gray_signature()
        )

    def __hash__(self) -> int:
        return hash((self.black_signature(), self.gray_signature()))

    def replace_black(self, black: Iterable[Edge]) -> ColoredMultigraph:
        return ColoredMultigraph(
            vertices=self.vertices, black=tuple(black), gray=self.gray, colors=self.colors
        )

    def with_colors(self, colors: Mapping[str, str]) -> ColoredMultigraph:
        return ColoredMultigraph(
            vertices=self.vertices, black=self.black, gray=self.gray, colors=colors
        )

    def restrict(self, labels: Iterable[int]) -> ColoredMultigraph:
        """Subgraph spanned by the given edge labels, labels kept."""

        chosen = [self.edge(label) for label in sorted(set(labels))]
        touched = {end for edge in chosen for end in edge.ends}
        return ColoredMultigraph(
            vertices=tuple(touched),
            black=tuple(edge for edge in chosen if edge.color is EdgeColor.BLACK),
            gray=tuple(edge for edge in chosen if edge.color is EdgeColor.GRAY),
            colors={v: c for v, c in self.colors.items() if v in touched},
        )


def _degree_counter(edges: Iterable[Edge]) -> Counter[str]:
    counter: Counter[str] = Counter()
    for edge in edges:
        counter.update(edge.ends)
    return counter


@dataclass(frozen=True, slots=True)
class CycleDecomposition:
    """A partition of edge labels into alternating Eulerian parts."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        parts = tuple(frozenset(part) for part in self.parts)
        if any(not part for part in parts):
            msg = "Ayrıştırmada boş parça olamaz."
            raise GraphError(msg)
        object.__setattr__(self, "parts", tuple(sorted(parts, key=min)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.parts)

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(part)) for part in self.parts)

    def check(self, graph: ColoredMultigraph) -> None:
        """Raise :class:`GraphError` unless this is a valid decomposition of ``graph``."""

        seen: set[int] = set()
        for part in self.parts:
            if seen & part:
                msg = f"Parçalar ayrık değil: {sorted(seen & part)}"
                raise GraphError(msg)
            seen |= part
            if not is_balanced(graph, part):
                msg = f"Parça Euler değil: {sorted(part)}"
                raise GraphError(msg)
        if seen != graph.labels:
            msg = "Ayrıştırma tüm kenarları kapsamıyor."
            raise GraphError(msg)


def degree_balance(graph: ColoredMultigraph, vertex: str) -> int:
    """Return d^b - d^g at ``vertex``; loops count twice."""

    return graph.degree(vertex, EdgeColor.BLACK) - graph.degree(vertex, EdgeColor.GRAY)


def is_terminal(graph: ColoredMultigraph) -> bool:
    """True iff black and gray endpoint multisets coincide."""

    return graph.black_signature() == graph.gray_signature()


def is_balanced(graph: ColoredMultigraph, labels: Iterable[int]) -> bool:
    """True iff the edges with ``labels`` have d^b = d^g at every vertex."""

    balance: Counter[str] = Counter()
    for label in labels:
        edge = graph.edge(label)
        step = 1 if edge.color is EdgeColor.BLACK else -1
        for end in edge.ends:
            balance[end] += step
    return not any(balance.values())


def apply_k_break(
    graph: ColoredMultigraph,
    removed: Sequence[int],
    added: Sequence[Pair],
    labels: Sequence[int] | None = None,
) -> ColoredMultigraph:
    """Replace the black edges ``removed`` by ``added`` and return the new graph.

    Added edges take ``labels`` (a permutation of ``removed``) or, by default,
    the removed labels in the given order.
    """

    if not removed or len(removed) != len(added):
        msg = "k-break için silinen ve eklenen kenar sayıları eşit ve pozitif olmalı."
        raise GraphError(msg)
    if len(set(removed)) != len(removed):
        msg = f"Aynı kenar iki kez silinemez: {list(removed)}"
        raise GraphError(msg)

    old_edges = [graph.edge(label) for label in removed]
    if any(edge.color is not EdgeColor.BLACK for edge in old_edges):
        msg = "k-break yalnızca siyah kenarları değiştirebilir."
        raise GraphError(msg)

    before = Counter(end for edge in old_edges for end in edge.ends)
    after = Counter(end for ends in added for end in ends)
    if before != after:
        msg = f"Uç çoklukları korunmuyor: {dict(before)} != {dict(after)}"
        raise GraphError(msg)

    new_labels = list(removed) if labels is None else list(labels)
    if sorted(new_labels) != sorted(removed):
        msg = "Yeni etiketler silinen etiketlerin bir permütasyonu olmalı."
        raise GraphError(msg)

    dropped = set(removed)
    black = [edge for edge in graph.black if edge.label not in dropped]
    black.extend(
        Edge(label, ends, EdgeColor.BLACK) for label, ends in zip(new_labels, added)
    )
    return graph.replace_black(black)


def alternating_circuits(
    graph: ColoredMultigraph, labels: Iterable[int] | None = None
) -> list[tuple[Traversal, ...]]:
    """Split a balanced edge set into closed alternating walks.

    At each vertex the black edge-ends are paired with the gray edge-ends in
    label order; following the pairing yields walks that start with a black
    edge and end with a gray edge back at the start vertex. A simple cycle
    always yields exactly one walk.
    """

    chosen = sorted(graph.labels if labels is None else set(labels))
    ends_at: dict[str, dict[EdgeColor, list[tuple[int, int]]]] = defaultdict(
        lambda: {EdgeColor.BLACK: [], EdgeColor.GRAY: []}
    )
    for label in chosen:
        edge = graph.edge(label)
        for side, vertex in enumerate(edge.ends):
            ends_at[vertex][edge.color].append((label, side))

    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for vertex, by_color in ends_at.items():
        black_ends, gray_ends = by_color[EdgeColor.BLACK], by_color[EdgeColor.GRAY]
        if len(black_ends) != len(gray_ends):
            msg = f"{vertex!r} köşesinde kenar kümesi dengeli değil."
            raise GraphError(msg)
        for black_end, gray_end in zip(sorted(black_ends), sorted(gray_ends)):
            partner[black_end] = gray_end
            partner[gray_end] = black_end

    circuits: list[tuple[Traversal, ...]] = []
    visited: set[int] = set()
    for label in chosen:
        if label in visited or graph.edge(label).color is not EdgeColor.BLACK:
            continue
        start = (label, 0)
        current = start
        walk: list[Traversal] = []
        while True:
            edge_label, side = current
            edge = graph.edge(edge_label)
            walk.append(Traversal(edge, edge.ends[side], edge.ends[1 - side]))
            visited.add(edge_label)
            following = partner[(edge_label, 1 - side)]
            if following == start:
                break
            current = following
        circuits.append(tuple(walk))
    return circuits


def connected_components(graph: ColoredMultigraph) -> list[frozenset[int]]:
    """Edge-label sets of the connected components, ordered by smallest label."""

    forest: UnionFind[str] = UnionFind(graph.vertices)
    for edge in graph.edges:
        forest.unite(*edge.ends)

    components: dict[str, set[int]] = defaultdict(set)
    for edge in graph.edges:
        components[forest.find(edge.ends[0])].add(edge.label)
    return sorted((frozenset(labels) for labels in components.values()), key=min)


class _DecompositionSearch:
    """Exhaustive search over partitions into closed alternating walks."""

    def __init__(self, graph: ColoredMultigraph) -> None:
        self.graph = graph
        self.incident: dict[tuple[str, EdgeColor], list[Edge]] = defaultdict(list)
        for edge in graph.edges:
            for vertex in set(edge.ends):
                self.incident[(vertex, edge.color)].append(edge)
        self.best: dict[frozenset[int], tuple[frozenset[int], ...]] = {}

    def closed_walks(self, start: int, remaining: frozenset[int]) -> list[frozenset[int]]:
        """Edge sets of closed alternating walks that open with black edge ``start``.

        A walk stops the first time it returns to its origin through a gray
        edge, so every minimal balanced set containing ``start`` is produced.
        """

        origin, first_stop = self.graph.edge(start).ends
        found: set[frozenset[int]] = set()
        used = [start]
        used_set = {start}

        def extend(vertex: str, color: EdgeColor) -> None:
            for edge in self.incident[(vertex, color)]:
                if edge.label in used_set or edge.label not in remaining:
                    continue
                following = edge.other(vertex)
                used.append(edge.label)
                used_set.add(edge.label)
                if color is EdgeColor.GRAY and following == origin:
                    found.add(frozenset(used))
                else:
                    next_color = EdgeColor.BLACK if color is EdgeColor.GRAY else EdgeColor.GRAY
                    extend(following, next_color)
                used.pop()
                used_set.discard(edge.label)

        extend(first_stop, EdgeColor.GRAY)
        return sorted(found, key=lambda labels: (len(labels), sorted(labels)))

    def _black_count(self, labels: frozenset[int]) -> int:
        return sum(1 for label in labels if self.graph.edge(label).color is EdgeColor.BLACK)

    def _first_black(self, labels: frozenset[int]) -> int:
        return min(
            label for label in labels if self.graph.edge(label).color is EdgeColor.BLACK
        )

    def maximum(self, remaining: frozenset[int]) -> tuple[frozenset[int], ...]:
        if not remaining:
            return ()
        cached = self.best.get(remaining)
        if cached is not None:
            return cached

        bound = self._black_count(remaining)
        best: tuple[frozenset[int], ...] = ()
        for walk in self.closed_walks(self._first_black(remaining), remaining):
            rest = remaining - walk
            if 1 + self._black_count(rest) <= len(best):
                continue
            candidate = (walk, *self.maximum(rest))
            if len(candidate) > len(best):
                best = candidate
                if len(best) == bound:
                    break

        if not best:
            msg = "Kenar kümesi alternatif döngülere ayrılamıyor."
            raise GraphError(msg)
        self.best[remaining] = best
        return best

    def all_maximum(self, remaining: frozenset[int]) -> Iterator[tuple[frozenset[int], ...]]:
        if not remaining:
            yield ()
            return
        target = len(self.maximum(remaining))
        for walk in self.closed_walks(self._first_black(remaining), remaining):
            rest = remaining - walk
            if 1 + len(self.maximum(rest)) != target:
                continue
            for tail in self.all_maximum(rest):
                yield (walk, *tail)


def _peel_parallel_pairs(graph: ColoredMultigraph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Match black edges with parallel gray edges, lowest labels first."""

    grays: dict[Pair, list[int]] = defaultdict(list)
    for edge in graph.gray:
        grays[edge.ends].append(edge.label)

    pairs: list[frozenset[int]] = []
    for edge in graph.black:
        twins = grays.get(edge.ends)
        if twins:
            pairs.append(frozenset((edge.label, twins.pop(0))))
    matched = frozenset(label for part in pairs for label in part)
    return pairs, graph.labels - matched


def macd_exact(
    graph: ColoredMultigraph, cap: int = DEFAULT_EXACT_CAP
) -> tuple[int, CycleDecomposition]:
    """Maximum alternating cycle decomposition by exhaustive search.

    Parallel black/gray pairs are split off first: any maximum decomposition
    can be rearranged to contain them as length-1 cycles.
    """

    ensure_within_cap("macd_exact", graph.size, cap)
    pairs, rest = _peel_parallel_pairs(graph)
    search = _DecompositionSearch(graph)
    parts = [*pairs, *search.maximum(rest)]
    decomposition = CycleDecomposition(tuple(parts))
    logger.debug("MACD: e=%d c=%d", graph.size, len(decomposition))
    return len(decomposition), decomposition


def enumerate_macds(
    graph: ColoredMultigraph, cap: int = DEFAULT_EXACT_CAP
) -> list[CycleDecomposition]:
    """Every maximum alternating cycle decomposition, in lexicographic order."""

    ensure_within_cap("enumerate_macds", graph.size, cap)
    search = _DecompositionSearch(graph)
    found = {
        CycleDecomposition(parts).sort_key(): CycleDecomposition(parts)
        for parts in search.all_maximum(graph.labels)
    }
    logger.debug("MACD sayısı: %d (e=%d)", len(found), graph.size)
    return [found[key] for key in sorted(found)]
