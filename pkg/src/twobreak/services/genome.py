"""Genomes as adjacency sets, DCJ operations and breakpoint graphs."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .colored_cost import Coloring
from .graph import TELOMERE, TELOMERE_COLOR, ColoredMultigraph, Edge, Pair, pair
from .scenario import KBreak, Scenario, replay

__all__ = [
    "Adjacency",
    "DcjError",
    "DcjMove",
    "Genome",
    "GenomeError",
    "apply_dcj",
    "breakpoint_graph",
    "dcj_cost",
    "dcj_from_two_break",
    "format_genome",
    "induced_two_break",
    "lift_scenario_to_dcj",
    "parse_genome",
]

logger = logging.getLogger(__name__)

Adjacency = tuple[str, ...]

_Occurrence = tuple[int, int]

HEAD = "h"
TAIL = "t"


class GenomeError(RuntimeError):
    """Raised when a genome file or adjacency set is malformed."""


class DcjError(RuntimeError):
    """Raised when a DCJ is malformed or cannot be applied."""


def _adjacency(extremities: Iterable[str]) -> Adjacency:
    result = tuple(sorted(extremities))
    if len(result) not in (1, 2):
        msg = f"Bitişiklik bir ya da iki uçtan oluşur: {result}"
        raise GenomeError(msg)
    return result


@dataclass(frozen=True, slots=True)
class Genome:
    """Multiset of adjacencies; an unoriented gene is a single extremity used twice."""

    adjacencies: tuple[Adjacency, ...]
    name: str = ""
    unoriented: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        adjacencies = tuple(sorted(_adjacency(a) for a in self.adjacencies))
        object.__setattr__(self, "adjacencies", adjacencies)
        object.__setattr__(self, "unoriented", frozenset(self.unoriented))

        counts = self.extremities()
        if TELOMERE in counts:
            msg = f"'{TELOMERE}' uç adı telomer köşesine ayrılmıştır."
            raise GenomeError(msg)
        for extremity, count in counts.items():
            if extremity in self.unoriented:
                expected = 2
            else:
                if extremity[-1:] not in (HEAD, TAIL):
                    msg = f"Uç adı 'h' ya da 't' ile bitmeli: {extremity!r}"
                    raise GenomeError(msg)
                twin = extremity[:-1] + (TAIL if extremity.endswith(HEAD) else HEAD)
                if twin not in counts:
                    msg = f"{extremity!r} ucunun eşi {twin!r} genomda yok."
                    raise GenomeError(msg)
                expected = 1
            if count != expected:
                msg = f"{extremity!r} ucu {count} bitişiklikte geçiyor, {expected} olmalı."
                raise GenomeError(msg)

    def extremities(self) -> Counter[str]:
        return Counter(x for adjacency in self.adjacencies for x in adjacency)

    def genes(self) -> frozenset[str]:
        return frozenset(x if x in self.unoriented else x[:-1] for x in self.extremities())

    @property
    def gene_count(self) -> int:
        return len(self.genes())

    def same_content(self, other: Genome) -> bool:
        return self.extremities() == other.extremities()


def _extremities_of(gene: str, unoriented: frozenset[str]) -> tuple[str, str]:
    """(entry, exit) extremities of ``gene`` read left to right; a leading '-' reverses it."""

    name = gene.lstrip("+-")
    if name in unoriented:
        return name, name
    if gene.startswith("-"):
        return name + HEAD, name + TAIL
    return name + TAIL, name + HEAD


def parse_genome(text: str) -> Genome:
    """Parse ``> name``, ``U g``, ``L ...`` and ``C ...`` lines into a genome."""

    name = ""
    unoriented: set[str] = set()
    chromosomes: list[tuple[int, str, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(">"):
            if name:
                msg = f"{number}. satır: dosyada birden fazla genom başlığı var."
                raise GenomeError(msg)
            name = line[1:].strip() or "genom"
            continue
        kind, *tokens = line.split()
        if kind == "U":
            unoriented.update(token.lstrip("+-") for token in tokens)
        elif kind in ("L", "C"):
            if not tokens:
                msg = f"{number}. satır: boş kromozom."
                raise GenomeError(msg)
            chromosomes.append((number, kind, tokens))
        else:
            msg = f"{number}. satır: bilinmeyen satır türü {kind!r}."
            raise GenomeError(msg)

    frozen = frozenset(unoriented)
    seen: dict[str, int] = {}
    adjacencies: list[Adjacency] = []
    for number, kind, tokens in chromosomes:
        ends: list[tuple[str, str]] = []
        for token in tokens:
            gene = token.lstrip("+-")
            if not gene or gene == TELOMERE:
                msg = f"{number}. satır: geçersiz gen adı {token!r}."
                raise GenomeError(msg)
            if gene in seen:
                msg = f"{number}. satır: {gene!r} geni {seen[gene]}. satırda zaten kullanıldı."
                raise GenomeError(msg)
            seen[gene] = number
            ends.append(_extremities_of(token, frozen))
        for (_, exit_), (entry, _) in zip(ends, ends[1:]):
            adjacencies.append(_adjacency((exit_, entry)))
        if kind == "L":
            adjacencies.append((ends[0][0],))
            adjacencies.append((ends[-1][1],))
        else:
            adjacencies.append(_adjacency((ends[-1][1], ends[0][0])))

    taken = {x for gene in seen if gene not in frozen for x in (gene + HEAD, gene + TAIL)}
    clashes = sorted(taken & frozen)
    if clashes:
        msg = f"Yönsüz gen adları yönlü gen uçlarıyla çakışıyor: {clashes}"
        raise GenomeError(msg)

    genome = Genome(adjacencies=tuple(adjacencies), name=name, unoriented=frozen & set(seen))
    logger.debug("Genom %r: %d gen, %d bitişiklik", name, len(seen), len(adjacencies))
    return genome


def _chromosomes(genome: Genome) -> list[tuple[str, list[str]]]:
    """Rebuild chromosomes by walking occurrences (adjacency index, position)."""

    where: dict[str, list[_Occurrence]] = defaultdict(list)
    for index, adjacency in enumerate(genome.adjacencies):
        for position, extremity in enumerate(adjacency):
            where[extremity].append((index, position))

    def through_gene(occurrence: _Occurrence) -> tuple[_Occurrence, str]:
        index, position = occurrence
        extremity = genome.adjacencies[index][position]
        if extremity in genome.unoriented:
            first, second = where[extremity]
            return (second if occurrence == first else first), extremity
        gene = extremity[:-1]
        twin = gene + (HEAD if extremity.endswith(TAIL) else TAIL)
        return where[twin][0], (gene if extremity.endswith(TAIL) else f"-{gene}")

    def walk(start: _Occurrence) -> tuple[list[str], set[int]]:
        genes: list[str] = []
        used: set[int] = set()
        current = start
        while True:
            used.add(current[0])
            current, gene = through_gene(current)
            genes.append(gene)
            index, position = current
            used.add(index)
            if len(genome.adjacencies[index]) == 1:
                return genes, used
            current = (index, 1 - position)
            if current == start:
                return genes, used

    result: list[tuple[str, list[str]]] = []
    visited: set[int] = set()
    for index, adjacency in enumerate(genome.adjacencies):
        if len(adjacency) == 1 and index not in visited:
            genes, used = walk((index, 0))
            visited |= used
            result.append(("L", genes))
    for index, adjacency in enumerate(genome.adjacencies):
        if index not in visited:
            genes, used = walk((index, 1))
            visited |= used
            result.append(("C", genes))
    return result


def format_genome(genome: Genome) -> str:
    lines = [f"> {genome.name}"] if genome.name else []
    if genome.unoriented:
        lines.append("U " + " ".join(sorted(genome.unoriented)))
    lines.extend(f"{kind} {' '.join(genes)}" for kind, genes in _chromosomes(genome))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, slots=True)
class DcjMove:
    """Cut one or two adjacencies and rejoin their extremities."""

    cut: tuple[Adjacency, ...]
    join: tuple[Adjacency, ...]

    def __post_init__(self) -> None:
        try:
            cut = tuple(sorted(_adjacency(a) for a in self.cut))
            join = tuple(sorted(_adjacency(a) for a in self.join))
        except GenomeError as exc:
            raise DcjError(str(exc)) from exc
        object.__setattr__(self, "cut", cut)
        object.__setattr__(self, "join", join)

        shape = (sorted(len(a) for a in cut), sorted(len(a) for a in join))
        if shape not in (([2, 2], [2, 2]), ([1, 2], [1, 2]), ([2], [1, 1]), ([1, 1], [2])):
            msg = f"DCJ biçimi tanınmadı: {list(cut)} -> {list(join)}"
            raise DcjError(msg)
        if Counter(x for a in cut for x in a) != Counter(x for a in join for x in a):
            msg = "DCJ kesilen uçları aynen yeniden birleştirmeli."
            raise DcjError(msg)
        if cut == join:
            msg = "DCJ genomu değiştirmiyor."
            raise DcjError(msg)

    def to_pairs(self) -> tuple[list[Pair], list[Pair]]:
        """Removed and added 2-break endpoints on the breakpoint graph."""

        return _padded(self.cut), _padded(self.join)


def _as_pair(adjacency: Adjacency) -> Pair:
    if len(adjacency) == 1:
        return pair(adjacency[0], TELOMERE)
    return pair(adjacency[0], adjacency[1])


def _padded(adjacencies: Sequence[Adjacency]) -> list[Pair]:
    pairs = [_as_pair(a) for a in adjacencies]
    if len(pairs) == 1:
        pairs.append((TELOMERE, TELOMERE))
    return pairs


def _from_pair(ends: Pair) -> Adjacency | None:
    real = tuple(end for end in ends if end != TELOMERE)
    return _adjacency(real) if real else None


def apply_dcj(genome: Genome, move: DcjMove) -> Genome:
    remaining = Counter(genome.adjacencies)
    for adjacency in move.cut:
        if remaining[adjacency] <= 0:
            msg = f"{adjacency} bitişikliği genomda yok."
            raise DcjError(msg)
        remaining[adjacency] -= 1
    adjacencies = list(remaining.elements()) + list(move.join)
    try:
        return Genome(
            adjacencies=tuple(adjacencies), name=genome.name, unoriented=genome.unoriented
        )
    except GenomeError as exc:
        raise DcjError(str(exc)) from exc


def _colored_adjacencies(adjacencies: Iterable[Adjacency], col: Coloring) -> Counter[Pair]:
    return Counter(
        pair(col[a[0]], col[a[1]] if len(a) == 2 else TELOMERE_COLOR) for a in adjacencies
    )


def dcj_cost(move: DcjMove, before: Genome, col: Coloring) -> int:
    """0 if the move keeps the multiset of colored adjacencies, 1 otherwise."""

    apply_dcj(before, move)
    same = _colored_adjacencies(move.cut, col) == _colored_adjacencies(move.join, col)
    return 0 if same else 1


def breakpoint_graph(
    first: Genome, second: Genome, col: Coloring | None = None
) -> ColoredMultigraph:
    """Black edges from ``first``, gray edges from ``second``, externals wired to the telomere.

    Each genome gets one telomere loop per internal adjacency, which brings the
    telomere to degree 2n in both colors.
    """

    if not first.same_content(second):
        missing = sorted(set(first.extremities()) ^ set(second.extremities()))
        msg = f"Genomların gen içerikleri farklı: {missing}"
        raise GenomeError(msg)

    def edges(genome: Genome) -> list[Pair]:
        pairs = [_as_pair(a) for a in genome.adjacencies]
        internal = sum(1 for a in genome.adjacencies if len(a) == 2)
        return pairs + [(TELOMERE, TELOMERE)] * internal

    colors: dict[str, str] = {}
    if col is not None:
        colors = {x: col[x] for x in first.extremities() if x in col}
        colors[TELOMERE] = TELOMERE_COLOR
    return ColoredMultigraph.from_pairs(
        edges(first),
        edges(second),
        colors=colors,
        vertices=[*first.extremities(), TELOMERE],
    )


def _black_edge(graph: ColoredMultigraph, ends: Pair, skip: set[int]) -> Edge:
    for edge in graph.black:
        if edge.ends == ends and edge.label not in skip:
            return edge
    msg = f"Grafikte {ends} uçlu siyah kenar yok."
    raise DcjError(msg)


def induced_two_break(graph: ColoredMultigraph, move: DcjMove) -> KBreak:
    """The 2-break a DCJ on the black genome performs on its breakpoint graph."""

    removed, added = move.to_pairs()
    first = _black_edge(graph, removed[0], set())
    second = _black_edge(graph, removed[1], {first.label})
    return KBreak.two_break(first, second, added[0], added[1])


def dcj_from_two_break(move: KBreak) -> DcjMove | None:
    """The DCJ a 2-break on a breakpoint graph stands for; ``None`` for a genome no-op."""

    if move.k != 2:
        msg = f"{move.k}-break bir DCJ'ye karşılık gelmez."
        raise DcjError(msg)
    cut = [a for a in (_from_pair(edge.ends) for edge in move.removed) if a is not None]
    join = [a for a in (_from_pair(edge.ends) for edge in move.added) if a is not None]
    if sorted(cut) == sorted(join):
        return None
    return DcjMove(cut=tuple(cut), join=tuple(join))


def lift_scenario_to_dcj(first: Genome, second: Genome, scenario: Scenario) -> list[DcjMove]:
    """Turn a scenario on the breakpoint graph into DCJs transforming ``first`` into ``second``.

    2-breaks that only shuffle telomere loops change no adjacency and are dropped.
    """

    replay(breakpoint_graph(first, second), scenario)
    genome = first
    moves: list[DcjMove] = []
    for index, move in enumerate(scenario):
        dcj = dcj_from_two_break(move)
        if dcj is None:
            logger.warning("%d. 2-break genomu değiştirmiyor; DCJ listesine alınmadı.", index)
            continue
        genome = apply_dcj(genome, dcj)
        moves.append(dcj)

    if Counter(genome.adjacencies) != Counter(second.adjacencies):
        msg = "DCJ listesi hedef genoma ulaşmıyor."
        raise DcjError(msg)
    return moves
