"""Seeded random instances for property suites and the ``generate`` command."""

from __future__ import annotations

import logging
import random

from .circle import Circle
from .colored_cost import two_break_cost
from .genome import Genome, parse_genome
from .graph import ColoredMultigraph, Pair, macd_exact, pair
from .scenario import KBreak, apply_move

__all__ = [
    "palette",
    "random_circle",
    "random_coloring",
    "random_eulerian_graph",
    "random_genome",
    "random_genome_pair",
    "random_simple_cycle",
    "random_zero_cost_graph",
]

logger = logging.getLogger(__name__)

_ATTEMPTS = 200


def palette(count: int) -> list[str]:
    return [chr(ord("x") + i) if i < 3 else f"c{i}" for i in range(count)]


def random_coloring(rng: random.Random, vertices: list[str], colors: int) -> dict[str, str]:
    names = palette(colors)
    return {vertex: rng.choice(names) for vertex in vertices}


def random_eulerian_graph(
    rng: random.Random, size: int, vertices: int, colors: int = 0
) -> ColoredMultigraph:
    """Random black edges; gray edges pair up the same endpoint multiset at random."""

    names = [f"v{i}" for i in range(1, vertices + 1)]
    black = [(rng.choice(names), rng.choice(names)) for _ in range(size)]
    ends = [end for edge in black for end in edge]
    rng.shuffle(ends)
    gray = list(zip(ends[::2], ends[1::2]))
    used = sorted({end for end in ends})
    coloring = random_coloring(rng, used, colors) if colors else {}
    return ColoredMultigraph.from_pairs(black, gray, colors=coloring)


def random_circle(rng: random.Random, size: int, colors: int) -> Circle:
    names = [f"p{i}" for i in range(2 * size)]
    black = [(names[2 * i], names[2 * i + 1]) for i in range(size)]
    gray = [(names[2 * i + 1], names[(2 * i + 2) % (2 * size)]) for i in range(size)]
    graph = ColoredMultigraph.from_pairs(
        black, gray, colors=random_coloring(rng, names, colors)
    )
    return Circle.from_graph(graph)


def random_simple_cycle(
    rng: random.Random, size: int, doubled: int, colors: int
) -> ColoredMultigraph:
    """A circle with ``doubled`` pairs of vertices merged, kept only if it stays one cycle."""

    for _ in range(_ATTEMPTS):
        circle = random_circle(rng, size, 1)
        order = list(circle.vertices)
        rename = {vertex: vertex for vertex in order}
        free = list(order)
        for _ in range(doubled):
            candidates = [
                (u, w)
                for i, u in enumerate(order)
                for j, w in enumerate(order)
                if i < j and (j - i) % 2 == 1 and u in free and w in free
            ]
            if not candidates:
                break
            u, w = rng.choice(candidates)
            rename[w] = u
            free.remove(u)
            free.remove(w)

        def image(ends: Pair) -> Pair:
            return pair(rename[ends[0]], rename[ends[1]])

        merged = ColoredMultigraph.from_pairs(
            [image(edge.ends) for edge in circle.graph.black],
            [image(edge.ends) for edge in circle.graph.gray],
        )
        if len(order) - len(merged.vertices) != doubled or macd_exact(merged)[0] != 1:
            continue
        return merged.with_colors(random_coloring(rng, list(merged.vertices), colors))

    msg = f"{size} kenarlı, {doubled} çift köşeli basit döngü üretilemedi."
    raise RuntimeError(msg)


def random_zero_cost_graph(
    rng: random.Random, size: int, vertices: int, colors: int, moves: int = 6
) -> ColoredMultigraph:
    """A terminal graph scrambled by cost-0 2-breaks, so its merged graph stays terminal."""

    names = [f"v{i}" for i in range(1, vertices + 1)]
    edges = [(rng.choice(names), rng.choice(names)) for _ in range(size)]
    used = sorted({end for edge in edges for end in edge})
    state = ColoredMultigraph.from_pairs(
        edges, edges, colors=random_coloring(rng, used, colors)
    )
    for _ in range(moves):
        if state.size < 2:
            break
        first, second = rng.sample(list(state.black), 2)
        (a, b), (c, d) = first.ends, second.ends
        if rng.random() < 0.5:
            c, d = d, c
        move = KBreak.two_break(first, second, (a, c), (b, d))
        if sorted(edge.ends for edge in move.added) == sorted((first.ends, second.ends)):
            continue
        if two_break_cost(move, state.colors) == 0:
            state = apply_move(state, move)
    return state


def random_genome(rng: random.Random, genes: list[str], chromosomes: int, name: str) -> Genome:
    """Shuffle signed genes into up to ``chromosomes`` linear or circular chromosomes."""

    order = [f"-{gene}" if rng.random() < 0.5 else gene for gene in genes]
    rng.shuffle(order)
    count = max(1, min(chromosomes, len(order)))
    cuts = sorted(rng.sample(range(1, len(order)), count - 1)) if count > 1 else []
    lines = [f"> {name}"]
    for start, end in zip([0, *cuts], [*cuts, len(order)]):
        kind = "C" if rng.random() < 0.3 else "L"
        lines.append(f"{kind} {' '.join(order[start:end])}")
    return parse_genome("\n".join(lines))


def random_genome_pair(
    rng: random.Random, genes: int, colors: int, chromosomes: int = 2
) -> tuple[Genome, Genome, dict[str, str]]:
    """Two genomes on genes 1..n and a random extremity coloring."""

    names = [str(i) for i in range(1, genes + 1)]
    first = random_genome(rng, names, chromosomes, "A")
    second = random_genome(rng, names, chromosomes, "B")
    extremities = sorted(first.extremities())
    return first, second, random_coloring(rng, extremities, colors)
