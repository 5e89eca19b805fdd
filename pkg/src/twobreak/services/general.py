"""Exact minimum-cost parsimonious scenarios on general graphs."""

from __future__ import annotations

import logging

from .colored_cost import Coloring, complete_coloring
from .graph import DEFAULT_EXACT_CAP, ColoredMultigraph, CycleDecomposition, enumerate_macds
from .scenario import Scenario
from .simple_cycle import mcps_simple_cycle

__all__ = ["best_decomposition", "mcps_graph_exact"]

logger = logging.getLogger(__name__)


def best_decomposition(
    graph: ColoredMultigraph, col: Coloring | None = None, cap: int = DEFAULT_EXACT_CAP
) -> tuple[int, CycleDecomposition, Scenario]:
    """The maximum decomposition whose simple cycles are cheapest to sort.

    Ties go to the lexicographically first decomposition.
    """

    coloring = complete_coloring(graph, col)
    solved: dict[frozenset[int], tuple[int, Scenario]] = {}

    def solve(part: frozenset[int]) -> tuple[int, Scenario]:
        if part not in solved:
            solved[part] = mcps_simple_cycle(graph.restrict(part), coloring)
        return solved[part]

    best: tuple[int, CycleDecomposition] | None = None
    for decomposition in enumerate_macds(graph, cap):
        total = sum(solve(part)[0] for part in decomposition)
        if best is None or total < best[0]:
            best = (total, decomposition)

    if best is None:
        return 0, CycleDecomposition(()), Scenario()
    cost, decomposition = best
    scenario = Scenario.concatenate(solve(part)[1] for part in decomposition)
    logger.debug(
        "Genel MCPS: e=%d c=%d maliyet=%d (%d döngü çözüldü)",
        graph.size,
        len(decomposition),
        cost,
        len(solved),
    )
    return cost, decomposition, scenario


def mcps_graph_exact(
    graph: ColoredMultigraph, col: Coloring | None = None, cap: int = DEFAULT_EXACT_CAP
) -> tuple[int, Scenario]:
    """Minimum cost over all maximum decompositions of the summed simple-cycle costs."""

    cost, _, scenario = best_decomposition(graph, col, cap)
    return cost, scenario
