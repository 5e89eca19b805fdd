"""Handlers for minimum-cost parsimonious scenarios on graphs and genomes."""

from __future__ import annotations

import argparse
import logging

from ..services.colored_cost import complete_coloring
from ..services.general import best_decomposition
from ..services.genome_mcps import mcps_genomes
from ..utils.formats import dcj_to_json, scenario_to_json
from .base import load_coloring, load_genome, load_graph
from .router import CommandContext, CommandRouter, Document, argument, document

router = CommandRouter(name="mcps")
logger = logging.getLogger(__name__)


@router.command(
    "mcps-graph",
    "Genel grafik için kesin en ucuz tutumlu senaryo.",
    argument("graph", metavar="GRAFİK"),
    argument("colors", metavar="RENKLER"),
)
def handle_mcps_graph(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph, args.colors)
    cost, decomposition, scenario = best_decomposition(
        graph, complete_coloring(graph), context.cap_for("exact")
    )
    return document(
        "mcps-graph",
        cost=cost,
        length=len(scenario),
        cycles=len(decomposition),
        parts=[sorted(part) for part in decomposition],
        scenario=scenario_to_json(scenario),
    )


@router.command(
    "mcps-genomes",
    "İki genom arasında en ucuz tutumlu DCJ senaryosu.",
    argument("first", metavar="GENOM_A"),
    argument("second", metavar="GENOM_B"),
    argument("colors", metavar="RENKLER"),
)
def handle_mcps_genomes(args: argparse.Namespace, context: CommandContext) -> Document:
    solution = mcps_genomes(
        load_genome(args.first),
        load_genome(args.second),
        load_coloring(args.colors),
        jobs=context.jobs,
    )
    return document(
        "mcps-genomes",
        cost=solution.cost,
        length=len(solution.scenario),
        dcj_length=len(solution.dcj),
        summary=solution.summary(),
        scenario=scenario_to_json(solution.scenario),
        dcj=dcj_to_json(solution.dcj),
    )
