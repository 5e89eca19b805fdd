"""Handlers for scenario length, minimum cost and scenario validation."""

from __future__ import annotations

import argparse
import logging
from functools import partial

from ..services.colored_cost import (
    complete_coloring,
    merged_graph,
    min_cost_scenario,
    two_break_cost,
)
from ..services.genome_mcps import decompose_breakpoint, maximum_decomposition
from ..services.graph import macd_exact
from ..services.scenario import parsimonious_scenario, validate_scenario
from ..utils.formats import FormatError, scenario_from_json, scenario_to_json
from .base import load_genome_graph, load_graph, read_json
from .router import CommandContext, CommandRouter, Document, argument, document

router = CommandRouter(name="distance")
logger = logging.getLogger(__name__)


@router.command(
    "dist",
    "En kısa 2-break senaryosu (grafik ya da iki genom).",
    argument("inputs", nargs="+", metavar="DOSYA", help="GRAFİK ya da GENOM_A GENOM_B"),
)
def handle_dist(args: argparse.Namespace, context: CommandContext) -> Document:
    """Report e - c and one parsimonious scenario."""

    if len(args.inputs) == 1:
        graph = load_graph(args.inputs[0])
        cycles, decomposition = macd_exact(graph, context.cap_for("exact"))
    elif len(args.inputs) == 2:
        _, _, graph, _ = load_genome_graph(*args.inputs)
        decomposition = maximum_decomposition(decompose_breakpoint(graph))
        cycles = len(decomposition)
    else:
        msg = "dist bir grafik ya da iki genom dosyası bekler."
        raise FormatError(msg)

    scenario = parsimonious_scenario(graph, decomposition)
    logger.info("dist: e=%d c=%d", graph.size, cycles)
    return document(
        "dist",
        length=graph.size - cycles,
        edges=graph.size,
        cycles=cycles,
        scenario=scenario_to_json(scenario),
    )


@router.command(
    "mincost",
    "Uzunluk sınırı olmadan en ucuz senaryo.",
    argument("inputs", nargs="+", metavar="DOSYA", help="GRAFİK RENKLER ya da A B RENKLER"),
)
def handle_mincost(args: argparse.Namespace, context: CommandContext) -> Document:
    if len(args.inputs) == 2:
        graph = load_graph(*args.inputs)
        coloring = complete_coloring(graph)
    elif len(args.inputs) == 3:
        _, _, graph, loaded = load_genome_graph(*args.inputs)
        coloring = complete_coloring(graph, loaded)
    else:
        msg = "mincost GRAFİK RENKLER ya da A B RENKLER bekler."
        raise FormatError(msg)

    merged = merged_graph(graph, coloring).graph
    cost, scenario = min_cost_scenario(graph, coloring, context.cap_for("exact"))
    logger.info("mincost: maliyet=%d uzunluk=%d", cost, len(scenario))
    return document(
        "mincost",
        cost=cost,
        length=len(scenario),
        merged_edges=merged.size,
        merged_cycles=merged.size - cost,
        scenario=scenario_to_json(scenario),
    )


@router.command(
    "validate",
    "Bir senaryoyu yeniden oynat, uzunluğunu ve maliyetini raporla.",
    argument("scenario", metavar="SENARYO.json"),
    argument("--graph", metavar="GRAFİK"),
    argument("--genomes", nargs=2, metavar=("A", "B")),
    argument("--colors", metavar="RENKLER"),
)
def handle_validate(args: argparse.Namespace, context: CommandContext) -> Document:
    if (args.graph is None) == (args.genomes is None):
        msg = "validate için --graph ya da --genomes seçeneklerinden tam olarak biri gerekli."
        raise FormatError(msg)

    coloring: dict[str, str] | None = None
    if args.graph is not None:
        graph = load_graph(args.graph, args.colors)
        if args.colors is not None:
            coloring = complete_coloring(graph)
    else:
        _, _, graph, coloring = load_genome_graph(*args.genomes, args.colors)

    scenario = scenario_from_json(read_json(args.scenario), graph)
    report = validate_scenario(
        graph,
        scenario,
        None if coloring is None else partial(two_break_cost, col=coloring),
    )
    ok = report.final_terminal and report.intermediate_eulerian
    if not ok:
        logger.warning("Senaryo geçersiz: terminal=%s", report.final_terminal)
    result = document(
        "validate",
        ok=ok,
        length=report.length,
        final_terminal=report.final_terminal,
        intermediate_eulerian=report.intermediate_eulerian,
    )
    if report.cost is not None:
        result["cost"] = report.cost
    return result
