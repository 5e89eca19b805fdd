"""Handlers for circles: arc sets, circle scenarios and the cycle-decomposition reduction."""

from __future__ import annotations

import argparse
import logging

from ..services.circle import (
    Circle,
    mcps_circle,
    misa_path,
    misa_to_decomposition,
    split_at_vertex,
)
from ..services.colored_cost import complete_coloring
from ..services.hardness import reduce_macd_to_circle
from ..utils.formats import format_coloring, format_graph, parse_simple_graph, scenario_to_json
from .base import load_graph, read_text, write_text
from .router import CommandContext, CommandRouter, Document, argument, document

router = CommandRouter(name="circle")
logger = logging.getLogger(__name__)


def _load_circle(graph_path: str, colors_path: str) -> tuple[Circle, dict[str, str]]:
    graph = load_graph(graph_path, colors_path)
    return Circle.from_graph(graph), complete_coloring(graph)


@router.command(
    "misa",
    "Çemberin en büyük bağımsız yay kümesi.",
    argument("graph", metavar="GRAFİK"),
    argument("colors", metavar="RENKLER"),
)
def handle_misa(args: argparse.Namespace, context: CommandContext) -> Document:
    circle, coloring = _load_circle(args.graph, args.colors)
    path = split_at_vertex(circle, circle.vertices[0], coloring)
    result = misa_path(path)
    return document(
        "misa",
        size=result.size,
        arcs=[[arc.start, arc.end] for arc in result.arcs],
        edges=circle.size,
        mcps_cost=circle.size - result.size,
    )


@router.command(
    "mcps-circle",
    "Çember için en ucuz tutumlu senaryo.",
    argument("graph", metavar="GRAFİK"),
    argument("colors", metavar="RENKLER"),
)
def handle_mcps_circle(args: argparse.Namespace, context: CommandContext) -> Document:
    circle, coloring = _load_circle(args.graph, args.colors)
    cost, scenario = mcps_circle(circle, coloring)
    misa = circle.size - cost
    logger.info("Çember: e=%d maliyet=%d", circle.size, cost)
    return document(
        "mcps-circle",
        cost=cost,
        length=len(scenario),
        misa=misa,
        scenario=scenario_to_json(scenario),
    )


@router.command(
    "decompose-circle",
    "Bağımsız yay kümesinden birleştirilmiş çemberin döngü ayrıştırması.",
    argument("graph", metavar="GRAFİK"),
    argument("colors", metavar="RENKLER"),
)
def handle_decompose_circle(args: argparse.Namespace, context: CommandContext) -> Document:
    circle, coloring = _load_circle(args.graph, args.colors)
    arcs = misa_path(split_at_vertex(circle, circle.vertices[0], coloring)).arcs
    decomposition = misa_to_decomposition(circle, arcs)
    return document(
        "decompose-circle",
        cycles=len(decomposition),
        parts=[sorted(part) for part in decomposition],
    )


@router.command(
    "reduce",
    "Basit Euler grafiğini renkli bir çembere indirge.",
    argument("graph", metavar="BASİT_GRAFİK"),
    argument("--output", metavar="DİZİN", help="circle.graph ve circle.colors buraya yazılır"),
)
def handle_reduce(args: argparse.Namespace, context: CommandContext) -> Document:
    circle, colors = reduce_macd_to_circle(parse_simple_graph(read_text(args.graph)))
    graph_text = format_graph(circle.graph, {})
    colors_text = format_coloring(colors)
    result = document(
        "reduce",
        edges=circle.size,
        vertices=len(circle.vertices),
        graph=graph_text,
        colors=colors_text,
    )
    if args.output is not None:
        result["files"] = [
            str(write_text(args.output, "circle.graph", graph_text)),
            str(write_text(args.output, "circle.colors", colors_text)),
        ]
    return result
