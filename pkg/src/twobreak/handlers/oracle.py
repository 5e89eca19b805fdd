"""Handlers exposing the exhaustive reference searches."""

from __future__ import annotations

import argparse

from ..services.circle import Circle
from ..services.colored_cost import complete_coloring
from ..services.oracle import (
    brute_macd,
    brute_mcps,
    brute_min_cost,
    brute_min_length,
    brute_misa_circle,
)
from .base import load_graph
from .router import CommandContext, CommandRouter, Document, argument, document

router = CommandRouter(name="oracle", group="oracle", help="Küçük örnekler için kaba kuvvet.")

_GRAPH = argument("graph", metavar="GRAFİK")
_COLORS = argument("colors", metavar="RENKLER")


@router.command("min-length", "En kısa senaryonun uzunluğu (BFS).", _GRAPH)
def handle_min_length(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph)
    return document(
        "oracle min-length",
        length=brute_min_length(graph, context.cap_for("oracle")),
    )


@router.command("min-cost", "Herhangi uzunlukta en ucuz senaryonun maliyeti.", _GRAPH, _COLORS)
def handle_min_cost(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph, args.colors)
    cost = brute_min_cost(graph, complete_coloring(graph), context.cap_for("oracle"))
    return document("oracle min-cost", cost=cost)


@router.command("mcps", "En kısa senaryolar arasında en düşük maliyet.", _GRAPH, _COLORS)
def handle_mcps(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph, args.colors)
    cost = brute_mcps(graph, complete_coloring(graph), context.cap_for("oracle"))
    return document("oracle mcps", cost=cost)


@router.command("misa", "Tüm kesimler üzerinden en büyük yay kümesi.", _GRAPH, _COLORS)
def handle_misa(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph, args.colors)
    size = brute_misa_circle(
        Circle.from_graph(graph), complete_coloring(graph), context.cap_for("misa-oracle")
    )
    return document("oracle misa", size=size)


@router.command("macd", "Dengeli alt kümelere en çok parçalı bölüntü.", _GRAPH)
def handle_macd(args: argparse.Namespace, context: CommandContext) -> Document:
    graph = load_graph(args.graph)
    return document("oracle macd", cycles=brute_macd(graph, context.cap_for("macd-oracle")))
