"""Handlers writing seeded random instances."""

from __future__ import annotations

import argparse
import logging
import random

from ..services.genome import format_genome
from ..services.generators import random_eulerian_graph, random_genome_pair
from ..utils.formats import format_coloring, format_graph
from .base import write_text
from .router import CommandContext, CommandRouter, Document, argument, document

router = CommandRouter(name="generate", group="generate", help="Rastgele örnek üret.")
logger = logging.getLogger(__name__)

_SEED = argument("--seed", type=int, default=0, help="Rastgele tohum (varsayılan 0)")
_OUTPUT = argument("--output", metavar="DİZİN", help="Dosyaların yazılacağı dizin")


def _write(output: str | None, files: dict[str, str]) -> list[str]:
    if output is None:
        return []
    return [str(write_text(output, name, content)) for name, content in files.items()]


@router.command(
    "graph",
    "Rastgele dengeli renkli grafik.",
    argument("--edges", type=int, default=5),
    argument("--vertices", type=int, default=4),
    argument("--colors", type=int, default=2),
    _SEED,
    _OUTPUT,
)
def handle_graph(args: argparse.Namespace, context: CommandContext) -> Document:
    if args.edges < 1 or args.vertices < 1 or args.colors < 0:
        msg = "Kenar ve köşe sayıları pozitif, renk sayısı negatif olmamalı."
        raise ValueError(msg)
    graph = random_eulerian_graph(random.Random(args.seed), args.edges, args.vertices, args.colors)
    text = format_graph(graph)
    logger.info("Grafik üretildi: tohum=%d e=%d", args.seed, graph.size)
    return document(
        "generate graph",
        seed=args.seed,
        edges=graph.size,
        graph=text,
        files=_write(args.output, {"instance.graph": text}),
    )


@router.command(
    "genomes",
    "Aynı gen kümesi üzerinde rastgele iki genom ve bir uç renklendirmesi.",
    argument("--genes", type=int, default=4),
    argument("--chromosomes", type=int, default=2),
    argument("--colors", type=int, default=2),
    _SEED,
    _OUTPUT,
)
def handle_genomes(args: argparse.Namespace, context: CommandContext) -> Document:
    if args.genes < 1 or args.chromosomes < 1 or args.colors < 1:
        msg = "Gen, kromozom ve renk sayıları pozitif olmalı."
        raise ValueError(msg)
    first, second, coloring = random_genome_pair(
        random.Random(args.seed), args.genes, args.colors, args.chromosomes
    )
    files = {
        "a.genome": format_genome(first),
        "b.genome": format_genome(second),
        "extremities.colors": format_coloring(coloring),
    }
    logger.info("Genom çifti üretildi: tohum=%d n=%d", args.seed, args.genes)
    return document(
        "generate genomes",
        seed=args.seed,
        genes=args.genes,
        first=files["a.genome"],
        second=files["b.genome"],
        colors=files["extremities.colors"],
        files=_write(args.output, files),
    )
