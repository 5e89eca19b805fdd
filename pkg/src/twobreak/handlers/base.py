"""Input loading shared by the command handlers."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from ..services.colored_cost import complete_coloring
from ..services.genome import Genome, breakpoint_graph, parse_genome
from ..services.graph import ColoredMultigraph
from ..utils.formats import FormatError, parse_coloring, parse_graph

logger = logging.getLogger(__name__)


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"{path} okunamadı: {exc.strerror or exc}"
        raise FormatError(msg) from exc


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        msg = f"{path} geçerli bir JSON değil: {exc.msg} (satır {exc.lineno})"
        raise FormatError(msg) from exc


def write_text(directory: str | Path, name: str, content: str) -> Path:
    target = Path(directory)
    try:
        target.mkdir(parents=True, exist_ok=True)
        path = target / name
        path.write_text(content, encoding="utf-8")
    except OSError as exc:
        msg = f"{target} dizinine yazılamadı: {exc.strerror or exc}"
        raise FormatError(msg) from exc
    logger.info("%s yazıldı", path)
    return path


def load_graph(path: str | Path, colors: str | Path | None = None) -> ColoredMultigraph:
    """Graph file, recolored by ``colors`` when a coloring file is given."""

    graph = parse_graph(read_text(path))
    if colors is not None:
        coloring = load_coloring(colors)
        graph = graph.with_colors(
            {vertex: color for vertex, color in coloring.items() if graph.has_vertex(vertex)}
        )
    return graph


def load_coloring(path: str | Path) -> dict[str, str]:
    return parse_coloring(read_text(path))


def load_genome(path: str | Path) -> Genome:
    return parse_genome(read_text(path))


def load_genome_graph(
    first: str | Path, second: str | Path, colors: str | Path | None = None
) -> tuple[Genome, Genome, ColoredMultigraph, dict[str, str] | None]:
    genome_a, genome_b = load_genome(first), load_genome(second)
    coloring = load_coloring(colors) if colors is not None else None
    graph = breakpoint_graph(genome_a, genome_b, coloring)
    if coloring is not None:
        coloring = complete_coloring(graph, coloring)
    return genome_a, genome_b, graph, coloring
