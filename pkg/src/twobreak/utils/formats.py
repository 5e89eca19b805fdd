"""Text and JSON codecs for graphs, colorings, scenarios and DCJ lists."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Any

import networkx as nx

from ..services.genome import DcjMove
from ..services.graph import (
    TELOMERE,
    TELOMERE_COLOR,
    ColoredMultigraph,
    Edge,
    EdgeColor,
    GraphError,
    Pair,
    pair,
)
from ..services.scenario import KBreak, Scenario, ScenarioError, apply_move

__all__ = [
    "FormatError",
    "dcj_to_json",
    "format_coloring",
    "format_graph",
    "parse_coloring",
    "parse_graph",
    "parse_simple_graph",
    "scenario_from_json",
    "scenario_to_json",
]


class FormatError(RuntimeError):
    """Raised when an input file or document cannot be decoded."""


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _check_reserved(vertex: str, color: str, number: int) -> None:
    if color == TELOMERE_COLOR and vertex != TELOMERE:
        msg = f"{number}. satır: '{TELOMERE_COLOR}' rengi telomer köşesine ayrılmıştır."
        raise FormatError(msg)


def parse_graph(text: str) -> ColoredMultigraph:
    """Read ``v id [color]``, ``b u v`` and ``g u v`` lines.

    Black edges are labeled 1..e in file order, gray edges e+1..2e.
    """

    vertices: list[str] = []
    colors: dict[str, str] = {}
    black: list[Pair] = []
    gray: list[Pair] = []
    for number, tokens in _lines(text):
        kind, *rest = tokens
        if kind == "v" and len(rest) in (1, 2):
            vertices.append(rest[0])
            if len(rest) == 2:
                _check_reserved(rest[0], rest[1], number)
                colors[rest[0]] = rest[1]
        elif kind in ("b", "g") and len(rest) == 2:
            (black if kind == "b" else gray).append((rest[0], rest[1]))
        else:
            msg = f"{number}. satır anlaşılamadı: {' '.join(tokens)!r}"
            raise FormatError(msg)

    try:
        return ColoredMultigraph.from_pairs(black, gray, colors=colors, vertices=vertices)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_graph(graph: ColoredMultigraph, colors: Mapping[str, str] | None = None) -> str:
    palette = graph.colors if colors is None else colors
    lines = [
        f"v {vertex} {palette[vertex]}" if vertex in palette else f"v {vertex}"
        for vertex in graph.vertices
    ]
    lines.extend(f"b {u} {v}" for u, v in (edge.ends for edge in graph.black))
    lines.extend(f"g {u} {v}" for u, v in (edge.ends for edge in graph.gray))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> dict[str, str]:
    """Read ``<vertex> <color>`` lines; the telomere may be left out."""

    colors: dict[str, str] = {}
    for number, tokens in _lines(text):
        if len(tokens) != 2:
            msg = f"{number}. satır '<köşe> <renk>' biçiminde olmalı."
            raise FormatError(msg)
        vertex, color = tokens
        if vertex in colors:
            msg = f"{number}. satır: {vertex!r} köşesi iki kez renklendirilmiş."
            raise FormatError(msg)
        _check_reserved(vertex, color, number)
        colors[vertex] = color
    return colors


def format_coloring(colors: Mapping[str, str]) -> str:
    return "".join(f"{vertex} {colors[vertex]}\n" for vertex in sorted(colors))


def parse_simple_graph(text: str) -> nx.Graph:
    """Read an undirected simple graph given as ``u v`` lines."""

    graph = nx.Graph()
    for number, tokens in _lines(text):
        if len(tokens) != 2:
            msg = f"{number}. satır 'u v' biçiminde olmalı."
            raise FormatError(msg)
        u, v = tokens
        if u == v or graph.has_edge(u, v):
            msg = f"{number}. satır: döngü ya da tekrar eden kenar {u}-{v}."
            raise FormatError(msg)
        graph.add_edge(u, v)
    return graph


def scenario_to_json(scenario: Scenario) -> list[dict[str, Any]]:
    return [
        {
            "remove": [list(edge.ends) for edge in move.removed],
            "add": [list(edge.ends) for edge in move.added],
            "labels": [edge.label for edge in move.removed],
            "assign": [edge.label for edge in move.added],
        }
        for move in scenario
    ]


def _pairs(raw: Any, field: str, index: int) -> list[Pair]:
    if not isinstance(raw, list) or not all(
        isinstance(item, list) and len(item) == 2 for item in raw
    ):
        msg = f"{index}. hamle: '{field}' uç çiftlerinden oluşan bir liste olmalı."
        raise FormatError(msg)
    return [pair(str(u), str(v)) for u, v in raw]


def _black_edge(state: ColoredMultigraph, ends: Pair, taken: set[int]) -> Edge:
    for edge in state.black:
        if edge.ends == ends and edge.label not in taken:
            return edge
    msg = f"{ends} uçlu siyah kenar yok."
    raise FormatError(msg)


def scenario_from_json(document: Any, graph: ColoredMultigraph) -> Scenario:
    """Decode a move list (or a command result holding one under ``scenario``).

    Moves without labels take the lowest-labeled black edge with the given
    endpoints; added edges default to the removed labels in order.
    """

    moves_raw = document.get("scenario") if isinstance(document, dict) else document
    if not isinstance(moves_raw, list):
        msg = "Senaryo bir hamle listesi olmalı."
        raise FormatError(msg)

    state = graph
    moves: list[KBreak] = []
    for index, raw in enumerate(moves_raw):
        if not isinstance(raw, dict):
            msg = f"{index}. hamle bir nesne olmalı."
            raise FormatError(msg)
        removed_ends = _pairs(raw.get("remove"), "remove", index)
        added_ends = _pairs(raw.get("add"), "add", index)
        try:
            if "labels" in raw:
                removed = [state.edge(int(label)) for label in raw["labels"]]
                if [edge.ends for edge in removed] != removed_ends:
                    msg = f"{index}. hamle: etiketler ile uçlar uyuşmuyor."
                    raise FormatError(msg)
            else:
                taken: set[int] = set()
                removed = []
                for ends in removed_ends:
                    edge = _black_edge(state, ends, taken)
                    taken.add(edge.label)
                    removed.append(edge)
            labels = [int(label) for label in raw.get("assign", [e.label for e in removed])]
            move = KBreak(
                removed=tuple(removed),
                added=tuple(
                    Edge(label, ends, EdgeColor.BLACK) for label, ends in zip(labels, added_ends)
                ),
            )
            state = apply_move(state, move, index)
        except (GraphError, ScenarioError, ValueError, TypeError) as exc:
            raise FormatError(f"{index}. hamle okunamadı: {exc}") from exc
        moves.append(move)
    return Scenario(tuple(moves))


def dcj_to_json(moves: Iterable[DcjMove]) -> list[dict[str, list[list[str]]]]:
    return [
        {"cut": [list(a) for a in move.cut], "join": [list(a) for a in move.join]}
        for move in moves
    ]
