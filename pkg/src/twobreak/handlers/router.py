"""Command routers: each handler module registers its subcommands on one of these."""

from __future__ import annotations

import argparse
import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

from ..config import Settings

__all__ = ["CommandContext", "CommandRouter", "Document", "argument", "document", "render"]

Document = dict[str, Any]
Argument = tuple[tuple[str, ...], dict[str, Any]]

SCHEMA_VERSION = 1


@dataclass(frozen=True, slots=True)
class CommandContext:
    """Per-invocation view of the settings after command-line overrides."""

    settings: Settings
    cap: int | None = None
    jobs: int = 1

    def cap_for(self, search: str) -> int:
        return self.settings.cap_for(search, self.cap)


Handler = Callable[[argparse.Namespace, CommandContext], Document]


@dataclass(slots=True)
class _Command:
    name: str
    help: str
    handler: Handler
    arguments: tuple[Argument, ...]


def argument(*flags: str, **options: Any) -> Argument:
    return flags, options


@dataclass(slots=True)
class CommandRouter:
    """Collects handlers; ``group`` nests them under one parent subcommand."""

    name: str
    group: str | None = None
    help: str = ""
    commands: list[_Command] = field(default_factory=list)

    def command(
        self, name: str, help: str, *arguments: Argument
    ) -> Callable[[Handler], Handler]:
        def decorator(handler: Handler) -> Handler:
            self.commands.append(_Command(name, help, handler, arguments))
            return handler

        return decorator

    def register(self, subparsers: Any) -> None:
        target = subparsers
        prefix = ""
        if self.group is not None:
            parent = subparsers.add_parser(self.group, help=self.help)
            target = parent.add_subparsers(dest=f"{self.group}_command", required=True)
            prefix = f"{self.group} "
        for command in self.commands:
            parser = target.add_parser(command.name, help=command.help)
            for flags, options in command.arguments:
                parser.add_argument(*flags, **options)
            parser.set_defaults(handler=command.handler, command=prefix + command.name)


def document(command: str, **fields: Any) -> Document:
    return {"schema": SCHEMA_VERSION, "command": command, **fields}


def _scalars(prefix: str, value: Any) -> list[str]:
    if isinstance(value, Mapping):
        lines: list[str] = []
        for key, item in value.items():
            lines.extend(_scalars(f"{prefix}.{key}" if prefix else str(key), item))
        return lines
    if isinstance(value, list):
        return [f"{prefix}: {len(value)} öğe"]
    if isinstance(value, str) and "\n" in value:
        return [f"{prefix}:", *("  " + line for line in value.splitlines())]
    if isinstance(value, bool):
        return [f"{prefix}: {'evet' if value else 'hayır'}"]
    return [f"{prefix}: {value}"]


def render(result: Document, output_format: str) -> str:
    if output_format == "text":
        return "\n".join(_scalars("", result)) + "\n"
    return json.dumps(result, indent=2, ensure_ascii=False) + "\n"
