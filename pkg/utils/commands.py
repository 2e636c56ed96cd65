from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable, Iterator

if TYPE_CHECKING:
    from main import HypConst, HypConstContext

__all__ = ("Cog", "Command", "argument", "command")


def argument(*flags: str, **kwargs: Any) -> tuple[tuple[str, ...], dict[str, Any]]:
    """Arguments for ArgumentParser.add_argument, collected by @command."""
    return flags, kwargs


@dataclass
class Command:
    name: str
    callback: Callable[..., None]
    brief: str = ""
    arguments: list[tuple[tuple[str, ...], dict[str, Any]]] = field(default_factory=list)


def command(name: str, *, brief: str = "", arguments: tuple = ()) -> Callable[[Callable[..., None]], Command]:
    def decorator(func: Callable[..., None]) -> Command:
        return Command(name, func, brief, list(arguments))

    return decorator


class Cog:
    """A family of subcommands, registered on the app through setup()."""

    def __init__(self, app: HypConst) -> None:
        self.app = app

    @property
    def qualified_name(self) -> str:
        return type(self).__name__

    def walk_commands(self) -> Iterator[Command]:
        for _, member in inspect.getmembers(type(self), lambda m: isinstance(m, Command)):
            yield member

    def invoke(self, cmd: Command, ctx: HypConstContext) -> None:
        cmd.callback(self, ctx)
