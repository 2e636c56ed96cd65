from __future__ import annotations

import argparse
import importlib
import logging
import sys
from typing import Any, Optional, Sequence

from cogs import EXTENSIONS
from utils.commands import Cog, Command
from utils.config import Settings, load_settings
from utils.errors import HypConstError, PrecisionExhausted, UsageError
from utils.exactmath import Precision
from utils.render import FORMATS, Report, render

logger = logging.getLogger("hypconst")


class CommandParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, self.format_usage())


class HypConstContext:
    """Everything a command needs for one invocation."""

    def __init__(self, app: HypConst, args: argparse.Namespace) -> None:
        self.app = app
        self.args = args
        self.settings: Settings = app.settings

    @property
    def format(self) -> str:
        return self.args.format

    @property
    def jobs(self) -> int:
        jobs = self.args.jobs if self.args.jobs is not None else self.settings.jobs
        if jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {jobs}")
        return jobs

    @property
    def prec(self) -> Precision:
        bits = self.args.prec if self.args.prec is not None else self.settings.prec
        try:
            return Precision(bits, self.settings.max_prec)
        except (HypConstError, ValueError) as exc:
            raise UsageError(f"invalid precision: {exc}") from None

    def require(self, *names: str) -> tuple[Any, ...]:
        """Values of options this form of the command cannot run without."""
        missing = [name for name in names if getattr(self.args, name, None) is None]
        if missing:
            flags = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            raise UsageError(f"{self.args.command} {getattr(self.args, 'domain', '') or ''} needs {flags}".strip())
        return tuple(getattr(self.args, name) for name in names)

    def send(self, report: Report) -> None:
        output = render(report, self.format)
        if output:
            print(output, file=sys.stdout)


class HypConst:
    def __init__(self, settings: Optional[Settings] = None) -> None:
        self.settings: Settings = settings or Settings()
        self.cogs: dict[str, Cog] = {}

        self.parser = CommandParser(
            prog="hypconst",
            description="Curvature constants of bounded symmetric domains and the level thresholds they give.",
        )
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="command", parser_class=CommandParser)
        self.subparsers.required = True

        self.common = CommandParser(add_help=False)
        self.common.add_argument("--format", choices=FORMATS, default="text", help="output format")
        self.common.add_argument("--prec", type=int, default=None, help="precision in bits (HYPCONST_PREC)")
        self.common.add_argument("--jobs", type=int, default=None, help="worker processes (HYPCONST_JOBS)")
        self.common.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")

    def add_cog(self, cog: Cog) -> None:
        self.cogs[cog.qualified_name] = cog
        for cmd in cog.walk_commands():
            self.add_command(cog, cmd)

    def add_command(self, cog: Cog, cmd: Command) -> None:
        parser = self.subparsers.add_parser(cmd.name, help=cmd.brief, description=cmd.brief, parents=[self.common])
        for flags, kwargs in cmd.arguments:
            parser.add_argument(*flags, **kwargs)
        parser.set_defaults(cog=cog, cmd=cmd)

    def setup_hook(self) -> None:
        for extension in EXTENSIONS:
            try:
                importlib.import_module(extension).setup(self)
            except Exception:
                logger.exception("Failed to load extension %s", extension)

    def invoke(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except UsageError as exc:
            sys.stderr.write(exc.usage)
            print(f"hypconst: error: {exc}", file=sys.stderr)
            return UsageError.exit_code
        except SystemExit as exc:
            # --help
            return exc.code if isinstance(exc.code, int) else 0

        if args.verbose:
            logging.getLogger().setLevel(logging.INFO)

        ctx = HypConstContext(self, args)
        try:
            args.cog.invoke(args.cmd, ctx)
        except UsageError as exc:
            print(f"hypconst: error: {exc}", file=sys.stderr)
            return exc.exit_code
        except PrecisionExhausted as exc:
            print(f"hypconst: {exc}, raise HYPCONST_MAX_PREC to go further", file=sys.stderr)
            return exc.exit_code
        except HypConstError as exc:
            print(f"hypconst: {exc}", file=sys.stderr)
            return exc.exit_code

        return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        settings = load_settings()
    except UsageError as exc:
        print(f"hypconst: error: {exc}", file=sys.stderr)
        return exc.exit_code

    logging.basicConfig(level=settings.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    app = HypConst(settings)
    app.setup_hook()
    return app.invoke(argv)


if __name__ == "__main__":
    sys.exit(run())
