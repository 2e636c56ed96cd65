from __future__ import annotations

from typing import TYPE_CHECKING, Any

import utils
from utils.commands import Cog, argument, command
from utils.exactmath import parse_rational
from utils.render import Report
from utils.thresholds import LevelReport

if TYPE_CHECKING:
    from main import HypConst, HypConstContext


def level_record(report: LevelReport) -> dict[str, Any]:
    record: dict[str, Any] = {"g": report.g} if report.g is not None else {}
    record.update(report.details)
    record.update(
        quantity=report.quantity,
        level=report.certified_level,
        published=report.published_value,
        published_strict=report.published_strict if report.published_value is not None else None,
        agrees=report.agrees,
        offset=report.offset,
    )
    return record


class Levels(Cog):
    "Certified level, dimension and codimension thresholds"

    @command(
        "level",
        brief="smallest admissible level structure",
        arguments=(
            argument("kind", choices=("ag", "ag-uniform", "mg", "ball", "ht06")),
            argument("--g", type=int),
            argument("--n", type=int),
            argument("--p", type=int),
            argument("--l", type=int),
        ),
    )
    def level(self, ctx: HypConstContext) -> None:
        kind = ctx.args.kind
        if kind == "ag":
            (g,) = ctx.require("g")
            report = utils.ag_kobayashi_level(g)
            return ctx.send(
                Report(
                    [level_record(report)],
                    summary=[f"threshold {report.quantity}, smallest level {report.certified_level}"],
                )
            )

        if kind == "ag-uniform":
            report = utils.ag_uniform_level(ctx.prec)
            records = [level_record(report)] + [level_record(check) for check in report.checks]
            return ctx.send(
                Report(
                    records,
                    summary=[
                        f"e (2 pi)^2 / 2 ~ {float(report.quantity):.6f}, smallest level {report.certified_level}",
                        f"{len(report.checks)} genus check(s) below the uniform bound",
                    ],
                )
            )

        if kind == "mg":
            genera = [ctx.args.g] if ctx.args.g is not None else sorted(utils.PUBLISHED_MG_LEVELS)
            reports = [utils.mg_level(g, jobs=ctx.jobs) for g in genera]
            diverging = [str(report.g) for report in reports if report.agrees is False]
            summary = [f"differs from the published value at g = {', '.join(diverging)}"] if diverging else []
            return ctx.send(Report([level_record(report) for report in reports], summary=summary))

        if kind == "ball":
            if ctx.args.l is not None:
                l = ctx.args.l
                p = utils.ball_min_general_type_dim(l, ctx.prec)
                return ctx.send(
                    Report([{"l": l, "p": p}], summary=[f"subvarieties of dimension >= {p} are of general type"])
                )
            n, p = ctx.require("n", "p")
            report = utils.ball_level(n, p, ctx.prec)
            return ctx.send(
                Report([level_record(report)], summary=[f"smallest level {report.certified_level}"])
            )

        if ctx.args.g is not None:
            g = ctx.args.g
            report = utils.ht06_level(utils.dimension(g), utils.holomorphic_bound(g), g=g)
        else:
            (n,) = ctx.require("n")
            report = utils.ht06_level(n, utils.ball_C(n, 1))
        ctx.send(Report([level_record(report)], summary=[f"lambda = {report.quantity}"]))

    @command(
        "codim",
        brief="largest codimension of subvarieties certified of general type",
        arguments=(argument("domain", choices=("ag",)), argument("--g", type=int, required=True)),
    )
    def codim(self, ctx: HypConstContext) -> None:
        g = ctx.args.g
        c = utils.ag_max_general_type_codim(g)
        ctx.send(Report([{"g": g, "codim": c, "p": utils.dimension(g) - c}]))

    @command(
        "volume-factor",
        brief="lower bound factor ((C_p - lambda/alpha) / (2 pi))^q on volumes",
        arguments=(
            argument("--cp", type=parse_rational, required=True),
            argument("--lambda", dest="lambda_", type=parse_rational, required=True),
            argument("--alpha", type=parse_rational, required=True),
            argument("--q", type=int, required=True),
        ),
    )
    def volume_factor(self, ctx: HypConstContext) -> None:
        args = ctx.args
        factor = utils.volume_factor(args.cp, args.lambda_, args.alpha, args.q, ctx.prec)
        ctx.send(Report([{"cp": args.cp, "lambda": args.lambda_, "alpha": args.alpha, "q": args.q, "factor": factor}]))


def setup(app: HypConst) -> None:
    app.add_cog(Levels(app))
