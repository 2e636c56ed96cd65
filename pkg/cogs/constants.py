from __future__ import annotations

from typing import TYPE_CHECKING

import utils
from utils.commands import Cog, argument, command
from utils.render import Report

if TYPE_CHECKING:
    from main import HypConst, HypConstContext


class Constants(Cog):
    "Curvature constants C_p of the Siegel half-space and the ball"

    @command(
        "cp",
        brief="D_p and C_p for one dimension p",
        arguments=(
            argument("domain", choices=("siegel", "ball")),
            argument("--g", type=int, help="genus, for siegel"),
            argument("--n", type=int, help="dimension of the ball"),
            argument("--p", type=int, required=True, help="dimension of the subvarieties"),
        ),
    )
    def cp(self, ctx: HypConstContext) -> None:
        if ctx.args.domain == "ball":
            n, p = ctx.require("n", "p")
            return ctx.send(Report([{"n": n, "p": p, "C": utils.ball_C(n, p)}]))

        g, p = ctx.require("g", "p")
        constant = utils.siegel_D(g, p, jobs=ctx.jobs)
        ctx.send(
            Report(
                [{"g": g, "p": p, "D": constant.D, "C": constant.C}],
                summary=[f"witness shape {constant.witness}, gamma = {constant.gamma}"],
            )
        )

    @command(
        "table",
        brief="C_p for every p next to the closed form",
        arguments=(
            argument("domain", choices=("siegel",)),
            argument("--g", type=int, required=True),
            argument("--layout", choices=("rows", "grid"), default="rows", help="one row per p, or r by g-k"),
        ),
    )
    def table(self, ctx: HypConstContext) -> None:
        g = ctx.args.g
        dimension = utils.dimension(g)

        records = []
        mismatches = 0
        for p in range(1, dimension + 1):
            k, r = utils.table_indices(p)
            constant = utils.siegel_D(g, p, jobs=ctx.jobs)
            closed = utils.table_C(g, p)
            mismatches += constant.C != closed
            records.append(
                {
                    "g": g,
                    "p": p,
                    "k": k,
                    "r": r,
                    "D": constant.D,
                    "C": constant.C,
                    "table": closed,
                    "match": constant.C == closed,
                }
            )

        summary = [f"{dimension - mismatches} of {dimension} values match the closed form"]
        if ctx.args.layout == "grid":
            records = self.grid(g, records)
            summary.insert(0, "cells are (g+1) C_p")

        ctx.send(Report(records, summary=summary, title=f"H_{g}, n = {dimension}"))

    @staticmethod
    def grid(g: int, records: list[dict]) -> list[dict]:
        """Rearranges per-p records into rows r and columns g-k."""
        cells = {(record["r"], g - record["k"]): record["D"] for record in records}
        return [{"r": r, **{f"g-k={width}": cells.get((r, width)) for width in range(1, g + 1)}} for r in range(g)]


def setup(app: HypConst) -> None:
    app.add_cog(Constants(app))
