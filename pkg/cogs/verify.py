from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import utils
from utils.commands import Cog, argument, command
from utils.oracle import BRUTE_FORCE_MAX_GENUS, NUMERIC_MAX_GENUS
from utils.render import Report

if TYPE_CHECKING:
    from main import HypConst, HypConstContext


class Verify(Cog):
    "Cross-checks of the Siegel constants against the closed form and the oracles"

    logger: logging.Logger

    @command(
        "verify",
        brief="compare siegel_D with the closed form or an oracle",
        arguments=(
            argument("domain", choices=("siegel",)),
            argument("--gmax", type=int, required=True),
            argument("--oracle", choices=("exact", "numeric", "table"), default="table"),
            argument("--grid", type=int, default=40, help="grid steps of the numeric oracle"),
            argument("--tolerance", type=float, default=0.05, help="allowed excess of the numeric oracle"),
        ),
    )
    def verify(self, ctx: HypConstContext) -> None:
        oracle = ctx.args.oracle
        gmax = ctx.args.gmax

        if oracle == "table":
            check = utils.verify_table(gmax, jobs=ctx.jobs)
            mismatches = [
                {"g": m.g, "p": m.p, "computed": m.computed, "table": m.table} for m in check.mismatches
            ]
            checked = check.checked
        else:
            checked, mismatches = self.against_oracle(ctx, oracle, gmax)

        ctx.send(
            Report(
                mismatches,
                summary=[f"{oracle}: {checked} value(s) checked up to g={gmax}, {len(mismatches)} mismatch(es)"],
            )
        )
        if mismatches:
            raise utils.VerificationMismatch(mismatches)

    def against_oracle(self, ctx: HypConstContext, oracle: str, gmax: int) -> tuple[int, list[dict]]:
        limit = BRUTE_FORCE_MAX_GENUS if oracle == "exact" else NUMERIC_MAX_GENUS
        if not 2 <= gmax <= limit:
            raise utils.PreconditionError("gmax", gmax, f"2 <= gmax <= {limit} for the {oracle} oracle")

        checked = 0
        mismatches = []
        for g in range(2, gmax + 1):
            for p in range(1, utils.dimension(g) + 1):
                exact = utils.siegel_D(g, p, jobs=ctx.jobs).D
                checked += 1

                if oracle == "exact":
                    found = utils.brute_force_D(g, p, jobs=ctx.jobs)
                    if found != exact:
                        mismatches.append({"g": g, "p": p, "D": exact, "oracle": found})
                    continue

                found = utils.numeric_D(g, p, ctx.args.grid)
                # the exact minimum never exceeds a feasible evaluation
                if exact > found + 1e-9 or found - exact > ctx.args.tolerance:
                    mismatches.append({"g": g, "p": p, "D": exact, "oracle": found})

            self.logger.info("%s oracle done for g=%d", oracle, g)

        return checked, mismatches


def setup(app: HypConst) -> None:
    Verify.logger = logging.getLogger("hypconst")
    app.add_cog(Verify(app))
