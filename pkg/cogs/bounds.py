from __future__ import annotations

from typing import TYPE_CHECKING

import utils
from utils.commands import Cog, argument, command
from utils.extra import parse_int_list
from utils.render import Report

if TYPE_CHECKING:
    from main import HypConst, HypConstContext

BOUND_KINDS = {
    "weissauer": utils.BoundKind.WEISSAUER_BASE,
    "grushevsky": utils.BoundKind.GRUSHEVSKY_EFF,
    "ht06": utils.BoundKind.HT06_BASE,
}


class Bounds(Cog):
    "Effectivity bounds and the isotropy criteria of singular quotients"

    @command(
        "alpha",
        brief="published lower bounds for alpha_eff and alpha_base",
        arguments=(
            argument("domain", nargs="?", choices=("siegel", "ball"), default="siegel"),
            argument("--g", type=int),
            argument("--n", type=int),
            argument("--bound", choices=tuple(BOUND_KINDS), default=None),
        ),
    )
    def alpha(self, ctx: HypConstContext) -> None:
        args = ctx.args
        if args.domain == "ball":
            (n,) = ctx.require("n")
            kind = utils.BoundKind.HT06_BASE if args.bound == "ht06" else utils.BoundKind.BAKKER_TSIMERMAN
            parameter = n
        else:
            g, bound = ctx.require("g", "bound")
            kind = BOUND_KINDS[bound]
            # the general bound is stated in terms of the dimension
            parameter = utils.dimension(g) if kind is utils.BoundKind.HT06_BASE else g

        bound = utils.alpha_bound(kind, parameter, ctx.prec)
        ctx.send(
            Report(
                [
                    {
                        "kind": bound.kind.value,
                        "parameter": parameter,
                        "value": bound.value,
                        "applicability": bound.applicability,
                    }
                ]
            )
        )

    @command(
        "beta",
        brief="beta for one isotropy datum, with the group order bound",
        arguments=(
            argument("--a", type=parse_int_list, required=True, help="rotation exponents a1,a2,..."),
            argument("--r", type=int, required=True, help="order of the cyclic action"),
            argument("--p", type=int, required=True),
            argument("--group-order", type=int, default=None, help="defaults to r"),
        ),
    )
    def beta(self, ctx: HypConstContext) -> None:
        args = ctx.args
        data = utils.IsotropyData(args.a, args.r)
        group_order = args.r if args.group_order is None else args.group_order
        ctx.send(
            Report(
                [
                    {
                        "a": list(data.a),
                        "r": data.r,
                        "p": args.p,
                        "beta": utils.beta_level(data, args.p),
                        "upper_bound": utils.beta_upper_bound(args.p, group_order),
                    }
                ]
            )
        )

    @command(
        "condition-i",
        brief="whether the d smallest exponents add up to at least r",
        arguments=(
            argument("--a", type=parse_int_list, required=True),
            argument("--r", type=int, required=True),
            argument("--d", type=int, required=True),
        ),
    )
    def condition_i(self, ctx: HypConstContext) -> None:
        args = ctx.args
        data = utils.IsotropyData(args.a, args.r)
        holds = utils.check_condition_I(data, args.d)
        ctx.send(Report([{"a": list(data.a), "r": data.r, "d": args.d, "holds": holds}]))


def setup(app: HypConst) -> None:
    app.add_cog(Bounds(app))
