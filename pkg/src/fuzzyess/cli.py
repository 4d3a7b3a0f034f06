"""Command line front end.

Subcommands:
    analyze        stability memberships and/or equilibrium degrees of a game
    verify         containment spot-check over random games
    sweep-staghunt closed-form vs pipeline sweep over stag hunt payoffs
    curves         satisfaction/stability curves for one strategy pair

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 numerical failure.  Output is byte-deterministic for fixed inputs:
numbers are rounded half away from zero at the requested precision and
nothing is written until a command has fully succeeded.
"""

from __future__ import annotations

import argparse
import sys
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

import numpy as np

from .ess import fuzzy_ess, resistibility
from .game import (
    BiGame,
    GameFormatError,
    SymGame,
    parse_game_file,
    random_symmetric_game,
    serialize_game,
    staghunt_game,
)
from .nash import fuzzy_nash, verify_theorem1
from .numerics import NumericError
from .satisfaction import SFConfig

USAGE_ERROR = 2
NUMERIC_ERROR = 3


def fmt(value: float, precision: int) -> str:
    """Fixed-point display rounding, ties away from zero."""
    q = Decimal(repr(float(value))).quantize(
        Decimal(1).scaleb(-precision), rounding=ROUND_HALF_UP
    )
    if q == 0:
        q = abs(q)  # never print -0
    return format(q, "f")


def _config(args) -> SFConfig:
    tnorm = getattr(args, "tnorm", "product")
    return SFConfig(
        tnorm=tnorm,
        mode="exact" if tnorm == "product" else "grid",
        grid_resolution=args.grid,
    )


def _emit(text: str, destination: str | None) -> None:
    if destination is None:
        sys.stdout.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def _load_game(path: str) -> SymGame | BiGame:
    try:
        return parse_game_file(path)
    except FileNotFoundError:
        raise GameFormatError(f"game file not found: {path}") from None


def _matrix_lines(title, names_row, names_col, matrix, precision, diag_blank):
    width = max(6, precision + 3, *(len(n) for n in names_row + names_col))
    lines = [title]
    header = " " * width + "  " + "  ".join(n.ljust(width) for n in names_col)
    lines.append(header.rstrip())
    for i, name in enumerate(names_row):
        cells = []
        for j in range(len(names_col)):
            v = matrix[i][j]
            if diag_blank and i == j:
                cells.append(".".ljust(width))
            else:
                cells.append(fmt(v, precision).ljust(width))
        lines.append((name.ljust(width) + "  " + "  ".join(cells)).rstrip())
    return lines


def _json_round(value, precision):
    if isinstance(value, dict):
        return {k: _json_round(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_round(v, precision) for v in value]
    if isinstance(value, float):
        if not np.isfinite(value):
            return None
        return float(fmt(value, precision))
    return value


def cmd_analyze(args) -> int:
    game = _load_game(args.game)
    cfg = _config(args)
    want_ess = args.mode in ("ess", "both")
    want_nash = args.mode in ("nash", "both")
    if want_ess and not isinstance(game, SymGame):
        raise GameFormatError(
            "stability analysis needs a symmetric game; use --mode nash"
        )
    ess_report = fuzzy_ess(game, cfg) if want_ess else None
    nash_report = fuzzy_nash(game, cfg) if want_nash else None
    p = args.precision

    if args.format == "json":
        import json

        doc: dict = {"game": args.game, "mode": args.mode}
        if ess_report is not None:
            doc["ess"] = _json_round(ess_report.as_dict(), p)
        if nash_report is not None:
            doc["nash"] = _json_round(nash_report.as_dict(), p)
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0

    if args.format == "csv":
        rows = ["record,strategy,opponent,value"]
        if ess_report is not None:
            names = ess_report.strategies
            for k, name in enumerate(names):
                rows.append(
                    f"membership,{name},,{fmt(ess_report.memberships[k], p)}"
                )
            for rank, name in enumerate(ess_report.ranking, start=1):
                rows.append(f"rank,{name},,{rank}")
            for i, si in enumerate(names):
                for j, sj in enumerate(names):
                    if i != j:
                        rows.append(
                            f"resistibility,{si},{sj},"
                            f"{fmt(ess_report.resistibility[i, j], p)}"
                        )
        if nash_report is not None:
            for i, si in enumerate(nash_report.strategies1):
                for j, sj in enumerate(nash_report.strategies2):
                    rows.append(
                        f"nash_degree,{si},{sj},{fmt(nash_report.degrees[i, j], p)}"
                    )
            if nash_report.symmetric_degrees is not None:
                for k, name in enumerate(nash_report.strategies1):
                    rows.append(
                        f"nash_diagonal,{name},,"
                        f"{fmt(nash_report.symmetric_degrees[k], p)}"
                    )
        _emit("\n".join(rows) + "\n", args.output)
        return 0

    lines = [f"game: {args.game}"]
    if isinstance(game, SymGame):
        lines.append(f"strategies: {', '.join(game.strategies)}")
    else:
        lines.append(f"player 1 strategies: {', '.join(game.strategies1)}")
        lines.append(f"player 2 strategies: {', '.join(game.strategies2)}")
    if ess_report is not None:
        lines.append("")
        lines.append("evolutionary stability membership")
        width = max(len(n) for n in ess_report.strategies)
        for k, name in enumerate(ess_report.strategies):
            lines.append(
                f"  {name.ljust(width)}  {fmt(ess_report.memberships[k], p)}"
            )
        lines.append(f"ranking: {' > '.join(ess_report.ranking)}")
        lines.append("")
        lines.extend(
            _matrix_lines(
                "resistibility (incumbent row vs mutant column)",
                list(ess_report.strategies),
                list(ess_report.strategies),
                ess_report.resistibility,
                p,
                diag_blank=True,
            )
        )
    if nash_report is not None:
        lines.append("")
        lines.extend(
            _matrix_lines(
                "equilibrium degrees (player 1 rows, player 2 columns)",
                list(nash_report.strategies1),
                list(nash_report.strategies2),
                nash_report.degrees,
                p,
                diag_blank=False,
            )
        )
        if nash_report.symmetric_degrees is not None:
            lines.append("")
            lines.append("diagonal profiles")
            width = max(len(n) for n in nash_report.strategies1)
            for k, name in enumerate(nash_report.strategies1):
                lines.append(
                    f"  {name.ljust(width)}  "
                    f"{fmt(nash_report.symmetric_degrees[k], p)}"
                )
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    try:
        sizes = sorted({int(s) for s in args.sizes.split(",") if s.strip()})
    except ValueError:
        raise GameFormatError(f"cannot parse --sizes {args.sizes!r}") from None
    if not sizes or any(s < 2 for s in sizes):
        raise GameFormatError("--sizes must list integers >= 2")
    if args.count < 1:
        raise GameFormatError("--count must be >= 1")
    cfg = SFConfig(grid_resolution=args.grid)
    rng = np.random.default_rng(args.seed)
    worst = np.inf
    failures = 0
    first_failure = None
    for _ in range(args.count):
        size = sizes[int(rng.integers(len(sizes)))]
        game = random_symmetric_game(rng, size)
        check = verify_theorem1(game, cfg)
        worst = min(worst, float(check.margins.min()))
        if not check.passed:
            failures += 1
            if first_failure is None:
                first_failure = game
    lines = [
        f"checked {args.count} random symmetric games "
        f"(sizes {','.join(map(str, sizes))}, seed {args.seed})",
        "containment: stability membership <= diagonal equilibrium degree",
        f"violations: {failures}",
        f"worst margin: {worst:.3e}",
    ]
    if failures:
        import json

        sys.stderr.write(
            "first violating game:\n"
            + json.dumps(serialize_game(first_failure))
            + "\n"
        )
        _emit("\n".join(lines) + "\n", args.output)
        return 1
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_sweep_staghunt(args) -> int:
    try:
        lo_s, hi_s, step_s = args.h.split(":")
        lo, hi, step = float(lo_s), float(hi_s), float(step_s)
    except ValueError:
        raise GameFormatError(
            f"--h must look like LO:HI:STEP, got {args.h!r}"
        ) from None
    g = args.g
    if step <= 0.0 or not 0.0 < lo <= hi or hi >= g:
        raise GameFormatError(
            "need 0 < LO <= HI < G and STEP > 0 for the hare payoff sweep"
        )
    cfg = SFConfig(grid_resolution=args.grid)
    p = args.precision
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    rows = ["h,h_over_g,mu_H,mu_G"]
    for k in range(count):
        h = lo + k * step
        report = fuzzy_ess(staghunt_game(g, h), cfg)
        mu = {
            name: report.memberships[i]
            for i, name in enumerate(report.strategies)
        }
        rows.append(
            f"{fmt(h, p)},{fmt(h / g, p)},{fmt(mu['H'], p)},{fmt(mu['G'], p)}"
        )
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def _resolve_pair(game: SymGame, spec: str) -> tuple[int, int]:
    parts = [s.strip() for s in spec.split(",")]
    if len(parts) != 2:
        raise GameFormatError(f"--pair must be I,J, got {spec!r}")
    out = []
    for part in parts:
        if part in game.strategies:
            out.append(game.strategies.index(part))
        else:
            try:
                k = int(part)
            except ValueError:
                raise GameFormatError(f"unknown strategy {part!r}") from None
            if not 1 <= k <= game.size:
                raise GameFormatError(
                    f"strategy index {k} out of range 1..{game.size}"
                )
            out.append(k - 1)
    if out[0] == out[1]:
        raise GameFormatError("--pair needs two distinct strategies")
    return out[0], out[1]


def cmd_curves(args) -> int:
    game = _load_game(args.game)
    if not isinstance(game, SymGame):
        raise GameFormatError("curves are defined for symmetric games only")
    i, j = _resolve_pair(game, args.pair)
    cfg = _config(args)
    p = args.precision
    xp = max(p, 9)  # abscissae keep extra digits so plots stay smooth

    from .ess import _PairCurve  # shared evaluation path

    curve = _PairCurve(game, i, j)
    eps = np.linspace(0.0, 1.0, cfg.grid_resolution + 1)
    svals = curve.values(eps, cfg)
    mu = np.minimum.accumulate(svals)
    balance = np.minimum(mu, eps)
    r = resistibility(game, i, j, cfg)

    blocks = []
    rows = ["eps,sf,mu,min_mu_eps"]
    for k in range(len(eps)):
        rows.append(
            f"{fmt(eps[k], xp)},{fmt(svals[k], p)},"
            f"{fmt(mu[k], p)},{fmt(balance[k], p)}"
        )
    blocks.append("\n".join(rows))
    blocks.append("crossing\n" + fmt(r, p))
    si, sj = game.strategies[i], game.strategies[j]
    labels = (
        (f"{si} vs {si}", game.payoff[i][i]),
        (f"{si} vs {sj}", game.payoff[i][j]),
        (f"{sj} vs {si}", game.payoff[j][i]),
        (f"{sj} vs {sj}", game.payoff[j][j]),
    )
    rows = ["payoff,x,membership"]
    for label, value in labels:
        for x, m in value.polyline():
            rows.append(f"{label},{fmt(x, xp)},{fmt(m, p)}")
    blocks.append("\n".join(rows))
    _emit("\n\n".join(blocks) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyess",
        description=(
            "Evolutionary stability and equilibrium degrees for games "
            "with symmetric triangular fuzzy payoffs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, tnorm=True):
        if tnorm:
            sp.add_argument(
                "--tnorm",
                choices=("product", "min"),
                default="product",
                help="T-norm for comparisons; 'min' switches to grid quadrature",
            )
        sp.add_argument(
            "--grid",
            type=int,
            default=2048,
            metavar="N",
            help="samples per unit interval (default 2048)",
        )
        sp.add_argument(
            "--precision",
            type=int,
            default=3,
            metavar="K",
            help="decimal places in the output (default 3)",
        )
        sp.add_argument(
            "--output", metavar="PATH", help="write to a file instead of stdout"
        )

    sp = sub.add_parser("analyze", help="analyze one game file")
    sp.add_argument("--game", required=True, metavar="PATH")
    sp.add_argument("--mode", choices=("ess", "nash", "both"), default="both")
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser(
        "verify", help="containment check over seeded random games"
    )
    sp.add_argument("--count", type=int, default=100, metavar="N")
    sp.add_argument("--seed", type=int, default=42, metavar="S")
    sp.add_argument(
        "--sizes",
        default="2,3,4,5",
        metavar="LIST",
        help="comma-separated strategy counts to draw from",
    )
    common(sp, tnorm=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser(
        "sweep-staghunt",
        help="sweep the crisp stag hunt and compare with the closed form",
    )
    sp.add_argument("--g", type=float, default=3.0, metavar="G")
    sp.add_argument(
        "--h", default="0.25:2.75:0.25", metavar="LO:HI:STEP",
        help="hare payoff sweep (inclusive endpoints)",
    )
    common(sp, tnorm=False)
    sp.set_defaults(func=cmd_sweep_staghunt)

    sp = sub.add_parser(
        "curves", help="satisfaction and stability curves for one pair"
    )
    sp.add_argument("--game", required=True, metavar="PATH")
    sp.add_argument(
        "--pair",
        required=True,
        metavar="I,J",
        help="1-based indices or strategy names, e.g. 1,3 or s1,s3",
    )
    common(sp)
    sp.set_defaults(func=cmd_curves)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GameFormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except NumericError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return NUMERIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
