"""Command-line surface.

Exit codes: 0 success / property holds; 1 property fails or the
construction gave up; 2 usage, domain, or parse errors.  Magnitudes are
printed in both rendered ("2.26e289") and raw log10 forms because the
interesting values overflow every native float format.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, construct, exact, optimize, verify
from .core import (
    GEKR,
    ArrayMatrix,
    LogMagnitude,
    ModelParams,
    PatternSet,
    parse_alpha,
    parse_array,
    render_magnitude,
)

_TABLE_NS = (10_000, 100_000, 300_000, 1_000_000)
_TABLE_ALPHAS = {
    "independent": ("0.1669", "0.2", "1/3", "0.5", "2/3", "0.7395", "0.8"),
    "fixed-asymptotic": ("0.1685", "0.2", "1/3", "0.5", "2/3", "0.7395", "0.8"),
}


def _split_tokens(text: str) -> list[str]:
    return [tok for tok in (t.strip() for t in text.split(",")) if tok]


def _parse_n(parser: argparse.ArgumentParser, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        parser.error(f"bad column count {token!r}")
    if value != int(value) or value < 1:
        parser.error(f"column count must be a positive integer, got {token!r}")
    return int(value)


def _resolve_alpha(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> Fraction:
    """Density from --alpha or --k/--n, validated to (0, 1]."""
    if args.alpha is not None and getattr(args, "k", None) is not None:
        parser.error("give either --alpha or --k, not both")
    if args.alpha is not None:
        try:
            alpha = parse_alpha(args.alpha)
        except ValueError as exc:
            parser.error(str(exc))
    elif getattr(args, "k", None) is not None:
        alpha = Fraction(args.k, args.n)
    else:
        parser.error("one of --alpha or --k is required")
    if not 0 < alpha <= 1:
        parser.error(f"density must be in (0, 1], got {alpha}")
    return alpha


def _integer_weight(
    parser: argparse.ArgumentParser, alpha: Fraction, n: int
) -> int:
    r = alpha * n
    if r.denominator != 1:
        parser.error(
            f"fixed-weight model needs an integer weight: alpha*n = {alpha}*{n}"
        )
    return int(r)


def cmd_bound(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    alpha = _resolve_alpha(parser, args)
    try:
        if args.model == "independent":
            value = bounds.zeta(float(alpha), args.n)
        elif args.model == "fixed-asymptotic":
            value = bounds.nu(alpha, args.n, mode="asymptotic")
        else:
            _integer_weight(parser, alpha, args.n)
            value = bounds.nu(alpha, args.n, mode="exact-sum")
    except ValueError as exc:
        parser.error(str(exc))
    mantissa, exponent = value.scientific()
    if args.json:
        print(
            json.dumps(
                {
                    "model": args.model,
                    "alpha": float(alpha),
                    "n": args.n,
                    "log10": value.log10,
                    "mantissa": mantissa,
                    "exponent": exponent,
                }
            )
        )
    else:
        print(render_magnitude(value))
        print(f"log10 = {value.log10:.9f}")
    return 0


def cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    alpha_tokens = (
        _split_tokens(args.alphas) if args.alphas is not None
        else list(_TABLE_ALPHAS[args.model])
    )
    n_tokens = (
        _split_tokens(args.ns) if args.ns is not None
        else [str(n) for n in _TABLE_NS]
    )
    if not alpha_tokens:
        parser.error("alpha grid is empty")
    if not n_tokens:
        parser.error("n grid is empty")
    grid = []
    for tok in alpha_tokens:
        try:
            alpha = parse_alpha(tok)
        except ValueError as exc:
            parser.error(str(exc))
        if not 0 < alpha <= 1:
            parser.error(f"density must be in (0, 1], got {tok!r}")
        grid.append((tok, alpha))
    ns = [_parse_n(parser, tok) for tok in n_tokens]

    print("alpha,n,log10_m,rendered")
    for tok, alpha in grid:
        for n in ns:
            if args.model == "independent":
                value = bounds.zeta(float(alpha), n)
            else:
                value = bounds.nu(alpha, n, mode="asymptotic")
            print(f"{tok},{n},{value.log10:.9f},{render_magnitude(value)}")
    return 0


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            text = Path(args.path).read_text()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    try:
        array = parse_array(text)
        patterns = (
            PatternSet.from_text(args.patterns) if args.patterns else GEKR
        )
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    report = verify.find_deficient(array, patterns, workers=args.workers)
    if report.ok:
        print(f"ok: all {report.total_checked} triples covered")
        return 0
    print(
        f"deficient: {report.deficient_count} of {report.total_checked} triples"
    )
    if args.list_deficient:
        for (i, j, l), missing in zip(report.deficient, report.missing):
            gaps = ",".join("".join(map(str, pat)) for pat in sorted(missing))
            print(f"{i} {j} {l} missing={gaps}")
    return 1


def cmd_construct(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    alpha = _resolve_alpha(parser, args)
    try:
        if args.model == "independent":
            params = ModelParams.independent(alpha, args.n)
        else:
            params = ModelParams.fixed_weight(args.n, _integer_weight(parser, alpha, args.n))
        strategy = construct.Strategy(args.strategy)
        if args.m is None and strategy is not construct.Strategy.GREEDY:
            parser.error("--m is required for this strategy")
        config = construct.ConstructionConfig(
            params=params,
            m=args.m if args.m is not None else 0,
            seed=args.seed,
            strategy=strategy,
            max_resamples=args.max_resamples,
            attempts_per_row=args.attempts_per_row,
        )
    except ValueError as exc:
        parser.error(str(exc))
    result = construct.run(config)
    if not result.success:
        print(
            f"construction failed after {result.resamples_used} resamples",
            file=sys.stderr,
        )
        return 1
    assert result.array is not None
    text = result.array.to_text()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_optimize(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.model == "independent":
        alpha_star, p_star = optimize.argmin_independent(args.n)
        print(f"alpha_star = {alpha_star:.6f}")
        print(f"p = {render_magnitude(p_star)}")
        print(f"log10 p = {p_star.log10:.9f}")
        value = bounds.zeta(alpha_star, args.n)
        print(f"bound = {render_magnitude(value)}")
        print(f"log10 bound = {value.log10:.9f}")
    else:
        alpha_star, mu_star = optimize.argmin_mu()
        print(f"alpha_star = {alpha_star:.6f}")
        print(f"mu_star = {mu_star:.9f}")
    return 0


def cmd_figure(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        table = optimize.figure_data(args.figure, grid_step=args.grid_step)
    except ValueError as exc:
        parser.error(str(exc))
    print(",".join(table.columns))
    for row in table.rows:
        print(",".join("" if cell is None else repr(cell) for cell in row))
    return 0


def cmd_maxfamily(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        result = exact.max_family(args.n, args.k, node_limit=args.node_limit)
    except ValueError as exc:
        parser.error(str(exc))
    print(f"size: {result.size}")
    print(f"optimal: {'true' if result.optimal else 'false'}")
    matrix = exact.witness_matrix(args.n, result.witness)
    sys.stdout.write(matrix.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gekr",
        description=(
            "Row-count bounds, verification, and randomized construction of "
            "binary arrays where every three rows cover the patterns 011, "
            "101, 110, 111 across their columns."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate one row-count bound")
    p_bound.add_argument(
        "--model",
        required=True,
        choices=["independent", "fixed-asymptotic", "fixed-exact"],
    )
    p_bound.add_argument("--alpha", help="density as decimal or fraction, e.g. 2/3")
    p_bound.add_argument("--k", type=int, help="row weight (fixed-weight models)")
    p_bound.add_argument("--n", type=int, required=True, help="column count")
    p_bound.add_argument("--json", action="store_true")

    p_table = sub.add_parser("table", help="bound table over an alpha x n grid")
    p_table.add_argument(
        "--model", required=True, choices=["independent", "fixed-asymptotic"]
    )
    p_table.add_argument("--alphas", help="comma-separated densities")
    p_table.add_argument("--ns", help="comma-separated column counts")

    p_verify = sub.add_parser("verify", help="check an array file ('-' = stdin)")
    p_verify.add_argument("path")
    p_verify.add_argument("--patterns", help="comma-separated triples, e.g. 011,111")
    p_verify.add_argument("--list-deficient", action="store_true")
    p_verify.add_argument("--workers", type=int, default=None)

    p_construct = sub.add_parser("construct", help="build an array by resampling")
    p_construct.add_argument(
        "--model", default="fixed", choices=["independent", "fixed"]
    )
    p_construct.add_argument("--alpha", help="density as decimal or fraction")
    p_construct.add_argument("--k", type=int, help="row weight (fixed model)")
    p_construct.add_argument("--n", type=int, required=True)
    p_construct.add_argument("--m", type=int, help="target row count")
    p_construct.add_argument("--seed", type=int, default=0)
    p_construct.add_argument(
        "--strategy",
        default="moser-tardos",
        choices=[s.value for s in construct.Strategy],
    )
    p_construct.add_argument("--max-resamples", type=int, default=1_000_000)
    p_construct.add_argument("--attempts-per-row", type=int, default=1_000)
    p_construct.add_argument("--output", help="write the array here instead of stdout")

    p_optimize = sub.add_parser("optimize", help="best density for a model")
    p_optimize.add_argument(
        "--model", required=True, choices=["independent", "fixed"]
    )
    p_optimize.add_argument("--n", type=int, default=10_000)

    p_figure = sub.add_parser("figure", help="CSV data behind a reference figure")
    p_figure.add_argument("figure", type=int, choices=[1, 2, 3, 4])
    p_figure.add_argument("--grid-step", type=float, default=0.005)

    p_max = sub.add_parser("maxfamily", help="exact largest GEKR family")
    p_max.add_argument("--n", type=int, required=True)
    p_max.add_argument("--k", type=int, required=True)
    p_max.add_argument("--node-limit", type=int, default=5_000_000)

    return parser


_COMMANDS = {
    "bound": cmd_bound,
    "table": cmd_table,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "optimize": cmd_optimize,
    "figure": cmd_figure,
    "maxfamily": cmd_maxfamily,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
