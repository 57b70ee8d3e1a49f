"""Command line front end for the exact distribution calculus.

Every value read or written is an exact rational; decimal columns appear
only on request (``--decimal N``) and only as extra columns next to the
exact ones.  Exit status: 0 on success, 1 on domain errors (no primitive
exists, endpoints off the grid, degenerate moment ratios), 2 on usage and
parse errors.

Flag values starting with a dash need the ``=`` form, e.g. ``--a=-1/2``.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

from .calculus import (
    NoPrimitive,
    derivative,
    expectation,
    interval,
    primitive,
)
from .dist import Dist, total
from .formats import FormatError, parse_dist, parse_intensive
from .intensive import SCALAR_MODULE, pair
from .scalars import Fraction, ONE, ZERO, Step, format_scalar, parse_scalar
from .tensor import convolve


class ReportError(ValueError):
    """A report statistic is undefined for the given distribution."""


class UsageError(Exception):
    """Flag combination that the parser alone cannot reject."""


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation."""

    command: str
    step: Step
    inputs: tuple = ()
    output: str | None = None
    out_dir: str | None = None
    n: int | None = None
    a: Fraction | None = None
    b: Fraction | None = None
    decimal: int | None = None
    plot: bool = False


def _scalar_arg(text: str) -> Fraction:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _step_arg(text: str) -> Step:
    value = _scalar_arg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("step h must be nonzero")
    return Step(value)


def _power_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("n must be at least 1")
    return n


def _places_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("decimal places must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extcalc",
        description="Exact calculus of finitely supported distributions on the line.",
        epilog="Values are exact rationals 'p/q'. Use --a=-1/2 for negative flag values.",
    )

    step = argparse.ArgumentParser(add_help=False)
    step.add_argument(
        "--h", type=_step_arg, default=Step(ONE), metavar="P/Q",
        help="grid step, a nonzero rational (default 1)",
    )
    step.add_argument(
        "--decimal", type=_places_arg, default=None, metavar="N",
        help="append an N-place decimal approximation column",
    )

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument(
        "-o", "--output", default=None, metavar="FILE",
        help="output file (default: standard output)",
    )

    plot = argparse.ArgumentParser(add_help=False)
    plot.add_argument(
        "--plot", action="store_true",
        help="also render a figure next to the output file",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derivative", parents=[step, out, plot],
                       help="difference-quotient derivative of a distribution")
    p.add_argument("input", help="distribution file")

    p = sub.add_parser("primitive", parents=[step, out, plot],
                       help="finitely supported antiderivative, if one exists")
    p.add_argument("input", help="distribution file")

    p = sub.add_parser("interval", parents=[step, out, plot],
                       help="uniform distribution on a grid interval")
    p.add_argument("--a", type=_scalar_arg, required=True, metavar="P/Q",
                   help="left endpoint")
    p.add_argument("--b", type=_scalar_arg, required=True, metavar="P/Q",
                   help="right endpoint (excluded from the grid)")

    p = sub.add_parser("convolve", parents=[step, out, plot],
                       help="convolution of two distributions along +")
    p.add_argument("first", help="distribution file")
    p.add_argument("second", help="distribution file")

    p = sub.add_parser("pair", parents=[step, out],
                       help="pair a distribution against an intensive quantity")
    p.add_argument("dist", help="distribution file")
    p.add_argument("fn", help="intensive quantity file ('point value' lines plus 'default value')")

    p = sub.add_parser("conv-pow", parents=[step, plot],
                       help="convolution powers 1..n with a moment summary")
    p.add_argument("input", help="distribution file")
    p.add_argument("--n", type=_power_arg, required=True, metavar="N",
                   help="highest power (>= 1)")
    p.add_argument("--out-dir", required=True, metavar="DIR",
                   help="directory for the per-power CSVs and summary.csv")

    p = sub.add_parser("info", help="print summary statistics of a distribution")
    p.add_argument("input", help="distribution file")

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    inputs = tuple(
        getattr(args, name)
        for name in ("input", "first", "second", "dist", "fn")
        if hasattr(args, name)
    )
    return RunConfig(
        command=args.command,
        step=getattr(args, "h", Step(ONE)),
        inputs=inputs,
        output=getattr(args, "output", None),
        out_dir=getattr(args, "out_dir", None),
        n=getattr(args, "n", None),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None),
        decimal=getattr(args, "decimal", None),
        plot=getattr(args, "plot", False),
    )


def _decimal_str(value: Fraction, places: int) -> str:
    """Decimal rendering with exact integer rounding, ties to even."""
    scaled = round(value * 10 ** places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _read_dist(path: str) -> Dist:
    return parse_dist(Path(path).read_text())


def _write_text(output: str | None, text: str) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _emit_dist(dist: Dist, config: RunConfig) -> None:
    if config.plot and config.output is None:
        raise UsageError("--plot needs -o/--output to name the figure file")
    lines = [f"# h = {format_scalar(config.step.h)}"]
    for point, w in dist.items():
        row = f"{format_scalar(point)} {format_scalar(w)}"
        if config.decimal is not None:
            row += f" {_decimal_str(w, config.decimal)}"
        lines.append(row)
    _write_text(config.output, "\n".join(lines) + "\n")
    if config.plot:
        from .plotting import render_dist

        render_dist(dist, Path(config.output).with_suffix(".png"), title=config.command)


def _moments(dist: Dist):
    """Total and normalized central moments ``(total, mean, m2, skew_ratio)``.

    Skewness is reported without square roots, as the ratio m3^2 / m2^3.
    """
    tot = total(dist)
    if tot == 0:
        raise ReportError("summary moments need a distribution with nonzero total")
    mean = expectation(dist) / tot
    m2 = sum((w * (x - mean) ** 2 for x, w in dist.items()), ZERO) / tot
    m3 = sum((w * (x - mean) ** 3 for x, w in dist.items()), ZERO) / tot
    if m3 == 0:
        skew = ZERO
    elif m2 == 0:
        raise ReportError("skewness ratio undefined: zero second central moment")
    else:
        skew = m3 ** 2 / m2 ** 3
    return tot, mean, m2, skew


def _cmd_derivative(config: RunConfig) -> None:
    _emit_dist(derivative(_read_dist(config.inputs[0]), config.step), config)


def _cmd_primitive(config: RunConfig) -> None:
    _emit_dist(primitive(_read_dist(config.inputs[0]), config.step), config)


def _cmd_interval(config: RunConfig) -> None:
    _emit_dist(interval(config.a, config.b, config.step), config)


def _cmd_convolve(config: RunConfig) -> None:
    first = _read_dist(config.inputs[0])
    second = _read_dist(config.inputs[1])
    _emit_dist(convolve(first, second), config)


def _cmd_pair(config: RunConfig) -> None:
    dist = _read_dist(config.inputs[0])
    fn = parse_intensive(Path(config.inputs[1]).read_text())
    value = pair(dist, fn, SCALAR_MODULE)
    row = format_scalar(value)
    if config.decimal is not None:
        row += f" {_decimal_str(value, config.decimal)}"
    _write_text(config.output, f"# h = {format_scalar(config.step.h)}\n{row}\n")


def _cmd_conv_pow(config: RunConfig) -> None:
    dist = _read_dist(config.inputs[0])
    powers = []
    summary = []
    current = None
    for k in range(1, config.n + 1):
        current = dist if current is None else convolve(current, dist)
        tot, mean, m2, skew = _moments(current)
        powers.append(current)
        summary.append((k, tot, mean, m2, skew))

    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    width = len(str(config.n))
    comment = f"# h = {format_scalar(config.step.h)}\n"

    for k, dist_k in enumerate(powers, start=1):
        with open(out_dir / f"power_{k:0{width}d}.csv", "w", newline="") as fh:
            fh.write(comment)
            writer = csv.writer(fh, lineterminator="\n")
            header = ["point", "weight"]
            if config.decimal is not None:
                header.append("approx")
            writer.writerow(header)
            for point, w in dist_k.items():
                row = [format_scalar(point), format_scalar(w)]
                if config.decimal is not None:
                    row.append(_decimal_str(w, config.decimal))
                writer.writerow(row)

    with open(out_dir / "summary.csv", "w", newline="") as fh:
        fh.write(comment)
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "total", "mean", "variance", "skewness_numerator"])
        for k, tot, mean, m2, skew in summary:
            writer.writerow([str(k)] + [format_scalar(v) for v in (tot, mean, m2, skew)])

    if config.plot:
        from .plotting import render_conv_powers

        render_conv_powers(powers, summary, out_dir / "report.png")


def _cmd_info(config: RunConfig) -> None:
    dist = _read_dist(config.inputs[0])
    print(f"points {len(dist)}")
    print(f"total {format_scalar(total(dist))}")
    if len(dist):
        support = dist.support()
        print(f"min {format_scalar(support[0])}")
        print(f"max {format_scalar(support[-1])}")
        print(f"expectation {format_scalar(expectation(dist))}")


_HANDLERS = {
    "derivative": _cmd_derivative,
    "primitive": _cmd_primitive,
    "interval": _cmd_interval,
    "convolve": _cmd_convolve,
    "pair": _cmd_pair,
    "conv-pow": _cmd_conv_pow,
    "info": _cmd_info,
}


def run(config: RunConfig) -> int:
    """Execute one parsed command and return the process exit status."""
    handler = _HANDLERS[config.command]
    try:
        handler(config)
    except (FormatError, UsageError, OSError) as exc:
        print(f"extcalc: {exc}", file=sys.stderr)
        return 2
    except (NoPrimitive, ReportError, ValueError, ZeroDivisionError) as exc:
        print(f"extcalc: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(_config_from(args))


def entrypoint() -> None:
    raise SystemExit(main())
