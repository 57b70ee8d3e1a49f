"""Text formats for distributions and intensive quantities.

Distribution files hold one entry per line, ``<point> <weight>``, sorted by
point, all values exact rationals in ``p/q`` form.  A blank file is the zero
distribution.  Lines starting with ``#`` are comments.  Report files written
by the command line use commas instead of spaces and may carry a header row
and trailing approximation columns; the parser accepts both shapes, so every
emitted file re-parses to the distribution it came from.

Intensive-quantity files hold ``<point> <value>`` lines plus exactly one
``default <value>`` line.
"""

from __future__ import annotations

from typing import Callable

from .dist import Dist
from .intensive import IntensiveFn
from .scalars import Fraction, format_scalar, parse_scalar


class FormatError(ValueError):
    """Raised when a file does not parse; carries the offending line number."""


_DIST_HEADER = ("point", "weight")


def _rows(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in (line.split(",") if "," in line else line.split())]
        yield lineno, fields


def format_dist(dist: Dist, point_format: Callable = format_scalar) -> str:
    """Entries as ``<point> <weight>`` lines; empty string for zero."""
    return "".join(
        f"{point_format(point)} {format_scalar(w)}\n" for point, w in dist.items()
    )


def parse_dist(text: str, point_parse: Callable = parse_scalar) -> Dist:
    """Parse a distribution file.  Duplicate points merge."""
    items = []
    for lineno, fields in _rows(text):
        if tuple(fields[:2]) == _DIST_HEADER:
            continue
        if len(fields) < 2:
            raise FormatError(f"line {lineno}: expected '<point> <weight>'")
        try:
            items.append((point_parse(fields[0]), parse_scalar(fields[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    return Dist(items)


DEFAULT_KEYWORD = "default"


def format_intensive(
    fn: IntensiveFn,
    point_format: Callable = format_scalar,
    value_format: Callable = format_scalar,
) -> str:
    lines = [
        f"{point_format(point)} {value_format(value)}\n"
        for point, value in fn.exceptions()
    ]
    lines.append(f"{DEFAULT_KEYWORD} {value_format(fn.default)}\n")
    return "".join(lines)


def parse_intensive(
    text: str,
    point_parse: Callable = parse_scalar,
    value_parse: Callable = parse_scalar,
) -> IntensiveFn:
    """Parse an intensive-quantity file; the ``default`` line is mandatory."""
    entries = []
    default = None
    for lineno, fields in _rows(text):
        if len(fields) < 2:
            raise FormatError(f"line {lineno}: expected '<point> <value>'")
        if fields[0] == DEFAULT_KEYWORD:
            if default is not None:
                raise FormatError(f"line {lineno}: second 'default' line")
            try:
                default = value_parse(fields[1])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from exc
            continue
        try:
            entries.append((point_parse(fields[0]), value_parse(fields[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    if default is None:
        raise FormatError("missing 'default <value>' line")
    return IntensiveFn(entries, default=default)
