"""Finitely supported distributions over an arbitrary carrier.

A ``Dist`` is a finite formal sum ``w1*x1 + ... + wn*xn`` with nonzero
rational weights and points drawn from any carrier whose elements are
hashable and totally ordered.  It is the free module on the carrier.  The
structural operations live alongside it:

* ``dirac``       point mass
* ``pushforward`` image of a distribution under a map of carriers
* ``flatten``     weighted superposition of a distribution of distributions
* ``total``       sum of all weights
* ``split`` / ``merge``  the isomorphism with pairs over a tagged sum carrier

Canonical storage is the load-bearing invariant: zero weights are deleted on
construction and entries are kept sorted by point.  Structural equality of
two distributions is therefore mathematical equality, and emitted files are
deterministic.  Distributions are immutable and hashable, so a Dist can
itself serve as the point of another Dist; ``flatten`` relies on that.

Weights combine with ``+`` and scale with ``*`` from the left, e.g.
``Fraction(1, 2) * (p + q)``.  The order on points is used only for storage
and output; the algebra needs nothing but equality.
"""

from __future__ import annotations

from typing import Any, Callable, NamedTuple

from .scalars import Fraction, ONE, ZERO, as_scalar


class Dist:
    """Formal rational-weighted sum of points, kept in canonical form."""

    __slots__ = ("_coeffs",)

    def __init__(self, items=()):
        if isinstance(items, (Dist, dict)):
            items = items.items()
        acc = {}
        for point, weight in items:
            w = as_scalar(weight)
            if not w:
                continue
            w += acc.get(point, ZERO)
            if w:
                acc[point] = w
            else:
                del acc[point]
        self._coeffs = dict(sorted(acc.items(), key=lambda entry: entry[0]))

    def items(self) -> tuple:
        """Entries as ``(point, weight)`` pairs, sorted by point."""
        return tuple(self._coeffs.items())

    def support(self) -> tuple:
        return tuple(self._coeffs)

    def coeff(self, point) -> Fraction:
        """Weight at ``point``; zero when the point is outside the support."""
        return self._coeffs.get(point, ZERO)

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Dist):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __lt__(self, other):
        # Order on distributions themselves, so nested Dist points can be
        # stored canonically.  Compares the canonical entry sequences.
        if not isinstance(other, Dist):
            return NotImplemented
        return tuple(self._coeffs.items()) < tuple(other._coeffs.items())

    def __add__(self, other):
        if not isinstance(other, Dist):
            return NotImplemented
        acc = dict(self._coeffs)
        for point, w in other._coeffs.items():
            w += acc.get(point, ZERO)
            if w:
                acc[point] = w
            else:
                del acc[point]
        return Dist(acc)

    def __sub__(self, other):
        if not isinstance(other, Dist):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Dist((point, -w) for point, w in self._coeffs.items())

    def __rmul__(self, scalar):
        if isinstance(scalar, Dist):
            return NotImplemented
        lam = as_scalar(scalar)
        return Dist((point, lam * w) for point, w in self._coeffs.items())

    __mul__ = __rmul__

    def __repr__(self):
        if not self._coeffs:
            return "Dist()"
        body = ", ".join(f"{point}: {w}" for point, w in self._coeffs.items())
        return f"Dist({{{body}}})"


def dirac(point) -> Dist:
    """Point mass: the distribution with weight 1 at ``point``."""
    return Dist(((point, ONE),))


def total(dist: Dist) -> Fraction:
    """Sum of all weights (the image under the map to the one-point carrier)."""
    return sum((w for _, w in dist.items()), ZERO)


def pushforward(f: Callable, dist: Dist) -> Dist:
    """Image distribution: move each weight from ``x`` to ``f(x)``.

    Collisions merge and cancellations delete, so the result is canonical.
    """
    return Dist((f(point), w) for point, w in dist.items())


def flatten(nested: Dist) -> Dist:
    """Superpose a distribution whose points are themselves distributions.

    Each inner distribution contributes with the outer weight it carries.
    """
    acc = []
    for inner, w in nested.items():
        if not isinstance(inner, Dist):
            raise TypeError(f"flatten needs Dist points, got {inner!r}")
        acc.extend((point, w * wi) for point, wi in inner.items())
    return Dist(acc)


class TaggedPoint(NamedTuple):
    """Point of a disjoint-union carrier.  The tag sorts before the payload."""

    tag: str
    point: Any


LEFT = "left"
RIGHT = "right"


def left(point) -> TaggedPoint:
    return TaggedPoint(LEFT, point)


def right(point) -> TaggedPoint:
    return TaggedPoint(RIGHT, point)


def merge(first: Dist, second: Dist) -> Dist:
    """Embed a pair of distributions as one distribution over the tagged sum."""
    tagged = [(left(point), w) for point, w in first.items()]
    tagged += [(right(point), w) for point, w in second.items()]
    return Dist(tagged)


def split(dist: Dist) -> tuple[Dist, Dist]:
    """Partition a distribution over a tagged sum into its two components."""
    first, second = [], []
    for point, w in dist.items():
        if not isinstance(point, TaggedPoint):
            raise TypeError(f"split needs TaggedPoint points, got {point!r}")
        if point.tag == LEFT:
            first.append((point.point, w))
        elif point.tag == RIGHT:
            second.append((point.point, w))
        else:
            raise ValueError(f"unknown tag {point.tag!r}")
    return Dist(first), Dist(second)
