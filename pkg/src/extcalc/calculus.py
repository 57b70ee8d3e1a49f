"""Difference calculus on the line with an explicit invertible step.

Every operation takes the grid spacing ``h`` as a ``Step`` argument; nothing
here owns a global grid.  The derivative of a distribution is defined by

    h . derivative(p)  =  p - translate(h, p)

so a point mass differentiates to ``(1/h) * (dirac(x) - dirac(x + h))``.
With this convention the following identities hold exactly, not just up to
higher-order terms, and the test suite exercises them all:

* pairing flips the derivative with a sign:
      pair(derivative(p), fn) = - pair(p, fdiff(fn))
* derivative of a convolution:
      derivative(p * q) = derivative(p) * q = p * derivative(q)
* expectation drops to the negated total:
      expectation(derivative(p)) = - total(p)
* a corrected product rule for the reweighting action, where the classical
  two-term rule picks up a step-sized correction:
      derivative(act(p, fn)) = act(derivative(p), fn) + act(p, fdiff(fn))
                               - h . derivative(act(p, fdiff(fn)))

A primitive (antiderivative with finite support) exists exactly when every
grid coset of the support sums to zero; ``primitive`` computes the unique
one, and ``interval`` builds the uniform distribution whose derivative is
``dirac(a) - dirac(b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .dist import Dist, dirac, pushforward
from .intensive import IntensiveFn, ModuleOps
from .scalars import Fraction, ONE, ZERO, Step, as_scalar, format_scalar
from .tensor import convolve


class NoPrimitive(ValueError):
    """No finitely supported antiderivative exists."""


class NotOnGrid(NoPrimitive):
    """Interval endpoints do not differ by a whole number of steps."""


@dataclass(frozen=True)
class GridCoset:
    """Residue class of the line modulo one step."""

    representative: Fraction
    step: Step

    @classmethod
    def of(cls, point, step: Step) -> "GridCoset":
        x = as_scalar(point)
        rep = x - math.floor(x / step.h) * step.h
        return cls(rep, step)

    def __contains__(self, point) -> bool:
        return ((as_scalar(point) - self.representative) / self.step.h).denominator == 1


def translate(shift, dist: Dist) -> Dist:
    """Shift every point by ``shift``."""
    u = as_scalar(shift)
    return pushforward(lambda x: x + u, dist)


def derivative(dist: Dist, step: Step) -> Dist:
    """Difference-quotient derivative: ``(1/h) * (p - translate(h, p))``."""
    return (ONE / step.h) * (dist - translate(step.h, dist))


def derivative_along(flow: Callable, dist: Dist, step: Step) -> Dist:
    """Derivative along an arbitrary flow map in place of the shift by ``h``."""
    return (ONE / step.h) * (dist - pushforward(flow, dist))


def fdiff(fn, module: ModuleOps, step: Step):
    """Forward difference quotient ``x -> (fn(x + h) - fn(x)) / h``.

    A table-backed ``IntensiveFn`` yields a table-backed result whose default
    is the module zero (the difference of two defaults cancels).  Any other
    callable yields a lazily evaluated callable.
    """
    h = step.h
    inv = ONE / h

    def rate(x):
        return module.scale(inv, module.sub(fn(x + h), fn(x)))

    if isinstance(fn, IntensiveFn):
        points = set()
        for p, _ in fn.exceptions():
            points.add(p)
            points.add(p - h)
        return IntensiveFn(((x, rate(x)) for x in points), default=module.zero)
    return rate


def expectation(dist: Dist) -> Fraction:
    """First moment: the weighted sum of the points themselves."""
    return sum((w * x for x, w in dist.items()), ZERO)


def primitive(q: Dist, step: Step) -> Dist:
    """The unique finitely supported antiderivative of ``q``, when it exists.

    Working coset by coset, the coefficient at ``x`` is ``h`` times the
    running sum of ``q`` over ``x, x - h, x - 2h, ...``.  The running sum
    returns to zero past the support exactly when the coset total is zero;
    otherwise no finitely supported primitive exists and ``NoPrimitive``
    is raised.
    """
    h = step.h
    cosets: dict[GridCoset, list] = {}
    for x, w in q.items():
        cosets.setdefault(GridCoset.of(x, step), []).append((x, w))

    out = []
    for coset, entries in cosets.items():
        coset_total = sum(w for _, w in entries)
        if coset_total != 0:
            raise NoPrimitive(
                "no finitely supported antiderivative: coset of "
                f"{format_scalar(coset.representative)} mod {format_scalar(h)} "
                f"has total {format_scalar(coset_total)}"
            )
        base = entries[0][0]
        # Integer index t = (x - base) / h walks the coset in the +h
        # direction whatever the sign of h, keeping the telescoping right.
        indexed = {}
        for x, w in entries:
            t = (x - base) / h
            indexed[int(t)] = w
        running = ZERO
        for t in range(min(indexed), max(indexed) + 1):
            running += indexed.get(t, ZERO)
            if running:
                out.append((base + t * h, h * running))
    return Dist(out)


def interval(a, b, step: Step) -> Dist:
    """Uniform distribution on the grid from ``a`` up to but excluding ``b``.

    Defined as the primitive of ``dirac(a) - dirac(b)``; its total is
    ``b - a`` and its derivative recovers ``dirac(a) - dirac(b)``.  Reversed
    endpoints negate.  The endpoints must differ by a whole number of steps.
    """
    a = as_scalar(a)
    b = as_scalar(b)
    if ((b - a) / step.h).denominator != 1:
        raise NotOnGrid(
            f"endpoints {format_scalar(a)} and {format_scalar(b)} do not differ "
            f"by a whole number of steps of {format_scalar(step.h)}"
        )
    return primitive(dirac(a) - dirac(b), step)


def conv_power(dist: Dist, n: int) -> Dist:
    """n-fold convolution power, n >= 1."""
    if n < 1:
        raise ValueError(f"convolution power needs n >= 1, got {n}")
    out = dist
    for _ in range(n - 1):
        out = convolve(out, dist)
    return out
