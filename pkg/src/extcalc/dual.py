"""Distributions seen through their pairings, Schwartz style.

``as_functional`` wraps a distribution as the linear functional it induces
on intensive quantities.  Nothing is lost: ``recover`` evaluates the
functional at the point-mass embedding and returns the original
distribution, so the functional view is faithful.

``derivative_via_pairing`` computes the derivative purely on the dual side,
by pairing against the negated forward difference of the point-mass
embedding.  It agrees with the direct ``calculus.derivative``; the test
suite checks the two routes against each other.
"""

from __future__ import annotations

from .dist import Dist, dirac
from .intensive import DIST_MODULE, ModuleOps, pair
from .scalars import ONE, Step


class Functional:
    """A distribution's pairing slice: ``fn, module -> pair(p, fn, module)``."""

    __slots__ = ("_underlying",)

    def __init__(self, underlying: Dist):
        self._underlying = underlying

    @property
    def underlying(self) -> Dist:
        return self._underlying

    def evaluate(self, fn, module: ModuleOps):
        return pair(self._underlying, fn, module)

    __call__ = evaluate

    def __repr__(self):
        return f"Functional({self._underlying!r})"


def as_functional(dist: Dist) -> Functional:
    return Functional(dist)


def recover(functional: Functional) -> Dist:
    """Evaluate at the point-mass embedding; returns the wrapped distribution."""
    return functional.evaluate(dirac, DIST_MODULE)


def derivative_via_pairing(dist: Dist, step: Step) -> Dist:
    """Derivative computed on the dual side.

    The point-mass embedding ``x -> dirac(x)`` has forward difference
    ``(1/h) * (dirac(x + h) - dirac(x))``; pairing against its negation
    yields the derivative of the distribution.
    """
    inv = ONE / step.h

    def negated_rate(x):
        return inv * (dirac(x) - dirac(x + step.h))

    return pair(dist, negated_rate, DIST_MODULE)
