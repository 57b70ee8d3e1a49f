"""Tensor products, convolution, and the one-point scalar space.

The tensor product of two distributions lives over the pair carrier and is
bilinear in both factors.  It can be computed by two different nestings of
the same linear extensions:

* ``tensor``            column-major: the second factor is extended outermost
* ``tensor_row_major``  row-major: the first factor is extended outermost

That these agree is the commutativity of the model; the test suite checks it
on randomized inputs rather than assuming it.

Convolution along a binary map ``a`` is the image of the tensor product
under ``a``.  On the line, convolution along ``+`` has the familiar form
``(p * q)(z) = sum over x + y = z of p(x) q(y)`` and ``convolve`` computes it
directly, collapsing each product weight into its target point without
building the intermediate pair-carrier distribution.

Distributions over the one-point carrier form the scalars of the theory;
``from_scalar`` / ``to_scalar`` realize the identification with plain
rationals, and ``scalar_dist_mul`` is their multiplication, obtained by
convolving along the unique map into the one-point carrier.
"""

from __future__ import annotations

from typing import Callable

from .dist import Dist, pushforward
from .scalars import Fraction


def tensor(p: Dist, q: Dist) -> Dist:
    """Tensor product over the pair carrier, second factor outermost."""
    items = []
    for y, wy in q.items():
        for x, wx in p.items():
            items.append(((x, y), wx * wy))
    return Dist(items)


def tensor_row_major(p: Dist, q: Dist) -> Dist:
    """Same product as ``tensor``, built with the opposite nesting.

    Kept as a separate computation path so that agreement with ``tensor`` is
    a checkable property, not a definition.
    """
    items = []
    for x, wx in p.items():
        for y, wy in q.items():
            items.append(((x, y), wx * wy))
    return Dist(items)


def convolve_along(a: Callable, p: Dist, q: Dist) -> Dist:
    """Convolution along a binary map: push the tensor product through ``a``.

    ``a`` is called with the two point components, ``a(x, y)``.
    """
    return pushforward(lambda pair: a(pair[0], pair[1]), tensor(p, q))


def convolve(p: Dist, q: Dist) -> Dist:
    """Convolution along ``+`` on the line, collapsed in a single pass."""
    items = []
    for x, wx in p.items():
        for y, wy in q.items():
            items.append((x + y, wx * wy))
    return Dist(items)


# The one-point carrier and its identification with plain scalars.

UNIT_POINT = ()


def from_scalar(value) -> Dist:
    """The scalar ``value`` as a distribution over the one-point carrier."""
    return Dist(((UNIT_POINT, value),))


def to_scalar(dist: Dist) -> Fraction:
    """Inverse of ``from_scalar``; rejects distributions over other carriers."""
    for point in dist.support():
        if point != UNIT_POINT:
            raise ValueError(f"not a one-point-carrier distribution: has point {point!r}")
    return dist.coeff(UNIT_POINT)


def scalar_dist_mul(a: Dist, b: Dist) -> Dist:
    """Multiplication of one-point-carrier distributions.

    Defined as convolution along the unique map into the one-point carrier;
    under ``to_scalar`` it is ordinary multiplication of rationals.
    """
    return convolve_along(lambda _x, _y: UNIT_POINT, a, b)


def scalar_act(lam, p: Dist) -> Dist:
    """Scale a distribution by tensoring with ``from_scalar(lam)``.

    Agrees with ``lam * p``; kept on the tensor route so that agreement is a
    checkable property of the product.
    """
    return pushforward(lambda pair: pair[1], tensor(from_scalar(lam), p))
