"""Intensive quantities: total functions paired against distributions.

An intensive quantity assigns a value to every point of the carrier.  Here
it is represented as a finite exception table over a default value, which
keeps totality decidable and gives canonical equality: the table never maps
a point to the default.  Values may be scalars or anything carrying a module
structure (see ``ModuleOps``); distributions themselves qualify.

The central operation is the pairing

    pair(p, fn, module)  =  sum over support(p) of  p(x) . fn(x)

which only ever evaluates ``fn`` on the support of ``p``, so any callable
works there, table-backed or not.

``act`` reweights a distribution pointwise by a scalar-valued intensive
quantity, and ``pointwise_act`` is the companion action of a scalar-valued
quantity on a module-valued one.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable

from .dist import Dist
from .scalars import Fraction, ZERO


class IntensiveFn:
    """Total function given by a finite exception table plus a default value."""

    __slots__ = ("_table", "_default")

    def __init__(self, exceptions=(), default=ZERO):
        if isinstance(exceptions, dict):
            exceptions = exceptions.items()
        table = {point: value for point, value in exceptions if value != default}
        self._table = dict(sorted(table.items(), key=lambda entry: entry[0]))
        self._default = default

    @classmethod
    def constant(cls, value) -> "IntensiveFn":
        return cls((), default=value)

    @property
    def default(self):
        return self._default

    def exceptions(self) -> tuple:
        """Exception entries as sorted ``(point, value)`` pairs."""
        return tuple(self._table.items())

    def __call__(self, point):
        return self._table.get(point, self._default)

    def __eq__(self, other):
        if not isinstance(other, IntensiveFn):
            return NotImplemented
        return self._default == other._default and self._table == other._table

    def __repr__(self):
        body = ", ".join(f"{p}: {v}" for p, v in self._table.items())
        return f"IntensiveFn({{{body}}}, default={self._default})"

    def _pointwise(self, other, op):
        keys = set(self._table) | set(other._table)
        return IntensiveFn(
            ((k, op(self(k), other(k))) for k in keys),
            default=op(self._default, other._default),
        )

    def __add__(self, other):
        if not isinstance(other, IntensiveFn):
            return NotImplemented
        return self._pointwise(other, operator.add)

    def __sub__(self, other):
        if not isinstance(other, IntensiveFn):
            return NotImplemented
        return self._pointwise(other, operator.sub)

    def __mul__(self, other):
        if isinstance(other, IntensiveFn):
            return self._pointwise(other, operator.mul)
        return self.__rmul__(other)

    def __rmul__(self, scalar):
        return IntensiveFn(
            ((k, scalar * v) for k, v in self._table.items()),
            default=scalar * self._default,
        )

    def __neg__(self):
        return IntensiveFn(
            ((k, -v) for k, v in self._table.items()), default=-self._default
        )


@dataclass(frozen=True)
class ModuleOps:
    """Module structure a value type supplies to serve as a pairing codomain."""

    zero: Any
    add: Callable
    negate: Callable
    scale: Callable  # (Scalar, value) -> value

    def sub(self, a, b):
        return self.add(a, self.negate(b))

    @classmethod
    def natural(cls, zero) -> "ModuleOps":
        """Module ops for any type with ``+``, unary ``-`` and left ``*``."""
        return cls(zero, operator.add, operator.neg, operator.mul)


SCALAR_MODULE = ModuleOps.natural(ZERO)
DIST_MODULE = ModuleOps.natural(Dist())


def pair(p: Dist, fn: Callable, module: ModuleOps):
    """Pair a distribution against an intensive quantity.

    Evaluates ``fn`` on the support of ``p`` only; the empty distribution
    pairs to the module zero.
    """
    value = module.zero
    for point, w in p.items():
        value = module.add(value, module.scale(w, fn(point)))
    return value


def act(p: Dist, fn: Callable) -> Dist:
    """Reweight: multiply the weight at each point by ``fn`` there."""
    return Dist((point, w * fn(point)) for point, w in p.items())


def pointwise_act(fn: IntensiveFn, values: IntensiveFn) -> IntensiveFn:
    """Act pointwise by a scalar-valued quantity on a module-valued one."""
    return fn._pointwise(values, lambda a, b: a * b)


def intensive_pullback(f: Callable, fn: Callable) -> Callable:
    """Precompose an intensive quantity with a map of carriers: x -> fn(f(x)).

    The result is evaluated lazily.  No finite exception table exists for it
    in general (the preimage of a table point under an opaque map is not
    computable), so use it where only evaluation is needed, e.g. ``pair``.
    """
    return lambda x: fn(f(x))
