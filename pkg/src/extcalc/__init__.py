"""Exact calculus of finitely supported distributions on the rational line.

Distributions are finite formal sums of points with exact rational weights.
The package provides their module structure and structural maps (``Dist``,
``dirac``, ``pushforward``, ``flatten``, ``split``/``merge``), tensor
products and convolution, pairing against intensive quantities (total
functions given by a finite exception table over a default), and a
difference calculus with an explicit invertible step: derivatives,
primitives, grid intervals, expectations and convolution powers, with the
usual differentiation identities holding exactly.

Public API
----------
Everything below is importable straight from ``extcalc``.
"""

from .scalars import Scalar, Step, as_scalar, format_scalar, parse_scalar
from .dist import (
    Dist,
    TaggedPoint,
    dirac,
    flatten,
    left,
    merge,
    pushforward,
    right,
    split,
    total,
)
from .tensor import (
    UNIT_POINT,
    convolve,
    convolve_along,
    from_scalar,
    scalar_act,
    scalar_dist_mul,
    tensor,
    tensor_row_major,
    to_scalar,
)
from .intensive import (
    DIST_MODULE,
    SCALAR_MODULE,
    IntensiveFn,
    ModuleOps,
    act,
    intensive_pullback,
    pair,
    pointwise_act,
)
from .calculus import (
    GridCoset,
    NoPrimitive,
    NotOnGrid,
    conv_power,
    derivative,
    derivative_along,
    expectation,
    fdiff,
    interval,
    primitive,
    translate,
)
from .dual import Functional, as_functional, derivative_via_pairing, recover
from .formats import (
    FormatError,
    format_dist,
    format_intensive,
    parse_dist,
    parse_intensive,
)

__version__ = "0.1.0"

__all__ = [
    "Scalar", "Step", "as_scalar", "format_scalar", "parse_scalar",
    "Dist", "TaggedPoint", "dirac", "flatten", "left", "merge",
    "pushforward", "right", "split", "total",
    "UNIT_POINT", "convolve", "convolve_along", "from_scalar", "scalar_act",
    "scalar_dist_mul", "tensor", "tensor_row_major", "to_scalar",
    "DIST_MODULE", "SCALAR_MODULE", "IntensiveFn", "ModuleOps", "act",
    "intensive_pullback", "pair", "pointwise_act",
    "GridCoset", "NoPrimitive", "NotOnGrid", "conv_power", "derivative",
    "derivative_along", "expectation", "fdiff", "interval", "primitive",
    "translate",
    "Functional", "as_functional", "derivative_via_pairing", "recover",
    "FormatError", "format_dist", "format_intensive", "parse_dist",
    "parse_intensive",
]
