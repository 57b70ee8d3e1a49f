from fractions import Fraction as F

from hypothesis import given

from extcalc import (
    DIST_MODULE,
    Dist,
    IntensiveFn,
    SCALAR_MODULE,
    as_functional,
    derivative,
    derivative_via_pairing,
    fdiff,
    pair,
    recover,
)

from strats import intensives, line_dists, scalars, steps


@given(line_dists())
def test_recover_inverts_the_functional_view(p):
    assert recover(as_functional(p)) == p


@given(line_dists(), intensives())
def test_functional_evaluates_as_pairing(p, fn):
    assert as_functional(p).evaluate(fn, SCALAR_MODULE) == pair(p, fn, SCALAR_MODULE)
    assert as_functional(p)(fn, SCALAR_MODULE) == pair(p, fn, SCALAR_MODULE)


def test_underlying_is_kept():
    p = Dist({F(1): F(2)})
    assert as_functional(p).underlying == p


@given(line_dists(), line_dists(), scalars, intensives())
def test_functional_view_is_linear(p, q, lam, fn):
    addition = as_functional(p + q).evaluate(fn, SCALAR_MODULE)
    assert addition == as_functional(p).evaluate(fn, SCALAR_MODULE) + as_functional(
        q
    ).evaluate(fn, SCALAR_MODULE)
    scaling = as_functional(lam * p).evaluate(fn, SCALAR_MODULE)
    assert scaling == lam * as_functional(p).evaluate(fn, SCALAR_MODULE)


@given(line_dists(), steps)
def test_derivative_via_pairing_matches_direct(p, step):
    assert derivative_via_pairing(p, step) == derivative(p, step)


@given(line_dists(), intensives(), steps)
def test_switch_identity_through_functionals(p, fn, step):
    lhs = as_functional(derivative(p, step)).evaluate(fn, SCALAR_MODULE)
    rhs = -as_functional(p).evaluate(fdiff(fn, SCALAR_MODULE, step), SCALAR_MODULE)
    assert lhs == rhs


@given(line_dists(), line_dists())
def test_indicators_separate_distributions(p, q):
    # scalar test functions suffice to tell distributions apart
    if p == q:
        return
    witnesses = set(p.support()) | set(q.support())
    separated = any(
        pair(p, IntensiveFn({x: F(1)}, default=F(0)), SCALAR_MODULE)
        != pair(q, IntensiveFn({x: F(1)}, default=F(0)), SCALAR_MODULE)
        for x in witnesses
    )
    assert separated


@given(line_dists())
def test_recover_via_dirac_pairing(p):
    # the functional applied to the point-mass embedding is the identity route
    assert as_functional(p).evaluate(lambda x: Dist({x: F(1)}), DIST_MODULE) == p
