from fractions import Fraction as F

import pytest
from hypothesis import given

from extcalc import (
    Dist,
    UNIT_POINT,
    convolve,
    convolve_along,
    dirac,
    from_scalar,
    pushforward,
    scalar_act,
    scalar_dist_mul,
    tensor,
    tensor_row_major,
    to_scalar,
    total,
)

from strats import dists, grid_dists, int_points, line_dists, scalars


def brute_convolve(p, q):
    """Independent double-sum oracle for convolution along +."""
    acc = {}
    for x, wx in p.items():
        for y, wy in q.items():
            acc[x + y] = acc.get(x + y, F(0)) + wx * wy
    return Dist(acc)


# the two evaluation orders

@given(dists(), dists())
def test_tensor_orders_agree(p, q):
    assert tensor(p, q) == tensor_row_major(p, q)


def test_tensor_of_diracs():
    assert tensor(dirac(F(1)), dirac(F(2))) == dirac((F(1), F(2)))


def test_tensor_example():
    p = Dist({F(0): F(2), F(1): F(1)})
    q = Dist({F(5): F(3)})
    assert tensor(p, q) == Dist({(F(0), F(5)): F(6), (F(1), F(5)): F(3)})


@given(dists(), dists())
def test_tensor_total_multiplies(p, q):
    assert total(tensor(p, q)) == total(p) * total(q)


@given(dists(), dists(), dists(), scalars)
def test_tensor_bilinear(p, q, r, lam):
    assert tensor(p + q, r) == tensor(p, r) + tensor(q, r)
    assert tensor(p, q + r) == tensor(p, q) + tensor(p, r)
    assert tensor(lam * p, q) == lam * tensor(p, q)
    assert tensor(p, lam * q) == lam * tensor(p, q)


@given(dists(max_size=4), dists(max_size=4), dists(max_size=4))
def test_tensor_associative_mod_reassociation(p, q, r):
    reassociate = lambda t: (t[0][0], (t[0][1], t[1]))
    assert pushforward(reassociate, tensor(tensor(p, q), r)) == tensor(p, tensor(q, r))


@given(dists(), dists())
def test_tensor_natural_in_both_factors(p, q):
    f = lambda x: x + 1
    g = lambda y: y * y
    both = lambda t: (f(t[0]), g(t[1]))
    assert pushforward(both, tensor(p, q)) == tensor(
        pushforward(f, p), pushforward(g, q)
    )


# convolution

def test_convolve_diracs():
    assert convolve(dirac(F(1, 2)), dirac(F(1, 3))) == dirac(F(5, 6))


@given(line_dists())
def test_dirac_zero_is_neutral(p):
    assert convolve(dirac(F(0)), p) == p
    assert convolve(p, dirac(F(0))) == p


@given(line_dists(max_size=6), line_dists(max_size=6))
def test_convolve_matches_brute_force(p, q):
    assert convolve(p, q) == brute_convolve(p, q)


@given(line_dists(max_size=6), line_dists(max_size=6))
def test_convolve_matches_tensor_route(p, q):
    # the specialized accumulation against the general composite
    assert convolve(p, q) == convolve_along(lambda x, y: x + y, p, q)
    assert convolve(p, q) == pushforward(lambda t: t[0] + t[1], tensor(p, q))


@given(line_dists(max_size=5), line_dists(max_size=5), line_dists(max_size=5))
def test_convolve_associative_commutative(p, q, r):
    assert convolve(p, q) == convolve(q, p)
    assert convolve(convolve(p, q), r) == convolve(p, convolve(q, r))


@given(line_dists(), line_dists(), line_dists(), scalars)
def test_convolve_bilinear(p, q, r, lam):
    assert convolve(p + q, r) == convolve(p, r) + convolve(q, r)
    assert convolve(lam * p, q) == lam * convolve(p, q)


def test_interval_convolution_square():
    half = Dist({F(0): F(1, 2), F(1, 2): F(1, 2)})
    assert convolve(half, half) == Dist(
        {F(0): F(1, 4), F(1, 2): F(1, 2), F(1): F(1, 4)}
    )


@given(dists(max_size=5), dists(max_size=5), dists(max_size=5))
def test_convolve_along_max(p, q, r):
    # an associative commutative map other than +
    m = lambda x, y: max(x, y)
    assert convolve_along(m, p, q) == convolve_along(m, q, p)
    assert convolve_along(m, convolve_along(m, p, q), r) == convolve_along(
        m, p, convolve_along(m, q, r)
    )


@given(dists(), dists())
def test_convolve_along_naturality(p, q):
    # the total map collapses to the product of totals
    collapsed = convolve_along(lambda _x, _y: UNIT_POINT, p, q)
    assert collapsed == from_scalar(total(p) * total(q))


# the one-point carrier as scalar space

@given(scalars)
def test_scalar_round_trip(c):
    assert to_scalar(from_scalar(c)) == c


def test_to_scalar_rejects_other_carriers():
    with pytest.raises(ValueError):
        to_scalar(dirac(F(1)))


@given(scalars, scalars)
def test_scalar_dist_mul_is_multiplication(a, b):
    assert to_scalar(scalar_dist_mul(from_scalar(a), from_scalar(b))) == a * b


def test_scalar_dist_mul_examples():
    assert scalar_dist_mul(from_scalar(F(2, 3)), from_scalar(F(3, 2))) == from_scalar(F(1))
    assert scalar_dist_mul(from_scalar(F(1)), from_scalar(F(7, 5))) == from_scalar(F(7, 5))


@given(scalars, dists())
def test_scalar_act_agrees_with_scaling(lam, p):
    # tensor route against the direct coefficientwise route
    assert scalar_act(lam, p) == lam * p
