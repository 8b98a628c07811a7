"""The shipped structure registry: membership, witnesses, grids, formatting."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ordalab import (
    CapabilityError,
    betweenness,
    checked_split,
    density_from_unit_interval,
    division_shrink_witness,
    demarr_density_witness,
    elements_between,
    lookup,
    n_split,
    nat_mul,
    registry,
    resolve_grid,
    split_witness,
    verify_archimedean,
    verify_density,
    verify_shrink,
)
from ordalab.poly import RF_ONE, RF_ZERO, RatFunc, X

ALL_KEYS = [
    "G0",
    "Id(Z)",
    "Q",
    "Q(i)",
    "Q^2",
    "Z",
    "Z(X)",
    "Z[1/2]",
    "Z[1/3]",
    "lex",
    "trop",
]


def test_registry_keys():
    assert sorted(registry()) == ALL_KEYS


def test_lookup_accepts_aliases():
    assert lookup("rationals") is lookup("Q")
    assert lookup("ZX") is lookup("Z(X)")
    assert lookup("orthant") is lookup("Q^2")
    assert lookup("tropical") is lookup("trop")
    assert lookup("gauss") is lookup("Q(i)")
    with pytest.raises(KeyError):
        lookup("no-such-structure")


def test_eps_grids():
    assert lookup("Q").eps_grid == tuple(F(1, 2**k) for k in range(1, 13))
    zx = lookup("Z(X)").eps_grid
    inv_x = RF_ONE / X
    assert zx == tuple(
        [RatFunc.from_fraction(F(1, 2**k)) for k in range(1, 7)]
        + [inv_x**k for k in range(1, 5)]
    )
    assert lookup("lex").eps_grid == tuple((0, F(1, 2**k)) for k in range(1, 7))
    assert lookup("Z").eps_grid == (8, 4, 2, 1)


def test_density_witness_pins():
    q = lookup("Q")
    w = split_witness(q, None)
    assert checked_split(q, w, F(1)) == (F(2, 5), F(2, 5))
    assert n_split(q, F(1), 3) == [F(2, 5), F(4, 25), F(4, 25)]
    assert n_split(q, F(1), 1) == [F(2, 5)]
    assert betweenness(q, F(0), F(1)) == F(2, 5)

    trop = lookup("trop")
    assert checked_split(trop, split_witness(trop, None), 5) == (4, 4)


def test_density_from_unit_interval_pins():
    q = lookup("Q")
    w = density_from_unit_interval(q, F(1, 2))
    assert w.split(F(1)) == (F(1, 4), F(1, 4))

    zx = lookup("Z(X)")
    wx = density_from_unit_interval(zx, RF_ONE / X)
    lo, hi = wx.split(RF_ONE)
    assert zx.fmt(lo) == "1/X^2"
    assert zx.fmt(hi) == "(X - 1)/X^2"
    assert zx.lt(RF_ZERO, lo) and zx.lt(RF_ZERO, hi)
    assert zx.lt(zx.op(lo, hi), RF_ONE)
    # at a smaller target the parts scale down by another factor of the anchor
    lo2, hi2 = wx.split(RF_ONE / X)
    assert zx.fmt(lo2) == "1/X^3"
    assert zx.lt(zx.op(lo2, hi2), RF_ONE / X)


def test_density_from_unit_interval_rejects_bad_anchor():
    q = lookup("Q")
    with pytest.raises(ValueError):
        density_from_unit_interval(q, F(0))
    with pytest.raises(ValueError):
        density_from_unit_interval(q, F(1))


def test_shrink_witness_pins():
    q = lookup("Q")
    w = division_shrink_witness(q)
    assert w.shrink(F(3), F(5)) == (F(6, 25), F(6, 25))
    g0 = lookup("G0")
    assert g0.shrink.shrink(2, 3) == (-2, -2)


def test_demarr_density_on_gaussians():
    qi = lookup("Q(i)")
    w = demarr_density_witness(qi)
    assert w.split((F(5), F(0))) == ((F(2), F(0)), (F(2), F(0)))


def test_elements_between():
    q = lookup("Q")
    found = elements_between(q, F(0), F(1), [F(-1), F(1, 2), F(1, 3), F(2)])
    assert found == [F(1, 2), F(1, 3)]


def test_density_shrink_archimedean_verify_on_rationals():
    q = lookup("Q")
    assert verify_density(q) == []
    assert verify_shrink(q) == []
    assert verify_archimedean(q) == []


def test_integers_are_not_dense():
    z = lookup("Z")
    with pytest.raises(CapabilityError):
        split_witness(z, None)


def test_non_archimedean_invariant():
    # 1/X is positive, sits under every positive grid rational, and no
    # repeated sum of it ever reaches one
    zx = lookup("Z(X)")
    inv_x = RF_ONE / X
    assert zx.lt(zx.identity, inv_x)
    for k in range(1, 7):
        q = RatFunc.from_fraction(F(1, 2**k))
        assert zx.lt(inv_x, q)
    for n in (1, 10, 1000, 10**6):
        assert zx.lt(nat_mul(zx, n, inv_x), zx.one)
    assert zx.archimedean is None
    with pytest.raises(CapabilityError):
        verify_archimedean(zx)


def test_localized_rings_membership():
    z12 = lookup("Z[1/2]")
    assert z12.from_rational(F(3, 8)) == F(3, 8)
    with pytest.raises(ValueError):
        z12.from_rational(F(1, 3))
    z13 = lookup("Z[1/3]")
    assert z13.from_rational(F(2, 9)) == F(2, 9)
    with pytest.raises(ValueError):
        z13.from_rational(F(1, 2))
    with pytest.raises(ValueError):
        z13.invert(F(2, 3))


def test_resolve_grid():
    q = lookup("Q")
    assert resolve_grid(q, ("1/2", "1/8")) == (F(1, 2), F(1, 8))
    assert resolve_grid(q, ()) == q.eps_grid
    zx = lookup("Z(X)")
    got = resolve_grid(zx, ("1/X^2",))
    assert got == ((RF_ONE / X) ** 2,)


@given(st.fractions(min_value=F(-20), max_value=F(20), max_denominator=64))
def test_rational_formatting_round_trips(x):
    q = lookup("Q")
    assert q.from_rational(F(q.fmt(x))) == x
