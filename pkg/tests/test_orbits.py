from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitcalc.orbits import (
    ComplexOrbit,
    InfinitesimalCharacter,
    bv_dual,
    enumerate_nil_p,
    enumerate_orbits,
    gen_descent_complex,
    good_for_gen_descent,
    induce_complex,
    infinitesimal_character,
    orbit_dimension,
    theta_lift_complex,
)
from orbitcalc.partitions import DomainError, column_descent, size, transpose
from orbitcalc.realforms import SpaceKind


def sp(cols):
    return ComplexOrbit(-1, size(cols), tuple(cols))


def so(cols):
    return ComplexOrbit(1, size(cols), tuple(cols))


def test_orbit_validation():
    with pytest.raises(DomainError):
        ComplexOrbit(-1, 3, (2, 1))  # rows (2,1): odd row multiplicity 1
    with pytest.raises(DomainError):
        ComplexOrbit(-1, 4, (2, 1, 1))
    with pytest.raises(DomainError):
        ComplexOrbit(1, 3, (2,))  # size 2 against dim 3
    ComplexOrbit(1, 2, (2,))  # zero orbit of o(2) is fine


def test_enumerate_orbits_examples():
    assert [o.columns for o in enumerate_orbits(-1, 2)] == [(1, 1), (2,)]
    assert [o.columns for o in enumerate_orbits(1, 3)] == [(1, 1, 1), (3,)]
    assert [o.columns for o in enumerate_orbits(1, 0)] == [()]
    assert [o.columns for o in enumerate_orbits(-1, 0)] == [()]


def test_enumerate_nil_p_examples():
    assert {o.columns for o in enumerate_nil_p(-1, 4, 0)} == {(4,), (2, 2)}
    assert {o.columns for o in enumerate_nil_p(1, 3, 1)} == {(3,)}
    assert {o.columns for o in enumerate_nil_p(-1, 4, 1)} == {(3, 1)}


def test_infinitesimal_character_values():
    assert infinitesimal_character(sp([4])).entries == (2, 1)
    assert infinitesimal_character(sp([2, 2])).entries == (1, 0)
    assert infinitesimal_character(so([3])).entries == (Fraction(1, 2),)


def test_infinitesimal_character_rank():
    for eps in (1, -1):
        for n in range(9):
            for orbit in enumerate_orbits(eps, n):
                chi = infinitesimal_character(orbit)
                assert len(chi) == n // 2


def test_character_equality_is_up_to_signs_and_order():
    assert InfinitesimalCharacter([1, 0]) == InfinitesimalCharacter([0, -1])
    assert InfinitesimalCharacter([Fraction(1, 2)]) != \
        InfinitesimalCharacter([Fraction(3, 2)])


def test_bv_dual_frozen():
    res = bv_dual(sp([2, 2]))
    assert res.dual.eps == 1 and res.dual.dim_v == 5
    assert res.dual.rows() == (3, 1, 1)
    assert res.half_h == InfinitesimalCharacter([1, 0])
    assert res.checked


def test_bv_dual_zero_orbit_gives_rho():
    for n in (2, 4, 6):
        res = bv_dual(sp([n]))
        assert res.dual.rows() == (n + 1,)
        assert res.half_h == infinitesimal_character(sp([n]))


def test_bv_dual_odd_orthogonal():
    res = bv_dual(so([3]))
    assert res.dual.eps == -1 and res.dual.rows() == (2,)
    assert res.half_h == InfinitesimalCharacter([Fraction(1, 2)])


def test_bv_dual_checked_flag():
    assert not bv_dual(sp([3, 1])).checked  # parity 1 while dim is even


def test_theta_lift_examples():
    assert theta_lift_complex(sp([2, 2]), 8).columns == (4, 2, 2)
    assert theta_lift_complex(sp([2]), 4).columns == (2, 2)
    assert theta_lift_complex(sp([1, 1, 1, 1]), 5).columns == (1, 1, 1, 1, 1)


def test_theta_lift_rejects_odd_skew_target():
    with pytest.raises(DomainError):
        theta_lift_complex(so([3]), 5)


def test_gen_descent_examples():
    assert gen_descent_complex(sp([2, 2]), 2).columns == (2,)
    assert gen_descent_complex(sp([2, 2]), 4).columns == (4,)
    assert gen_descent_complex(so([4]), 6).columns == (6,)
    with pytest.raises(DomainError):
        gen_descent_complex(sp([2, 2]), 1)


def test_good_for_gen_descent():
    assert good_for_gen_descent(sp([2, 2]))
    assert not good_for_gen_descent(sp([4, 2]))
    assert not good_for_gen_descent(ComplexOrbit(-1, 0, ()))


def test_induce_complex_examples():
    assert induce_complex(so([2]), 3, SpaceKind(1, 1)).columns == (4, 2, 2)
    assert induce_complex(sp([2]), 3, SpaceKind(-1, -1)).columns == (3, 3, 2)
    assert induce_complex(ComplexOrbit(-1, 0, ()), 2,
                          SpaceKind(-1, 1)).columns == (2, 2)
    with pytest.raises(DomainError):
        induce_complex(so([2]), 1, SpaceKind(1, 1))


def test_orbit_dimension_values():
    assert orbit_dimension(ComplexOrbit(-1, 0, ())) == 0
    assert orbit_dimension(sp([4])) == 0
    assert orbit_dimension(sp([1, 1])) == 2
    assert orbit_dimension(sp([2, 2])) == 6


@settings(deadline=None)
@given(st.sampled_from([1, -1]), st.integers(min_value=0, max_value=12))
def test_lift_of_descent_is_identity(eps, n):
    for orbit in enumerate_orbits(eps, n):
        smaller = n - (orbit.columns[0] if orbit.columns else 0)
        if eps == 1 and smaller % 2 == 1:
            continue  # no skew form there
        desc = ComplexOrbit(-eps, smaller, column_descent(orbit.columns))
        assert theta_lift_complex(desc, n) == orbit


@settings(deadline=None)
@given(st.sampled_from([1, -1]), st.integers(min_value=0, max_value=10))
def test_lift_partition_is_type_and_size(eps, n):
    for orbit in enumerate_orbits(eps, n):
        for extra in (0, 1, 2, 4):
            target = n + extra
            if eps == 1:
                target += target % 2  # skew-symmetric target needs even dim
            lifted = theta_lift_complex(orbit, target)
            assert lifted.eps == -eps
            assert size(lifted.columns) == target


def test_descent_reduces_to_column_descent():
    for eps in (1, -1):
        for n in range(9):
            for orbit in enumerate_orbits(eps, n):
                rank = n - (orbit.columns[0] if orbit.columns else 0)
                if -eps == -1 and rank % 2 == 1:
                    continue
                assert gen_descent_complex(orbit, rank).columns == \
                    column_descent(orbit.columns)
