import pytest
from hypothesis import given, strategies as st

from orbitcalc.partitions import (
    DomainError,
    all_partitions,
    column_descent,
    depth,
    dominates,
    eps_collapse,
    in_nil_p,
    is_collapse_type,
    is_type_partition,
    size,
    transpose,
    type_collapse,
)
from orbitcalc.oracle import collapse_oracle


def partitions_up_to(n):
    for m in range(n + 1):
        yield from all_partitions(m)


def test_transpose_examples():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()
    assert transpose((2, 2)) == (2, 2)


@given(st.integers(min_value=0, max_value=9))
def test_transpose_involution(n):
    for p in all_partitions(n):
        assert transpose(transpose(p)) == p
        assert size(transpose(p)) == size(p)


def test_type_membership_examples():
    assert is_type_partition((3, 1), -1)
    assert not is_type_partition((2, 1), 1)
    assert is_type_partition((), 1)
    assert is_type_partition((), -1)


def test_type_membership_matches_row_criterion():
    # columns are type eps iff the rows have the right multiplicities
    for p in partitions_up_to(9):
        rows = transpose(p)
        even_ok = all(rows.count(r) % 2 == 0 for r in set(rows) if r % 2 == 0)
        odd_ok = all(rows.count(r) % 2 == 0 for r in set(rows) if r % 2 == 1)
        assert is_type_partition(p, 1) == even_ok
        assert is_type_partition(p, -1) == odd_ok


def test_nil_p_examples():
    assert in_nil_p((2, 2), -1, 0)
    assert not in_nil_p((1, 1, 1, 1), -1, 1)
    assert in_nil_p((3, 1), -1, 1)
    assert in_nil_p((), -1, 0) and in_nil_p((), 1, 1)


def test_nil_p_needs_uniform_parity():
    assert not in_nil_p((3, 2), 1, 1)
    assert not in_nil_p((3, 2), 1, 0)


def test_column_descent():
    assert column_descent((4, 2)) == (2,)
    assert column_descent(()) == ()
    assert column_descent((3, 3, 1)) == (3, 1)


def test_depth():
    assert depth((2, 2)) == 1
    assert depth(()) == -1
    assert depth((5,)) == 0


def test_collapse_frozen_values():
    assert type_collapse((3, 2), "B") == (3, 1, 1)
    assert type_collapse((2, 2), "C") == (2, 2)
    # brute-force oracle value, not (3,2,1) which has an odd row multiplicity
    assert type_collapse((4, 1, 1), "D") == (3, 1, 1, 1)


def test_collapse_errors():
    with pytest.raises(DomainError):
        type_collapse((3, 2), "C")  # odd size
    with pytest.raises(DomainError):
        type_collapse((2, 2), "B")  # even size


@given(st.integers(min_value=0, max_value=10))
def test_collapse_matches_brute_force(n):
    for rows in all_partitions(n):
        for kind in ("B", "C", "D"):
            if kind == "B" and n % 2 == 0:
                continue
            if kind in ("C", "D") and n % 2 == 1:
                continue
            assert type_collapse(rows, kind) == collapse_oracle(rows, kind)


def test_collapse_is_dominated_fixed_point():
    for rows in partitions_up_to(10):
        for kind, n_ok in (("B", size(rows) % 2 == 1),
                           ("C", size(rows) % 2 == 0),
                           ("D", size(rows) % 2 == 0)):
            if not n_ok:
                continue
            out = type_collapse(rows, kind)
            assert is_collapse_type(out, kind)
            assert dominates(rows, out)
            assert type_collapse(out, kind) == out


def test_eps_collapse_picks_series():
    assert eps_collapse((3, 2), 1) == type_collapse((3, 2), "B")
    assert eps_collapse((2, 2), 1) == type_collapse((2, 2), "D")
    assert eps_collapse((2, 2), -1) == type_collapse((2, 2), "C")


def test_dominance_basics():
    assert dominates((4,), (2, 2))
    assert not dominates((2, 2), (4,))
    assert dominates((3, 1), (3, 1))
    assert not dominates((2,), (1,))  # sizes differ
