import itertools

import pytest

from bitableaux.partitions import (
    check_partition,
    conjugate,
    contains,
    enumerate_partitions,
    pad,
    trim,
)


def brute_force_partitions(k: int) -> set[tuple[int, ...]]:
    """All weakly decreasing positive tuples summing to k, by raw product."""
    found = {()} if k == 0 else set()
    for length in range(1, k + 1):
        for parts in itertools.product(range(1, k + 1), repeat=length):
            if sum(parts) == k and all(a >= b for a, b in zip(parts, parts[1:])):
                found.add(parts)
    return found


def test_partitions_of_zero():
    assert enumerate_partitions(0) == [()]


def test_partitions_of_four():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_max_length():
    assert enumerate_partitions(3, max_length=2) == [(3,), (2, 1)]


@pytest.mark.parametrize("k", range(8))
def test_partitions_against_brute_force(k):
    assert set(enumerate_partitions(k)) == brute_force_partitions(k)


def test_partitions_reverse_lexicographic_order():
    for k in range(9):
        parts = enumerate_partitions(k)
        assert parts == sorted(parts, reverse=True)


def test_partitions_deterministic():
    assert enumerate_partitions(6) == enumerate_partitions(6)


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)


def test_conjugate_involutive_up_to_twelve():
    for k in range(13):
        for lam in enumerate_partitions(k):
            assert conjugate(conjugate(lam)) == lam


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_trim_and_pad():
    assert trim((2, 3, 0, 0)) == (2, 3)
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((2, 1, 1), 2)


def test_contains():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (2, 2, 1))
    assert contains((3,), ())
