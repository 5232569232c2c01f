"""Shared worked-example data used across the test modules."""

from __future__ import annotations

import itertools

import pytest

from bitableaux import Bitableau

# five-box bitableau with a-weight (1,3,1), b-weight (2,3,0)
FIVE_BOX = Bitableau.from_rows(
    [[(1, 2), (2, 1)], [(2, 2), (2, 2)], [(3, 1)]], 3, 3
)

# 18-box bitableau over [3] x [2] whose sort-by-top reading word is Yamanouchi
EIGHTEEN_BOX = Bitableau.from_rows(
    [
        [(1, 1), (1, 1), (1, 1), (1, 2), (2, 1), (3, 1), (3, 1)],
        [(1, 2), (2, 1), (2, 1), (2, 2), (3, 1), (3, 2)],
        [(2, 1), (2, 2), (3, 1), (3, 1), (3, 2)],
    ],
    3,
    2,
)

EIGHTEEN_BOX_WORD = (2, 1, 1, 1, 2, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 2, 1, 1)

# seven-box column over [3] x [4]
SEVEN_BOX_COLUMN = Bitableau.from_rows(
    [[(1, 1)], [(1, 2)], [(2, 1)], [(2, 3)], [(2, 4)], [(3, 1)], [(3, 3)]], 3, 4
)


def small_shapes(max_size: int):
    from bitableaux import enumerate_partitions

    for size in range(max_size + 1):
        yield from enumerate_partitions(size)


def nm_pairs(bound: int):
    return itertools.product(range(1, bound + 1), repeat=2)


@pytest.fixture
def five_box() -> Bitableau:
    return FIVE_BOX


@pytest.fixture
def eighteen_box() -> Bitableau:
    return EIGHTEEN_BOX


@pytest.fixture
def seven_box_column() -> Bitableau:
    return SEVEN_BOX_COLUMN
