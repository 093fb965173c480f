import pytest

from conic_floors.combinatorics import (
    binomial,
    compositions,
    count_binary_matrices,
    multinomial_choose,
    pairings,
)


@pytest.mark.parametrize(
    "n, k, expected", [(5, 2, 10), (2, 5, 0), (-1, 0, 0), (4, -1, 0), (0, 0, 1)]
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_multinomial_choose():
    assert multinomial_choose(4, [1, 1]) == 12
    assert multinomial_choose(4, [2, 2]) == 6
    assert multinomial_choose(2, [3]) == 0
    assert multinomial_choose(3, []) == 1


def test_pairings():
    assert pairings(0) == 1
    assert pairings(4) == 3
    assert pairings(6) == 15
    assert pairings(3) == 0


def test_compositions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(3, 2, minimum=1)) == [(1, 2), (2, 1)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []


@pytest.mark.parametrize(
    "rows, columns, expected",
    [
        ([1, 1], [1, 1], 2),
        ([2], [1, 1], 1),
        ([1, 1, 1], [3], 1),
        ([2], [1], 0),
        ([1, 1], [2, 1], 0),
        ([2, 2, 2], [2, 2, 2], 6),
        ([1, 1, 1], [1, 1, 1], 6),
    ],
)
def test_count_binary_matrices(rows, columns, expected):
    assert count_binary_matrices(rows, columns) == expected
