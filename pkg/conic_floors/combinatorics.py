from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence, Tuple


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial_choose(total: int, parts: Iterable[int]) -> int:
    """C(a; a_1, ..., a_k) = a! / ((a - sum a_i)! prod a_i!), zero when sum a_i > a"""
    parts = list(parts)
    rest = total - sum(parts)
    if rest < 0 or any(p < 0 for p in parts):
        return 0
    return factorial(total) // (factorial(rest) * prod(factorial(p) for p in parts))


def pairings(points: int) -> int:
    """Number of perfect matchings of ``points`` items, i.e. (points - 1)!!"""
    if points % 2:
        return 0
    return prod(range(points - 1, 0, -2))


def compositions(total: int, parts: int, minimum: int = 0) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of ``parts`` integers >= minimum summing to ``total``"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def sub_multisets(tally: Counter, budget: int) -> Iterator[Counter]:
    """Sub-multisets of a weight tally whose total weight is at most ``budget``"""
    weights = sorted(tally)
    for choice in product(*(range(tally[w] + 1) for w in weights)):
        if sum(w * c for w, c in zip(weights, choice)) <= budget:
            yield Counter({w: c for w, c in zip(weights, choice) if c})


@lru_cache(maxsize=None)
def _binary_matrices(rows: Tuple[int, ...], columns: Tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(columns) else 0
    need, rest = rows[0], rows[1:]
    groups = sorted(Counter(c for c in columns if c > 0).items())
    zeros = sum(1 for c in columns if c == 0)
    total = 0
    for take in product(*(range(min(m, need) + 1) for _, m in groups)):
        if sum(take) != need:
            continue
        ways = prod(comb(m, t) for (_, m), t in zip(groups, take))
        remaining = [0] * zeros
        for (value, m), t in zip(groups, take):
            remaining += [value - 1] * t + [value] * (m - t)
        total += ways * _binary_matrices(rest, tuple(sorted(remaining)))
    return total


def count_binary_matrices(row_sums: Sequence[int], column_sums: Sequence[int]) -> int:
    """Number of 0/1 matrices with the given row and column sums"""
    if sum(row_sums) != sum(column_sums) or any(r < 0 for r in row_sums):
        return 0
    if any(r > len(column_sums) for r in row_sums):
        return 0
    rows = tuple(sorted((r for r in row_sums if r), reverse=True))
    return _binary_matrices(rows, tuple(sorted(column_sums)))
