"""
Some useful combinatorial tools
"""
from __future__ import annotations
from collections import Counter
from itertools import combinations
from typing import Iterator, Sequence, Tuple

from scipy.special import comb, factorial

def compositions(total: int, nparts: int, minimum: int = 1) -> Iterator[Tuple[int, ...]]:
    """
    All ordered tuples of `nparts` integers >= `minimum` summing to `total`.

    Example:
        list(compositions(3, 2)) == [(1, 2), (2, 1)]
    """
    if nparts == 0:
        if total == 0:
            yield ()
        return
    upper = total - minimum * (nparts - 1)
    for first in range(minimum, upper + 1):
        for rest in compositions(total - first, nparts - 1, minimum):
            yield (first,) + rest

def shuffle_distributions(labels: Sequence[int],
                          sizes: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    All decompositions of `labels` into blocks Q_1, ..., Q_m of the given
    sizes whose minima increase, i.e. min Q_1 < min Q_2 < ... .

    The smallest remaining label always opens the next block, so the
    decompositions are produced without rejection.

    Args:
        labels (Sequence[int]): Sorted distinct labels.
        sizes (Sequence[int]): The block sizes, summing to len(labels).

    Yields:
        Tuple[Tuple[int, ...], ...]: The blocks, each sorted.
    """
    if len(sizes) == 0:
        if len(labels) == 0:
            yield ()
        return
    first, rest = labels[0], tuple(labels[1:])
    for chosen in combinations(rest, sizes[0] - 1):
        chosen_set = set(chosen)
        remaining = tuple(label for label in rest if label not in chosen_set)
        for tail in shuffle_distributions(remaining, sizes[1:]):
            yield ((first,) + chosen,) + tail

def shuffle_count(sizes: Sequence[int]) -> int:
    """
    The number of shuffle distributions of {1, ..., n} into blocks of the
    given sizes, c(n_1, ..., n_m) = binom(n-1, n_1-1) c(n_2, ..., n_m).
    """
    count = 1
    remaining = sum(sizes)
    for size in sizes:
        count *= int(comb(remaining - 1, size - 1, exact=True))
        remaining -= size
    return count

def exact_factorial(n: int) -> int:
    """
    n! as a Python integer.
    """
    return int(factorial(n, exact=True))

def same_multiset(list1: Sequence, list2: Sequence) -> bool:
    """
    Whether two sequences contain the same elements with the same
    multiplicities, ignoring order.
    """
    if len(list1) != len(list2):
        return False
    return Counter(list1) == Counter(list2)
