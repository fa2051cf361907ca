"""Shared helpers for the test suite."""

from __future__ import annotations

from typing import Iterator

import pytest

from rimhooks import Partition, Rpp

ACCEPTANCE_SHAPES = ((2, 2), (3, 2), (3, 3, 3), (4, 3, 1), (5, 2, 1, 1))


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def all_partitions(max_size: int) -> list[Partition]:
    """Every nonempty partition with at most max_size cells."""
    out = []
    for n in range(1, max_size + 1):
        out.extend(Partition(parts) for parts in partitions_of(n))
    return out


@pytest.fixture
def running_example() -> Rpp:
    return Rpp(Partition((4, 3, 1)), ((0, 1, 2, 3), (1, 2, 2), (1,)))


@pytest.fixture
def staircase_example() -> Rpp:
    return Rpp(Partition((3, 3, 3)), ((0, 0, 0), (0, 0, 0), (1, 1, 1)))


@pytest.fixture
def steep_example() -> Rpp:
    return Rpp(Partition((3, 3, 3)), ((1, 1, 4), (2, 3, 4), (4, 4, 4)))
