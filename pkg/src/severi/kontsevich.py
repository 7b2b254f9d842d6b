"""Kontsevich's recursion for rational plane curves through 3d - 1 general points."""

from __future__ import annotations

import math
import threading


class InvalidDegree(ValueError):
    pass


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _term(d1: int, d2: int, n1: int, n2: int) -> int:
    d = d1 + d2
    return n1 * n2 * (d1 * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2)
                      - d1 ** 3 * d2 * binomial(3 * d - 4, 3 * d1 - 1))


def _check(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")


class RationalCountTable:
    """Memo table of N_d; entries are filled bottom-up and only ever appended."""

    def __init__(self):
        self.values: dict[int, int] = {1: 1}
        self._lock = threading.Lock()

    def get(self, d: int) -> int:
        _check(d)
        values = self.values
        if d in values:
            return values[d]
        with self._lock:
            top = max(values)
            for e in range(top + 1, d + 1):
                values[e] = sum(_term(d1, e - d1, values[d1], values[e - d1])
                                for d1 in range(1, e))
        return values[d]

    def table(self, d_max: int) -> list[tuple[int, int]]:
        self.get(d_max)
        return [(d, self.values[d]) for d in range(1, d_max + 1)]


_TABLE = RationalCountTable()


def kontsevich_number(d: int) -> int:
    """N_d, summing the recursion over ordered pairs (d1, d2)."""
    return _TABLE.get(d)


def kontsevich_table(d_max: int) -> list[tuple[int, int]]:
    return _TABLE.table(d_max)


def kontsevich_number_uncached(d: int, *, unordered: bool = False) -> int:
    """Plain recursive evaluation with no shared state.

    ``unordered=True`` sums only over d1 <= d2; kept for mutation tests.
    """
    _check(d)
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        if unordered and d1 > d2:
            continue
        total += _term(d1, d2, kontsevich_number_uncached(d1, unordered=unordered),
                       kontsevich_number_uncached(d2, unordered=unordered))
    return total
