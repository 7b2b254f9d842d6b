"""Marking posets of floor diagrams and linear-extension counting."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Sequence

import numpy as np

from . import _kernels
from .diagram import FloorDiagram


class CycleDetected(ValueError):
    pass


@dataclass(frozen=True)
class MarkingPoset:
    """Finite poset given by labelled elements and cover-type relations ``(lo, hi)``.

    Relations are indices into ``elements``; they need not be transitively closed.
    """

    elements: tuple[Hashable, ...]
    relations: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.elements)

    def pred_sets(self) -> list[set[int]]:
        preds = [set() for _ in self.elements]
        for lo, hi in self.relations:
            preds[hi].add(lo)
        return preds

    def pred_masks(self) -> list[int]:
        masks = [0] * len(self.elements)
        for lo, hi in self.relations:
            masks[hi] |= 1 << lo
        return masks

    def check_acyclic(self) -> None:
        preds = self.pred_sets()
        state = [0] * len(preds)  # 0 new, 1 on stack, 2 done
        for root in range(len(preds)):
            if state[root]:
                continue
            stack = [(root, iter(preds[root]))]
            state[root] = 1
            while stack:
                v, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[v] = 2
                    stack.pop()
                elif state[nxt] == 1:
                    raise CycleDetected(f"relation has a cycle through {self.elements[nxt]!r}")
                elif state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(preds[nxt])))


def marking_poset(diagram: FloorDiagram) -> MarkingPoset:
    """Floors, bounded edges and ends of ``diagram`` with their forced order.

    Floors form a chain; a bounded edge sits between its endpoints; a down-end
    precedes its floor and an up-end follows it.
    """
    elements: list[Hashable] = []
    rel: list[tuple[int, int]] = []
    floor_idx = {}
    for v in range(1, diagram.floors + 1):
        floor_idx[v] = len(elements)
        elements.append(("floor", v))
        if v > 1:
            rel.append((floor_idx[v - 1], floor_idx[v]))
    for k, (s, t, w) in enumerate(diagram.edges):
        i = len(elements)
        elements.append(("edge", k, s, t, w))
        rel.append((floor_idx[s], i))
        rel.append((i, floor_idx[t]))
    for v in range(1, diagram.floors + 1):
        for c in range(diagram.up[v - 1]):
            rel.append((floor_idx[v], len(elements)))
            elements.append(("up", v, c))
        for c in range(diagram.down[v - 1]):
            rel.append((len(elements), floor_idx[v]))
            elements.append(("down", v, c))
    return MarkingPoset(tuple(elements), tuple(rel))


def linear_extensions_python(p: MarkingPoset) -> int:
    """Downset DP with Python ints: exact for any size."""
    preds = p.pred_masks()
    n = len(preds)
    layer = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = defaultdict(int)
        for mask, c in layer.items():
            for i in range(n):
                bit = 1 << i
                if not mask & bit and mask & preds[i] == preds[i]:
                    nxt[mask | bit] += c
        layer = nxt
    return layer[(1 << n) - 1] if n else 1


def linear_extensions_bruteforce(p: MarkingPoset) -> int:
    """Factorial-time oracle: test every permutation. Keep n <= 9."""
    n = len(p)
    if n == 0:
        return 1
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    # pos[k, e] = position of element e in permutation k
    pos = np.argsort(perms, axis=1)
    ok = np.ones(len(perms), dtype=bool)
    for lo, hi in p.relations:
        ok &= pos[:, lo] < pos[:, hi]
    return int(ok.sum())


def linear_extension_count(p: MarkingPoset) -> int:
    p.check_acyclic()
    n = len(p)
    if 0 < n <= _kernels.MAX_ELEMENTS:
        got = _kernels.count_masks(np.array(p.pred_masks(), dtype=np.int64))
        if got >= 0:
            return got
    return linear_extensions_python(p)


def poset_from_relations(n: int, relations: Sequence[tuple[int, int]]) -> MarkingPoset:
    return MarkingPoset(tuple(range(n)), tuple((int(a), int(b)) for a, b in relations))
