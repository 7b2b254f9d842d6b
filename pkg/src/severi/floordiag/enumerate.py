"""Enumerate floor diagrams of a given surface class and cogenus."""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from ..lattice import DeltaOutOfRange, Plane, SurfaceClass, arithmetic_genus
from .diagram import FloorDiagram, surface_conventions, weight_bound


def bounded_edge_target(surface: SurfaceClass, delta: int, *, reducible: bool = False) -> int:
    """Number of bounded edges B = F - 1 + g for cogenus ``delta``.

    Raises DeltaOutOfRange outside 0 <= delta <= p_a, or, with ``reducible``,
    outside the range where B >= 0.
    """
    pa = arithmetic_genus(surface)
    floors = surface_conventions(surface)[0]
    if reducible and not isinstance(surface, Plane):
        raise ValueError("reducible counts are only supported on the plane")
    top = pa + floors - 1 if reducible else pa
    if delta < 0 or delta > top:
        what = "maximal cogenus" if reducible else "arithmetic genus"
        raise DeltaOutOfRange(f"cogenus {delta} exceeds {what} {top}")
    return floors - 1 + pa - delta


def _partitions(total: int, max_part: int, max_parts: int):
    """Partitions of ``total`` into at most ``max_parts`` parts each <= max_part, non-increasing."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        if first * max_parts < total:
            break
        for rest in _partitions(total - first, first, max_parts - 1):
            yield (first,) + rest


def _sub_multisets(open_edges: tuple[tuple[int, int, int], ...]):
    """Yield (landed, remaining) splits of a multiset given as ((src, w, count), ...)."""
    if not open_edges:
        yield (), ()
        return
    (s, w, cnt), rest = open_edges[0], open_edges[1:]
    for landed, remaining in _sub_multisets(rest):
        for c in range(cnt + 1):
            lhead = ((s, w, c),) if c else ()
            rhead = ((s, w, cnt - c),) if cnt - c else ()
            yield lhead + landed, rhead + remaining


def _is_connected(floors, edges) -> bool:
    parent = list(range(floors + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t, _ in edges:
        parent[find(s)] = find(t)
    return len({find(v) for v in range(1, floors + 1)}) == 1


def enumerate_floor_diagrams(surface: SurfaceClass, delta: int, *,
                             reducible: bool = False) -> list[FloorDiagram]:
    """All floor diagrams of cogenus ``delta``, up to floor-order-preserving isomorphism.

    The sweep visits floors bottom to top, keeping the multiset of edges that
    have left an earlier floor but not yet landed. Each floor picks which open
    edges land on it, how many ends it takes, and a partition of its remaining
    outflow into new edges. With ``reducible`` disconnected diagrams are kept.
    """
    n_edges = bounded_edge_target(surface, delta, reducible=reducible)
    floors, div, n_up, n_down = surface_conventions(surface)
    wmax = weight_bound(surface)
    found: set[FloorDiagram] = set()

    def sweep(j, open_edges, edges, ups, downs, up_left, down_left):
        last = j == floors
        for landed, remaining in _sub_multisets(open_edges):
            if last and remaining:
                continue
            inflow = sum(w * c for _, w, c in landed)
            new_edges = edges + tuple((s, j, w) for s, w, c in landed for _ in range(c))
            down_range = [down_left] if last else range(down_left + 1)
            for dn in down_range:
                avail = div + inflow + dn
                if last:
                    if avail != up_left:
                        continue
                    up_range = [up_left]
                else:
                    up_range = range(min(avail, up_left) + 1)
                for up in up_range:
                    out = avail - up
                    opened = sum(c for _, _, c in remaining)
                    room = n_edges - len(new_edges) - opened
                    if room < 0:
                        continue
                    for parts in _partitions(out, wmax, room):
                        counts: dict[int, int] = {}
                        for w in parts:
                            counts[w] = counts.get(w, 0) + 1
                        nxt = tuple(sorted(remaining + tuple((j, w, c) for w, c in counts.items())))
                        if last:
                            if len(new_edges) != n_edges:
                                continue
                            if not reducible and not _is_connected(floors, new_edges):
                                continue
                            found.add(FloorDiagram.make(floors, new_edges, ups + (up,),
                                                        downs + (dn,)))
                        else:
                            sweep(j + 1, nxt, new_edges, ups + (up,), downs + (dn,),
                                  up_left - up, down_left - dn)

    sweep(1, (), (), (), (), n_up, n_down)
    return sorted(found)


def enumerate_floor_diagrams_bruteforce(surface: SurfaceClass, delta: int, *,
                                        reducible: bool = False) -> list[FloorDiagram]:
    """Oracle: every multiset of weighted edges, filtered by divergence and connectivity."""
    n_edges = bounded_edge_target(surface, delta, reducible=reducible)
    floors, div, n_up, n_down = surface_conventions(surface)
    wmax = weight_bound(surface)
    types = [(s, t, w) for s in range(1, floors + 1) for t in range(s + 1, floors + 1)
             for w in range(1, wmax + 1)]
    found = set()
    for edges in combinations_with_replacement(types, n_edges):
        net = [0] * (floors + 1)
        for s, t, w in edges:
            net[s] += w
            net[t] -= w
        # up - down = div - net at each floor
        diff = [div - net[v] for v in range(1, floors + 1)]
        if n_down == 0:
            if min(diff) < 0:
                continue
            choices = [(tuple(diff), (0,) * floors)]
        else:
            ranges = [range(max(0, -x), n_down + 1) for x in diff]
            choices = []
            for downs in product(*ranges):
                if sum(downs) != n_down:
                    continue
                choices.append((tuple(x + y for x, y in zip(diff, downs)), downs))
        for ups, downs in choices:
            if sum(ups) != n_up:
                continue
            if not reducible and not _is_connected(floors, edges):
                continue
            found.add(FloorDiagram.make(floors, edges, ups, downs))
    return sorted(found)
