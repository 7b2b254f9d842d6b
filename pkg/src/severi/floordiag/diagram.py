"""Floor diagrams: weighted DAGs on linearly ordered floors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod

from ..lattice import Plane, Quadric, SurfaceClass, arithmetic_genus


@dataclass(frozen=True, order=True)
class FloorDiagram:
    """A floor diagram in canonical form.

    Floors are numbered 1..floors. ``edges`` holds bounded edges (src, dst, weight)
    with src < dst, sorted; parallel edges appear repeatedly. ``up[i]`` and
    ``down[i]`` count the weight-1 unbounded edges leaving / entering floor i+1.
    """

    floors: int
    edges: tuple[tuple[int, int, int], ...]
    up: tuple[int, ...]
    down: tuple[int, ...]

    @classmethod
    def make(cls, floors, edges, up, down=None) -> "FloorDiagram":
        down = tuple(down) if down is not None else (0,) * floors
        return cls(floors, tuple(sorted(tuple(e) for e in edges)), tuple(up), down)

    @property
    def n_bounded(self) -> int:
        return len(self.edges)

    @property
    def n_unbounded(self) -> int:
        return sum(self.up) + sum(self.down)

    @property
    def genus(self) -> int:
        """First Betti number B - F + 1 (negative when disconnected and acyclic enough)."""
        return len(self.edges) - self.floors + 1

    def cogenus(self, surface: SurfaceClass) -> int:
        return arithmetic_genus(surface) - self.genus

    def divergence(self, floor: int) -> int:
        """Outgoing minus incoming weight at a 1-based floor, unbounded edges included."""
        out = sum(w for s, _, w in self.edges if s == floor)
        inn = sum(w for _, t, w in self.edges if t == floor)
        return self.up[floor - 1] + out - self.down[floor - 1] - inn

    def is_connected(self) -> bool:
        parent = list(range(self.floors + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t, _ in self.edges:
            parent[find(s)] = find(t)
        return len({find(v) for v in range(1, self.floors + 1)}) == 1

    def encode(self) -> str:
        edges = ",".join(f"({s},{t},{w})" for s, t, w in self.edges)
        up = ",".join(map(str, self.up))
        down = ",".join(map(str, self.down))
        return f"F={self.floors}; E=[{edges}]; U=[{up}]; D=[{down}]"

    def __str__(self):
        return self.encode()


def decode(text: str) -> FloorDiagram:
    """Inverse of `FloorDiagram.encode`."""
    parts = dict(p.strip().split("=", 1) for p in text.split(";"))
    floors = int(parts["F"])
    body = parts["E"].strip()[1:-1]
    edges = []
    if body:
        for chunk in body.split("),"):
            s, t, w = chunk.strip("() ").split(",")
            edges.append((int(s), int(t), int(w)))

    def ints(v):
        v = v.strip()[1:-1]
        return tuple(int(x) for x in v.split(",")) if v else ()

    return FloorDiagram.make(floors, edges, ints(parts["U"]), ints(parts["D"]))


def surface_conventions(surface: SurfaceClass) -> tuple[int, int, int, int]:
    """(floors, divergence per floor, up-end total, down-end total) for the surface."""
    if isinstance(surface, Plane):
        return surface.d, 1, surface.d, 0
    if isinstance(surface, Quadric):
        return surface.b, 0, surface.a, surface.a
    raise TypeError(f"unsupported surface class {surface!r}")


def weight_bound(surface: SurfaceClass) -> int:
    return surface.d if isinstance(surface, Plane) else surface.a


def check_diagram(diagram: FloorDiagram, surface: SurfaceClass, *, connected: bool = True) -> None:
    """Raise ValueError unless ``diagram`` is a valid floor diagram for ``surface``."""
    floors, div, n_up, n_down = surface_conventions(surface)
    if diagram.floors != floors:
        raise ValueError(f"expected {floors} floors, got {diagram.floors}")
    if len(diagram.up) != floors or len(diagram.down) != floors:
        raise ValueError("unbounded-edge vectors must have one entry per floor")
    if min(diagram.up + diagram.down, default=0) < 0:
        raise ValueError("negative unbounded-edge count")
    for s, t, w in diagram.edges:
        if not (1 <= s < t <= floors) or w < 1:
            raise ValueError(f"bad bounded edge {(s, t, w)}")
    if sum(diagram.up) != n_up or sum(diagram.down) != n_down:
        raise ValueError("wrong number of unbounded edges")
    for v in range(1, floors + 1):
        if diagram.divergence(v) != div:
            raise ValueError(f"divergence {diagram.divergence(v)} at floor {v}, expected {div}")
    if connected and not diagram.is_connected():
        raise ValueError("diagram is disconnected")


def multiplicity(diagram: FloorDiagram, exponent: int = 2) -> int:
    """Product of w^2 over bounded edges. ``exponent`` exists for mutation tests."""
    return prod(w ** exponent for _, _, w in diagram.edges)


def automorphism_order(diagram: FloorDiagram) -> int:
    """Order of the group permuting identical parallel edges and identical ends at a floor."""
    order = prod(factorial(c) for c in Counter(diagram.edges).values())
    order *= prod(factorial(c) for c in diagram.up)
    order *= prod(factorial(c) for c in diagram.down)
    return order
