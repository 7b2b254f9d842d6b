"""Newton polygons of plane and quadric linear systems, and their lattice counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union


class DeltaOutOfRange(ValueError):
    """Requested cogenus exceeds what the linear system allows."""


@dataclass(frozen=True)
class Plane:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"plane degree must be a positive integer, got {self.d!r}")

    def __str__(self):
        return f"P2(d={self.d})"


@dataclass(frozen=True)
class Quadric:
    a: int
    b: int

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b)):
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"quadric bidegree {name} must be a positive integer, got {v!r}")

    def __str__(self):
        return f"P1xP1(a={self.a}, b={self.b})"


SurfaceClass = Union[Plane, Quadric]


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon, vertices listed counterclockwise."""

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        verts = tuple((int(x), int(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise ValueError("a polygon needs at least three vertices")
        for i in range(n):
            (x0, y0), (x1, y1), (x2, y2) = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            turn = (x1 - x0) * (y2 - y1) - (y1 - y0) * (x2 - x1)
            if turn <= 0:
                raise ValueError(f"vertices are not strictly convex counterclockwise at {verts[(i + 1) % n]}")

    def area(self) -> Fraction:
        """Shoelace area, exact."""
        v = self.vertices
        twice = sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
                    for i in range(len(v)))
        return Fraction(twice, 2)

    def contains(self, x: int, y: int) -> int:
        """1 if strictly inside, 0 if on the boundary, -1 if outside."""
        v = self.vertices
        on_edge = False
        for i in range(len(v)):
            (x0, y0), (x1, y1) = v[i], v[(i + 1) % len(v)]
            c = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)
            if c < 0:
                return -1
            if c == 0:
                on_edge = True
        return 0 if on_edge else 1

    def _bbox_points(self):
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                yield x, y


def polygon_for(surface: SurfaceClass) -> LatticePolygon:
    if isinstance(surface, Plane):
        d = surface.d
        return LatticePolygon(((0, 0), (d, 0), (0, d)))
    if isinstance(surface, Quadric):
        a, b = surface.a, surface.b
        return LatticePolygon(((0, 0), (a, 0), (a, b), (0, b)))
    raise TypeError(f"unsupported surface class {surface!r}")


def interior_points(p: LatticePolygon) -> int:
    return sum(1 for x, y in p._bbox_points() if p.contains(x, y) == 1)


def boundary_points(p: LatticePolygon) -> int:
    # each edge contributes gcd(|dx|, |dy|) points, counting its start vertex once
    v = p.vertices
    return sum(gcd(abs(v[(i + 1) % len(v)][0] - v[i][0]), abs(v[(i + 1) % len(v)][1] - v[i][1]))
               for i in range(len(v)))


def boundary_points_enumerated(p: LatticePolygon) -> int:
    """Boundary count by scanning the bounding box; cross-check for `boundary_points`."""
    return sum(1 for x, y in p._bbox_points() if p.contains(x, y) == 0)


def lattice_points(p: LatticePolygon) -> int:
    return sum(1 for x, y in p._bbox_points() if p.contains(x, y) >= 0)


def arithmetic_genus(surface: SurfaceClass) -> int:
    """Genus of a smooth member of the linear system."""
    if isinstance(surface, Plane):
        return (surface.d - 1) * (surface.d - 2) // 2
    if isinstance(surface, Quadric):
        return (surface.a - 1) * (surface.b - 1)
    raise TypeError(f"unsupported surface class {surface!r}")


def linear_system_dim(surface: SurfaceClass) -> int:
    """Projective dimension of the linear system: lattice points of the polygon minus one."""
    if isinstance(surface, Plane):
        return surface.d * (surface.d + 3) // 2
    if isinstance(surface, Quadric):
        return (surface.a + 1) * (surface.b + 1) - 1
    raise TypeError(f"unsupported surface class {surface!r}")


def point_conditions(surface: SurfaceClass, delta: int) -> int:
    """Number of general points cutting the δ-nodal locus down to finitely many curves.

    Raises DeltaOutOfRange when ``delta`` exceeds the arithmetic genus.
    """
    if delta < 0:
        raise DeltaOutOfRange(f"cogenus must be nonnegative, got {delta}")
    pa = arithmetic_genus(surface)
    if delta > pa:
        raise DeltaOutOfRange(f"cogenus {delta} exceeds arithmetic genus {pa}")
    return linear_system_dim(surface) - delta


def parse_surface(kind: str, *, degree: int | None = None, a: int | None = None,
                  b: int | None = None) -> SurfaceClass:
    if kind == "p2":
        if degree is None:
            raise ValueError("p2 requires a degree")
        return Plane(degree)
    if kind == "quadric":
        if a is None or b is None:
            raise ValueError("quadric requires both a and b")
        return Quadric(a, b)
    raise ValueError(f"unknown surface kind {kind!r}")
