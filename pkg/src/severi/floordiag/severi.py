"""Severi degrees as weighted sums over floor diagrams."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..lattice import DeltaOutOfRange, SurfaceClass
from .diagram import FloorDiagram, automorphism_order, multiplicity
from .enumerate import enumerate_floor_diagrams
from .poset import linear_extension_count, marking_poset


class NonIntegralMarking(ArithmeticError):
    pass


@dataclass(frozen=True)
class DiagramTerm:
    encoding: str
    multiplicity: int
    markings: int

    @property
    def contribution(self) -> int:
        return self.multiplicity * self.markings


@dataclass(frozen=True)
class SeveriResult:
    surface: SurfaceClass
    delta: int
    total: int
    breakdown: tuple[DiagramTerm, ...] = ()
    warning: str | None = None
    reducible: bool = False

    @property
    def contributions(self) -> list[int]:
        return [t.contribution for t in self.breakdown]


def marking_count(diagram: FloorDiagram) -> int:
    """Labelled linear extensions of the marking poset divided by |Aut|."""
    ext = linear_extension_count(marking_poset(diagram))
    aut = automorphism_order(diagram)
    q, r = divmod(ext, aut)
    if r:
        raise NonIntegralMarking(f"{ext} extensions not divisible by |Aut| = {aut} for {diagram}")
    return q


def diagram_term(diagram: FloorDiagram, *, exponent: int = 2) -> DiagramTerm:
    return DiagramTerm(diagram.encode(), multiplicity(diagram, exponent), marking_count(diagram))


def severi_degree_fd(surface: SurfaceClass, delta: int, *, reducible: bool = False,
                     workers: int = 1, exponent: int = 2) -> SeveriResult:
    """Count δ-nodal curves through ``point_conditions`` general points.

    By default only connected diagrams enter, i.e. irreducible curves. With
    ``reducible`` (plane only) disconnected diagrams are included, giving the
    count of all δ-nodal curves. Out-of-range cogenus gives total 0 and a warning.
    """
    try:
        diagrams = enumerate_floor_diagrams(surface, delta, reducible=reducible)
    except DeltaOutOfRange as exc:
        return SeveriResult(surface, delta, 0, (), str(exc), reducible)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            terms = list(pool.map(lambda d: diagram_term(d, exponent=exponent), diagrams))
    else:
        terms = [diagram_term(d, exponent=exponent) for d in diagrams]
    terms.sort(key=lambda t: t.encoding)
    return SeveriResult(surface, delta, sum(t.contribution for t in terms), tuple(terms),
                        None, reducible)
