import pytest

from severi.floordiag import (FloorDiagram, automorphism_order, check_diagram, decode,
                              enumerate_floor_diagrams, enumerate_floor_diagrams_bruteforce,
                              linear_extension_count, marking_count, marking_poset, multiplicity)
from severi.lattice import (DeltaOutOfRange, Plane, Quadric, arithmetic_genus, point_conditions)

PATH_12 = FloorDiagram.make(3, [(1, 2, 1), (2, 3, 2)], [0, 0, 3])
PATH_11 = FloorDiagram.make(3, [(1, 2, 1), (2, 3, 1)], [0, 1, 2])
TWO_SOURCE = FloorDiagram.make(3, [(1, 3, 1), (2, 3, 1)], [0, 0, 3])


def test_plane_cubic_one_node_diagrams():
    assert enumerate_floor_diagrams(Plane(3), 1) == sorted([PATH_12, PATH_11, TWO_SOURCE])


def test_line():
    assert enumerate_floor_diagrams(Plane(1), 0) == [FloorDiagram.make(1, [], [1])]


def test_quadric_2_2_one_node():
    got = enumerate_floor_diagrams(Quadric(2, 2), 1)
    assert got == sorted([
        FloorDiagram.make(2, [(1, 2, 2)], [0, 2], [2, 0]),
        FloorDiagram.make(2, [(1, 2, 1)], [0, 2], [1, 1]),
        FloorDiagram.make(2, [(1, 2, 1)], [1, 1], [2, 0]),
    ])


def test_out_of_range():
    with pytest.raises(DeltaOutOfRange):
        enumerate_floor_diagrams(Plane(3), 2)
    with pytest.raises(DeltaOutOfRange):
        enumerate_floor_diagrams(Plane(2), 1)


def test_multiplicity():
    assert multiplicity(PATH_12) == 4
    assert multiplicity(PATH_11) == 1
    assert multiplicity(FloorDiagram.make(2, [(1, 2, 2)], [0, 2], [2, 0])) == 4
    assert multiplicity(FloorDiagram.make(1, [], [1])) == 1


def test_marking_counts():
    assert marking_count(PATH_12) == 1
    assert marking_count(PATH_11) == 5
    assert marking_count(TWO_SOURCE) == 3


def test_automorphism_order():
    assert automorphism_order(PATH_12) == 6
    assert automorphism_order(FloorDiagram.make(2, [(1, 2, 1)], [1, 0], [0, 1])) == 1
    parallel = FloorDiagram.make(2, [(1, 2, 1), (1, 2, 1)], [0, 1])
    assert automorphism_order(parallel) == 2


def test_encoding_roundtrip():
    D = FloorDiagram.make(3, [(2, 3, 2), (1, 2, 1)], [0, 0, 3])
    assert D.encode() == "F=3; E=[(1,2,1),(2,3,2)]; U=[0,0,3]; D=[0,0,0]"
    assert decode(D.encode()) == D
    empty = FloorDiagram.make(1, [], [1])
    assert decode(empty.encode()) == empty


def test_check_diagram_rejects_bad_divergence():
    bad = FloorDiagram.make(3, [(1, 2, 1), (2, 3, 1)], [0, 0, 3])
    with pytest.raises(ValueError):
        check_diagram(bad, Plane(3))
    check_diagram(PATH_11, Plane(3))


def _cases():
    out = []
    for d in range(1, 6):
        s = Plane(d)
        out += [(s, delta) for delta in range(arithmetic_genus(s) + 1)]
    for a in range(1, 4):
        for b in range(1, 4):
            s = Quadric(a, b)
            out += [(s, delta) for delta in range(arithmetic_genus(s) + 1)]
    return out


CASES = _cases()


@pytest.fixture(scope="module")
def diagrams_by_case():
    return {(str(s), delta): enumerate_floor_diagrams(s, delta) for s, delta in CASES}


@pytest.mark.parametrize("surface, delta", CASES, ids=lambda x: str(x))
def test_diagram_invariants(surface, delta, diagrams_by_case):
    pa = arithmetic_genus(surface)
    diagrams = diagrams_by_case[(str(surface), delta)]
    assert diagrams, "every in-range cogenus has at least one diagram"
    assert len(set(diagrams)) == len(diagrams)
    assert diagrams == sorted(diagrams)
    wmax = surface.d if isinstance(surface, Plane) else surface.a
    for D in diagrams:
        check_diagram(D, surface)
        assert 0 <= D.genus <= pa
        assert D.cogenus(surface) == delta
        assert D.n_bounded == D.floors - 1 + D.genus
        assert all(w <= wmax for _, _, w in D.edges)
        P = marking_poset(D)
        assert len(P) == D.floors + D.n_bounded + D.n_unbounded == point_conditions(surface, delta)
        P.check_acyclic()
        assert linear_extension_count(P) % automorphism_order(D) == 0


BRUTE = [(Plane(d), delta) for d in range(1, 5) for delta in range(arithmetic_genus(Plane(d)) + 1)]
BRUTE += [(Quadric(a, b), delta) for a in (1, 2) for b in (1, 2)
          for delta in range(arithmetic_genus(Quadric(a, b)) + 1)]


@pytest.mark.parametrize("surface, delta", BRUTE, ids=lambda x: str(x))
def test_matches_bruteforce(surface, delta):
    assert enumerate_floor_diagrams(surface, delta) == \
        enumerate_floor_diagrams_bruteforce(surface, delta)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_reducible_matches_bruteforce(d):
    top = arithmetic_genus(Plane(d)) + d - 1
    for delta in range(top + 1):
        got = enumerate_floor_diagrams(Plane(d), delta, reducible=True)
        assert got == enumerate_floor_diagrams_bruteforce(Plane(d), delta, reducible=True)
        for D in got:
            check_diagram(D, Plane(d), connected=False)


def test_reducible_only_on_plane():
    with pytest.raises(ValueError):
        enumerate_floor_diagrams(Quadric(2, 2), 1, reducible=True)
