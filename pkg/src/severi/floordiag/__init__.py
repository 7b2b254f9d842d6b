from .diagram import (FloorDiagram, automorphism_order, check_diagram, decode, multiplicity,
                      surface_conventions, weight_bound)
from .enumerate import (bounded_edge_target, enumerate_floor_diagrams,
                        enumerate_floor_diagrams_bruteforce)
from .poset import (CycleDetected, MarkingPoset, linear_extension_count,
                    linear_extensions_bruteforce, linear_extensions_python, marking_poset)
from .severi import (DiagramTerm, NonIntegralMarking, SeveriResult, marking_count,
                     severi_degree_fd)

__all__ = [
    "FloorDiagram", "automorphism_order", "check_diagram", "decode", "multiplicity",
    "surface_conventions", "weight_bound", "bounded_edge_target", "enumerate_floor_diagrams",
    "enumerate_floor_diagrams_bruteforce", "CycleDetected", "MarkingPoset",
    "linear_extension_count", "linear_extensions_bruteforce", "linear_extensions_python",
    "marking_poset", "DiagramTerm", "NonIntegralMarking", "SeveriResult", "marking_count",
    "severi_degree_fd",
]
