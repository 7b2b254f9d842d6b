"""Exact Severi degrees of the plane and the quadric by three independent routes."""

from .floordiag import enumerate_floor_diagrams, severi_degree_fd
from .kontsevich import kontsevich_number
from .lattice import Plane, Quadric, arithmetic_genus, linear_system_dim, point_conditions

__all__ = ["Plane", "Quadric", "arithmetic_genus", "linear_system_dim", "point_conditions",
           "kontsevich_number", "enumerate_floor_diagrams", "severi_degree_fd"]
__version__ = "0.1.0"
