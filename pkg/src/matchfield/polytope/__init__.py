from .hull import (
    Hull,
    PointConfiguration,
    all_points_are_vertices,
    convex_hull,
    matching_field_polytope,
    vertex_certificate,
)
from .lattice import FaceLattice, euler_characteristic_ok, f_vector, face_lattice

__all__ = [
    "FaceLattice",
    "Hull",
    "PointConfiguration",
    "all_points_are_vertices",
    "convex_hull",
    "euler_characteristic_ok",
    "f_vector",
    "face_lattice",
    "matching_field_polytope",
    "vertex_certificate",
]

from .isomorphism import check_isomorphism, combinatorially_isomorphic, isomorphism

__all__ += ["check_isomorphism", "combinatorially_isomorphic", "isomorphism"]
