"""Finite incidence geometry: structures, plane axioms, PG(2, q) and Singer sets."""
from mubplane.geometry.axioms import (
    AffineCertificate,
    AxiomFailure,
    PlaneCertificate,
    parallel_classes,
    verify_affine_plane,
    verify_projective_plane,
)
from mubplane.geometry.incidence import IncidenceStructure, dualize, restrict
from mubplane.geometry.pg2 import build_pg2
from mubplane.geometry.singer import (
    DifferenceSet,
    brute_force_difference_set,
    canonicalize,
    plane_from_difference_set,
    singer_difference_set,
)
from mubplane.geometry.transforms import affinize, affinize_dual

__all__ = [
    "AffineCertificate",
    "AxiomFailure",
    "DifferenceSet",
    "IncidenceStructure",
    "PlaneCertificate",
    "affinize",
    "affinize_dual",
    "brute_force_difference_set",
    "build_pg2",
    "canonicalize",
    "dualize",
    "parallel_classes",
    "plane_from_difference_set",
    "restrict",
    "singer_difference_set",
    "verify_affine_plane",
    "verify_projective_plane",
]
