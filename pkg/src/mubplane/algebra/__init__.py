"""Exact algebra: number theory, finite fields and Galois rings."""
from mubplane.algebra.field import (
    FieldElement,
    FieldSpec,
    build_field,
    field_arithmetic,
    field_tables,
    primitive_element,
    trace,
)
from mubplane.algebra.numbers import (
    BruckRyserOutcome,
    PlaneExistenceVerdict,
    PlaneStatus,
    PrimePowerDecomposition,
    TwoSquareWitness,
    bruck_ryser,
    classify_order,
    gaussian_binomial,
    is_sum_of_two_squares,
    plane_existence_status,
)

__all__ = [
    "BruckRyserOutcome",
    "FieldElement",
    "FieldSpec",
    "PlaneExistenceVerdict",
    "PlaneStatus",
    "PrimePowerDecomposition",
    "TwoSquareWitness",
    "bruck_ryser",
    "build_field",
    "classify_order",
    "field_arithmetic",
    "field_tables",
    "gaussian_binomial",
    "is_sum_of_two_squares",
    "plane_existence_status",
    "primitive_element",
    "trace",
]
