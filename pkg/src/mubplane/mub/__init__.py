"""Mutually unbiased bases: models, checks and the prime-power construction."""
from mubplane.mub.budget import MeasurementBudget, measurement_budget
from mubplane.mub.checks import check_mub_set, check_orthonormal, check_pair_unbiased
from mubplane.mub.construct import construct_mub_set, fourier_basis, standard_basis
from mubplane.mub.models import Basis, MubSet, PairReport, UnbiasednessReport

__all__ = [
    "Basis",
    "MeasurementBudget",
    "MubSet",
    "PairReport",
    "UnbiasednessReport",
    "check_mub_set",
    "check_orthonormal",
    "check_pair_unbiased",
    "construct_mub_set",
    "fourier_basis",
    "measurement_budget",
    "standard_basis",
]
