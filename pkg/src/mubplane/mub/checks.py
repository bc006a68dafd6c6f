"""
Unbiasedness Checks
===================
Orthonormality of one basis, unbiasedness of a pair, and the aggregate
check of a whole set.

Pair overlaps are always evaluated with the two bases in a fixed order
(by their raw bytes) so that swapping the arguments reproduces the same
floating-point values.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Sequence

import numpy as np

from mubplane.exceptions import BoundViolation, DomainError
from mubplane.mub.models import Basis, MubSet, OrthonormalityReport, PairReport, UnbiasednessReport

logger = logging.getLogger(__name__)

DEFAULT_CERTIFY_TOLERANCE = 1e-9


def _require_positive(tol: float) -> None:
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")


def _as_basis(b: Basis | Sequence[Sequence[complex]]) -> Basis:
    return b if isinstance(b, Basis) else Basis.from_columns(b)


def check_orthonormal(b: Basis | Sequence[Sequence[complex]], tol: float = DEFAULT_CERTIFY_TOLERANCE) -> OrthonormalityReport:
    """Max |<v_i|v_j> - δ_ij| over the columns of ``b``.

    Raises:
        DomainError: Non-positive tolerance, or raw columns of mismatched length.
    """
    _require_positive(tol)
    basis = _as_basis(b)
    m = basis.matrix
    gram = m.conj().T @ m
    deviation = float(np.abs(gram - np.eye(basis.dimension)).max())
    return OrthonormalityReport(deviation=deviation, tolerance=tol)


def overlap_moduli(a: Basis, b: Basis) -> np.ndarray:
    """|<a_i|b_j>| as a d × d array, identical bits whichever argument comes first."""
    if a.dimension != b.dimension:
        raise DomainError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    if a.matrix.tobytes() <= b.matrix.tobytes():
        return np.abs(a.matrix.conj().T @ b.matrix)
    return np.abs(b.matrix.conj().T @ a.matrix).T


def check_pair_unbiased(
    a: Basis, b: Basis, tol: float = DEFAULT_CERTIFY_TOLERANCE, *, labels: tuple[int, int] = (0, 1)
) -> PairReport:
    """Max | |<a_i|b_j>| - 1/sqrt(d) | over all d² cross products.

    Raises:
        DomainError: Mismatched dimensions or non-positive tolerance.
    """
    _require_positive(tol)
    moduli = overlap_moduli(a, b)
    deviation = float(np.abs(moduli - 1.0 / np.sqrt(a.dimension)).max())
    return PairReport(first=labels[0], second=labels[1], deviation=deviation, tolerance=tol)


def check_mub_set(s: MubSet, tol: float = DEFAULT_CERTIFY_TOLERANCE, *, workers: int = 1) -> UnbiasednessReport:
    """Check every basis for orthonormality and every unordered pair for unbiasedness.

    Args:
        s: The set to check.
        tol: Pass threshold applied to the overall maximum deviation.
        workers: Threads used for the pairwise checks; results are identical for any value.

    Raises:
        BoundViolation: If the set holds more than d+1 bases.
    """
    _require_positive(tol)
    d = s.dimension
    if len(s) > d + 1:
        raise BoundViolation(d, len(s))
    ortho = tuple(check_orthonormal(b, tol).deviation for b in s.bases)
    pairs = list(combinations(range(len(s)), 2))

    def run(pair: tuple[int, int]) -> PairReport:
        i, j = pair
        return check_pair_unbiased(s.bases[i], s.bases[j], tol, labels=pair)

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(run, pairs))
    else:
        results = tuple(run(p) for p in pairs)
    report = UnbiasednessReport(d, results, ortho, tol)
    logger.debug("checked %d bases in d=%d: max deviation %.3e", len(s), d, report.overall_max_deviation)
    return report
