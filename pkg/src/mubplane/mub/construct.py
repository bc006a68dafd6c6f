"""
Complete MUB Sets in Prime-Power Dimensions
===========================================
The standard basis plus d bases built from additive characters of GF(d).

- Odd characteristic: v_{a,b}(x) = ω^Tr(a x² + b x) / sqrt(d), ω = e^{2πi/p},
  for a, b, x in GF(d).
- Characteristic 2: v_{a,b}(x) = i^Tr((a + 2b) x) / sqrt(d) over the
  Teichmüller set of the Galois ring GR(4, n).

Basis a collects the vectors v_{a,b} for b in field order.
"""
from __future__ import annotations

import logging

import numpy as np

from mubplane.algebra.field import DEFAULT_FIELD_ORDER_MAX, FieldSpec, build_field, field_tables, trace
from mubplane.algebra.numbers import classify_order
from mubplane.algebra.ring import GaloisRing
from mubplane.exceptions import CapacityError, NotPrimePowerError
from mubplane.mub.checks import check_mub_set
from mubplane.mub.models import Basis, MubSet

logger = logging.getLogger(__name__)

DEFAULT_DIMENSION_MAX = 32
SELF_CHECK_TOLERANCE = 1e-12


def standard_basis(d: int) -> Basis:
    return Basis(np.eye(d, dtype=np.complex128))


def fourier_basis(d: int) -> Basis:
    """Columns ω^{jk} / sqrt(d) with ω = e^{2πi/d}."""
    k = np.arange(d)
    return Basis(np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d))


def _odd_bases(spec: FieldSpec) -> list[Basis]:
    q, p = spec.order, spec.characteristic
    tables = field_tables(spec)
    # Traces land in the prime field, whose element indices are 0..p-1.
    tr = np.array([trace(e).index for e in spec.elements()], dtype=np.int64)
    squares = tables.mul[np.arange(q), np.arange(q)]
    bases = []
    for a in range(q):
        # rows x, columns b: a·x² + b·x
        argument = tables.add[tables.mul[a, squares][:, None], tables.mul]
        bases.append(Basis(np.exp(2j * np.pi * tr[argument] / p) / np.sqrt(q)))
    return bases


def _even_bases(spec: FieldSpec) -> list[Basis]:
    q = spec.order
    ring = GaloisRing(spec)
    reps = ring.teichmuller
    # pairing[u, x] = Tr(T_u · T_x) in Z_4
    pairing = np.array([[ring.trace(ring.mul(u, x)) for x in reps] for u in reps], dtype=np.int64)
    bases = []
    for a in range(q):
        exponent = (pairing[a][:, None] + 2 * pairing.T) % 4
        bases.append(Basis(np.exp(0.5j * np.pi * exponent) / np.sqrt(q)))
    return bases


def construct_mub_set(
    d: int,
    *,
    dimension_max: int = DEFAULT_DIMENSION_MAX,
    field_order_max: int = DEFAULT_FIELD_ORDER_MAX,
    tolerance: float = SELF_CHECK_TOLERANCE,
) -> MubSet:
    """Complete set of d+1 mutually unbiased bases for a prime-power d.

    The result is checked against ``tolerance`` before it is returned.

    Raises:
        DomainError: If d < 2.
        NotPrimePowerError: If d is not a prime power.
        CapacityError: If d exceeds ``dimension_max``.
        ArithmeticError: If the built set misses ``tolerance``.
    """
    decomposition = classify_order(d)
    if decomposition is None:
        raise NotPrimePowerError(d)
    if d > dimension_max:
        raise CapacityError(f"dimension {d} exceeds the MUB dimension cap {dimension_max}", d, dimension_max)
    spec = build_field(decomposition.prime, decomposition.exponent, order_max=field_order_max)
    route = _odd_bases if spec.characteristic % 2 else _even_bases
    mubs = MubSet(d, (standard_basis(d), *route(spec)))

    report = check_mub_set(mubs, tolerance)
    if not report.passed:
        raise ArithmeticError(f"constructed set for d={d} deviates by {report.overall_max_deviation:.3e}")
    logger.debug("d=%d: %d bases, max deviation %.3e", d, len(mubs), report.overall_max_deviation)
    return mubs


def pauli_eigenbases() -> MubSet:
    """Eigenbases of Z, X and Y in d = 2."""
    s = 1 / np.sqrt(2)
    z = np.eye(2)
    x = s * np.array([[1, 1], [1, -1]])
    y = s * np.array([[1, 1], [1j, -1j]])
    return MubSet(2, (Basis(z), Basis(x), Basis(y)))

