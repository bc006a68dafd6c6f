"""
Number Theory - Orders, Squares and Plane Existence
===================================================
Exact integer routines behind the plane/MUB correspondence:

- prime-power classification of an order d
- Gaussian binomial coefficients (subspace counts of PG(n, d))
- sums of two squares and the Bruck-Ryser exclusion
- the per-order plane existence verdict

Everything here is a pure function over Python ints.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import NamedTuple

from mubplane.exceptions import DomainError

logger = logging.getLogger(__name__)

# Orders excluded by exhaustive computer search.
COMPUTER_PROOF_ORDERS: frozenset[int] = frozenset({10})


class PrimePowerDecomposition(NamedTuple):
    """An order written as prime ** exponent."""

    value: int
    prime: int
    exponent: int


class TwoSquareWitness(NamedTuple):
    """a² + b² equals the queried integer, with a ≤ b."""

    a: int
    b: int


class BruckRyserOutcome(str, Enum):
    RULED_OUT = "RuledOut"
    INCONCLUSIVE = "Inconclusive"


class PlaneStatus(str, Enum):
    """Existence classification of a projective plane of a given order."""

    EXISTS_PRIME_POWER = "ExistsPrimePower"
    RULED_OUT_BRUCK_RYSER = "RuledOutBruckRyser"
    RULED_OUT_BY_COMPUTATION = "RuledOutByComputation"
    OPEN = "Open"

    @property
    def ruled_out(self) -> bool:
        return self in (PlaneStatus.RULED_OUT_BRUCK_RYSER, PlaneStatus.RULED_OUT_BY_COMPUTATION)


@dataclass(frozen=True)
class PlaneExistenceVerdict:
    """Immutable verdict on the existence of a plane of order ``order``.

    Attributes:
        order: The plane order d.
        status: One of the four PlaneStatus values.
        detail: Human-readable justification.
    """

    order: int
    status: PlaneStatus
    detail: str

    def to_dict(self) -> dict[str, object]:
        return {"order": self.order, "status": self.status.value, "detail": self.detail}


def is_prime(n: int) -> bool:
    """Trial-division primality test (adequate for the orders in scope)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    factors: list[int] = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def classify_order(d: int) -> PrimePowerDecomposition | None:
    """Decompose ``d`` as p**k with p prime.

    Args:
        d: Order to classify, d ≥ 2.

    Returns:
        The unique decomposition, or ``None`` when d is not a prime power.

    Raises:
        DomainError: If d < 2.

    Examples:
        >>> classify_order(9)
        PrimePowerDecomposition(value=9, prime=3, exponent=2)
        >>> classify_order(6) is None
        True
    """
    if d < 2:
        raise DomainError(f"order must be at least 2, got {d}")
    factors = prime_factors(d)
    if len(factors) != 1:
        return None
    p = factors[0]
    k, rest = 0, d
    while rest % p == 0:
        rest //= p
        k += 1
    return PrimePowerDecomposition(value=d, prime=p, exponent=k)


def gaussian_binomial(n: int, k: int, d: int) -> int:
    """Number of k-dimensional subspaces of the n-dimensional projective space over GF(d).

    Evaluates the product formula

        [n+1, k+1]_d = prod_{i=0..k} (d^{n+1} - d^i) / prod_{i=0..k} (d^{k+1} - d^i)

    in exact integer arithmetic. k = -1 counts the empty subspace.

    Raises:
        DomainError: If not -1 ≤ k ≤ n or d < 2.
    """
    if d < 2:
        raise DomainError(f"field order must be at least 2, got {d}")
    if not -1 <= k <= n:
        raise DomainError(f"need -1 <= k <= n, got n={n}, k={k}")
    numerator = 1
    denominator = 1
    for i in range(k + 1):
        numerator *= d ** (n + 1) - d**i
        denominator *= d ** (k + 1) - d**i
    count, remainder = divmod(numerator, denominator)
    if remainder:
        # Exact for every integer d ≥ 2.
        raise ArithmeticError(f"inexact Gaussian binomial for n={n}, k={k}, d={d}")
    return count


def projective_space_counts(n: int, q: int) -> list[int]:
    """Subspace counts of PG(n, q) for k = 0 .. n-1 (points, lines, ...)."""
    return [gaussian_binomial(n, k, q) for k in range(n)]


def is_sum_of_two_squares(d: int) -> TwoSquareWitness | None:
    """Find d = a² + b² with the smallest a, trying 0 ≤ a ≤ b ≤ √d."""
    if d < 0:
        raise DomainError(f"expected a nonnegative integer, got {d}")
    a = 0
    while 2 * a * a <= d:
        b2 = d - a * a
        b = isqrt(b2)
        if b * b == b2:
            return TwoSquareWitness(a, b)
        a += 1
    return None


def bruck_ryser(d: int) -> BruckRyserOutcome:
    """Apply the Bruck-Ryser exclusion to order ``d``.

    No projective plane of order d exists if d-1 or d-2 is divisible by 4
    and d is not the sum of two squares.
    """
    if d < 2:
        raise DomainError(f"order must be at least 2, got {d}")
    congruent = (d - 1) % 4 == 0 or (d - 2) % 4 == 0
    if congruent and is_sum_of_two_squares(d) is None:
        return BruckRyserOutcome.RULED_OUT
    return BruckRyserOutcome.INCONCLUSIVE


def plane_existence_status(d: int) -> PlaneExistenceVerdict:
    """Classify the existence of a projective plane of order ``d``.

    Decision chain: prime power → exists; Bruck-Ryser → ruled out;
    computer-proof table → ruled out; otherwise open.
    """
    decomposition = classify_order(d)
    if decomposition is not None:
        return PlaneExistenceVerdict(
            d,
            PlaneStatus.EXISTS_PRIME_POWER,
            f"{d} = {decomposition.prime}^{decomposition.exponent}; PG(2,{d}) exists",
        )
    if bruck_ryser(d) is BruckRyserOutcome.RULED_OUT:
        return PlaneExistenceVerdict(
            d,
            PlaneStatus.RULED_OUT_BRUCK_RYSER,
            f"{d} ≡ {d % 4} (mod 4) and {d} is not a sum of two squares",
        )
    if d in COMPUTER_PROOF_ORDERS:
        return PlaneExistenceVerdict(
            d, PlaneStatus.RULED_OUT_BY_COMPUTATION, f"no plane of order {d} (exhaustive computer search)"
        )
    witness = is_sum_of_two_squares(d)
    reason = (
        f"{d} = {witness.a}² + {witness.b}²" if witness is not None else f"{d} ≡ {d % 4} (mod 4)"
    )
    return PlaneExistenceVerdict(d, PlaneStatus.OPEN, f"not a prime power; Bruck-Ryser inconclusive ({reason})")
