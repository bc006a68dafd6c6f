"""
Subspace Enumeration
====================
Exhaustive enumeration of linear subspaces of GF(q)^(n+1).

The brute-force counterpart of ``gaussian_binomial``: subspaces are grown
one dimension at a time by span closure and deduplicated by their
element sets. Vectors are encoded as integers in base q.
"""
from __future__ import annotations

import logging

import numpy as np

from mubplane.algebra.field import FieldSpec, field_tables
from mubplane.exceptions import CapacityError, DomainError

logger = logging.getLogger(__name__)

VECTOR_COUNT_MAX = 2**16


class _VectorSpace:
    """GF(q)^length with integer-encoded vectors."""

    def __init__(self, spec: FieldSpec, length: int) -> None:
        self.q = spec.order
        self.length = length
        self.size = self.q**length
        self.tables = field_tables(spec)
        self.weights = self.q ** np.arange(length, dtype=np.int64)
        codes = np.arange(self.size, dtype=np.int64)
        self.digits = (codes[:, None] // self.weights[None, :]) % self.q

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return digits @ self.weights

    def span_with(self, subspace: np.ndarray, v: int) -> np.ndarray:
        """Sorted codes of span(subspace ∪ {v})."""
        multiples = self.tables.mul[np.arange(self.q)[:, None], self.digits[v][None, :]]
        sums = self.tables.add[self.digits[subspace][:, None, :], multiples[None, :, :]]
        return np.unique(self.encode(sums.reshape(-1, self.length)))


def count_subspaces(spec: FieldSpec, n: int, k: int) -> int:
    """Count (k+1)-dimensional subspaces of GF(q)^(n+1) by exhaustive enumeration.

    Equivalently the k-dimensional subspaces of PG(n, q).

    Raises:
        DomainError: If not -1 ≤ k ≤ n.
        CapacityError: If q^(n+1) exceeds the enumeration bound.
    """
    if not -1 <= k <= n:
        raise DomainError(f"need -1 <= k <= n, got n={n}, k={k}")
    if spec.order ** (n + 1) > VECTOR_COUNT_MAX:
        raise CapacityError(
            f"GF({spec.order})^{n + 1} is too large to enumerate", spec.order ** (n + 1), VECTOR_COUNT_MAX
        )
    space = _VectorSpace(spec, n + 1)
    level: list[np.ndarray] = [np.zeros(1, dtype=np.int64)]
    for dim in range(1, k + 2):
        seen: dict[bytes, np.ndarray] = {}
        for subspace in level:
            covered = np.zeros(space.size, dtype=bool)
            covered[subspace] = True
            for v in range(space.size):
                if covered[v]:
                    continue
                grown = space.span_with(subspace, v)
                covered[grown] = True
                seen.setdefault(grown.tobytes(), grown)
        level = list(seen.values())
        logger.debug("GF(%d)^%d: %d subspaces of dimension %d", spec.order, n + 1, len(level), dim)
    return len(level)
