"""
MUB Data Models
===============
Orthonormal bases of C^d and sets of them, plus the reports produced
when a set is checked for mutual unbiasedness.

A ``Basis`` stores its vectors as the columns of a read-only complex
matrix. Orthonormality is not enforced at construction; it is what
``mubplane.mub.checks.check_orthonormal`` certifies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from mubplane.exceptions import DomainError

# Entries below this modulus are skipped when fixing a column's phase.
PHASE_EPSILON = 1e-12


@dataclass(frozen=True, eq=False)
class Basis:
    """d vectors of C^d stored as the columns of ``matrix``."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"basis matrix must be square, got shape {m.shape}")
        if m.shape[0] < 2:
            raise DomainError(f"dimension must be at least 2, got {m.shape[0]}")
        if not np.isfinite(m).all():
            raise DomainError("basis entries must be finite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[complex]]) -> Basis:
        """Build from a list of vectors.

        Raises:
            DomainError: If the columns differ in length or do not number d.
        """
        lengths = {len(c) for c in columns}
        if len(lengths) > 1:
            raise DomainError(f"columns have mismatched lengths {sorted(lengths)}")
        if lengths and lengths.pop() != len(columns):
            raise DomainError(f"{len(columns)} columns cannot span a space of their own length")
        return cls(np.array(columns, dtype=np.complex128).T)

    def with_canonical_phase(self) -> Basis:
        """Rotate each column so its first nonzero entry is real positive."""
        m = self.matrix.copy()
        for j in range(m.shape[1]):
            nonzero = np.flatnonzero(np.abs(m[:, j]) > PHASE_EPSILON)
            if nonzero.size:
                pivot = m[nonzero[0], j]
                m[:, j] *= np.conj(pivot) / abs(pivot)
        return Basis(m)

    def rotated(self, unitary: np.ndarray) -> Basis:
        """The basis U·B."""
        return Basis(np.asarray(unitary) @ self.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Basis):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class MubSet:
    """An ordered collection of bases of one dimension."""

    dimension: int
    bases: tuple[Basis, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise DomainError(f"dimension must be at least 2, got {self.dimension}")
        object.__setattr__(self, "bases", tuple(self.bases))
        for i, b in enumerate(self.bases):
            if b.dimension != self.dimension:
                raise DomainError(f"basis {i} has dimension {b.dimension}, set has {self.dimension}")

    def __len__(self) -> int:
        return len(self.bases)

    def to_dict(self) -> dict[str, Any]:
        """JSON form; columns are the innermost lists of [re, im] pairs."""
        bases = []
        for b in self.bases:
            m = b.with_canonical_phase().matrix
            bases.append([[[float(z.real), float(z.imag)] for z in m[:, j]] for j in range(self.dimension)])
        return {"d": self.dimension, "bases": bases}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> MubSet:
        d = int(data["d"])
        bases = []
        for k, columns in enumerate(data.get("bases", [])):
            try:
                entries = np.array(columns, dtype=np.float64)
            except ValueError as e:
                raise DomainError(f"basis {k} is ragged: {e}") from e
            if entries.shape != (d, d, 2):
                raise DomainError(f"basis {k} has shape {entries.shape}, expected {(d, d, 2)}")
            bases.append(Basis((entries[..., 0] + 1j * entries[..., 1]).T))
        return cls(d, tuple(bases))


@dataclass(frozen=True)
class OrthonormalityReport:
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


@dataclass(frozen=True)
class PairReport:
    """Max deviation of |<a_i|b_j>| from 1/sqrt(d) for one pair of bases."""

    first: int
    second: int
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    def to_dict(self) -> dict[str, Any]:
        return {"pair": [self.first, self.second], "deviation": self.deviation, "passed": self.passed}


@dataclass(frozen=True)
class UnbiasednessReport:
    """Aggregate of every orthonormality and pairwise check on a set.

    Attributes:
        dimension: d.
        pair_results: One entry per unordered pair, in lexicographic order.
        orthonormality_deviation: Per-basis max |<v_i|v_j> - δ_ij|.
        tolerance: The threshold ``passed`` is judged against.
    """

    dimension: int
    pair_results: tuple[PairReport, ...]
    orthonormality_deviation: tuple[float, ...]
    tolerance: float

    @property
    def overall_max_deviation(self) -> float:
        values = [r.deviation for r in self.pair_results] + list(self.orthonormality_deviation)
        return max(values, default=0.0)

    @property
    def passed(self) -> bool:
        return self.overall_max_deviation <= self.tolerance

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.dimension,
            "bases": len(self.orthonormality_deviation),
            "pair_results": [r.to_dict() for r in self.pair_results],
            "orthonormality_deviation": list(self.orthonormality_deviation),
            "overall_max_deviation": self.overall_max_deviation,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
