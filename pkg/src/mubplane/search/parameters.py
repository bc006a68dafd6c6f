"""
Basis Parameterization
======================
Each free basis is exp(iH) for a Hermitian generator H, packed into d²
reals: the d diagonal entries, then the real parts of the strict upper
triangle, then its imaginary parts (row-major). The first basis of a set
is fixed at the identity and carries no parameters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import schur

from mubplane.exceptions import DomainError
from mubplane.mub.models import Basis, MubSet


def parameter_count(d: int) -> int:
    return d * d


def unpack_generator(values: np.ndarray, d: int) -> np.ndarray:
    iu = np.triu_indices(d, 1)
    n_upper = len(iu[0])
    upper = np.zeros((d, d), dtype=np.complex128)
    upper[iu] = values[d : d + n_upper] + 1j * values[d + n_upper :]
    return np.diag(values[:d]).astype(np.complex128) + upper + upper.conj().T


def pack_generator(h: np.ndarray) -> np.ndarray:
    d = h.shape[0]
    iu = np.triu_indices(d, 1)
    return np.concatenate([np.real(np.diag(h)), np.real(h[iu]), np.imag(h[iu])])


def pack_derivative(gamma: np.ndarray) -> np.ndarray:
    """Map dC = Re Σ conj(Γ_jk) dH_jk onto the packed coordinates."""
    d = gamma.shape[0]
    iu = np.triu_indices(d, 1)
    lower = gamma.T[iu]
    return np.concatenate(
        [
            np.real(np.diag(gamma)),
            np.real(gamma[iu]) + np.real(lower),
            np.imag(gamma[iu]) - np.imag(lower),
        ]
    )


@dataclass(frozen=True, eq=False)
class BasisParameters:
    """Packed generators of the free bases of an m-basis set in dimension d."""

    dimension: int
    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.array(self.values, dtype=np.float64).reshape(-1)
        per = parameter_count(self.dimension)
        if self.dimension < 2 or v.size % per:
            raise DomainError(f"{v.size} values do not split into d² = {per} per basis")
        if not np.isfinite(v).all():
            raise DomainError("parameters must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def free_count(self) -> int:
        return self.values.size // parameter_count(self.dimension)

    @property
    def basis_count(self) -> int:
        return self.free_count + 1

    def generators(self) -> list[np.ndarray]:
        per = parameter_count(self.dimension)
        return [unpack_generator(self.values[k * per : (k + 1) * per], self.dimension) for k in range(self.free_count)]

    def spectra(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """Eigen-decomposition (λ, V) of every generator."""
        return [np.linalg.eigh(h) for h in self.generators()]

    def unitaries(self) -> list[np.ndarray]:
        """exp(iH) = V diag(e^{iλ}) V^H for every generator, identity not included."""
        return [(vecs * np.exp(1j * lam)) @ vecs.conj().T for lam, vecs in self.spectra()]

    def mub_set(self) -> MubSet:
        d = self.dimension
        bases = [Basis(np.eye(d, dtype=np.complex128))] + [Basis(u) for u in self.unitaries()]
        return MubSet(d, tuple(bases))

    @classmethod
    def random(cls, dimension: int, free_count: int, rng: np.random.Generator, scale: float = 1.0) -> BasisParameters:
        return cls(dimension, scale * rng.standard_normal(free_count * parameter_count(dimension)))

    @classmethod
    def zeros(cls, dimension: int, free_count: int) -> BasisParameters:
        return cls(dimension, np.zeros(free_count * parameter_count(dimension)))

    @classmethod
    def from_unitaries(cls, unitaries: Sequence[np.ndarray]) -> BasisParameters:
        """Generators H with exp(iH) = U, via the complex Schur form of each unitary.

        Raises:
            DomainError: If the matrices are not square of one common size.
        """
        if not unitaries:
            raise DomainError("at least one unitary is required")
        d = np.asarray(unitaries[0]).shape[0]
        packed = []
        for u in unitaries:
            u = np.asarray(u, dtype=np.complex128)
            if u.shape != (d, d):
                raise DomainError(f"expected a {d}×{d} matrix, got {u.shape}")
            # A normal matrix has a diagonal Schur form.
            t, z = schur(u, output="complex")
            h = (z * np.angle(np.diag(t))) @ z.conj().T
            packed.append(pack_generator((h + h.conj().T) / 2))
        return cls(d, np.concatenate(packed))

    @classmethod
    def from_mub_set(cls, s: MubSet) -> BasisParameters:
        """Parameters for a set whose first basis is the identity (others are taken as given)."""
        return cls.from_unitaries([b.matrix for b in s.bases[1:]])
