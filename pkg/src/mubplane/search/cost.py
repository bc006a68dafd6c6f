"""
MUB Cost and Gradient
=====================
Least-squares distance from mutual unbiasedness:

    C = Σ_{a<b} Σ_{i,j} (|<a_i|b_j>|² - 1/d)²

and its exact gradient with respect to the packed Hermitian generators.
The exponential map is differentiated in the generator's eigenbasis:
with H = V diag(λ) V^H,

    d exp(iH) = V (Φ ⊙ (V^H i dH V)) V^H,
    Φ_jk = e^{i(λ_j+λ_k)/2} sinc((λ_j-λ_k)/2).
"""
from __future__ import annotations

import numpy as np

from mubplane.exceptions import PreconditionError
from mubplane.mub.checks import check_orthonormal
from mubplane.mub.models import MubSet
from mubplane.search.parameters import BasisParameters, pack_derivative

DEFAULT_ORTHONORMAL_TOLERANCE = 1e-10


def _pair_costs(unitaries: list[np.ndarray]) -> float:
    d = unitaries[0].shape[0]
    total = 0.0
    for a in range(len(unitaries)):
        for b in range(a + 1, len(unitaries)):
            overlaps = unitaries[a].conj().T @ unitaries[b]
            total += float(np.sum((np.abs(overlaps) ** 2 - 1.0 / d) ** 2))
    return total


def mub_cost(s: MubSet, *, orthonormal_tol: float = DEFAULT_ORTHONORMAL_TOLERANCE) -> float:
    """Cost of an explicit set; zero exactly when the set is mutually unbiased.

    Raises:
        PreconditionError: If any basis is not orthonormal to ``orthonormal_tol``.
    """
    for i, b in enumerate(s.bases):
        report = check_orthonormal(b, orthonormal_tol)
        if not report.passed:
            raise PreconditionError(f"basis {i} is not orthonormal (deviation {report.deviation:.3e})")
    if len(s) < 2:
        return 0.0
    return _pair_costs([b.matrix for b in s.bases])


def parameter_cost(p: BasisParameters) -> float:
    """Cost of the set realized by ``p`` (identity first)."""
    d = p.dimension
    return _pair_costs([np.eye(d, dtype=np.complex128), *p.unitaries()])


def _exp_derivative_kernel(lam: np.ndarray) -> np.ndarray:
    half_sum = (lam[:, None] + lam[None, :]) / 2
    half_diff = (lam[:, None] - lam[None, :]) / 2
    return np.exp(1j * half_sum) * np.sinc(half_diff / np.pi)


def cost_and_gradient(p: BasisParameters) -> tuple[float, np.ndarray]:
    """Cost and its gradient with respect to ``p.values``."""
    d = p.dimension
    spectra = p.spectra()
    unitaries = [np.eye(d, dtype=np.complex128)]
    unitaries += [(vecs * np.exp(1j * lam)) @ vecs.conj().T for lam, vecs in spectra]

    # Euclidean gradient: dC = Re Σ conj(G_U) ⊙ dU for every basis.
    grads = [np.zeros((d, d), dtype=np.complex128) for _ in unitaries]
    cost = 0.0
    for a in range(len(unitaries)):
        for b in range(a + 1, len(unitaries)):
            overlaps = unitaries[a].conj().T @ unitaries[b]
            residual = np.abs(overlaps) ** 2 - 1.0 / d
            cost += float(np.sum(residual**2))
            weight = 4.0 * residual * overlaps
            grads[b] += unitaries[a] @ weight
            grads[a] += unitaries[b] @ weight.conj().T

    packed = []
    for (lam, vecs), g in zip(spectra, grads[1:]):
        phi = _exp_derivative_kernel(lam)
        k = vecs.conj().T @ g @ vecs
        gamma = vecs @ (-1j * np.conj(phi) * k) @ vecs.conj().T
        packed.append(pack_derivative(gamma))
    return cost, np.concatenate(packed) if packed else np.zeros(0)


def cost_gradient(p: BasisParameters) -> np.ndarray:
    """Analytic gradient of the cost with respect to every generator entry."""
    return cost_and_gradient(p)[1]
