"""
Galois Ring GR(4, n)
====================
Z_4[x] / (F) where F is the Hensel lift of the modulus of GF(2^n).

Carries the even-characteristic MUB construction: its Teichmüller set
indexes the vectors and its trace feeds the fourth roots of unity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from mubplane.algebra import polynomials as poly
from mubplane.algebra.field import FieldSpec
from mubplane.exceptions import DomainError

Z4 = 4
RingElement = tuple[int, ...]


def hensel_lift(modulus: tuple[int, ...]) -> tuple[int, ...]:
    """Lift a monic irreducible f over Z_2 to the basic irreducible F over Z_4.

    Graeffe's method: with f = e + o split into even and odd powers,
    F(x^2) = ±(e(x)^2 - o(x)^2) mod 4, the sign making F monic.
    """
    n = len(modulus) - 1
    even = tuple(c if i % 2 == 0 else 0 for i, c in enumerate(modulus))
    odd = tuple(c if i % 2 == 1 else 0 for i, c in enumerate(modulus))
    e2 = poly.mul(even, even, Z4)
    o2 = poly.mul(odd, odd, Z4)
    width = 2 * n + 1
    e2 = e2 + (0,) * (width - len(e2))
    o2 = o2 + (0,) * (width - len(o2))
    sign = -1 if n % 2 else 1
    squared = [(sign * (a - b)) % Z4 for a, b in zip(e2, o2)]
    # Only even powers survive.
    lifted = tuple(squared[2 * i] for i in range(n + 1))
    if lifted[-1] != 1 or any(c % 2 != m for c, m in zip(lifted, modulus)):
        raise ArithmeticError(f"Hensel lift failed for {list(modulus)}")
    return lifted


@dataclass(frozen=True)
class GaloisRing:
    """GR(4, n) built over the binary field ``spec``."""

    spec: FieldSpec

    def __post_init__(self) -> None:
        if self.spec.characteristic != 2:
            raise DomainError("Galois rings GR(4, n) sit over fields of characteristic 2")

    @property
    def degree(self) -> int:
        return self.spec.degree

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        return hensel_lift(self.spec.modulus)

    def reduce(self, a: tuple[int, ...]) -> RingElement:
        r = poly.mod(a, self.modulus, Z4)
        return r + (0,) * (self.degree - len(r))

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return tuple((x + y) % Z4 for x, y in zip(a, b))

    def scale(self, c: int, a: RingElement) -> RingElement:
        return tuple((c * x) % Z4 for x in a)

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        return self.reduce(poly.mul(a, b, Z4))

    def power(self, a: RingElement, exponent: int) -> RingElement:
        result: RingElement = (1,) + (0,) * (self.degree - 1)
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    @cached_property
    def teichmuller(self) -> tuple[RingElement, ...]:
        """Teichmüller representatives, listed in the order of the field elements they reduce to.

        For any lift z of a field element, z^(2^n) is its Teichmüller representative.
        """
        size = 2**self.degree
        reps = []
        for element in self.spec.elements():
            reps.append(self.power(tuple(element.coefficients), size))
        return tuple(reps)

    @cached_property
    def _basis_traces(self) -> tuple[int, ...]:
        # Tr(x^i) = trace of the Z_4-linear map "multiply by x^i".
        n = self.degree
        traces = []
        for i in range(n):
            total = 0
            for j in range(n):
                monomial = (0,) * (i + j) + (1,)
                total += self.reduce(monomial)[j]
            traces.append(total % Z4)
        return tuple(traces)

    def trace(self, a: RingElement) -> int:
        """Ring trace GR(4, n) → Z_4 (linear in the coefficients)."""
        return sum(c * t for c, t in zip(a, self._basis_traces)) % Z4
