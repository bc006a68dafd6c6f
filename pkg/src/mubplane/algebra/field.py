"""
Finite Fields GF(p^n)
=====================
Exact arithmetic on polynomials over Z_p reduced modulo a monic irreducible.

A ``FieldSpec`` fixes the field (characteristic, degree, modulus); a
``FieldElement`` is a little-endian coefficient tuple bound to its spec.
Both are frozen and hashable, so they can be shared across threads and
used as cache keys.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterator, Sequence

import numpy as np

from mubplane.algebra import polynomials as poly
from mubplane.algebra.numbers import is_prime, prime_factors
from mubplane.exceptions import CapacityError, DomainError, FieldDivisionByZero

logger = logging.getLogger(__name__)

DEFAULT_FIELD_ORDER_MAX = 2**20


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) as Z_p[x] / (modulus).

    Attributes:
        characteristic: The prime p.
        degree: The extension degree n.
        modulus: Little-endian coefficients of the monic irreducible (length n+1).
    """

    characteristic: int
    degree: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.characteristic):
            raise DomainError(f"characteristic {self.characteristic} is not prime")
        if self.degree < 1:
            raise DomainError(f"degree must be positive, got {self.degree}")
        if len(self.modulus) != self.degree + 1 or self.modulus[-1] != 1:
            raise DomainError(f"modulus {list(self.modulus)} is not monic of degree {self.degree}")
        if any(not 0 <= c < self.characteristic for c in self.modulus):
            raise DomainError(f"modulus coefficients must lie in [0, {self.characteristic})")
        if not poly.is_irreducible(self.modulus, self.characteristic):
            raise DomainError(f"modulus {list(self.modulus)} is reducible over Z_{self.characteristic}")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def n(self) -> int:
        return self.degree

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Build an element from its integer encoding or a coefficient list."""
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise DomainError(f"{value} is not an element index of GF({self.order})")
            coeffs = []
            for _ in range(self.degree):
                value, c = divmod(value, self.characteristic)
                coeffs.append(c)
            return FieldElement(tuple(coeffs), self)
        coeffs = list(value)
        if len(coeffs) > self.degree:
            raise DomainError(f"expected at most {self.degree} coefficients, got {len(coeffs)}")
        coeffs += [0] * (self.degree - len(coeffs))
        return FieldElement(tuple(c % self.characteristic for c in coeffs), self)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in increasing integer encoding."""
        for i in range(self.order):
            yield self.element(i)

    def describe_modulus(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i > 0 else (f"{c}" if i == 0 else f"{c}{mono}"))
        return " + ".join(terms)

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.characteristic, "n": self.degree, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FieldSpec:
        return cls(int(data["p"]), int(data["n"]), tuple(int(c) for c in data["modulus"]))


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^n): ``coefficients[i]`` multiplies x^i."""

    coefficients: tuple[int, ...]
    spec: FieldSpec

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.spec.degree:
            raise DomainError(f"element needs {self.spec.degree} coefficients")
        if any(not 0 <= c < self.spec.characteristic for c in self.coefficients):
            raise DomainError(f"coefficients must lie in [0, {self.spec.characteristic})")

    @cached_property
    def index(self) -> int:
        """Integer encoding sum(c_i * p**i)."""
        return poly.encode(self.coefficients, self.spec.characteristic)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise DomainError("operands belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.spec.characteristic
        return FieldElement(tuple((a + b) % p for a, b in zip(self.coefficients, other.coefficients)), self.spec)

    def __neg__(self) -> FieldElement:
        p = self.spec.characteristic
        return FieldElement(tuple((-a) % p for a in self.coefficients), self.spec)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        spec = self.spec
        product = poly.mul(self.coefficients, other.coefficients, spec.characteristic)
        return spec.element(poly.mod(product, spec.modulus, spec.characteristic))

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.spec.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> FieldElement:
        """Multiplicative inverse via a^(q-2).

        Raises:
            FieldDivisionByZero: If the element is zero.
        """
        if self.is_zero():
            raise FieldDivisionByZero(f"zero has no inverse in GF({self.spec.order})")
        return self ** (self.spec.order - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"GF({self.spec.order})[{self.index}]"


def build_field(p: int, n: int, *, order_max: int = DEFAULT_FIELD_ORDER_MAX) -> FieldSpec:
    """Construct GF(p^n) with the smallest monic irreducible modulus.

    Args:
        p: Characteristic (must be prime).
        n: Extension degree ≥ 1.
        order_max: Capacity bound on p**n.

    Raises:
        DomainError: If p is not prime or n < 1.
        CapacityError: If p**n exceeds ``order_max``.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if p**n > order_max:
        raise CapacityError(f"GF({p}^{n}) exceeds the field size cap {order_max}", p**n, order_max)
    modulus = poly.smallest_monic_irreducible(p, n)
    spec = FieldSpec(p, n, modulus)
    logger.debug("GF(%d^%d) modulus %s", p, n, spec.describe_modulus())
    return spec


_OPERATIONS: dict[str, tuple[int, Callable[..., FieldElement]]] = {
    "add": (2, lambda a, b: a + b),
    "mul": (2, lambda a, b: a * b),
    "neg": (1, lambda a: -a),
    "inv": (1, lambda a: a.inverse()),
}


def field_arithmetic(op: str, *operands: FieldElement | int) -> FieldElement:
    """Dispatch one field operation by name.

    ``pow`` takes an element and an integer exponent; the others take
    one (neg, inv) or two (add, mul) elements of the same field.

    Raises:
        DomainError: Unknown op, wrong arity or mismatched fields.
        FieldDivisionByZero: ``inv`` of zero.
    """
    if op == "pow":
        if len(operands) != 2 or not isinstance(operands[0], FieldElement) or not isinstance(operands[1], int):
            raise DomainError("pow expects (element, integer exponent)")
        return operands[0] ** operands[1]
    if op not in _OPERATIONS:
        raise DomainError(f"unknown field operation {op!r}")
    arity, fn = _OPERATIONS[op]
    if len(operands) != arity or not all(isinstance(x, FieldElement) for x in operands):
        raise DomainError(f"{op} expects {arity} field element(s)")
    if arity == 2 and operands[0].spec != operands[1].spec:  # type: ignore[union-attr]
        raise DomainError("operands belong to different fields")
    return fn(*operands)


def multiplicative_order(a: FieldElement) -> int:
    """Order of a nonzero element in the multiplicative group."""
    if a.is_zero():
        raise FieldDivisionByZero("zero has no multiplicative order")
    group = a.spec.order - 1
    order = group
    for r in prime_factors(group) if group > 1 else []:
        while order % r == 0 and (a ** (order // r)) == a.spec.one:
            order //= r
    return order


@lru_cache(maxsize=64)
def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest element (by integer encoding) generating the multiplicative group."""
    group = spec.order - 1
    if group == 1:
        return spec.one
    exponents = [group // r for r in prime_factors(group)]
    for i in range(2, spec.order):
        g = spec.element(i)
        if all(g**e != spec.one for e in exponents):
            logger.debug("GF(%d) primitive element %r", spec.order, g)
            return g
    raise ArithmeticError(f"GF({spec.order}) has no primitive element")  # unreachable for a field


def trace(a: FieldElement, subfield_degree: int = 1) -> FieldElement:
    """Relative trace of ``a`` down to GF(p^subfield_degree).

    Sum of the conjugates a^(q^i), i < n/m, with q = p^m.
    """
    spec = a.spec
    if subfield_degree < 1 or spec.degree % subfield_degree:
        raise DomainError(f"GF(p^{subfield_degree}) is not a subfield of GF(p^{spec.degree})")
    q = spec.characteristic**subfield_degree
    total, conjugate = spec.zero, a
    for _ in range(spec.degree // subfield_degree):
        total = total + conjugate
        conjugate = conjugate**q
    return total


@dataclass(frozen=True)
class FieldTables:
    """Addition/multiplication tables over element indices."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray


@lru_cache(maxsize=32)
def field_tables(spec: FieldSpec) -> FieldTables:
    """Dense operation tables (q × q); meant for the small fields used by geometry and MUBs."""
    elements = list(spec.elements())
    q = spec.order
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in elements:
        for b in elements[a.index :]:
            add[a.index, b.index] = add[b.index, a.index] = (a + b).index
            mul[a.index, b.index] = mul[b.index, a.index] = (a * b).index
    neg = np.array([(-a).index for a in elements], dtype=np.int64)
    for table in (add, mul, neg):
        table.setflags(write=False)
    return FieldTables(add=add, mul=mul, neg=neg)
