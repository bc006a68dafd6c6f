"""
Polynomials over Z_p
====================
Dense little-endian coefficient lists (``poly[i]`` is the coefficient of x^i).

Used to pick irreducible moduli for GF(p^n) and to reduce products.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

Poly = tuple[int, ...]


def trim(poly: Sequence[int]) -> Poly:
    """Drop trailing zero coefficients; the zero polynomial is ()."""
    coeffs = list(poly)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(poly: Sequence[int]) -> int:
    """Degree of ``poly``; -1 for the zero polynomial."""
    return len(trim(poly)) - 1


def encode(poly: Sequence[int], p: int) -> int:
    """Integer encoding sum(c_i * p**i); the order used for all tie-breaking."""
    return sum(c * p**i for i, c in enumerate(poly))


def mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """Remainder of ``a`` modulo the nonzero polynomial ``m`` over Z_p."""
    m = trim(m)
    if not m:
        raise ZeroDivisionError("polynomial modulus is zero")
    rem = list(trim(a))
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(rem) - 1 >= dm and rem:
        shift = len(rem) - 1 - dm
        factor = (rem[-1] * lead_inv) % p
        for i, mi in enumerate(m):
            rem[shift + i] = (rem[shift + i] - factor * mi) % p
        rem = list(trim(rem))
    return tuple(rem)


def has_root(poly: Sequence[int], p: int) -> bool:
    for x in range(p):
        value = 0
        for c in reversed(poly):
            value = (value * x + c) % p
        if value == 0:
            return True
    return False


def monic_candidates(p: int, n: int):
    """All monic degree-n polynomials over Z_p, in increasing integer encoding."""
    for low in product(range(p), repeat=n):
        # product() varies the last slot fastest; reverse so x^0 varies fastest.
        yield tuple(reversed(low)) + (1,)


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, n: int) -> tuple[Poly, ...]:
    """Every monic irreducible of degree n over Z_p, in increasing integer encoding."""
    return tuple(f for f in monic_candidates(p, n) if is_irreducible(f, p))


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility over Z_p.

    Up to degree 3 a polynomial is reducible iff it has a root. Above that,
    test divisibility by every monic irreducible of degree ≤ n/2.
    """
    f = trim(poly)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if n <= 3:
        return not has_root(f, p)
    for k in range(1, n // 2 + 1):
        for g in monic_irreducibles(p, k):
            if not mod(f, g, p):
                return False
    return True


def smallest_monic_irreducible(p: int, n: int) -> Poly:
    """The monic irreducible of degree n with the smallest integer encoding."""
    for f in monic_candidates(p, n):
        if is_irreducible(f, p):
            return f
    raise ArithmeticError(f"no irreducible of degree {n} over Z_{p}")
