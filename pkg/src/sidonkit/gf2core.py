"""Arithmetic over GF(2^n) in a polynomial basis and over the coordinate space F_2^t.

Vectors and field elements are plain Python ints: the integer ``sum(a_i * 2**i)``
stands for the vector ``(a_0, ..., a_{t-1})``.  Arrays of elements are numpy
``int64`` arrays, and the ``*_array`` helpers act on them elementwise.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

import numpy as np

MAX_DEGREE = 25


def _check_width(value: int, bits: int, name: str) -> None:
    if value < 0 or value >> bits:
        raise ValueError(f"{name}={value} does not fit in {bits} bits")


# ---------- polynomials over GF(2) packed into ints

def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two packed polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` modulo ``m`` in GF(2)[x]."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(clmul(a, b), m)


def _prime_factors(k: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            factors.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        factors.append(k)
    return factors


def is_irreducible(modulus: int) -> bool:
    """Rabin's irreducibility test for a packed polynomial of degree >= 1.

    ``f`` of degree n is irreducible iff ``x^(2^n) = x (mod f)`` and
    ``gcd(x^(2^(n/p)) - x, f) = 1`` for every prime ``p | n``.
    """
    n = modulus.bit_length() - 1
    if n < 1:
        raise ValueError("polynomial must have degree >= 1")
    if n == 1:
        return True

    def frobenius(k: int) -> int:
        # x^(2^k) mod f by repeated squaring
        r = 2
        for _ in range(k):
            r = _mulmod(r, r, modulus)
        return r

    if frobenius(n) != poly_mod(2, modulus):
        return False
    for p in _prime_factors(n):
        if poly_gcd(frobenius(n // p) ^ 2, modulus) != 1:
            return False
    return True


# ---------- field context

@dataclass(frozen=True)
class FieldContext:
    """GF(2^n) realised as GF(2)[x] / (modulus)."""

    n: int
    modulus: int

    def __post_init__(self):
        if self.modulus.bit_length() - 1 != self.n:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.n}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @property
    def order(self) -> int:
        return 1 << self.n

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)


def smallest_irreducible(n: int) -> int:
    for m in range(1 << n, 1 << (n + 1)):
        if is_irreducible(m):
            return m
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@functools.lru_cache(maxsize=None)
def _shipped_moduli() -> dict[int, int]:
    text = resources.files("sidonkit").joinpath("data/moduli.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        deg, hexmod = line.split()
        table[int(deg)] = int(hexmod, 16)
    return table


@functools.lru_cache(maxsize=None)
def default_modulus(n: int) -> FieldContext:
    """Field context for the lexicographically smallest irreducible of degree ``n``.

    Values come from the shipped ``moduli.txt``; ``FieldContext`` re-checks
    irreducibility on construction.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
    return FieldContext(n, _shipped_moduli()[n])


def write_moduli_file(path) -> None:
    lines = ["# n  modulus (hex); smallest irreducible of degree n over GF(2)"]
    lines += [f"{n} {smallest_irreducible(n):x}" for n in range(1, MAX_DEGREE + 1)]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------- scalar field operations

def gf2_mul(ctx: FieldContext, a: int, b: int) -> int:
    _check_width(a, ctx.n, "a")
    _check_width(b, ctx.n, "b")
    return _mulmod(a, b, ctx.modulus)


def gf2_pow(ctx: FieldContext, a: int, e: int) -> int:
    """``a**e`` by square-and-multiply; ``0**0 == 1``."""
    _check_width(a, ctx.n, "a")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result, base = 1, a
    while e:
        if e & 1:
            result = _mulmod(result, base, ctx.modulus)
        base = _mulmod(base, base, ctx.modulus)
        e >>= 1
    return result


def gf2_inv(ctx: FieldContext, a: int) -> int:
    """Multiplicative inverse with the convention ``inv(0) == 0``."""
    return gf2_pow(ctx, a, ctx.order - 2)


def multiplicative_order(ctx: FieldContext, a: int) -> int:
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    group = ctx.order - 1
    order = group
    for p in _prime_factors(group):
        while order % p == 0 and gf2_pow(ctx, a, order // p) == 1:
            order //= p
    return order


@functools.lru_cache(maxsize=None)
def primitive_element(ctx: FieldContext) -> int:
    """Least element (as an integer) generating the multiplicative group."""
    group = ctx.order - 1
    for g in range(1, ctx.order):
        if multiplicative_order(ctx, g) == group:
            return g
    raise AssertionError("unreachable: GF(2^n)* is cyclic")


# ---------- vectorised field operations

def gf2_mul_array(ctx: FieldContext, a, b) -> np.ndarray:
    """Elementwise field product of two broadcastable integer arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    prod = np.zeros(a.shape, dtype=np.int64)
    for i in range(ctx.n):
        prod ^= np.where((b >> i) & 1, a << i, 0)
    for deg in range(2 * ctx.n - 2, ctx.n - 1, -1):
        prod ^= np.where((prod >> deg) & 1, ctx.modulus << (deg - ctx.n), 0)
    return prod


def gf2_pow_array(ctx: FieldContext, a, e: int) -> np.ndarray:
    """Elementwise ``a**e`` for an array of field elements."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    base = np.asarray(a, dtype=np.int64)
    result = np.ones_like(base)
    while e:
        if e & 1:
            result = gf2_mul_array(ctx, result, base)
        base = gf2_mul_array(ctx, base, base)
        e >>= 1
    return result


# ---------- coordinate space F_2^t

def dot(t: int, a: int, b: int) -> int:
    """Coordinate dot product: parity of ``popcount(a & b)``."""
    _check_width(a, t, "a")
    _check_width(b, t, "b")
    return (a & b).bit_count() & 1


def dot_array(a, b) -> np.ndarray:
    return (np.bitwise_count(np.bitwise_and(a, b)) & 1).astype(np.int64)


def lowest_set_bit(a: int) -> int:
    if a <= 0:
        raise ValueError("need a positive integer")
    return (a & -a).bit_length() - 1


def delete_bit(values, pos: int):
    """Remove coordinate ``pos``, shifting the higher coordinates down by one."""
    low = (1 << pos) - 1
    return (values & low) | ((values >> (pos + 1)) << pos)


def span_rank(vectors) -> int:
    """Dimension of the F_2-span of the given ints (xor-basis elimination)."""
    basis: dict[int, int] = {}
    for v in vectors:
        v = int(v)
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)
