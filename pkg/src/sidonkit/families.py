"""Named APN power functions, the subgroup Sidon set, graphs and hyperplane slices.

Also the closed-form sizes and bounds used to lay out the overview table:
classical construction sizes, the Brouwer-Tolhuizen upper bound, the exact
linearity of the inverse function and the conjectured Dobbertin linearity.
All square roots are exact integer ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gf2core
from .gf2core import FieldContext
from .sidon import PointSet, best_hyperplane_slice
from .vbf import VectorialBooleanFunction, is_apn, read_truth_table


def power_function(ctx: FieldContext, exponent: int) -> VectorialBooleanFunction:
    return VectorialBooleanFunction(ctx.n, ctx.n, gf2core.gf2_pow_array(ctx, ctx.elements(), exponent))


def gold_exponent(k: int) -> int:
    return (1 << k) + 1


def gold_function(ctx: FieldContext, k: int = 1) -> VectorialBooleanFunction:
    """x -> x^(2^k + 1); APN whenever gcd(k, n) == 1."""
    if not 1 <= k < ctx.n or math.gcd(k, ctx.n) != 1:
        raise ValueError(f"Gold exponent needs 1 <= k < n and gcd(k, n) = 1 (k={k}, n={ctx.n})")
    return power_function(ctx, gold_exponent(k))


def inverse_function(ctx: FieldContext) -> VectorialBooleanFunction:
    """x -> x^(-1) with 0 -> 0; APN exactly for odd n >= 5 (and n = 1, 3)."""
    return power_function(ctx, ctx.order - 2)


def dobbertin_exponent(n: int) -> int:
    if n % 5 or n <= 0:
        raise ValueError(f"Dobbertin functions need n divisible by 5, got {n}")
    k = n // 5
    return (1 << 4 * k) + (1 << 3 * k) + (1 << 2 * k) + (1 << k) - 1


def dobbertin_function(ctx: FieldContext) -> VectorialBooleanFunction:
    return power_function(ctx, dobbertin_exponent(ctx.n))


def _isqrt_floor_plus_one(power: int) -> int:
    """floor(sqrt(2^power) + 1) for odd ``power`` (never a perfect square)."""
    return math.isqrt(1 << power) + 1


def inverse_linearity_formula(n: int) -> int:
    """Exact linearity of x^(-1) on GF(2^n), n odd >= 5.

    With ``v = floor(2^(n/2+1) + 1)`` the linearity is ``v - (v mod 4)``: the
    largest multiple of 4 not exceeding the Walsh interval's upper end.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError(f"formula holds for odd n >= 5, got {n}")
    v = _isqrt_floor_plus_one(n + 2)
    return v - v % 4


def dobbertin_conjectured_linearity(n: int) -> int:
    """2^(3n/5) + 2^(2n/5); computed as 12 and 80 for n = 5, 10, conjectural beyond."""
    if n % 5 or n <= 0:
        raise ValueError(f"Dobbertin functions need n divisible by 5, got {n}")
    return (1 << (3 * n // 5)) + (1 << (2 * n // 5))


def graph(F: VectorialBooleanFunction) -> PointSet:
    """``{x | F(x) << n}`` in F_2^(n+m)."""
    xs = np.arange(1 << F.n, dtype=np.int64)
    return PointSet(F.n + F.m, xs | (F.table << F.n))


def apn_slice_size(n: int, lin: int) -> int:
    return (1 << (n - 1)) + lin // 2


def apn_slice_sidon(F: VectorialBooleanFunction, check_apn: bool = True) -> PointSet:
    """Largest hyperplane slice of the graph of an APN function.

    The result is a Sidon set in F_2^(2n-1) with ``2^(n-1) + lin(F)/2`` points.
    """
    if check_apn and (F.n != F.m or not is_apn(F)):
        raise ValueError("apn_slice_sidon needs an APN function")
    return best_hyperplane_slice(graph(F)).sliced


def mult_subgroup_sidon(n: int) -> PointSet:
    """Order-(2^n + 1) multiplicative subgroup of GF(2^(2n)), plus 0 when n is even.

    Elements are ``g^(i (2^n - 1))`` for the least primitive element g.
    Sizes: 2^n + 1 for odd n, 2^n + 2 for even n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ctx = gf2core.default_modulus(2 * n)
    g = gf2core.primitive_element(ctx)
    h = gf2core.gf2_pow(ctx, g, (1 << n) - 1)
    elems, x = [], 1
    for _ in range((1 << n) + 1):
        elems.append(x)
        x = gf2core.gf2_mul(ctx, x, h)
    if n % 2 == 0:
        elems.append(0)
    return PointSet(2 * n, elems)


def classical_size(t: int) -> int:
    """Size reached by the classical constructions in dimension t."""
    if t < 3:
        raise ValueError("classical sizes are tabulated from t = 3")
    if t % 2 == 0:
        n = t // 2
        return (1 << n) + (2 if n % 2 == 0 else 1)
    n = (t + 1) // 2
    return (1 << (n - 1)) + (1 << (n // 2) if n % 2 == 0 else 1 << ((n - 1) // 2))


def sidon_upper_bound(t: int) -> int:
    """Brouwer-Tolhuizen bound: 2^((t+1)/2) - 2 for odd t, round(sqrt(2^(t+1))) for even t."""
    if t < 1:
        raise ValueError("t must be positive")
    if t % 2:
        return (1 << ((t + 1) // 2)) - 2
    square = 1 << (t + 1)
    r = math.isqrt(square)
    # floor(sqrt(s) + 0.5) is r + 1 exactly when sqrt(s) >= r + 1/2, i.e. 4s >= (2r+1)^2
    return r + 1 if 4 * square >= (2 * r + 1) ** 2 else r


def trivial_bound_holds(size: int, t: int) -> bool:
    return size * (size - 1) // 2 <= (1 << t) - 1


# ---------- family specs for the command line

@dataclass(frozen=True)
class FamilySpec:
    """``gold:k``, ``inverse``, ``dobbertin``, ``mult-subgroup`` or ``file:<path>``."""

    family: str
    n: int | None = None
    k: int = 1
    path: str | None = None

    @classmethod
    def parse(cls, name: str, n: int | None = None) -> "FamilySpec":
        if name.startswith("file:"):
            return cls("file", n, path=name[5:])
        if name.startswith("gold"):
            k = 1
            if ":" in name:
                try:
                    k = int(name.split(":", 1)[1])
                except ValueError:
                    raise ValueError(f"bad Gold parameter in {name!r}") from None
            spec = cls("gold", n, k=k)
        elif name in ("inverse", "dobbertin", "mult-subgroup"):
            spec = cls(name, n)
        else:
            raise ValueError(f"unknown family {name!r}")
        if n is None or n < 1:
            raise ValueError(f"family {name!r} needs a positive n")
        if spec.family == "gold" and math.gcd(k, n) != 1:
            raise ValueError(f"gold:{k} needs gcd(k, n) = 1")
        if spec.family == "dobbertin" and n % 5:
            raise ValueError("dobbertin needs n divisible by 5")
        return spec

    def function(self) -> VectorialBooleanFunction:
        if self.family == "file":
            F = read_truth_table(self.path)
            if self.n is not None and F.n != self.n:
                raise ValueError(f"{self.path} has n={F.n}, expected {self.n}")
            return F
        if self.family == "mult-subgroup":
            raise ValueError("mult-subgroup is a set, not a function")
        ctx = gf2core.default_modulus(self.n)
        if self.family == "gold":
            return gold_function(ctx, self.k)
        if self.family == "inverse":
            return inverse_function(ctx)
        return dobbertin_function(ctx)
