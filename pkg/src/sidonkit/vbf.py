"""Vectorial Boolean functions F: F_2^n -> F_2^m given by truth tables.

Walsh coefficients use the coordinate dot product,

    W_F(a, b) = sum_x (-1)^(a.x + b.F(x)),

and are computed one output component ``b`` at a time with a fast
Walsh-Hadamard transform of the sign vector ``x -> (-1)^(b.F(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _textio
from .errors import CapacityError, FormatError
from .gf2core import dot_array

MAX_SPECTRUM_BITS = 32
# rows x columns held at once while streaming components
_CHUNK_CELLS = 1 << 22


def fwht(values, dtype=np.int64) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along the last axis.

    ``out[..., a] = sum_x (-1)^popcount(a & x) * values[..., x]``.  The last
    axis must have power-of-two length.
    """
    x = np.array(values, dtype=dtype, copy=True)
    size = x.shape[-1]
    if size & (size - 1):
        raise ValueError(f"length {size} is not a power of two")
    lead = x.shape[:-1]
    h = 1
    while h < size:
        x = x.reshape(*lead, -1, 2, h)
        lo = x[..., 0, :].copy()
        x[..., 0, :] += x[..., 1, :]
        x[..., 1, :] = lo - x[..., 1, :]
        h <<= 1
    return x.reshape(*lead, size)


@dataclass(frozen=True, eq=False)
class VectorialBooleanFunction:
    n: int
    m: int
    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.shape != (1 << self.n,):
            raise ValueError(f"truth table must have {1 << self.n} entries, got {table.shape}")
        if table.size and (table.min() < 0 or table.max() >> self.m):
            raise ValueError(f"truth table entries must lie in [0, 2^{self.m})")
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        if not isinstance(other, VectorialBooleanFunction):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.m, self.table.tobytes()))

    @classmethod
    def from_callable(cls, n, m, func):
        return cls(n, m, [func(x) for x in range(1 << n)])


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """Dense spectrum; ``values[(b << n) | a] == W_F(a, b)``."""

    n: int
    m: int
    values: np.ndarray

    def __getitem__(self, ab):
        a, b = ab
        return int(self.values[(b << self.n) | a])

    def as_matrix(self) -> np.ndarray:
        """View with rows indexed by ``b`` and columns by ``a``."""
        return self.values.reshape(1 << self.m, 1 << self.n)

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and np.array_equal(self.values, other.values)


def _component_rows(F: VectorialBooleanFunction, bs: np.ndarray) -> np.ndarray:
    signs = 1 - 2 * dot_array(bs[:, None], F.table[None, :])
    return fwht(signs.astype(np.int32), dtype=np.int32)


def _component_chunks(F, start=0):
    step = max(1, _CHUNK_CELLS >> F.n)
    for lo in range(start, 1 << F.m, step):
        bs = np.arange(lo, min(lo + step, 1 << F.m), dtype=np.int64)
        yield bs, _component_rows(F, bs)


def walsh_spectrum(F: VectorialBooleanFunction) -> WalshSpectrum:
    if F.n + F.m > MAX_SPECTRUM_BITS:
        raise CapacityError(f"n + m = {F.n + F.m} exceeds {MAX_SPECTRUM_BITS}")
    rows = [block for _, block in _component_chunks(F)]
    return WalshSpectrum(F.n, F.m, np.concatenate(rows).reshape(-1))


def walsh_spectrum_direct(F: VectorialBooleanFunction) -> WalshSpectrum:
    """Reference spectrum by direct summation over x; O(2^(2n+m)), small inputs only."""
    if 2 * F.n + F.m > 24:
        raise CapacityError("direct summation is only meant for tiny functions")
    xs = np.arange(1 << F.n, dtype=np.int64)
    bs = np.arange(1 << F.m, dtype=np.int64)
    ax = dot_array(xs[:, None], xs[None, :])  # [a, x]
    bfx = dot_array(bs[:, None], F.table[None, :])  # [b, x]
    exponent = ax[None, :, :] + bfx[:, None, :]
    values = np.where(exponent & 1, -1, 1).sum(axis=2)
    return WalshSpectrum(F.n, F.m, values.reshape(-1).astype(np.int32))


def linearity(F: VectorialBooleanFunction) -> int:
    """``max |W_F(a, b)|`` over all ``a`` and all ``b != 0``.

    Streams components so memory stays bounded even when the full spectrum
    would not fit.
    """
    if F.n + F.m > MAX_SPECTRUM_BITS:
        raise CapacityError(f"n + m = {F.n + F.m} exceeds {MAX_SPECTRUM_BITS}")
    best = 0
    for _, rows in _component_chunks(F, start=1):
        best = max(best, int(np.abs(rows).max()))
    return best


def _ddt_row_maxima(F: VectorialBooleanFunction, stop_above=None):
    xs = np.arange(1 << F.n, dtype=np.int64)
    size = 1 << F.m
    for a in range(1, 1 << F.n):
        counts = np.bincount(F.table ^ F.table[xs ^ a], minlength=size)
        top = int(counts.max())
        yield top
        if stop_above is not None and top > stop_above:
            return


def differential_uniformity(F: VectorialBooleanFunction) -> int:
    """Largest entry of the difference distribution table outside the row ``a = 0``."""
    if F.n == 0:
        return 0
    return max(_ddt_row_maxima(F))


def is_apn(F: VectorialBooleanFunction) -> bool:
    if F.n != F.m:
        raise ValueError("APN is defined for n == m only")
    if F.n == 0:
        return False
    return max(_ddt_row_maxima(F, stop_above=2)) == 2


def component_weight(F: VectorialBooleanFunction, a: int, lam: int) -> int:
    """Number of x with ``a . F(x) == lam``."""
    if a == 0 or a >> F.m:
        raise ValueError("component mask must be a nonzero m-bit vector")
    if lam not in (0, 1):
        raise ValueError("lam must be 0 or 1")
    return int(np.count_nonzero(dot_array(a, F.table) == lam))


def _is_linear_table(values: np.ndarray, n: int) -> bool:
    """True if ``values[x]`` equals the xor of ``values[e_i]`` over the bits of x."""
    span = np.zeros(1, dtype=np.int64)
    for i in range(n):
        span = np.concatenate([span, span ^ values[1 << i]])
    return bool(np.array_equal(span, values))


def is_quadratic(F: VectorialBooleanFunction) -> bool:
    """True iff every map ``x -> F(x+a) + F(x) + F(a) + F(0)`` is linear.

    Only the basis directions ``a = e_i`` are tested: the derivative along
    ``e_i`` keeps exactly the monomials containing ``x_i`` (with ``x_i``
    removed), so all of them being affine already bounds the algebraic degree
    by two, which makes every derivative affine.
    """
    if F.n > 16:
        raise CapacityError("quadratic test supports n <= 16")
    xs = np.arange(1 << F.n, dtype=np.int64)
    t = F.table
    for i in range(F.n):
        a = 1 << i
        derivative = t[xs ^ a] ^ t ^ t[a] ^ t[0]
        if not _is_linear_table(derivative, F.n):
            return False
    return True


def algebraic_degree(F: VectorialBooleanFunction) -> int:
    """Max degree over the coordinate functions, from the binary Moebius transform."""
    anf = F.table.copy()
    h = 1
    while h < anf.size:
        anf = anf.reshape(-1, 2, h)
        anf[:, 1, :] ^= anf[:, 0, :]
        anf = anf.reshape(-1)
        h <<= 1
    monomials = np.nonzero(anf)[0]
    return int(np.bitwise_count(monomials).max()) if monomials.size else 0


def apn_linearity_bound_check(F: VectorialBooleanFunction) -> bool:
    """Check ``lin F <= 2^n - 4``, which every APN function must satisfy."""
    if F.n != F.m or not is_apn(F):
        raise ValueError("the bound applies to APN functions only")
    return linearity(F) <= (1 << F.n) - 4


# ---------- truth-table files

def read_truth_table(source) -> VectorialBooleanFunction:
    """Parse ``n m`` followed by 2^n hexadecimal values, one per line (row = x)."""
    with _textio.located(source):
        return _read_truth_table(source)


def _read_truth_table(source):
    lines = _textio.data_lines(source)
    path = source if isinstance(source, str) else None
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty truth-table file", 0, path) from None
    if len(header) != 2:
        raise FormatError("header must be 'n m'", lineno, path)
    n, m = (_textio.parse_int(tok, lineno) for tok in header)
    values = []
    for lineno, tokens in lines:
        if len(tokens) != 1:
            raise FormatError("expected one hexadecimal value", lineno, path)
        values.append(_textio.parse_int(tokens[0], lineno, base=16))
        if values[-1] < 0 or values[-1] >> m:
            raise FormatError(f"value {tokens[0]} exceeds {m} bits", lineno, path)
    if len(values) != 1 << n:
        raise FormatError(f"expected {1 << n} values, found {len(values)}", 0, path)
    return VectorialBooleanFunction(n, m, values)


def write_truth_table(F: VectorialBooleanFunction, sink) -> None:
    fh, close = _textio.open_sink(sink)
    try:
        fh.write(f"{F.n} {F.m}\n")
        fh.writelines(f"{int(v):x}\n" for v in F.table)
    finally:
        if close:
            fh.close()
