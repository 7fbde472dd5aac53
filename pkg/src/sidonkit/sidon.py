"""Sidon sets in F_2^t: predicates, Walsh transform of a set, and hyperplane slicing.

A set M is Sidon when no four distinct elements xor to zero, i.e. when all
pairwise sums ``m1 ^ m2`` (m1 != m2) are distinct.  The fast predicates keep a
2^t-entry occupancy table, so ambient dimensions are capped at ``MAX_DIM``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _textio
from .errors import CapacityError, FormatError
from .gf2core import delete_bit, dot_array, lowest_set_bit, span_rank
from .vbf import fwht

MAX_DIM = 25


@dataclass(frozen=True, eq=False)
class PointSet:
    """Finite subset of F_2^t, stored sorted and duplicate-free."""

    t: int
    points: np.ndarray

    def __post_init__(self):
        pts = np.sort(np.asarray(self.points, dtype=np.int64).reshape(-1))
        if pts.size:
            if pts[0] < 0 or int(pts[-1]) >> self.t:
                raise ValueError(f"points must lie in [0, 2^{self.t})")
            if np.any(pts[1:] == pts[:-1]):
                raise ValueError("duplicate points")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return int(self.points.size)

    def __iter__(self):
        return (int(p) for p in self.points)

    def __contains__(self, x):
        i = np.searchsorted(self.points, x)
        return bool(i < self.points.size and self.points[i] == x)

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.t == other.t and np.array_equal(self.points, other.points)

    def __hash__(self):
        return hash((self.t, self.points.tobytes()))

    def __repr__(self):
        return f"PointSet(t={self.t}, size={len(self)})"


@dataclass(frozen=True)
class SetWalshSpectrum:
    """``values[a] == W_M(a) == sum_{m in M} (-1)^(a.m)``."""

    t: int
    values: np.ndarray

    def __getitem__(self, a):
        return int(self.values[a])


class SliceResult(NamedTuple):
    a: int
    side: int
    sliced: PointSet


def _require_table_dim(t):
    if t > MAX_DIM:
        raise CapacityError(f"ambient dimension {t} exceeds {MAX_DIM}")


def _membership(M: PointSet) -> np.ndarray:
    table = np.zeros(1 << M.t, dtype=bool)
    table[M.points] = True
    return table


# ---------- predicates

def is_sidon(M: PointSet) -> bool:
    _require_table_dim(M.t)
    p = M.points
    n = p.size
    if n * (n - 1) // 2 > (1 << M.t) - 1:
        return False
    seen = np.zeros(1 << M.t, dtype=bool)
    for i in range(n - 1):
        sums = p[i] ^ p[i + 1:]
        if seen[sums].any():
            return False
        seen[sums] = True
    return True


def is_sidon_naive(M: PointSet) -> bool:
    """Four-tuple brute force; reference for small sets."""
    if len(M) > 64:
        raise CapacityError("brute-force Sidon check is limited to 64 points")
    return not any(a ^ b ^ c ^ d == 0 for a, b, c, d in itertools.combinations(M, 4))


def is_sum_free(M: PointSet) -> bool:
    """True iff no three distinct elements of M xor to zero."""
    _require_table_dim(M.t)
    member = _membership(M)
    # a triple containing 0 sums to a ^ b != 0, so only nonzero pairs matter
    q = M.points[M.points != 0]
    for i in range(q.size - 1):
        if member[q[i] ^ q[i + 1:]].any():
            return False
    return True


def is_sum_free_naive(M: PointSet) -> bool:
    return not any(a ^ b ^ c == 0 for a, b, c in itertools.combinations(M, 3))


def blocked_points(M: PointSet) -> np.ndarray:
    """Boolean table of points that cannot be added to the Sidon set M.

    A point x outside M can be added unless ``x = m1 ^ m2 ^ m3`` for distinct
    m1, m2, m3 in M.
    """
    _require_table_dim(M.t)
    p = M.points
    blocked = _membership(M)
    for j in range(1, p.size - 1):
        pair = p[j] ^ p[j + 1:]
        blocked[(p[:j, None] ^ pair[None, :]).reshape(-1)] = True
    return blocked


def is_maximal_sidon(M: PointSet) -> bool:
    if not is_sidon(M):
        raise ValueError("maximality is only defined for Sidon sets")
    return bool(blocked_points(M).all())


def is_maximal_sidon_naive(M: PointSet) -> bool:
    """Re-verify the Sidon property for every one-point extension (t <= 10)."""
    if M.t > 10:
        raise CapacityError("per-candidate maximality check is limited to t <= 10")
    if not is_sidon(M):
        raise ValueError("maximality is only defined for Sidon sets")
    for x in range(1 << M.t):
        if x not in M and is_sidon(PointSet(M.t, np.append(M.points, x))):
            return False
    return True


def span_dimension(M: PointSet) -> int:
    return span_rank(M.points)


# ---------- Walsh transform of a set

def set_walsh(M: PointSet) -> SetWalshSpectrum:
    _require_table_dim(M.t)
    indicator = np.zeros(1 << M.t, dtype=np.int32)
    indicator[M.points] = 1
    return SetWalshSpectrum(M.t, fwht(indicator, dtype=np.int32))


def set_walsh_direct(M: PointSet) -> SetWalshSpectrum:
    if M.t > 12:
        raise CapacityError("direct set transform is limited to t <= 12")
    a = np.arange(1 << M.t, dtype=np.int64)
    signs = 1 - 2 * dot_array(a[:, None], M.points[None, :])
    return SetWalshSpectrum(M.t, signs.sum(axis=1).astype(np.int32))


def set_linearity(M: PointSet) -> int:
    """``max |W_M(a)|`` over ``a != 0``."""
    if M.t == 0:
        return 0
    return int(np.abs(set_walsh(M).values[1:]).max())


# ---------- transformations

def translate(M: PointSet, b: int) -> PointSet:
    if b < 0 or b >> M.t:
        raise ValueError(f"translation vector must lie in [0, 2^{M.t})")
    return PointSet(M.t, M.points ^ b)


def hyperplane_intersect(M: PointSet, a: int, side: int) -> PointSet:
    """Points m of M with ``a . m == side`` (same ambient dimension)."""
    if a <= 0 or a >> M.t:
        raise ValueError("hyperplane normal must be a nonzero t-bit vector")
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    return PointSet(M.t, M.points[dot_array(a, M.points) == side])


def project_hyperplane(S: PointSet, a: int) -> PointSet:
    """Map a subset of ``H_a = {g : a.g = 0}`` isomorphically onto F_2^(t-1).

    The lowest set bit of ``a`` is the pivot; deleting that coordinate is a
    linear bijection on H_a because the pivot is fixed by the other bits.
    """
    if a <= 0 or a >> S.t:
        raise ValueError("hyperplane normal must be a nonzero t-bit vector")
    off = dot_array(a, S.points) != 0
    if off.any():
        raise ValueError(f"point {int(S.points[off][0])} is not on the hyperplane")
    return PointSet(S.t - 1, delete_bit(S.points, lowest_set_bit(a)))


def best_hyperplane_slice(M: PointSet) -> SliceResult:
    """Largest hyperplane section of M or of a translate of M, as a set in F_2^(t-1).

    Picks the smallest ``a != 0`` with ``|W_M(a)| == lin M``.  If W_M(a) > 0
    the section is ``M & H_a`` (side 0); otherwise it is ``(M + e) & H_a``
    with ``e`` the pivot unit vector of ``a``, i.e. the points of M with
    ``a.m == 1`` shifted onto H_a (side 1).  The result has
    ``(|M| + lin M) / 2`` points and is Sidon whenever M is.
    """
    if len(M) < 1 or M.t < 2:
        raise ValueError("need a non-empty set in dimension t >= 2")
    w = set_walsh(M).values
    mags = np.abs(w[1:])
    a = int(np.argmax(mags)) + 1
    side = 0 if w[a] > 0 else 1
    section = hyperplane_intersect(M, a, side)
    if side:
        section = translate(section, 1 << lowest_set_bit(a))
    return SliceResult(a, side, project_hyperplane(section, a))


# ---------- point-set files

def read_point_set(source) -> PointSet:
    """Parse a header line ``t`` followed by one decimal point per line."""
    with _textio.located(source):
        return _read_point_set(source)


def _read_point_set(source):
    path = source if isinstance(source, str) else None
    lines = _textio.data_lines(source)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty point-set file", 0, path) from None
    if len(header) != 1:
        raise FormatError("header must be the ambient dimension t", lineno, path)
    t = _textio.parse_int(header[0], lineno)
    if not 0 <= t <= 62:
        raise FormatError(f"unsupported dimension {t}", lineno, path)
    points, seen = [], set()
    for lineno, tokens in lines:
        if len(tokens) != 1:
            raise FormatError("expected one decimal point per line", lineno, path)
        p = _textio.parse_int(tokens[0], lineno)
        if p < 0 or p >> t:
            raise FormatError(f"point {p} outside F_2^{t}", lineno, path)
        if p in seen:
            raise FormatError(f"duplicate point {p}", lineno, path)
        seen.add(p)
        points.append(p)
    return PointSet(t, points)


def write_point_set(M: PointSet, sink, comment=None) -> None:
    fh, close = _textio.open_sink(sink)
    try:
        if comment:
            fh.write(f"# {comment}\n")
        fh.write(f"{M.t}\n")
        fh.writelines(f"{p}\n" for p in M)
    finally:
        if close:
            fh.close()
