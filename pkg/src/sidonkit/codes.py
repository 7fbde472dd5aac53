"""Binary linear codes whose parity-check columns form a sum-free Sidon set.

A column set has minimum distance >= 5 exactly when its columns are distinct,
nonzero, no three of them xor to zero and no four of them xor to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import _textio
from .errors import CapacityError, FormatError
from .gf2core import span_rank
from .sidon import MAX_DIM, PointSet, is_sidon, translate

MAX_SEARCH_WEIGHT = 6


class RankDeficientError(ValueError):
    def __init__(self, span_dim, t):
        self.span_dimension = span_dim
        self.t = t
        super().__init__(f"columns span a {span_dim}-dimensional space, need {t}")


@dataclass(frozen=True)
class LinearCodeSpec:
    """Code given by the columns of a full-rank t x m parity-check matrix.

    ``min_distance`` is a certified lower bound (1 if nothing was certified).
    """

    t: int
    columns: tuple[int, ...]
    min_distance: int = 1
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = tuple(int(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if any(c <= 0 or c >> self.t for c in cols):
            raise ValueError(f"columns must be nonzero {self.t}-bit vectors")
        if len(set(cols)) != len(cols):
            raise ValueError("columns must be distinct")
        rank = span_rank(cols)
        if rank != self.t:
            raise RankDeficientError(rank, self.t)
        object.__setattr__(self, "_array", np.array(cols, dtype=np.int64))

    @property
    def length(self) -> int:
        return len(self.columns)

    @property
    def dimension(self) -> int:
        return self.length - self.t

    @property
    def params(self) -> tuple[int, int, int]:
        return self.length, self.dimension, self.min_distance


class MinDistance(NamedTuple):
    """Search outcome: ``exact`` is False when only ``value`` is a lower bound."""

    value: int
    exact: bool
    witness: tuple[int, ...] = ()

    def __str__(self):
        return str(self.value) if self.exact else f">= {self.value}"


def sidon_to_code(M: PointSet) -> LinearCodeSpec:
    """[|M|-1, |M|-t-1, >=5] code from a Sidon set spanning F_2^t.

    M is translated by its smallest element so that it contains 0; the
    remaining |M| - 1 nonzero points are sum-free and Sidon and become the
    parity-check columns.
    """
    if not is_sidon(M):
        raise ValueError("input is not a Sidon set")
    if len(M) < M.t + 2:
        raise ValueError(f"need at least t + 2 = {M.t + 2} points, got {len(M)}")
    shifted = translate(M, int(M.points[0]))
    cols = tuple(int(p) for p in shifted.points if p)
    code = LinearCodeSpec(M.t, cols)
    if not verify_distance_ge5(code):
        raise AssertionError("translated Sidon set failed the distance-5 check")
    return LinearCodeSpec(M.t, cols, min_distance=5)


def verify_distance_ge5(code: LinearCodeSpec) -> bool:
    """True iff the columns form a sum-free Sidon set (so d >= 5)."""
    if code.t > MAX_DIM:
        raise CapacityError(f"t={code.t} exceeds {MAX_DIM}")
    c = code._array
    if c.size != np.unique(c).size or np.any(c == 0):
        return False
    member = np.zeros(1 << code.t, dtype=bool)
    member[c] = True
    seen = np.zeros(1 << code.t, dtype=bool)
    for i in range(c.size - 1):
        sums = c[i] ^ c[i + 1:]
        if member[sums].any() or seen[sums].any():
            return False
        seen[sums] = True
    return True


def _pair_sums(c):
    i, j = np.triu_indices(c.size, k=1)
    return c[i] ^ c[j], i, j


def _find_weight(c: np.ndarray, t: int, w: int):
    """Support of a weight-w codeword, assuming none of weight < w exists."""
    m = c.size
    if w == 1:
        zero = np.nonzero(c == 0)[0]
        return (int(zero[0]),) if zero.size else None
    if w == 2:
        order = np.argsort(c, kind="stable")
        dup = np.nonzero(c[order][1:] == c[order][:-1])[0]
        return tuple(sorted((int(order[dup[0]]), int(order[dup[0] + 1])))) if dup.size else None
    where = {int(v): k for k, v in enumerate(c)}
    sums, pi, pj = _pair_sums(c)
    if w == 3:
        is_col = np.zeros(1 << t, dtype=bool)
        is_col[c] = True
        hit = np.nonzero(is_col[sums])[0]
        if not hit.size:
            return None
        h = hit[0]
        return tuple(sorted((int(pi[h]), int(pj[h]), where[int(sums[h])])))
    if w == 4:
        order = np.argsort(sums, kind="stable")
        hit = np.nonzero(sums[order][1:] == sums[order][:-1])[0]
        if not hit.size:
            return None
        a, b = order[hit[0]], order[hit[0] + 1]
        return tuple(sorted(int(x) for x in (pi[a], pj[a], pi[b], pj[b])))
    # no shorter codewords: distinct pairs have distinct sums and any
    # coincidence found below involves disjoint supports
    pair_at = {int(s): (int(i), int(j)) for s, i, j in zip(sums, pi, pj)}
    if w == 5:
        is_pair = np.zeros(1 << t, dtype=bool)
        is_pair[sums] = True
        for j in range(1, m - 1):
            pair = c[j] ^ c[j + 1:]
            triple = c[:j, None] ^ pair[None, :]
            hits = np.argwhere(is_pair[triple])
            if hits.size:
                i, k = int(hits[0][0]), j + 1 + int(hits[0][1])
                rest = pair_at[int(triple[hits[0][0], hits[0][1]])]
                return tuple(sorted((i, j, k) + rest))
        return None
    # w == 6: two disjoint triples with the same sum
    chunks = []
    for j in range(1, m - 1):
        pair = c[j] ^ c[j + 1:]
        chunks.append((c[:j, None] ^ pair[None, :]).reshape(-1))
    if not chunks:
        return None
    triples = np.concatenate(chunks)
    order = np.argsort(triples, kind="stable")
    hit = np.nonzero(triples[order][1:] == triples[order][:-1])[0]
    if not hit.size:
        return None
    value = int(triples[order[hit[0]]])
    support = []
    for j in range(1, m - 1):
        for k in range(j + 1, m):
            s = value ^ int(c[j]) ^ int(c[k])
            for i in np.nonzero(c[:j] == s)[0]:
                support.append((int(i), j, k))
    first, second = support[:2]
    return tuple(sorted(first + second))


def exact_min_distance(code: LinearCodeSpec, cap: int = 5) -> MinDistance:
    """Smallest weight w <= cap of a nonzero codeword, else the bound ``cap + 1``.

    Weights are tried in increasing order.  Weight 5 is a meet-in-the-middle
    search (column triples against a table of pair sums), O(m^3) overall.
    """
    if cap > MAX_SEARCH_WEIGHT:
        raise CapacityError(f"cap {cap} exceeds {MAX_SEARCH_WEIGHT}")
    if code.t > MAX_DIM:
        raise CapacityError(f"t={code.t} exceeds {MAX_DIM}")
    for w in range(1, cap + 1):
        support = _find_weight(code._array, code.t, w)
        if support is not None:
            return MinDistance(w, True, support)
    return MinDistance(cap + 1, False)


def is_codeword(code: LinearCodeSpec, support) -> bool:
    acc = 0
    for j in support:
        acc ^= code.columns[j]
    return acc == 0


def generator_rows(code: LinearCodeSpec) -> list[int]:
    """Kernel basis of the parity-check matrix; each row is an m-bit mask.

    Columns are eliminated left to right; a column that reduces to zero yields
    the dependency that produced it, so the rows are in systematic form on the
    non-pivot columns.
    """
    basis: dict[int, tuple[int, int]] = {}
    rows = []
    for j, col in enumerate(code.columns):
        v, mask = col, 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, mask)
                break
            bv, bm = basis[top]
            v ^= bv
            mask ^= bm
        if v == 0:
            rows.append(mask)
    return rows


def min_distance_enumerate(code: LinearCodeSpec) -> int | None:
    """Minimum weight over all 2^k codewords; ``None`` for the zero code."""
    rows = generator_rows(code)
    if len(rows) > 20:
        raise CapacityError("codeword enumeration is limited to dimension 20")
    if not rows:
        return None
    words = [0]
    for g in rows:
        words += [w ^ g for w in words]
    return min(w.bit_count() for w in words[1:])


# ---------- parity-check matrix files

def export_parity_check(code: LinearCodeSpec, sink) -> None:
    """Write ``t m d_lower`` then t rows of m bits (row i holds bit i of each column)."""
    fh, close = _textio.open_sink(sink)
    try:
        fh.write(f"{code.t} {code.length} {code.min_distance}\n")
        for i in range(code.t):
            fh.write(" ".join(str((c >> i) & 1) for c in code.columns) + "\n")
    finally:
        if close:
            fh.close()


def import_parity_check(source) -> LinearCodeSpec:
    with _textio.located(source):
        return _import_parity_check(source)


def _import_parity_check(source):
    path = source if isinstance(source, str) else None
    lines = _textio.data_lines(source)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty parity-check file", 0, path) from None
    if len(header) != 3:
        raise FormatError("header must be 't m d_lower'", lineno, path)
    t, m, d = (_textio.parse_int(tok, lineno) for tok in header)
    cols = [0] * m
    i = -1
    for i, (lineno, bits) in enumerate(lines):
        if i >= t:
            raise FormatError(f"more than {t} rows", lineno, path)
        if len(bits) != m or any(b not in ("0", "1") for b in bits):
            raise FormatError(f"row must hold {m} bits", lineno, path)
        for j, b in enumerate(bits):
            if b == "1":
                cols[j] |= 1 << i
    if i + 1 != t:
        raise FormatError(f"expected {t} rows, found {i + 1}", 0, path)
    return LinearCodeSpec(t, tuple(cols), min_distance=d)
