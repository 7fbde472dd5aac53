import io
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sidonkit import sidon
from sidonkit.errors import FormatError
from sidonkit.families import gold_function, graph, inverse_function
from sidonkit.gf2core import FieldContext, default_modulus, dot
from sidonkit.sidon import (
    PointSet,
    best_hyperplane_slice,
    hyperplane_intersect,
    is_maximal_sidon,
    is_maximal_sidon_naive,
    is_sidon,
    is_sidon_naive,
    is_sum_free,
    project_hyperplane,
    set_linearity,
    set_walsh,
    set_walsh_direct,
    translate,
)
from sidonkit.vbf import walsh_spectrum


@st.composite
def point_sets(draw, max_t=10, max_size=40):
    t = draw(st.integers(2, max_t))
    pts = draw(st.sets(st.integers(0, (1 << t) - 1), max_size=min(max_size, 1 << t)))
    return PointSet(t, sorted(pts))


def random_set(rng, t, size):
    return PointSet(t, rng.choice(1 << t, size=min(size, 1 << t), replace=False))


def greedy_sidon(rng, t, tries=400):
    """A random Sidon set grown greedily (brute force keeps it honest)."""
    pts = []
    for x in rng.permutation(1 << t)[:tries]:
        cand = pts + [int(x)]
        if is_sidon(PointSet(t, cand)):
            pts = cand
    return PointSet(t, pts)


def test_pointset_normalises_and_validates():
    M = PointSet(3, [5, 1, 2])
    assert M.points.tolist() == [1, 2, 5]
    assert 5 in M and 4 not in M
    with pytest.raises(ValueError):
        PointSet(3, [1, 1])
    with pytest.raises(ValueError):
        PointSet(3, [8])


# ---------- Sidon predicate

def test_small_sets_are_sidon():
    for pts in ([], [0], [3, 5], [1, 2, 3]):
        assert is_sidon(PointSet(2 if max(pts, default=0) < 4 else 3, pts))


def test_full_plane_not_sidon():
    assert not is_sidon(PointSet(2, [0, 1, 2, 3]))


def test_set192_is_sidon(set192):
    assert set192.t == 15 and len(set192) == 192
    assert is_sidon(set192)


def test_sidon_fast_equals_bruteforce(rng):
    for _ in range(150):
        t = int(rng.integers(3, 9))
        M = random_set(rng, t, int(rng.integers(0, 14)))
        assert is_sidon(M) == is_sidon_naive(M) == oracles.is_sidon(list(M))
    for _ in range(10):
        M = greedy_sidon(rng, int(rng.integers(6, 11)))
        assert len(M) <= 64
        assert is_sidon(M) and is_sidon_naive(M)


# ---------- sum-free

def test_sum_free_examples():
    assert not is_sum_free(PointSet(2, [0, 1, 2, 3]))
    assert is_sum_free(PointSet(3, [1, 2, 4]))
    assert is_sum_free(PointSet(3, [0, 1, 2, 4]))


@given(point_sets(max_t=7, max_size=20))
def test_sum_free_matches_bruteforce(M):
    assert is_sum_free(M) == oracles.is_sum_free(list(M))


# ---------- maximality

def test_maximal_examples():
    assert is_maximal_sidon(PointSet(1, [0, 1]))
    assert not is_maximal_sidon(PointSet(3, [0, 1, 2]))
    assert is_sidon(PointSet(3, [0, 1, 2, 4]))
    with pytest.raises(ValueError):
        is_maximal_sidon(PointSet(2, [0, 1, 2, 3]))


def test_set192_is_maximal(set192):
    assert is_maximal_sidon(set192)


def test_set192_minus_point_is_not_maximal(set192):
    M = PointSet(15, set192.points[1:])
    assert not is_maximal_sidon(M)


def test_maximal_fast_equals_direct(rng):
    for _ in range(25):
        M = greedy_sidon(rng, int(rng.integers(3, 9)), tries=int(rng.integers(3, 300)))
        assert is_maximal_sidon(M) == is_maximal_sidon_naive(M)


# ---------- set Walsh transform

def test_set_walsh_examples():
    assert np.all(set_walsh(PointSet(4, [0])).values == 1)
    full = set_walsh(PointSet(4, range(16))).values
    assert full[0] == 16 and np.all(full[1:] == 0)
    assert set_linearity(PointSet(1, [0, 1])) == 0


def test_set_walsh_of_graph_matches_function_spectrum():
    F = gold_function(FieldContext(3, 0b1011), 1)
    W = set_walsh(graph(F)).values
    spec = walsh_spectrum(F)
    for a in range(8):
        for b in range(8):
            assert W[a | (b << 3)] == spec[a, b]


@given(point_sets(max_t=8, max_size=30))
@settings(max_examples=60)
def test_set_walsh_fast_vs_direct_and_identities(M):
    W = set_walsh(M).values
    assert np.array_equal(W, set_walsh_direct(M).values)
    assert W.tolist() == oracles.set_walsh(list(M), M.t)
    assert W[0] == len(M)
    assert W.sum() == (1 << M.t) * (0 in M)
    assert (W.astype(np.int64) ** 2).sum() == (1 << M.t) * len(M)
    assert np.all(np.abs(W) <= len(M))
    assert np.all(W % 2 == len(M) % 2)


# ---------- translation, hyperplanes, projection

@given(point_sets(), st.data())
def test_translate_involution_and_sidon_invariance(M, data):
    b = data.draw(st.integers(0, (1 << M.t) - 1))
    assert translate(M, 0) == M
    assert translate(translate(M, b), b) == M
    assert is_sidon(translate(M, b)) == is_sidon(M)


@given(point_sets(), st.data())
def test_hyperplane_counting_identities(M, data):
    W = set_walsh(M).values
    a = data.draw(st.integers(1, (1 << M.t) - 1))
    b = next(x for x in range(1 << M.t) if dot(M.t, a, x))
    on = hyperplane_intersect(M, a, 0)
    off = hyperplane_intersect(M, a, 1)
    assert len(on) + len(off) == len(M)
    assert 2 * len(on) == len(M) + W[a]
    shifted_on = hyperplane_intersect(translate(M, b), a, 0)
    assert 2 * len(shifted_on) == len(M) - W[a]


def test_hyperplane_identities_every_direction(rng):
    for _ in range(8):
        t = int(rng.integers(2, 11))
        M = random_set(rng, t, int(rng.integers(1, 60)))
        W = set_walsh(M).values
        for a in range(1, 1 << t):
            assert 2 * len(hyperplane_intersect(M, a, 0)) == len(M) + W[a]


def test_hyperplane_rejects_zero_normal():
    with pytest.raises(ValueError):
        hyperplane_intersect(PointSet(3, [1]), 0, 0)


def test_project_drops_pivot():
    assert project_hyperplane(PointSet(3, [0b000, 0b110]), 0b001).points.tolist() == [0b00, 0b11]
    with pytest.raises(ValueError):
        project_hyperplane(PointSet(3, [0b001]), 0b001)


@given(point_sets(max_size=30), st.data())
def test_projection_linear_and_sidon_preserving(M, data):
    a = data.draw(st.integers(1, (1 << M.t) - 1))
    S = hyperplane_intersect(M, a, 0)
    P = project_hyperplane(S, a)
    assert len(P) == len(S)
    pts, img = S.points.tolist(), P.points.tolist()
    pivot = (a & -a).bit_length() - 1
    def proj(v):
        return (v & ((1 << pivot) - 1)) | ((v >> (pivot + 1)) << pivot)
    assert sorted(proj(p) for p in pts) == img
    for p in pts[:6]:
        for q in pts[:6]:
            assert proj(p ^ q) == proj(p) ^ proj(q)
    assert is_sidon(P) == is_sidon(S)


# ---------- best slice

def test_best_slice_inverse_gf32():
    M = graph(inverse_function(default_modulus(5)))
    assert set_linearity(M) == 12
    res = best_hyperplane_slice(M)
    assert res.sliced.t == 9 and len(res.sliced) == 22
    assert is_sidon(res.sliced)


def test_best_slice_gold_gf16():
    res = best_hyperplane_slice(graph(gold_function(default_modulus(4), 1)))
    assert res.sliced.t == 7 and len(res.sliced) == 12


def test_best_slice_singleton():
    res = best_hyperplane_slice(PointSet(3, [0]))
    assert len(res.sliced) == 1 and res.a == 1 and res.side == 0


def test_best_slice_tie_break_and_side():
    M = PointSet(3, [1, 3, 5])
    W = set_walsh(M).values
    res = best_hyperplane_slice(M)
    lin = int(np.abs(W[1:]).max())
    assert res.a == min(a for a in range(1, 8) if abs(W[a]) == lin)
    assert res.side == (0 if W[res.a] > 0 else 1)
    assert len(res.sliced) == (len(M) + lin) // 2


def test_slicing_any_direction_preserves_sidon(rng):
    for _ in range(6):
        M = greedy_sidon(rng, int(rng.integers(4, 10)))
        for a in range(1, 1 << M.t):
            for side in (0, 1):
                S = hyperplane_intersect(M, a, side)
                if side:
                    S = translate(S, a & -a)
                assert is_sidon(project_hyperplane(S, a))


def test_slice_size_formula_random_sidon(rng):
    for _ in range(15):
        M = greedy_sidon(rng, int(rng.integers(4, 11)))
        res = best_hyperplane_slice(M)
        assert len(res.sliced) == (len(M) + set_linearity(M)) // 2
        assert is_sidon(res.sliced)


def test_trivial_bound_on_sidon_sets(rng, set192):
    for M in [set192] + [greedy_sidon(rng, t) for t in range(3, 10)]:
        assert len(M) * (len(M) - 1) // 2 <= (1 << M.t) - 1


# ---------- files

def test_point_set_roundtrip(tmp_path, set192):
    path = tmp_path / "m.txt"
    sidon.write_point_set(set192, path, comment="copy")
    assert sidon.read_point_set(str(path)) == set192


def test_shipped_copies_identical(set192):
    assert sidon.read_point_set(str(Path(__file__).parents[1] / "data" / "sidon_15_192.txt")) == set192


def test_empty_set_file():
    M = sidon.read_point_set(io.StringIO("# nothing\n4\n"))
    assert M.t == 4 and len(M) == 0 and is_sidon(M)


@pytest.mark.parametrize("text, lineno", [
    ("", 0), ("3 4\n", 1), ("3\n1\n9\n", 3), ("3\n1\nx\n", 3), ("3\n1\n1\n", 3),
])
def test_point_set_parse_errors(text, lineno):
    with pytest.raises(FormatError) as exc:
        sidon.read_point_set(io.StringIO(text))
    assert exc.value.lineno == lineno
