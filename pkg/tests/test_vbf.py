import io

import numpy as np
import pytest

import oracles
from sidonkit import vbf
from sidonkit.errors import CapacityError, FormatError
from sidonkit.families import gold_function, inverse_function
from sidonkit.gf2core import FieldContext, default_modulus
from sidonkit.vbf import (
    VectorialBooleanFunction,
    apn_linearity_bound_check,
    component_weight,
    differential_uniformity,
    fwht,
    is_apn,
    is_quadratic,
    linearity,
    walsh_spectrum,
    walsh_spectrum_direct,
)

CUBE_GF8 = [0, 1, 3, 4, 5, 6, 7, 2]  # x^3 mod x^3+x+1, from tests/oracles.field_pow


def identity(n):
    return VectorialBooleanFunction(n, n, range(1 << n))


def random_function(rng, n, m):
    return VectorialBooleanFunction(n, m, rng.integers(0, 1 << m, 1 << n))


def test_fwht_matches_definition(rng):
    for t in range(0, 8):
        x = rng.integers(-5, 6, 1 << t)
        expected = [sum(int(x[v]) * (-1) ** oracles.parity(a & v) for v in range(1 << t))
                    for a in range(1 << t)]
        assert fwht(x).tolist() == expected


def test_fwht_batched_rows(rng):
    x = rng.integers(0, 2, (3, 5, 16))
    out = fwht(x)
    for i in range(3):
        for j in range(5):
            assert np.array_equal(out[i, j], fwht(x[i, j]))


def test_fwht_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        fwht([1, 2, 3])


def test_table_validation():
    with pytest.raises(ValueError):
        VectorialBooleanFunction(2, 2, [0, 1, 2])
    with pytest.raises(ValueError):
        VectorialBooleanFunction(2, 2, [0, 1, 2, 4])


def test_cube_gf8_table_matches_construction():
    F = gold_function(FieldContext(3, 0b1011), 1)
    assert F.table.tolist() == CUBE_GF8


# ---------- differential uniformity

def test_uniformity_identity_is_full():
    for n in (1, 3, 5):
        assert differential_uniformity(identity(n)) == 1 << n


def test_uniformity_cube_gf8():
    F = VectorialBooleanFunction(3, 3, CUBE_GF8)
    assert oracles.ddt_max(CUBE_GF8) == 2
    assert differential_uniformity(F) == 2


def test_uniformity_inverse_gf32():
    F = inverse_function(default_modulus(5))
    assert differential_uniformity(F) == 2


def test_uniformity_matches_bruteforce(rng):
    for _ in range(40):
        n, m = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        F = random_function(rng, n, m)
        assert differential_uniformity(F) == oracles.ddt_max(F.table.tolist())


def test_is_apn_examples():
    assert is_apn(gold_function(default_modulus(4), 1))
    assert oracles.ddt_max(gold_function(default_modulus(4), 1).table.tolist()) == 2
    assert not is_apn(identity(4))
    assert not is_apn(inverse_function(default_modulus(6)))
    with pytest.raises(ValueError):
        is_apn(VectorialBooleanFunction(3, 2, [0] * 8))


# ---------- Walsh spectrum

def test_walsh_constant_corner():
    F = VectorialBooleanFunction(4, 1, [0] * 16)
    spec = walsh_spectrum(F)
    assert spec[0, 0] == 16
    assert linearity(F) == 16


def test_walsh_identity_is_diagonal():
    n = 4
    spec = walsh_spectrum(identity(n)).as_matrix()
    assert np.array_equal(spec, (1 << n) * np.eye(1 << n, dtype=int))


def test_walsh_inverse_gf32_values():
    spec = walsh_spectrum(inverse_function(default_modulus(5))).as_matrix()[1:]
    assert np.all(spec % 4 == 0)
    # the interval [-2^3.5 + 1, 2^3.5 + 1] holds exactly the integers -10..12
    assert spec.min() >= -10 and spec.max() <= 12


def test_walsh_index_layout():
    F = VectorialBooleanFunction(3, 3, CUBE_GF8)
    ref = oracles.walsh(CUBE_GF8, 3, 3)
    spec = walsh_spectrum(F)
    for (a, b), v in ref.items():
        assert spec[a, b] == v
        assert spec.values[(b << 3) | a] == v


def test_fast_equals_direct_random(rng):
    for _ in range(120):
        n, m = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        F = random_function(rng, n, m)
        assert walsh_spectrum(F) == walsh_spectrum_direct(F)


def test_direct_equals_literal_sum(rng):
    for _ in range(5):
        F = random_function(rng, 3, 3)
        ref = oracles.walsh(F.table.tolist(), 3, 3)
        direct = walsh_spectrum_direct(F)
        assert all(direct[a, b] == v for (a, b), v in ref.items())


@pytest.mark.parametrize("maker, n", [(inverse_function, 5), (inverse_function, 8),
                                      (lambda c: gold_function(c, 1), 7), (inverse_function, 10)])
def test_parseval_and_trivial_column(maker, n):
    spec = walsh_spectrum(maker(default_modulus(n))).as_matrix().astype(np.int64)
    assert np.all((spec ** 2).sum(axis=1) == 1 << (2 * n))
    assert spec[0, 0] == 1 << n
    assert np.all(spec[0, 1:] == 0)


def test_walsh_capacity_guard():
    F = VectorialBooleanFunction(17, 16, np.zeros(1 << 17, dtype=int))
    with pytest.raises(CapacityError):
        walsh_spectrum(F)
    with pytest.raises(CapacityError):
        linearity(F)


# ---------- linearity

def test_linearity_inverse_gf32():
    F = inverse_function(default_modulus(5))
    assert oracles.linearity(F.table.tolist(), 5, 5) == 12
    assert linearity(F) == 12


def test_linearity_gold_almost_bent():
    for n in (3, 5, 7, 9):
        assert linearity(gold_function(default_modulus(n), 1)) == 1 << ((n + 1) // 2)


def test_linearity_streaming_matches_dense(rng):
    for _ in range(20):
        F = random_function(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        dense = walsh_spectrum(F).as_matrix()[1:]
        assert linearity(F) == int(np.abs(dense).max())


# ---------- component weights

def test_component_weight_examples():
    assert component_weight(identity(1), 1, 0) == 1
    F = VectorialBooleanFunction(3, 3, CUBE_GF8)
    assert component_weight(F, 1, 0) == 4


def test_component_weight_partition(rng):
    F = random_function(rng, 6, 4)
    for a in range(1, 16):
        assert component_weight(F, a, 0) + component_weight(F, a, 1) == 64
    with pytest.raises(ValueError):
        component_weight(F, 0, 1)


# ---------- quadratic test

def brute_quadratic(F):
    n, t = F.n, F.table.tolist()
    return all(oracles.is_linear_map([t[x ^ a] ^ t[x] ^ t[a] ^ t[0] for x in range(1 << n)], n)
               for a in range(1 << n))


def test_quadratic_examples():
    for n in (3, 4, 5, 6):
        assert is_quadratic(gold_function(default_modulus(n), 1))
    assert not is_quadratic(inverse_function(default_modulus(5)))
    assert is_quadratic(identity(5))


def test_quadratic_matches_all_directions_and_degree(rng):
    for _ in range(60):
        n = int(rng.integers(1, 5))
        if rng.random() < 0.5:
            F = random_function(rng, n, n)
        else:
            # random quadratic: xor of products of two linear maps plus affine part
            lin = rng.integers(0, 1 << n, (3, n))
            def ev(row, x):
                out = 0
                for i in range(n):
                    if (x >> i) & 1:
                        out ^= int(row[i])
                return out
            F = VectorialBooleanFunction(
                n, n, [(ev(lin[0], x) & ev(lin[1], x)) ^ ev(lin[2], x) for x in range(1 << n)])
        expected = brute_quadratic(F)
        assert is_quadratic(F) == expected
        assert expected == (vbf.algebraic_degree(F) <= 2)


# ---------- APN linearity bound

@pytest.mark.parametrize("maker, n, lin", [
    (lambda c: gold_function(c, 1), 5, 8),
    (inverse_function, 7, 20),
    (lambda c: gold_function(c, 1), 4, 8),
])
def test_apn_bound_examples(maker, n, lin):
    F = maker(default_modulus(n))
    assert linearity(F) == lin
    assert apn_linearity_bound_check(F)


def test_apn_bound_rejects_non_apn():
    with pytest.raises(ValueError):
        apn_linearity_bound_check(identity(4))


# ---------- truth-table files

def test_truth_table_roundtrip(tmp_path, rng):
    F = random_function(rng, 5, 7)
    path = tmp_path / "f.txt"
    vbf.write_truth_table(F, path)
    assert vbf.read_truth_table(str(path)) == F


def test_truth_table_whitespace_and_comments():
    text = "# comment\n 2   2 \n\n0\n  3 # trailing\n1\n2\n"
    F = vbf.read_truth_table(io.StringIO(text))
    assert F.table.tolist() == [0, 3, 1, 2]


@pytest.mark.parametrize("text, lineno", [
    ("2 2\n0\n1\nz\n3\n", 4),
    ("2\n0\n", 1),
    ("2 2\n0\n1\n2\n", 0),
    ("2 1\n0\n1\n1\n2\n", 5),
])
def test_truth_table_parse_errors(text, lineno):
    with pytest.raises(FormatError) as exc:
        vbf.read_truth_table(io.StringIO(text))
    assert exc.value.lineno == lineno
