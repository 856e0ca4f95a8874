"""Exact dyadic arithmetic, permutations and the small matrix helpers.

The dyadic types back every cost count and every bit-exact claim in the
package, so they get the heaviest randomized coverage: arithmetic is
cross-checked against Fraction, the matrix product against a Fraction
matmul, and the orthogonalization helper against a hand-rolled
Gauss-Jordan inverse.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from dctscale.exact import TransformKind, counter_mixing, transform_matrix
from dctscale.matkit import (
    DyadicMatrix,
    DyadicRational,
    Permutation,
    as_real,
    diag_inv_sqrt,
    frobenius_distance,
    is_diagonal,
    is_generalized_permutation,
)


def _frac(d: DyadicRational) -> Fraction:
    return Fraction(d.numerator, 1 << d.shift)


# ── DyadicRational ─────────────────────────────────────────────────────────


def test_rational_canonical_form():
    # 6/4 reduces to 3/2, 8/8 to 1, and zero swallows its shift
    assert DyadicRational(6, 2) == DyadicRational(3, 1)
    assert DyadicRational(8, 3) == DyadicRational(1)
    z = DyadicRational(0, 7)
    assert z.numerator == 0 and z.shift == 0
    assert str(DyadicRational(-1, 1)) == "-1/2"
    assert str(DyadicRational(5)) == "5"


def test_rational_parse():
    assert DyadicRational.parse("3") == DyadicRational(3)
    assert DyadicRational.parse("-1/2") == DyadicRational(-1, 1)
    assert DyadicRational.parse(" 5/8 ") == DyadicRational(5, 3)
    with pytest.raises(ValueError):
        DyadicRational.parse("1/3")
    with pytest.raises(ValueError):
        DyadicRational.parse("1/0")


def test_rational_validation():
    with pytest.raises(ValueError):
        DyadicRational(1, -1)
    with pytest.raises(OverflowError):
        DyadicRational(1 << 62)
    # largest representable magnitude is fine
    DyadicRational((1 << 62) - 1)


def test_rational_immutable_and_hashable():
    d = DyadicRational(3, 1)
    with pytest.raises(AttributeError):
        d.numerator = 5
    assert hash(DyadicRational(3, 1)) == hash(d)
    assert DyadicRational(2) == 2
    assert bool(DyadicRational(0)) is False and bool(d) is True


def test_rational_arithmetic_vs_fraction():
    rng = np.random.default_rng(101)
    for _ in range(300):
        a = DyadicRational(int(rng.integers(-999, 1000)), int(rng.integers(0, 7)))
        b = DyadicRational(int(rng.integers(-999, 1000)), int(rng.integers(0, 7)))
        assert _frac(a + b) == _frac(a) + _frac(b)
        assert _frac(a - b) == _frac(a) - _frac(b)
        assert _frac(a * b) == _frac(a) * _frac(b)
        assert _frac(-a) == -_frac(a)
        assert _frac(abs(a)) == abs(_frac(a))
        assert float(a) == float(_frac(a))
    # mixed int operands
    assert DyadicRational(1, 1) + 1 == DyadicRational(3, 1)
    assert 1 - DyadicRational(1, 1) == DyadicRational(1, 1)
    assert 2 * DyadicRational(3, 2) == DyadicRational(3, 1)


def test_rational_unit_magnitude():
    assert DyadicRational(1).is_unit_magnitude()
    assert DyadicRational(-1).is_unit_magnitude()
    assert not DyadicRational(2).is_unit_magnitude()
    assert not DyadicRational(1, 1).is_unit_magnitude()
    assert not DyadicRational(0).is_unit_magnitude()


# ── DyadicMatrix ───────────────────────────────────────────────────────────


def test_matrix_from_entries_mixed():
    m = DyadicMatrix.from_entries([[1, "-1/2"], [DyadicRational(3, 2), 0]])
    assert m.entry(0, 0) == DyadicRational(1)
    assert m.entry(0, 1) == DyadicRational(-1, 1)
    assert m.entry(1, 0) == DyadicRational(3, 2)
    assert m.entry(1, 1) == DyadicRational(0)
    assert m.shape == (2, 2)


def test_matrix_common_shift_normalization():
    # all numerators even -> the constructor divides the shift out
    m = DyadicMatrix([[2, 4], [6, 8]], 1)
    assert m.shift == 0
    assert m.entry(0, 0) == DyadicRational(1)
    z = DyadicMatrix([[0, 0], [0, 0]], 5)
    assert z.shift == 0


def test_matrix_constructor_validation():
    with pytest.raises(ValueError):
        DyadicMatrix([1, 2, 3])
    with pytest.raises(ValueError):
        DyadicMatrix([[1]], -1)
    with pytest.raises(OverflowError):
        DyadicMatrix([[1 << 62]])


def test_matrix_identity_zeros_blockdiag():
    eye = DyadicMatrix.identity(3)
    assert eye.to_real() == pytest.approx(np.eye(3))
    assert DyadicMatrix.zeros(2).to_real() == pytest.approx(np.zeros((2, 2)))
    a = DyadicMatrix.from_entries([["1/2"]])
    b = DyadicMatrix.from_entries([[3]])
    bd = DyadicMatrix.block_diag(a, b)
    assert bd.to_real() == pytest.approx(np.array([[0.5, 0.0], [0.0, 3.0]]))


def test_matrix_matmul_vs_fraction():
    rng = np.random.default_rng(202)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        a = DyadicMatrix(rng.integers(-9, 10, size=(n, n)), int(rng.integers(0, 3)))
        b = DyadicMatrix(rng.integers(-9, 10, size=(n, n)), int(rng.integers(0, 3)))
        got = (a @ b).entries()
        fa = [[_frac(e) for e in row] for row in a.entries()]
        fb = [[_frac(e) for e in row] for row in b.entries()]
        for i in range(n):
            for j in range(n):
                want = sum(fa[i][k] * fb[k][j] for k in range(n))
                assert _frac(got[i][j]) == want


def test_matrix_matmul_object_fallback():
    # numerators big enough to trip the conservative int64 bound while the
    # true products still fit: exercises the arbitrary-precision path
    big = (1 << 31) + 1
    a = DyadicMatrix([[big, 0], [0, 1]])
    b = DyadicMatrix([[big - 2, 0], [0, 1]])
    prod = a @ b
    assert prod.entry(0, 0) == DyadicRational(big * (big - 2))
    # genuine overflow still raises
    with pytest.raises(OverflowError):
        c = DyadicMatrix([[1 << 61]])
        _ = c @ DyadicMatrix([[2]])


def test_matrix_add_sub_neg_transpose():
    a = DyadicMatrix.from_entries([[1, "1/2"], [0, -2]])
    b = DyadicMatrix.from_entries([["1/4", 1], [1, 1]])
    assert (a + b).entry(0, 0) == DyadicRational(5, 2)
    assert (a - b).entry(0, 1) == DyadicRational(-1, 1)
    assert (-a).entry(1, 1) == DyadicRational(2)
    assert a.T.entry(1, 0) == DyadicRational(1, 1)
    with pytest.raises(ValueError):
        _ = a + DyadicMatrix.identity(3)
    with pytest.raises(ValueError):
        _ = a @ DyadicMatrix.identity(3)


def test_matrix_round_trip_is_exact():
    # float64 image is lossless for shifts up to 30
    rng = np.random.default_rng(303)
    num = rng.integers(-(2**20), 2**20, size=(6, 6))
    m = DyadicMatrix(num, 30)
    back = m.to_real() * float(2**30)
    assert np.array_equal(back.astype(np.int64), m.numerators())


def test_matrix_apply_exact():
    m = DyadicMatrix.from_entries([[1, "-1/2"], [2, 0]])
    out = m.apply([4, DyadicRational(1, 1)])
    assert out[0] == DyadicRational(15, 2)  # 4 - 1/4
    assert out[1] == DyadicRational(8)
    with pytest.raises(ValueError):
        m.apply([1, 2, 3])


def test_matrix_equality_and_max_entry_shift():
    a = DyadicMatrix([[1, 2], [3, 4]], 1)
    b = DyadicMatrix([[2, 4], [6, 8]], 2)
    assert a == b and hash(a) == hash(b)
    assert a.max_entry_shift() == 1  # 1/2 and 3/2 entries
    assert DyadicMatrix.identity(4).max_entry_shift() == 0


# ── Permutation ────────────────────────────────────────────────────────────


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 2])


def test_permutation_matrix_semantics():
    p = Permutation([2, 0, 1])
    m = p.to_dyadic().numerators()
    # column n carries its unit at row map[n]
    for n, target in enumerate([2, 0, 1]):
        assert m[target, n] == 1
    assert p.apply(["a", "b", "c"]) == ["b", "c", "a"]


def test_permutation_compose_matches_matrix_product():
    rng = np.random.default_rng(404)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        p = Permutation(rng.permutation(n))
        q = Permutation(rng.permutation(n))
        lhs = p.compose(q).to_dyadic()
        rhs = p.to_dyadic() @ q.to_dyadic()
        assert lhs == rhs
        # P P^T = I exactly, in integer arithmetic
        prod = p.to_dyadic() @ p.inverse().to_dyadic()
        assert prod == DyadicMatrix.identity(n)
        assert p.compose(p.inverse()) == Permutation.identity(n)


# ── free helpers ───────────────────────────────────────────────────────────


def test_frobenius_distance_basics():
    assert frobenius_distance(np.eye(4), np.eye(4)) == 0.0
    assert frobenius_distance(np.eye(2), np.zeros((2, 2))) == pytest.approx(
        np.sqrt(2.0)
    )
    with pytest.raises(ValueError):
        frobenius_distance(np.eye(2), np.eye(3))


def test_frobenius_distance_triangle_inequality():
    rng = np.random.default_rng(505)
    for _ in range(50):
        a, b, c = (rng.normal(size=(5, 5)) for _ in range(3))
        ab = frobenius_distance(a, b)
        bc = frobenius_distance(b, c)
        ac = frobenius_distance(a, c)
        assert ac <= ab + bc + 1e-12


def test_is_diagonal():
    assert is_diagonal(np.diag([1.0, 2.0, 3.0]), tol=0.0)
    rdct = np.rint(2.0 * transform_matrix(TransformKind.DCT2, 8))
    assert is_diagonal(rdct @ rdct.T, tol=1e-12)
    sdct = np.sign(transform_matrix(TransformKind.DCT2, 8))
    assert not is_diagonal(sdct @ sdct.T, tol=1e-12)
    with pytest.raises(ValueError):
        is_diagonal(np.ones((2, 3)))


def test_is_generalized_permutation():
    ibar = DyadicMatrix(np.fliplr(np.eye(8, dtype=np.int64)))
    assert is_generalized_permutation(ibar)
    # -Ibar Z J: anti-diagonal times two diagonals keeps one entry per line
    z = DyadicMatrix.from_entries(
        [["1/2" if i == j == 0 else (1 if i == j else 0) for j in range(8)] for i in range(8)]
    )
    j = DyadicMatrix(np.diag((-1) ** np.arange(8)).astype(np.int64))
    assert is_generalized_permutation(-(ibar @ z @ j))
    # the exact mixing block has a dense first column
    assert not is_generalized_permutation(counter_mixing(8))
    assert is_generalized_permutation(Permutation([1, 0]))
    with pytest.raises(ValueError):
        is_generalized_permutation(np.ones((2, 3)))


def test_as_real_coercions():
    assert as_real(DyadicMatrix.identity(2)) == pytest.approx(np.eye(2))
    assert as_real(Permutation([0, 1])) == pytest.approx(np.eye(2))
    assert as_real([[1, 2], [3, 4]]).dtype == np.float64


# ── diag_inv_sqrt ──────────────────────────────────────────────────────────


def _gauss_jordan_inverse(a: np.ndarray) -> np.ndarray:
    """Brute-force inverse with partial pivoting (independent oracle)."""
    n = a.shape[0]
    work = np.hstack([a.astype(np.float64).copy(), np.eye(n)])
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(work[col:, col])))
        if abs(work[pivot, col]) < 1e-14:
            raise ZeroDivisionError("singular")
        work[[col, pivot]] = work[[pivot, col]]
        work[col] /= work[col, col]
        for row in range(n):
            if row != col:
                work[row] -= work[row, col] * work[col]
    return work[:, n:]


def test_diag_inv_sqrt_scalar_matrix():
    assert diag_inv_sqrt(4.0 * np.eye(3)) == pytest.approx(0.5 * np.eye(3))


def test_diag_inv_sqrt_diagonal_gram():
    d = np.diag([8.0, 6.0, 4.0, 6.0, 8.0, 6.0, 4.0, 6.0])
    want = np.diag(1.0 / np.sqrt(np.diag(d)))
    assert diag_inv_sqrt(d) == pytest.approx(want, abs=1e-14)


def test_diag_inv_sqrt_full_inverse_first():
    # non-diagonal input: the inverse comes before the diagonal square root
    sdct = np.sign(transform_matrix(TransformKind.DCT2, 8))
    gram = sdct @ sdct.T
    want = np.diag(np.sqrt(np.diag(_gauss_jordan_inverse(gram))))
    assert diag_inv_sqrt(gram) == pytest.approx(want, abs=1e-12)


def test_diag_inv_sqrt_errors():
    with pytest.raises(ValueError):
        diag_inv_sqrt(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        diag_inv_sqrt(np.diag([1.0, -1.0]))
    with pytest.raises(ValueError):
        diag_inv_sqrt(np.ones((2, 3)))
