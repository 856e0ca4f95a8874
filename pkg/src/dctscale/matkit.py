"""Exact small-dense linear algebra shared by every other module.

Real matrices are plain float64 numpy arrays.  Low-complexity matrices are
held exactly as :class:`DyadicMatrix` (integer numerators over a common
power-of-two denominator), so Gram products, generalized-permutation checks
and shift counting never see rounding error.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

#: Numerators beyond this many bits raise OverflowError instead of wrapping.
NUMERATOR_BITS = 62
_NUM_LIMIT = 1 << NUMERATOR_BITS

#: Default tolerance for float comparisons throughout the package.
DEFAULT_TOL = 1e-10


class DyadicRational:
    """A number of the form ``numerator / 2**shift``, kept in canonical form.

    Canonical means the numerator is odd whenever ``shift > 0`` and the
    shift is zero when the numerator is zero.  Arithmetic is exact; building
    a value whose numerator needs more than 62 bits raises OverflowError.
    """

    __slots__ = ("numerator", "shift")

    def __init__(self, numerator: int, shift: int = 0):
        numerator = int(numerator)
        shift = int(shift)
        if shift < 0:
            raise ValueError("shift must be non-negative")
        if numerator == 0:
            shift = 0
        else:
            while shift > 0 and numerator % 2 == 0:
                numerator //= 2
                shift -= 1
        if abs(numerator) >= _NUM_LIMIT:
            raise OverflowError(
                f"dyadic numerator {numerator} exceeds {NUMERATOR_BITS} bits"
            )
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("DyadicRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "DyadicRational":
        """Parse ``"3"``, ``"-1/2"``, ``"5/8"`` (denominator a power of two)."""
        text = text.strip()
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            num = int(num_s)
            den = int(den_s)
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator of {text!r} is not a power of two")
            return cls(num, den.bit_length() - 1)
        return cls(int(text))

    def __float__(self) -> float:
        return self.numerator / (1 << self.shift)

    def __bool__(self) -> bool:
        return self.numerator != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator == other.numerator and self.shift == other.shift

    def __hash__(self):
        return hash((self.numerator, self.shift))

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.numerator, self.shift)

    def __abs__(self) -> "DyadicRational":
        return DyadicRational(abs(self.numerator), self.shift)

    def __add__(self, other) -> "DyadicRational":
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        s = max(self.shift, other.shift)
        num = (self.numerator << (s - self.shift)) + (
            other.numerator << (s - other.shift)
        )
        return DyadicRational(num, s)

    __radd__ = __add__

    def __sub__(self, other) -> "DyadicRational":
        return self + (-other if isinstance(other, DyadicRational) else -int(other))

    def __rsub__(self, other) -> "DyadicRational":
        return (-self) + other

    def __mul__(self, other) -> "DyadicRational":
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return DyadicRational(
            self.numerator * other.numerator, self.shift + other.shift
        )

    __rmul__ = __mul__

    def is_unit_magnitude(self) -> bool:
        """True when the value is +1 or -1 (applying it is free)."""
        return self.shift == 0 and abs(self.numerator) == 1

    def __repr__(self) -> str:
        return f"DyadicRational({self})"

    def __str__(self) -> str:
        if self.shift == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.shift}"


def _as_int_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64, copy=True)
    if arr.ndim != 2:
        raise ValueError("matrix data must be two-dimensional")
    return arr


class DyadicMatrix:
    """Exact matrix of dyadic rationals.

    Stored as an int64 numerator array over one common shift:
    ``value[i, j] = num[i, j] / 2**shift``.  All arithmetic is exact;
    numerators are capped at 62 bits (OverflowError beyond that).
    """

    __slots__ = ("_num", "_shift")

    def __init__(self, numerators, shift: int = 0):
        num = _as_int_array(numerators)
        shift = int(shift)
        if shift < 0:
            raise ValueError("shift must be non-negative")
        # factor out common powers of two so entry shifts stay minimal
        while shift > 0 and not np.any(num & 1):
            num >>= 1
            shift -= 1
        if not np.any(num):
            shift = 0
        if int(np.abs(num).max(initial=0)) >= _NUM_LIMIT:
            raise OverflowError(
                f"dyadic numerator exceeds {NUMERATOR_BITS} bits"
            )
        self._num = num
        self._shift = shift

    # -- constructors -------------------------------------------------

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "DyadicMatrix":
        """Build from nested ints, strings like ``"-1/2"``, or DyadicRationals."""
        parsed = [
            [
                e
                if isinstance(e, DyadicRational)
                else DyadicRational.parse(e)
                if isinstance(e, str)
                else DyadicRational(e)
                for e in row
            ]
            for row in rows
        ]
        shift = max((e.shift for row in parsed for e in row), default=0)
        num = [[e.numerator << (shift - e.shift) for e in row] for row in parsed]
        return cls(num, shift)

    @classmethod
    def identity(cls, n: int) -> "DyadicMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, n: int) -> "DyadicMatrix":
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def block_diag(cls, a: "DyadicMatrix", b: "DyadicMatrix") -> "DyadicMatrix":
        shift = max(a._shift, b._shift)
        out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=np.int64)
        out[: a.rows, : a.cols] = a._num << (shift - a._shift)
        out[a.rows :, a.cols :] = b._num << (shift - b._shift)
        return cls(out, shift)

    # -- shape / access -----------------------------------------------

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    @property
    def shift(self) -> int:
        """Common denominator exponent of the internal representation."""
        return self._shift

    def entry(self, i: int, j: int) -> DyadicRational:
        return DyadicRational(int(self._num[i, j]), self._shift)

    def entries(self) -> list[list[DyadicRational]]:
        return [
            [self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)
        ]

    def numerators(self) -> np.ndarray:
        """Copy of the int64 numerator array (over ``2**self.shift``)."""
        return self._num.copy()

    def to_real(self) -> np.ndarray:
        """Lossless float64 image (entries here are far below 2**53)."""
        return self._num.astype(np.float64) / float(1 << self._shift)

    def max_entry_shift(self) -> int:
        """Largest canonical per-entry shift (0 for an integer matrix)."""
        best = 0
        for i in range(self.rows):
            for j in range(self.cols):
                best = max(best, self.entry(i, j).shift)
        return best

    # -- arithmetic ----------------------------------------------------

    def __matmul__(self, other) -> "DyadicMatrix":
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        amax = int(np.abs(self._num).max(initial=0))
        bmax = int(np.abs(other._num).max(initial=0))
        bound = amax * bmax * max(self.cols, 1)
        if bound < _NUM_LIMIT:
            prod = self._num @ other._num  # exact in int64
        else:
            prod = self._num.astype(object) @ other._num.astype(object)
            if int(max(abs(int(v)) for v in prod.flat)) >= _NUM_LIMIT:
                raise OverflowError(
                    f"dyadic numerator exceeds {NUMERATOR_BITS} bits"
                )
            prod = prod.astype(np.int64)
        return DyadicMatrix(prod, self._shift + other._shift)

    def _aligned(self, other: "DyadicMatrix"):
        shift = max(self._shift, other._shift)
        a = self._num << (shift - self._shift)
        b = other._num << (shift - other._shift)
        return a, b, shift

    def __add__(self, other) -> "DyadicMatrix":
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("dimension mismatch in matrix sum")
        a, b, shift = self._aligned(other)
        return DyadicMatrix(a + b, shift)

    def __sub__(self, other) -> "DyadicMatrix":
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("dimension mismatch in matrix difference")
        a, b, shift = self._aligned(other)
        return DyadicMatrix(a - b, shift)

    def __neg__(self) -> "DyadicMatrix":
        return DyadicMatrix(-self._num, self._shift)

    def transpose(self) -> "DyadicMatrix":
        return DyadicMatrix(self._num.T, self._shift)

    @property
    def T(self) -> "DyadicMatrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a, b, _ = self._aligned(other)
        return bool(np.array_equal(a, b))

    def __hash__(self):
        return hash((self.shape, self._shift, self._num.tobytes()))

    def apply(self, x: Sequence) -> list[DyadicRational]:
        """Exact matrix-vector product; ``x`` holds ints or DyadicRationals."""
        if len(x) != self.cols:
            raise ValueError("vector length mismatch")
        vec = [
            v if isinstance(v, DyadicRational) else DyadicRational(v) for v in x
        ]
        out = []
        for i in range(self.rows):
            acc = DyadicRational(0)
            for j, v in enumerate(vec):
                nij = int(self._num[i, j])
                if nij:
                    acc = acc + DyadicRational(nij, self._shift) * v
            out.append(acc)
        return out

    def __repr__(self) -> str:
        return f"DyadicMatrix({self._num.tolist()}, shift={self._shift})"


class Permutation:
    """A permutation of {0, …, size-1}; as a matrix, column ``n`` has its
    single unit entry at row ``map[n]``."""

    __slots__ = ("map",)

    def __init__(self, mapping: Iterable[int]):
        arr = np.array(list(mapping), dtype=np.int64)
        n = arr.size
        if not np.array_equal(np.sort(arr), np.arange(n)):
            raise ValueError("mapping is not a bijection")
        object.__setattr__(self, "map", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        return self.map.size

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.map)
        inv[self.map] = np.arange(self.size)
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Matrix product self @ other."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(self.map[other.map])

    def apply(self, x: Sequence) -> list:
        """Vector image under the permutation matrix: ``y[map[n]] = x[n]``."""
        if len(x) != self.size:
            raise ValueError("vector length mismatch")
        out = [None] * self.size
        for n, v in enumerate(x):
            out[int(self.map[n])] = v
        return out

    def to_dyadic(self) -> DyadicMatrix:
        num = np.zeros((self.size, self.size), dtype=np.int64)
        num[self.map, np.arange(self.size)] = 1
        return DyadicMatrix(num)

    def to_real(self) -> np.ndarray:
        return self.to_dyadic().to_real()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return bool(np.array_equal(self.map, other.map))

    def __hash__(self):
        return hash(self.map.tobytes())

    def __repr__(self) -> str:
        return f"Permutation({self.map.tolist()})"


# -- free functions -----------------------------------------------------


def as_real(m) -> np.ndarray:
    """Coerce DyadicMatrix / Permutation / array-like to a float64 array."""
    if isinstance(m, DyadicMatrix):
        return m.to_real()
    if isinstance(m, Permutation):
        return m.to_real()
    return np.asarray(m, dtype=np.float64)


def frobenius_distance(a, b) -> float:
    """sqrt of the summed squared entrywise differences of two matrices."""
    a = as_real(a)
    b = as_real(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.sum((a - b) ** 2)))


def is_diagonal(m, tol: float = 0.0) -> bool:
    """True when every off-diagonal magnitude is at most ``tol``."""
    m = as_real(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("is_diagonal expects a square matrix")
    off = m - np.diag(np.diag(m))
    return bool(np.max(np.abs(off)) <= tol)


def is_generalized_permutation(m) -> bool:
    """True when the matrix has exactly one nonzero entry per row and column.

    Dyadic matrices are tested exactly; float matrices use exact-zero
    structure (the matrices this is asked about have structural zeros).
    """
    if isinstance(m, Permutation):
        return True
    if isinstance(m, DyadicMatrix):
        pattern = m.numerators() != 0
    else:
        pattern = np.asarray(m, dtype=np.float64) != 0.0
    if pattern.shape[0] != pattern.shape[1]:
        raise ValueError("is_generalized_permutation expects a square matrix")
    return bool(
        np.all(pattern.sum(axis=0) == 1) and np.all(pattern.sum(axis=1) == 1)
    )


def diag_inv_sqrt(m) -> np.ndarray:
    """Diagonal matrix with entries ``sqrt([(m)^-1]_kk)``.

    The full inverse is computed first (LAPACK LU with partial pivoting),
    then the square root of its diagonal is taken.  For diagonal input this
    reduces to ``diag(1/sqrt(m_kk))``.
    """
    m = as_real(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("diag_inv_sqrt expects a square matrix")
    try:
        inv = np.linalg.inv(m)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"singular matrix: {exc}") from exc
    d = np.diag(inv).copy()
    if np.any(d <= 0):
        raise ValueError("inverse has a non-positive diagonal entry")
    return np.diag(np.sqrt(d))
