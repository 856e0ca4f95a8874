"""Factored transforms with exact addition/bit-shift accounting.

A scaled transform is a short product of structured factors (permutation,
sparse dyadic, block-diagonal, diagonal, butterfly).  Keeping the factors
instead of the dense product gives two things: a multiplierless application
path that is bit-exact on integer input, and an arithmetic-cost model
where additions and shifts are counted per factor.  Catalog 8-point blocks
are opaque cost leaves: applying one uses its dense dyadic matrix, while
its cost comes from the published fast-algorithm counts (``declared_base``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from .matkit import DyadicMatrix, DyadicRational, Permutation

Cost = tuple[int, int]  # (additions, bit shifts)


class FactorKind(Enum):
    PERMUTATION = "permutation"
    DIAGONAL_DYADIC = "diagonal"
    BLOCK_DIAG = "block-diag"
    BUTTERFLY = "butterfly"
    SPARSE_DYADIC = "sparse"


def count_dense_dyadic(m: DyadicMatrix) -> Cost:
    """Naive dense cost of a dyadic matrix.

    adds = sum over rows of max(nonzeros - 1, 0); one shift per entry whose
    magnitude is neither 0 nor 1 (multiplying by +-2 or +-1/2 is a shift,
    0 and +-1 are free).
    """
    adds = 0
    shifts = 0
    for row in m.entries():
        nonzero = [e for e in row if e]
        adds += max(len(nonzero) - 1, 0)
        shifts += sum(1 for e in nonzero if not e.is_unit_magnitude())
    return adds, shifts


def _add_costs(a: Cost, b: Cost) -> Cost:
    return (a[0] + b[0], a[1] + b[1])


@dataclass(frozen=True)
class Factor:
    """One structured stage of a factored transform."""

    kind: FactorKind
    size: int
    payload: object = None
    declared_cost: Cost | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def permutation(cls, p: Permutation) -> "Factor":
        return cls(FactorKind.PERMUTATION, p.size, p)

    @classmethod
    def sparse(cls, m: DyadicMatrix, declared_cost: Cost | None = None) -> "Factor":
        if m.rows != m.cols:
            raise ValueError("sparse factor must be square")
        return cls(FactorKind.SPARSE_DYADIC, m.rows, m, declared_cost)

    @classmethod
    def diagonal(cls, m: DyadicMatrix) -> "Factor":
        if m.rows != m.cols:
            raise ValueError("diagonal factor must be square")
        num = m.numerators()
        if np.any(num != np.diag(np.diag(num))):
            raise ValueError("diagonal factor has off-diagonal entries")
        return cls(FactorKind.DIAGONAL_DYADIC, m.rows, m)

    @classmethod
    def block_diag(cls, blocks: tuple["FactoredTransform", ...]) -> "Factor":
        if not blocks:
            raise ValueError("block-diagonal factor needs at least one block")
        return cls(FactorKind.BLOCK_DIAG, sum(b.size for b in blocks), tuple(blocks))

    @classmethod
    def butterfly(cls, size: int) -> "Factor":
        if size < 2 or size % 2:
            raise ValueError("butterfly size must be a positive even number")
        return cls(FactorKind.BUTTERFLY, size)

    # -- cost --------------------------------------------------------------

    def cost(self) -> Cost:
        if self.declared_cost is not None:
            return self.declared_cost
        if self.kind is FactorKind.PERMUTATION:
            return (0, 0)
        if self.kind is FactorKind.BUTTERFLY:
            return (self.size, 0)
        if self.kind is FactorKind.BLOCK_DIAG:
            return reduce(_add_costs, (b.cost() for b in self.payload), (0, 0))
        return count_dense_dyadic(self.payload)

    # -- dense views -------------------------------------------------------

    def dyadic(self) -> DyadicMatrix:
        if self.kind is FactorKind.PERMUTATION:
            return self.payload.to_dyadic()
        if self.kind is FactorKind.BUTTERFLY:
            half = self.size // 2
            eye = np.eye(half, dtype=np.int64)
            top = np.hstack([eye, np.fliplr(eye)])
            bottom = np.hstack([np.fliplr(eye), -eye])
            return DyadicMatrix(np.vstack([top, bottom]))
        if self.kind is FactorKind.BLOCK_DIAG:
            out = self.payload[0].dyadic()
            for block in self.payload[1:]:
                out = DyadicMatrix.block_diag(out, block.dyadic())
            return out
        return self.payload

    def dense(self) -> np.ndarray:
        return self.dyadic().to_real()

    # -- application -------------------------------------------------------

    def apply_exact(self, x: list[DyadicRational]) -> list[DyadicRational]:
        if self.kind is FactorKind.PERMUTATION:
            out = [DyadicRational(0)] * self.size
            for n, target in enumerate(self.payload.map):
                out[target] = x[n]
            return out
        if self.kind is FactorKind.BUTTERFLY:
            half = self.size // 2
            top = [x[i] + x[self.size - 1 - i] for i in range(half)]
            bottom = [x[half - 1 - i] - x[half + i] for i in range(half)]
            return top + bottom
        if self.kind is FactorKind.BLOCK_DIAG:
            out: list[DyadicRational] = []
            start = 0
            for block in self.payload:
                out.extend(block.apply_exact(x[start : start + block.size]))
                start += block.size
            return out
        return self.payload.apply(x)

    def apply_real(self, x: np.ndarray) -> np.ndarray:
        if self.kind is FactorKind.PERMUTATION:
            out = np.empty_like(x)
            out[self.payload.map] = x
            return out
        if self.kind is FactorKind.BUTTERFLY:
            half = self.size // 2
            return np.concatenate([x[:half] + x[::-1][:half], x[half - 1 :: -1] - x[half:]])
        if self.kind is FactorKind.BLOCK_DIAG:
            pieces = []
            start = 0
            for block in self.payload:
                pieces.append(block.apply_real(x[start : start + block.size]))
                start += block.size
            return np.concatenate(pieces)
        return self.payload.to_real() @ x

    def describe(self) -> dict:
        adds, shifts = self.cost()
        info: dict = {"kind": self.kind.value, "size": self.size, "adds": adds, "shifts": shifts}
        if self.kind is FactorKind.PERMUTATION:
            info["map"] = list(map(int, self.payload.map))
        elif self.kind is FactorKind.BLOCK_DIAG:
            info["blocks"] = [b.describe() for b in self.payload]
        elif self.kind is not FactorKind.BUTTERFLY:
            info["entries"] = [[str(e) for e in row] for row in self.payload.entries()]
        return info


@dataclass(frozen=True)
class FactoredTransform:
    """Ordered product of factors; ``factors[0]`` is the leftmost matrix.

    ``declared_base`` marks an opaque leaf: its cost is the published
    fast-algorithm count rather than the sum of naive factor costs.
    """

    size: int
    factors: tuple[Factor, ...]
    declared_base: Cost | None = None

    def __post_init__(self) -> None:
        for f in self.factors:
            if f.size != self.size:
                raise ValueError(
                    f"factor of size {f.size} inside a transform of size {self.size}"
                )

    def cost(self) -> Cost:
        if self.declared_base is not None:
            return self.declared_base
        return reduce(_add_costs, (f.cost() for f in self.factors), (0, 0))

    def dyadic(self) -> DyadicMatrix:
        out = self.factors[0].dyadic()
        for f in self.factors[1:]:
            out = out @ f.dyadic()
        return out

    def dense(self) -> np.ndarray:
        return self.dyadic().to_real()

    def apply_exact(self, x: list[DyadicRational]) -> list[DyadicRational]:
        for f in reversed(self.factors):
            x = f.apply_exact(x)
        return x

    def apply_real(self, x: np.ndarray) -> np.ndarray:
        for f in reversed(self.factors):
            x = f.apply_real(x)
        return x

    def describe(self) -> dict:
        adds, shifts = self.cost()
        return {
            "size": self.size,
            "adds": adds,
            "shifts": shifts,
            "declared_base": list(self.declared_base) if self.declared_base else None,
            "factors": [f.describe() for f in self.factors],
        }


def cost(ft: FactoredTransform) -> Cost:
    return ft.cost()


def apply(ft: FactoredTransform, x) -> list[DyadicRational] | np.ndarray:
    """Apply the factored transform to a vector.

    Integer or dyadic-rational input runs through the exact arithmetic
    path and comes back as ``DyadicRational`` values; anything else is
    evaluated in floating point.
    """
    values = list(x)
    if len(values) != ft.size:
        raise ValueError(f"expected a vector of length {ft.size}, got {len(values)}")
    if all(isinstance(v, (int, np.integer, DyadicRational)) for v in values):
        exact = [v if isinstance(v, DyadicRational) else DyadicRational(int(v)) for v in values]
        return ft.apply_exact(exact)
    return ft.apply_real(np.asarray(x, dtype=float))


def compose(a: FactoredTransform, b: FactoredTransform) -> FactoredTransform:
    """Product a·b as a factored transform; costs add exactly."""
    if a.size != b.size:
        raise ValueError("cannot compose transforms of different sizes")

    def as_factors(t: FactoredTransform) -> tuple[Factor, ...]:
        if t.declared_base is None:
            return t.factors
        # keep the opaque leaf's declared cost by wrapping it whole
        return (Factor.block_diag((t,)),)

    return FactoredTransform(a.size, as_factors(a) + as_factors(b))


def to_json(ft: FactoredTransform) -> str:
    return json.dumps(ft.describe(), indent=2)
