"""Doubling maps that grow an N-point transform into a 2N-point one.

The exact doubling factorization carries a scalar sqrt(2)/2 and two dense
real mixing blocks.  The scaling methods here replace those blocks with
cheap sign/permutation matrices (or the identity), drop the scalar, and
repair row norms once at the end via diagonal orthogonalization.  Every
intermediate stage then stays dyadic, so the doubled transform inherits
the multiplierless character of its seed.

Method registry (B-hat, G-hat per half-size N):

    JAM  (I, I)        IV  (I, J)
    I    (Ibar, I)     V   (Ibar, J)
    II   (-Ibar J, I)  VI  (-Ibar J, J)
    III  (-Ibar Z J, I) VII (-Ibar Z J, J)
    exact (B_N, G_N)   -- reproduces the exact transform up to row scaling

with J the alternating-sign diagonal, Ibar the counter identity and Z the
identity with leading entry 1/2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .catalog import orthogonalize
from .exact import (
    butterfly,
    counter_identity,
    counter_mixing,
    half_leading_diagonal,
    perfect_shuffle,
    sign_diagonal,
    signed_cosine_diagonal,
)
from .fastpath import Factor, FactoredTransform, count_dense_dyadic
from .matkit import (
    DyadicMatrix,
    Permutation,
    as_real,
    is_diagonal,
    is_generalized_permutation,
)

METHOD_IDS: tuple[str, ...] = ("JAM", "I", "II", "III", "IV", "V", "VI", "VII", "exact")
DYADIC_METHOD_IDS: tuple[str, ...] = METHOD_IDS[:-1]


def normalize_method(method: str) -> str:
    m = str(method).strip()
    for candidate in (m, m.upper(), m.lower()):
        if candidate in METHOD_IDS:
            return candidate
    raise ValueError(
        f"unknown scaling method {method!r}; choose from {', '.join(METHOD_IDS)}"
    )


def method_blocks(method: str, half: int):
    """Parameter pair (B-hat, G-hat) at half-size ``half``.

    Dyadic methods return DyadicMatrix pairs; 'exact' returns the real
    mixing blocks of the exact factorization.
    """
    mid = normalize_method(method)
    if mid == "exact":
        return counter_mixing(half), signed_cosine_diagonal(half)
    ident = DyadicMatrix.identity(half)
    ibar = counter_identity(half)
    j = sign_diagonal(half)
    z = half_leading_diagonal(half)
    table = {
        "JAM": (ident, ident),
        "I": (ibar, ident),
        "II": (-(ibar @ j), ident),
        "III": (-(ibar @ z @ j), ident),
        "IV": (ident, j),
        "V": (ibar, j),
        "VI": (-(ibar @ j), j),
        "VII": (-(ibar @ z @ j), j),
    }
    return table[mid]


@dataclass(frozen=True, eq=False)
class ScaledTransform:
    """Result of one or more doublings.

    ``dense`` is the raw low-complexity matrix T_2N (before any row
    rescaling); ``c_hat = sigma @ dense`` is the orthogonalized transform
    that the quality metrics evaluate.  ``dyadic`` and ``factored`` are
    populated when the seed and every method in the chain are dyadic;
    the 'exact' method and float seeds fall back to dense-only results.
    """

    method: str
    dense: np.ndarray
    sigma: np.ndarray
    c_hat: np.ndarray
    dyadic: DyadicMatrix | None = None
    factored: FactoredTransform | None = None

    @property
    def size(self) -> int:
        return self.dense.shape[0]


@dataclass(frozen=True)
class OrthogonalityCheck:
    """Sufficient conditions for the doubled transform to be orthogonal."""

    cond_i: bool  # seed Gram t t^T is diagonal
    cond_ii: bool  # G-hat G-hat^T is a scalar multiple of I
    cond_iii: bool  # B-hat is a generalized permutation
    orthogonal: bool


def _coerce_seed(t, base_cost):
    """Return (leaf FactoredTransform | None, DyadicMatrix | None, real array)."""
    if isinstance(t, FactoredTransform):
        dyadic = t.dyadic()
        return t, dyadic, dyadic.to_real()
    if isinstance(t, Permutation):
        t = t.to_dyadic()
    if isinstance(t, DyadicMatrix):
        if t.rows != t.cols:
            raise ValueError("seed transform must be square")
        leaf = FactoredTransform(
            t.rows, (Factor.sparse(t),), declared_base=base_cost
        )
        return leaf, t, t.to_real()
    arr = np.asarray(t, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("seed transform must be a square matrix")
    return None, None, arr


def scale(t, method: str, *, base_cost: tuple[int, int] | None = None) -> ScaledTransform:
    """Double ``t`` once: T_2N = P · bd(I, B-hat) · bd(t, t) · bd(I, G-hat) · Bf.

    ``base_cost`` optionally declares the seed's published (adds, shifts)
    so the factored cost model uses fast-algorithm counts instead of a
    naive dense count.  Ignored when ``t`` is already a FactoredTransform.
    """
    mid = normalize_method(method)
    leaf, t_dyadic, t_real = _coerce_seed(t, base_cost)
    n = t_real.shape[0]
    if n < 1:
        raise ValueError("seed transform must be at least 1x1")
    shuffle = perfect_shuffle(n)
    bf = butterfly(n)
    b_hat, g_hat = method_blocks(mid, n)

    dyadic = None
    factored = None
    if t_dyadic is not None and mid != "exact":
        ident = DyadicMatrix.identity(n)
        left = DyadicMatrix.block_diag(ident, b_hat)
        right = DyadicMatrix.block_diag(ident, g_hat)
        dyadic = (
            shuffle.to_dyadic()
            @ left
            @ DyadicMatrix.block_diag(t_dyadic, t_dyadic)
            @ right
            @ bf
        )
        dense = dyadic.to_real()
        # the half-magnitude entry of methods III/VII is absorbed by the
        # final rescaling, so the mixing stage is declared shift-free
        left_declared = (0, 0) if count_dense_dyadic(left) != (0, 0) else None
        factored = FactoredTransform(
            2 * n,
            (
                Factor.permutation(shuffle),
                Factor.sparse(left, declared_cost=left_declared),
                Factor.block_diag((leaf, leaf)),
                Factor.diagonal(right),
                Factor.butterfly(2 * n),
            ),
        )
    else:
        bd = scipy.linalg.block_diag
        eye = np.eye(n)
        dense = (
            shuffle.to_real()
            @ bd(eye, as_real(b_hat))
            @ bd(t_real, t_real)
            @ bd(eye, as_real(g_hat))
            @ bf.to_real()
        )

    sigma, c_hat = orthogonalize(dense)
    return ScaledTransform(
        method=mid,
        dense=dense,
        sigma=sigma,
        c_hat=c_hat,
        dyadic=dyadic,
        factored=factored,
    )


def scale_to(
    t,
    target: int,
    method,
    *,
    base_cost: tuple[int, int] | None = None,
) -> ScaledTransform:
    """Double ``t`` repeatedly until it reaches ``target`` points.

    ``method`` is a single method id (same method at every level) or a
    sequence of ids, one per doubling.  Row-norm orthogonalization applies
    once, to the final size only; intermediate transforms stay raw (and
    dyadic, for dyadic seeds and methods).
    """
    leaf, t_dyadic, t_real = _coerce_seed(t, base_cost)
    n = t_real.shape[0]
    if target < 2 * n:
        raise ValueError(f"target size {target} must be at least twice the seed size {n}")
    levels = 0
    size = n
    while size < target:
        size *= 2
        levels += 1
    if size != target:
        raise ValueError(f"target size {target} is not the seed size times a power of two")

    if isinstance(method, str):
        chain = (normalize_method(method),) * levels
    else:
        chain = tuple(normalize_method(m) for m in method)
        if len(chain) != levels:
            raise ValueError(
                f"{levels} doublings needed to reach {target}, got {len(chain)} methods"
            )

    current = leaf if leaf is not None else t_real
    result = None
    for mid in chain:
        result = scale(current, mid)
        current = result.factored if result.factored is not None else result.dense
    return result


def check_orthogonality(t, method: str) -> OrthogonalityCheck:
    """Evaluate the three sufficient conditions for orthogonal doubling.

    When all three hold, the orthogonalized doubled transform satisfies
    c_hat c_hat^T = I.  They are not necessary: the 'exact' method fails
    (ii) and (iii) yet doubles orthogonal seeds into orthogonal results.
    """
    _, t_dyadic, t_real = _coerce_seed(t, None)
    n = t_real.shape[0]
    b_hat, g_hat = method_blocks(method, n)

    if t_dyadic is not None:
        cond_i = is_diagonal((t_dyadic @ t_dyadic.T).to_real(), tol=0.0)
    else:
        cond_i = is_diagonal(t_real @ t_real.T, tol=1e-10)

    gg = as_real(g_hat) @ as_real(g_hat).T
    cond_ii = is_diagonal(gg, tol=1e-12) and bool(
        np.allclose(np.diag(gg), gg[0, 0], rtol=0.0, atol=1e-12)
    )
    cond_iii = is_generalized_permutation(b_hat)
    return OrthogonalityCheck(
        cond_i=bool(cond_i),
        cond_ii=bool(cond_ii),
        cond_iii=bool(cond_iii),
        orthogonal=bool(cond_i and cond_ii and cond_iii),
    )
