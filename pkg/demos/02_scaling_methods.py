#!/usr/bin/env python3
"""Compare the eight dyadic doubling methods on an exact seed.

Each method doubles the exact 8-point DCT-II and the Frobenius distance
to the exact 16-point transform is reported, then the best family is
chased up to 64 points to show the error growth per level.
"""
import numpy as np

from dctscale.exact import TransformKind, transform_matrix
from dctscale.matkit import frobenius_distance
from dctscale.scaler import DYADIC_METHOD_IDS, scale, scale_to


def error_after_doubling(method: str, seed_size: int) -> float:
    seed = transform_matrix(TransformKind.DCT2, seed_size)
    exact = transform_matrix(TransformKind.DCT2, 2 * seed_size)
    return frobenius_distance(scale(seed, method).c_hat, exact)


def main() -> None:
    print("one doubling of the exact DCT-II seed")
    print(f"{'method':<8} {'8 -> 16':>9} {'16 -> 32':>9} {'32 -> 64':>9}")
    for method in DYADIC_METHOD_IDS:
        errs = [error_after_doubling(method, n) for n in (8, 16, 32)]
        print(f"{method:<8} " + " ".join(f"{e:9.3f}" for e in errs))
    print()
    print("note the pairs: II matches III and VI matches VII exactly after")
    print("row rescaling, and the VI/VII family roughly halves the error.")
    print()

    c8 = transform_matrix(TransformKind.DCT2, 8)
    print("repeated doubling of the same seed, method VI:")
    for target in (16, 32, 64):
        scaled = scale_to(c8, target, "VI")
        exact = transform_matrix(TransformKind.DCT2, target)
        err = frobenius_distance(scaled.c_hat, exact)
        gram = np.max(np.abs(scaled.c_hat @ scaled.c_hat.T - np.eye(target)))
        print(f"  {target:>3}-point: error {err:7.3f}   orthogonality residual {gram:.2e}")
    print()

    print("mixing methods per level also works (JAM first, then VI):")
    mixed = scale_to(c8, 32, ("JAM", "VI"))
    err = frobenius_distance(mixed.c_hat, transform_matrix(TransformKind.DCT2, 32))
    print(f"  32-point error {err:.3f}")


if __name__ == "__main__":
    main()
