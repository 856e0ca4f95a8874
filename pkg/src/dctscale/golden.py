"""Bundled reference values for the reproduction tables.

Published figures that the analysis module recomputes and diffs against:
the scaling-error table for exact seeds, the cross-catalog regression
statistics, the per-method break-points, and ten per-approximation metric
tables.  These are data, never a source of truth for any computation.

Known discrepancies (kept verbatim; the reproduction report flags them):

* break-point, Method III: the reference prints 1.664, but Methods II and
  III produce identical orthogonalized transforms, hence identical fits
  and an identical break-point (0.58).  The printed value repeats the
  Method IV cell.
* break-point, Method IV: the reference prints 1.664, which matches the
  formula evaluated on the *printed* three-decimal regression
  coefficients, (3.833 - 3.555)/(0.431 - 0.264) = 1.6647.  Full-precision
  coefficients give 1.6471, and the IV coefficients round to 0.432/3.556
  rather than the printed 0.431/3.555; the division by a small slope gap
  amplifies those last-digit differences beyond the table tolerance.
"""
from __future__ import annotations

METHOD_ROWS: tuple[str, ...] = ("JAM", "I", "II", "III", "IV", "V", "VI", "VII")

APPROX_ORDER: tuple[str, ...] = (
    "bas1",
    "bas2",
    "bas3",
    "bas4",
    "rdct",
    "mrdct",
    "abdct",
    "sdct",
    "lodct",
    "imrdct",
)

TABLE_IDS: tuple[str, ...] = (
    "scaling-families",
    "linear-regression",
    "break-point",
) + tuple(f"metrics-{a}" for a in APPROX_ORDER)

# -- scaling with exact seeds: ||C_hat_2N - C_2N||_F per method and seed size N
SCALING_FAMILIES: dict[str, tuple[float, float, float]] = {
    "JAM": (3.994, 5.653, 7.997),
    "I": (3.826, 5.533, 7.912),
    "II": (4.001, 5.657, 8.000),
    "III": (4.001, 5.657, 8.000),
    "IV": (3.826, 5.533, 7.912),
    "V": (4.006, 5.661, 8.003),
    "VI": (1.954, 3.033, 4.515),
    "VII": (1.954, 3.033, 4.515),
}
SCALING_FAMILY_SEED_SIZES: tuple[int, ...] = (8, 16, 32)
SCALING_FAMILIES_TOL = 0.001

# -- least-squares fit of the 16-point error against the 8-point error
#    over the ten catalog approximations: (slope, intercept, chi2, rmse)
REGRESSION_TABLE: dict[str, tuple[float, float, float, float]] = {
    "JAM": (0.264, 3.833, 7.979e-2, 9.987e-2),
    "I": (0.426, 3.561, 3.599e-2, 6.708e-2),
    "II": (0.413, 3.746, 3.177e-2, 6.243e-2),
    "III": (0.413, 3.746, 3.177e-2, 6.243e-2),
    "IV": (0.431, 3.555, 3.636e-2, 6.742e-2),
    "V": (0.562, 3.636, 5.220e-2, 8.077e-2),
    "VI": (1.045, 1.319, 1.531e-1, 1.383e-1),
    "VII": (1.045, 1.319, 1.531e-1, 1.383e-1),
}
REGRESSION_COEFF_TOL = 0.01  # absolute, on slope and intercept
REGRESSION_STAT_RELTOL = 0.10  # relative, on chi2 and rmse

# -- largest 8-point error for which each method beats the baseline line
BREAK_POINT_TABLE: dict[str, float] = {
    "I": 1.679,
    "II": 0.584,
    "III": 1.664,
    "IV": 1.664,
    "V": 0.661,
    "VI": 3.219,
    "VII": 3.219,
}
BREAK_POINT_TOL = 0.01

# -- per-approximation metric tables at 16 points:
#    (d, epsilon, mse, coding gain, efficiency, adds, shifts) per method
METRIC_TABLES: dict[str, dict[str, tuple[float, float, float, float, float, int, int]]] = {
    "bas1": {
        "JAM": (0.00, 14.62, 0.14, 8.16, 70.98, 48, 0),
        "I": (0.00, 15.04, 0.34, 8.16, 70.98, 48, 0),
        "II": (0.00, 15.79, 0.35, 8.16, 70.98, 48, 0),
        "III": (0.00, 15.79, 0.35, 8.16, 70.98, 48, 0),
        "IV": (0.00, 15.13, 0.36, 7.16, 57.36, 48, 0),
        "V": (0.00, 16.62, 0.42, 7.16, 57.36, 48, 0),
        "VI": (0.00, 13.88, 0.40, 7.16, 57.36, 48, 0),
        "VII": (0.00, 13.88, 0.40, 7.16, 57.36, 48, 0),
    },
    "bas2": {
        "JAM": (0.00, 14.58, 0.14, 8.37, 71.83, 52, 4),
        "I": (0.00, 15.19, 0.35, 8.37, 71.83, 52, 4),
        "II": (0.00, 15.61, 0.36, 8.37, 71.83, 52, 4),
        "III": (0.00, 15.61, 0.36, 8.37, 71.83, 52, 4),
        "IV": (0.00, 15.23, 0.37, 7.48, 58.83, 52, 4),
        "V": (0.00, 16.67, 0.44, 7.48, 58.83, 52, 4),
        "VI": (0.00, 13.84, 0.42, 7.48, 58.83, 52, 4),
        "VII": (0.00, 13.84, 0.42, 7.48, 58.83, 52, 4),
    },
    "bas3": {
        "JAM": (0.00, 14.67, 0.14, 8.16, 70.80, 52, 0),
        "I": (0.00, 15.36, 0.36, 8.16, 70.80, 52, 0),
        "II": (0.00, 15.57, 0.37, 8.16, 70.80, 52, 0),
        "III": (0.00, 15.57, 0.37, 8.16, 70.80, 52, 0),
        "IV": (0.00, 15.36, 0.37, 7.41, 59.95, 52, 0),
        "V": (0.00, 16.70, 0.44, 7.41, 59.95, 52, 0),
        "VI": (0.00, 13.94, 0.42, 7.41, 59.95, 52, 0),
        "VII": (0.00, 13.94, 0.42, 7.41, 59.95, 52, 0),
    },
    "bas4": {
        "JAM": (0.00, 13.18, 0.13, 8.19, 70.65, 64, 0),
        "I": (0.00, 12.65, 0.34, 8.19, 70.65, 64, 0),
        "II": (0.00, 13.18, 0.36, 8.19, 70.65, 64, 0),
        "III": (0.00, 13.18, 0.36, 8.19, 70.65, 64, 0),
        "IV": (0.00, 12.65, 0.34, 8.19, 70.65, 64, 0),
        "V": (0.00, 13.18, 0.13, 8.19, 70.65, 64, 0),
        "VI": (0.00, 7.40, 0.06, 8.19, 70.65, 64, 0),
        "VII": (0.00, 7.40, 0.06, 8.19, 70.65, 64, 0),
    },
    "rdct": {
        "JAM": (0.00, 12.93, 0.12, 8.43, 72.23, 60, 0),
        "I": (0.00, 12.25, 0.31, 8.43, 72.23, 60, 0),
        "II": (0.00, 12.82, 0.30, 8.43, 72.23, 60, 0),
        "III": (0.00, 12.82, 0.30, 8.43, 72.23, 60, 0),
        "IV": (0.00, 12.25, 0.34, 7.50, 59.87, 60, 0),
        "V": (0.00, 12.65, 0.14, 7.50, 59.87, 60, 0),
        "VI": (0.00, 6.80, 0.07, 7.50, 59.87, 60, 0),
        "VII": (0.00, 6.80, 0.07, 7.50, 59.87, 60, 0),
    },
    "mrdct": {
        "JAM": (0.00, 12.77, 0.13, 7.58, 66.07, 44, 0),
        "I": (0.00, 13.19, 0.34, 7.58, 66.07, 44, 0),
        "II": (0.00, 13.72, 0.34, 7.58, 66.07, 44, 0),
        "III": (0.00, 13.72, 0.34, 7.58, 66.07, 44, 0),
        "IV": (0.00, 13.19, 0.36, 6.48, 52.20, 44, 0),
        "V": (0.00, 14.39, 0.25, 6.48, 52.20, 44, 0),
        "VI": (0.00, 9.67, 0.18, 6.48, 52.20, 44, 0),
        "VII": (0.00, 9.67, 0.18, 6.48, 52.20, 44, 0),
    },
    "abdct": {
        "JAM": (0.00, 12.63, 0.12, 8.88, 76.81, 64, 12),
        "I": (0.00, 12.21, 0.31, 8.88, 76.81, 64, 12),
        "II": (0.00, 12.75, 0.32, 8.88, 76.81, 64, 12),
        "III": (0.00, 12.75, 0.32, 8.88, 76.81, 64, 12),
        "IV": (0.00, 12.21, 0.34, 8.18, 63.79, 64, 12),
        "V": (0.00, 12.81, 0.14, 8.18, 63.79, 64, 12),
        "VI": (0.00, 6.56, 0.07, 8.18, 63.79, 64, 12),
        "VII": (0.00, 6.56, 0.07, 8.18, 63.79, 64, 12),
    },
    "sdct": {
        "JAM": (0.20, 12.83, 0.13, 6.27, 68.82, 64, 0),
        "I": (0.20, 12.42, 0.34, 6.27, 68.82, 64, 0),
        "II": (0.20, 12.96, 0.36, 6.27, 68.82, 64, 0),
        "III": (0.20, 12.96, 0.36, 6.27, 68.82, 64, 0),
        "IV": (0.20, 12.42, 0.38, 5.57, 58.11, 64, 0),
        "V": (0.20, 13.12, 0.16, 5.57, 58.11, 64, 0),
        "VI": (0.20, 7.29, 0.09, 5.57, 58.11, 64, 0),
        "VII": (0.20, 7.29, 0.09, 5.57, 58.11, 64, 0),
    },
    "lodct": {
        "JAM": (0.00, 12.67, 0.12, 8.64, 73.11, 64, 4),
        "I": (0.00, 12.15, 0.30, 8.64, 73.11, 64, 4),
        "II": (0.00, 12.69, 0.31, 8.64, 73.11, 64, 4),
        "III": (0.00, 12.69, 0.31, 8.64, 73.11, 64, 4),
        "IV": (0.00, 12.15, 0.34, 7.83, 61.49, 64, 4),
        "V": (0.00, 12.68, 0.14, 7.83, 61.49, 64, 4),
        "VI": (0.00, 6.30, 0.07, 7.83, 61.49, 64, 4),
        "VII": (0.00, 6.30, 0.07, 7.83, 61.49, 64, 4),
    },
    "imrdct": {
        "JAM": (0.00, 13.21, 0.15, 7.58, 66.07, 44, 0),
        "I": (0.00, 13.51, 0.39, 7.58, 66.07, 44, 0),
        "II": (0.00, 14.03, 0.39, 7.58, 66.07, 44, 0),
        "III": (0.00, 14.03, 0.39, 7.58, 66.07, 44, 0),
        "IV": (0.00, 13.51, 0.37, 6.48, 52.20, 44, 0),
        "V": (0.00, 14.58, 0.26, 6.48, 52.20, 44, 0),
        "VI": (0.00, 9.94, 0.20, 6.48, 52.20, 44, 0),
        "VII": (0.00, 9.94, 0.20, 6.48, 52.20, 44, 0),
    },
}

METRIC_COLUMNS: tuple[str, ...] = ("d", "eps", "mse", "cg", "eta", "adds", "shifts")
METRIC_TOLS: dict[str, float] = {
    "d": 0.005,
    "eps": 0.05,
    "mse": 0.01,
    "cg": 0.01,
    "eta": 0.05,
    "adds": 0.0,
    "shifts": 0.0,
}

# -- claimed range of the literature 8-point errors
ERROR_RANGE_CLAIM: tuple[float, float] = (1.72, 2.68)
ERROR_RANGE_TOL = 0.005
