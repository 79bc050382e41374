"""Landau-type speed bounds for curves on the sphere and in R^d."""

import json
import math

from ._core import (
    AuxFunction,
    Curve,
    HypothesisViolation,
    IngestionError,
    InvalidCurve,
    InvalidInput,
    ManifoldLandauError,
    NumericFailure,
    OutOfDomain,
    Phase,
    Singularity,
    SpecError,
    TimeWindow,
    __version__,
    covariant_accel,
    geodesic,
    landau_constant,
    natural_window,
    project_tangent,
    time_series,
)
from . import _core

_SPECIAL = {"nan": math.nan, "inf": math.inf, "-inf": -math.inf}


def _decode(text):
    def fix(v):
        if isinstance(v, str) and v in _SPECIAL:
            return _SPECIAL[v]
        if isinstance(v, list):
            return [fix(x) for x in v]
        if isinstance(v, dict):
            return {k: fix(x) for k, x in v.items()}
        return v

    return fix(json.loads(text))


def sup_norm(curve, window, quantity="speed"):
    """Sup over the window of 'speed' or 'covariant_accel'."""
    return _decode(_core._sup_norm(curve, window, quantity))


def lambda_min(aux, curve, window):
    return _decode(_core._lambda_min(aux, curve, window))


def theorem1_report(curve, aux, window):
    return _decode(_core._theorem1_report(curve, aux, window))


def theorem2_report(curve, window):
    """Sphere bound with the Chebyshev centre of the window samples as e."""
    return _decode(_core._theorem2_report(curve, window))


def proof_diagnostics(curve, aux, window):
    return _decode(_core._proof_diagnostics(curve, aux, window))


def classical_landau_check(curve, window):
    return _decode(_core._classical_landau_check(curve, window))


def chebyshev_center(points):
    return _decode(_core._chebyshev_center([list(p) for p in points]))


def chebyshev_grid_oracle(points, subdivisions):
    return _decode(_core._chebyshev_grid_oracle([list(p) for p in points], subdivisions))


def sharpness_probe(family, budget, seed=42, samples=4001):
    """family is 'latitude', 'great_circle' or 'compound'."""
    return _decode(_core._sharpness_probe(family, budget, seed, samples))


__all__ = [
    "AuxFunction",
    "Curve",
    "HypothesisViolation",
    "IngestionError",
    "InvalidCurve",
    "InvalidInput",
    "ManifoldLandauError",
    "NumericFailure",
    "OutOfDomain",
    "Phase",
    "Singularity",
    "SpecError",
    "TimeWindow",
    "chebyshev_center",
    "chebyshev_grid_oracle",
    "classical_landau_check",
    "covariant_accel",
    "geodesic",
    "lambda_min",
    "landau_constant",
    "natural_window",
    "proof_diagnostics",
    "project_tangent",
    "sharpness_probe",
    "sup_norm",
    "theorem1_report",
    "theorem2_report",
    "time_series",
]
