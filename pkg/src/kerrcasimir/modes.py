"""Cavity eigenfrequencies in the small-cavity approximation.

With the cavity much smaller than the orbital radius, the comoving-frame
metric is treated as constant across the cavity and the wave equation
separates.  Dirichlet walls along the orbit direction quantize the x
mode number n; the transverse wave numbers k_y, k_z stay continuous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .geometry import (
    CavityGeometry,
    EquatorialOrbit,
    KerrParams,
    equatorial_metric_functions,
    velocity_normalization,
)

__all__ = [
    "ModeIndex",
    "ValidityDiagnostics",
    "eigenfrequency",
    "corrected_eigenfrequency",
    "cavity_validity",
]

# Policy thresholds for the small-cavity guidance flag; not physics.
DEFAULT_ALPHA_L_THRESHOLD = 0.01
DEFAULT_L_OVER_R_THRESHOLD = 0.01


@dataclass(frozen=True)
class ModeIndex:
    """Dirichlet mode number n >= 1 and transverse wave numbers k_y, k_z."""

    n: int
    ky: float = 0.0
    kz: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"mode number must be >= 1, got n={self.n}")


@dataclass(frozen=True)
class ValidityDiagnostics:
    """Dimensionless measures of how well the small-cavity limit holds.

    alpha = (M - r)/r^2 is the coefficient of the neglected first-derivative
    term in the exact wave equation; L/r and ML/r^2 quantify the cavity-size
    assumption.  ``small_cavity_ok`` is a guidance flag, not a hard gate.
    """

    alpha: float
    L_over_r: float
    ML_over_r2: float
    small_cavity_ok: bool


def eigenfrequency(
    mode: ModeIndex,
    params: KerrParams,
    orbit: EquatorialOrbit,
    cavity: CavityGeometry,
) -> float:
    """Mode frequency of the scalar field in the comoving cavity.

    omega_n = (r / (sqrt(Delta) C^2)) * [ (pi n / L)^2
              + (Delta/r^2) C^2 ( (Delta/r^2) k_y^2 + k_z^2 ) ]^(1/2)

    For k_y = k_z = 0 this reduces to pi n / (L_p C) in terms of the proper
    separation.  In flat space with a static observer it is the familiar
    sqrt((pi n / L)^2 + k_y^2 + k_z^2).
    """
    C = velocity_normalization(params, orbit)
    mf = equatorial_metric_functions(params, orbit.r)
    r = orbit.r
    d_over_r2 = mf.Delta / (r * r)
    kx = math.pi * mode.n / cavity.L
    inner = kx * kx + d_over_r2 * C * C * (d_over_r2 * mode.ky**2 + mode.kz**2)
    return (r / (math.sqrt(mf.Delta) * C * C)) * math.sqrt(inner)


def corrected_eigenfrequency(
    mode: ModeIndex,
    params: KerrParams,
    orbit: EquatorialOrbit,
    cavity: CavityGeometry,
) -> complex:
    """Mode frequency keeping the first-derivative term of the exact wave equation.

    Relaxing the constant-metric approximation adds 2 i alpha k_y, with
    alpha = (M - r)/r^2, inside the dispersion bracket:

    omega'_n = (r / (sqrt(Delta) C^2)) * [ (pi n / L)^2
               + (Delta/r^2) C^2 ( (Delta/r^2) k_y^2 + 2 i alpha k_y + k_z^2 ) ]^(1/2)

    The principal-branch square root is used, so omega'_n -> omega_n
    continuously as alpha*k_y -> 0.  The imaginary part is exposed as a
    diagnostic of the approximation only.
    """
    C = velocity_normalization(params, orbit)
    mf = equatorial_metric_functions(params, orbit.r)
    r = orbit.r
    alpha = (params.M - r) / (r * r)
    d_over_r2 = mf.Delta / (r * r)
    kx = math.pi * mode.n / cavity.L
    inner = kx * kx + d_over_r2 * C * C * (
        d_over_r2 * mode.ky**2 + 2j * alpha * mode.ky + mode.kz**2
    )
    return (r / (math.sqrt(mf.Delta) * C * C)) * cmath.sqrt(inner)


def cavity_validity(
    params: KerrParams,
    orbit: EquatorialOrbit,
    cavity: CavityGeometry,
    alpha_L_threshold: float = DEFAULT_ALPHA_L_THRESHOLD,
    L_over_r_threshold: float = DEFAULT_L_OVER_R_THRESHOLD,
) -> ValidityDiagnostics:
    """Quantify the small-cavity approximation at this orbit.

    The guidance flag trips when |alpha|*L >= alpha_L_threshold or
    L/r >= L_over_r_threshold (defaults 0.01 each).
    """
    r = orbit.r
    alpha = (params.M - r) / (r * r)
    L_over_r = cavity.L / r
    ML_over_r2 = params.M * cavity.L / (r * r)
    ok = abs(alpha) * cavity.L < alpha_L_threshold and L_over_r < L_over_r_threshold
    return ValidityDiagnostics(
        alpha=alpha,
        L_over_r=L_over_r,
        ML_over_r2=ML_over_r2,
        small_cavity_ok=ok,
    )
