"""Renormalized thermal Casimir quantities from the resummed hyperbolic series.

All quantities are expressed in proper variables of the comoving observer:
plate separation Lp, plate area Sp, volume Vp = Sp*Lp and proper
temperature Tp, with k_B = 1.  The dimensionless series parameter is
beta_hat = 1/(2*Lp*Tp); small beta_hat is the high-temperature (or large
separation) regime, large beta_hat the low-temperature one.

The thermal correction to the free energy resums to a single sum over m of

    coth(pi m beta_hat)/(m beta_hat)^3 + pi/((m beta_hat)^2 sinh^2(pi m beta_hat)),

and the renormalization subtracts the quartic (black-body) and cubic
(surface) temperature terms of its high-temperature expansion.  Numerically
every sum here is evaluated through the split coth(x) = 1 + ce(x) with
ce(x) = 2/(e^(2x) - 1) and 1/sinh^2(x) = ce(x)(ce(x) + 2): the ce/se pieces
decay like e^(-2 pi m beta_hat) and are summed term by term, while the
residual power pieces (zeta(3) tails and the subtraction constants) are
added in closed form.  This keeps every evaluation free of cancellation at
large beta_hat, where the unrenormalized correction is exponentially small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, TruncationError
from .geometry import (
    EquatorialOrbit,
    KerrParams,
    ProperFrame,
    _normalization_bracket,
)

__all__ = [
    "SeriesControl",
    "BetaHat",
    "CasimirReport",
    "ZETA3",
    "flat_casimir_density",
    "vacuum_energy",
    "beta_hat",
    "thermal_correction_exact",
    "thermal_correction_resummed_form",
    "renorm_thermal_correction",
    "blackbody_density",
    "total_free_energy",
    "entropy",
    "internal_energy",
    "casimir_report",
]

# zeta(3) enters the power tails; zeta(4) only ever appears as pi^4/90.
ZETA3 = 1.2020569031595942854

# Beyond x = 350 both e^(-2x) pieces underflow and every summand is an
# exact floating-point zero, so the sums terminate there unconditionally.
_X_CUTOFF = 350.0


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the infinite sums.

    The closed-form sums run until their exponentially decaying terms
    underflow (to exact zero or below abs_tol), so the achieved relative
    truncation is below any admissible rel_tol; rel_tol is the guaranteed
    bound recorded with results and the stop criterion for oracle-style
    sums.  Exceeding m_max raises TruncationError; n_max bounds the mode
    index in oracle sums.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    m_max: int = 10**6
    n_max: int = 10**5

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.m_max < 1:
            raise DomainError(f"m_max must be >= 1, got {self.m_max}")


@dataclass(frozen=True)
class BetaHat:
    """Dimensionless inverse proper temperature, 1/(2*Lp*Tp).

    Infinite at exactly zero temperature; all thermal kernels accept that
    and reduce to their zero-temperature limits.
    """

    value: float


@dataclass(frozen=True)
class CasimirReport:
    """Full set of renormalized thermal quantities plus series diagnostics.

    F_ren = E0_ren + DeltaTF_ren holds by construction and
    U_ren = F_ren + Tp*S_ren is the Legendre identity the closed forms
    satisfy.  terms_used and truncation_estimate describe the free-energy
    series evaluation; beta_hat is infinite on the zero-temperature path.
    """

    E0_ren: float
    DeltaTF_ren: float
    F_ren: float
    S_ren: float
    U_ren: float
    f_bb: float
    beta_hat: float
    terms_used: int
    truncation_estimate: float


def flat_casimir_density(Lp: float) -> float:
    """Vacuum Casimir energy density -pi^2/(1440 Lp^4) of a flat Dirichlet slab."""
    if not (Lp > 0.0):
        raise DomainError(f"proper separation must be > 0, got Lp={Lp}")
    return -math.pi**2 / (1440.0 * Lp**4)


def vacuum_energy(frame: ProperFrame, params: KerrParams, orbit: EquatorialOrbit) -> float:
    """Renormalized zero-temperature Casimir energy of the comoving cavity.

    E0_ren = Vp * eps0(Lp) * [1 - (A^2/(r^4 Delta)) (Omega - omega_d)^2]^(1/2)

    with eps0 the flat-space density at the proper separation.  The bracket
    is the squared form consistent with the observer normalization, so the
    flat rotating limit carries the expected factor sqrt(1 - r^2 Omega^2).
    """
    bracket, _ = _normalization_bracket(params, orbit)
    return frame.Vp * flat_casimir_density(frame.Lp) * math.sqrt(bracket)


def beta_hat(frame: ProperFrame) -> BetaHat:
    """Series parameter 1/(2*Lp*Tp); infinite when the proper temperature is zero."""
    if frame.Tp < 0.0:
        raise DomainError(f"proper temperature must be >= 0, got Tp={frame.Tp}")
    if frame.Tp == 0.0:
        return BetaHat(value=math.inf)
    return BetaHat(value=1.0 / (2.0 * frame.Lp * frame.Tp))


def _proper_temperature(frame: ProperFrame, bh: BetaHat) -> float:
    """Proper temperature implied by beta_hat; zero when beta_hat is infinite."""
    if math.isinf(bh.value):
        return 0.0
    return 1.0 / (2.0 * frame.Lp * bh.value)


def _sum_exponential(
    bh: BetaHat,
    term: Callable[[int, float, float], float],
    ctl: SeriesControl,
) -> tuple[float, int, float]:
    """Sum term(m, ce, se) over m >= 1, ce = coth(pi m bh) - 1, se = 1/sinh^2.

    Every summand is positive and decays like e^(-2 pi m bh).  The loop
    runs until the terms underflow to exact zeros and the collected terms
    are combined with exact (fsum) accumulation, so the returned value is
    correctly rounded and its absolute truncation error is zero; this
    matters because downstream combinations cancel these sums against
    large power terms at small bh.  The achieved relative truncation is
    therefore below any admissible rel_tol.  Hitting m_max first raises
    TruncationError.  Returns (sum, terms, omitted-tail bound).
    """
    b = bh.value
    if b <= 0.0:
        raise DomainError(f"beta_hat must be > 0, got {b}")
    terms: list[float] = []
    t = 0.0
    for m in range(1, ctl.m_max + 1):
        x = math.pi * m * b
        if x > _X_CUTOFF:
            return math.fsum(terms), len(terms), 0.0
        ce = 2.0 / math.expm1(2.0 * x)
        se = ce * (ce + 2.0)
        t = term(m, ce, se)
        if t == 0.0 or t < ctl.abs_tol:
            return math.fsum(terms), len(terms), 0.0
        terms.append(t)
    ratio = math.exp(-2.0 * math.pi * b)
    partial = math.fsum(terms)
    raise TruncationError(
        f"hyperbolic series not converged after m_max={ctl.m_max} terms "
        f"at beta_hat={b}",
        partial_sum=partial,
        tail_estimate=t * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf,
        terms_used=ctl.m_max,
    )


def _free_energy_exp_sum(bh: BetaHat, ctl: SeriesControl) -> tuple[float, int, float]:
    """Exponential part of the free-energy sum: ce/(m bh)^3 + pi se/(m bh)^2."""
    if math.isinf(bh.value):
        return 0.0, 0, 0.0
    b = bh.value

    def term(m: int, ce: float, se: float) -> float:
        mb = m * b
        return ce / mb**3 + math.pi * se / mb**2

    return _sum_exponential(bh, term, ctl)


def thermal_correction_exact(frame: ProperFrame, bh: BetaHat, ctl: SeriesControl = SeriesControl()) -> float:
    """Unrenormalized thermal correction to the cavity free energy.

    Exact resummed value

        -(Sp/(32 pi Lp^3)) * sum_m [coth(pi m bh)/(m bh)^3
                                    + pi/((m bh)^2 sinh^2(pi m bh))]
        + zeta(3) Sp / (32 pi (Lp bh)^3);

    the zeta(3) term cancels the power tail of the coth sum exactly, so the
    whole expression equals -(Sp/(32 pi Lp^3)) times the exponentially
    small remainder and vanishes like e^(-2 pi bh) at low temperature.
    """
    e_sum, _, _ = _free_energy_exp_sum(bh, ctl)
    return -frame.Sp / (32.0 * math.pi * frame.Lp**3) * e_sum


def thermal_correction_resummed_form(
    frame: ProperFrame, bh: BetaHat, ctl: SeriesControl = SeriesControl()
) -> float:
    """Algebraically equivalent single-sum form of the thermal correction.

    -(Sp/(16 pi Lp^3)) * sum_m [(2 pi m bh + 1) e^(2 pi m bh) - 1]
                               / [(e^(2 pi m bh) - 1)^2 (m bh)^3]

    evaluated through decaying exponentials for overflow safety.  Kept as an
    independent representation for cross-checks against the hyperbolic form.
    """
    if math.isinf(bh.value):
        return -0.0
    b = bh.value

    def term(m: int, ce: float, se: float) -> float:
        # [(z+1)e^z - 1]/(e^z - 1)^2 = ((z+1) - e^(-z)) e^(-z)/(1 - e^(-z))^2
        z = 2.0 * math.pi * m * b
        emz = math.exp(-z)
        return ((z + 1.0) - emz) * emz / (1.0 - emz) ** 2 / (m * b) ** 3

    total, _, _ = _sum_exponential(bh, term, ctl)
    return -frame.Sp / (16.0 * math.pi * frame.Lp**3) * total


def blackbody_density(Tp: float) -> float:
    """Free-energy density -pi^2 Tp^4/90 of scalar black-body radiation."""
    if Tp < 0.0:
        raise DomainError(f"proper temperature must be >= 0, got Tp={Tp}")
    return -math.pi**2 * Tp**4 / 90.0


def renorm_thermal_correction(
    frame: ProperFrame, bh: BetaHat, ctl: SeriesControl = SeriesControl()
) -> float:
    """Renormalized thermal correction to the Casimir free energy.

    The full hyperbolic sum (its exponential part plus the zeta(3)/bh^3
    power tail) with the black-body term Vp pi^2 Tp^4/90 added back after
    the quartic and cubic high-temperature terms have been subtracted.
    Vanishes at zero temperature; at high temperature it decreases
    linearly, approaching -zeta(3) Sp Tp/(16 pi Lp^2) + pi^2 Sp/(1440 Lp^3)
    (the classical term is not among the subtracted ones).
    """
    Tp = _proper_temperature(frame, bh)
    e_sum, _, _ = _free_energy_exp_sum(bh, ctl)
    power_tail = ZETA3 / bh.value**3 if not math.isinf(bh.value) else 0.0
    prefactor = -frame.Sp / (32.0 * math.pi * frame.Lp**3)
    return math.fsum(
        (prefactor * e_sum, prefactor * power_tail, -frame.Vp * blackbody_density(Tp))
    )


def total_free_energy(
    frame: ProperFrame,
    params: KerrParams,
    orbit: EquatorialOrbit,
    bh: BetaHat,
    ctl: SeriesControl = SeriesControl(),
) -> float:
    """Total renormalized Casimir free energy E0_ren + renormalized correction."""
    return vacuum_energy(frame, params, orbit) + renorm_thermal_correction(frame, bh, ctl)


def entropy(frame: ProperFrame, bh: BetaHat, ctl: SeriesControl = SeriesControl()) -> float:
    """Renormalized Casimir entropy -dF_ren/dTp in closed form.

    (3 Sp/(16 pi Lp^2)) * { sum_m [coth(pi m bh)/(m^3 bh^2)
                                   + pi/(m^2 bh sinh^2(pi m bh))
                                   + 2 pi^2 coth(pi m bh)/(3 m sinh^2(pi m bh))]
                            - 4 pi^3/(135 bh^3) }

    with k_B = 1.  Vanishes at zero temperature (third law) and is positive
    throughout the low-temperature regime.
    """
    if math.isinf(bh.value):
        return 0.0
    b = bh.value

    def term(m: int, ce: float, se: float) -> float:
        return (
            ce / (m**3 * b**2)
            + math.pi * se / (m**2 * b)
            + (2.0 * math.pi**2 / 3.0) * (1.0 + ce) * se / m
        )

    e_sum, _, _ = _sum_exponential(bh, term, ctl)
    braces = math.fsum((e_sum, ZETA3 / b**2, -4.0 * math.pi**3 / (135.0 * b**3)))
    return 3.0 * frame.Sp / (16.0 * math.pi * frame.Lp**2) * braces


def internal_energy(
    frame: ProperFrame,
    params: KerrParams,
    orbit: EquatorialOrbit,
    bh: BetaHat,
    ctl: SeriesControl = SeriesControl(),
) -> float:
    """Renormalized internal energy -Tp^2 d(F_ren/Tp)/dTp in closed form.

    E0_ren + (Sp/(16 pi Lp^3)) * { sum_m [coth(pi m bh)/(m bh)^3
                                          + pi/((m bh)^2 sinh^2(pi m bh))
                                          + pi^2 coth(pi m bh)/(m bh sinh^2(pi m bh))]
                                   - pi^3/(30 bh^4) }

    Reduces to E0_ren at zero temperature.
    """
    E0 = vacuum_energy(frame, params, orbit)
    if math.isinf(bh.value):
        return E0
    b = bh.value

    def term(m: int, ce: float, se: float) -> float:
        mb = m * b
        return ce / mb**3 + math.pi * se / mb**2 + math.pi**2 * (1.0 + ce) * se / mb

    e_sum, _, _ = _sum_exponential(bh, term, ctl)
    braces = math.fsum((e_sum, ZETA3 / b**3, -math.pi**3 / (30.0 * b**4)))
    return E0 + frame.Sp / (16.0 * math.pi * frame.Lp**3) * braces


def casimir_report(
    frame: ProperFrame,
    params: KerrParams,
    orbit: EquatorialOrbit,
    ctl: SeriesControl = SeriesControl(),
) -> CasimirReport:
    """Assemble every renormalized thermal quantity for one configuration.

    Uses the proper temperature stored in the frame; Tp = 0 takes the exact
    zero-temperature path (F = U = E0, S = 0, no series evaluation).
    The convergence diagnostics describe the free-energy series.
    """
    bh = beta_hat(frame)
    E0 = vacuum_energy(frame, params, orbit)
    Tp = frame.Tp
    f_bb = blackbody_density(Tp)

    e_sum, terms_used, tail = _free_energy_exp_sum(bh, ctl)
    prefactor = -frame.Sp / (32.0 * math.pi * frame.Lp**3)
    power_tail = ZETA3 / bh.value**3 if not math.isinf(bh.value) else 0.0
    DeltaTF_ren = math.fsum(
        (prefactor * e_sum, prefactor * power_tail, -frame.Vp * f_bb)
    )
    F_ren = E0 + DeltaTF_ren
    S_ren = entropy(frame, bh, ctl)
    U_ren = internal_energy(frame, params, orbit, bh, ctl)

    return CasimirReport(
        E0_ren=E0,
        DeltaTF_ren=DeltaTF_ren,
        F_ren=F_ren,
        S_ren=S_ren,
        U_ren=U_ren,
        f_bb=f_bb,
        beta_hat=bh.value,
        terms_used=terms_used,
        truncation_estimate=abs(prefactor) * tail,
    )
