"""Single-point evaluation, deterministic parameter sweeps and serialization.

Every grid point is evaluated by a pure function, so a sweep can be
parallelized freely: results are collected in grid order and the emitted
bytes are identical for any worker count.  Failed points (forbidden
orbit, inside horizon, naked singularity, series truncation) become
records with an error status and empty numeric fields; no exception
escapes and no NaN/Inf is ever serialized.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .errors import (
    DomainError,
    ForbiddenOrbitError,
    InsideHorizonError,
    NakedSingularityError,
    TruncationError,
)
from .geometry import (
    CavityGeometry,
    EquatorialOrbit,
    KerrParams,
    proper_frame,
)
from .modes import cavity_validity
from .thermal import SeriesControl, casimir_report

__all__ = [
    "PointStatus",
    "PointRequest",
    "SweepSpec",
    "OutputRecord",
    "evaluate_point",
    "run_sweep",
    "records_to_csv",
    "records_to_jsonl",
    "CSV_COLUMNS",
]


class PointStatus(str, Enum):
    OK = "ok"
    FORBIDDEN_ORBIT = "forbidden_orbit"
    INSIDE_HORIZON = "inside_horizon"
    TRUNCATION_ERROR = "truncation_error"
    INVALID_INPUT = "invalid_input"


@dataclass(frozen=True)
class PointRequest:
    """One full configuration: source, orbit, cavity, coordinate temperature."""

    params: KerrParams
    orbit: EquatorialOrbit
    cavity: CavityGeometry
    T: float = 0.0
    control: SeriesControl = field(default_factory=SeriesControl)


class SweepAxis(str, Enum):
    R = "r"
    OMEGA = "Omega"
    T = "T"
    L = "L"
    A = "a"


@dataclass(frozen=True)
class SweepSpec:
    """Grid over one axis of a base request.

    axis is one of r, Omega, T, L, a; count >= 2 points between start and
    stop inclusive, spaced linearly or logarithmically.
    """

    axis: SweepAxis
    start: float
    stop: float
    count: int
    base: PointRequest
    scale: str = "linear"

    def __post_init__(self):
        if self.count < 2:
            raise DomainError(f"sweep count must be >= 2, got {self.count}")
        if not (self.start < self.stop):
            raise DomainError(f"sweep needs start < stop, got [{self.start}, {self.stop}]")
        if self.scale not in ("linear", "log"):
            raise DomainError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.start <= 0.0:
            raise DomainError("log scale requires start > 0")

    def grid(self) -> list[float]:
        if self.scale == "log":
            return list(np.geomspace(self.start, self.stop, self.count))
        return list(np.linspace(self.start, self.stop, self.count))

    def request_at(self, value: float) -> PointRequest:
        """Base request with the axis value substituted; may raise DomainError
        (or one of its subclasses) if the value leaves the valid domain."""
        b = self.base
        if self.axis is SweepAxis.R:
            return replace(b, orbit=replace(b.orbit, r=value))
        if self.axis is SweepAxis.OMEGA:
            return replace(b, orbit=replace(b.orbit, Omega=value))
        if self.axis is SweepAxis.T:
            return replace(b, T=value)
        if self.axis is SweepAxis.L:
            return replace(b, cavity=replace(b.cavity, L=value))
        return replace(b, params=replace(b.params, a=value))

    def evaluate_at(self, value: float) -> OutputRecord:
        """Evaluate one grid value; domain violations at construction time
        (a sweep can leave the black-hole window, for example) become
        invalid_input records rather than exceptions."""
        try:
            req = self.request_at(value)
        except DomainError:
            b = self.base
            inputs = dict(
                M=b.params.M, a=b.params.a, r=b.orbit.r, Omega=b.orbit.Omega,
                L=b.cavity.L, S0=b.cavity.S0, T=b.T,
                rel_tol=b.control.rel_tol, m_max=b.control.m_max,
            )
            inputs[self.axis.value] = value
            return OutputRecord(**inputs, status=PointStatus.INVALID_INPUT)
        return evaluate_point(req)


# Fixed serialization order: inputs, proper frame, report, diagnostics, status.
CSV_COLUMNS = (
    "M", "a", "r", "Omega", "L", "S0", "T", "rel_tol", "m_max",
    "C", "Lp", "Sp", "Vp", "Tp",
    "E0_ren", "DeltaTF_ren", "F_ren", "S_ren", "U_ren", "f_bb",
    "beta_hat", "terms_used", "truncation_estimate",
    "alpha", "L_over_r", "ML_over_r2", "small_cavity_ok",
    "identity_residual", "status",
)


@dataclass(frozen=True)
class OutputRecord:
    """One grid point: inputs, proper frame, thermal report, diagnostics, status.

    Numeric fields are None for points whose status is not 'ok';
    identity_residual is the relative residual of U - (F + Tp*S), recorded
    as an always-on internal consistency diagnostic.
    """

    M: float
    a: float
    r: float
    Omega: float
    L: float
    S0: float
    T: float
    rel_tol: float
    m_max: int
    status: PointStatus
    C: Optional[float] = None
    Lp: Optional[float] = None
    Sp: Optional[float] = None
    Vp: Optional[float] = None
    Tp: Optional[float] = None
    E0_ren: Optional[float] = None
    DeltaTF_ren: Optional[float] = None
    F_ren: Optional[float] = None
    S_ren: Optional[float] = None
    U_ren: Optional[float] = None
    f_bb: Optional[float] = None
    beta_hat: Optional[float] = None
    terms_used: Optional[int] = None
    truncation_estimate: Optional[float] = None
    alpha: Optional[float] = None
    L_over_r: Optional[float] = None
    ML_over_r2: Optional[float] = None
    small_cavity_ok: Optional[bool] = None
    identity_residual: Optional[float] = None


def evaluate_point(req: PointRequest) -> OutputRecord:
    """Evaluate one configuration; never raises, failures become statuses."""
    base = dict(
        M=req.params.M,
        a=req.params.a,
        r=req.orbit.r,
        Omega=req.orbit.Omega,
        L=req.cavity.L,
        S0=req.cavity.S0,
        T=req.T,
        rel_tol=req.control.rel_tol,
        m_max=req.control.m_max,
    )
    try:
        frame = proper_frame(req.params, req.orbit, req.cavity, req.T)
        report = casimir_report(frame, req.params, req.orbit, req.control)
        validity = cavity_validity(req.params, req.orbit, req.cavity)
    except ForbiddenOrbitError:
        return OutputRecord(**base, status=PointStatus.FORBIDDEN_ORBIT)
    except InsideHorizonError:
        return OutputRecord(**base, status=PointStatus.INSIDE_HORIZON)
    except TruncationError:
        return OutputRecord(**base, status=PointStatus.TRUNCATION_ERROR)
    except (NakedSingularityError, DomainError):
        return OutputRecord(**base, status=PointStatus.INVALID_INPUT)

    if frame.Tp > 0.0:
        identity_residual = abs(
            report.U_ren - (report.F_ren + frame.Tp * report.S_ren)
        ) / max(abs(report.U_ren), abs(report.F_ren))
    else:
        identity_residual = 0.0

    return OutputRecord(
        **base,
        status=PointStatus.OK,
        C=frame.C,
        Lp=frame.Lp,
        Sp=frame.Sp,
        Vp=frame.Vp,
        Tp=frame.Tp,
        E0_ren=report.E0_ren,
        DeltaTF_ren=report.DeltaTF_ren,
        F_ren=report.F_ren,
        S_ren=report.S_ren,
        U_ren=report.U_ren,
        f_bb=report.f_bb,
        beta_hat=report.beta_hat,
        terms_used=report.terms_used,
        truncation_estimate=report.truncation_estimate,
        alpha=validity.alpha,
        L_over_r=validity.L_over_r,
        ML_over_r2=validity.ML_over_r2,
        small_cavity_ok=validity.small_cavity_ok,
        identity_residual=identity_residual,
    )


def run_sweep(spec: SweepSpec, parallelism: int = 1) -> list[OutputRecord]:
    """Evaluate the grid, in parallel, returning records in grid order.

    Point evaluation is pure, so the output is independent of the worker
    count; records come back ordered by axis value exactly as generated.
    """
    if parallelism < 1:
        raise DomainError(f"parallelism must be >= 1, got {parallelism}")
    grid = spec.grid()
    if parallelism == 1:
        return [spec.evaluate_at(v) for v in grid]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(spec.evaluate_at, grid))


def _format_cell(value) -> str:
    """Serialize one cell; 17 significant digits for floats, empty for
    None and non-finite values so output never carries NaN/Inf."""
    if value is None:
        return ""
    if isinstance(value, PointStatus):
        return value.value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return ""
        return f"{value:.17g}"
    return str(value)


def records_to_csv(records: Iterable[OutputRecord]) -> str:
    """Fixed-column CSV with header; byte-stable for identical inputs."""
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        lines.append(",".join(_format_cell(getattr(rec, col)) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def records_to_jsonl(records: Iterable[OutputRecord]) -> str:
    """One JSON object per line, same fields and formatting rules as the CSV."""
    lines = []
    for rec in records:
        obj = {}
        for col in CSV_COLUMNS:
            value = getattr(rec, col)
            if value is None:
                obj[col] = None
            elif isinstance(value, PointStatus):
                obj[col] = value.value
            elif isinstance(value, float):
                obj[col] = None if not math.isfinite(value) else float(f"{value:.17g}")
            else:
                obj[col] = value
        lines.append(json.dumps(obj, separators=(",", ":"), sort_keys=False))
    return "\n".join(lines) + "\n"
