"""DC bias solution of the voltage-divider common-emitter stage.

The divider (r_b1 from the supply, r_b2 to ground) is Thevenin-reduced and
the base node balanced against the exponential base current:

    (v_th - v_be) / r_th = i_b(v_be)

A safeguarded Newton iteration on v_be does the work: a Newton step is
accepted only while it stays inside the sign-change bracket and keeps
cutting the residual, otherwise the bracket is bisected. Plain Newton is
not enough here; descending the exponential it gains only one thermal
voltage per step.
"""

import math
from dataclasses import dataclass

from .devices import (
    EXP_ARG_CAP,
    BjtParams,
    active_region_currents,
    beta_from_alpha,
    thermal_voltage,
)

RESIDUAL_TOL = 1e-12   # amperes, base-node Kirchhoff residual
STEP_TOL = 1e-12       # volts; polishes v_be past the residual window
MAX_ITERATIONS = 100
INITIAL_GUESS = 0.6    # volts, generic forward junction drop


class SolverError(RuntimeError):
    """Bias-point iteration failed to converge."""


@dataclass(frozen=True)
class AmplifierConfig:
    """Supply, bias divider, load and the device of one CE stage."""

    v_cc: float
    r_b1: float
    r_b2: float
    r_l: float
    device: BjtParams

    def __post_init__(self):
        if self.v_cc <= 0:
            raise ValueError(f"v_cc must be > 0, got {self.v_cc}")
        for name in ("r_b1", "r_b2", "r_l"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")

    def thevenin(self):
        """(v_th, r_th) of the base divider."""
        total = self.r_b1 + self.r_b2
        return self.v_cc * self.r_b2 / total, self.r_b1 * self.r_b2 / total


@dataclass(frozen=True)
class OperatingPoint:
    """Solved DC state; `saturated` flags v_ce <= 0 (device out of the active region)."""

    v_be: float
    i_b: float
    i_c: float
    i_e: float
    v_ce: float
    saturated: bool = False

    def __post_init__(self):
        scale = max(abs(self.i_e), abs(self.i_b), abs(self.i_c))
        if abs(self.i_e - (self.i_b + self.i_c)) > 1e-12 * scale:
            raise ValueError(
                f"current conservation violated: i_e={self.i_e} != "
                f"i_b + i_c = {self.i_b + self.i_c}"
            )


@dataclass(frozen=True)
class SmallSignalParams:
    """Input resistance, output conductance and slope at an operating point."""

    r_in: float
    g_out: float
    slope_s: float

    def __post_init__(self):
        if self.r_in <= 0:
            raise ValueError(f"r_in must be > 0, got {self.r_in}")
        if self.slope_s <= 0:
            raise ValueError(f"slope_s must be > 0, got {self.slope_s}")
        if self.g_out < 0:
            raise ValueError(f"g_out must be >= 0, got {self.g_out}")


def solve_operating_point(
    config: AmplifierConfig,
    residual_tol: float = RESIDUAL_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> OperatingPoint:
    """Solve the base-node balance and return the full DC state.

    Raises SolverError when the residual cannot be brought under
    `residual_tol` within `max_iterations`, or when the solution would sit
    past the device's exponential overflow cap.
    """
    dev = config.device
    vt = thermal_voltage(dev.temperature)
    v_th, r_th = config.thevenin()

    def i_b_of(v):
        return active_region_currents(dev, v).i_b

    def residual(v):
        return (v_th - v) / r_th - i_b_of(v)

    # One thermal voltage of margin keeps every evaluation below the cap.
    lo = 0.0
    hi = min(config.v_cc, vt * (EXP_ARG_CAP - 1.0))
    if residual(hi) > 0.0:
        raise SolverError(
            f"no bias solution below the exponential overflow cap "
            f"(residual at v_be={hi:g} V is still positive)"
        )

    v = INITIAL_GUESS if lo < INITIAL_GUESS < hi else 0.5 * (lo + hi)
    f = residual(v)
    step = math.inf
    for _ in range(max_iterations):
        if abs(f) < residual_tol and (f == 0.0 or abs(step) < STEP_TOL):
            return _operating_point(config, v)
        if f > 0.0:
            lo = v
        else:
            hi = v
        # d(residual)/dv, strictly negative for any valid config
        di_b = (1.0 - dev.alpha_n) * dev.i_es * math.exp(v / vt) / vt
        candidate = v - f / (-1.0 / r_th - di_b)
        if lo < candidate < hi:
            f_candidate = residual(candidate)
            if abs(f_candidate) <= 0.25 * abs(f):
                step, v, f = candidate - v, candidate, f_candidate
                continue
            # Newton is crawling along the exponential; keep the bracket
            # shrinkage it bought and bisect instead.
            if f_candidate > 0.0:
                lo = candidate
            else:
                hi = candidate
        mid = 0.5 * (lo + hi)
        step, v, f = mid - v, mid, residual(mid)
    raise SolverError(
        f"bias solve did not converge in {max_iterations} iterations "
        f"(last residual {f:.3e} A at v_be={v:.6f} V)"
    )


def _operating_point(config: AmplifierConfig, v_be: float) -> OperatingPoint:
    currents = active_region_currents(config.device, v_be)
    v_ce = config.v_cc - currents.i_c * config.r_l
    return OperatingPoint(
        v_be=v_be,
        i_b=currents.i_b,
        i_c=currents.i_c,
        i_e=currents.i_e,
        v_ce=v_ce,
        saturated=v_ce <= 0.0,
    )


def small_signal_params(device: BjtParams, op: OperatingPoint) -> SmallSignalParams:
    """Analytic small-signal parameters at a solved bias point.

    slope_s = di_c/dv_be = i_c/Vt, r_in = beta/slope_s, and g_out is the
    magnitude of di_c/dv_cb from the collector-junction exponential,
    i_cs*exp(v_cb/Vt)/Vt, which collapses to ~0 deep in the active region.
    The collector junction voltage is taken as v_cb = v_be - v_ce
    (negative when reverse biased); only the magnitude of the output
    conductance is reported.
    """
    if op.i_c <= 0:
        raise ValueError(f"operating point must carry positive i_c, got {op.i_c}")
    vt = thermal_voltage(device.temperature)
    slope_s = op.i_c / vt
    r_in = beta_from_alpha(device.alpha_n) / slope_s
    v_cb = op.v_be - op.v_ce
    if v_cb / vt > EXP_ARG_CAP:
        raise OverflowError(
            f"v_cb = {v_cb:g} V gives exp argument {v_cb / vt:.1f} "
            f"above the overflow cap {EXP_ARG_CAP:g}"
        )
    g_out = device.i_cs * math.exp(v_cb / vt) / vt
    return SmallSignalParams(r_in=r_in, g_out=g_out, slope_s=slope_s)


def static_finite_params(
    device: BjtParams, v_be: float, delta: float
) -> SmallSignalParams:
    """Finite-variation estimates of the small-signal parameters.

    Central differences of the active-region currents over [v_be - delta,
    v_be + delta]; second-order accurate in delta. g_out is 0 because the
    active-region law carries no collector-voltage dependence.
    """
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    if v_be - delta < 0:
        raise ValueError(
            f"delta {delta:g} flips the current sign at v_be - delta = "
            f"{v_be - delta:g} V"
        )
    above = active_region_currents(device, v_be + delta)
    below = active_region_currents(device, v_be - delta)
    slope_s = (above.i_c - below.i_c) / (2.0 * delta)
    r_in = (2.0 * delta) / (above.i_b - below.i_b)
    return SmallSignalParams(r_in=r_in, g_out=0.0, slope_s=slope_s)
