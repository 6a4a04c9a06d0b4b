"""Stage gains, output power, cascade composition and operating-limit checks."""

import math
from dataclasses import dataclass
from typing import Sequence

from .circuit import OperatingPoint, SmallSignalParams


@dataclass(frozen=True)
class StageGain:
    beta_current: float
    voltage_gain: float
    power_out: float

    def __post_init__(self):
        if self.power_out < 0:
            raise ValueError(f"power_out must be >= 0, got {self.power_out}")


@dataclass(frozen=True)
class OperatingLimits:
    """Device ratings; defaults are representative small-signal ratings."""

    i_c_max: float = 0.1
    v_ce_max: float = 40.0
    p_max: float = 0.5

    def __post_init__(self):
        for name in ("i_c_max", "v_ce_max", "p_max"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class BreakdownStatus:
    """Healthy, or the names of every violated limit."""

    violations: tuple[str, ...] = ()

    @property
    def healthy(self) -> bool:
        return not self.violations


def current_gain(i_out: float, i_in: float) -> float:
    """Output current over input current."""
    if i_in == 0:
        raise ValueError("input current must be non-zero")
    return i_out / i_in


def output_voltage(i_out: float, r_l: float) -> float:
    """Voltage taken from the load resistor: i_out * r_l."""
    if r_l <= 0:
        raise ValueError(f"r_l must be > 0, got {r_l}")
    return i_out * r_l


def output_power(i_c: float, r_l: float) -> float:
    """Power delivered to the load: r_l * i_c^2."""
    if r_l <= 0:
        raise ValueError(f"r_l must be > 0, got {r_l}")
    return r_l * i_c * i_c


def stage_voltage_gain(ss: SmallSignalParams, r_l: float) -> float:
    """Magnitude of the stage voltage gain, slope_s * r_l.

    The CE stage inverts; the sign is a convention and is not returned.
    """
    if r_l <= 0:
        raise ValueError(f"r_l must be > 0, got {r_l}")
    return ss.slope_s * r_l


def cascade_gain(stage_gains: Sequence[float]) -> float:
    """Total gain of stages in cascade: the product of the stage gains."""
    if not stage_gains:
        raise ValueError("cascade needs at least one stage gain")
    return math.prod(stage_gains)


def stage_gain(op: OperatingPoint, ss: SmallSignalParams, r_l: float) -> StageGain:
    """Bundle the three gain figures of one solved stage."""
    return StageGain(
        beta_current=current_gain(op.i_c, op.i_b),
        voltage_gain=stage_voltage_gain(ss, r_l),
        power_out=output_power(op.i_c, r_l),
    )


def breakdown_check(op: OperatingPoint, limits: OperatingLimits) -> BreakdownStatus:
    """Flag every operating limit the point exceeds.

    Strict violation triggers; sitting exactly at a limit is healthy.
    """
    violations = []
    if op.i_c > limits.i_c_max:
        violations.append("i_c")
    if op.v_ce > limits.v_ce_max:
        violations.append("v_ce")
    if op.i_c * op.v_ce > limits.p_max:
        violations.append("power")
    return BreakdownStatus(violations=tuple(violations))
