"""Device models: Ebers-Moll bipolar transistor and square-law MOS transistor.

All functions are pure; parameter objects are frozen and validated on
construction, so values can be shared freely between threads.
"""

import math
from dataclasses import dataclass

# CODATA 2018 exact values
BOLTZMANN_K = 1.380649e-23      # J/K
ELECTRON_CHARGE = 1.602176634e-19  # C

# Largest exponent argument accepted before the device model refuses to
# evaluate (e^200 ~ 7.2e86; anything out there is an unphysical regime).
EXP_ARG_CAP = 200.0

DEFAULT_TEMPERATURE = 300.0     # K, room temperature convention


@dataclass(frozen=True)
class PhysicalConstants:
    boltzmann_k: float = BOLTZMANN_K
    electron_charge_e: float = ELECTRON_CHARGE

    def __post_init__(self):
        if self.boltzmann_k <= 0 or self.electron_charge_e <= 0:
            raise ValueError("physical constants must be strictly positive")


CODATA = PhysicalConstants()


@dataclass(frozen=True)
class BjtParams:
    """Static bipolar transistor parameters (n-p-n convention).

    alpha_n is the forward common-base current-transfer ratio (i_c/i_e),
    alpha_i the reverse one; alpha_i defaults to 0 (pure forward modeling),
    temperature to 300 K.
    """

    i_es: float
    i_cs: float
    alpha_n: float
    alpha_i: float = 0.0
    temperature: float = DEFAULT_TEMPERATURE

    def __post_init__(self):
        if self.i_es <= 0:
            raise ValueError(f"i_es must be > 0, got {self.i_es}")
        if self.i_cs <= 0:
            raise ValueError(f"i_cs must be > 0, got {self.i_cs}")
        if self.temperature <= 0:
            raise ValueError(f"temperature must be > 0 K, got {self.temperature}")
        if not 0.0 < self.alpha_n < 1.0:
            raise ValueError(f"alpha_n must lie strictly in (0, 1), got {self.alpha_n}")
        if not 0.0 <= self.alpha_i < self.alpha_n:
            raise ValueError(
                f"alpha_i must satisfy 0 <= alpha_i < alpha_n, got {self.alpha_i}"
            )


@dataclass(frozen=True)
class MosParams:
    """Square-law MOS parameters: k_prime in A/V^2, threshold in volts."""

    k_prime: float
    v_threshold: float

    def __post_init__(self):
        if self.k_prime <= 0:
            raise ValueError(f"k_prime must be > 0, got {self.k_prime}")


@dataclass(frozen=True)
class BjtCurrents:
    """Terminal currents of a bipolar device; i_e = i_b + i_c by charge conservation."""

    i_e: float
    i_c: float
    i_b: float

    def __post_init__(self):
        scale = max(abs(self.i_e), abs(self.i_c), abs(self.i_b))
        if abs(self.i_e - (self.i_b + self.i_c)) > 1e-12 * scale:
            raise ValueError(
                f"current conservation violated: i_e={self.i_e} != "
                f"i_b + i_c = {self.i_b + self.i_c}"
            )


def thermal_voltage(temperature: float, constants: PhysicalConstants = CODATA) -> float:
    """kT/e in volts (~25.85 mV at 300 K)."""
    if temperature <= 0:
        raise ValueError(f"temperature must be > 0 K, got {temperature}")
    return constants.boltzmann_k * temperature / constants.electron_charge_e


def _junction_term(voltage: float, vt: float, cap: float, name: str) -> float:
    # exp(v/Vt) - 1, refusing arguments past the overflow cap.
    arg = voltage / vt
    if arg > cap:
        raise OverflowError(
            f"{name} = {voltage:g} V gives exp argument {arg:.1f} "
            f"above the overflow cap {cap:g}"
        )
    return math.exp(arg) - 1.0


def ebers_moll_currents(
    params: BjtParams, v_be: float, v_cb: float, exp_cap: float = EXP_ARG_CAP
) -> BjtCurrents:
    """Static terminal currents from the full two-junction coupled exponentials.

    i_e = i_es*(exp(v_be/Vt) - 1) - alpha_i*i_cs*(exp(v_cb/Vt) - 1)
    i_c = alpha_n*i_es*(exp(v_be/Vt) - 1) - i_cs*(exp(v_cb/Vt) - 1)
    i_b = i_e - i_c

    v_cb is the collector-junction forward voltage: negative when the
    junction is reverse biased (the normal amplification regime).
    """
    vt = thermal_voltage(params.temperature)
    x_be = _junction_term(v_be, vt, exp_cap, "v_be")
    x_cb = _junction_term(v_cb, vt, exp_cap, "v_cb")
    i_e = params.i_es * x_be - params.alpha_i * params.i_cs * x_cb
    i_c = params.alpha_n * params.i_es * x_be - params.i_cs * x_cb
    return BjtCurrents(i_e=i_e, i_c=i_c, i_b=i_e - i_c)


def active_region_currents(
    params: BjtParams, v_be: float, exp_cap: float = EXP_ARG_CAP
) -> BjtCurrents:
    """Terminal currents with the collector junction strongly reverse biased.

    The collector-junction exponential drops out and only the emitter
    junction drives the device:

    i_e = i_es*(exp(v_be/Vt) - 1)
    i_c = alpha_n * i_e
    i_b = (1 - alpha_n) * i_e
    """
    vt = thermal_voltage(params.temperature)
    i_e = params.i_es * _junction_term(v_be, vt, exp_cap, "v_be")
    return BjtCurrents(
        i_e=i_e,
        i_c=params.alpha_n * i_e,
        i_b=(1.0 - params.alpha_n) * i_e,
    )


def beta_from_alpha(alpha_n: float) -> float:
    """Common-emitter current gain beta = alpha_n / (1 - alpha_n)."""
    if not 0.0 < alpha_n < 1.0:
        raise ValueError(
            f"alpha_n must lie strictly in (0, 1) for a finite beta, got {alpha_n}"
        )
    return alpha_n / (1.0 - alpha_n)


def mos_drain_current(params: MosParams, v_gs: float, v_ds: float) -> float:
    """Square-law drain current with cutoff, triode and saturation regions."""
    if v_ds < 0:
        raise ValueError(f"v_ds must be >= 0, got {v_ds}")
    v_ov = v_gs - params.v_threshold
    if v_ov <= 0:
        return 0.0
    if v_ds < v_ov:
        return params.k_prime * (v_ov * v_ds - 0.5 * v_ds * v_ds)
    return 0.5 * params.k_prime * v_ov * v_ov


def mos_transconductance(params: MosParams, v_gs: float) -> float:
    """Saturation-region slope dI_D/dV_GS = k_prime*(v_gs - V_T); 0 in cutoff."""
    v_ov = v_gs - params.v_threshold
    if v_ov <= 0:
        return 0.0
    return params.k_prime * v_ov
