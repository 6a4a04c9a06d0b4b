"""Economic amplification coefficients and the income-vs-investment regression.

The amplifier picture maps directly onto the classic investment models:
total income over invested inputs is the economic gain (reciprocal of the
Harrod capital coefficient, identical to the Domar productivity), and the
Keynes multiplier is the economic slope, income increment per investment
increment. The linear model income = a0 + beta * input is fitted by
ordinary least squares.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class EconPeriod:
    """One labeled accounting period; quantity_out counts finished products."""

    label: str
    investments: float
    expenses: float
    incomes: float
    quantity_out: Optional[float] = None

    def __post_init__(self):
        for name in ("investments", "expenses", "incomes"):
            if getattr(self, name) < 0:
                raise ValueError(
                    f"period {self.label!r}: {name} must be >= 0, "
                    f"got {getattr(self, name)}"
                )
        if self.quantity_out is not None and self.quantity_out < 0:
            raise ValueError(
                f"period {self.label!r}: quantity_out must be >= 0, "
                f"got {self.quantity_out}"
            )

    @property
    def inputs(self) -> float:
        """Invested inputs of the period: investments + expenses."""
        return self.investments + self.expenses


@dataclass(frozen=True)
class EconSeries:
    periods: tuple[EconPeriod, ...]

    def __init__(self, periods: Sequence[EconPeriod]):
        object.__setattr__(self, "periods", tuple(periods))
        if not self.periods:
            raise ValueError("series needs at least one period")
        labels = [p.label for p in self.periods]
        if len(set(labels)) != len(labels):
            dupes = sorted({l for l in labels if labels.count(l) > 1})
            raise ValueError(f"duplicate period labels: {dupes}")

    def __len__(self):
        return len(self.periods)


@dataclass(frozen=True)
class RegressionFit:
    """Fitted line y = a0 + beta*x with its coefficient of determination."""

    a0: float
    beta: float
    r_squared: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"fit needs n >= 2, got {self.n}")
        if not -1e-12 <= self.r_squared <= 1.0 + 1e-12:
            raise ValueError(f"r_squared out of [0, 1]: {self.r_squared}")


@dataclass(frozen=True)
class CoefficientReport:
    """Every economic coefficient computable from one series.

    beta_p is a products-per-money ratio (dimensionally mixed, reported
    as a plain number); the purely monetary coefficients are dimensionless.
    beta_bank is only meaningful for bank-style data and stays absent here
    unless supplied by the caller.
    """

    beta_v: float
    harrod_b: float
    domar_sigma: float
    mean_beta: float
    beta_p: Optional[float] = None
    beta_bank: Optional[float] = None
    keynes_m: Optional[float] = None
    fit: Optional[RegressionFit] = None


def beta_p_economic(total_finished_products: float, inputs_value: float) -> float:
    """Product gain: total finished products over the value of the inputs."""
    if inputs_value <= 0:
        raise ValueError(f"inputs_value must be > 0, got {inputs_value}")
    return total_finished_products / inputs_value


def beta_v_economic(total_incomes: float, investments_plus_expenses: float) -> float:
    """Value gain: total incomes over invested inputs; > 1 means amplification."""
    if investments_plus_expenses <= 0:
        raise ValueError(
            f"investments_plus_expenses must be > 0, got {investments_plus_expenses}"
        )
    return total_incomes / investments_plus_expenses


def beta_bank(output_values: float, total_values: float) -> float:
    """Bank gain over one standard period: output values over total values.

    The caller composes total_values (initial capital + amount obtained +
    given interests) and fixes the standard period.
    """
    if total_values <= 0:
        raise ValueError(f"total_values must be > 0, got {total_values}")
    return output_values / total_values


def harrod_b(investments: float, incomes: float) -> float:
    """Capital coefficient: investments over incomes (reciprocal of the gain)."""
    if incomes <= 0:
        raise ValueError(f"incomes must be > 0, got {incomes}")
    return investments / incomes


def domar_sigma(delta_q: float, total_investments: float) -> float:
    """Investment productivity: production increment over total investments.

    With the production increment read as total income efficiency this is
    the same number as beta_v_economic.
    """
    if total_investments <= 0:
        raise ValueError(f"total_investments must be > 0, got {total_investments}")
    return delta_q / total_investments


@dataclass(frozen=True)
class CobbDouglasParams:
    """Proportionality g and the elasticities of labour (lam) and capital (mu)."""

    g: float
    lam: float
    mu: float

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError(f"g must be > 0, got {self.g}")


def cobb_douglas(params: CobbDouglasParams, labour_l: float, capital_k: float) -> float:
    """Production Q = g * L^lambda * K^mu."""
    for base, exponent, name in (
        (labour_l, params.lam, "labour_l"),
        (capital_k, params.mu, "capital_k"),
    ):
        if base <= 0 and exponent != int(exponent):
            raise ValueError(
                f"{name} must be > 0 for fractional exponent {exponent}, got {base}"
            )
    return params.g * labour_l**params.lam * capital_k**params.mu


def keynes_multiplier(delta_v: float, delta_i: float) -> float:
    """Investment multiplier: income increment over investment increment."""
    if delta_i == 0:
        raise ValueError("investment increment must be non-zero")
    return delta_v / delta_i


def fit_linear(xs: Sequence[float], ys: Sequence[float]) -> RegressionFit:
    """Ordinary least squares for y = a0 + beta*x.

    r_squared = 1 - SS_res/SS_tot; an exactly constant y (SS_tot = 0, so
    the fit is a perfect horizontal line) reports r_squared = 1.
    """
    if len(xs) != len(ys):
        raise ValueError(f"column lengths differ: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    x_bar = math.fsum(xs) / n
    y_bar = math.fsum(ys) / n
    s_xx = math.fsum((x - x_bar) ** 2 for x in xs)
    if s_xx == 0:
        raise ValueError("x values are all identical; slope is undefined")
    s_xy = math.fsum((x - x_bar) * (y - y_bar) for x, y in zip(xs, ys))
    beta = s_xy / s_xx
    a0 = y_bar - beta * x_bar
    ss_res = math.fsum((y - (a0 + beta * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = math.fsum((y - y_bar) ** 2 for y in ys)
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RegressionFit(a0=a0, beta=beta, r_squared=r_squared, n=n)


def analyze_series(series: EconSeries) -> CoefficientReport:
    """Aggregate a series into the full coefficient report.

    Totals feed beta_v, domar_sigma (same inputs denominator) and harrod_b
    (investments alone, so its reciprocal is the income/investment gain).
    mean_beta is the per-period mean income/inputs ratio. beta_p appears
    only when every period counts its finished products; keynes_m needs at
    least two periods with a non-zero mean investment increment; the fit
    needs two periods and non-degenerate inputs.
    """
    periods = series.periods
    total_inv = math.fsum(p.investments for p in periods)
    total_exp = math.fsum(p.expenses for p in periods)
    total_inc = math.fsum(p.incomes for p in periods)
    total_inputs = total_inv + total_exp
    if total_inputs <= 0:
        raise ValueError("series has zero total inputs; gain is undefined")
    if total_inc <= 0:
        raise ValueError("series has zero total incomes; harrod_b is undefined")

    ratios = []
    for p in periods:
        if p.inputs <= 0:
            raise ValueError(f"period {p.label!r}: zero inputs, ratio undefined")
        ratios.append(p.incomes / p.inputs)
    mean_beta = math.fsum(ratios) / len(ratios)

    beta_p = None
    if all(p.quantity_out is not None for p in periods):
        beta_p = beta_p_economic(
            math.fsum(p.quantity_out for p in periods), total_inputs
        )

    keynes_m = None
    if len(periods) >= 2:
        dv = [b.incomes - a.incomes for a, b in zip(periods, periods[1:])]
        di = [b.investments - a.investments for a, b in zip(periods, periods[1:])]
        mean_di = math.fsum(di) / len(di)
        if mean_di != 0:
            keynes_m = keynes_multiplier(math.fsum(dv) / len(dv), mean_di)

    fit = None
    if len(periods) >= 2:
        xs = [p.inputs for p in periods]
        if max(xs) > min(xs):
            fit = fit_linear(xs, [p.incomes for p in periods])

    return CoefficientReport(
        beta_v=beta_v_economic(total_inc, total_inputs),
        harrod_b=harrod_b(total_inv, total_inc),
        domar_sigma=domar_sigma(total_inc, total_inputs),
        mean_beta=mean_beta,
        beta_p=beta_p,
        keynes_m=keynes_m,
        fit=fit,
    )
