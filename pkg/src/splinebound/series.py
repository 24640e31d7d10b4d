"""Error-series coefficients for the first and second order sine splines.

The error sin(pi*t/2) - f_n(pi*t/2), n in {1, 2}, can be written as
sum_k c_k t^k (1-t)^p(k) with positive, strictly decreasing coefficients.
The coefficients follow four-branch recurrences (one branch per residue of
k mod 4); the exponent p(k) alternates in pairs between two values.
Re-arranged, the same data gives rapidly converging series for sin(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath as mp

from .numerics import ExtReal, PiRational, Poly, Var

# exponent patterns, by residue of k mod 4
_ORDER1_START = 2
_ORDER2_START = 3


def exponent_rule(spline_order: int, k: int) -> int:
    """Exponent p(k) of the (1-t) factor in the error series term k.

    Order 1: p=2 for k in {2,5,6,9,10,...}, p=3 for k in {3,4,7,8,...}.
    Order 2: p=3 for k in {3,6,7,10,11,...}, p=4 for k in {4,5,8,9,...}.
    """
    if spline_order == 1:
        if k < _ORDER1_START:
            raise ValueError("order-1 series starts at k=2")
        return 2 if k % 4 in (1, 2) else 3
    if spline_order == 2:
        if k < _ORDER2_START:
            raise ValueError("order-2 series starts at k=3")
        return 3 if k % 4 in (2, 3) else 4
    raise ValueError("spline_order must be 1 or 2")


def _pi_power_term(k: int) -> PiRational:
    # pi^k / (2^k k!)
    return PiRational.pi_term(k, 1, 2**k * factorial(k))


def order1_coefficients(K: int) -> "ErrorSeries":
    """Exact c_0..c_K for the first-order error series, via the recurrence."""
    if K < 2:
        raise ValueError("K must be >= 2")
    c = [PiRational.zero()] * (K + 1)
    c[0] = PiRational.from_rational(-1)
    c[1] = 2 * c[0] + PiRational.pi_term(1, 1, 2)
    c[2] = 2 * c[1] - c[0]
    if K >= 3:
        c[3] = c[2] + c[1] - c[0] - _pi_power_term(3)
    for k in range(4, K + 1):
        r = k % 4
        if r == 0:
            c[k] = 3 * c[k - 1] - c[k - 2]
        elif r == 1:
            c[k] = 2 * c[k - 1] - c[k - 3] + _pi_power_term(k)
        elif r == 2:
            c[k] = 2 * c[k - 1] - 3 * c[k - 2] + c[k - 3]
        else:
            c[k] = 3 * c[k - 2] - 4 * c[k - 3] - c[k - 4] + c[k - 5] - _pi_power_term(k)
    return ErrorSeries(spline_order=1, coeffs=tuple(c), start_index=_ORDER1_START)


def order2_coefficients(K: int) -> "ErrorSeries":
    """Exact c_0..c_K for the second-order error series, via the recurrence."""
    if K < 3:
        raise ValueError("K must be >= 3")
    c = [PiRational.zero()] * (K + 1)
    c[0] = PiRational.from_rational(-1)
    c[1] = 2 * c[0] + PiRational.pi_term(1, 1, 2)
    c[2] = 2 * c[1] - c[0] + _pi_power_term(2)
    c[3] = c[2] + 4 * c[1] - c[0] - _pi_power_term(3)
    if K >= 4:
        c[4] = 3 * c[3] - 2 * c[2] - 4 * c[1] - c[0]
    if K >= 5:
        c[5] = 3 * c[4] - c[2] - 3 * c[1] + _pi_power_term(5)
    for k in range(6, K + 1):
        r = k % 4
        if r == 2:
            c[k] = 4 * c[k - 1] - 6 * c[k - 2] + c[k - 3]
        elif r == 3:
            c[k] = 2 * c[k - 1] - 2 * c[k - 2] - 2 * c[k - 3] + c[k - 4] - _pi_power_term(k)
        elif r == 0:
            c[k] = 3 * c[k - 1] - 3 * c[k - 2] + 4 * c[k - 3] - c[k - 4]
        else:
            c[k] = 4 * c[k - 1] - 3 * c[k - 2] + c[k - 3] - c[k - 4] + _pi_power_term(k)
    return ErrorSeries(spline_order=2, coeffs=tuple(c), start_index=_ORDER2_START)


@dataclass(frozen=True)
class ErrorSeries:
    """Coefficients c_k and exponent rule for eps_n(t) = sum c_k t^k (1-t)^p(k)."""

    spline_order: int
    coeffs: tuple
    start_index: int

    def exponent(self, k: int) -> int:
        return exponent_rule(self.spline_order, k)

    def max_index(self) -> int:
        return len(self.coeffs) - 1

    def to_monomials(self, max_power: int) -> Poly:
        """Re-expand the structural terms into monomials of t, exactly.

        Only terms with k <= max_power can contribute to powers <= max_power,
        so the leading coefficients returned are final.
        """
        one_minus_t = Poly(
            [PiRational.one(), PiRational.from_rational(-1)], Var.T_ON_0_1
        )
        total = Poly([], Var.T_ON_0_1)
        for k in range(self.start_index, min(self.max_index(), max_power) + 1):
            term = (one_minus_t ** self.exponent(k)) * Poly(
                [PiRational.zero()] * k + [self.coeffs[k]], Var.T_ON_0_1
            )
            total = total + term
        return Poly(
            [total.coeff(m) for m in range(max_power + 1)], Var.T_ON_0_1
        )


def eval_error_series(series: ErrorSeries, t: ExtReal, terms: int) -> ExtReal:
    """Partial sum of `terms` structural terms starting at the series start.

    Exactly 0 at t = 0 and t = 1.
    """
    digits = t.digits
    with mp.workdps(digits + 10):
        tv = t.value
        if tv < 0 or tv > 1:
            raise ValueError("t must lie in [0, 1]")
        if tv == 0 or tv == 1:
            return ExtReal(0, digits)
        one_minus = 1 - tv
        acc = mp.mpf(0)
        for k in range(series.start_index, series.start_index + terms):
            if k > series.max_index():
                raise ValueError(
                    f"series holds coefficients to k={series.max_index()}, need {k}"
                )
            ck = series.coeffs[k].to_ext_real(digits).value
            acc += ck * tv**k * one_minus ** series.exponent(k)
        return ExtReal(acc, digits)


# -- sine series derived from the error series -----------------------------

# Head coefficient for the order-1 series term k=1: 2(-1 + pi/4), equal in
# value to the order-1 seed -2 + pi/2.
ORDER1_SERIES_C1 = 2 * (PiRational.from_rational(-1) + PiRational.pi_term(1, 1, 4))

# Order-2 series replaces coefficients k=0..2 with its own closed forms.
ORDER2_SERIES_HEAD = (
    PiRational.from_rational(-1) + PiRational.pi_term(2, 1, 8),  # c_0
    PiRational.from_rational(-4) + PiRational.pi_term(1, 1, 2) + PiRational.pi_term(2, 1, 4),  # c_1
    PiRational.from_rational(-10) + PiRational.pi_term(1, 2) + PiRational.pi_term(2, 3, 8),  # c_2
)


def _series1_exponent(k: int) -> int:
    # p=2 for k in {1,2,5,6,9,10,...}; p=3 for k in {3,4,7,8,...}
    return 2 if k % 4 in (1, 2) else 3


def _series2_exponent(k: int) -> int:
    # p=3 for k in {2,3,6,7,...}; p=4 for k in {0,1,4,5,...}
    return 3 if k % 4 in (2, 3) else 4


@dataclass(frozen=True)
class SineSeries:
    """Convergent series for sin(x) on [0, pi/2] built from an error series.

    variant "order1": sin(x) = 2x/pi + (2x/pi)(1 - 2x/pi)
        + sum_{k>=1} c_k t^k (1-t)^p,  t = 2x/pi.
    variant "order2": sin(x) = 1 - (pi^2/8)(1-t)^2
        + sum_{k>=0} c_k t^k (1-t)^p, with its own c_0..c_2.
    """

    variant: str
    coeffs: tuple

    def term_coefficient(self, k: int) -> PiRational:
        if self.variant == "order1":
            if k < 1:
                raise ValueError("order-1 series terms start at k=1")
            return ORDER1_SERIES_C1 if k == 1 else self.coeffs[k]
        if k < 0:
            raise ValueError("k must be >= 0")
        return ORDER2_SERIES_HEAD[k] if k <= 2 else self.coeffs[k]

    def exponent(self, k: int) -> int:
        return _series1_exponent(k) if self.variant == "order1" else _series2_exponent(k)


def sine_series(variant: str, n_terms: int) -> SineSeries:
    if variant == "order1":
        return SineSeries("order1", order1_coefficients(max(n_terms, 2)).coeffs)
    if variant == "order2":
        return SineSeries("order2", order2_coefficients(max(n_terms, 3)).coeffs)
    raise ValueError("variant must be 'order1' or 'order2'")


def sine_series_eval(variant: str, x: ExtReal, n_terms: int) -> ExtReal:
    """Head terms plus series terms k <= n_terms, at x's precision context.

    The term count convention matches the published tables: n counts the
    upper summation index (k = 1..n for order 1, k = 0..n for order 2).
    """
    digits = x.digits
    s = sine_series(variant, n_terms)
    with mp.workdps(digits + 10):
        pi = mp.pi
        xv = x.value
        if xv < 0 or xv > pi / 2:
            raise ValueError("x must lie in [0, pi/2]")
        t = 2 * xv / pi
        u = 1 - t
        if variant == "order1":
            acc = t + t * u
            k0 = 1
        else:
            acc = 1 - pi**2 / 8 * u**2
            k0 = 0
        for k in range(k0, n_terms + 1):
            ck = s.term_coefficient(k).to_ext_real(digits).value
            acc += ck * t**k * u ** s.exponent(k)
        return ExtReal(acc, digits)
