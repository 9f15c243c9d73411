"""Truncated analytic functions of algebra elements."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..coeffring import (
    cosh_coeffs,
    exp_coeffs,
    gen_cos_coeffs,
    gen_sin_coeffs,
    scalar,
    sinh_coeffs,
    sinhc_coeffs,
    x_over_sinh_coeffs,
)
from ..ncalg import Element, apply_series, series_length


def _n(x: Element) -> int:
    return series_length(x.alg)


def exp(x: Element) -> Element:
    return apply_series(exp_coeffs(_n(x)), x)


def sinh(x: Element) -> Element:
    return apply_series(sinh_coeffs(_n(x)), x)


def cosh(x: Element) -> Element:
    return apply_series(cosh_coeffs(_n(x)), x)


def sinhc(x: Element) -> Element:
    """sinh(x)/x."""
    return apply_series(sinhc_coeffs(_n(x)), x)


def x_over_sinh(x: Element) -> Element:
    return apply_series(x_over_sinh_coeffs(_n(x)), x)


def gcos(x: Element) -> Element:
    """Generalized cosine C_{-mu}(x), coefficients polynomial in mu."""
    return apply_series(gen_cos_coeffs(_n(x)), x)


def gsin(x: Element) -> Element:
    """Generalized sine S_{-mu}(x)."""
    return apply_series(gen_sin_coeffs(_n(x)), x)


def gsinc(x: Element) -> Element:
    """S_{-mu}(x)/x."""
    n = _n(x)
    return apply_series([scalar(Fraction(1, factorial(k + 1)), mu=k // 2) if k % 2 == 0 else {}
                         for k in range(n + 1)], x)
