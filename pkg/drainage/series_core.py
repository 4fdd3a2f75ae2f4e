#!/usr/bin/python
#-*- coding: utf-8 -*-
"""
Truncated one-variable Taylor series

Every spectrum U_k(x) and every decomposition component is carried as a
TruncatedSeries expanded about the point where the solution is wanted.
Arithmetic is only defined between series sharing a center; nothing is
re-expanded behind the caller's back.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import comb, expit


# ==================== ERRORS ====================

class SeriesError(ValueError):
    pass


class CenterMismatchError(SeriesError):
    pass


class NonFiniteError(SeriesError):
    pass


class DerivativeBudgetError(SeriesError):

    def __init__(self, message, k=None):
        super().__init__(message)
        self.k = k


def _check_finite(value, what):
    if not math.isfinite(value):
        raise NonFiniteError(f"{what} must be finite, got {value!r}")


# ==================== SERIES TYPE ====================

@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """
    Coefficients a_0..a_M of sum a_k (x - center)^k

    Args:
        center: expansion point in x
        coeffs: M+1 finite coefficients (copied and frozen)
        valid_order: highest power still exact after truncation-losing ops
    """
    center: float
    coeffs: np.ndarray
    valid_order: int

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise SeriesError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(coeffs)):
            raise NonFiniteError("series coefficients must be finite")
        _check_finite(float(self.center), "center")
        valid_order = int(self.valid_order)
        if not 0 <= valid_order <= coeffs.size - 1:
            raise SeriesError(f"valid_order {valid_order} outside [0, {coeffs.size - 1}]")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'center', float(self.center))
        object.__setattr__(self, 'valid_order', valid_order)

    @property
    def order(self):
        return self.coeffs.size - 1

    @property
    def value(self):
        # exact value at the center
        return float(self.coeffs[0])

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __repr__(self):
        return 'TruncatedSeries(center=%r, order=%d, valid_order=%d, coeffs=%s)' % (
            self.center, self.order, self.valid_order, np.array2string(self.coeffs, precision=6))


def _same_center(a, b):
    if a.center != b.center:
        raise CenterMismatchError(f"series centers differ: {a.center!r} vs {b.center!r}")


# ==================== ARITHMETIC ====================

def make_constant(v, center, M):
    _check_finite(v, "constant")
    if M < 0:
        raise SeriesError(f"order must be >= 0, got {M}")
    coeffs = np.zeros(M + 1)
    coeffs[0] = v
    return TruncatedSeries(center, coeffs, M)


def zero_series(center, M):
    return make_constant(0.0, center, M)


def add(a, b):
    _same_center(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries(a.center, a.coeffs[:n + 1] + b.coeffs[:n + 1],
                           min(a.valid_order, b.valid_order))


def scale(a, alpha):
    _check_finite(alpha, "scale factor")
    return TruncatedSeries(a.center, a.coeffs * alpha, a.valid_order)


def divide(a, beta):
    _check_finite(beta, "divisor")
    if beta == 0:
        raise SeriesError("division of a series by zero")
    return TruncatedSeries(a.center, a.coeffs / beta, a.valid_order)


def cauchy_mul(a, b):
    _same_center(a, b)
    n = min(a.order, b.order)
    coeffs = np.convolve(a.coeffs[:n + 1], b.coeffs[:n + 1])[:n + 1]
    return TruncatedSeries(a.center, coeffs, min(a.valid_order, b.valid_order))


def differentiate(a):
    if a.valid_order < 1:
        raise DerivativeBudgetError(
            f"cannot differentiate: valid_order is {a.valid_order} at center {a.center}")
    return TruncatedSeries(a.center, P.polyder(a.coeffs), a.valid_order - 1)


def eval_at(a, x):
    """Horner sum of a_k (x - center)^k over k <= valid_order"""
    return float(P.polyval(x - a.center, a.coeffs[:a.valid_order + 1]))


def is_zero(a, tol=0.0):
    return bool(np.all(np.abs(a.coeffs[:a.valid_order + 1]) <= tol))


# ==================== ELEMENTARY FUNCTIONS ====================

def _sech(u):
    # 2 e^-|u| / (1 + e^-2|u|), no overflow for large |u|
    e = math.exp(-abs(u))
    return 2.0 * e / (1.0 + e * e)


def _tanh_sech2_coeffs(center, s, M):
    # y = tanh(s x), z = sech^2(s x):  y' = s z,  z' = -2 s y z
    y = np.zeros(M + 1)
    z = np.zeros(M + 1)
    y[0] = math.tanh(s * center)
    z[0] = _sech(s * center) ** 2
    for k in range(M):
        y[k + 1] = s * z[k] / (k + 1)
        z[k + 1] = -2.0 * s * np.dot(y[:k + 1], z[k::-1]) / (k + 1)
    return y, z


def tanh_series(center, s, M):
    _check_finite(s, "tanh scale")
    if M < 0:
        raise SeriesError(f"order must be >= 0, got {M}")
    y, _ = _tanh_sech2_coeffs(center, s, M)
    return TruncatedSeries(center, y, M)


def sech2_series(center, s, M):
    _check_finite(s, "sech^2 scale")
    if M < 0:
        raise SeriesError(f"order must be >= 0, got {M}")
    _, z = _tanh_sech2_coeffs(center, s, M)
    return TruncatedSeries(center, z, M)


def logistic_series(center, M):
    """
    Series of 1/(1+e^x) about center

    Carries w = 1 - y = e^x/(1+e^x) alongside y so that y' = -y w stays
    accurate deep in either tail.
    """
    if M < 0:
        raise SeriesError(f"order must be >= 0, got {M}")
    y = np.zeros(M + 1)
    w = np.zeros(M + 1)
    y[0] = expit(-center)
    w[0] = expit(center)
    for k in range(M):
        y[k + 1] = -np.dot(y[:k + 1], w[k::-1]) / (k + 1)
        w[k + 1] = -y[k + 1]
    return TruncatedSeries(center, y, M)


def power_series(m, center, M):
    """Exact expansion of x^m about center, truncated at order M"""
    if m < 0:
        raise SeriesError(f"power must be >= 0, got {m}")
    coeffs = np.zeros(M + 1)
    for j in range(min(m, M) + 1):
        coeffs[j] = comb(m, j, exact=True) * center ** (m - j)
    return TruncatedSeries(center, coeffs, M)


def monomial_spectrum(m, n, k, center, M):
    if min(m, n, k) < 0:
        raise SeriesError(f"m, n, k must be >= 0, got {(m, n, k)}")
    if k != n:
        return zero_series(center, M)
    return power_series(m, center, M)


def shift_monomial(a, m):
    """x^m * a(x), keeping a's valid order"""
    return cauchy_mul(power_series(m, a.center, a.order), a)


# ==================== MULTIPLICATION COUNTER ====================

@dataclass
class MulCounter:
    """Tallies series multiplications performed by an engine"""
    cauchy: int = 0
    scalar: int = 0

    @property
    def total(self):
        return self.cauchy + self.scalar

    def mul(self, a, b):
        self.cauchy += 1
        return cauchy_mul(a, b)

    def scale(self, a, alpha):
        self.scalar += 1
        return scale(a, alpha)

    def divide(self, a, beta):
        self.scalar += 1
        return divide(a, beta)

    def weigh(self, weight, factor):
        # exact rational scaling of a deferred series weight
        self.scalar += 1
        return weight * factor
