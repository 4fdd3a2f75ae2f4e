#!/usr/bin/python
#-*- coding: utf-8 -*-
"""
Foam drainage equation in u-form

    u_t + 2 u^2 u_x - (u_x)^2 - 1/2 u u_xx = 0,   A = u^2

Holds the two initial-value problems (tanh wave with speed c and the
logistic front), the convolved nonlinearity shared by every method, and the
exact-solution oracles used to score them.
"""

import math
import sys
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .series_core import (DerivativeBudgetError, MulCounter, NonFiniteError, TruncatedSeries,
                          add, differentiate, logistic_series, scale, tanh_series, zero_series)


class ProblemError(ValueError):
    pass


class ProblemKind(Enum):
    TANH_WAVE = 'tanh'
    LOGISTIC_FRONT = 'logistic'


# Speed of the logistic traveling wave (sqrt(c) = 1/2)
LOGISTIC_SPEED = 0.25


@dataclass(frozen=True)
class Problem:
    kind: ProblemKind
    c: float = 1.0
    terms: int = 10
    guard: int = 4

    def __post_init__(self):
        if not isinstance(self.kind, ProblemKind):
            object.__setattr__(self, 'kind', ProblemKind(self.kind))
        if self.terms < 1:
            raise ProblemError(f"terms must be >= 1, got {self.terms}")
        if self.guard < 0:
            raise ProblemError(f"guard must be >= 0, got {self.guard}")
        if self.kind is ProblemKind.TANH_WAVE:
            if not math.isfinite(self.c) or self.c < 0:
                raise ProblemError(f"wave speed c must be finite and >= 0, got {self.c}")

    @classmethod
    def tanh_wave(cls, c, terms=10, guard=4):
        p = cls(ProblemKind.TANH_WAVE, c=c, terms=terms, guard=guard)
        if p.is_degenerate:
            print("WARNING: c = 0 degenerates the tanh wave to the zero solution.", file=sys.stderr)
        return p

    @classmethod
    def logistic_front(cls, terms=10, guard=4):
        return cls(ProblemKind.LOGISTIC_FRONT, c=LOGISTIC_SPEED, terms=terms, guard=guard)

    @property
    def is_degenerate(self):
        return self.kind is ProblemKind.TANH_WAVE and self.c == 0

    @property
    def wave_speed(self):
        return self.c if self.kind is ProblemKind.TANH_WAVE else LOGISTIC_SPEED

    def series_order(self, terms=None):
        # each recurrence step consumes up to two x-derivative orders
        K = self.terms if terms is None else terms
        return 2 * K + self.guard

    def with_terms(self, terms):
        return replace(self, terms=terms)


# ==================== INITIAL DATA ====================

def initial_condition(p, center, M):
    if M < 0:
        raise ProblemError(f"series order must be >= 0, got {M}")

    if p.kind is ProblemKind.TANH_WAVE:
        if p.c < 0:
            raise ProblemError(f"wave speed c must be >= 0, got {p.c}")
        if p.c == 0:
            return zero_series(center, M)
        s = math.sqrt(p.c)
        return scale(tanh_series(center, s, M), -s)

    # -1/2 + 1/(1+e^x); the constant term as -tanh(x/2)/2 avoids the 1/2 - 1/2 cancellation
    y = logistic_series(center, M)
    coeffs = y.coeffs.copy()
    coeffs[0] = -0.5 * math.tanh(center / 2.0)
    return TruncatedSeries(center, coeffs, y.valid_order)


# ==================== NONLINEARITY ====================

def _sum_series(terms):
    total = terms[0]
    for term in terms[1:]:
        total = add(total, term)
    return total


def square_term(spectra, m, counter):
    """P_m = sum_{r=0..m} U_r U_{m-r}"""
    return _sum_series([counter.mul(spectra[r], spectra[m - r]) for r in range(m + 1)])


def convolved_nonlinearity(seq, k, squares=None, counter=None):
    """
    Right side of the transformed equation before division by (k+1)

        -2 sum_m P_m U'_{k-m} + sum_r U'_r U'_{k-r} + 1/2 sum_r U_r U''_{k-r}

    Args:
        seq: spectra U_0..U_k (at least k+1 of them, equal centers)
        k: step index
        squares: optional cached P_0..P_k; missing ones are computed here
        counter: optional MulCounter charged for every multiplication

    Returns:
        TruncatedSeries with valid_order = min input valid_order - 2
    """
    spectra = list(seq)[:k + 1]
    if len(spectra) < k + 1:
        raise ProblemError(f"need {k + 1} spectra for step {k}, got {len(spectra)}")
    counter = MulCounter() if counter is None else counter

    for j, U in enumerate(spectra):
        if U.valid_order < 2:
            raise DerivativeBudgetError(
                f"derivative budget exhausted at k={k}: U_{j} has valid_order {U.valid_order}", k=k)

    first = [differentiate(U) for U in spectra]
    second = [differentiate(dU) for dU in first]

    squares = list(squares or [])[:k + 1]
    for m in range(len(squares), k + 1):
        squares.append(square_term(spectra, m, counter))

    convective = _sum_series([counter.mul(squares[m], first[k - m]) for m in range(k + 1)])
    gradient = _sum_series([counter.mul(first[r], first[k - r]) for r in range(k + 1)])
    curvature = _sum_series([counter.mul(spectra[r], second[k - r]) for r in range(k + 1)])

    return add(add(counter.scale(convective, -2.0), gradient), counter.scale(curvature, 0.5))


# ==================== EXACT SOLUTIONS ====================

def exact_u(p, x, t, front=True):
    """
    Traveling-wave solution in u-form

    TanhWave: -sqrt(c) tanh(sqrt(c)(x - ct)) behind the front, 0 past it
    (front=False drops the cut-off). LogisticFront: -1/2 + 1/(1+e^(x - t/4)).
    """
    if p.kind is ProblemKind.TANH_WAVE:
        if p.c == 0:
            return 0.0
        if front and x > p.c * t:
            return 0.0
        s = math.sqrt(p.c)
        return -s * math.tanh(s * (x - p.c * t))
    return -0.5 * math.tanh((x - LOGISTIC_SPEED * t) / 2.0)


def exact_A(x, t, c):
    # c tanh^2, not ct tanh^2: only the former squares to the u-form wave
    if x > c * t:
        return 0.0
    return c * math.tanh(math.sqrt(c) * (x - c * t)) ** 2


def pde_residual(u_eval, x, t, h=1e-4):
    if h <= 0:
        raise ProblemError(f"stencil width must be > 0, got {h}")

    u = u_eval(x, t)
    u_xp, u_xm = u_eval(x + h, t), u_eval(x - h, t)
    u_tp, u_tm = u_eval(x, t + h), u_eval(x, t - h)
    for value in (u, u_xp, u_xm, u_tp, u_tm):
        if not math.isfinite(value):
            raise NonFiniteError(f"non-finite stencil value near ({x}, {t})")

    u_t = (u_tp - u_tm) / (2 * h)
    u_x = (u_xp - u_xm) / (2 * h)
    u_xx = (u_xp - 2 * u + u_xm) / (h * h)
    return u_t + 2 * u * u * u_x - u_x * u_x - 0.5 * u * u_xx


# ==================== CLOSED FORMS ====================

def _tanh_closed_form(c, k, x):
    s = math.sqrt(c)
    ch, sh = math.cosh(s * x), math.sinh(s * x)
    if k == 0:
        return -s * math.tanh(s * x)
    if k == 1:
        return c ** 2 / ch ** 2
    if k == 2:
        return c ** 3.5 * sh / ch ** 3
    if k == 3:
        return c ** 5 * (2 * ch ** 2 - 3) / (3 * ch ** 4)
    return c ** 6.5 * sh * (ch ** 2 - 3) / (3 * ch ** 5)


def _logistic_closed_form(k, x):
    e = math.exp(x)
    if k == 0:
        return -0.5 + 1.0 / (1.0 + e)
    if k == 1:
        return e / (4 * (1 + e) ** 2)
    if k == 2:
        return e * (-1 + e) / (32 * (1 + e) ** 3)
    if k == 3:
        return -e * (-1 + 4 * e - e ** 2) / (384 * (1 + e) ** 4)
    if k == 4:
        return e * (e ** 3 - 1 + 11 * e - 11 * e ** 2) / (6144 * (1 + e) ** 5)
    # published U_5 carries the opposite sign
    return e * (66 * e ** 2 + 1 - 26 * e - 26 * e ** 3 + e ** 4) / (122880 * (1 + e) ** 6)


def closed_form_spectrum(p, k, x):
    """Published closed forms: U_0..U_4 (tanh wave), U_0..U_5 (logistic front)"""
    if p.kind is ProblemKind.TANH_WAVE:
        if not 0 <= k <= 4:
            raise ProblemError(f"no closed form for U_{k} of the tanh wave")
        return _tanh_closed_form(p.c, k, x)
    if not 0 <= k <= 5:
        raise ProblemError(f"no closed form for U_{k} of the logistic front")
    return _logistic_closed_form(k, x)


# ==================== FINITE-DIFFERENCE ORACLE ====================

def fd_weights(derivative, offsets):
    """
    Fornberg weights for the given derivative at 0 on integer offsets

    Exact rational recursion, converted to float at the end.
    """
    xs = [Fraction(o) for o in offsets]
    n, m = len(xs), derivative
    if m >= n:
        raise ProblemError(f"{n} points cannot resolve derivative {m}")

    c = [[Fraction(0)] * (m + 1) for _ in range(n)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    c4 = xs[0]
    for i in range(1, n):
        mn = min(i, m)
        c2 = Fraction(1)
        c5 = c4
        c4 = xs[i]
        for j in range(i):
            c3 = xs[i] - xs[j]
            c2 *= c3
            if j == i - 1:
                for d in range(mn, 0, -1):
                    c[i][d] = c1 * (d * c[i - 1][d - 1] - c5 * c[i - 1][d]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for d in range(mn, 0, -1):
                c[j][d] = (c4 * c[j][d] - d * c[j][d - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return [float(row[m]) for row in c]


def taylor_coefficient_fd(f, t0, k, h=0.02, half_width=6):
    """(1/k!) d^k f/dt^k at t0 from a centered (2*half_width+1)-point stencil"""
    offsets = range(-half_width, half_width + 1)
    weights = fd_weights(k, offsets)
    total = sum(w * f(t0 + i * h) for w, i in zip(weights, offsets))
    return total / h ** k / math.factorial(k)
