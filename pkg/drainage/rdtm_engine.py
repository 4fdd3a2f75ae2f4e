#!/usr/bin/python
#-*- coding: utf-8 -*-
"""
Reduced differential transform engine

Spectra U_0..U_K are generated at one expansion center by

    (k+1) U_{k+1} = convolved_nonlinearity(U_0..U_k, k)

and the solution at (center, t) is the partial sum sum_k U_k(center) t^k.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .fde_model import Problem, convolved_nonlinearity, initial_condition, square_term
from .series_core import DerivativeBudgetError, MulCounter, NonFiniteError, scale, shift_monomial, zero_series


@dataclass
class SpectrumSequence:
    problem: Problem
    center: float
    spectra: list = field(default_factory=list)
    # P_m = sum_r U_r U_{m-r}, filled as the spectra grow
    squares: list = field(default_factory=list)

    def __len__(self):
        return len(self.spectra)

    def __iter__(self):
        return iter(self.spectra)

    def __getitem__(self, k):
        return self.spectra[k]

    @property
    def terms(self):
        return len(self.spectra) - 1

    def center_values(self):
        return np.array([U.value for U in self.spectra])


# ==================== RECURRENCE ====================

def next_spectrum(seq, counter=None):
    counter = MulCounter() if counter is None else counter
    k = seq.terms
    if seq[k].valid_order < 2:
        raise DerivativeBudgetError(
            f"derivative budget exhausted at k={k}: valid_order {seq[k].valid_order} < 2", k=k)

    for m in range(len(seq.squares), k + 1):
        seq.squares.append(square_term(seq.spectra, m, counter))

    rhs = convolved_nonlinearity(seq.spectra, k, squares=seq.squares, counter=counter)
    return counter.scale(rhs, 1.0 / (k + 1))


def build_spectra(p, center, counter=None, terms=None):
    K = p.terms if terms is None else terms
    seq = SpectrumSequence(p, float(center), [initial_condition(p, center, p.series_order(K))])
    for _ in range(K):
        seq.spectra.append(next_spectrum(seq, counter))
    return seq


def partial_sum_at(seq, t):
    # only the center values are used: there the expansions are exact
    with np.errstate(over='ignore', invalid='ignore'):
        value = float(P.polyval(t, seq.center_values()))
    if not math.isfinite(value):
        raise NonFiniteError(f"partial sum at center {seq.center} is not finite at t = {t}: {value!r}")
    return value


def solve_grid(p, xs, t, max_workers=1):
    def solve_point(x):
        return partial_sum_at(build_spectra(p, x), t)

    if max_workers <= 1:
        return [solve_point(x) for x in xs]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(solve_point, xs))


def partial_sum_evaluator(p):
    """(x, t) -> recentered partial sum, for stencil-based residuals"""
    return lambda x, t: partial_sum_at(build_spectra(p, x), t)


# ==================== TRANSFORM RULES ====================

def time_derivative_spectrum(seq, r, k):
    """Spectrum of d^r u/dt^r: (k+1)...(k+r) U_{k+r}"""
    if r < 0 or k < 0:
        raise ValueError(f"r and k must be >= 0, got r={r}, k={k}")
    if k + r > seq.terms:
        raise IndexError(f"U_{k + r} not built (sequence holds U_0..U_{seq.terms})")
    return scale(seq[k + r], float(math.prod(range(k + 1, k + r + 1))))


def monomial_times_spectrum(seq, m, n, k):
    """Spectrum of x^m t^n u: x^m U_{k-n}, zero for k < n"""
    if min(m, n, k) < 0:
        raise ValueError(f"m, n, k must be >= 0, got {(m, n, k)}")
    if k < n:
        return zero_series(seq.center, seq[0].order)
    return shift_monomial(seq[k - n], m)


# ==================== RESIDUAL ====================

def series_residual(seq, t):
    """
    Residual of the u-form equation for the partial sum at the center

    u, u_x, u_xx come from the first three x-coefficients of every spectrum,
    u_t from k U_k t^(k-1); no finite differences are involved.
    """
    for k, U in enumerate(seq):
        if U.valid_order < 2:
            raise DerivativeBudgetError(
                f"U_{k} has valid_order {U.valid_order}; residual needs 2 (raise the guard)", k=k)

    coeffs = np.array([U.coeffs[:3] for U in seq])
    u = P.polyval(t, coeffs[:, 0])
    u_x = P.polyval(t, coeffs[:, 1])
    u_xx = P.polyval(t, 2.0 * coeffs[:, 2])
    u_t = P.polyval(t, P.polyder(coeffs[:, 0])) if len(seq) > 1 else 0.0
    return float(u_t + 2 * u * u * u_x - u_x * u_x - 0.5 * u * u_xx)
