#!/usr/bin/python
#-*- coding: utf-8 -*-
"""
Adomian (ADM) and Laplace (LDM) decomposition baselines

u = sum_k u_k with every component a polynomial in t whose coefficients are
TruncatedSeries in x. Both methods integrate the same Adomian polynomial A_k;
LDM routes the integral through the s-domain (t^n <-> n!/s^(n+1)).
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.special import factorial

from .fde_model import initial_condition
from .series_core import DerivativeBudgetError, MulCounter, NonFiniteError, add, differentiate, eval_at, scale


class LaplaceImageError(ValueError):
    pass


@dataclass
class TPolyComponent:
    index: int
    terms: dict = field(default_factory=dict)  # t-power -> TruncatedSeries

    def coefficient(self, n):
        return self.terms.get(n)

    def powers(self):
        return sorted(self.terms)

    def off_power_mass(self):
        """Largest |coefficient| over t-powers other than the component index"""
        mass = 0.0
        for n, S in self.terms.items():
            if n != self.index:
                mass = max(mass, float(abs(S.coeffs[:S.valid_order + 1]).max()))
        return mass


@dataclass
class LaplaceImage:
    """sum over exponents e of weights[e] * terms[e] / s^e"""
    terms: dict = field(default_factory=dict)    # exponent -> TruncatedSeries
    weights: dict = field(default_factory=dict)  # exponent -> exact Fraction, 1 when absent

    def weight(self, exponent):
        return Fraction(self.weights.get(exponent, 1))

    def coefficient(self, exponent):
        return scale(self.terms[exponent], float(self.weight(exponent)))


# ==================== T-POLYNOMIAL ARITHMETIC ====================

def _accumulate(terms, n, S):
    terms[n] = add(terms[n], S) if n in terms else S


def tpoly_add(p, q, index=None):
    terms = dict(p.terms)
    for n, S in q.terms.items():
        _accumulate(terms, n, S)
    return TPolyComponent(p.index if index is None else index, terms)


def tpoly_mul(p, q, counter, index=None):
    terms = {}
    for n1, S1 in sorted(p.terms.items()):
        for n2, S2 in sorted(q.terms.items()):
            _accumulate(terms, n1 + n2, counter.mul(S1, S2))
    return TPolyComponent(p.index + q.index if index is None else index, terms)


def tpoly_scale(p, alpha, counter):
    return TPolyComponent(p.index, {n: counter.scale(S, alpha) for n, S in p.terms.items()})


def tpoly_dx(p):
    return TPolyComponent(p.index, {n: differentiate(S) for n, S in p.terms.items()})


def _tpoly_sum(polys, index):
    total = TPolyComponent(index, {})
    for poly in polys:
        total = tpoly_add(total, poly, index=index)
    return total


# ==================== ADOMIAN POLYNOMIALS ====================

def adomian_polynomial(components, k, counter=None):
    """
    A_k for the combined nonlinearity of the u-form equation

        -2 sum_{i+j+l=k} u_i u_j d_x u_l + sum_{i+j=k} d_x u_i d_x u_j
        + 1/2 sum_{i+j=k} u_i d_xx u_j

    For these polynomial nonlinearities the Adomian polynomials are exactly
    the index convolutions above. The triple sum is grouped through the
    squares P_m = sum_{i+j=m} u_i u_j, in the same order as the RDTM step.
    """
    counter = MulCounter() if counter is None else counter
    if len(components) < k + 1:
        raise ValueError(f"need components u_0..u_{k}, got {len(components)}")

    parts = components[:k + 1]
    for comp in parts:
        for S in comp.terms.values():
            if S.valid_order < 2:
                raise DerivativeBudgetError(
                    f"derivative budget exhausted at k={k}: u_{comp.index} has valid_order "
                    f"{S.valid_order}", k=k)

    first = [tpoly_dx(u) for u in parts]
    second = [tpoly_dx(du) for du in first]

    squares = [_tpoly_sum([tpoly_mul(parts[r], parts[m - r], counter) for r in range(m + 1)], m)
               for m in range(k + 1)]
    convective = _tpoly_sum([tpoly_mul(squares[m], first[k - m], counter) for m in range(k + 1)], k)
    gradient = _tpoly_sum([tpoly_mul(first[i], first[k - i], counter) for i in range(k + 1)], k)
    curvature = _tpoly_sum([tpoly_mul(parts[i], second[k - i], counter) for i in range(k + 1)], k)

    result = tpoly_add(tpoly_scale(convective, -2.0, counter), gradient, index=k)
    return tpoly_add(result, tpoly_scale(curvature, 0.5, counter), index=k)


class LambdaSeries:
    """
    Truncated power series in the bookkeeping parameter lambda whose
    coefficients are t-polynomials; reference definition of A_k
    """

    def __init__(self, coeffs, counter=None):
        self.coeffs = list(coeffs)
        self.counter = MulCounter() if counter is None else counter

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        return LambdaSeries([tpoly_add(a, b, index=n)
                             for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs))], self.counter)

    def __mul__(self, other):
        if isinstance(other, LambdaSeries):
            coeffs = []
            for n in range(min(self.order, other.order) + 1):
                coeffs.append(_tpoly_sum([tpoly_mul(self.coeffs[r], other.coeffs[n - r], self.counter, index=n)
                                          for r in range(n + 1)], n))
            return LambdaSeries(coeffs, self.counter)
        return LambdaSeries([tpoly_scale(a, float(other), self.counter) for a in self.coeffs], self.counter)

    __rmul__ = __mul__

    def dx(self):
        return LambdaSeries([tpoly_dx(a) for a in self.coeffs], self.counter)


def fde_nonlinearity(v):
    return (-2.0) * (v * v * v.dx()) + v.dx() * v.dx() + 0.5 * (v * v.dx().dx())


def adomian_by_lambda(components, k, nonlinearity=fde_nonlinearity):
    """A_k = (1/k!) d^k/dlambda^k N(sum u_i lambda^i) at 0, by Taylor arithmetic in lambda"""
    v = LambdaSeries(components[:k + 1])
    return nonlinearity(v).coeffs[k]


# ==================== ADM ====================

def adm_next_component(components, k, counter=None):
    """u_{k+1} = int_0^t A_k dt': t^n -> t^(n+1)/(n+1)"""
    counter = MulCounter() if counter is None else counter
    A = adomian_polynomial(components, k, counter)
    return TPolyComponent(k + 1, {n + 1: counter.scale(S, 1.0 / (n + 1))
                                  for n, S in sorted(A.terms.items())})


# ==================== LDM ====================

def laplace_of_tpoly(p, counter=None):
    """t^n -> n!/s^(n+1); n! is kept as an exact weight on the image term"""
    counter = MulCounter() if counter is None else counter
    terms, weights = {}, {}
    for n, S in sorted(p.terms.items()):
        terms[n + 1] = S
        weights[n + 1] = counter.weigh(Fraction(1), factorial(n, exact=True))
    return LaplaceImage(terms, weights)


def inverse_laplace(img, counter=None, index=0):
    """1/s^(n+1) -> t^n/n!, applying weight/n! as one rounded scaling"""
    counter = MulCounter() if counter is None else counter
    terms = {}
    for exponent, S in sorted(img.terms.items()):
        if int(exponent) != exponent or exponent < 1:
            raise LaplaceImageError(f"exponent must be an integer >= 1, got {exponent!r}")
        n = int(exponent) - 1
        terms[n] = counter.scale(S, float(img.weight(exponent) / factorial(n, exact=True)))
    return TPolyComponent(index, terms)


def ldm_next_component(components, k, counter=None):
    """u_{k+1} = L^-1[ (1/s) L[A_k] ]"""
    counter = MulCounter() if counter is None else counter
    A = adomian_polynomial(components, k, counter)
    image = laplace_of_tpoly(A, counter)
    shifted = LaplaceImage({exponent + 1: S for exponent, S in image.terms.items()},
                           {exponent + 1: w for exponent, w in image.weights.items()})
    return inverse_laplace(shifted, counter, index=k + 1)


# ==================== ASSEMBLY ====================

NEXT_COMPONENT = {
    'adm': adm_next_component,
    'ldm': ldm_next_component,
}


def build_components(p, center, method='adm', counter=None, terms=None):
    if method not in NEXT_COMPONENT:
        raise ValueError(f"unknown decomposition method {method!r}")
    K = p.terms if terms is None else terms
    step = NEXT_COMPONENT[method]
    counter = MulCounter() if counter is None else counter

    components = [TPolyComponent(0, {0: initial_condition(p, center, p.series_order(K))})]
    for k in range(K):
        components.append(step(components, k, counter))
    return components


def assemble_partial_sum(components, t):
    total = 0.0
    try:
        for comp in components:
            for n, S in sorted(comp.terms.items()):
                total += eval_at(S, S.center) * t ** n
    except OverflowError as e:
        raise NonFiniteError(f"partial sum overflows at t = {t}") from e
    if not math.isfinite(total):
        raise NonFiniteError(f"partial sum is not finite at t = {t}: {total!r}")
    return total
