#!/usr/bin/env python3
"""
Tests for the Adomian and Laplace decomposition baselines
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from drainage.decomposition_engines import (LambdaSeries, LaplaceImage, LaplaceImageError, TPolyComponent,
                                            adm_next_component, adomian_by_lambda, adomian_polynomial,
                                            assemble_partial_sum, build_components, fde_nonlinearity,
                                            inverse_laplace, laplace_of_tpoly, ldm_next_component, tpoly_mul)
from drainage.fde_model import Problem, convolved_nonlinearity, exact_u, initial_condition
from drainage.rdtm_engine import build_spectra
from drainage.series_core import MulCounter, NonFiniteError, TruncatedSeries, is_zero, make_constant, zero_series


def random_series(rng, M=16, center=0.4):
    return TruncatedSeries(center, rng.uniform(-1, 1, M + 1) * 0.5 ** np.arange(M + 1), M)


def random_components(rng, k):
    # a few extra t-powers per component so the test is not limited to monomials
    comps = []
    for i in range(k + 1):
        powers = rng.choice(6, size=rng.integers(1, 3), replace=False)
        comps.append(TPolyComponent(i, {int(n): random_series(rng) for n in powers}))
    return comps


def assert_tpoly_close(a, b, atol, rtol=0.0):
    for n in set(a.powers()) | set(b.powers()):
        sa, sb = a.coefficient(n), b.coefficient(n)
        ref = sa if sa is not None else sb
        if sa is None:
            sa = zero_series(ref.center, ref.order)
        if sb is None:
            sb = zero_series(ref.center, ref.order)
        v = min(sa.valid_order, sb.valid_order) + 1
        assert_allclose(sa.coeffs[:v], sb.coeffs[:v], rtol=rtol, atol=atol)


def initial_component(p, center, K=10):
    return TPolyComponent(0, {0: initial_condition(p, center, p.series_order(K))})


# ==================== ADOMIAN POLYNOMIALS ====================

@pytest.mark.parametrize('center', [-2.0, 0.0, 0.9])
def test_first_adomian_polynomial_is_first_rdtm_step(center):
    p = Problem.tanh_wave(2.0)
    u0 = initial_component(p, center)
    A0 = adomian_polynomial([u0], 0)
    assert A0.powers() == [0]
    assert_allclose(A0.coefficient(0).coeffs, convolved_nonlinearity([u0.coefficient(0)], 0).coeffs,
                    rtol=1e-14, atol=1e-14)


def test_square_nonlinearity_fixture():
    rng = np.random.default_rng(11)
    comps = [TPolyComponent(i, {i: random_series(rng)}) for i in range(3)]
    counter = MulCounter()
    square = lambda v: v * v
    expected = [
        tpoly_mul(comps[0], comps[0], counter),
        tpoly_mul(comps[0], comps[1], counter),
        tpoly_mul(comps[0], comps[2], counter),
    ]
    assert_tpoly_close(adomian_by_lambda(comps, 0, square), expected[0], 1e-14)
    assert_allclose(adomian_by_lambda(comps, 1, square).coefficient(1).coeffs,
                    2.0 * expected[1].coefficient(1).coeffs, atol=1e-14)
    u1_sq = tpoly_mul(comps[1], comps[1], counter).coefficient(2).coeffs
    A2 = adomian_by_lambda(comps, 2, square).coefficient(2).coeffs
    assert_allclose(A2, u1_sq + 2.0 * expected[2].coefficient(2).coeffs, atol=1e-14)


def test_zero_components_give_zero_polynomial():
    comps = [TPolyComponent(i, {i: zero_series(0.0, 12)}) for i in range(4)]
    A = adomian_polynomial(comps, 3)
    assert all(is_zero(S) for S in A.terms.values())


def test_convolution_form_matches_lambda_definition():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        comps = random_components(rng, 6)
        reference = fde_nonlinearity(LambdaSeries(comps))
        for k in range(7):
            assert_tpoly_close(adomian_polynomial(comps, k), reference.coeffs[k], 1e-11)


def test_lambda_oracle_truncates_to_k():
    rng = np.random.default_rng(3)
    comps = random_components(rng, 4)
    assert_tpoly_close(adomian_by_lambda(comps, 2), adomian_polynomial(comps, 2), 1e-12)


def test_adomian_needs_components():
    with pytest.raises(ValueError):
        adomian_polynomial([initial_component(Problem.tanh_wave(1.0), 0.0)], 2)


# ==================== ADM ====================

def test_adm_first_component_at_origin():
    p = Problem.tanh_wave(1.0)
    u1 = adm_next_component([initial_component(p, 0.0)], 0)
    assert u1.powers() == [1]
    assert u1.coefficient(1).value == pytest.approx(1.0, abs=1e-15)


def test_adm_zero_polynomial_gives_zero_component():
    comps = [TPolyComponent(0, {0: make_constant(0.7, 0.0, 8)})]
    u1 = adm_next_component(comps, 0)
    assert all(is_zero(S) for S in u1.terms.values())


def test_adm_logistic_second_component():
    comps = build_components(Problem.logistic_front(terms=2), 0.0)
    assert comps[2].coefficient(2).value == pytest.approx(0.0, abs=1e-17)


@pytest.mark.parametrize('method', ['adm', 'ldm'])
@pytest.mark.parametrize('center', [-7.0, -2.5, 0.0])
def test_components_are_monomials(method, center):
    comps = build_components(Problem.tanh_wave(1.0), center, method)
    for k, comp in enumerate(comps):
        assert comp.index == k
        assert comp.powers() == [k]
        assert comp.off_power_mass() <= 1e-13


@pytest.mark.parametrize('p', [Problem.tanh_wave(1.0), Problem.logistic_front()], ids=['tanh', 'logistic'])
@pytest.mark.parametrize('center', [-6.0, -1.0, 0.0, 0.4])
def test_adm_matches_rdtm(p, center):
    # same grouping of the convective sum, so the floats agree exactly
    comps = build_components(p, center, 'adm')
    seq = build_spectra(p, center)
    for k, comp in enumerate(comps):
        assert_array_equal(comp.coefficient(k).coeffs, seq[k].coeffs)


# ==================== LAPLACE ====================

def test_laplace_examples():
    one = TPolyComponent(0, {0: make_constant(1.0, 0.0, 3)})
    assert laplace_of_tpoly(one).coefficient(1).value == 1.0
    quad = TPolyComponent(2, {2: make_constant(0.3, 0.0, 3)})
    image = laplace_of_tpoly(quad)
    assert list(image.terms) == [3]
    assert image.weight(3) == 2
    assert image.coefficient(3).value == pytest.approx(0.6)


def test_inverse_laplace_examples():
    back = inverse_laplace(LaplaceImage({1: make_constant(1.0, 0.0, 2)}))
    assert back.powers() == [0] and back.coefficient(0).value == 1.0
    cubic = inverse_laplace(LaplaceImage({4: make_constant(6.0, 0.0, 2)}))
    assert cubic.powers() == [3] and cubic.coefficient(3).value == 1.0


@pytest.mark.parametrize('exponent', [0, 2.5, -1])
def test_inverse_laplace_rejects_bad_exponents(exponent):
    with pytest.raises(LaplaceImageError):
        inverse_laplace(LaplaceImage({exponent: make_constant(1.0, 0.0, 2)}))


def test_laplace_round_trip():
    rng = np.random.default_rng(8)
    for _ in range(20):
        powers = rng.choice(13, size=4, replace=False)
        p = TPolyComponent(3, {int(n): random_series(rng, M=6) for n in powers})
        q = inverse_laplace(laplace_of_tpoly(p), index=3)
        assert q.powers() == p.powers()
        for n in p.powers():
            assert_allclose(q.coefficient(n).coeffs, p.coefficient(n).coeffs, rtol=1e-15, atol=0)


def test_round_trip_of_adm_component():
    comps = build_components(Problem.tanh_wave(1.0, terms=4), -0.5)
    back = inverse_laplace(laplace_of_tpoly(comps[4]), index=4)
    assert_tpoly_close(back, comps[4], 0.0, rtol=1e-15)


# ==================== LDM ====================

@pytest.mark.parametrize('p', [Problem.tanh_wave(1.0), Problem.logistic_front()], ids=['tanh', 'logistic'])
@pytest.mark.parametrize('center', [-1.5, -1.0, 0.4])
def test_ldm_equals_adm(p, center):
    adm = build_components(p, center, 'adm')
    ldm = build_components(p, center, 'ldm')
    for a, b in zip(adm, ldm):
        assert a.powers() == b.powers()
        for n in a.powers():
            assert_array_equal(a.coefficient(n).coeffs, b.coefficient(n).coeffs)


def test_ldm_step_matches_adm_step():
    comps = build_components(Problem.tanh_wave(1.0, terms=3), 0.2)
    assert_tpoly_close(ldm_next_component(comps, 3), adm_next_component(comps, 3), 1e-15, rtol=1e-14)


def test_ldm_zero_polynomial_gives_zero():
    comps = [TPolyComponent(0, {0: make_constant(-1.0, 0.0, 8)})]
    assert all(is_zero(S) for S in ldm_next_component(comps, 0).terms.values())


def test_decomposition_error_at_origin():
    p = Problem.tanh_wave(3.0, terms=10)
    for method in ('adm', 'ldm'):
        value = assemble_partial_sum(build_components(p, 0.0, method), 0.1)
        assert abs(value - exact_u(p, 0.0, 0.1)) == pytest.approx(1.0317037658e-5, abs=1e-9)


# ==================== ASSEMBLY ====================

def test_assemble_at_zero_time():
    p = Problem.tanh_wave(3.0)
    comps = build_components(p, -2.0)
    assert assemble_partial_sum(comps, 0.0) == comps[0].coefficient(0).value


def test_assemble_overflow_is_non_finite():
    comps = build_components(Problem.tanh_wave(3.0), -1.0)
    with pytest.raises(NonFiniteError):
        assemble_partial_sum(comps, 1e40)


@pytest.mark.parametrize('x, value', [(-10.0, 0.4999557229), (-5.0, 0.4934713173),
                                      (-1.0, 0.2359453940), (0.0, 0.006249674499)])
def test_logistic_table_values(x, value):
    p = Problem.logistic_front(terms=10)
    for method in ('adm', 'ldm'):
        assert assemble_partial_sum(build_components(p, x, method), 0.1) == pytest.approx(value, abs=5e-9)


# ==================== COSTS ====================

@pytest.mark.parametrize('K, rdtm, adm, ldm', [(5, 75, 95, 100), (10, 250, 415, 425)])
def test_multiplication_counts(K, rdtm, adm, ldm):
    p = Problem.tanh_wave(3.0)
    counts = {}
    for method in ('adm', 'ldm'):
        counter = MulCounter()
        build_components(p, 0.0, method, counter, terms=K)
        counts[method] = counter.total
    counter = MulCounter()
    build_spectra(p, 0.0, counter, terms=K)
    counts['rdtm'] = counter.total
    assert counts == {'rdtm': rdtm, 'adm': adm, 'ldm': ldm}


def test_unknown_method():
    with pytest.raises(ValueError):
        build_components(Problem.tanh_wave(1.0), 0.0, 'vim')
