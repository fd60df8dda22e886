"""Airy evaluator: frozen-table accuracy, ODE residual, envelope functions."""

from __future__ import annotations

import numpy as np
import pytest
from numpy.testing import assert_allclose

import _reference as ref
from diatomic_waves import (
    AIRY_AI_PRIME_ZERO,
    AIRY_AI_ZERO,
    ConfigError,
    airy_ai,
    airy_ai_pair,
    airy_ai_prime,
    airy_ai_scaled,
    envelope_amplitude,
)


def test_origin_values_match_closed_form():
    ai0, aip0 = airy_ai_pair(0.0)
    assert_allclose(ai0, ref.AIRY_TABLE[0.0][0], atol=1e-13)
    assert_allclose(aip0, ref.AIRY_TABLE[0.0][1], atol=1e-13)
    assert_allclose(AIRY_AI_ZERO, ref.AIRY_TABLE[0.0][0], atol=1e-15)
    assert_allclose(AIRY_AI_PRIME_ZERO, ref.AIRY_TABLE[0.0][1], atol=1e-15)


def test_values_against_frozen_table():
    z = np.array(sorted(ref.AIRY_TABLE))
    ai_ref = np.array([ref.AIRY_TABLE[v][0] for v in sorted(ref.AIRY_TABLE)])
    aip_ref = np.array([ref.AIRY_TABLE[v][1] for v in sorted(ref.AIRY_TABLE)])
    ai, aip = airy_ai_pair(z)
    assert_allclose(ai, ai_ref, rtol=1e-11, atol=1e-13)
    assert_allclose(aip, aip_ref, rtol=1e-11, atol=1e-13)
    # scalar front-ends agree with the pair
    assert airy_ai(1.3) == ai[list(sorted(ref.AIRY_TABLE)).index(1.3)]
    assert airy_ai_prime(1.3) == aip[list(sorted(ref.AIRY_TABLE)).index(1.3)]


def test_branch_switch_is_seamless():
    # the two branches meeting at the switchover must agree after removing
    # the function's own first-order variation over the 2-eps interval
    # (Ai'' = z Ai supplies the slope of Ai')
    eps = 1e-9
    for z0 in (7.4, -7.4):
        below = airy_ai_pair(z0 - eps)
        above = airy_ai_pair(z0 + eps)
        ai_mid, aip_mid = airy_ai_pair(z0)
        jump_ai = (above[0] - below[0]) - 2.0 * eps * aip_mid
        jump_aip = (above[1] - below[1]) - 2.0 * eps * z0 * ai_mid
        assert abs(jump_ai) < 5e-11
        assert abs(jump_aip) < 5e-11


def test_ode_residual_finite_differences():
    # |Ai''(z) - z Ai(z)| via central differences, absolute residual
    z = np.linspace(-20.0, 5.0, 301)
    eps = 1e-3
    ai_m = airy_ai(z - eps)
    ai_0 = airy_ai(z)
    ai_p = airy_ai(z + eps)
    residual = (ai_m - 2.0 * ai_0 + ai_p) / eps**2 - z * ai_0
    assert np.max(np.abs(residual)) <= 1e-4


def test_derivative_consistency():
    # FD quotient amplifies the evaluator's absolute noise by 1/(2 eps),
    # so the comparison needs an absolute floor alongside the 1e-6 target
    z = np.linspace(-15.0, 8.0, 47)
    eps = 1e-6
    fd = (airy_ai(z + eps) - airy_ai(z - eps)) / (2.0 * eps)
    assert_allclose(fd, airy_ai_prime(z), rtol=1e-6, atol=1e-8)


def test_positive_axis_decay_monotone():
    z = np.linspace(5.0, 50.0, 200)
    ai = airy_ai(z)
    assert np.all(ai > 0.0)
    assert np.all(np.diff(ai) < 0.0)


def test_scaled_variant():
    # relative floor ~1.5e-10 right at the series/asymptotic crossover
    # (z ~ 6), far below it elsewhere
    z = np.array(sorted(ref.AIRY_SCALED_TABLE))
    expected = np.array([ref.AIRY_SCALED_TABLE[v] for v in sorted(ref.AIRY_SCALED_TABLE)])
    assert_allclose(airy_ai_scaled(z), expected, rtol=1e-9)
    # overflow-free far beyond the plain evaluator's range
    assert np.isfinite(airy_ai_scaled(1e6))
    with pytest.raises(ConfigError):
        airy_ai_scaled(-0.5)


def test_scaled_consistency_with_plain():
    # the two evaluators use different branches on z in (6, 7.4), where
    # they agree to the branches' common accuracy, not to round-off
    z = np.linspace(0.0, 8.0, 17)
    expected = airy_ai(z) * np.exp((2.0 / 3.0) * z**1.5)
    assert_allclose(airy_ai_scaled(z), expected, rtol=1e-8)


# ---------------------------------------------------------------------------
# envelope amplitudes A_pm
# ---------------------------------------------------------------------------

def test_envelope_frozen_values():
    for y, expected in ref.ENVELOPE_PLUS_TABLE.items():
        got = envelope_amplitude(y, +1)
        assert_allclose(got.real, expected.real, rtol=1e-11, atol=1e-13)
        assert_allclose(got.imag, expected.imag, rtol=1e-11, atol=1e-13)


def test_envelope_conjugate_pair():
    y = np.array([0.2, 1.0, 7.5, 80.0])
    plus = envelope_amplitude(y, +1)
    minus = envelope_amplitude(y, -1)
    assert_allclose(plus, np.conj(minus), rtol=1e-14)


def test_envelope_wkb_matching():
    # |A_pm(y) - e^{pm i (y - pi/4)}| = O(1/y): fitted log-log slope
    y = np.geomspace(10.0, 500.0, 12)
    for sign in (+1, -1):
        err = np.abs(
            envelope_amplitude(y, sign) - np.exp(sign * 1j * (y - np.pi / 4.0))
        )
        slope = np.polyfit(np.log(y), np.log(err), 1)[0]
        assert slope <= -0.9
        assert np.max(err * y) < 1.0  # fitted constant C stays small


def test_envelope_phase_at_large_y():
    got = np.angle(envelope_amplitude(30.0, +1))
    expected = np.mod(30.0 - np.pi / 4.0, 2.0 * np.pi)
    diff = np.mod(got - expected + np.pi, 2.0 * np.pi) - np.pi
    assert abs(diff) < 0.05


def test_envelope_modulus_tends_to_one():
    y = np.array([50.0, 200.0, 1000.0])
    mods = np.abs(envelope_amplitude(y, -1))
    assert_allclose(mods, 1.0, atol=2e-2)
    assert abs(mods[-1] - 1.0) < abs(mods[0] - 1.0)


def test_envelope_argument_validation():
    with pytest.raises(ConfigError):
        envelope_amplitude(0.0, +1)
    with pytest.raises(ConfigError):
        envelope_amplitude(-1.0, -1)
    with pytest.raises(ConfigError):
        envelope_amplitude(1.0, 2)
