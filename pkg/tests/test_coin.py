import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebwalk.coin import (IDENTITY_2, CoinParameters, eval_b_of_z,
                           eval_c_of_z, paraconjugate_c)

SQRT_HALF = math.sqrt(0.5)

angles = st.floats(min_value=-math.pi, max_value=math.pi)


def random_coins(seed, count):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        beta, gamma, delta, alpha = rng.uniform(-math.pi, math.pi, size=4)
        yield CoinParameters.from_angles(beta, gamma, delta, alpha)


def test_from_angles_balanced_coin():
    coin = CoinParameters.from_angles(math.pi / 4)
    assert coin.a == pytest.approx(SQRT_HALF, abs=1e-15)
    assert coin.b == pytest.approx(SQRT_HALF, abs=1e-15)


def test_from_angles_pure_shift_coin():
    coin = CoinParameters.from_angles(0.0, 0.0, 0.0, 0.0)
    assert coin.a == 1.0
    assert coin.b == 0.0


def test_from_angles_figure_coin():
    coin = CoinParameters.from_angles(math.pi / 8)
    assert coin.a == pytest.approx(math.cos(math.pi / 8), abs=1e-15)
    assert coin.b == pytest.approx(math.sin(math.pi / 8), abs=1e-15)


def test_from_angles_rejects_non_finite():
    with pytest.raises(ValueError):
        CoinParameters.from_angles(math.nan)


@given(beta=angles, gamma=angles, delta=angles, alpha=angles)
def test_amplitudes_normalized_and_consistent(beta, gamma, delta, alpha):
    coin = CoinParameters.from_angles(beta, gamma, delta, alpha)
    assert abs(abs(coin.a) ** 2 + abs(coin.b) ** 2 - 1.0) <= 1e-12
    assert abs(coin.a - math.cos(coin.beta) * cmath.exp(-1j * coin.gamma)) <= 1e-14
    assert abs(coin.b - math.sin(coin.beta) * cmath.exp(-1j * coin.delta)) <= 1e-14
    for stored in (coin.beta, coin.gamma, coin.delta, coin.alpha):
        assert -math.pi < stored <= math.pi


def test_from_amplitudes_trivial():
    coin = CoinParameters.from_amplitudes(1.0, 0.0, 0.0)
    assert (coin.beta, coin.gamma, coin.delta) == (0.0, 0.0, 0.0)


def test_from_amplitudes_balanced():
    coin = CoinParameters.from_amplitudes(SQRT_HALF, SQRT_HALF, 0.0)
    assert coin.beta == pytest.approx(math.pi / 4, abs=1e-15)
    assert coin.gamma == 0.0
    assert coin.delta == 0.0


def test_from_amplitudes_recovers_phases():
    a = 0.6 * cmath.exp(-0.3j)
    b = 0.8 * cmath.exp(-1.1j)
    coin = CoinParameters.from_amplitudes(a, b, 0.5)
    assert coin.beta == pytest.approx(math.atan2(0.8, 0.6), abs=1e-12)
    assert coin.gamma == pytest.approx(0.3, abs=1e-12)
    assert coin.delta == pytest.approx(1.1, abs=1e-12)
    assert coin.alpha == pytest.approx(0.5, abs=1e-15)


def test_from_amplitudes_rejects_unnormalized():
    with pytest.raises(ValueError):
        CoinParameters.from_amplitudes(1.0, 0.1, 0.0)


def test_vanishing_amplitude_conventions():
    # delta is unconstrained when b = 0, gamma when a = 0; both default to 0
    assert CoinParameters.from_amplitudes(-1.0, 0.0).delta == 0.0
    assert CoinParameters.from_amplitudes(0.0, 1j).gamma == 0.0


@given(phase_a=angles, phase_b=angles,
       weight=st.floats(min_value=0.0, max_value=1.0), alpha=angles)
def test_amplitude_round_trip(phase_a, phase_b, weight, alpha):
    a = math.sqrt(weight) * cmath.exp(1j * phase_a)
    b = math.sqrt(1.0 - weight) * cmath.exp(1j * phase_b)
    coin = CoinParameters.from_amplitudes(a, b, alpha)
    assert abs(coin.a - a) <= 1e-9
    assert abs(coin.b - b) <= 1e-9


@given(beta=st.floats(min_value=1e-3, max_value=math.pi / 2 - 1e-3),
       gamma=angles, delta=angles, alpha=angles)
def test_angle_round_trip_interior(beta, gamma, delta, alpha):
    coin = CoinParameters.from_angles(beta, gamma, delta, alpha)
    back = CoinParameters.from_amplitudes(coin.a, coin.b, alpha)
    assert abs(back.beta - coin.beta) <= 1e-9
    # compare phases on the circle to dodge the branch cut at +/- pi
    assert abs(math.remainder(back.gamma - coin.gamma, math.tau)) <= 1e-9
    assert abs(math.remainder(back.delta - coin.delta, math.tau)) <= 1e-9


def test_c_of_z_identity_case():
    coin = CoinParameters.from_angles(0.0)
    np.testing.assert_allclose(eval_c_of_z(coin, 1.0), IDENTITY_2, atol=1e-15)


def test_c_of_z_hand_values():
    coin = CoinParameters.from_angles(math.pi / 4)
    want = np.array([[SQRT_HALF / 2, SQRT_HALF / 2],
                     [-2 * SQRT_HALF, 2 * SQRT_HALF]])
    np.testing.assert_allclose(eval_c_of_z(coin, 2.0), want, atol=1e-15)


def test_c_of_z_on_circle_matches_momentum_operator():
    from chebwalk.momentum import s_matrix
    for coin in random_coins(7, 10):
        p = 0.9
        np.testing.assert_allclose(eval_c_of_z(coin, cmath.exp(1j * p)),
                                   s_matrix(coin, p), atol=1e-14)


def test_c_of_z_pole():
    coin = CoinParameters.from_angles(1.0)
    with pytest.raises(ValueError):
        eval_c_of_z(coin, 0.0)


def test_b_of_z_reduces_to_c_for_trivial_phase():
    coin = CoinParameters.from_angles(0.7, 0.2, -0.4, 0.0)
    z = 0.3 + 1.1j
    np.testing.assert_allclose(eval_b_of_z(coin, 1.0, z),
                               eval_c_of_z(coin, z), atol=1e-15)


def test_b_of_z_pure_phase():
    coin = CoinParameters.from_angles(0.0, 0.0, 0.0, math.pi / 2)
    np.testing.assert_allclose(eval_b_of_z(coin, 1.0, 1.0), 1j * IDENTITY_2,
                               atol=1e-15)


def test_b_of_z_scalar_factor_law():
    coin = CoinParameters.from_angles(0.9, 0.1, 0.8, 0.0)
    omega = 1.3
    z2 = 2.0 - 0.5j
    np.testing.assert_allclose(eval_b_of_z(coin, cmath.exp(1j * omega), z2),
                               cmath.exp(-1j * omega) * eval_c_of_z(coin, z2),
                               atol=1e-14)


def test_b_of_z_rejects_zero():
    coin = CoinParameters.from_angles(1.0)
    with pytest.raises(ValueError):
        eval_b_of_z(coin, 0.0, 1.0)
    with pytest.raises(ValueError):
        eval_b_of_z(coin, 1.0, 0.0)


def test_paraconjugate_inverts_c_on_and_off_circle():
    rng = np.random.default_rng(11)
    coins = list(random_coins(13, 10))
    for k in range(100):
        coin = coins[k % len(coins)]
        modulus = 1.0 if k % 2 == 0 else float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
        z = modulus * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        product = paraconjugate_c(coin, z) @ eval_c_of_z(coin, z)
        np.testing.assert_allclose(product, IDENTITY_2, atol=1e-12)


def test_unitary_on_circle():
    rng = np.random.default_rng(17)
    for coin in random_coins(19, 20):
        z = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        c = eval_c_of_z(coin, z)
        np.testing.assert_allclose(c.conj().T @ c, IDENTITY_2, atol=1e-12)


def test_unimodular_on_circle():
    rng = np.random.default_rng(23)
    for coin in random_coins(29, 20):
        z = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        assert abs(np.linalg.det(eval_c_of_z(coin, z)) - 1.0) <= 1e-12
