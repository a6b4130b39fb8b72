import math
import random

import pytest

from ecsc import (CoulombState, PhysicalParams, QuantumNumbers, e1_closed,
                  e1_general, e1_quadrature, e2_closed, e2_quadrature,
                  total_energy, w1_closed, w1_quadrature, w2_closed,
                  w2_coefficients, w2_quadrature)
from ecsc.coulomb import base_superpotential
from ecsc.perturbation import w1_closed_prime, w2_closed_prime
from ecsc.errors import PoleError, UnsupportedConfigError, UnsupportedStateError


def test_e1_closed_values():
    assert e1_closed(PhysicalParams.atomic(0.01), QuantumNumbers(0, 0)) \
        == pytest.approx(-1e-6, rel=1e-12)
    assert e1_closed(PhysicalParams.atomic(0.0), QuantumNumbers(0, 0)) == 0.0
    assert e1_closed(PhysicalParams.atomic(0.01), QuantumNumbers(1, 0)) \
        == pytest.approx(-1.4e-5, rel=1e-12)


def test_e1_closed_out_of_range():
    with pytest.raises(UnsupportedStateError):
        e1_closed(PhysicalParams.atomic(0.01), QuantumNumbers(3, 0))


def test_e1_general_reduces_to_closed():
    for n in (0, 1, 2):
        for l in (0, 1, 2, 3):
            for d in (0.01, 0.05, 0.1):
                p = PhysicalParams.atomic(d)
                qn = QuantumNumbers(n, l)
                assert e1_general(p, qn) == pytest.approx(e1_closed(p, qn), rel=1e-14)


def test_e1_general_beyond_closed_forms():
    p = PhysicalParams.atomic(0.01)
    qn = QuantumNumbers(3, 0)
    assert e1_general(p, qn) == pytest.approx(-(1e-6 / 3.0) * 648.0, rel=1e-12)
    assert e1_quadrature(p, qn) == pytest.approx(e1_general(p, qn), abs=1e-12)


def test_e1_quadrature_values():
    p = PhysicalParams.atomic(0.02)
    assert e1_quadrature(p, QuantumNumbers(0, 0)) == pytest.approx(-8e-6, abs=1e-12)
    p = PhysicalParams.atomic(0.05)
    assert e1_quadrature(p, QuantumNumbers(0, 2)) == pytest.approx(-5.25e-3, abs=1e-12)


def test_w1_closed_values():
    p = PhysicalParams.atomic(0.1)
    assert w1_closed(p, QuantumNumbers(0, 0), 0.0) == 0.0
    assert w1_closed(p, QuantumNumbers(0, 0), 1.0) \
        == pytest.approx(-1e-3 / math.sqrt(2.0), rel=1e-12)
    assert w1_closed(p, QuantumNumbers(1, 0), 2.0) \
        == pytest.approx(-(2 * 1e-3 * 2 / (3 * math.sqrt(2.0))) * 8.0, rel=1e-12)


def test_w1_hierarchy_reduction():
    # the single-formula W^(1) reproduces the per-n transcriptions
    # (N = l+1, l+2, l+3) at random (r, delta) points to 1e-13 relative
    rng = random.Random(42)
    hb = m = A = 1.0
    for _ in range(20):
        r = rng.uniform(0.1, 20.0)
        d = rng.uniform(0.005, 0.1)
        p = PhysicalParams.atomic(d)
        for n, l in ((0, 0), (0, 1), (1, 0), (1, 2), (2, 0), (2, 1)):
            N = n + l + 1
            expect = -(hb * N * d ** 3 * r / (3.0 * math.sqrt(2.0 * m))) \
                * (r + hb ** 2 * N * (N + 1) / (A * m))
            got = w1_closed(p, QuantumNumbers(n, l), r)
            assert abs(got - expect) <= 1e-13 * abs(expect)


def test_w1_quadrature_matches_closed():
    for d, r in ((0.05, 1.0), (0.02, 5.0)):
        p = PhysicalParams.atomic(d)
        state = CoulombState(p, QuantumNumbers(0, 0))
        e1 = e1_closed(p, state.qn)
        assert w1_quadrature(state, e1, r) \
            == pytest.approx(w1_closed(p, state.qn, r), abs=1e-9)


def test_w1_quadrature_pole_guard():
    p = PhysicalParams.atomic(0.05)
    state = CoulombState(p, QuantumNumbers(1, 0))
    with pytest.raises(PoleError):
        w1_quadrature(state, e1_closed(p, state.qn), 2.0)


def test_e2_closed_values():
    p = PhysicalParams.atomic(0.01)
    assert e2_closed(p, QuantumNumbers(0, 0)) \
        == pytest.approx((30.0 / 24.0) * 1e-8 - (258.0 / 72.0) * 1e-12, rel=1e-12)
    assert e2_closed(PhysicalParams.atomic(0.0), QuantumNumbers(0, 0)) == 0.0
    assert e2_closed(p, QuantumNumbers(1, 0)) \
        == pytest.approx((8 * 11 * 3 * 5 / 24.0) * 1e-8
                         - (64 * 3 * 3 * 211 / 72.0) * 1e-12, rel=1e-12)
    with pytest.raises(UnsupportedStateError):
        e2_closed(p, QuantumNumbers(3, 0))


def test_e2_quadrature_matches_closed():
    for d, l in ((0.04, 0), (0.05, 2)):
        p = PhysicalParams.atomic(d)
        state = CoulombState(p, QuantumNumbers(0, l))
        e1 = e1_closed(p, state.qn)
        assert e2_quadrature(state, e1) \
            == pytest.approx(e2_closed(p, state.qn), abs=1e-10)


def test_e2_quadrature_independent_w1_route():
    p = PhysicalParams.atomic(0.05)
    state = CoulombState(p, QuantumNumbers(0, 0))
    e1 = e1_closed(p, state.qn)
    got = e2_quadrature(state, e1, w1_path="quadrature")
    assert got == pytest.approx(e2_closed(p, state.qn), abs=1e-10)


def test_e2_quadrature_rejects_excited_states():
    p = PhysicalParams.atomic(0.05)
    state = CoulombState(p, QuantumNumbers(1, 0))
    with pytest.raises(UnsupportedStateError):
        e2_quadrature(state, e1_closed(p, state.qn))


def test_w2_coefficients_values():
    co = w2_coefficients(PhysicalParams.atomic(0.05), 0)
    assert co.a == pytest.approx(-2.98250, abs=1e-12)
    assert co.b == pytest.approx(-7.44625, abs=1e-12)
    assert co.c == pytest.approx(1.0 / 9.0, rel=1e-15)
    assert co.d == pytest.approx(co.b + 6.0 / 0.05, rel=1e-15)


def test_w2_closed_regular_at_origin():
    # the regular solution carries no additive constant: W^(2)(0) = 0
    for l in (0, 1, 2):
        assert w2_closed(PhysicalParams.atomic(0.05), l, 0.0) == 0.0


def test_w2_quadrature_matches_closed():
    p = PhysicalParams.atomic(0.05)
    state = CoulombState(p, QuantumNumbers(0, 0))
    e2 = e2_closed(p, state.qn)
    for r in (0.5, 2.0, 6.0):
        wq = w2_quadrature(state, e2, r)
        wc = w2_closed(p, 0, r)
        assert wq == pytest.approx(wc, abs=1e-12)


def _riccati_residuals(l, d, r):
    p = PhysicalParams.atomic(d)
    qn = QuantumNumbers(0, l)
    state = CoulombState(p, qn)
    c = p.hbar / math.sqrt(2.0 * p.mass)
    A = p.strength_A
    w0 = base_superpotential(state, r)
    w1 = w1_closed(p, qn, r)
    w2 = w2_closed(p, l, r)
    res1 = 2 * w0 * w1 - c * w1_closed_prime(p, qn, r) \
        - (-(A * d ** 3 / 3.0) * r * r - e1_closed(p, qn))
    res2 = w1 * w1 + 2 * w0 * w2 - c * w2_closed_prime(p, l, r) \
        - ((A * d ** 4 / 6.0) * r ** 3 - e2_closed(p, qn))
    return res1, res2


def test_riccati_residuals_first_and_second_order():
    for l in (0, 1):
        scale1 = scale2 = 0.0
        worst1 = worst2 = 0.0
        for i in range(200):
            r = 0.1 + (20.0 - 0.1) * i / 199.0
            res1, res2 = _riccati_residuals(l, 0.05, r)
            worst1 = max(worst1, abs(res1))
            worst2 = max(worst2, abs(res2))
            p = PhysicalParams.atomic(0.05)
            scale1 = max(scale1, abs((0.05 ** 3 / 3.0) * r * r))
            scale2 = max(scale2, abs((0.05 ** 4 / 6.0) * r ** 3))
        assert worst1 <= 1e-6 * scale1
        assert worst2 <= 1e-6 * scale2


def test_scaling_laws():
    d = 0.05
    for A in (1.0, 3.0):
        pa = PhysicalParams(A, d, 1.0)
        pb = PhysicalParams(2.0 * A, d, 1.0)
        qn = QuantumNumbers(0, 0)
        # e1 ~ delta^3 / A
        assert e1_closed(pb, qn) == pytest.approx(e1_closed(pa, qn) / 2.0, rel=1e-12)

        # the delta^4 part of e2 ~ delta^4 / A^2; extract it from two deltas
        def quartic(p):
            e_full = e2_closed(p, qn)
            e_half = e2_closed(p.with_delta(d / 2.0), qn)
            return (64.0 * e_half - e_full) / (3.0 * d ** 4)

        assert quartic(pb) == pytest.approx(quartic(pa) / 4.0, rel=1e-12)


def test_total_energy_breakdown_structure():
    p = PhysicalParams.atomic(0.05)
    qn = QuantumNumbers(0, 0)
    br = total_energy(p, qn)
    assert br.total == br.e0 + br.shift + br.e1 + br.e2
    assert br.shift > 0 and br.e1 < 0

    br0 = total_energy(p, qn, order=0)
    assert (br0.shift, br0.e1, br0.e2) == (0.0, 0.0, 0.0)
    br1 = total_energy(p, qn, order=1)
    assert br1.e2 == 0.0 and br1.e1 == br.e1 and br1.shift == br.shift

    flat = total_energy(PhysicalParams.atomic(0.0), qn)
    assert flat.total == flat.e0 == -0.5

    with pytest.raises(ValueError):
        total_energy(p, qn, order=3)


def test_total_energy_published_rows():
    assert total_energy(PhysicalParams.atomic(0.01), QuantumNumbers(0, 0)).total \
        == pytest.approx(-0.4900009, abs=5e-7)
    assert total_energy(PhysicalParams.atomic(0.02), QuantumNumbers(1, 0)).total \
        == pytest.approx(-0.1051033, abs=5e-7)
    assert total_energy(PhysicalParams.nuclear(4.0, 0.2), QuantumNumbers(0, 0)).total \
        == pytest.approx(-3.207029, abs=5e-6)


def test_total_energy_monotone_in_delta():
    for n, l in ((0, 0), (1, 0), (0, 1)):
        qn = QuantumNumbers(n, l)
        totals = [total_energy(PhysicalParams.atomic(d), qn).total
                  for d in [0.01 * i for i in range(11)]]
        assert all(b > a for a, b in zip(totals, totals[1:]))


def test_non_cosine_configuration_rejected():
    p = PhysicalParams(1.0, 0.05, 0.0)
    with pytest.raises(UnsupportedConfigError):
        e1_closed(p, QuantumNumbers(0, 0))
    with pytest.raises(UnsupportedConfigError):
        total_energy(p, QuantumNumbers(0, 0))
