import math

import pytest

from ecsc import (EigenResult, OracleConfig, PhysicalParams, QuantumNumbers,
                  effective_potential, shoot, solve_eigenvalue, total_energy,
                  unperturbed_energy)
from ecsc.errors import DomainError, NoBoundStateError

HYDROGEN = PhysicalParams.atomic(0.0)


def test_effective_potential_values():
    assert effective_potential(HYDROGEN, 0, 1.0) == -1.0
    assert effective_potential(HYDROGEN, 1, 1.0) == 0.0
    p = PhysicalParams.atomic(0.1)
    assert effective_potential(p, 0, 1.0) == pytest.approx(-0.900316, abs=1e-6)
    with pytest.raises(DomainError):
        effective_potential(HYDROGEN, 0, 0.0)


def test_oracle_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(r_min=1.0, r_max=0.5, num_points=20000)
    with pytest.raises(ValueError):
        OracleConfig(r_min=1e-6, r_max=40.0, num_points=100)


def test_oracle_config_defaults():
    for qn in (QuantumNumbers(0, 0), QuantumNumbers(2, 0)):
        cfg = OracleConfig.for_state(PhysicalParams.atomic(0.02), qn)
        N = qn.principal
        assert cfg.r_min <= 1e-4 * cfg.r_max
        assert cfg.r_max >= 6.0 * N * N
        assert cfg.num_points >= 2000


def test_oracle_config_env_override(monkeypatch):
    monkeypatch.setenv("ECSC_ORACLE_POINTS", "23456")
    cfg = OracleConfig.for_state(HYDROGEN, QuantumNumbers(0, 0))
    assert cfg.num_points == 23456


def test_shoot_terminal_value_at_eigenvalue():
    # at the exact hydrogen 1s energy the peak-normalized terminal value is
    # tiny; it cannot reach machine zero because roundoff seeds the growing
    # solution, so the box is kept short enough for < 1e-4
    cfg = OracleConfig(r_min=1e-6, r_max=15.0, num_points=20000)
    terminal, nodes = shoot(HYDROGEN, 0, -0.5, cfg)
    assert abs(terminal) < 1e-4
    assert nodes == 0
    # off the eigenvalue the terminal value is O(1) in peak units
    t_above, _ = shoot(HYDROGEN, 0, -0.45, cfg)
    t_below, _ = shoot(HYDROGEN, 0, -0.55, cfg)
    assert abs(t_above) > 0.1 and abs(t_below) > 0.1
    assert t_above * t_below < 0  # bracketing sign change around -0.5


def test_shoot_node_staircase():
    # node count equals the number of eigenvalues below the trial energy
    cfg = OracleConfig(r_min=1e-6, r_max=60.0, num_points=40000)
    assert shoot(HYDROGEN, 0, -0.55, cfg)[1] == 0
    assert shoot(HYDROGEN, 0, -0.45, cfg)[1] == 1   # above 1s
    assert shoot(HYDROGEN, 0, -0.12, cfg)[1] == 2   # above 1s and 2s
    with pytest.raises(ValueError):
        shoot(HYDROGEN, 0, 0.1, cfg)


def test_solve_eigenvalue_hydrogen():
    res = solve_eigenvalue(HYDROGEN, QuantumNumbers(0, 0))
    assert isinstance(res, EigenResult)
    assert res.converged and res.node_count == 0
    assert res.energy == pytest.approx(-0.5, abs=1e-8)


def test_solve_eigenvalue_screened_rows():
    res = solve_eigenvalue(PhysicalParams.atomic(0.04), QuantumNumbers(0, 0))
    assert res.energy == pytest.approx(-0.4600609, abs=2e-6)
    # the 2s delta=0.1 printed eigenvalue (-0.0349677) is inconsistent with a
    # converged solution; the solver agrees with the published Pade value
    res = solve_eigenvalue(PhysicalParams.atomic(0.1), QuantumNumbers(1, 0))
    assert res.energy == pytest.approx(-0.034941, abs=5e-6)
    assert res.node_count == 1


def test_grid_convergence():
    p = PhysicalParams.atomic(0.05)
    qn = QuantumNumbers(0, 0)
    c1 = OracleConfig.for_state(p, qn)
    c2 = OracleConfig.for_state(p, qn, num_points=2 * c1.num_points)
    e1 = solve_eigenvalue(p, qn, c1).energy
    e2 = solve_eigenvalue(p, qn, c2).energy
    assert abs(e1 - e2) < 1e-8


def test_level_ordering():
    p = PhysicalParams.atomic(0.05)
    e_2s = solve_eigenvalue(p, QuantumNumbers(1, 0)).energy
    e_2p = solve_eigenvalue(p, QuantumNumbers(0, 1)).energy
    assert e_2s < e_2p


def test_delta_monotonicity():
    qn = QuantumNumbers(0, 0)
    energies = [solve_eigenvalue(PhysicalParams.atomic(d), qn).energy
                for d in (0.02, 0.05, 0.08)]
    assert energies[0] < energies[1] < energies[2]


def test_screening_weakens_binding():
    # the screened level always lies above the Coulomb one
    for d in (0.03, 0.08):
        p = PhysicalParams.atomic(d)
        for qn in (QuantumNumbers(0, 0), QuantumNumbers(0, 1)):
            assert solve_eigenvalue(p, qn).energy > unperturbed_energy(p, qn)


def test_perturbation_error_profile():
    qn = QuantumNumbers(0, 0)
    devs = []
    for d in (0.04, 0.06, 0.08, 0.1):
        p = PhysicalParams.atomic(d)
        devs.append(abs(total_energy(p, qn).total - solve_eigenvalue(p, qn).energy))
    assert all(b > a for a, b in zip(devs, devs[1:]))
    # 6e-6 is the gap to the printed 1s eigenvalue at delta=0.1; the converged
    # eigenvalue sits another ~8e-7 lower, so allow that much on top
    assert devs[-1] <= 7e-6
    pert = total_energy(PhysicalParams.atomic(0.1), qn).total
    assert abs(pert - (-0.4008839)) <= 6e-6


def test_no_bound_state_detection():
    with pytest.raises(NoBoundStateError):
        solve_eigenvalue(PhysicalParams.atomic(0.2), QuantumNumbers(2, 0))
