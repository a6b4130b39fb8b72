"""Independent eigenvalue oracle: Numerov shooting on the exact potential.

Integrates chi'' = (2m/hbar^2)(V_eff - E) chi outward on a uniform grid,
counts interior sign changes, and bisects the trial energy on the node-count
staircase until the level with exactly n nodes is pinned to tolerance.
The potential here is the exact exponential-cosine-screened form, never the
truncated series, so agreement with the perturbative energies is a genuine
cross-check.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import DomainError, NoBoundStateError
from .params import PhysicalParams, QuantumNumbers
from .coulomb import unperturbed_energy

ENV_POINTS = "ECSC_ORACLE_POINTS"


def effective_potential(params: PhysicalParams, l: int, r: float) -> float:
    """Exact potential plus the centrifugal barrier."""
    if r <= 0:
        raise DomainError(f"effective_potential requires r > 0, got r={r}")
    from .potential import ecsc_eval
    return ecsc_eval(params, r) + params.hbar ** 2 * l * (l + 1) / (2.0 * params.mass * r * r)


@dataclass(frozen=True)
class OracleConfig:
    """Grid and convergence controls for the shooting solver."""

    r_min: float
    r_max: float
    num_points: int = 20000
    energy_tolerance: float = 1e-10
    max_bisections: int = 200

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise ValueError("need 0 < r_min < r_max")
        if self.num_points < 2000:
            raise ValueError(f"num_points must be >= 2000, got {self.num_points}")

    @property
    def step(self) -> float:
        return (self.r_max - self.r_min) / (self.num_points - 1)

    @classmethod
    def for_state(cls, params: PhysicalParams, qn: QuantumNumbers,
                  num_points: int | None = None,
                  energy_tolerance: float = 1e-10) -> "OracleConfig":
        """Defaults scaled to the state's Bohr-like radius and screening.

        r_max covers the classically allowed region plus the exponential tail;
        screening shallows the level, so the tail is stretched as delta N^2
        grows (capped: near-critical screening is out of warranty).
        """
        a0 = params.length_scale
        N = qn.principal
        stretch = 1.0
        x = 10.0 * params.screening_delta * N * N * a0
        if x < 0.9:
            stretch = 1.0 / (1.0 - x)
        else:
            stretch = 10.0
        r_max = 40.0 * N * N * a0 * min(stretch, 10.0)
        r_min = 1e-6 * a0
        if num_points is None:
            env = os.environ.get(ENV_POINTS)
            if env is not None:
                num_points = int(env)
            else:
                # keep h small enough that the O(h^4) global error clears 1e-8
                num_points = max(20000, int(round(r_max / (0.0015 * a0))))
        return cls(r_min=r_min, r_max=r_max, num_points=num_points,
                   energy_tolerance=energy_tolerance)


@dataclass(frozen=True)
class EigenResult:
    energy: float
    node_count: int
    residual: float
    converged: bool


@njit(cache=True)
def _numerov_shoot(f, h, y0, y1):
    """Propagate y'' = f y with the three-point Numerov scheme.

    Returns (terminal value, node count, peak magnitude); the running
    solution is rescaled when it grows past 1e200 to avoid overflow.
    """
    n = f.shape[0]
    c = h * h / 12.0
    prev = y0
    cur = y1
    nodes = 0
    peak = abs(cur)
    for i in range(1, n - 1):
        nxt = (2.0 * (1.0 + 5.0 * c * f[i]) * cur
               - (1.0 - c * f[i - 1]) * prev) / (1.0 - c * f[i + 1])
        if (nxt < 0.0 and cur > 0.0) or (nxt > 0.0 and cur < 0.0):
            nodes += 1
        prev = cur
        cur = nxt
        a = abs(cur)
        if a > peak:
            peak = a
        if a > 1e200:
            prev /= 1e200
            cur /= 1e200
            peak /= 1e200
    return cur, nodes, peak


def _f_parts(params: PhysicalParams, l: int, config: OracleConfig):
    """Grid and the E-independent part of f(r) = (2m/hbar^2)(V_eff - E)."""
    r = np.linspace(config.r_min, config.r_max, config.num_points)
    A, d, g = params.strength_A, params.screening_delta, params.cosine_g
    hb, m = params.hbar, params.mass
    v = -(A / r) * np.exp(-d * r) * np.cos(g * d * r) \
        + hb * hb * l * (l + 1) / (2.0 * m * r * r)
    return r, (2.0 * m / (hb * hb)) * v, 2.0 * m / (hb * hb)


def _origin_values(params: PhysicalParams, l: int, r):
    """Regular-solution start values r^{l+1} (1 + c1 r) near the origin.

    c1 = -(m A / hbar^2)/(l+1) is the first series coefficient of the
    regular solution for any potential with a -A/r head.
    """
    c1 = -params.mass * params.strength_A / (params.hbar ** 2 * (l + 1))
    y0 = r[0] ** (l + 1) * (1.0 + c1 * r[0])
    y1 = r[1] ** (l + 1) * (1.0 + c1 * r[1])
    return y0, y1


def shoot(params: PhysicalParams, l: int, energy: float,
          config: OracleConfig) -> tuple[float, int]:
    """Outward Numerov integration; returns (chi(r_max)/peak, node count)."""
    if energy >= 0:
        raise ValueError(f"bound-state search needs energy < 0, got {energy}")
    r, f_v, scale = _f_parts(params, l, config)
    f = f_v - scale * energy
    h = config.step
    y0, y1 = _origin_values(params, l, r)
    terminal, nodes, peak = _numerov_shoot(f, h, y0, y1)
    return terminal / peak, nodes


def solve_eigenvalue(params: PhysicalParams, qn: QuantumNumbers,
                     config: OracleConfig | None = None) -> EigenResult:
    """Eigenvalue with exactly n radial nodes, by node-count bisection.

    The trial energy where the interior node count steps from n to n + 1 is
    the eigenvalue of the r_max-truncated problem; bisection pins it to
    config.energy_tolerance, then the node count of the converged energy is
    verified.  Raises NoBoundStateError when the staircase never reaches
    n + 1 below the continuum (state unbound at this screening).
    """
    if config is None:
        config = OracleConfig.for_state(params, qn)
    n, l = qn.n, qn.l
    r, f_v, scale = _f_parts(params, l, config)
    h = config.step
    y0, y1 = _origin_values(params, l, r)

    def count_nodes(E):
        terminal, nodes, peak = _numerov_shoot(f_v - scale * E, h, y0, y1)
        return nodes, terminal / peak

    e_coul = unperturbed_energy(params, qn)
    scale_e = params.mass * params.strength_A ** 2 / params.hbar ** 2
    e_lo = e_coul - 0.05 * abs(e_coul)
    e_hi = -1e-12 * scale_e

    nodes_lo, _ = count_nodes(e_lo)
    if nodes_lo > n:
        raise NoBoundStateError(
            f"lower bracket at E={e_lo} already has {nodes_lo} > n={n} nodes")
    nodes_hi, _ = count_nodes(e_hi)
    if nodes_hi <= n:
        raise NoBoundStateError(
            f"no level with {n} nodes below the continuum "
            f"(node count at E={e_hi:g} is {nodes_hi}); state likely unbound")

    lo, hi = e_lo, e_hi
    for _ in range(config.max_bisections):
        mid = 0.5 * (lo + hi)
        nodes_mid, _ = count_nodes(mid)
        if nodes_mid <= n:
            lo = mid
        else:
            hi = mid
        if hi - lo < config.energy_tolerance:
            break
    energy = 0.5 * (lo + hi)
    converged = (hi - lo) < config.energy_tolerance
    nodes_final, terminal = count_nodes(lo)
    return EigenResult(energy=energy, node_count=nodes_final,
                       residual=abs(terminal), converged=converged)
