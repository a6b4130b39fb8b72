"""Exactly solvable unperturbed sector: hydrogen-like energies and wavefunctions.

chi_{n,l}(r) = N_c r^{l+1} exp(-beta r) L_n^{2l+1}(2 beta r),
beta = m A / ((n+l+1) hbar^2),  E^(0) = -m A^2 / (2 hbar^2 (n+l+1)^2).

The normalization constant is recomputed from the Laguerre norm integral

    int_0^inf x^{k+1} e^{-x} [L_n^k(x)]^2 dx = (n+k)!/n! * (2n+k+1)

rather than transcribed, so that int chi^2 dr = 1 in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .params import PhysicalParams, QuantumNumbers


def laguerre(n: int, k: int, x: float) -> float:
    """Associated Laguerre polynomial L_n^k(x) by upward recurrence in n."""
    if n < 0 or k < 0:
        raise ValueError(f"laguerre requires n, k >= 0, got n={n}, k={k}")
    if n == 0:
        return 1.0
    prev, cur = 1.0, 1.0 + k - x
    for m in range(2, n + 1):
        prev, cur = cur, ((2 * m - 1 + k - x) * cur - (m - 1 + k) * prev) / m
    return cur


def laguerre_sum(n: int, k: int, x: float) -> float:
    """L_n^k(x) via the explicit finite sum (test oracle, exact binomials)."""
    total = 0.0
    for m in range(n + 1):
        total += (-1) ** m * math.comb(n + k, n - m) / math.factorial(m) * x ** m
    return total


def laguerre_derivative(n: int, k: int, x: float) -> float:
    """d/dx L_n^k(x) = -L_{n-1}^{k+1}(x)."""
    if n == 0:
        return 0.0
    return -laguerre(n - 1, k + 1, x)


def unperturbed_energy(params: PhysicalParams, qn: QuantumNumbers) -> float:
    """Coulomb energy -m A^2 / (2 hbar^2 N^2)."""
    N = qn.principal
    return -params.mass * params.strength_A ** 2 / (2.0 * params.hbar ** 2 * N * N)


@dataclass(frozen=True)
class CoulombState:
    """One hydrogen-like bound state with its decay constant and normalization."""

    params: PhysicalParams
    qn: QuantumNumbers

    @property
    def beta(self) -> float:
        p = self.params
        return p.mass * p.strength_A / (self.qn.principal * p.hbar ** 2)

    @property
    def norm(self) -> float:
        n, l, N = self.qn.n, self.qn.l, self.qn.principal
        b = self.beta
        norm_sq = ((2.0 * b) ** (2 * l + 3) * math.factorial(n)
                   / (math.factorial(n + 2 * l + 1) * 2.0 * N))
        return math.sqrt(norm_sq)


def chi(state: CoulombState, r: float) -> float:
    """Normalized radial wavefunction chi(r); chi(0) = 0."""
    if r < 0:
        raise DomainError(f"chi requires r >= 0, got r={r}")
    if r == 0.0:
        return 0.0
    n, l = state.qn.n, state.qn.l
    b = state.beta
    return (state.norm * r ** (l + 1) * math.exp(-b * r)
            * laguerre(n, 2 * l + 1, 2.0 * b * r))


def chi_prime(state: CoulombState, r: float) -> float:
    """Analytic derivative d(chi)/dr for r > 0."""
    if r <= 0:
        raise DomainError(f"chi_prime requires r > 0, got r={r}")
    n, l = state.qn.n, state.qn.l
    b = state.beta
    x = 2.0 * b * r
    L = laguerre(n, 2 * l + 1, x)
    dL = laguerre_derivative(n, 2 * l + 1, x)
    radial = state.norm * r ** (l + 1) * math.exp(-b * r)
    return radial * (((l + 1) / r - b) * L + 2.0 * b * dL)


def base_superpotential(state: CoulombState, r: float) -> float:
    """Superpotential W(r) = -(hbar/sqrt(2m)) chi'(r)/chi(r), pole-free form.

    Computed from the analytic log-derivative; raises PoleError at (or very
    near) a node of the Laguerre factor.
    """
    if r <= 0:
        raise DomainError(f"base_superpotential requires r > 0, got r={r}")
    p = state.params
    n, l = state.qn.n, state.qn.l
    b = state.beta
    x = 2.0 * b * r
    L = laguerre(n, 2 * l + 1, x)
    # L_n^k(0) = C(n+k, n) sets the natural magnitude scale of L
    scale = math.comb(n + 2 * l + 1, n)
    if abs(L) < 1e-12 * scale:
        raise PoleError(f"superpotential pole: chi node at r={r}")
    dL = laguerre_derivative(n, 2 * l + 1, x)
    log_deriv = (l + 1) / r - b + 2.0 * b * dL / L
    return -(p.hbar / math.sqrt(2.0 * p.mass)) * log_deriv
