"""Ground-state moderating function u(r) and full radial wavefunction psi(r).

psi(r) = chi(r) * u(r) with u = exp(-(sqrt(2m)/hbar) int_0^r (W^(1) + W^(2)) dx).
The integrand is polynomial, so u and psi are evaluated from the exact
exponent polynomial

    psi(r) = N_c r^{l+1} exp(P(r)),   P(r) = p1 r + ... + p5 r^5,

with p1 = -beta and p2..p5 the integrals of the superpotential corrections.
Because the truncated exponent grows at large r (p5 > 0 for delta > 0),
every evaluation carries a validity radius: the first r where P'(r)
changes the sign of the decay.  Beyond it psi is an artifact of the
polynomial truncation, not a bound-state tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coulomb import CoulombState
from .errors import DomainError
from .params import PhysicalParams, QuantumNumbers
from .perturbation import w2_coefficients


@dataclass(frozen=True)
class PolynomialP:
    """Exponent polynomial coefficients of r^1..r^5."""

    p1: float
    p2: float
    p3: float
    p4: float
    p5: float

    def as_tuple(self):
        return (self.p1, self.p2, self.p3, self.p4, self.p5)

    def value(self, r: float) -> float:
        return r * (self.p1 + r * (self.p2 + r * (self.p3 + r * (self.p4 + r * self.p5))))

    def derivative(self, r: float) -> float:
        return (self.p1 + r * (2 * self.p2 + r * (3 * self.p3
                + r * (4 * self.p4 + r * 5 * self.p5))))


def p_coefficients(params: PhysicalParams, l: int) -> PolynomialP:
    """Exponent coefficients for the n = 0 state.

    p2 and p3 carry both the first-order (delta^3) and second-order
    (delta^4) contributions; at delta = 0 everything but p1 = -beta
    vanishes and psi reduces to the pure Coulomb chi.
    """
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    beta = m * A / ((l + 1) * hb ** 2)
    if d == 0.0:
        return PolynomialP(p1=-beta, p2=0.0, p3=0.0, p4=0.0, p5=0.0)
    co = w2_coefficients(params, l)
    k1 = hb ** 2 * (l + 1) * (l + 2) / (A * m)
    p2 = (l + 1) * d ** 3 * k1 / 6.0 + co.b * co.c * d ** 4 * k1 / 4.0
    p3 = (l + 1) * d ** 3 / 9.0 + co.b * co.c * d ** 4 / 6.0
    p4 = co.a * co.c * d ** 4 / 8.0
    p5 = co.c * d ** 6 / 10.0
    return PolynomialP(p1=-beta, p2=p2, p3=p3, p4=p4, p5=p5)


def r_valid(params: PhysicalParams, l: int) -> float:
    """First positive radius where P'(r) flips the decay sign (inf if never)."""
    p = p_coefficients(params, l)
    coeffs = [5 * p.p5, 4 * p.p4, 3 * p.p3, 2 * p.p2, p.p1]
    if all(c == 0.0 for c in coeffs[:-1]):
        return math.inf
    roots = np.roots(coeffs)
    real_pos = [float(z.real) for z in roots
                if abs(z.imag) < 1e-9 * max(1.0, abs(z.real)) and z.real > 0]
    return min(real_pos) if real_pos else math.inf


def moderating_u(params: PhysicalParams, l: int, r: float) -> float:
    """u(r) = exp(-(sqrt(2m)/hbar) int_0^r (W^(1) + W^(2)) dx); u(0) = 1."""
    if r < 0:
        raise DomainError(f"moderating_u requires r >= 0, got r={r}")
    p = p_coefficients(params, l)
    beta = -p.p1
    return math.exp(p.value(r) + beta * r)


def full_psi(params: PhysicalParams, l: int, r: float) -> float:
    """Perturbed ground-state radial wavefunction N_c r^{l+1} exp(P(r)).

    The prefactor is the Coulomb normalization constant of the n = 0 state,
    so full_psi == chi * moderating_u identically.
    """
    if r < 0:
        raise DomainError(f"full_psi requires r >= 0, got r={r}")
    if r == 0.0:
        return 0.0
    state = CoulombState(params, QuantumNumbers(0, l))
    p = p_coefficients(params, l)
    return state.norm * r ** (l + 1) * math.exp(p.value(r))
