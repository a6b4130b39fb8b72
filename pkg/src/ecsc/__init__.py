"""Bound states of the exponential-cosine-screened Coulomb potential.

Second-order superpotential perturbation theory for
V(r) = -(A/r) exp(-delta r) cos(g delta r), with closed-form energies and
wavefunctions cross-validated by direct quadrature of the correction
integrals and by an independent Numerov eigenvalue solver.
"""

from .params import PhysicalParams, QuantumNumbers
from .potential import SeriesCoefficients, delta_v_truncated, ecsc_eval, series_coefficients
from .coulomb import (CoulombState, base_superpotential, chi, chi_prime,
                      laguerre, laguerre_sum, unperturbed_energy)
from .quadrature import QuadratureSpec, adaptive_simpson
from .perturbation import (CoefficientsABC, EnergyBreakdown, e1_closed, e1_general,
                           e1_quadrature, e2_closed, e2_quadrature, total_energy,
                           w1_closed, w1_quadrature, w2_closed, w2_coefficients,
                           w2_quadrature)
from .wavefunction import PolynomialP, full_psi, moderating_u, p_coefficients, r_valid
from .oracle import EigenResult, OracleConfig, effective_potential, shoot, solve_eigenvalue

__all__ = [
    "PhysicalParams", "QuantumNumbers",
    "SeriesCoefficients", "ecsc_eval", "series_coefficients", "delta_v_truncated",
    "CoulombState", "laguerre", "laguerre_sum", "unperturbed_energy", "chi",
    "chi_prime", "base_superpotential",
    "QuadratureSpec", "adaptive_simpson",
    "EnergyBreakdown", "CoefficientsABC", "e1_closed", "e1_general",
    "e1_quadrature", "e2_closed", "e2_quadrature", "w1_closed", "w1_quadrature",
    "w2_closed", "w2_coefficients", "w2_quadrature", "total_energy",
    "PolynomialP", "p_coefficients", "moderating_u", "full_psi", "r_valid",
    "OracleConfig", "EigenResult", "effective_potential", "shoot", "solve_eigenvalue",
]

__version__ = "0.1.0"
