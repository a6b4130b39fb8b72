"""Exact screened-Coulomb potential, its power series, and the truncated perturbation.

V(r) = -(A/r) exp(-delta r) cos(g delta r)
     = -(A/r) * sum_i V_i (delta r)^i

with V_i the Taylor coefficients of exp(-x) cos(gx).  For g = 1 the first
few are 1, -1, 0, 1/3, -1/6, 1/30 and the perturbation retained through
order delta^5 reads

    dV(r) = A d - (A d^3/3) r^2 + (A d^4/6) r^3 - (A d^5/30) r^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnsupportedConfigError
from .params import PhysicalParams


def ecsc_eval(params: PhysicalParams, r: float) -> float:
    """Exact potential value at radius r > 0."""
    if r <= 0:
        raise DomainError(f"potential requires r > 0, got r={r}")
    A, d, g = params.strength_A, params.screening_delta, params.cosine_g
    return -(A / r) * math.exp(-d * r) * math.cos(g * d * r)


@dataclass(frozen=True)
class SeriesCoefficients:
    """Taylor coefficients V_0..V_imax of exp(-x) cos(gx)."""

    values: tuple
    g: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def partial_sum(self, x: float) -> float:
        """sum_i V_i x^i, evaluated by Horner's rule."""
        acc = 0.0
        for v in reversed(self.values):
            acc = acc * x + v
        return acc


def series_coefficients(g: float, imax: int) -> SeriesCoefficients:
    """Coefficients V_i = Re[(-(1 + i*g))^i] / i! for i = 0..imax.

    exp(-x) cos(gx) = Re exp(-(1 + i*g) x), so the i-th Taylor coefficient
    is the real part of (-(1 + i*g))^i / i!.  For g = 1 this reproduces the
    tabulated values 1, -1, 0, 1/3, -1/6, 1/30, ...; g = 0 gives the plain
    exponential series.
    """
    if imax < 0:
        raise ValueError(f"imax must be >= 0, got {imax}")
    z = -(1.0 + 1j * g)
    values = tuple(((z ** i).real / math.factorial(i)) for i in range(imax + 1))
    return SeriesCoefficients(values=values, g=g)


def delta_v_truncated(params: PhysicalParams, r: float, order: int = 5) -> float:
    """Perturbation dV(r) truncated at the requested power of delta.

    Only the cosine-screened case g = 1 is supported; `order` is the highest
    power of delta retained (order < 3 keeps only the constant A*delta).
    """
    if params.cosine_g != 1.0:
        raise UnsupportedConfigError(
            f"truncated perturbation is defined for g=1 only, got g={params.cosine_g}")
    if not 1 <= order <= 5:
        raise ValueError(f"order must be in 1..5, got {order}")
    if r < 0:
        raise DomainError(f"delta_v_truncated requires r >= 0, got r={r}")
    A, d = params.strength_A, params.screening_delta
    out = A * d
    if order >= 3:
        out -= (A * d ** 3 / 3.0) * r ** 2
    if order >= 4:
        out += (A * d ** 4 / 6.0) * r ** 3
    if order >= 5:
        out -= (A * d ** 5 / 30.0) * r ** 4
    return out
