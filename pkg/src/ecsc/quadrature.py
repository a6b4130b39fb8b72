"""Adaptive composite Simpson quadrature for smooth, exponentially damped integrands."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import QuadratureError


@dataclass(frozen=True)
class QuadratureSpec:
    """Domain truncation and error control for the correction integrals."""

    r_max: float
    tolerance: float = 1e-13
    max_subdivisions: int = 60

    def __post_init__(self):
        if self.r_max <= 0:
            raise ValueError(f"r_max must be > 0, got {self.r_max}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")


def tail_radius(beta: float, power: float, cutoff: float = 1e-18) -> float:
    """Radius beyond which r^power * exp(-2*beta*r) drops below cutoff * peak.

    Used to truncate [0, inf) integrals over chi^2-weighted integrands, whose
    envelope is r^power exp(-2 beta r) with peak at r = power / (2 beta).
    """
    r_peak = max(power / (2.0 * beta), 1.0 / beta)

    def envelope_ratio(r):
        import math
        return (r / r_peak) ** power * math.exp(-2.0 * beta * (r - r_peak))

    lo, hi = r_peak, 2.0 * r_peak
    while envelope_ratio(hi) > cutoff:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if envelope_ratio(mid) > cutoff:
            lo = mid
        else:
            hi = mid
    return hi


def adaptive_simpson(f, a: float, b: float, spec: QuadratureSpec) -> float:
    """Integrate f over [a, b] by adaptive Simpson bisection.

    Raises QuadratureError (carrying the error estimate) when the
    subdivision budget is exhausted before spec.tolerance is met.
    """
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole,
                        spec.tolerance, spec.max_subdivisions)


def _simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = (left + right - whole) / 15.0
    if abs(err) <= tol:
        return left + right + err
    if depth <= 0:
        raise QuadratureError(
            f"adaptive Simpson did not converge on [{a}, {b}]",
            error_estimate=abs(err))
    half = 0.5 * tol
    return (_simpson_rec(f, a, m, fa, flm, fm, left, half, depth - 1)
            + _simpson_rec(f, m, b, fm, frm, fb, right, half, depth - 1))
