"""First- and second-order corrections to the Coulomb sector (g = 1).

Closed forms (n = 0, 1, 2) and the general-n first-order superpotential

    W_n^(1)(r) = -(hbar N d^3 r / (3 sqrt(2m))) * (r + hbar^2 N (N+1)/(A m))

are paired with direct quadrature of the defining integrals

    E^(1) = int chi^2 (-A d^3/3) r^2 dr
    W^(1)(r) = (sqrt(2m)/hbar) chi^-2 int_0^r chi^2 [E^(1) + (A d^3/3) x^2] dx
    E^(2) = int chi^2 [(A d^4/6) r^3 - W^(1)^2] dr

so either route can validate the other.

The second-order superpotential here is the polynomial

    W^(2)(r) = -(hbar d^4 c r / (2 sqrt(2m)))
               * (d^2 r^3 + a r^2 + b (r + hbar^2 (l+1)(l+2)/(A m)))

with no additive constant: this is the unique solution of the second-order
Riccati equation that is regular at the origin, and it agrees exactly with
the quadrature route above (verified symbolically for general l).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coulomb import CoulombState, chi, unperturbed_energy
from .errors import PoleError, UnsupportedConfigError, UnsupportedStateError
from .params import PhysicalParams, QuantumNumbers
from .quadrature import QuadratureSpec, adaptive_simpson, tail_radius


@dataclass(frozen=True)
class EnergyBreakdown:
    """E = e0 + shift + e1 + e2, with shift = A*delta."""

    e0: float
    shift: float
    e1: float
    e2: float

    @property
    def total(self) -> float:
        return self.e0 + self.shift + self.e1 + self.e2


@dataclass(frozen=True)
class CoefficientsABC:
    """Polynomial coefficients of the second-order superpotential."""

    a: float
    b: float
    c: float
    d: float


def _require_cosine(params: PhysicalParams):
    if params.cosine_g != 1.0:
        raise UnsupportedConfigError(
            f"closed-form corrections are derived for g=1, got g={params.cosine_g}")


def default_quadrature_spec(state: CoulombState, extra_power: int = 4) -> QuadratureSpec:
    """Truncation radius covering chi^2 times a low-order polynomial weight."""
    power = 2 * (state.qn.l + 1) + 2 * state.qn.n + extra_power
    return QuadratureSpec(r_max=tail_radius(state.beta, power))


# -- first order ---------------------------------------------------------

def e1_closed(params: PhysicalParams, qn: QuantumNumbers) -> float:
    """First-order energy correction, published closed forms for n <= 2."""
    _require_cosine(params)
    n, l = qn.n, qn.l
    if n == 0:
        factor = (l + 1) ** 2 * (l + 2) * (2 * l + 3)
    elif n == 1:
        factor = (l + 2) ** 2 * (l + 7) * (2 * l + 3)
    elif n == 2:
        factor = (l + 3) ** 2 * (l + 2) * (2 * l + 23)
    else:
        raise UnsupportedStateError(
            f"closed form tabulated for n <= 2 (got n={n}); use e1_general")
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    return -hb ** 4 * factor * d ** 3 / (6.0 * A * m * m)


def e1_general(params: PhysicalParams, qn: QuantumNumbers) -> float:
    """First-order correction for any n via the hydrogenic <r^2>.

    <r^2>_{n,l} = (hbar^2/(m A))^2 N^2 (5N^2 + 1 - 3 l (l+1)) / 2; the n <= 2
    closed forms are factorizations of this expression.
    """
    _require_cosine(params)
    N, l = qn.principal, qn.l
    a0 = params.hbar ** 2 / (params.mass * params.strength_A)
    r2 = a0 * a0 * N * N * (5 * N * N + 1 - 3 * l * (l + 1)) / 2.0
    return -(params.strength_A * params.screening_delta ** 3 / 3.0) * r2


def e1_quadrature(params: PhysicalParams, qn: QuantumNumbers,
                  spec: QuadratureSpec | None = None) -> float:
    """E^(1) by adaptive quadrature of chi^2 (-A d^3/3) r^2."""
    _require_cosine(params)
    state = CoulombState(params, qn)
    if spec is None:
        spec = default_quadrature_spec(state)
    A, d = params.strength_A, params.screening_delta
    coef = -A * d ** 3 / 3.0

    def integrand(r):
        c = chi(state, r)
        return c * c * coef * r * r

    return adaptive_simpson(integrand, 0.0, spec.r_max, spec)


def w1_closed(params: PhysicalParams, qn: QuantumNumbers, r: float) -> float:
    """First-order superpotential, one formula for every n (node-free)."""
    _require_cosine(params)
    N = qn.principal
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    k = hb ** 2 * N * (N + 1) / (A * m)
    return -(hb * N * d ** 3 * r / (3.0 * math.sqrt(2.0 * m))) * (r + k)


def w1_closed_prime(params: PhysicalParams, qn: QuantumNumbers, r: float) -> float:
    """Analytic d/dr of w1_closed."""
    _require_cosine(params)
    N = qn.principal
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    k = hb ** 2 * N * (N + 1) / (A * m)
    return -(hb * N * d ** 3 / (3.0 * math.sqrt(2.0 * m))) * (2.0 * r + k)


def w1_quadrature(state: CoulombState, e1: float, r: float,
                  spec: QuadratureSpec | None = None) -> float:
    """W^(1)(r) from its defining integral, lower limit 0."""
    if r <= 0:
        raise ValueError(f"w1_quadrature requires r > 0, got r={r}")
    p = state.params
    chi_r = chi(state, r)
    # peak value of chi is O(sqrt(beta)); guard the 1/chi^2 pole
    if abs(chi_r) < 1e-9 * math.sqrt(state.beta):
        raise PoleError(f"w1_quadrature too close to a node of chi at r={r}")
    if spec is None:
        spec = QuadratureSpec(r_max=r, tolerance=1e-15 * max(1.0, chi_r * chi_r))
    A, d = p.strength_A, p.screening_delta
    coef = A * d ** 3 / 3.0

    def integrand(x):
        c = chi(state, x)
        return c * c * (e1 + coef * x * x)

    integral = adaptive_simpson(integrand, 0.0, r, spec)
    return (math.sqrt(2.0 * p.mass) / p.hbar) * integral / (chi_r * chi_r)


# -- second order --------------------------------------------------------

def e2_closed(params: PhysicalParams, qn: QuantumNumbers) -> float:
    """Second-order energy correction (delta^4 and delta^6 terms), n <= 2."""
    _require_cosine(params)
    n, l = qn.n, qn.l
    if n == 0:
        t4 = (l + 1) ** 3 * (l + 2) * (2 * l + 3) * (2 * l + 5)
        t6 = (l + 1) ** 6 * (l + 2) * (2 * l + 3) * (8 * l * l + 37 * l + 43)
    elif n == 1:
        t4 = (l + 2) ** 3 * (l + 11) * (2 * l + 3) * (2 * l + 5)
        t6 = (l + 2) ** 6 * (l + 3) * (2 * l + 3) * (7 * l * l + 101 * l + 211)
    elif n == 2:
        t4 = (l + 2) * (l + 3) ** 2 * (2 * l + 5) * (2 * l * l + 45 * l + 153)
        t6 = (l + 2) * (l + 3) ** 5 * (16 * l ** 4 + 474 * l ** 3
                                       + 3879 * l ** 2 + 12118 * l + 12873)
    else:
        raise UnsupportedStateError(f"closed form tabulated for n <= 2 (got n={n})")
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    return (hb ** 6 * t4 * d ** 4 / (24.0 * A * A * m ** 3)
            - hb ** 10 * t6 * d ** 6 / (72.0 * A ** 4 * m ** 5))


def e2_quadrature(state: CoulombState, e1: float,
                  spec: QuadratureSpec | None = None,
                  w1_path: str = "closed") -> float:
    """E^(2) = int chi^2 [(A d^4/6) r^3 - W^(1)^2] dr, ground states only.

    w1_path selects how W^(1) is evaluated inside the integrand: "closed"
    (default) or "quadrature".  Restricted to n = 0 because 1/chi^2 in the
    quadrature route is singular at wavefunction nodes.
    """
    if state.qn.n != 0:
        raise UnsupportedStateError(
            "second-order quadrature requires a node-free state (n = 0)")
    p = state.params
    _require_cosine(p)
    if spec is None:
        spec = default_quadrature_spec(state, extra_power=8)
    A, d = p.strength_A, p.screening_delta
    coef = A * d ** 4 / 6.0
    if w1_path == "closed":
        w1 = lambda x: w1_closed(p, state.qn, x)
    elif w1_path == "quadrature":
        w1 = lambda x: w1_quadrature(state, e1, x) if x > 0 else 0.0
    else:
        raise ValueError(f"w1_path must be 'closed' or 'quadrature', got {w1_path!r}")
    # deep in the tail the 1/chi^2 route is ill-conditioned, but there the
    # chi^2-weighted integrand is negligible anyway
    tail_chi = 1e-9 * math.sqrt(state.beta)

    def integrand(r):
        c = chi(state, r)
        if w1_path == "quadrature" and abs(c) < tail_chi:
            return 0.0
        w = w1(r)
        return c * c * (coef * r ** 3 - w * w)

    return adaptive_simpson(integrand, 0.0, spec.r_max, spec)


def w2_coefficients(params: PhysicalParams, l: int) -> CoefficientsABC:
    """Coefficients a, b, c (and d, which needs delta > 0) of W^(2)."""
    _require_cosine(params)
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    a = hb ** 2 * (l + 1) * (3 * l + 7) * d ** 2 / (A * m) \
        - 3.0 * A * m / (hb ** 2 * (l + 1) ** 2)
    b = hb ** 4 * (l + 1) ** 2 * (8 * l * l + 37 * l + 43) * d ** 2 / (2.0 * A * A * m * m) \
        - 1.5 * (2 * l + 5) / (l + 1)
    c = hb ** 2 * (l + 1) ** 3 / (9.0 * A * m)
    dd = b + 6.0 * A * m / (hb ** 2 * (l + 1) ** 2 * d) if d > 0 else math.inf
    return CoefficientsABC(a=a, b=b, c=c, d=dd)


def w2_closed(params: PhysicalParams, l: int, r: float) -> float:
    """Second-order superpotential for n = 0 (regular-at-origin solution)."""
    co = w2_coefficients(params, l)
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    k0 = hb ** 2 * (l + 1) * (l + 2) / (A * m)
    poly = d * d * r ** 3 + co.a * r ** 2 + co.b * (r + k0)
    return -(hb * d ** 4 * co.c * r / (2.0 * math.sqrt(2.0 * m))) * poly


def w2_closed_prime(params: PhysicalParams, l: int, r: float) -> float:
    """Analytic d/dr of w2_closed."""
    co = w2_coefficients(params, l)
    A, m, hb, d = params.strength_A, params.mass, params.hbar, params.screening_delta
    k0 = hb ** 2 * (l + 1) * (l + 2) / (A * m)
    dpoly = 4.0 * d * d * r ** 3 + 3.0 * co.a * r ** 2 + 2.0 * co.b * r + co.b * k0
    return -(hb * d ** 4 * co.c / (2.0 * math.sqrt(2.0 * m))) * dpoly


def w2_quadrature(state: CoulombState, e2: float, r: float,
                  spec: QuadratureSpec | None = None) -> float:
    """W^(2)(r) from its defining integral (n = 0, lower limit 0)."""
    if state.qn.n != 0:
        raise UnsupportedStateError("w2_quadrature requires n = 0")
    if r <= 0:
        raise ValueError(f"w2_quadrature requires r > 0, got r={r}")
    p = state.params
    chi_r = chi(state, r)
    if abs(chi_r) < 1e-9 * math.sqrt(state.beta):
        raise PoleError(f"w2_quadrature too close to chi ~ 0 at r={r}")
    if spec is None:
        spec = QuadratureSpec(r_max=r, tolerance=1e-15 * max(1.0, chi_r * chi_r))
    A, d = p.strength_A, p.screening_delta
    coef = A * d ** 4 / 6.0

    def integrand(x):
        c = chi(state, x)
        w1 = w1_closed(p, state.qn, x)
        return c * c * (e2 + w1 * w1 - coef * x ** 3)

    integral = adaptive_simpson(integrand, 0.0, r, spec)
    return (math.sqrt(2.0 * p.mass) / p.hbar) * integral / (chi_r * chi_r)


# -- totals --------------------------------------------------------------

def total_energy(params: PhysicalParams, qn: QuantumNumbers,
                 order: int = 2) -> EnergyBreakdown:
    """Perturbative energy through the requested order.

    order 0 keeps only the Coulomb energy; order 1 adds the A*delta shift and
    E^(1); order 2 adds E^(2).
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order}")
    e0 = unperturbed_energy(params, qn)
    if params.screening_delta == 0.0 or order == 0:
        return EnergyBreakdown(e0=e0, shift=0.0, e1=0.0, e2=0.0)
    shift = params.strength_A * params.screening_delta
    e1 = e1_closed(params, qn)
    e2 = e2_closed(params, qn) if order >= 2 else 0.0
    return EnergyBreakdown(e0=e0, shift=shift, e1=e1, e2=e2)
