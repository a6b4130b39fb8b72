"""Physical parameters and quantum numbers.

The potential is V(r) = -(A/r) exp(-delta r) cos(g delta r).  A carrier
dataclass holds the coupling A, the screening delta, the cosine factor g,
and the unit system (hbar, m).  Three preset unit conventions cover the
published benchmark tables:

* atomic:  hbar = m = A = 1        (hydrogen ground state at -1/2)
* rydberg-like strength sweep: hbar = m = 1, A = sqrt(2), delta = G*A
* nuclear: hbar = 1, m = 1/2 (i.e. hbar = 2m = 1), A and delta free
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_SPECTROSCOPIC = {"s": 0, "p": 1, "d": 2, "f": 3, "g": 4, "h": 5}
_LETTER = {v: k for k, v in _SPECTROSCOPIC.items()}


@dataclass(frozen=True)
class PhysicalParams:
    """Coupling, screening and unit constants for the screened Coulomb problem."""

    strength_A: float
    screening_delta: float
    cosine_g: float = 1.0
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if self.strength_A <= 0:
            raise ValueError(f"strength_A must be > 0, got {self.strength_A}")
        if self.screening_delta < 0:
            raise ValueError(f"screening_delta must be >= 0, got {self.screening_delta}")
        if self.cosine_g < 0:
            raise ValueError(f"cosine_g must be >= 0, got {self.cosine_g}")
        if self.hbar <= 0 or self.mass <= 0:
            raise ValueError("hbar and mass must be > 0")

    @classmethod
    def atomic(cls, screening_delta: float, cosine_g: float = 1.0) -> "PhysicalParams":
        """hbar = m = A = 1."""
        return cls(1.0, screening_delta, cosine_g, 1.0, 1.0)

    @classmethod
    def strength_sweep(cls, G: float, cosine_g: float = 1.0) -> "PhysicalParams":
        """hbar = m = 1, A = sqrt(2), delta = G*A (the Table 5 convention)."""
        A = math.sqrt(2.0)
        return cls(A, G * A, cosine_g, 1.0, 1.0)

    @classmethod
    def nuclear(cls, strength_A: float, screening_delta: float,
                cosine_g: float = 1.0) -> "PhysicalParams":
        """hbar = 2m = 1."""
        return cls(strength_A, screening_delta, cosine_g, 1.0, 0.5)

    @property
    def length_scale(self) -> float:
        """Bohr-like radius hbar^2 / (m A)."""
        return self.hbar ** 2 / (self.mass * self.strength_A)

    def with_delta(self, screening_delta: float) -> "PhysicalParams":
        return PhysicalParams(self.strength_A, screening_delta, self.cosine_g,
                              self.hbar, self.mass)


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    """Radial quantum number n (node count) and orbital momentum l."""

    n: int
    l: int

    def __post_init__(self):
        if self.n < 0 or self.l < 0:
            raise ValueError(f"n and l must be >= 0, got n={self.n}, l={self.l}")

    @property
    def principal(self) -> int:
        """Principal quantum number N = n + l + 1."""
        return self.n + self.l + 1

    @property
    def label(self) -> str:
        """Spectroscopic label, e.g. (n=1, l=1) -> '3p'."""
        if self.l not in _LETTER:
            raise ValueError(f"no spectroscopic letter for l={self.l}")
        return f"{self.principal}{_LETTER[self.l]}"

    @classmethod
    def from_label(cls, label: str) -> "QuantumNumbers":
        """Parse a spectroscopic label like '1s', '2p', '3d'."""
        label = label.strip().lower()
        if len(label) < 2 or label[-1] not in _SPECTROSCOPIC:
            raise ValueError(f"bad state label {label!r}")
        try:
            principal = int(label[:-1])
        except ValueError:
            raise ValueError(f"bad state label {label!r}") from None
        l = _SPECTROSCOPIC[label[-1]]
        n = principal - l - 1
        if principal < 1 or n < 0:
            raise ValueError(f"state label {label!r} implies n = {n} < 0")
        return cls(n, l)
