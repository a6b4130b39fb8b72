"""Benchmark energies transcribed from the published tables.

Values are verbatim transcriptions (7 printed decimals); every row carries
its table number, state and screening, plus a flag when the printed value is
known to be inconsistent:

* ``pert_ref_inconsistent`` - the printed perturbative energy disagrees with
  the paper's own closed forms (one digit-garbled 2p entry in table 3; the
  whole 3d column of table 5, whose entries reproduce only if the
  first-order correction is halved).
* ``oracle_ref_inconsistent`` - the tabulated reference eigenvalue disagrees
  with a converged direct solution of the Schrodinger equation by more than
  the 5e-6 comparison tolerance (the two largest-screening 2s rows).

Flagged rows are excluded from pass/fail gates but still reported, so the
discrepancies stay visible instead of hidden.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

from .params import PhysicalParams, QuantumNumbers

FLAG_PERT = "pert_ref_inconsistent"
FLAG_ORACLE = "oracle_ref_inconsistent"

#: absolute tolerance on |perturbative - printed| per table
TABLE_TOLERANCE = {1: 5e-7, 2: 5e-7, 3: 5e-7, 4: 5e-7, 5: 5e-7, 6: 5e-6}

#: absolute tolerance on |oracle - tabulated reference eigenvalue|
ORACLE_TOLERANCE = 5e-6


@dataclass(frozen=True)
class ReferenceRow:
    table: int
    state: str
    n: int
    l: int
    params: PhysicalParams
    #: ((column_name, printed_value), ...); energies for tables 1-4,
    #: binding energies (-E) for tables 5-6
    values: tuple
    binding_convention: bool = False
    flag: str = ""
    aux: tuple = field(default=())  # extra printed inputs, e.g. ("G", 0.05)

    @property
    def qn(self) -> QuantumNumbers:
        return QuantumNumbers(self.n, self.l)

    def value(self, column: str):
        for name, v in self.values:
            if name == column:
                return v
        return None

    def energy_ref(self) -> float:
        """Paper's own perturbative energy, in the E < 0 sign convention."""
        v = self.value("perturbative")
        return -v if self.binding_convention else v

    def oracle_ref(self):
        """Tabulated independent eigenvalue (dynamical column), if printed."""
        return self.value("dynamical")


_QN = {"1s": (0, 0), "2s": (1, 0), "2p": (0, 1),
       "3s": (2, 0), "3p": (1, 1), "3d": (0, 2)}

# Table 1: 1s state, atomic units. (delta, dynamical, perturbative)
_T1 = [
    (0.01, -0.4900010, -0.4900009),
    (0.02, -0.4800078, -0.4800078),
    (0.03, -0.4700260, -0.4700259),
    (0.04, -0.4600609, -0.4600608),
    (0.05, -0.4501174, -0.4501172),
    (0.06, -0.4402004, -0.4402000),
    (0.07, None, -0.4303134),
    (0.08, -0.4204636, -0.4204617),
    (0.09, None, -0.4106488),
    (0.10, -0.4008839, -0.4008785),
]

# Table 2: 2s state, atomic units. (delta, dynamical, perturbative, flag)
_T2 = [
    (0.01, -0.1150135, -0.1150134, ""),
    (0.02, -0.1051036, -0.1051033, ""),
    (0.03, -0.0953366, -0.0953346, ""),
    (0.04, -0.0857690, -0.0857621, ""),
    (0.05, -0.0764497, -0.0764326, ""),
    (0.06, -0.0674217, -0.0673900, ""),
    (0.07, None, -0.0586800, ""),
    (0.08, -0.0503922, -0.0503576, FLAG_ORACLE),
    (0.09, None, -0.0424945, ""),
    (0.10, -0.0349677, -0.0351880, FLAG_ORACLE),
]

# Tables 3-4: atomic units. (state, delta, pade_10_10, perturbative, flag)
_T3 = [
    ("2s", 0.10, -0.034941, -0.0351880, ""),
    ("2p", 0.10, -0.032469, -0.0326733, ""),
    ("2s", 0.08, -0.050387, -0.0503576, ""),
    ("2p", 0.08, -0.048997, -0.0489939, ""),
    ("2s", 0.06, -0.067421, -0.0673900, ""),
    ("2p", 0.06, -0.066778, -0.0667611, ""),
    ("2s", 0.04, -0.085769, -0.0857621, ""),
    ("2p", 0.04, -0.085591, -0.0855520, FLAG_PERT),
    ("2s", 0.02, -0.105104, -0.1051033, ""),
    ("2p", 0.02, -0.105075, -0.1050744, ""),
]

_T4 = [
    ("3s", 0.06, -0.005461, -0.0070778, ""),
    ("3p", 0.06, -0.004471, -0.0054058, ""),
    ("3d", 0.06, -0.002308, -0.0029240, ""),
    ("3s", 0.05, -0.011576, -0.0119523, ""),
    ("3p", 0.05, -0.010929, -0.0111117, ""),
    ("3d", 0.05, -0.009555, -0.0096940, ""),
    ("3s", 0.04, -0.018823, -0.0188586, ""),
    ("3p", 0.04, -0.018453, -0.0184505, ""),
    ("3d", 0.04, -0.017682, -0.0176910, ""),
    ("3s", 0.02, -0.036025, -0.0360213, ""),
    ("3p", 0.02, -0.035968, -0.0359640, ""),
    ("3d", 0.02, -0.035851, -0.0358490, ""),
]

# Table 5: hbar = m = 1, A = sqrt(2), delta = G*A; binding energies -E.
# (G, state, binding, flag)
_T5 = [
    (0.002, "1s", 0.9960000, ""), (0.002, "2s", 0.2460002, ""),
    (0.002, "2p", 0.2460001, ""), (0.002, "3p", 0.1071120, ""),
    (0.002, "3d", 0.1071114, ""),
    (0.005, "1s", 0.9900002, ""), (0.005, "2s", 0.2400034, ""),
    (0.005, "2p", 0.2400024, ""), (0.005, "3p", 0.1011255, ""),
    (0.005, "3d", 0.1011160, FLAG_PERT),
    (0.010, "1s", 0.9800019, ""), (0.010, "2s", 0.2300269, ""),
    (0.010, "2p", 0.2300193, ""), (0.010, "3p", 0.0912217, ""),
    (0.010, "3d", 0.0911475, FLAG_PERT),
    (0.020, "1s", 0.9600156, ""), (0.020, "2s", 0.2102066, ""),
    (0.020, "2p", 0.2101489, ""), (0.020, "3p", 0.0719281, ""),
    (0.020, "3d", 0.0713617, FLAG_PERT),
    (0.025, "1s", 0.9500302, ""), (0.025, "2s", 0.2003953, ""),
    (0.025, "2p", 0.2002857, ""), (0.025, "3p", 0.0626485, ""),
    (0.025, "3d", 0.0615665, FLAG_PERT),
    (0.050, "1s", 0.9002344, ""), (0.050, "2s", 0.1528652, ""),
    (0.050, "2p", 0.1520991, ""), (0.050, "3p", 0.0222235, ""),
    (0.050, "3d", 0.0141374, FLAG_PERT),
]

# Table 6: hbar = 2m = 1, delta = 0.2; binding energies -E. (A, l, n, binding)
_T6 = [
    (4, 0, 0, 3.207029),
    (8, 0, 0, 14.403752),
    (8, 1, 0, 2.433587),
    (16, 0, 0, 60.801938),
    (16, 1, 0, 12.818287),
    (24, 0, 0, 139.20131),
    (24, 1, 0, 31.212563),
    (24, 2, 0, 11.249961),
    (16, 0, 1, 12.825303),
    (16, 0, 2, 4.023139),
    (16, 1, 1, 4.009505),
    (24, 0, 1, 31.217455),
    (24, 0, 2, 11.279786),
    (24, 1, 1, 11.269899),
    (24, 1, 2, 4.412177),
    (24, 2, 1, 4.380887),
    (24, 2, 2, 1.411568),
]


def _build():
    out = {1: [], 2: [], 3: [], 4: [], 5: [], 6: []}
    for delta, dyn, pert in _T1:
        out[1].append(ReferenceRow(
            table=1, state="1s", n=0, l=0, params=PhysicalParams.atomic(delta),
            values=(("dynamical", dyn), ("perturbative", pert))))
    for delta, dyn, pert, flag in _T2:
        out[2].append(ReferenceRow(
            table=2, state="2s", n=1, l=0, params=PhysicalParams.atomic(delta),
            values=(("dynamical", dyn), ("perturbative", pert)), flag=flag))
    for tid, data in ((3, _T3), (4, _T4)):
        for state, delta, pade, pert, flag in data:
            n, l = _QN[state]
            out[tid].append(ReferenceRow(
                table=tid, state=state, n=n, l=l,
                params=PhysicalParams.atomic(delta),
                values=(("pade_10_10", pade), ("perturbative", pert)), flag=flag))
    for G, state, binding, flag in _T5:
        n, l = _QN[state]
        out[5].append(ReferenceRow(
            table=5, state=state, n=n, l=l,
            params=PhysicalParams.strength_sweep(G),
            values=(("perturbative", binding),),
            binding_convention=True, flag=flag, aux=(("G", G),)))
    for A, l, n, binding in _T6:
        state = f"{n + l + 1}" + "spdfgh"[l]
        out[6].append(ReferenceRow(
            table=6, state=state, n=n, l=l,
            params=PhysicalParams.nuclear(float(A), 0.2),
            values=(("perturbative", binding),),
            binding_convention=True, aux=(("A", float(A)),)))
    return out


_ROWS = _build()


def rows(table_id: int) -> list:
    """All transcribed rows of one table, in printed order."""
    if table_id not in _ROWS:
        raise ValueError(f"table_id must be 1..6, got {table_id}")
    return list(_ROWS[table_id])


def checksum() -> str:
    """SHA-256 over a canonical rendering of the raw transcription tables."""
    h = hashlib.sha256()
    for block in (_T1, _T2, _T3, _T4, _T5, _T6):
        for row in block:
            h.update(repr(row).encode())
        h.update(b"|")
    return h.hexdigest()
