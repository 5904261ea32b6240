"""Hydrogen 2s-2p parameters, orbital integrals, and unit conversions.

The 2s-2p pair is the reference instance of the two-level model: the
splitting (the Lamb shift, 4.37e-6 eV) is tiny against the 1.89 eV gap to the
next level (3p), which leaves several decades of drive frequency where both
the degenerate-level approximation and the two-state truncation hold.

The transition dipole is computed from the explicit Z = 1, infinite-mass
orbitals by Gauss-Laguerre radial quadrature times a Gauss-Legendre angular
factor rather than hard-coding the textbook value; the diagonal element
vanishing under the same quadrature doubles as a selection-rule check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .analytic import leakage_at_peak
from .core import TwoLevelAtom

__all__ = [
    "HARTREE_EV",
    "SPEED_OF_LIGHT_AU",
    "BOHR_RADIUS_M",
    "INTENSITY_AU_W_CM2",
    "FieldRegime",
    "ValidityReport",
    "ev_to_hartree",
    "hartree_to_ev",
    "wavelength_to_omega",
    "omega_to_wavelength",
    "field_to_intensity",
    "intensity_to_field",
    "lamb_shift",
    "next_level_gap",
    "z_matrix_element",
    "dipole_2s2p",
    "hydrogen_atom",
    "field_for_transfer",
    "validity_report",
]

#: 1 Hartree in electron volts.
HARTREE_EV = 27.211386
#: Speed of light in atomic units (inverse fine-structure constant).
SPEED_OF_LIGHT_AU = 137.035999
#: Bohr radius in meters.
BOHR_RADIUS_M = 5.29177e-11
#: Peak intensity in W/cm^2 of a field with amplitude E0 = 1 a.u.
#: (peak-field convention I = E0^2 * I_au; a cycle average would halve it).
INTENSITY_AU_W_CM2 = 3.50945e16

_LAMB_SHIFT_EV = 4.37e-6
_GAP_2S3P_EV = 1.89

# Past ~180 nodes the largest Laguerre abscissa exceeds 600 and the
# exp(x) weight correction overflows double precision.
_MAX_LAGUERRE_NODES = 180


def ev_to_hartree(energy_ev: float) -> float:
    return energy_ev / HARTREE_EV


def hartree_to_ev(energy_hartree: float) -> float:
    return energy_hartree * HARTREE_EV


def wavelength_to_omega(wavelength_m: float) -> float:
    """Angular frequency in Hartree for a vacuum wavelength in meters."""
    if not wavelength_m > 0.0:
        raise ValueError(f"wavelength must be > 0, got {wavelength_m}")
    return 2.0 * math.pi * SPEED_OF_LIGHT_AU / (wavelength_m / BOHR_RADIUS_M)


def omega_to_wavelength(omega: float) -> float:
    """Vacuum wavelength in meters for an angular frequency in Hartree."""
    if not omega > 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    return (2.0 * math.pi * SPEED_OF_LIGHT_AU / omega) * BOHR_RADIUS_M


def field_to_intensity(e0: float) -> float:
    """Peak intensity in W/cm^2 for a field amplitude in atomic units."""
    return e0 * e0 * INTENSITY_AU_W_CM2


def intensity_to_field(intensity_w_cm2: float) -> float:
    if intensity_w_cm2 < 0.0:
        raise ValueError("intensity must be >= 0")
    return math.sqrt(intensity_w_cm2 / INTENSITY_AU_W_CM2)


def lamb_shift() -> float:
    """2s-2p splitting (Lamb shift) in Hartree."""
    return ev_to_hartree(_LAMB_SHIFT_EV)


def next_level_gap() -> float:
    """Energy gap from the 2s/2p pair to the next level (3p) in Hartree."""
    return ev_to_hartree(_GAP_2S3P_EV)


# --- orbitals and the dipole matrix element ---------------------------------

def _radial_2s(r):
    """R_20(r) for Z = 1, infinite nuclear mass."""
    return (2.0 - r) * np.exp(-0.5 * r) / (2.0 * math.sqrt(2.0))


def _radial_2p(r):
    """R_21(r) for Z = 1, infinite nuclear mass."""
    return r * np.exp(-0.5 * r) / (2.0 * math.sqrt(6.0))


_RADIAL = {"2s": _radial_2s, "2p": _radial_2p}


def _angular_m0(label: str, x):
    """Y_l0 as a function of x = cos(theta): l = 0 for s, l = 1 for p."""
    if label == "2s":
        return np.full_like(np.asarray(x, dtype=float), 1.0 / math.sqrt(4.0 * math.pi))
    if label == "2p":
        return math.sqrt(3.0 / (4.0 * math.pi)) * np.asarray(x, dtype=float)
    raise ValueError(f"unknown orbital label {label!r}")


def z_matrix_element(bra: str, ket: str, n_nodes: int = 64) -> float:
    """<bra| z |ket> for the 2s/2p (m = 0) orbitals, by numerical quadrature.

    The radial factor integral R_a(r) R_b(r) r^3 dr uses Gauss-Laguerre nodes
    with the e^(-r) weight restored explicitly; the angular factor
    2 pi * integral Y_a(x) x Y_b(x) dx uses Gauss-Legendre on x = cos(theta).
    """
    if bra not in _RADIAL or ket not in _RADIAL:
        raise ValueError(f"orbital labels must be '2s' or '2p', got {bra!r}, {ket!r}")
    if not 2 <= n_nodes <= _MAX_LAGUERRE_NODES:
        raise ValueError(f"n_nodes must lie in 2..{_MAX_LAGUERRE_NODES}, got {n_nodes}")
    r, w = np.polynomial.laguerre.laggauss(n_nodes)
    radial = float(np.sum(w * np.exp(r) * _RADIAL[bra](r) * _RADIAL[ket](r) * r**3))
    x, wx = np.polynomial.legendre.leggauss(32)
    angular = 2.0 * math.pi * float(np.sum(wx * _angular_m0(bra, x) * x * _angular_m0(ket, x)))
    return radial * angular


@lru_cache(maxsize=None)
def dipole_2s2p(n_nodes: int = 64) -> float:
    """Signed transition dipole <2s| z |2p0> in Bohr radii (magnitude 3)."""
    return z_matrix_element("2s", "2p", n_nodes=n_nodes)


def hydrogen_atom() -> TwoLevelAtom:
    """The 2s-2p pair as a TwoLevelAtom: Lamb-shift splitting, quadrature dipole."""
    return TwoLevelAtom(omega21=lamb_shift(), dipole_projection=dipole_2s2p())


@dataclass(frozen=True)
class FieldRegime:
    """Field parameters realizing complete transfer at a given frequency."""

    omega: float
    wavelength_m: float
    e0: float
    intensity_w_cm2: float

    def __post_init__(self) -> None:
        expected = 2.0 * math.pi * SPEED_OF_LIGHT_AU
        product = (self.wavelength_m / BOHR_RADIUS_M) * self.omega
        if abs(product - expected) > 1e-9 * expected:
            raise ValueError("wavelength and omega are inconsistent")
        expected_i = field_to_intensity(self.e0)
        if abs(self.intensity_w_cm2 - expected_i) > 1e-9 * max(expected_i, 1.0):
            raise ValueError("intensity and field amplitude are inconsistent")


def field_for_transfer(omega: float) -> FieldRegime:
    """Field amplitude, wavelength and intensity for chi = (pi/2) omega.

    The complete-transfer condition fixes the Rabi frequency, and the dipole
    matrix element converts it to a field amplitude: E0 = (pi/2) omega / |d|.
    Intensity uses the peak-field convention.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    dipole = dipole_2s2p()
    if dipole == 0.0:
        raise ValueError("dipole projection is zero; cannot derive a field amplitude")
    e0 = 0.5 * math.pi * omega / abs(dipole)
    return FieldRegime(
        omega=omega,
        wavelength_m=omega_to_wavelength(omega),
        e0=e0,
        intensity_w_cm2=field_to_intensity(e0),
    )


@dataclass(frozen=True)
class ValidityReport:
    """Where a drive frequency sits relative to the two-state model's window."""

    omega: float
    splitting_ratio: float  # omega21 / omega
    gap_ratio: float  # omega / omega_2s3p
    leakage_bound: float
    verdict: str


def validity_report(omega: float) -> ValidityReport:
    """Classify a drive frequency against omega21 << omega << omega_2s3p.

    "valid" requires a decade of margin on both sides (omega >= 10 omega21
    and omega <= omega_2s3p / 10); frequencies inside the window but within
    one decade of an edge are "marginal", and anything at or beyond an edge
    is "invalid".  The leakage bound is the truncated-series peak estimate.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    omega21 = lamb_shift()
    gap = next_level_gap()
    if 10.0 * omega21 <= omega <= gap / 10.0:
        verdict = "valid"
    elif omega <= omega21 or omega >= gap:
        verdict = "invalid"
    else:
        verdict = "marginal"
    return ValidityReport(
        omega=omega,
        splitting_ratio=omega21 / omega,
        gap_ratio=omega / gap,
        leakage_bound=leakage_at_peak(omega21, omega),
        verdict=verdict,
    )
