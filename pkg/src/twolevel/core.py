"""Domain types and pulse evaluation shared across the package.

Atomic units (hbar = e = m_e = 1) are used for every quantity: energies and
angular frequencies in Hartree, times in inverse Hartree, lengths in Bohr
radii.  Conversions to laboratory units live in :mod:`twolevel.hydrogen`.

The coupling matrix element of the monochromatic drive follows the
dipole-interaction sign convention V21(t) = -chi * cos(omega * t), where chi
is the Rabi frequency.  All occupation probabilities computed downstream
depend only on the magnitude of the action integral of V21, so the overall
sign (and the phase convention of the orbitals behind chi) never affects a
population observable.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import erf

__all__ = [
    "NORM_TOL",
    "TwoLevelAtom",
    "Cosine",
    "HarmonicSum",
    "GaussianApprox",
    "PulseSpec",
    "AmplitudeState",
    "Trajectory",
    "pulse_value",
    "pulse_derivative",
    "action",
    "probabilities",
    "pulse_to_dict",
    "pulse_from_dict",
    "pulse_to_json",
    "pulse_from_json",
]

#: Norm tolerance for analytically constructed amplitude pairs.
NORM_TOL = 1e-9

_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class TwoLevelAtom:
    """A pair of discrete levels with the energy zero fixed at the lower one.

    Parameters
    ----------
    omega21 : float
        Energy splitting of the two levels in Hartree, >= 0.  With the zero
        of energy at the lower level this is also the upper-level energy.
    dipole_projection : float
        Signed projection of the transition dipole onto the field
        polarization direction, in Bohr radii.
    """

    omega21: float
    dipole_projection: float

    def __post_init__(self) -> None:
        omega21 = _check_finite("omega21", self.omega21)
        if omega21 < 0.0:
            raise ValueError(f"omega21 must be >= 0, got {omega21}")
        _check_finite("dipole_projection", self.dipole_projection)


@dataclass(frozen=True)
class Cosine:
    """Monochromatic drive V21(t) = -chi * cos(omega * t).

    ``chi`` is the Rabi frequency (field amplitude times dipole projection),
    ``omega`` the field angular frequency; both in Hartree.
    """

    chi: float
    omega: float

    def __post_init__(self) -> None:
        _check_finite("chi", self.chi)
        omega = _check_finite("omega", self.omega)
        if omega <= 0.0:
            raise ValueError(f"omega must be > 0, got {omega}")


@dataclass(frozen=True)
class HarmonicSum:
    """Sum of odd harmonics of a base frequency.

    V21(t) = -sum_k chi_k * cos(k * omega * t) over the listed (k, chi_k)
    pairs.  Restricting k to odd integers keeps every member's magnitude
    peaked at t = pi / (2 omega), the same instant as the plain cosine, which
    is what makes the transfer normalization one-dimensional.
    """

    omega: float
    coefficients: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        omega = _check_finite("omega", self.omega)
        if omega <= 0.0:
            raise ValueError(f"omega must be > 0, got {omega}")
        coeffs = tuple((int(k), float(c)) for k, c in self.coefficients)
        if not coeffs:
            raise ValueError("HarmonicSum needs at least one (k, chi_k) pair")
        for k, c in coeffs:
            if k < 1 or k % 2 == 0:
                raise ValueError(f"harmonic index must be a positive odd integer, got {k}")
            _check_finite(f"coefficient for k={k}", c)
        if len({k for k, _ in coeffs}) != len(coeffs):
            raise ValueError("duplicate harmonic index")
        object.__setattr__(self, "coefficients", coeffs)


@dataclass(frozen=True)
class GaussianApprox:
    """Normalized Gaussian approximant to an instantaneous kick.

    V21(t) = area * N(t; center, width) with N the Gaussian density, so the
    full-line integral of V21 is exactly ``area``.  ``width`` is the Gaussian
    standard deviation.
    """

    area: float
    center: float
    width: float

    def __post_init__(self) -> None:
        _check_finite("area", self.area)
        _check_finite("center", self.center)
        width = _check_finite("width", self.width)
        if width <= 0.0:
            raise ValueError(f"width must be > 0, got {width}")


PulseSpec = Union[Cosine, HarmonicSum, GaussianApprox]


def pulse_value(pulse: PulseSpec, t):
    """Coupling matrix element V21 at time ``t`` (scalar or array)."""
    if isinstance(pulse, Cosine):
        return -pulse.chi * np.cos(pulse.omega * t)
    if isinstance(pulse, HarmonicSum):
        total = 0.0
        for k, c in pulse.coefficients:
            total = total - c * np.cos(k * pulse.omega * t)
        return total
    if isinstance(pulse, GaussianApprox):
        x = (t - pulse.center) / pulse.width
        return pulse.area * np.exp(-0.5 * x * x) / (pulse.width * _SQRT_2PI)
    raise TypeError(f"not a PulseSpec: {pulse!r}")


def _hermite_e(n: int, x: float) -> float:
    """Probabilists' Hermite polynomial He_n(x) by the three-term recurrence."""
    if n == 0:
        return 1.0
    prev, cur = 1.0, x
    for m in range(1, n):
        prev, cur = cur, x * cur - m * prev
    return cur


def pulse_derivative(pulse: PulseSpec, t: float, order: int) -> float:
    """``order``-th time derivative of V21 at ``t``; order 0 is V21 itself.

    Closed forms exist for every pulse family: phase-shifted cosines for the
    harmonic pulses and Hermite-polynomial prefactors for the Gaussian.
    """
    order = int(order)
    if order < 0:
        raise ValueError(f"derivative order must be >= 0, got {order}")
    if isinstance(pulse, Cosine):
        w = pulse.omega
        return -pulse.chi * w**order * math.cos(w * t + 0.5 * math.pi * order)
    if isinstance(pulse, HarmonicSum):
        w = pulse.omega
        total = 0.0
        for k, c in pulse.coefficients:
            total -= c * (k * w) ** order * math.cos(k * w * t + 0.5 * math.pi * order)
        return total
    if isinstance(pulse, GaussianApprox):
        x = (t - pulse.center) / pulse.width
        gauss = math.exp(-0.5 * x * x) / _SQRT_2PI
        sign = -1.0 if order % 2 else 1.0
        return pulse.area * sign * _hermite_e(order, x) * gauss / pulse.width ** (order + 1)
    raise TypeError(f"not a PulseSpec: {pulse!r}")


def _gauss_cdf(x):
    return 0.5 * (1.0 + erf(x / math.sqrt(2.0)))


def action(pulse: PulseSpec, t):
    """Action integral A(t) = integral of V21 from 0 to ``t`` (closed form).

    The action is the single quantity controlling population transfer in the
    degenerate limit: P2 = sin^2 A.  Complete transfer needs |A| to reach an
    odd multiple of pi/2.
    """
    if isinstance(pulse, Cosine):
        return -(pulse.chi / pulse.omega) * np.sin(pulse.omega * t)
    if isinstance(pulse, HarmonicSum):
        total = 0.0
        for k, c in pulse.coefficients:
            total = total - (c / (k * pulse.omega)) * np.sin(k * pulse.omega * t)
        return total
    if isinstance(pulse, GaussianApprox):
        lo = _gauss_cdf((0.0 - pulse.center) / pulse.width)
        return pulse.area * (_gauss_cdf((t - pulse.center) / pulse.width) - lo)
    raise TypeError(f"not a PulseSpec: {pulse!r}")


@dataclass(frozen=True)
class AmplitudeState:
    """Complex amplitude pair (a1, a2) of the two-level wave function."""

    a1: complex
    a2: complex

    @property
    def norm_defect(self) -> float:
        """Absolute deviation of |a1|^2 + |a2|^2 from one."""
        return abs(abs(self.a1) ** 2 + abs(self.a2) ** 2 - 1.0)


def probabilities(state: AmplitudeState) -> tuple[float, float]:
    """Occupation probabilities (P1, P2) = (|a1|^2, |a2|^2)."""
    return abs(state.a1) ** 2, abs(state.a2) ** 2


@dataclass(frozen=True)
class Trajectory:
    """Amplitudes sampled on a strictly increasing time grid.

    ``times``, ``a1`` and ``a2`` are equal-length one-dimensional arrays; the
    arrays are frozen after construction so trajectories can be shared freely.
    """

    times: np.ndarray
    a1: np.ndarray
    a2: np.ndarray

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        a1 = np.asarray(self.a1, dtype=complex)
        a2 = np.asarray(self.a2, dtype=complex)
        if times.ndim != 1 or a1.shape != times.shape or a2.shape != times.shape:
            raise ValueError("times, a1, a2 must be equal-length 1-d arrays")
        if times.size < 1:
            raise ValueError("trajectory must contain at least one sample")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("times must be strictly increasing")
        for arr in (times, a1, a2):
            arr.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)

    def __len__(self) -> int:
        return self.times.size

    @property
    def p1(self) -> np.ndarray:
        return np.abs(self.a1) ** 2

    @property
    def p2(self) -> np.ndarray:
        return np.abs(self.a2) ** 2

    def state(self, i: int) -> AmplitudeState:
        return AmplitudeState(complex(self.a1[i]), complex(self.a2[i]))

    @property
    def states(self) -> list[AmplitudeState]:
        return [self.state(i) for i in range(len(self))]

    def norm_defect(self) -> np.ndarray:
        """|a1|^2 + |a2|^2 - 1 at every grid point (integrator diagnostic)."""
        return np.abs(self.p1 + self.p2 - 1.0)


# --- JSON wire format -------------------------------------------------------
#
# Tagged by a "type" field: "cosine" | "harmonic_sum" | "gaussian".  Complex
# numbers never appear in the pulse schema; trajectory output keeps real and
# imaginary parts in separate columns.

def pulse_to_dict(pulse: PulseSpec) -> dict:
    """Serialize a pulse to its tagged-dict wire form."""
    if isinstance(pulse, Cosine):
        return {"type": "cosine", "chi": pulse.chi, "omega": pulse.omega}
    if isinstance(pulse, HarmonicSum):
        return {
            "type": "harmonic_sum",
            "omega": pulse.omega,
            "coefficients": [[k, c] for k, c in pulse.coefficients],
        }
    if isinstance(pulse, GaussianApprox):
        return {
            "type": "gaussian",
            "area": pulse.area,
            "center": pulse.center,
            "width": pulse.width,
        }
    raise TypeError(f"not a PulseSpec: {pulse!r}")


def pulse_from_dict(data: dict) -> PulseSpec:
    """Inverse of :func:`pulse_to_dict`; raises ValueError on malformed input."""
    try:
        tag = data["type"]
    except (TypeError, KeyError):
        raise ValueError("pulse dict must carry a 'type' tag") from None
    try:
        if tag == "cosine":
            return Cosine(chi=float(data["chi"]), omega=float(data["omega"]))
        if tag == "harmonic_sum":
            coeffs = tuple((int(k), float(c)) for k, c in data["coefficients"])
            return HarmonicSum(omega=float(data["omega"]), coefficients=coeffs)
        if tag == "gaussian":
            return GaussianApprox(
                area=float(data["area"]),
                center=float(data["center"]),
                width=float(data["width"]),
            )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed {tag!r} pulse dict: {exc}") from None
    raise ValueError(f"unknown pulse type {tag!r}")


def pulse_to_json(pulse: PulseSpec) -> str:
    return json.dumps(pulse_to_dict(pulse), sort_keys=True)


def pulse_from_json(text: str) -> PulseSpec:
    return pulse_from_dict(json.loads(text))
