"""Closed-form solutions for the degenerately driven two-level system.

Everything here follows from dropping the level-splitting term in the coupled
amplitude equations, which is legitimate when the splitting omega21 is small
against the drive frequency.  In that limit the amplitudes depend on time only
through the action integral A(t) of the coupling, P2 = sin^2 A, and a cosine
drive with chi/omega = pi/2 transfers the population completely twice per
field period.  The quartic expansion of the probability peak, the frequency
design rule derived from it, the truncated-series leakage bounds for finite
omega21, and the exact higher derivatives of P2 used for pulse flattening all
live here as pure functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import AmplitudeState, PulseSpec, action, pulse_derivative

__all__ = [
    "DesignRequest",
    "LeakageReport",
    "degenerate_amplitudes",
    "transfer_populations",
    "quartic_peak_approx",
    "design_frequency",
    "leakage_estimate",
    "leakage_at_peak",
    "populations_from_action",
    "nth_derivative_p2",
    "delta_pulse_populations",
    "detuning_sensitivity",
]

MAX_DERIVATIVE_ORDER = 10


@dataclass(frozen=True)
class DesignRequest:
    """Requested populated-state duration ``t_s`` and leakage budget ``p_cr``.

    ``t_s`` is the full width of the window around the probability peak within
    which the leakage 1 - P2 must stay at or below ``p_cr``.
    """

    t_s: float
    p_cr: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_s) and self.t_s > 0.0):
            raise ValueError(f"t_s must be finite and > 0, got {self.t_s}")
        if not (0.0 < self.p_cr < 1.0):
            raise ValueError(f"p_cr must lie in (0, 1), got {self.p_cr}")


@dataclass(frozen=True)
class LeakageReport:
    """Predicted (series bound) versus measured leakage at a probability peak."""

    omega: float
    omega21: float
    predicted_leakage: float
    measured_leakage: float
    peak_time: float

    def __post_init__(self) -> None:
        if self.predicted_leakage < 0.0:
            raise ValueError("predicted_leakage must be >= 0")
        if not -1e-12 <= self.measured_leakage <= 1.0 + 1e-12:
            raise ValueError(f"measured_leakage must lie in [0, 1], got {self.measured_leakage}")


def degenerate_amplitudes(chi: float, omega: float, t: float) -> AmplitudeState:
    """Exact degenerate-limit amplitudes for the cosine drive.

    a1 = cos[(chi/omega) sin(omega t)], a2 = i sin[(chi/omega) sin(omega t)];
    the pair is unit-norm by the Pythagorean identity.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    y = (chi / omega) * math.sin(omega * t)
    return AmplitudeState(complex(math.cos(y)), 1j * math.sin(y))


def transfer_populations(omega: float, t):
    """Populations (P1, P2) for the complete-transfer drive chi/omega = pi/2.

    P2 = sin^2[(pi/2) sin(omega t)] reaches exactly 1 at t = pi/(2 omega) and
    repeats with period pi/omega, half the field period.  Accepts scalar or
    array ``t``.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    y = 0.5 * math.pi * np.sin(omega * np.asarray(t, dtype=float))
    p2 = np.sin(y) ** 2
    p1 = np.cos(y) ** 2
    if np.ndim(t) == 0:
        return float(p1), float(p2)
    return p1, p2


def quartic_peak_approx(omega: float, tau):
    """Quartic flat-top approximation 1 - (pi^2/16)(omega tau)^4 of the peak.

    ``tau`` is the offset from the peak time.  Valid for |omega tau| < 1; the
    raw polynomial value is returned without clamping, so far outside that
    window it goes negative.
    """
    x = omega * np.asarray(tau, dtype=float)
    out = 1.0 - (math.pi**2 / 16.0) * x**4
    if np.ndim(tau) == 0:
        return float(out)
    return out


def design_frequency(request: DesignRequest) -> float:
    """Drive frequency that holds leakage <= p_cr over a window of width t_s.

    Inverting the quartic peak approximation at leakage p_cr and half-width
    t_s/2 gives omega * (t_s/2) = (16 p_cr / pi^2)^(1/4), i.e.
    omega = (4/sqrt(pi)) * p_cr^(1/4) / t_s.  By construction
    quartic_peak_approx(omega, t_s/2) == 1 - p_cr.
    """
    return 4.0 * request.p_cr**0.25 / (math.sqrt(math.pi) * request.t_s)


def leakage_estimate(omega21: float, chi: float, t: float) -> float:
    """Truncated-series leakage (1/4) omega21^2 chi^2 t^4 at elapsed time t.

    First correction to the degenerate-limit populations from a finite level
    splitting; grows like t^4 from the common initial condition.
    """
    return 0.25 * omega21**2 * chi**2 * t**4


def leakage_at_peak(omega21: float, omega: float) -> float:
    """Series bound (1/4)(pi/2)^6 (omega21/omega)^2 on leakage at the first peak.

    Obtained from :func:`leakage_estimate` at t = pi/(2 omega) with the
    complete-transfer amplitude chi = (pi/2) omega.  This is an
    order-of-magnitude bound, not a sharp prediction: integrated dynamics stay
    well below it (the sharp comparison is done numerically in
    :mod:`twolevel.integrator`).
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    return 0.25 * (0.5 * math.pi) ** 6 * (omega21 / omega) ** 2


def populations_from_action(pulse: PulseSpec, t):
    """Populations (P1, P2) = (cos^2 A, sin^2 A) for an arbitrary pulse shape.

    ``A`` is the closed-form action from :func:`twolevel.core.action`.  For
    the cosine drive normalized to chi = (pi/2) omega this reduces exactly to
    :func:`transfer_populations`.
    """
    a = np.asarray(action(pulse, t), dtype=float)
    p1 = np.cos(a) ** 2
    p2 = np.sin(a) ** 2
    if np.ndim(t) == 0:
        return float(p1), float(p2)
    return p1, p2


@lru_cache(maxsize=None)
def _partition_multiplicities(n: int) -> tuple[tuple[int, ...], ...]:
    """Multiplicity vectors (m_1..m_n) with sum r*m_r = n, for Faa di Bruno."""

    def descending(total: int, max_part: int):
        if total == 0:
            yield ()
            return
        for part in range(min(total, max_part), 0, -1):
            for rest in descending(total - part, part):
                yield (part, *rest)

    result = []
    for parts in descending(n, n):
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        result.append(tuple(mult))
    return tuple(result)


def _sin_sq_derivative(m: int, y: float) -> float:
    """m-th derivative of F(y) = sin^2 y, i.e. 2^(m-1) sin(2y + (m-1) pi/2)."""
    return 2.0 ** (m - 1) * math.sin(2.0 * y + 0.5 * math.pi * (m - 1))


def nth_derivative_p2(pulse: PulseSpec, t: float, n: int) -> float:
    """Exact n-th time derivative of P2(t) = sin^2[A(t)], 1 <= n <= 10.

    Uses the combinatorial formula for derivatives of a composite function:
    sum over all non-negative integer solutions of i + 2j + ... + l*k = n of

        n!/(i! j! ... k!) * F^(m)(A) * (A'/1!)^i (A''/2!)^j ... (A^(l)/l!)^k

    with m = i + j + ... + k and A^(r) = V21^(r-1).  The partition count is
    at most 42 for n = 10, so exhaustive enumeration is cheap.
    """
    n = int(n)
    if not 1 <= n <= MAX_DERIVATIVE_ORDER:
        raise ValueError(f"derivative order must lie in 1..{MAX_DERIVATIVE_ORDER}, got {n}")
    y = float(action(pulse, t))
    # y^(r) = V21^(r-1); index r-1 in this list.
    y_derivs = [float(pulse_derivative(pulse, t, r - 1)) for r in range(1, n + 1)]
    n_fact = math.factorial(n)
    total = 0.0
    for mult in _partition_multiplicities(n):
        m = sum(mult)
        denom = 1
        power = 1.0
        for r, m_r in enumerate(mult, start=1):
            if m_r == 0:
                continue
            denom *= math.factorial(m_r) * math.factorial(r) ** m_r
            power *= y_derivs[r - 1] ** m_r
        total += (n_fact // denom) * _sin_sq_derivative(m, y) * power
    return total


def delta_pulse_populations(t: float, t0: float) -> tuple[float, float]:
    """Populations under an instantaneous half-cycle kick at ``t0``.

    P1 = 1 - step(t - t0), P2 = step(t - t0); the step takes the value 1 at
    t = t0 (fixed convention for determinism at the measure-zero instant).
    """
    if t >= t0:
        return 0.0, 1.0
    return 1.0, 0.0


def detuning_sensitivity(epsilon: float) -> float:
    """Peak-time P2 when the drive ratio chi/omega misses pi/2 by ``epsilon``.

    At the nominal peak time t = pi/(2 omega) the transferred population is
    sin^2(pi/2 + epsilon) = cos^2(epsilon) = 1 - epsilon^2 + O(epsilon^4),
    which quantifies sensitivity to fluctuations of the drive strength.
    """
    if abs(epsilon) >= 0.5 * math.pi:
        raise ValueError(f"|epsilon| must be < pi/2, got {epsilon}")
    return math.cos(epsilon) ** 2
