"""Single-mode squeezed vacuum: Bogoliubov data and renormalized energy.

A squeezed vacuum state of one field mode is parametrised by the complex
squeeze parameter zeta = r * e^{i*theta}.  Its second moments are fixed by
the Bogoliubov coefficients

    mu  = cosh(r),
    nu  = e^{i*theta} * sinh(r),        |nu| = eta = sinh(r),

with mu^2 - |nu|^2 = 1, giving <a> = 0, <a^2> = -mu*nu and a mean photon
number <a'a> = eta^2.  Normal-ordering against the vacuum leaves the
renormalized energy density of the mode

    rho(x) = (omega/V) * eta * (mu*cos(phase) + eta),

where ``phase`` is the standing-wave argument 2*k.x - theta.  The density
dips negative over part of each cycle whenever r > 0, yet its spatial
average eta^2 * omega / V and the total energy eta^2 * omega stay positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import SQUEEZE_CAP
from .errors import DomainError, RangeError
from ._special import phase_weight


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class SqueezeState:
    """Squeeze parameter zeta = r * e^{i*theta} of a single-mode state.

    Parameters
    ----------
    r : float
        Squeeze magnitude, 0 <= r <= SQUEEZE_CAP.  The cap keeps e^{2r}
        inside double precision; larger values raise RangeError.
    theta : float
        Squeeze phase in radians.  Stored unreduced; only differences
        modulo 2*pi ever matter physically.
    """

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        r = _require_finite("r", self.r)
        theta = _require_finite("theta", self.theta)
        if r < 0.0:
            raise DomainError(f"squeeze magnitude must be >= 0, got {r}")
        if r > SQUEEZE_CAP:
            raise RangeError(
                f"squeeze magnitude {r} exceeds the overflow cap {SQUEEZE_CAP}"
            )
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta)

    @property
    def mu(self) -> float:
        """cosh(r)."""
        return math.cosh(self.r)

    @property
    def eta(self) -> float:
        """sinh(r) = |nu|."""
        return math.sinh(self.r)

    @property
    def nu(self) -> complex:
        """e^{i*theta} * sinh(r)."""
        return complex(math.cos(self.theta), math.sin(self.theta)) * self.eta


@dataclass(frozen=True)
class ModeSpec:
    """One quantised field mode: angular frequency and quantisation volume.

    Natural units (hbar = c = 1): ``omega`` carries inverse length,
    ``volume`` length cubed.
    """

    omega: float
    volume: float

    def __post_init__(self) -> None:
        omega = _require_finite("omega", self.omega)
        volume = _require_finite("volume", self.volume)
        if omega <= 0.0:
            raise DomainError(f"mode frequency must be > 0, got {omega}")
        if volume <= 0.0:
            raise DomainError(f"quantisation volume must be > 0, got {volume}")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "volume", volume)

    @property
    def wavelength(self) -> float:
        """2*pi/omega."""
        return 2.0 * math.pi / self.omega


def bogoliubov(state: SqueezeState) -> tuple[float, complex, float]:
    """Bogoliubov coefficients (mu, nu, eta) of a squeezed vacuum.

    Returns
    -------
    (mu, nu, eta)
        mu = cosh(r), nu = e^{i*theta} sinh(r), eta = |nu| = sinh(r);
        they satisfy mu^2 - |nu|^2 = 1.
    """
    return state.mu, state.nu, state.eta


def mean_photon_number(state: SqueezeState) -> float:
    """<a'a> = sinh(r)^2."""
    eta = state.eta
    return eta * eta


def energy_density(state: SqueezeState, mode: ModeSpec, phase: float) -> float:
    """Renormalized energy density (omega/V) * eta * (mu*cos(phase) + eta).

    Parameters
    ----------
    phase : float
        Standing-wave argument 2*k.x - theta at the observation point.

    Notes
    -----
    Negative for part of each cycle whenever r > 0; the minimum over phase
    is -(omega/V)*(1 - e^{-2r})/2 and the average over a full cycle is
    the (positive) mean density sinh(r)^2 * omega / V.
    """
    phase = _require_finite("phase", phase)
    value = mode.omega / mode.volume * phase_weight(state.r, phase)
    if not math.isfinite(value):
        raise RangeError("energy density overflows double precision")
    return value


def total_energy(state: SqueezeState, mode: ModeSpec) -> float:
    """Renormalized mode energy sinh(r)^2 * omega (volume-independent)."""
    value = mean_photon_number(state) * mode.omega
    if not math.isfinite(value):
        raise RangeError("total energy overflows double precision")
    return value


__all__ = [
    "SqueezeState",
    "ModeSpec",
    "bogoliubov",
    "mean_photon_number",
    "energy_density",
    "total_energy",
]
