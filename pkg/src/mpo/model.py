"""Medium parameters, pump boundaries, and the dispersion/locking algebra.

Unit conventions used throughout the package:

* every frequency-like quantity (Rabi amplitude, detuning, decay rate,
  linewidth) is angular, in rad/s;
* lengths are in metres, areas in m^2, powers in watts.

The command-line layer accepts Hz and converts once at the boundary; the
library never mixes conventions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

C_LIGHT = 299792458.0  # m/s

__all__ = [
    "C_LIGHT",
    "ParameterError",
    "DomainError",
    "MediumParams",
    "PumpBoundary",
    "DispersionReport",
    "coupling_constant",
    "alpha",
    "dispersion_report",
    "phase_matching_residual",
    "matched_detuning",
    "self_consistent_locked_beat",
]


class ParameterError(ValueError):
    """A constructor argument violates a physical invariant."""


class DomainError(ValueError):
    """An operation was evaluated outside its validity domain."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


@dataclass(frozen=True)
class MediumParams:
    """Atomic and geometric constants of the vapour cell (SI units).

    Attributes
    ----------
    atom_density : float
        N, atoms per m^3.
    wavelength : float
        Common carrier wavelength of the four fields, m.
    radiative_decay : float
        gamma_a, population decay rate out of the excited states, rad/s.
    ground_decay : float
        gamma_0, decay rate of the ground-state coherence, rad/s.
    one_photon_detuning : float
        Delta, detuning of the backward pump from its transition, rad/s.
        Must be nonzero; the medium response diverges on resonance.
    cell_length : float
        L, m.
    beam_area : float
        A, m^2.  Used only for the total atom number and photon fluxes.
    two_photon_detuning : float
        delta, rad/s.
    raman_splitting : float
        omega_0, ground-state sublevel splitting, rad/s.
    phase_mismatch : float
        Delta k = k2 - k1, rad/m, bare carrier mismatch.
    optical_frequency : float
        nu, carrier angular frequency for photon-energy bookkeeping, rad/s.
        Defaults to 2*pi*c/wavelength when not given.
    """

    atom_density: float
    wavelength: float
    radiative_decay: float
    ground_decay: float
    one_photon_detuning: float
    cell_length: float
    beam_area: float
    two_photon_detuning: float = 0.0
    raman_splitting: float = 0.0
    phase_mismatch: float = 0.0
    optical_frequency: float = 0.0

    def __post_init__(self) -> None:
        if self.optical_frequency == 0.0:
            object.__setattr__(
                self, "optical_frequency", 2.0 * math.pi * C_LIGHT / self.wavelength
            )
        for name in (
            "atom_density", "wavelength", "radiative_decay", "ground_decay",
            "one_photon_detuning", "cell_length", "beam_area",
            "two_photon_detuning", "raman_splitting", "phase_mismatch",
            "optical_frequency",
        ):
            _require(math.isfinite(getattr(self, name)), f"{name} must be finite")
        _require(self.atom_density >= 0.0, "atom_density must be >= 0")
        _require(self.wavelength > 0.0, "wavelength must be > 0")
        _require(self.radiative_decay > 0.0, "radiative_decay must be > 0")
        _require(self.ground_decay >= 0.0, "ground_decay must be >= 0")
        _require(self.cell_length > 0.0, "cell_length must be > 0")
        _require(self.beam_area > 0.0, "beam_area must be > 0")
        _require(self.one_photon_detuning != 0.0, "one_photon_detuning must be nonzero")
        _require(self.optical_frequency > 0.0, "optical_frequency must be > 0")

    @property
    def atom_number(self) -> float:
        """Total atoms in the beam volume, N*A*L."""
        return self.atom_density * self.beam_area * self.cell_length


@dataclass(frozen=True)
class PumpBoundary:
    """Complex pump Rabi frequencies at their entry faces (rad/s).

    ``forward_input`` is E_f at z=0, ``backward_input`` is E_b at z=L.
    The forward amplitude must be nonzero: the propagation equations
    divide by |E_f|^4.
    """

    forward_input: complex
    backward_input: complex

    def __post_init__(self) -> None:
        for name in ("forward_input", "backward_input"):
            value = complex(getattr(self, name))
            _require(cmath.isfinite(value), f"{name} must be finite")
            object.__setattr__(self, name, value)
        _require(abs(self.forward_input) > 0.0, "forward_input must have |E_f| > 0")

    @property
    def drive_intensity(self) -> float:
        """E_d^2 = |E_f(0)|^2 in rad^2/s^2."""
        return abs(self.forward_input) ** 2

    @property
    def drive_amplitude(self) -> float:
        return abs(self.forward_input)

    @property
    def equal_pump_convention(self) -> bool:
        """True when |E_f(0)| and |E_b(L)| agree to 1e-12 relative."""
        ef, eb = abs(self.forward_input), abs(self.backward_input)
        return abs(ef - eb) <= 1e-12 * max(ef, eb)

    @property
    def intensity_difference(self) -> float:
        """|E_b|^2 - |E_f|^2 at the entry faces, rad^2/s^2."""
        return abs(self.backward_input) ** 2 - abs(self.forward_input) ** 2


@dataclass(frozen=True)
class DispersionReport:
    """Locking and slow-light figures derived from the medium and pumps."""

    eta: float                    # dimensionless stabilisation factor
    group_velocity: float         # m/s
    group_delay: float            # s
    locked_beat: float            # nu_1 - nu_d, rad/s
    stark_shift: float            # (|E_b|^2-|E_f|^2)/Delta, rad/s
    matched_detuning: float | None  # root of the phase-matching condition, rad/s


def coupling_constant(params: MediumParams) -> float:
    """Field-atom coupling constant kappa = (3/8pi) N lambda^2 gamma_a, rad/(m s)."""
    return (3.0 / (8.0 * math.pi)) * params.atom_density \
        * params.wavelength ** 2 * params.radiative_decay


def alpha(params: MediumParams) -> float:
    """Dimensionless coupling kappa*L/Delta; oscillation analysis needs it > 0."""
    return coupling_constant(params) * params.cell_length / params.one_photon_detuning


def dispersion_report(params: MediumParams, pumps: PumpBoundary) -> DispersionReport:
    """Frequency pulling, group delay and Stark shift for the given drive.

    eta = c*kappa/(2|E_f|^2) controls both the beat-note pulling toward the
    Stark-shifted Raman frequency and the group velocity c/(1+eta).
    """
    ef2 = pumps.drive_intensity
    if ef2 <= 0.0:
        raise DomainError("dispersion_report requires |E_f(0)| > 0")
    kappa = coupling_constant(params)
    eta = C_LIGHT * kappa / (2.0 * ef2)
    v_gr = C_LIGHT / (1.0 + eta)
    tau_gr = (params.cell_length / C_LIGHT) * (1.0 + eta)
    stark = pumps.intensity_difference / params.one_photon_detuning
    locked = eta * (params.raman_splitting + stark) / (1.0 + eta)
    matched = matched_detuning(params, pumps) if kappa > 0.0 else None
    return DispersionReport(
        eta=eta,
        group_velocity=v_gr,
        group_delay=tau_gr,
        locked_beat=locked,
        stark_shift=stark,
        matched_detuning=matched,
    )


def phase_matching_residual(params: MediumParams, pumps: PumpBoundary) -> float:
    """Left-hand side of the phase-matching condition, rad/m.

    kappa*delta/|E_f|^2 + kappa*(|E_b|^2-|E_f|^2)/(Delta*|E_f|^2) + Delta_k.
    Zero exactly when the beat frequency is phase matched.
    """
    ef2 = pumps.drive_intensity
    if ef2 <= 0.0:
        raise DomainError("phase_matching_residual requires |E_f(0)| > 0")
    kappa = coupling_constant(params)
    return (
        kappa * params.two_photon_detuning / ef2
        + kappa * pumps.intensity_difference / (params.one_photon_detuning * ef2)
        + params.phase_mismatch
    )


def matched_detuning(params: MediumParams, pumps: PumpBoundary) -> float:
    """Unique two-photon detuning that zeroes the phase-matching residual.

    delta = -(|E_b|^2-|E_f|^2)/Delta - Delta_k*|E_f|^2/kappa.  For kappa = 0
    the detuning drops out of the condition and no solution exists.
    """
    kappa = coupling_constant(params)
    if kappa <= 0.0:
        raise DomainError("matched_detuning needs kappa > 0; delta drops out of the condition")
    return (
        -pumps.intensity_difference / params.one_photon_detuning
        - params.phase_mismatch * pumps.drive_intensity / kappa
    )


def self_consistent_locked_beat(params: MediumParams, pumps: PumpBoundary) -> float:
    """Beat note nu_1 - nu_d from phase matching with the free-space mismatch.

    Imposes Delta_k = -2*(omega_0 - delta)/c, which ties the carrier
    mismatch to the beat frequency itself, and solves the (linear in delta)
    phase-matching condition.  Algebraically identical to the locked_beat of
    :func:`dispersion_report`; kept separate as an independent route for
    consistency checks.
    """
    ef2 = pumps.drive_intensity
    kappa = coupling_constant(params)
    if kappa <= 0.0:
        raise DomainError("self_consistent_locked_beat needs kappa > 0")
    stark = pumps.intensity_difference / params.one_photon_detuning
    # kappa*delta/E^2 + kappa*stark/E^2 - 2(omega_0 - delta)/c = 0, linear in delta
    a = kappa / ef2 + 2.0 / C_LIGHT
    b = kappa * stark / ef2 - 2.0 * params.raman_splitting / C_LIGHT
    delta_root = -b / a
    return params.raman_splitting - delta_root
