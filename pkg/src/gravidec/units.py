"""Unit handling: everything internal runs in Planck units (hbar = c = G =
k_B = 1); SI values are converted at the configuration boundary and converted
back only for reported decoherence times."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

# CODATA 2018 SI values
HBAR = 1.054571817e-34      # J s
C_LIGHT = 299792458.0       # m / s
G_NEWTON = 6.67430e-11      # m^3 / (kg s^2)
K_BOLTZMANN = 1.380649e-23  # J / K

PLANCK_MASS = math.sqrt(HBAR * C_LIGHT / G_NEWTON)          # kg
PLANCK_TIME = math.sqrt(HBAR * G_NEWTON / C_LIGHT**5)       # s
PLANCK_LENGTH = math.sqrt(HBAR * G_NEWTON / C_LIGHT**3)     # m
PLANCK_TEMPERATURE = math.sqrt(HBAR * C_LIGHT**5 / G_NEWTON) / K_BOLTZMANN  # K

MODES = ("planck", "si")


@dataclass(frozen=True)
class UnitSystem:
    """Conversion context between Planck-unit internals and user-facing units.

    In ``planck`` mode every conversion is the identity.  In ``si`` mode
    masses are kilograms, times seconds, cutoffs 1/s, temperatures kelvin,
    positions meters and velocities m/s.  Round trips are exact to floating
    point (each conversion is a single multiplication).
    """

    mode: str = "planck"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown unit mode {self.mode!r}; expected one of {MODES}")

    @property
    def is_si(self):
        return self.mode == "si"

    def mass_to_planck(self, m):
        return m / PLANCK_MASS if self.is_si else m

    def mass_from_planck(self, m):
        return m * PLANCK_MASS if self.is_si else m

    def time_to_planck(self, t):
        return t / PLANCK_TIME if self.is_si else t

    def time_from_planck(self, t):
        return t * PLANCK_TIME if self.is_si else t

    def frequency_to_planck(self, f):
        return f * PLANCK_TIME if self.is_si else f

    def frequency_from_planck(self, f):
        return f / PLANCK_TIME if self.is_si else f

    def length_to_planck(self, x):
        return x / PLANCK_LENGTH if self.is_si else x

    def length_from_planck(self, x):
        return x * PLANCK_LENGTH if self.is_si else x

    def velocity_to_planck(self, v):
        return v / C_LIGHT if self.is_si else v

    def velocity_from_planck(self, v):
        return v * C_LIGHT if self.is_si else v

    def temperature_to_beta_planck(self, temp):
        """Kelvin -> inverse temperature in Planck time units.

        beta = hbar / (k_B T) in seconds, divided by the Planck time; this
        reduces to PLANCK_TEMPERATURE / T.
        """
        if not self.is_si:
            raise ValueError("temperature_to_beta_planck is an SI-mode conversion")
        if temp <= 0:
            raise ValueError("temperature must be positive")
        return PLANCK_TEMPERATURE / temp

    def beta_planck_to_temperature(self, beta):
        if not self.is_si:
            raise ValueError("beta_planck_to_temperature is an SI-mode conversion")
        return PLANCK_TEMPERATURE / beta


def restore_units(report, units: UnitSystem):
    """Re-express a Planck-unit decoherence report in the target units.

    The decoherence exponent is dimensionless and unchanged (in restored
    units its mass prefactors read (m0 / M_planck)^2, which is exactly the
    squared Planck-unit mass used internally); the decoherence time converts
    from Planck times to seconds in SI mode.
    """
    if report.tau_dec is None or not units.is_si:
        return replace(report)
    return replace(report, tau_dec=units.time_from_planck(report.tau_dec))
