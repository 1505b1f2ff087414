"""Environment state descriptions: graviton field initial state and the
internal Ohmic bath."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VARIANTS = ("vacuum", "thermal", "coherent", "squeezed")
BATH_MODES = ("white_noise", "full_integral")


@dataclass(frozen=True)
class GravitonState:
    """Initial state of the quantized weak gravitational field.

    ``cutoff`` is the hard momentum cutoff regulating the mode integrals
    (inverse-time units); it is a free parameter of the model, shared between
    the vacuum piece of a kernel and any state-specific piece.  Only the
    parameters of the chosen variant may be set:

    - thermal:  ``beta_g``  (inverse field temperature, time units)
    - coherent: ``alpha``   (real displacement amplitude)
    - squeezed: ``r, phi``  (squeeze magnitude >= 0 and phase)
    """

    variant: str
    cutoff: float
    beta_g: float | None = None
    alpha: float | None = None
    r: float | None = None
    phi: float | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if not (np.isfinite(self.cutoff) and self.cutoff > 0):
            raise ValueError("cutoff must be finite and positive")
        needed = {"thermal": ("beta_g",), "coherent": ("alpha",),
                  "squeezed": ("r", "phi"), "vacuum": ()}[self.variant]
        for name in ("beta_g", "alpha", "r", "phi"):
            val = getattr(self, name)
            if name in needed:
                if val is None:
                    raise ValueError(f"{self.variant} state requires {name}")
            elif val is not None:
                raise ValueError(f"{name} is not a parameter of the {self.variant} state")
        if self.variant == "thermal" and self.beta_g <= 0:
            raise ValueError("beta_g must be positive")
        if self.variant == "squeezed" and self.r < 0:
            raise ValueError("squeeze magnitude r must be nonnegative")

    @classmethod
    def vacuum(cls, cutoff):
        return cls("vacuum", cutoff)

    @classmethod
    def thermal(cls, cutoff, beta_g):
        return cls("thermal", cutoff, beta_g=beta_g)

    @classmethod
    def coherent(cls, cutoff, alpha):
        return cls("coherent", cutoff, alpha=alpha)

    @classmethod
    def squeezed(cls, cutoff, r, phi):
        return cls("squeezed", cutoff, r=r, phi=phi)

    def shortest_period(self):
        """Shortest oscillation period the kernel scalar carries in time.

        Used by integrators to cap panel widths so oscillations at the cutoff
        scale are never stepped over.
        """
        period = 2.0 * np.pi / self.cutoff
        if self.variant == "thermal":
            # thermal part decays on the scale beta_g / pi; resolve it too
            period = min(period, float(self.beta_g))
        return period


@dataclass(frozen=True)
class InternalBath:
    """Ohmic bath of internal degrees of freedom, thermal at temperature 1/beta.

    ``lam`` is the dimensionless coupling of the internal sector, ``gamma``
    the Ohmic spectral constant (spectral weight gamma * frequency^2), and
    ``beta`` the inverse temperature.  ``white_noise`` mode is the
    high-temperature limit in which the bath kernel collapses to a delta
    function of weight pi * lam^2 * gamma / beta; it is only meaningful when
    beta is small against the superposition time scales, which the caller is
    responsible for.  ``full_integral`` mode evaluates the frequency integral
    under a hard cutoff ``cutoff_int`` (the uncut integral diverges).
    """

    lam: float
    gamma: float
    beta: float
    mode: str = "white_noise"
    cutoff_int: float | None = None

    def __post_init__(self):
        if self.mode not in BATH_MODES:
            raise ValueError(f"unknown bath mode {self.mode!r}; expected one of {BATH_MODES}")
        if self.lam < 0 or self.gamma < 0:
            raise ValueError("lam and gamma must be nonnegative")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.mode == "full_integral":
            if self.cutoff_int is None or self.cutoff_int <= 0:
                raise ValueError("full_integral mode requires a positive cutoff_int")
        elif self.cutoff_int is not None:
            raise ValueError("cutoff_int only applies to full_integral mode")
