"""Stable evaluation of the closed-form kernel functions.

Every function here has a removable singularity at x = 0 behind a 1/x^n
prefactor; the closed forms lose all significant digits for small arguments
(the x^6 forms are pure cancellation noise below x ~ 0.1 in double
precision).  Evaluation therefore switches to a truncated Maclaurin series
below ``SeriesPolicy.switchover_x``.  The series coefficients are exact
rationals frozen in :mod:`gravidec._series_tables` after confirmation by the
:mod:`gravidec.series` oracle.

Large arguments are handled by rewriting the hyperbolic/exponential forms in
powers of e^(-x) before evaluating, so nothing overflows on the way to a
finite result.

All functions are numpy-vectorized and accept scalars or arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._series_tables import MACLAURIN
from .states import GravitonState, InternalBath


@dataclass(frozen=True)
class SeriesPolicy:
    """Where to switch from closed form to series, and how many terms to keep.

    With the default switchover at 0.5 the closed forms still retain ~11
    significant digits (they lose about 5 to cancellation there), and the
    series truncation error is far below double precision for every function:
    the F-family coefficients decay factorially, and the thermal family,
    whose series converge only for |x| < pi, still shrink by a factor
    (0.5/pi)^2 ~ 0.025 per term, putting the 12-term truncation near 1e-22.
    """

    switchover_x: float = 0.5
    series_order: int = 12
    target_rel_err: float = 1e-12

    def __post_init__(self):
        if self.switchover_x <= 0:
            raise ValueError("switchover_x must be positive")
        if not 1 <= self.series_order <= 16:
            raise ValueError("series_order must be between 1 and 16 (frozen table size)")


DEFAULT_POLICY = SeriesPolicy()


def _table(name):
    tab = MACLAURIN[name]
    powers = sorted(tab)
    return powers[0], powers[1] - powers[0], np.array([float(tab[p]) for p in powers])


# (leading power, stride between powers, float coefficients)
_TABLES = {name: _table(name) for name in MACLAURIN}


def _series_eval(x, name, policy):
    """Evaluate x^p0 * sum_k c_k x^(stride k) by Horner in x^stride."""
    p0, stride, coeffs = _TABLES[name]
    coeffs = coeffs[:policy.series_order]
    xs = x**stride
    acc = np.zeros_like(x)
    for c in coeffs[::-1]:
        acc = acc * xs + c
    return acc * x**p0


def _split_eval(x, name, closed, policy, odd=False):
    """Series below the switchover, closed form above; vectorized."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax < policy.switchover_x
    if small.any():
        out[small] = _series_eval(ax[small], name, policy)
    if (~small).any():
        out[~small] = closed(ax[~small])
    if odd:
        out = np.where(x < 0, -out, out)
    return float(out[0]) if scalar else out


def F(x, policy=DEFAULT_POLICY):
    """Sharp-cutoff cosine moment (1/x^6) int_0^x y^5 cos(y) dy.

    Even and entire; F(0) = 1/6.  This is the shape of the vacuum noise
    kernel in the dimensionless variable cutoff * (t - t').
    """
    def closed(ax):
        x2 = ax * ax
        x4 = x2 * x2
        return ((5.0 * x4 - 60.0 * x2 + 120.0) * np.cos(ax)
                + ax * (x4 - 20.0 * x2 + 120.0) * np.sin(ax) - 120.0) / (x2 * x4)
    return _split_eval(x, "F", closed, policy)


def F_sin(x, policy=DEFAULT_POLICY):
    """Odd partner (1/x^6) int_0^x y^5 sin(y) dy; F_sin(0) = 0."""
    def closed(ax):
        x2 = ax * ax
        x4 = x2 * x2
        return ((5.0 * x4 - 60.0 * x2 + 120.0) * np.sin(ax)
                - ax * (x4 - 20.0 * x2 + 120.0) * np.cos(ax)) / (x2 * x4)
    return _split_eval(x, "F_sin", closed, policy, odd=True)


def F_phase(x, phi, policy=DEFAULT_POLICY):
    """Phase-shifted cutoff moment (1/x^6) int_0^x y^5 cos(y - phi) dy.

    Splits exactly into cos(phi) F(x) + sin(phi) F_sin(x), which is how both
    the closed form and the series fallback are evaluated.
    """
    return np.cos(phi) * F(x, policy) + np.sin(phi) * F_sin(x, policy)


def F_th(x, policy=DEFAULT_POLICY):
    """Thermal kernel shape 1/x^6 - (2 cosh^4 x + 11 cosh^2 x + 2)/(15 sinh^6 x).

    Even; the 1/x^6 poles of the two terms cancel, leaving F_th(0) = 2/945.
    The hyperbolic part is evaluated in powers of q = e^(-2|x|), which is
    exact algebra and keeps the expression finite for arbitrarily large x
    (cosh overflows near x = 710 if evaluated directly).
    """
    def closed(ax):
        q = np.exp(-2.0 * ax)
        poly = 2.0 + q * (52.0 + q * (132.0 + q * (52.0 + q * 2.0)))
        return 1.0 / ax**6 - (4.0 * q / 15.0) * poly / (1.0 - q)**6
    return _split_eval(x, "F_th", closed, policy)


def G(x, policy=DEFAULT_POLICY):
    """Vacuum decoherence growth function; G ~ x^4/288 small-x, -> 1 large-x."""
    def closed(ax):
        return (1.0 + (2.0 / (3.0 * ax)) * (np.sin(ax) - 8.0 * np.sin(ax / 2.0))
                + (1.0 / ax**2) * ((2.0 / 3.0) * np.cos(ax)
                                   - (32.0 / 3.0) * np.cos(ax / 2.0) + 10.0))
    return _split_eval(x, "G", closed, policy)


def G_th(x, policy=DEFAULT_POLICY):
    """Thermal decoherence growth function; ~ x^4/126 small-x, -> 1 large-x.

    The exponential quotient is rewritten in q = e^(-x) so that e^(4x) never
    appears (it overflows near x = 177).
    """
    def closed(ax):
        q = np.exp(-ax)
        num = 1.0 + q * (16.0 + q * (26.0 + q * (16.0 + q)))
        return num / (1.0 - q * q)**2 - 15.0 / ax**2
    return _split_eval(x, "G_th", closed, policy)


def G_coh_I(x, policy=DEFAULT_POLICY):
    """Coherent-state graviton-only growth function; ~ x^4/1536 small-x."""
    def closed(ax):
        return (1.0 / (1152.0 * ax**2)) * (
            1495.0 + 126.0 * ax**2 - 1728.0 * np.cos(ax / 2.0)
            + 288.0 * np.cos(ax) - 64.0 * np.cos(1.5 * ax) + 9.0 * np.cos(2.0 * ax)
            + 18.0 * ax * np.sin(2.0 * ax)
            - 96.0 * ax * (9.0 * np.sin(ax / 2.0) - 3.0 * np.sin(ax)
                           + np.sin(1.5 * ax)))
    return _split_eval(x, "G_coh_I", closed, policy)


def G_coh_II(x, policy=DEFAULT_POLICY):
    """Coherent-state mixed-term growth function; ~ x^3/3 small-x, ~ x^3/6 large-x."""
    def closed(ax):
        return (1.0 / (12.0 * ax**3)) * (
            441.0 + 2.0 * ax**6 + 216.0 * (ax**2 - 2.0) * np.cos(ax)
            + 9.0 * (2.0 * ax**2 - 1.0) * np.cos(2.0 * ax)
            - 36.0 * ax * (12.0 - 2.0 * ax**2 + np.cos(ax)) * np.sin(ax))
    return _split_eval(x, "G_coh_II", closed, policy)


def _phase_pair(x, phi, cos_name, sin_name, closed_cos, closed_sin, policy):
    cos_part = _split_eval(x, cos_name, closed_cos, policy)
    sin_part = _split_eval(x, sin_name, closed_sin, policy)
    return np.cos(phi) * cos_part + np.sin(phi) * sin_part


def G_sq_I(x, phi, policy=DEFAULT_POLICY):
    """Squeeze-phase graviton-only growth function.

    Decomposes as cos(phi) A(x) + sin(phi) B(x) with A ~ (3/8) x^4 small-x;
    the two parts carry separate series fallbacks.
    """
    def closed_cos(ax):
        return (1.0 / ax**2) * (
            -576.0 * np.cos(ax / 2.0) + 216.0 * np.cos(ax)
            - 64.0 * np.cos(1.5 * ax) + 9.0 * np.cos(2.0 * ax)
            + 18.0 * ax**2 + 415.0
            - 288.0 * ax * np.sin(ax / 2.0) + 216.0 * ax * np.sin(ax)
            - 96.0 * ax * np.sin(1.5 * ax) + 18.0 * ax * np.sin(2.0 * ax))

    def closed_sin(ax):
        # coefficient of sin(phi) after expanding every cos/sin(k x - phi)
        return (1.0 / ax**2) * (
            -576.0 * np.sin(ax / 2.0) + 216.0 * np.sin(ax)
            - 64.0 * np.sin(1.5 * ax) + 9.0 * np.sin(2.0 * ax)
            + 288.0 * ax * np.cos(ax / 2.0) - 216.0 * ax * np.cos(ax)
            + 96.0 * ax * np.cos(1.5 * ax) - 18.0 * ax * np.cos(2.0 * ax))

    return _phase_pair(x, phi, "G_sq_I_cos", "G_sq_I_sin",
                       closed_cos, closed_sin, policy)


def G_sq_II(x, phi, policy=DEFAULT_POLICY):
    """Squeeze-phase mixed-term growth function; ~ (2/3) cos(phi) x^3 small-x."""
    def closed_cos(ax):
        return (1.0 / ax**3) * (
            72.0 * (ax**2 - 2.0) * np.cos(ax) + (6.0 * ax**2 - 3.0) * np.cos(2.0 * ax)
            + 147.0 - 144.0 * ax * np.sin(ax) + 24.0 * ax**3 * np.sin(ax)
            - 6.0 * ax * np.sin(2.0 * ax))

    def closed_sin(ax):
        return (1.0 / ax**3) * (
            72.0 * (ax**2 - 2.0) * np.sin(ax) + (6.0 * ax**2 - 3.0) * np.sin(2.0 * ax)
            + 144.0 * ax * np.cos(ax) - 24.0 * ax**3 * np.cos(ax)
            + 6.0 * ax * np.cos(2.0 * ax) - 4.0 * ax**3)

    return _phase_pair(x, phi, "G_sq_II_cos", "G_sq_II_sin",
                       closed_cos, closed_sin, policy)


# --- interaction-strength constants of the mixed (bath x graviton) terms ---

def kappa_vacuum(bath: InternalBath, cutoff, m0):
    return bath.gamma * np.pi * cutoff / (108.0 * m0**2 * bath.beta)


def kappa_thermal(bath: InternalBath, beta_g, m0):
    return 4.0 * bath.gamma * np.pi**2 / (189.0 * m0**2 * bath.beta * beta_g)


def kappa_coherent(bath: InternalBath, cutoff, m0):
    return bath.gamma * np.pi * cutoff / (192.0 * m0**2 * bath.beta)


def kappa_squeezed(bath: InternalBath, cutoff, m0):
    return 3.0 * bath.gamma * np.pi * cutoff / (2.0 * bath.beta * m0**2)


def kappa_constants(bath: InternalBath, state: GravitonState, m0):
    """The kappa constant matching the graviton state's variant."""
    if m0 <= 0:
        raise ValueError("m0 must be positive")
    if state.variant == "vacuum":
        return kappa_vacuum(bath, state.cutoff, m0)
    if state.variant == "thermal":
        return kappa_thermal(bath, state.beta_g, m0)
    if state.variant == "coherent":
        return kappa_coherent(bath, state.cutoff, m0)
    if state.variant == "squeezed":
        return kappa_squeezed(bath, state.cutoff, m0)
    raise ValueError(f"unknown variant {state.variant!r}")
