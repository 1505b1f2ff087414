"""Noise kernels of the two environments.

The gravitational noise kernel factorizes into a state-dependent scalar times
the fixed isotropic tensor with coefficients (3, -2); this module evaluates
the scalar.  All quantities are in natural units with the cutoff, times and
temperatures sharing one time scale (unit handling lives in
:mod:`gravidec.units`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import specfun
from .quadrature import QuadratureSpec, integrate_1d
from .states import GravitonState, InternalBath
from .tensor import P_TENSOR, IsotropicRank4


@dataclass(frozen=True)
class KernelSample:
    """One evaluation of the full rank-4 kernel: scalar x isotropic tensor."""

    scalar: float
    tensor: IsotropicRank4
    t: float
    t_prime: float

    def component(self, i, j, k, l):
        return self.scalar * self.tensor.component(i, j, k, l)


@dataclass(frozen=True)
class DeltaWeight:
    """Distributional kernel value w * delta(t - t').

    Returned by :func:`n_int` in white-noise mode so that consumers can
    collapse one time integral exactly instead of resolving a delta function
    numerically.
    """

    weight: float


def _vacuum_scalar(cutoff, m0, dt):
    return m0**2 * cutoff**6 / (15.0 * np.pi) * specfun.F(cutoff * dt)


def noise_scalar(state: GravitonState, m0, t, t_prime):
    """Scalar part of the graviton noise kernel at times (t, t').

    vacuum:    (m0^2 L^6 / 15 pi) F(L (t-t'))
    thermal:   vacuum + (8 m0^2 pi^5 / beta_g^6) F_th(pi (t-t') / beta_g)
    coherent:  vacuum + (m0^2 alpha^2 L^6 / 30 pi) [F(L(t-t')) + F(L(t+t'))]
    squeezed:  cosh(2r) vacuum
               - (m0^2 L^6 / 15 pi) sinh(2r) F_phase(L(t+t'), phi)

    The coherent addition is the closed form of the cutoff integral of
    omega^5 cos(omega t) cos(omega t') via the product-to-sum identity
    (verified against direct quadrature in the tests).  Vacuum and thermal
    kernels are stationary (depend on t - t' only); coherent and squeezed
    are not, through their t + t' dependence.
    """
    if m0 <= 0:
        raise ValueError("m0 must be positive")
    L = state.cutoff
    vac = _vacuum_scalar(L, m0, t - t_prime)
    if state.variant == "vacuum":
        return vac
    if state.variant == "thermal":
        return vac + (8.0 * m0**2 * np.pi**5 / state.beta_g**6
                      * specfun.F_th(np.pi * (t - t_prime) / state.beta_g))
    if state.variant == "coherent":
        add = (m0**2 * state.alpha**2 * L**6 / (30.0 * np.pi)
               * (specfun.F(L * (t - t_prime)) + specfun.F(L * (t + t_prime))))
        return vac + add
    # squeezed
    ch, sh = np.cosh(2.0 * state.r), np.sinh(2.0 * state.r)
    anomalous = (m0**2 * L**6 / (15.0 * np.pi)
                 * specfun.F_phase(L * (t + t_prime), state.phi))
    return ch * vac - sh * anomalous


def noise_equal_time(state: GravitonState, m0, t):
    """Analytic t' -> t limit of :func:`noise_scalar`.

    Computed from the small-argument values of the F-functions (F(0) = 1/6),
    never by numerical differencing, which would be pure cancellation noise.
    """
    if m0 <= 0:
        raise ValueError("m0 must be positive")
    L = state.cutoff
    vac_const = m0**2 * L**6 / (90.0 * np.pi)  # F(0) = 1/6 folded in
    if state.variant == "vacuum":
        return vac_const * np.ones_like(np.asarray(t, dtype=float)) if np.ndim(t) else vac_const
    if state.variant == "thermal":
        th_const = (8.0 * m0**2 * np.pi**5 / state.beta_g**6) * specfun.F_th(0.0)
        total = vac_const + th_const
        return total * np.ones_like(np.asarray(t, dtype=float)) if np.ndim(t) else total
    if state.variant == "coherent":
        add = (m0**2 * state.alpha**2 * L**6 / (30.0 * np.pi)
               * (1.0 / 6.0 + specfun.F(2.0 * L * np.asarray(t, dtype=float))))
        return vac_const + add
    ch, sh = np.cosh(2.0 * state.r), np.sinh(2.0 * state.r)
    anomalous = (m0**2 * L**6 / (15.0 * np.pi)
                 * specfun.F_phase(2.0 * L * np.asarray(t, dtype=float), state.phi))
    return ch * vac_const - sh * anomalous


def noise_kernel(state: GravitonState, m0, t, t_prime):
    """Full kernel sample (scalar plus the fixed tensor factor)."""
    return KernelSample(scalar=float(noise_scalar(state, m0, t, t_prime)),
                        tensor=P_TENSOR, t=float(t), t_prime=float(t_prime))


def white_noise_weight(bath: InternalBath):
    """Delta-function weight pi lam^2 gamma / beta of the high-T bath kernel."""
    return np.pi * bath.lam**2 * bath.gamma / bath.beta


def n_int(bath: InternalBath, t, t_prime, spec=QuadratureSpec()):
    """Internal-bath noise kernel.

    White-noise mode returns a :class:`DeltaWeight` (the caller integrates
    the delta analytically).  Full-integral mode evaluates

        (lam^2 gamma / 2) int_0^cutoff_int dw w coth(w beta / 2) cos(w (t-t'))

    by adaptive quadrature; the integrand needs the hard cutoff because the
    uncut integral grows like w at large frequency.
    """
    if bath.mode == "white_noise":
        return DeltaWeight(white_noise_weight(bath))
    if bath.lam == 0.0 or bath.gamma == 0.0:
        return 0.0
    tau = abs(t - t_prime)
    beta = bath.beta

    def integrand(w):
        w = np.asarray(w, dtype=float)
        # w coth(w beta/2) -> 2/beta as w -> 0; tanh form avoids the 0/0
        return np.where(w * beta < 1e-8, 2.0 / beta,
                        w / np.tanh(0.5 * beta * w)) * np.cos(w * tau)

    max_width = np.pi / tau if tau > 0 else None
    val, _ = integrate_1d(integrand, 0.0, bath.cutoff_int, spec,
                          max_width=max_width)
    return 0.5 * bath.lam**2 * bath.gamma * val
