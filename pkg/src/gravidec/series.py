"""Maclaurin-series oracle: exact small-argument expansions from defining
integrals.

The kernel special functions all have removable singularities at zero whose
closed forms cancel catastrophically in floating point, so their small-x
evaluation uses truncated Maclaurin series.  This module derives those series
*from the defining integrals* -- never from the closed forms -- by term-wise
integration of the integrand's Taylor expansion in exact rational arithmetic.
The frozen tables in :mod:`gravidec._series_tables` were produced by this
derivation, and the test suite re-runs it to confirm them.

Function ids understood by :func:`maclaurin_defining_integral`:

``F``            (1/x^6) int_0^x y^5 cos(y) dy
``F_sin``        (1/x^6) int_0^x y^5 sin(y) dy  (odd partner entering the
                 phase-shifted kernel)
``F_th``         (1/60) int_0^inf u^5 cos(u x) / (e^(pi u) - 1) du
``G``            two-time transform of F(u - u'), scaled by 1/3
``G_th``         two-time transform of F_th(u - u'), scaled by 60
``G_coh_I``      two-time transform of F(u - u') + F(u + u'), scaled by 1/32
``G_sq_I_cos``   cos(phi)-part: transform of F(u + u'), scaled by 36
``G_sq_I_sin``   sin(phi)-part: transform of F_sin(u + u'), scaled by 36
``G_coh_II``     equal-time transform of 1/6 + F(2u), scaled by 12
``G_sq_II_cos``  equal-time transform of F(2u), scaled by 48
``G_sq_II_sin``  equal-time transform of F_sin(2u), scaled by 48

The two-time transform of a scalar f is the double integral of
d(u) d(u') f(u, u') over [0, x]^2 with the triangular branch-separation
profile d(u) = u below x/2 and x - u above; the equal-time transform uses
weight d(u)^2 on [0, x].  Both reduce, after scaling out x, to fixed rational
moments on the unit square computed here with sympy.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

FUNCTION_IDS = (
    "F", "F_sin", "F_th", "G", "G_th", "G_coh_I",
    "G_sq_I_cos", "G_sq_I_sin", "G_coh_II", "G_sq_II_cos", "G_sq_II_sin",
)

_MAX_ORDER = 40


def _sympy():
    import sympy
    return sympy


@lru_cache(maxsize=None)
def _coef_cos_moment(k):
    """Coefficient of x^(2k) in (1/x^6) int_0^x y^5 cos(y) dy."""
    sp = _sympy()
    return Fraction(int(sp.Integer(-1)**k), int(sp.factorial(2 * k) * (2 * k + 6)))


@lru_cache(maxsize=None)
def _coef_sin_moment(k):
    sp = _sympy()
    return Fraction(int(sp.Integer(-1)**k), int(sp.factorial(2 * k + 1) * (2 * k + 7)))


@lru_cache(maxsize=None)
def _coef_bose_moment(k):
    """Coefficient of x^(2k) in (1/60) int_0^inf u^5 cos(ux)/(e^(pi u)-1) du.

    Term-wise integration gives Gamma(2k+6) zeta(2k+6) / pi^(2k+6) moments;
    the pi powers cancel against the even zeta values, leaving a rational.
    """
    sp = _sympy()
    val = (sp.Integer(-1)**k / (60 * sp.factorial(2 * k))
           * sp.gamma(2 * k + 6) * sp.zeta(2 * k + 6) / sp.pi**(2 * k + 6))
    val = sp.nsimplify(sp.simplify(val))
    if not val.is_rational:
        raise RuntimeError(f"Bose moment {k} did not reduce to a rational")
    return Fraction(int(sp.fraction(val)[0]), int(sp.fraction(val)[1]))


@lru_cache(maxsize=None)
def _unit_square_moments(m, sign):
    """Exact unit-square moment of a b (a -+ b)^m under the three-panel split.

    Panels: [0,1/2]^2 with weight a*b, [1/2,1]^2 with weight (1-a)(1-b), and
    twice the cross panel with weight a*(1-b).  Scaling u = x a shows the
    physical transform of (u -+ u')^m picks up exactly x^(m+4) times this.
    """
    sp = _sympy()
    a, b = sp.symbols("a b", positive=True)
    g = (a + sign * b)**m
    half = sp.Rational(1, 2)
    t1 = sp.integrate(sp.integrate(a * b * g, (b, 0, half)), (a, 0, half))
    t2 = sp.integrate(sp.integrate((1 - a) * (1 - b) * g, (b, half, 1)), (a, half, 1))
    t3 = sp.integrate(sp.integrate(a * (1 - b) * g, (b, half, 1)), (a, 0, half))
    val = sp.nsimplify(t1 + t2 + 2 * t3)
    return Fraction(int(sp.fraction(val)[0]), int(sp.fraction(val)[1]))


@lru_cache(maxsize=None)
def _unit_line_moment(m):
    """Exact unit-interval moment of a^m under the equal-time weight d(a)^2."""
    sp = _sympy()
    a = sp.symbols("a", positive=True)
    half = sp.Rational(1, 2)
    val = (sp.integrate(a**(m + 2), (a, 0, half))
           + sp.integrate((1 - a)**2 * a**m, (a, half, 1)))
    val = sp.nsimplify(val)
    return Fraction(int(sp.fraction(val)[0]), int(sp.fraction(val)[1]))


def maclaurin_defining_integral(which, order):
    """Exact Maclaurin coefficients of a kernel function, power -> Fraction.

    Parameters
    ----------
    which : str
        One of :data:`FUNCTION_IDS`.
    order : int
        Highest monomial power included (at most 40).

    Returns
    -------
    dict[int, Fraction]
        Coefficients of x^p for every p <= order with a nonzero entry.
    """
    if order > _MAX_ORDER:
        raise ValueError(f"order {order} exceeds supported maximum {_MAX_ORDER}")
    if which not in FUNCTION_IDS:
        raise ValueError(f"unknown function id {which!r}; "
                         f"expected one of {FUNCTION_IDS}")

    out = {}
    k = 0
    while True:
        if which == "F":
            p, c = 2 * k, _coef_cos_moment(k)
        elif which == "F_sin":
            p, c = 2 * k + 1, _coef_sin_moment(k)
        elif which == "F_th":
            p, c = 2 * k, _coef_bose_moment(k)
        elif which == "G":
            p = 2 * k + 4
            c = Fraction(1, 3) * _coef_cos_moment(k) * _unit_square_moments(2 * k, -1)
        elif which == "G_th":
            p = 2 * k + 4
            c = 60 * _coef_bose_moment(k) * _unit_square_moments(2 * k, -1)
        elif which == "G_coh_I":
            p = 2 * k + 4
            c = Fraction(1, 32) * _coef_cos_moment(k) * (
                _unit_square_moments(2 * k, -1) + _unit_square_moments(2 * k, +1))
        elif which == "G_sq_I_cos":
            p = 2 * k + 4
            c = 36 * _coef_cos_moment(k) * _unit_square_moments(2 * k, +1)
        elif which == "G_sq_I_sin":
            p = 2 * k + 5
            c = 36 * _coef_sin_moment(k) * _unit_square_moments(2 * k + 1, +1)
        elif which == "G_coh_II":
            p = 2 * k + 3
            c = 12 * _coef_cos_moment(k) * 4**k * _unit_line_moment(2 * k)
            if k == 0:
                # the equal-time coherent scalar is (1/6 + F(2u)); the flat
                # 1/6 contributes only at the leading power
                c += 12 * Fraction(1, 6) * _unit_line_moment(0)
        elif which == "G_sq_II_cos":
            p = 2 * k + 3
            c = 48 * _coef_cos_moment(k) * 4**k * _unit_line_moment(2 * k)
        else:  # G_sq_II_sin
            p = 2 * k + 4
            c = 48 * _coef_sin_moment(k) * 2**(2 * k + 1) * _unit_line_moment(2 * k + 1)
        if p > order:
            return out
        out[p] = c
        k += 1
