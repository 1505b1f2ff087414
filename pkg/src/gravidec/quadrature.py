"""Deterministic adaptive quadrature engines.

These integrators are the numerical ground truth the rest of the package is
validated against, so they are built for reproducibility rather than raw
speed: fixed Gauss-Legendre panel rules, panels processed in a fixed spatial
order, and pairwise (tree) summation so results are bit-identical across runs
and independent of any parallel scheduling done by callers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._glnodes import _GL_TABLES


class ToleranceError(RuntimeError):
    """Requested tolerance not reached; carries the best estimate found."""

    def __init__(self, message, estimate, error_estimate):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class DivergenceError(RuntimeError):
    """Semi-infinite integrand does not appear to decay."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and panel budget for the adaptive integrators.

    Attributes
    ----------
    rel_tol, abs_tol : float
        Acceptance thresholds: a result is accepted when the internal error
        estimate is below ``max(rel_tol * |value|, abs_tol)``.
    max_panels : int
        Hard cap on the number of leaf panels before giving up.
    panel_rule : int
        Gauss-Legendre order used on each panel.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_panels: int = 2**16
    panel_rule: int = 16

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_panels < 4:
            raise ValueError("max_panels must be at least 4")


def gauss_legendre(n):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].

    Orders 8, 16 and 32 come from an embedded 30-digit table; other orders
    fall back to numpy's generator.
    """
    if n in _GL_TABLES:
        xs, ws = _GL_TABLES[n]
        return np.array(xs), np.array(ws)
    return np.polynomial.legendre.leggauss(n)


def pairwise_sum(values):
    """Sum a sequence in a fixed-order binary tree, error O(log n)."""
    vals = list(values)
    if not vals:
        return 0.0
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def _panel_value(f, a, b, nodes, weights):
    half = 0.5 * (b - a)
    xs = 0.5 * (a + b) + half * nodes
    return half * float(np.dot(weights, np.asarray(f(xs), dtype=float)))


def _initial_edges(a, b, max_width):
    if max_width is None or max_width <= 0 or max_width >= (b - a):
        return [a, b]
    n = int(np.ceil((b - a) / max_width))
    return list(np.linspace(a, b, n + 1))


def integrate_1d(f, a, b, spec=QuadratureSpec(), max_width=None):
    """Adaptive panel integration of ``f`` over [a, b].

    Each panel is evaluated with the ``spec.panel_rule``-point Gauss-Legendre
    rule and compared against its two-half refinement; panels that disagree
    are bisected.  ``f`` must accept a numpy array of abscissas.

    Parameters
    ----------
    f : callable
        Vectorized integrand.
    a, b : float
        Finite integration limits, a <= b.
    spec : QuadratureSpec
    max_width : float, optional
        Upper bound on the initial panel width.  Callers integrating
        oscillatory functions should pass half the shortest period so no
        oscillation is ever stepped over (the refinement test cannot detect
        aliasing it never samples).

    Returns
    -------
    (value, error_estimate) : tuple of float

    Raises
    ------
    ToleranceError
        If the panel budget is exhausted first.
    """
    if not np.isfinite(a) or not np.isfinite(b):
        raise ValueError("integrate_1d requires finite limits")
    if a > b:
        raise ValueError("integrate_1d requires a <= b")
    if a == b:
        return 0.0, 0.0

    nodes, weights = gauss_legendre(spec.panel_rule)
    edges = _initial_edges(a, b, max_width)

    # Depth-first refinement, left child first, so the leaf sequence is
    # ordered by position and independent of intermediate estimates.
    leaves = []
    total_width = b - a
    stack = [(edges[i + 1], edges[i]) for i in range(len(edges) - 2, -1, -1)]
    coarse_cache = {}
    n_panels = len(stack)
    while stack:
        hi, lo = stack.pop()
        coarse = coarse_cache.pop((lo, hi), None)
        if coarse is None:
            coarse = _panel_value(f, lo, hi, nodes, weights)
        mid = 0.5 * (lo + hi)
        left = _panel_value(f, lo, mid, nodes, weights)
        right = _panel_value(f, mid, hi, nodes, weights)
        refined = left + right
        err = abs(refined - coarse)
        budget = max(spec.abs_tol * (hi - lo) / total_width,
                     spec.rel_tol * abs(refined))
        if err <= budget or (hi - lo) < 1e-14 * total_width:
            leaves.append((lo, refined, err))
            continue
        if n_panels + 2 > spec.max_panels:
            leaves.append((lo, refined, err))
            for rest_hi, rest_lo in reversed(stack):
                leaves.append((rest_lo,
                               _panel_value(f, rest_lo, rest_hi, nodes, weights),
                               np.inf))
            value = pairwise_sum(v for _, v, _ in sorted(leaves))
            raise ToleranceError(
                f"panel budget {spec.max_panels} exhausted on [{a}, {b}]",
                value, pairwise_sum(e for _, _, e in leaves))
        n_panels += 2
        stack.append((hi, mid))
        stack.append((mid, lo))
        coarse_cache[(lo, mid)] = left
        coarse_cache[(mid, hi)] = right

    leaves.sort(key=lambda t: t[0])
    value = pairwise_sum(v for _, v, _ in leaves)
    err = pairwise_sum(e for _, _, e in leaves)
    return value, err


def integrate_semi_infinite(f, a, decay_scale, spec=QuadratureSpec(),
                            max_width=None):
    """Integrate ``f`` on [a, inf) assuming eventual exponential decay.

    The tail is covered by panels of width ``decay_scale`` whose contributions
    are summed until they fall below ``spec.abs_tol``; contributions that grow
    over several consecutive panels trigger :class:`DivergenceError`.
    """
    if decay_scale <= 0:
        raise ValueError("decay_scale must be positive")
    contributions = []
    errors = []
    lo = a
    growing = 0
    prev = None
    for k in range(4096):
        hi = lo + decay_scale
        val, err = integrate_1d(f, lo, hi, spec, max_width=max_width)
        contributions.append(val)
        errors.append(err)
        if prev is not None and abs(val) > abs(prev):
            growing += 1
            if growing >= 6 and k >= 12:
                raise DivergenceError(
                    f"panel contributions not shrinking past x={hi:g}")
        else:
            growing = 0
        prev = val
        if abs(val) < spec.abs_tol and k >= 2:
            return pairwise_sum(contributions), pairwise_sum(errors)
        lo = hi
    raise DivergenceError("tail did not fall below abs_tol within panel budget")


def _panel_value_2d(f, rect, nodes, weights):
    (ax, bx), (ay, by) = rect
    hx, hy = 0.5 * (bx - ax), 0.5 * (by - ay)
    xs = 0.5 * (ax + bx) + hx * nodes
    ys = 0.5 * (ay + by) + hy * nodes
    vals = np.asarray(f(xs[:, None], ys[None, :]), dtype=float)
    return hx * hy * float(weights @ vals @ weights)


def integrate_2d_panel(f, x_edges, y_edges, spec=QuadratureSpec(),
                       max_width=None):
    """Tensor-product Gauss-Legendre integration over a gridded rectangle.

    The domain is the rectangle spanned by the sorted breakpoint lists
    ``x_edges`` x ``y_edges``; every sub-rectangle of the grid is refined
    dyadically (split into 2x2) until its coarse/refined estimates agree.
    Breakpoints let callers place integrand kinks on panel boundaries, which
    restores per-panel smoothness and hence the nominal convergence rate.

    ``f`` must accept broadcastable arrays (column of x against row of y).

    Returns ``(value, error_estimate)``.
    """
    x_edges = sorted(x_edges)
    y_edges = sorted(y_edges)
    if len(x_edges) < 2 or len(y_edges) < 2:
        raise ValueError("need at least two breakpoints per axis")
    nodes, weights = gauss_legendre(spec.panel_rule)

    def axis_edges(edges):
        out = []
        for i in range(len(edges) - 1):
            out.extend(_initial_edges(edges[i], edges[i + 1], max_width)[:-1])
        out.append(edges[-1])
        return out

    xs = axis_edges(x_edges)
    ys = axis_edges(y_edges)
    rects = [((xs[i], xs[i + 1]), (ys[j], ys[j + 1]))
             for i in range(len(xs) - 1) for j in range(len(ys) - 1)]
    area = (x_edges[-1] - x_edges[0]) * (y_edges[-1] - y_edges[0])

    leaves = []
    n_panels = len(rects)
    stack = list(reversed(rects))
    coarse_cache = {}
    while stack:
        rect = stack.pop()
        coarse = coarse_cache.pop(rect, None)
        if coarse is None:
            coarse = _panel_value_2d(f, rect, nodes, weights)
        (ax, bx), (ay, by) = rect
        mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
        children = [((ax, mx), (ay, my)), ((ax, mx), (my, by)),
                    ((mx, bx), (ay, my)), ((mx, bx), (my, by))]
        child_vals = [_panel_value_2d(f, r, nodes, weights) for r in children]
        refined = pairwise_sum(child_vals)
        err = abs(refined - coarse)
        rect_area = (bx - ax) * (by - ay)
        budget = max(spec.abs_tol * rect_area / area, spec.rel_tol * abs(refined))
        if err <= budget or rect_area < 1e-24 * area:
            leaves.append((rect, refined, err))
            continue
        if n_panels + 4 > spec.max_panels:
            leaves.append((rect, refined, err))
            for r in reversed(stack):
                v = coarse_cache.get(r)
                if v is None:
                    v = _panel_value_2d(f, r, nodes, weights)
                leaves.append((r, v, np.inf))
            value = pairwise_sum(v for _, v, _ in sorted(leaves))
            raise ToleranceError("2d panel budget exhausted", value,
                                 pairwise_sum(e for _, _, e in leaves))
        n_panels += 4
        for r, v in zip(reversed(children), reversed(child_vals)):
            stack.append(r)
            coarse_cache[r] = v

    leaves.sort(key=lambda t: t[0])
    value = pairwise_sum(v for _, v, _ in leaves)
    err = pairwise_sum(e for _, _, e in leaves)
    return value, err
