"""Panel Gauss-Legendre quadrature with doubling-based error estimates.

Deterministic: node layout and summation order depend only on the inputs.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import legendre

from .errors import ConvergenceError

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def gauss_legendre(order: int):
    if order not in _GL_CACHE:
        x, w = legendre.leggauss(order)
        _GL_CACHE[order] = (x, w)
    return _GL_CACHE[order]


def panel_nodes(lo: float, hi: float, n_panels: int, order: int = 16):
    """Nodes and weights for n_panels equal panels of fixed-order GL."""
    x, w = gauss_legendre(order)
    edges = np.linspace(lo, hi, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    u = (mid[:, None] + half * x[None, :]).ravel()
    wts = np.broadcast_to(half * w[None, :], (n_panels, order)).ravel()
    return u, wts


def integrate(f, lo: float, hi: float, n_panels: int, order: int = 16):
    u, w = panel_nodes(lo, hi, n_panels, order)
    vals = f(u)
    # panel-ordered summation keeps the result independent of evaluation order
    return np.sum((vals * w).reshape(n_panels, order).sum(axis=1))


def integrate_adaptive(
    f,
    lo: float,
    hi: float,
    tol: float,
    est_freq: float = 1.0,
    order: int = 16,
    max_doublings: int = 12,
):
    """Integrate f over [lo, hi] doubling the panel count until two successive
    refinements agree within tol (absolute).  Returns (value, est_error)."""
    if hi <= lo:
        return 0.0 + 0.0j, 0.0
    # start with ~3 panels per oscillation of the fastest expected phase
    n0 = max(4, int(np.ceil((hi - lo) * max(est_freq, 1e-12) / (2.0 * np.pi) * 3.0)))
    prev = integrate(f, lo, hi, n0, order)
    for _ in range(max_doublings):
        n0 *= 2
        cur = integrate(f, lo, hi, n0, order)
        err = abs(cur - prev)
        if err <= tol:
            return cur, err
        prev = cur
    raise ConvergenceError(
        f"quadrature did not reach tol={tol:g} within budget (last err={err:g})"
    )
