"""Diamond coordinate system.

Maps between Minkowski coordinates (t, x, y, z) and diamond coordinates
(eta, xi, zeta, rho) for the bounded region |t| + r < 2/a, plus the line
element, the static worldline clock relation and the null-coordinate map
used by the (1+1)-D mode analysis.  All formulas depend on the scale only
through a * (coordinate), so internally everything is computed with a = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import ConvergenceError, OutsideDiamondError, SingularMapError


@dataclass(frozen=True)
class DiamondScale:
    """Inverse-size parameter a; half-width 2/a, observer lifetime 4/a."""

    a: float = 1.0

    def __post_init__(self):
        if not (self.a > 0.0 and math.isfinite(self.a)):
            raise ValueError("diamond scale a must be positive and finite")

    @property
    def half_size(self) -> float:
        return 2.0 / self.a

    @property
    def lifetime(self) -> float:
        return 4.0 / self.a


@dataclass(frozen=True)
class MinkowskiEvent:
    t: float
    x: float
    y: float
    z: float

    @property
    def r(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)


@dataclass(frozen=True)
class DiamondEvent:
    eta: float
    xi: float
    zeta: float
    rho: float


@dataclass(frozen=True)
class NullCoordPair:
    """Minkowski null V = t + x paired with diamond null v = eta + xi."""

    V: float
    v: float
    dV_dv: float


def _check_finite(*vals):
    if not all(math.isfinite(v) for v in vals):
        raise ValueError("non-finite coordinate")


def to_diamond(e: MinkowskiEvent, scale: DiamondScale = DiamondScale()) -> DiamondEvent:
    """Map an interior Minkowski event to diamond coordinates."""
    a = scale.a
    _check_finite(e.t, e.x, e.y, e.z)
    t, x, y, z = a * e.t, a * e.x, a * e.y, a * e.z  # work in units of 1/a
    r = math.sqrt(x * x + y * y + z * z)
    if abs(t) + r >= 2.0:
        raise OutsideDiamondError("event on or outside the diamond null boundary")
    f = 1.0 - (t / 2.0) ** 2 + (r / 2.0) ** 2 - x
    if f <= 0.0:
        raise SingularMapError("coordinate map denominator f <= 0")
    q = 1.0 + t * t / 4.0 - r * r / 4.0
    eta = math.atanh(t / q)
    xi = math.log(math.sqrt(q * q - t * t) / f)
    zeta = 2.0 * y / f
    rho = 2.0 * z / f
    return DiamondEvent(eta / a, xi / a, zeta / a, rho / a)


def _to_minkowski_residual(u, d_scaled):
    ev = MinkowskiEvent(*u)
    try:
        dd = to_diamond(ev, DiamondScale(1.0))
    except (OutsideDiamondError, SingularMapError):
        return np.full(4, 1e6)
    return np.array(
        [
            dd.eta - d_scaled[0],
            dd.xi - d_scaled[1],
            dd.zeta - d_scaled[2],
            dd.rho - d_scaled[3],
        ]
    )


def to_minkowski(d: DiamondEvent, scale: DiamondScale = DiamondScale()) -> MinkowskiEvent:
    """Numerical inverse of to_diamond (the map has no published closed form).

    In null variables Vn = t + x, Un = t - x the forward map is equivalent to
        Vn (2 + Un) - s^2 = 2 tanh(v/2) (2 + Un),
        Un (2 - Vn) + s^2 = 2 tanh(u/2) (2 - Vn),
    with v = eta + xi, u = eta - xi, s^2 = y^2 + z^2 and 2y = zeta f,
    2z = rho f.  This polynomial system is smooth everywhere, so a standard
    root solve from the exact s = 0 seed converges over the whole interior.
    """
    a = scale.a
    _check_finite(d.eta, d.xi, d.zeta, d.rho)
    eta, xi, zeta, rho = a * d.eta, a * d.xi, a * d.zeta, a * d.rho

    T1 = math.tanh((eta + xi) / 2.0)
    T2 = math.tanh((eta - xi) / 2.0)

    def poly_residual(u):
        t, x, y, z = u
        Vn, Un = t + x, t - x
        s2 = y * y + z * z
        f = 1.0 - (Un * Vn - s2) / 4.0 - (Vn - Un) / 2.0
        return np.array(
            [
                Vn * (2.0 + Un) - s2 - 2.0 * T1 * (2.0 + Un),
                Un * (2.0 - Vn) + s2 - 2.0 * T2 * (2.0 - Vn),
                2.0 * y - zeta * f,
                2.0 * z - rho * f,
            ]
        )

    f0 = 1.0 - T1 * T2 - (T1 - T2)
    seed = np.array([T1 + T2, T1 - T2, 0.5 * zeta * f0, 0.5 * rho * f0])
    sol = optimize.root(poly_residual, seed, tol=1e-14)
    out = sol.x

    res = _to_minkowski_residual(out, [eta, xi, zeta, rho])
    if np.max(np.abs(res)) > 1e-10:
        raise ConvergenceError("to_minkowski inversion residual above 1e-10")
    return MinkowskiEvent(*(out / a))


def line_element(
    d: DiamondEvent, dd: DiamondEvent, scale: DiamondScale = DiamondScale()
) -> float:
    """ds^2 for a small displacement dd taken at the diamond event d."""
    a = scale.a
    eta, xi = a * d.eta, a * d.xi
    zeta, rho = a * d.zeta, a * d.rho
    # transverse coefficient is a^2/8, pinned by the pullback of the
    # Minkowski interval through the coordinate map (see tests)
    conf = math.cosh(eta) + math.cosh(xi) + 0.125 * math.exp(-xi) * (zeta**2 + rho**2)
    num = 4.0 * (dd.eta**2 - dd.xi**2) - math.exp(-2.0 * xi) * (dd.zeta**2 + dd.rho**2)
    return num / conf**2


def worldline_clock(eta: float, scale: DiamondScale = DiamondScale()) -> float:
    """Minkowski time on the static worldline: t = (2/a) tanh(a eta / 2)."""
    a = scale.a
    return (2.0 / a) * math.tanh(a * eta / 2.0)


def worldline_clock_rate(eta: float, scale: DiamondScale = DiamondScale()) -> float:
    """dt/deta on the static worldline: 1/cosh^2(a eta / 2)."""
    a = scale.a
    return 1.0 / math.cosh(a * eta / 2.0) ** 2


def null_map(v: float, scale: DiamondScale = DiamondScale()) -> NullCoordPair:
    """Pair the diamond null coordinate v with Minkowski null V."""
    a = scale.a
    _check_finite(v)
    V = (2.0 / a) * math.tanh(a * v / 2.0)
    return NullCoordPair(V=V, v=v, dV_dv=1.0 / math.cosh(a * v / 2.0) ** 2)


def null_map_inverse(V: float, scale: DiamondScale = DiamondScale()) -> NullCoordPair:
    """Inverse pairing; requires |V| < 2/a strictly."""
    a = scale.a
    if not abs(V) < 2.0 / a:
        raise OutsideDiamondError("V outside the open diamond null range")
    v = (2.0 / a) * math.atanh(a * V / 2.0)
    return NullCoordPair(V=V, v=v, dV_dv=1.0 / math.cosh(a * v / 2.0) ** 2)
