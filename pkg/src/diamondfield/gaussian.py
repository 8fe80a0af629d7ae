"""Gaussian wavepacket modes, quadrature covariances and the squeezing witness.

All frequencies and bandwidths here are in units of a and positions in units
of 1/a.  Quadratures follow X(phi) = b e^{-i phi} + b+ e^{i phi}, so a
Minkowski vacuum packet has variance 1 (the shot-noise floor).  Covariance
matrices are stored in the ordering (X_1(0), X_1(pi/2), X_2(0), ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bogoliubov import planck_occupation, thermal_occupation, _packet_nodes
from .correlations import adjacent_moments_analytic, cross_moments
from .errors import ConvergenceError, DomainError

WITNESS_MARGIN = 1e-6


@dataclass(frozen=True)
class WavepacketSpec:
    """Gaussian wavepacket mode in diamond n (or a free Minkowski packet)."""

    n: int
    omega0: float
    sigma: float = 0.02
    v0: float = 0.0
    kind: str = "diamond"

    def __post_init__(self):
        if self.kind not in ("diamond", "plane"):
            raise DomainError("kind must be 'diamond' or 'plane'")
        if not (self.omega0 > 0.0 and self.sigma > 0.0):
            raise DomainError("omega0 and sigma must be positive")
        # narrow-band assumption behind the mode algebra
        if self.omega0 < 5.0 * self.sigma:
            raise DomainError("need omega0 >= 5 sigma")


@dataclass(frozen=True)
class CovarianceMatrix:
    modes: tuple
    matrix: np.ndarray = field(repr=False)
    est_error: float
    min_symplectic_eig: float


def _symplectic_form(m):
    S = np.zeros((2 * m, 2 * m))
    for i in range(m):
        S[2 * i, 2 * i + 1] = 1.0
        S[2 * i + 1, 2 * i] = -1.0
    return S


def _same_diamond_occupation(s1, s2):
    """<b1+ b2> for two packets in the same diamond: the thermal kernel is
    diagonal in frequency, so this is the Planck-weighted profile overlap."""
    lo = max(min(s1.omega0 - 8 * s1.sigma, s2.omega0 - 8 * s2.sigma), 1e-12)
    hi = max(s1.omega0 + 8 * s1.sigma, s2.omega0 + 8 * s2.sigma)
    from ._quad import panel_nodes

    om, wt = panel_nodes(lo, hi, 64)
    g1 = (2 * math.pi * s1.sigma**2) ** -0.25 * np.exp(-((om - s1.omega0) ** 2) / (4 * s1.sigma**2))
    g2 = (2 * math.pi * s2.sigma**2) ** -0.25 * np.exp(-((om - s2.omega0) ** 2) / (4 * s2.sigma**2))
    prof = np.conj(g1 * np.exp(-1j * om * s1.v0)) * g2 * np.exp(-1j * om * s2.v0)
    return complex(np.sum(wt * prof / np.expm1(2.0 * math.pi * om)))


def _mode_moments(specs, tol, diagonal, adjacent):
    """(N, M, err) with N[i, j] = <bi+ bj> and M[i, j] = <bi bj>."""
    m = len(specs)
    N = np.zeros((m, m), dtype=complex)
    M = np.zeros((m, m), dtype=complex)
    err = 0.0
    kinds = {s.kind for s in specs}
    if kinds == {"plane"}:
        return N, M, err  # Minkowski packets: vacuum, all moments zero
    if "plane" in kinds:
        raise DomainError("cannot mix plane and diamond packets in one set")

    for i, si in enumerate(specs):
        if diagonal == "integral":
            occ = thermal_occupation(si.omega0, si.sigma, tol=tol)
            N[i, i] = occ.value
            err += occ.est_error
        else:
            N[i, i] = planck_occupation(si.omega0, si.sigma)
        for j in range(i + 1, m):
            sj = specs[j]
            dn = sj.n - si.n
            if dn == 0:
                N[i, j] = _same_diamond_occupation(si, sj)
                N[j, i] = np.conj(N[i, j])
                continue  # <b b> vanishes within one diamond
            lo, hi = (si, sj) if dn > 0 else (sj, si)
            p0 = (lo.omega0, lo.sigma, lo.v0)
            p1 = (hi.omega0, hi.sigma, hi.v0)
            if abs(dn) == 1 and adjacent == "analytic":
                cm = adjacent_moments_analytic(p0, p1)
            else:
                cm = cross_moments(p0, p1, abs(dn), tol=tol)
            err += cm.est_error
            M[i, j] = M[j, i] = cm.m_minus
            if dn > 0:
                N[i, j] = cm.m_plus
                N[j, i] = np.conj(cm.m_plus)
            else:
                N[j, i] = cm.m_plus
                N[i, j] = np.conj(cm.m_plus)
    return N, M, err


def _quad_entry(N, M, i, phi, j, psi):
    val = 2.0 * np.real(np.exp(-1j * (phi + psi)) * M[i, j])
    val += 2.0 * np.real(np.exp(1j * (phi - psi)) * N[i, j])
    if i == j:
        val += math.cos(phi - psi)
    return float(val)


def build_covariance(specs, tol=1e-8, diagonal="planck", adjacent="analytic"):
    """Vacuum covariance matrix of the quadratures of the given modes.

    diagonal selects the occupation route: 'planck' uses the closed-form
    thermal value, 'integral' the plane-wave-coefficient integral.  adjacent
    selects the nearest-neighbour moment route ('analytic' or 'kg').
    """
    specs = tuple(specs)
    m = len(specs)
    if m == 0:
        raise DomainError("need at least one mode")
    N, M, err = _mode_moments(specs, tol, diagonal, adjacent)
    cov = np.empty((2 * m, 2 * m))
    half = math.pi / 2.0
    for i in range(m):
        for j in range(m):
            cov[2 * i, 2 * j] = _quad_entry(N, M, i, 0.0, j, 0.0)
            cov[2 * i, 2 * j + 1] = _quad_entry(N, M, i, 0.0, j, half)
            cov[2 * i + 1, 2 * j] = _quad_entry(N, M, i, half, j, 0.0)
            cov[2 * i + 1, 2 * j + 1] = _quad_entry(N, M, i, half, j, half)
    cov = 0.5 * (cov + cov.T)
    eig = np.linalg.eigvalsh(cov + 1j * _symplectic_form(m))
    if eig[0] < -1e-9:
        raise ConvergenceError(f"unphysical covariance, min eig {eig[0]:.3e}")
    return CovarianceMatrix(modes=specs, matrix=cov, est_error=err,
                            min_symplectic_eig=float(eig[0]))


def mode_variance(cov, i, phi=0.0):
    """V(X_i(phi)) from the stored covariance."""
    c, s = math.cos(phi), math.sin(phi)
    u = np.zeros(cov.matrix.shape[0])
    u[2 * i], u[2 * i + 1] = c, s
    return float(u @ cov.matrix @ u)


def joint_variance(cov, i, j, sign, phi=0.0):
    """V((X_i(phi) + sign * X_j(phi)) / sqrt 2), sign in {+1, -1}."""
    if i == j:
        raise IndexError("joint variance needs two distinct modes")
    if sign not in (1, -1, "+", "-"):
        raise DomainError("sign must be +1 or -1")
    s = 1.0 if sign in (1, "+") else -1.0
    c, sn = math.cos(phi), math.sin(phi)
    u = np.zeros(cov.matrix.shape[0])
    u[2 * i], u[2 * i + 1] = c / math.sqrt(2.0), sn / math.sqrt(2.0)
    u[2 * j], u[2 * j + 1] = s * c / math.sqrt(2.0), s * sn / math.sqrt(2.0)
    return float(u @ cov.matrix @ u)


def squeezing_witness(cov, i, j):
    """Two-mode squeezing criterion: both V(X-(0)) and V(X+(pi/2)) below 1."""
    v_minus = joint_variance(cov, i, j, -1, 0.0)
    v_plus = joint_variance(cov, i, j, +1, math.pi / 2.0)
    entangled = (v_minus < 1.0 - WITNESS_MARGIN) and (v_plus < 1.0 - WITNESS_MARGIN)
    return {"entangled": entangled, "V_minus_0": v_minus, "V_plus_half_pi": v_plus}


def fig2_sweep(phi_list=(0.0, 0.2 * math.pi), omega1_grid=None,
               omega0=1.0, sigma=0.02, v0=0.0):
    """Joint-variance sweep between a zeroth- and a first-diamond packet.

    Returns rows (phi, omega1, V_minus, V_plus) as a dict of arrays, ordered
    by (phi, omega1).  The zeroth packet is fixed at (omega0, sigma, v0); the
    first-diamond central frequency runs over omega1_grid.
    """
    if omega1_grid is None:
        omega1_grid = np.arange(0.5, 1.5 + 1e-9, 0.01)
    omega1_grid = np.asarray(omega1_grid, dtype=float)
    phis, om1s, vm, vp = [], [], [], []
    covs = [
        build_covariance([
            WavepacketSpec(0, omega0, sigma, v0),
            WavepacketSpec(1, float(om1), sigma, v0),
        ])
        for om1 in omega1_grid
    ]
    for phi in phi_list:
        for om1, cov in zip(omega1_grid, covs):
            phis.append(float(phi))
            om1s.append(float(om1))
            vm.append(joint_variance(cov, 0, 1, -1, phi))
            vp.append(joint_variance(cov, 0, 1, +1, phi))
    return {
        "phi": np.array(phis),
        "omega1": np.array(om1s),
        "v_minus": np.array(vm),
        "v_plus": np.array(vp),
    }
