"""Gabor systems over measured subgroups: analysis, frame operators, bounds, duals.

For a window eta and a measured subgroup Delta, the analysis operator has one
row per lattice point z, evaluating xi -> <xi, pi(z) eta>; the squared norm on
the coefficient side weights each point by Delta's measure. The frame operator

    S = sum_j weight * sum_{z in Delta} <., pi(z) eta_j> pi(z) eta_j

is Hermitian positive semidefinite and commutes with every lattice shift. Its
extreme eigenvalues are the optimal frame bounds. The Janssen form rewrites S
as an adjoint-lattice sum s(Delta)^{-1} sum_{w} <eta, pi(w) eta> pi(w).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import MeasuredSubgroup, adjoint_subgroup
from .shifts import OperatorMatrix, Window, tf_shift_matrix, tf_shift_values


@dataclass(frozen=True)
class GaborSystem:
    """A multi-window Gabor system: a lattice and k >= 1 windows on its ambient group."""

    lattice: MeasuredSubgroup
    windows: tuple[Window, ...]

    def __post_init__(self) -> None:
        if not self.windows:
            raise ValueError("a Gabor system needs at least one window")
        object.__setattr__(self, "windows", tuple(self.windows))
        for eta in self.windows:
            if eta.group != self.lattice.ambient:
                raise ValueError("window group does not match the lattice's ambient group")


@dataclass(frozen=True)
class FrameBounds:
    """Optimal lower and upper frame bounds (extreme frame-operator eigenvalues)."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lower <= self.upper:
            raise ValueError(f"frame bounds must satisfy 0 <= A <= B, got {self}")


class NotAFrameError(ValueError):
    """Raised when an operation needs an invertible frame operator but the system is not a frame."""

    def __init__(self, bounds: FrameBounds):
        super().__init__(f"system is not a frame: bounds A={bounds.lower}, B={bounds.upper}")
        self.bounds = bounds


def shift_orbit(eta: Window, sub: MeasuredSubgroup) -> np.ndarray:
    """|Delta| x |G| matrix whose row for z is pi(z) eta."""
    group = sub.ambient
    out = np.empty((len(sub), group.order), dtype=np.complex128)
    for i, z in enumerate(sub.elements):
        out[i] = tf_shift_values(group, z, eta.values)
    return out


def analysis(eta: Window, sub: MeasuredSubgroup) -> np.ndarray:
    """Analysis matrix: row for z is conj(pi(z) eta), so (A xi)_z = <xi, pi(z) eta>."""
    if eta.group != sub.ambient:
        raise ValueError("window group does not match the subgroup's ambient group")
    return shift_orbit(eta, sub).conj()


def synthesis(gamma: Window, sub: MeasuredSubgroup) -> np.ndarray:
    """Adjoint of analysis: coefficients a map to weight * sum_z a(z) pi(z) gamma."""
    return float(sub.weight) * shift_orbit(gamma, sub).T


def frame_like(eta: Window, gamma: Window, sub: MeasuredSubgroup) -> OperatorMatrix:
    """Cross frame operator: synthesis with gamma after analysis with eta."""
    return synthesis(gamma, sub) @ analysis(eta, sub)


def frame_operator(sys: GaborSystem) -> OperatorMatrix:
    """Sum of the per-window frame operators, as a |G| x |G| matrix."""
    n = sys.lattice.ambient.order
    total = np.zeros((n, n), dtype=np.complex128)
    for eta in sys.windows:
        orbit = shift_orbit(eta, sys.lattice)
        total += float(sys.lattice.weight) * (orbit.T @ orbit.conj())
    return total


def frame_bounds(sys: GaborSystem) -> FrameBounds:
    """Extreme eigenvalues of the frame operator; tiny negative noise clamps to zero."""
    eigs = np.linalg.eigvalsh(frame_operator(sys))
    return FrameBounds(max(float(eigs[0]), 0.0), max(float(eigs[-1]), 0.0))


def is_frame(sys: GaborSystem, tol: float = 1e-9) -> bool:
    """True when the lower bound clears tol * max(B, 1)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    bounds = frame_bounds(sys)
    return bounds.lower > tol * max(bounds.upper, 1.0)


def dual_window(sys: GaborSystem, tol: float = 1e-9) -> list[Window]:
    """Canonical dual windows S^{-1} eta_j; raises NotAFrameError when S is singular."""
    bounds = frame_bounds(sys)
    if not bounds.lower > tol * max(bounds.upper, 1.0):
        raise NotAFrameError(bounds)
    op = frame_operator(sys)
    group = sys.lattice.ambient
    stacked = np.stack([eta.values for eta in sys.windows], axis=1)
    duals = np.linalg.solve(op, stacked)
    return [Window(group, duals[:, j]) for j in range(len(sys.windows))]


def reconstruction_residual(sys: GaborSystem, duals: list[Window], xi: Window) -> float:
    """Residual of sum_j weight sum_z <xi, pi(z) gamma_j> pi(z) eta_j against xi."""
    rebuilt = np.zeros(sys.lattice.ambient.order, dtype=np.complex128)
    for eta, gamma in zip(sys.windows, duals):
        coeffs = analysis(gamma, sys.lattice) @ xi.values
        rebuilt += synthesis(eta, sys.lattice) @ coeffs
    return float(np.linalg.norm(rebuilt - xi.values))


def janssen_frame_operator(eta: Window, sub: MeasuredSubgroup) -> OperatorMatrix:
    """Adjoint-lattice form: s(Delta)^{-1} sum over the adjoint of <eta, pi(w) eta> pi(w)."""
    if eta.group != sub.ambient:
        raise ValueError("window group does not match the subgroup's ambient group")
    group = sub.ambient
    adj = adjoint_subgroup(sub)
    n = group.order
    total = np.zeros((n, n), dtype=np.complex128)
    for w in adj.elements:
        corr = complex(np.vdot(tf_shift_values(group, w, eta.values), eta.values))
        total += corr * tf_shift_matrix(group, w)
    return float(1 / sub.size) * total


def spectrum(sys: GaborSystem) -> np.ndarray:
    """Frame-operator eigenvalues, descending."""
    eigs = np.linalg.eigvalsh(frame_operator(sys))
    return eigs[::-1].copy()
