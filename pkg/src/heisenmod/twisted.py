"""Twisted group algebras on measured subgroups of the time-frequency plane.

A sequence a on a measured subgroup, twisted by the Heisenberg cocycle c (flag
``conjugated`` False) or by its pointwise conjugate (flag True), multiplies by

    (a * b)(z) = weight * sum_w kappa(w, z - w) a(w) b(z - w)

and has involution a*(z) = conj(kappa(z, -z)) conj(a(-z)). The canonical trace
is evaluation at zero. The integrated representation realizes a as an operator
on C^G, sending z to pi(z) for the plain cocycle and to pi(z)* for the
conjugated one; it is faithful, so the C*-norm of a is the spectral norm of
its representing matrix.

With the conjugated cocycle the integrated representation reverses products,
rep(a * b) = rep(b) rep(a), exactly what a right module action requires; the
involution identity rep(a*) = rep(a)^H holds for both flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import MeasuredSubgroup, TFPoint
from .shifts import OperatorMatrix, heisenberg_cocycle, tf_shift_matrix


@dataclass(eq=False)
class TwistedSeq:
    """Coefficients on a measured subgroup, twisted by c or conj(c)."""

    domain: MeasuredSubgroup
    conjugated: bool
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        vals = np.array(self.coeffs, dtype=np.complex128)
        if vals.shape != (len(self.domain),):
            raise ValueError(
                f"coefficient length {vals.shape} does not match subgroup order {len(self.domain)}"
            )
        vals.setflags(write=False)
        self.coeffs = vals

    def at(self, z: TFPoint) -> complex:
        return complex(self.coeffs[self.domain.index(z)])


def delta_seq(domain: MeasuredSubgroup, z: TFPoint, conjugated: bool = False) -> TwistedSeq:
    coeffs = np.zeros(len(domain), dtype=np.complex128)
    coeffs[domain.index(z)] = 1.0
    return TwistedSeq(domain, conjugated, coeffs)


def unit_seq(domain: MeasuredSubgroup, conjugated: bool = False) -> TwistedSeq:
    """Multiplicative unit: (1/weight) delta_0."""
    coeffs = np.zeros(len(domain), dtype=np.complex128)
    coeffs[domain.index(domain.ambient.tf_zero())] = 1.0 / float(domain.weight)
    return TwistedSeq(domain, conjugated, coeffs)


@lru_cache(maxsize=None)
def _conv_tables(domain: MeasuredSubgroup, conjugated: bool) -> tuple[np.ndarray, np.ndarray]:
    """ADD[i, j] = index(z_i + z_j) and KAPPA[i, j] = kappa(z_i, z_j)."""
    group = domain.ambient
    elems = domain.elements
    n = len(elems)
    idx = {z: i for i, z in enumerate(elems)}
    add = np.empty((n, n), dtype=np.intp)
    kappa = np.empty((n, n), dtype=np.complex128)
    for i, zi in enumerate(elems):
        for j, zj in enumerate(elems):
            add[i, j] = idx[group.tf_add(zi, zj)]
            kappa[i, j] = heisenberg_cocycle(group, zi, zj)
    if conjugated:
        kappa = kappa.conj()
    add.setflags(write=False)
    kappa.setflags(write=False)
    return add, kappa


@lru_cache(maxsize=None)
def _neg_table(domain: MeasuredSubgroup) -> np.ndarray:
    group = domain.ambient
    idx = {z: i for i, z in enumerate(domain.elements)}
    neg = np.array([idx[group.tf_neg(z)] for z in domain.elements], dtype=np.intp)
    neg.setflags(write=False)
    return neg


def _require_same_algebra(a: TwistedSeq, b: TwistedSeq) -> None:
    if a.domain != b.domain or a.conjugated != b.conjugated:
        raise ValueError("sequences belong to different twisted algebras")


def twisted_convolve(a: TwistedSeq, b: TwistedSeq) -> TwistedSeq:
    """(a * b)(z) = weight * sum over w of kappa(w, z - w) a(w) b(z - w)."""
    _require_same_algebra(a, b)
    add, kappa = _conv_tables(a.domain, a.conjugated)
    contrib = float(a.domain.weight) * (a.coeffs[:, None] * kappa * b.coeffs[None, :])
    out = np.zeros(len(a.domain), dtype=np.complex128)
    np.add.at(out, add, contrib)
    return TwistedSeq(a.domain, a.conjugated, out)


def involution(a: TwistedSeq) -> TwistedSeq:
    """a*(z) = conj(kappa(z, -z)) conj(a(-z))."""
    add, kappa = _conv_tables(a.domain, a.conjugated)
    neg = _neg_table(a.domain)
    diag = kappa[np.arange(len(a.domain)), neg]
    return TwistedSeq(a.domain, a.conjugated, diag.conj() * a.coeffs[neg].conj())


def trace(a: TwistedSeq) -> complex:
    """Canonical trace: the coefficient at the zero point."""
    return a.at(a.domain.ambient.tf_zero())


@lru_cache(maxsize=None)
def _shift_stack(domain: MeasuredSubgroup, conjugated: bool) -> np.ndarray:
    """Stacked matrices of pi(z) (or pi(z)* when conjugated) over the subgroup."""
    group = domain.ambient
    n = group.order
    stack = np.empty((len(domain), n, n), dtype=np.complex128)
    for i, z in enumerate(domain.elements):
        mat = tf_shift_matrix(group, z)
        stack[i] = mat.conj().T if conjugated else mat
    stack.setflags(write=False)
    return stack


def integrated_rep(a: TwistedSeq) -> OperatorMatrix:
    """weight * sum_z a(z) pi(z), with pi(z)* in place of pi(z) on the conjugated flag."""
    stack = _shift_stack(a.domain, a.conjugated)
    return float(a.domain.weight) * np.einsum("i,ijk->jk", a.coeffs, stack)


def cstar_norm(a: TwistedSeq) -> float:
    """C*-norm, computed as the spectral norm of the faithful integrated representation."""
    return float(np.linalg.norm(integrated_rep(a), 2))


def l2_localization_inner(a: TwistedSeq, b: TwistedSeq) -> complex:
    """Localization pairing <a, b> = trace(a * involution(b))."""
    _require_same_algebra(a, b)
    return trace(twisted_convolve(a, involution(b)))
