"""Time-frequency shifts on C^G and the Heisenberg cocycle.

The shift at a plane point z = (x, w) is pi(z) = M_w T_x: translate by x,
then multiply by the character w. Shifts compose projectively,

    pi(z) pi(u) = c(z, u) pi(z + u),    c((x, w), (y, tau)) = conj(character(tau, x)),

and the adjoint of pi(z) is conj(c(z, -z)) pi(-z). Operators are plain complex
|G| x |G| ndarrays; shifts act on vectors directly in O(|G|) and matrices are
materialized only on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import (
    FiniteAbelianGroup,
    GroupElement,
    TFPoint,
    character,
    character_vector,
)

OperatorMatrix = np.ndarray


@dataclass(eq=False)
class Window:
    """A complex signal indexed by the enumerated elements of a group."""

    group: FiniteAbelianGroup
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=np.complex128)
        if vals.shape != (self.group.order,):
            raise ValueError(
                f"window length {vals.shape} does not match group order {self.group.order}"
            )
        vals.setflags(write=False)
        self.values = vals

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))


def inner(xi: Window, eta: Window) -> complex:
    """l2 pairing sum_t xi(t) conj(eta(t)), linear in the first slot."""
    if xi.group != eta.group:
        raise ValueError("windows live on different groups")
    return complex(np.vdot(eta.values, xi.values))


def delta_window(group: FiniteAbelianGroup, index: int) -> Window:
    vals = np.zeros(group.order, dtype=np.complex128)
    vals[int(index) % group.order] = 1.0
    return Window(group, vals)


def const_window(group: FiniteAbelianGroup) -> Window:
    return Window(group, np.ones(group.order, dtype=np.complex128))


def randn_window(group: FiniteAbelianGroup, seed: int) -> Window:
    """Seeded complex Gaussian window with a fixed, portable stream.

    Real and imaginary parts are independent standard normals produced by
    Box-Muller from SplitMix64 uniforms; see splitmix64_stream for the exact
    stream definition.
    """
    n = group.order
    normals = gaussian_stream(seed, 2 * n)
    return Window(group, normals[0::2] + 1j * normals[1::2])


def parse_window(group: FiniteAbelianGroup, spec: str) -> Window:
    """Named window constructors: "delta:<index>", "const", "randn:<seed>"."""
    if spec == "const":
        return const_window(group)
    if spec.startswith("delta:"):
        return delta_window(group, int(spec.split(":", 1)[1]))
    if spec.startswith("randn:"):
        return randn_window(group, int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown window spec {spec!r}")


def splitmix64_stream(seed: int, count: int) -> np.ndarray:
    """First ``count`` outputs of SplitMix64 seeded with ``seed``, as uint64.

    Output i (0-based) mixes state seed + (i+1) * 0x9E3779B97F4A7C15 mod 2^64:
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31.
    """
    gamma = np.uint64(0x9E3779B97F4A7C15)
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * gamma
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return z


def gaussian_stream(seed: int, count: int) -> np.ndarray:
    """Standard normals from SplitMix64 via Box-Muller.

    Uniform i is ((output_i >> 11) + 1) * 2^-53, in (0, 1]. Consecutive
    uniform pairs (u1, u2) yield the normal pair
    (sqrt(-2 ln u1) cos(2 pi u2), sqrt(-2 ln u1) sin(2 pi u2)).
    """
    pairs = (count + 1) // 2
    raw = splitmix64_stream(seed, 2 * pairs)
    u = ((raw >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53
    r = np.sqrt(-2.0 * np.log(u[0::2]))
    theta = 2.0 * np.pi * u[1::2]
    out = np.empty(2 * pairs, dtype=np.float64)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out[:count]


@lru_cache(maxsize=None)
def _translation_perm(group: FiniteAbelianGroup, x: GroupElement) -> np.ndarray:
    """Index array p with (T_x xi)(t) = xi(p[t]), i.e. p[t] = index(t - x)."""
    perm = np.empty(group.order, dtype=np.intp)
    for i, t in enumerate(group.elements()):
        perm[i] = group.index(group.add(t, group.neg(x)))
    perm.setflags(write=False)
    return perm


@lru_cache(maxsize=None)
def _char_vector_cached(group: FiniteAbelianGroup, w: GroupElement) -> np.ndarray:
    vec = character_vector(group, w)
    vec.setflags(write=False)
    return vec


def translate(x: GroupElement, xi: Window) -> Window:
    """(T_x xi)(t) = xi(t - x)."""
    g = xi.group
    return Window(g, xi.values[_translation_perm(g, g.reduce(x))])


def modulate(w: GroupElement, xi: Window) -> Window:
    """(M_w xi)(t) = character(w, t) xi(t)."""
    g = xi.group
    return Window(g, _char_vector_cached(g, g.reduce(w)) * xi.values)


def tf_shift(z: TFPoint, xi: Window) -> Window:
    """pi(z) xi = M_w T_x xi for z = (x, w)."""
    g = xi.group
    x, w = g.reduce(z[0]), g.reduce(z[1])
    shifted = xi.values[_translation_perm(g, x)]
    return Window(g, _char_vector_cached(g, w) * shifted)


def tf_shift_values(group: FiniteAbelianGroup, z: TFPoint, values: np.ndarray) -> np.ndarray:
    """pi(z) applied to a bare coefficient vector."""
    x, w = group.reduce(z[0]), group.reduce(z[1])
    return _char_vector_cached(group, w) * values[_translation_perm(group, x)]


@lru_cache(maxsize=None)
def tf_shift_matrix(group: FiniteAbelianGroup, z: TFPoint) -> OperatorMatrix:
    """pi(z) as a |G| x |G| matrix (cached, read-only)."""
    x = group.reduce(z[0])
    w = group.reduce(z[1])
    n = group.order
    mat = np.zeros((n, n), dtype=np.complex128)
    chars = _char_vector_cached(group, w)
    for j, t in enumerate(group.elements()):
        i = group.index(group.add(t, x))
        mat[i, j] = chars[i]
    mat.setflags(write=False)
    return mat


def tf_shift_adjoint_matrix(group: FiniteAbelianGroup, z: TFPoint) -> OperatorMatrix:
    """pi(z)* = conj(c(z, -z)) pi(-z) as a matrix."""
    return tf_shift_matrix(group, TFPoint(group.reduce(z[0]), group.reduce(z[1]))).conj().T


def heisenberg_cocycle(group: FiniteAbelianGroup, z: TFPoint, u: TFPoint) -> complex:
    """c(z, u) = conj(character(tau, x)) for z = (x, w), u = (y, tau)."""
    x = group.reduce(z[0])
    tau = group.reduce(u[1])
    return complex(np.conj(character(group, tau, x)))
