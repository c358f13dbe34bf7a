"""Finite abelian groups, characters, and measured subgroups of the time-frequency plane.

A group is a product of cyclic factors Z_{n_1} x ... x Z_{n_r}. Elements are
integer tuples with coordinate j reduced mod n_j, enumerated in lexicographic
order. The dual group is identified with the group itself through the pairing

    character(w, x) = exp(2 pi i * sum_j w_j x_j / n_j),

so points of the time-frequency plane G x G^ are pairs of coordinate tuples.

Measure conventions: counting measure (weight 1) on G, weight 1/|G| per point
on the dual, hence weight 1/|G| per point of the plane. A subgroup carries an
explicit per-point rational weight; its size is s = |G| / (weight * |Delta|),
so that size * weight * |Delta| = |G| always holds exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

GroupElement = tuple[int, ...]


class TFPoint(NamedTuple):
    """A point (x, w) of the time-frequency plane: translation x, modulation w."""

    x: GroupElement
    w: GroupElement


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z_{n_1} x ... x Z_{n_r}."""

    orders: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not self.orders or any(int(n) < 1 for n in self.orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {self.orders!r}")
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        total = 1
        for n in self.orders:
            total *= n
        object.__setattr__(self, "order", total)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def reduce(self, coords: Iterable[int]) -> GroupElement:
        """Reduce coordinates mod the factor orders."""
        c = tuple(int(v) for v in coords)
        if len(c) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(c)}")
        return tuple(v % n for v, n in zip(c, self.orders))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((u + v) % n for u, v, n in zip(a, b, self.orders))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-u) % n for u, n in zip(a, self.orders))

    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic order."""
        return list(itertools.product(*(range(n) for n in self.orders)))

    def index(self, a: GroupElement) -> int:
        """Rank of an element in the lexicographic enumeration (mixed radix)."""
        idx = 0
        for v, n in zip(self.reduce(a), self.orders):
            idx = idx * n + v
        return idx

    def element_at(self, idx: int) -> GroupElement:
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for group of order {self.order}")
        coords = []
        for n in reversed(self.orders):
            coords.append(idx % n)
            idx //= n
        return tuple(reversed(coords))

    # Time-frequency plane arithmetic: componentwise on (x, w) pairs.

    def tf_add(self, z: TFPoint, u: TFPoint) -> TFPoint:
        return TFPoint(self.add(z.x, u.x), self.add(z.w, u.w))

    def tf_neg(self, z: TFPoint) -> TFPoint:
        return TFPoint(self.neg(z.x), self.neg(z.w))

    def tf_zero(self) -> TFPoint:
        return TFPoint(self.zero(), self.zero())

    def tf_points(self) -> list[TFPoint]:
        """All |G|^2 points of the time-frequency plane, lexicographic."""
        elems = self.elements()
        return [TFPoint(x, w) for x in elems for w in elems]


def character(group: FiniteAbelianGroup, w: GroupElement, x: GroupElement) -> complex:
    """Pairing <w, x> = exp(2 pi i sum_j w_j x_j / n_j), a unit complex number."""
    w = group.reduce(w)
    x = group.reduce(x)
    phase = sum(Fraction(wj * xj, nj) for wj, xj, nj in zip(w, x, group.orders))
    return complex(np.exp(2j * np.pi * float(phase % 1)))


def character_vector(group: FiniteAbelianGroup, w: GroupElement) -> np.ndarray:
    """Values of the character w on all of G, in enumeration order."""
    w = group.reduce(w)
    table = _element_table(group)
    phases = table @ (np.asarray(w, dtype=float) / np.asarray(group.orders, dtype=float))
    return np.exp(2j * np.pi * phases)


@lru_cache(maxsize=None)
def _element_table(group: FiniteAbelianGroup) -> np.ndarray:
    """|G| x rank integer array of coordinates, enumeration order; read-only."""
    table = np.array(group.elements(), dtype=np.int64).reshape(group.order, group.rank)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class MeasuredSubgroup:
    """A subgroup of the time-frequency plane with a per-point measure weight.

    ``elements`` is the full sorted point list, ``weight`` the exact rational
    mass of each point, and ``size`` the derived covolume |G|/(weight*|Delta|).
    """

    ambient: FiniteAbelianGroup
    elements: tuple[TFPoint, ...]
    weight: Fraction
    size: Fraction = field(init=False)

    def __post_init__(self) -> None:
        weight = Fraction(self.weight)
        if weight <= 0:
            raise ValueError(f"subgroup weight must be positive, got {weight}")
        object.__setattr__(self, "weight", weight)
        elems = tuple(sorted(TFPoint(self.ambient.reduce(z[0]), self.ambient.reduce(z[1]))
                             for z in self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError("subgroup element list contains duplicates")
        object.__setattr__(self, "elements", elems)
        _check_closure(self.ambient, elems)
        object.__setattr__(self, "size", Fraction(self.ambient.order, 1) / (weight * len(elems)))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, z: TFPoint) -> bool:
        return TFPoint(self.ambient.reduce(z[0]), self.ambient.reduce(z[1])) in _element_set(self)

    def index(self, z: TFPoint) -> int:
        return _element_index(self)[TFPoint(self.ambient.reduce(z[0]), self.ambient.reduce(z[1]))]

    def with_weight(self, weight: Fraction | int | str) -> "MeasuredSubgroup":
        """Same point set under a different measure."""
        return MeasuredSubgroup(self.ambient, self.elements, Fraction(weight))


def _check_closure(group: FiniteAbelianGroup, elems: tuple[TFPoint, ...]) -> None:
    points = set(elems)
    if group.tf_zero() not in points:
        raise ValueError("subgroup must contain the zero point")
    for z in elems:
        if group.tf_neg(z) not in points:
            raise ValueError(f"subgroup not closed under negation at {z}")
    for z in elems:
        for u in elems:
            if group.tf_add(z, u) not in points:
                raise ValueError(f"subgroup not closed under addition at {z} + {u}")


@lru_cache(maxsize=None)
def _element_set(sub: MeasuredSubgroup) -> frozenset[TFPoint]:
    return frozenset(sub.elements)


@lru_cache(maxsize=None)
def _element_index(sub: MeasuredSubgroup) -> dict[TFPoint, int]:
    return {z: i for i, z in enumerate(sub.elements)}


def subgroup_from_generators(
    group: FiniteAbelianGroup,
    gens: Iterable[tuple[Iterable[int], Iterable[int]]],
    weight: Fraction | int | str = 1,
) -> MeasuredSubgroup:
    """Smallest subgroup of G x G^ containing the generators, with the given weight."""
    points = [TFPoint(group.reduce(x), group.reduce(w)) for x, w in gens]
    closure = {group.tf_zero()}
    frontier = [group.tf_zero()]
    while frontier:
        z = frontier.pop()
        for g in points:
            nxt = group.tf_add(z, g)
            if nxt not in closure:
                closure.add(nxt)
                frontier.append(nxt)
    return MeasuredSubgroup(group, tuple(closure), Fraction(weight))


def full_plane(group: FiniteAbelianGroup, weight: Fraction | int | str = 1) -> MeasuredSubgroup:
    """The whole time-frequency plane as a measured subgroup."""
    return MeasuredSubgroup(group, tuple(group.tf_points()), Fraction(weight))


def trivial_subgroup(group: FiniteAbelianGroup, weight: Fraction | int | str = 1) -> MeasuredSubgroup:
    return MeasuredSubgroup(group, (group.tf_zero(),), Fraction(weight))


@lru_cache(maxsize=None)
def adjoint_subgroup(sub: MeasuredSubgroup) -> MeasuredSubgroup:
    """Adjoint subgroup: all plane points whose shifts commute with every shift from the subgroup.

    Membership of (y, tau) amounts to character(tau, x) = character(w, y) for
    every (x, w) in the subgroup, tested here in exact integer arithmetic. The
    result carries weight 1/size per the induced-measure convention.
    """
    group = sub.ambient
    members = [z for z in group.tf_points() if _commutes_with_all(group, z, sub.elements)]
    return MeasuredSubgroup(group, tuple(members), 1 / sub.size)


def _commutes_with_all(
    group: FiniteAbelianGroup, z: TFPoint, elems: tuple[TFPoint, ...]
) -> bool:
    y, tau = z
    for x, w in elems:
        # character(tau, x) = character(w, y) iff the phase difference is an integer.
        diff = sum(
            Fraction(tj * xj - wj * yj, nj)
            for tj, xj, wj, yj, nj in zip(tau, x, w, y, group.orders)
        )
        if diff % 1 != 0:
            return False
    return True


def default_measures(group: FiniteAbelianGroup) -> dict[str, Fraction]:
    """Per-point weights making Plancherel hold: counting on G, 1/|G| on the dual and the plane."""
    n = Fraction(group.order)
    return {
        "group": Fraction(1),
        "dual": 1 / n,
        "plane": 1 / n,
        "subgroup_default": Fraction(1),
    }


@lru_cache(maxsize=None)
def all_subgroups(group: FiniteAbelianGroup) -> tuple[tuple[TFPoint, ...], ...]:
    """Element sets of every subgroup of G x G^, each sorted, deduplicated.

    Built from sums of cyclic subgroups; for cyclic G the plane has rank two,
    so one round of pairwise sums is complete. Higher-rank ambients iterate to
    a fixed point.
    """
    plane = group.tf_points()
    cyclics: set[frozenset[TFPoint]] = set()
    for z in plane:
        cyc = {group.tf_zero()}
        cur = z
        while cur not in cyc:
            cyc.add(cur)
            cur = group.tf_add(cur, z)
        cyclics.add(frozenset(cyc))
    found: set[frozenset[TFPoint]] = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new: set[frozenset[TFPoint]] = set()
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                total = frozenset(group.tf_add(a, b) for a in h for b in c)
                if total not in found:
                    new.add(total)
        found |= new
        if group.rank == 1:
            # Subgroups of a rank-two plane need at most two cyclic summands.
            break
        frontier = new
    return tuple(sorted(tuple(sorted(h)) for h in found))
