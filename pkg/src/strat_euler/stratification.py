"""Combinatorial orbit-type stratifications of representation spheres.

A StratifiedSpace is a finite collection of strata together with the strict
closure order: the pair (i, j) records that stratum i is contained in the
closure of stratum j.  The constructor takes any generating set of such
pairs, closes it transitively, and checks the dimension and maximality
invariants.  Orbit-type stratifications of smooth actions are Whitney, so
the combinatorial object is recorded as trusted-Whitney and no analytic
regularity is ever verified here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptySpaceError, UnknownStratumError, ValidationError
from .group_lattice import Subgroup, meet, subgroup_leq
from .representations import Representation

__all__ = [
    "Stratum",
    "StratifiedSpace",
    "CycleReport",
    "sphere_stratification",
    "skeleton_filtration",
    "stratum_length",
    "check_cycle_condition",
    "stratification_records",
]


@dataclass(frozen=True)
class Stratum:
    """One piece of the stratification, refined by connected component."""

    id: str
    isotropy: Subgroup
    dim: int
    component_index: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 0:
            raise ValidationError(f"stratum dimension must be >= 0, got {self.dim!r}")
        if not self.id:
            raise ValidationError("stratum id must be a nonempty string")


class StratifiedSpace:
    """Strata plus the strict closure partial order between them.

    ``closure_order`` holds the full transitive relation; any generating set
    can be supplied and is closed on construction.  Dimensions must strictly
    increase along the order, and the maximal strata are exactly those of
    dimension ``total_dim``.
    """

    def __init__(
        self,
        strata: Iterable[Stratum],
        closure_order: Iterable[tuple[str, str]] = (),
        total_dim: int | None = None,
        oriented: bool = True,
    ):
        strata = tuple(strata)
        if not strata:
            raise EmptySpaceError("a stratified space needs at least one stratum")
        by_id: dict[str, Stratum] = {}
        for s in strata:
            if s.id in by_id:
                raise ValidationError(f"duplicate stratum id {s.id!r}")
            by_id[s.id] = s

        pairs = set()
        for low, high in closure_order:
            if low not in by_id or high not in by_id:
                raise ValidationError(f"closure pair ({low!r}, {high!r}) names an unknown stratum")
            if low == high:
                raise ValidationError(f"closure order must be strict, got ({low!r}, {low!r})")
            pairs.add((low, high))

        # transitive closure
        above: dict[str, set[str]] = {i: set() for i in by_id}
        for low, high in pairs:
            above[low].add(high)
        changed = True
        while changed:
            changed = False
            for i in above:
                extra = set()
                for j in above[i]:
                    extra |= above[j] - above[i]
                if extra:
                    above[i] |= extra
                    changed = True
        closed = {(i, j) for i, js in above.items() for j in js}

        for i, j in closed:
            if not by_id[i].dim < by_id[j].dim:
                raise ValidationError(
                    f"closure order is inconsistent with dimensions: "
                    f"{i!r} (dim {by_id[i].dim}) below {j!r} (dim {by_id[j].dim})"
                )

        dims = [s.dim for s in strata]
        inferred = max(dims)
        if total_dim is None:
            total_dim = inferred
        maximal = {i for i in by_id if not above[i]}
        top = {s.id for s in strata if s.dim == total_dim}
        if maximal != top:
            raise ValidationError(
                f"maximal strata {sorted(maximal)} must be exactly the strata of "
                f"dimension {total_dim}, which are {sorted(top)}"
            )

        self._strata = tuple(sorted(strata, key=lambda s: (-s.dim, s.id)))
        self._by_id = by_id
        self._closure = frozenset(closed)
        self._above = {i: frozenset(js) for i, js in above.items()}
        below: dict[str, set[str]] = {i: set() for i in by_id}
        for i, j in closed:
            below[j].add(i)
        self._below = {i: frozenset(js) for i, js in below.items()}
        self.total_dim = total_dim
        self.oriented = oriented

    @property
    def strata(self) -> tuple[Stratum, ...]:
        return self._strata

    @property
    def closure_order(self) -> frozenset[tuple[str, str]]:
        return self._closure

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self._strata)

    def stratum(self, stratum_id: str) -> Stratum:
        try:
            return self._by_id[stratum_id]
        except KeyError:
            raise UnknownStratumError(f"no stratum with id {stratum_id!r}") from None

    def codim(self, stratum_id: str) -> int:
        return self.total_dim - self.stratum(stratum_id).dim

    def above(self, stratum_id: str) -> frozenset[str]:
        """Strata whose closure contains the given one."""
        self.stratum(stratum_id)
        return self._above[stratum_id]

    def below(self, stratum_id: str) -> frozenset[str]:
        """Strata contained in the closure of the given one."""
        self.stratum(stratum_id)
        return self._below[stratum_id]

    @property
    def maximal_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self._strata if not self._above[s.id])

    @property
    def singular_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self._strata if self._above[s.id])

    def covering_pairs(self) -> frozenset[tuple[str, str]]:
        """Transitive reduction of the closure order."""
        covers = set()
        for i, j in self._closure:
            if not any((i, k) in self._closure and (k, j) in self._closure for k in self._by_id):
                covers.add((i, j))
        return frozenset(covers)

    def __repr__(self) -> str:
        return (
            f"StratifiedSpace(total_dim={self.total_dim}, "
            f"strata={len(self._strata)}, oriented={self.oriented})"
        )


def _stabilizer(group: Subgroup, weight: int) -> Subgroup:
    """Subgroup of ``group`` fixing a nonzero vector of the given weight."""
    if group.order is None:
        if weight == 0:
            return Subgroup(group.ambient, None)
        return Subgroup(group.ambient, abs(weight))
    return Subgroup(group.ambient, math.gcd(weight, group.order))


def _realized_isotropies(v: Representation) -> set[Subgroup]:
    """Isotropy groups of points of S(V): meets of coordinate stabilizers."""
    stabs = {_stabilizer(v.group, w) for w in v.weights}
    closed = set(stabs)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                m = meet(a, b)
                if m not in closed:
                    closed.add(m)
                    changed = True
    if v.trivial_real_dim >= 1:
        closed.add(v.group)
    return closed


def sphere_stratification(v: Representation) -> StratifiedSpace:
    """Orbit-type stratification of the unit sphere S(V).

    A point with support T has isotropy equal to the intersection of the
    stabilizers of the coordinates in T, so each stratum of exact isotropy h
    is open and dense in the fixed sphere S(V^h) and has dimension
    rank(V^h) - 1.  Zero-dimensional fixed spheres consist of two points and
    are refined into two component strata.
    """
    if v.real_rank < 1:
        raise EmptySpaceError("the unit sphere of a rank-0 representation is empty")
    if not v.group.is_whole_group:
        raise ValidationError(
            "sphere_stratification expects a representation of the full acting group"
        )

    realized = _realized_isotropies(v)
    strata: list[Stratum] = []
    ids_of: dict[Subgroup, list[str]] = {}
    for h in sorted(realized, key=lambda s: s.sort_key()):
        dim = v.fixed_part(h).real_rank - 1
        base = f"B_{h.label}"
        if dim == 0:
            ids = [f"{base}_c0", f"{base}_c1"]
            strata.append(Stratum(ids[0], h, 0, 0))
            strata.append(Stratum(ids[1], h, 0, 1))
        else:
            ids = [base]
            strata.append(Stratum(base, h, dim, 0))
        ids_of[h] = ids

    pairs = []
    for h1 in realized:
        for h2 in realized:
            if h1 != h2 and subgroup_leq(h1, h2):
                # the h2-stratum sits inside the closure of the h1-stratum
                for i in ids_of[h2]:
                    for j in ids_of[h1]:
                        pairs.append((i, j))

    return StratifiedSpace(strata, pairs, total_dim=v.real_rank - 1, oriented=True)


def skeleton_filtration(space: StratifiedSpace) -> list[set[str]]:
    """Skeleta X_0 <= X_1 <= ... <= X_depth as cumulative id-sets.

    The filtration index of a stratum is the length of the longest chain
    strictly below it, so every skeleton is closed.
    """
    heights: dict[str, int] = {}

    def height(i: str) -> int:
        if i not in heights:
            lower = space.below(i)
            heights[i] = 0 if not lower else 1 + max(height(j) for j in lower)
        return heights[i]

    for i in space.ids:
        height(i)
    depth = max(heights.values())
    return [{i for i in space.ids if heights[i] <= k} for k in range(depth + 1)]


def stratum_length(space: StratifiedSpace, stratum_id: str) -> int:
    """Longest chain s < S_1 < ... < S_n going up from the given stratum."""
    space.stratum(stratum_id)
    lengths: dict[str, int] = {}

    def length(i: str) -> int:
        if i not in lengths:
            upper = space.above(i)
            lengths[i] = 0 if not upper else 1 + max(length(j) for j in upper)
        return lengths[i]

    return length(stratum_id)


@dataclass(frozen=True)
class CycleReport:
    """Result of the codimension-one test on a candidate zero-locus table."""

    passed: bool
    offending: tuple[str, ...]
    top_dim: int | None


def check_cycle_condition(
    space: StratifiedSpace, dim_table: Mapping[str, int]
) -> CycleReport:
    """Pass iff no assigned piece has dimension exactly one below the top.

    ``dim_table`` assigns to stratum ids the dimension of a candidate
    zero-locus piece inside that stratum; strata with empty pieces must be
    omitted, negative entries are rejected.
    """
    for stratum_id, dim in dim_table.items():
        space.stratum(stratum_id)
        if not isinstance(dim, int) or dim < 0:
            raise ValidationError(
                f"dimension table entries must be nonnegative integers, "
                f"got {dim!r} for {stratum_id!r}"
            )
    if not dim_table:
        return CycleReport(True, (), None)
    top = max(dim_table.values())
    offending = tuple(sorted(i for i, d in dim_table.items() if d == top - 1))
    return CycleReport(not offending, offending, top)


def stratification_records(space: StratifiedSpace) -> list[dict]:
    """JSON-ready stratum records, sorted by descending dimension."""
    covers = space.covering_pairs()
    records = []
    for s in space.strata:
        parents = sorted(j for (i, j) in covers if i == s.id)
        records.append(
            {
                "stratum_id": s.id,
                "isotropy": s.isotropy.label,
                "dim": s.dim,
                "codim": space.codim(s.id),
                "closure_parents": parents,
            }
        )
    return records
