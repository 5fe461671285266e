"""Equivariant bundles over a stratified base: partition, coindex, feasibility.

A bundle is recorded through its fiber representation over each stratum.
Over a stratum with isotropy H the fiber splits into the H-fixed summands
and the moving complement; the per-stratum ranks of these two pieces, the
codimension, and the expected zero-locus dimension r_H = dim - fixed_rank
form the partition table.  The coindex aggregates codim - obstruction_rank
over the strata with nontrivial isotropy; a value above one forces every
singular zero piece at least two below the top dimension, which is exactly
what the feasibility verdict checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ConsistencyViolationError, ValidationError
from .group_lattice import Subgroup, subgroup_leq
from .representations import Representation
from .stratification import StratifiedSpace, check_cycle_condition

__all__ = [
    "EquivariantBundle",
    "PartitionRow",
    "PartitionReport",
    "FeasibilityReport",
    "trivial_bundle",
    "validate_consistency",
    "partition",
    "coindex",
    "feasibility_report",
    "feasibility_json",
    "VERDICT_FEASIBLE",
    "VERDICT_INFEASIBLE",
    "VERDICT_VACUOUS",
    "VERDICT_FREE",
]

VERDICT_FEASIBLE = "invariant-Euler-cycle feasible"
VERDICT_INFEASIBLE = "infeasible"
VERDICT_VACUOUS = "vacuous"
VERDICT_FREE = "classically transversal regime"


@dataclass(frozen=True)
class EquivariantBundle:
    """A G-vector bundle described by one fiber representation per stratum."""

    base: StratifiedSpace
    fiber: Mapping[str, Representation]
    real_rank: int
    oriented: bool = True
    orientation_sign: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ids = set(self.base.ids)
        if set(self.fiber) != ids:
            missing = sorted(ids - set(self.fiber))
            extra = sorted(set(self.fiber) - ids)
            raise ValidationError(
                f"fiber table must cover the strata exactly "
                f"(missing {missing}, unknown {extra})"
            )
        for s in self.base.strata:
            rep = self.fiber[s.id]
            if rep.group != s.isotropy:
                raise ValidationError(
                    f"fiber over {s.id!r} must be a representation of its isotropy "
                    f"{s.isotropy.label}, got one of {rep.group.label}"
                )
            if rep.real_rank != self.real_rank:
                raise ValidationError(
                    f"fiber rank over {s.id!r} is {rep.real_rank}, "
                    f"expected constant rank {self.real_rank}"
                )
        # isotropy must shrink towards larger strata for restriction to make sense
        for low, high in self.base.closure_order:
            if not subgroup_leq(
                self.base.stratum(high).isotropy, self.base.stratum(low).isotropy
            ):
                raise ValidationError(
                    f"isotropy of {high!r} must be contained in the isotropy of "
                    f"{low!r} lying in its closure"
                )
        signs = dict(self.orientation_sign)
        for key, value in signs.items():
            if key not in ids:
                raise ValidationError(f"orientation sign for unknown stratum {key!r}")
            if value not in (1, -1):
                raise ValidationError(f"orientation sign must be +1 or -1, got {value!r}")
        for i in ids:
            signs.setdefault(i, 1)
        object.__setattr__(self, "orientation_sign", signs)
        object.__setattr__(self, "fiber", dict(self.fiber))


def trivial_bundle(
    base: StratifiedSpace, rep: Representation, oriented: bool = True
) -> EquivariantBundle:
    """The product bundle S(V) x W: every fiber is the restriction of one W."""
    fiber = {s.id: rep.restrict(s.isotropy) for s in base.strata}
    return EquivariantBundle(base, fiber, rep.real_rank, oriented)


def validate_consistency(bundle: EquivariantBundle) -> None:
    """Check that fibers agree along the closure order.

    For a stratum s in the closure of s' the isotropy of s' is contained in
    the isotropy of s, and the fiber over s must restrict to the fiber over
    s'.  This is the computable shadow of the constancy of the fixed-fiber
    dimension along connected orbit-type pieces.
    """
    for low, high in sorted(bundle.base.closure_order):
        h_up = bundle.base.stratum(high).isotropy
        if bundle.fiber[low].restrict(h_up) != bundle.fiber[high]:
            raise ConsistencyViolationError(low, high)


@dataclass(frozen=True)
class PartitionRow:
    stratum_id: str
    isotropy: Subgroup
    base_dim: int
    codim: int
    fixed_rank: int
    obstruction_rank: int
    r_h: int


@dataclass(frozen=True)
class PartitionReport:
    """Per-stratum fixed/obstruction ranks with dimension bookkeeping."""

    rows: tuple[PartitionRow, ...]

    def row(self, stratum_id: str) -> PartitionRow:
        for r in self.rows:
            if r.stratum_id == stratum_id:
                return r
        raise ValidationError(f"no partition row for stratum {stratum_id!r}")

    def __iter__(self):
        return iter(self.rows)


def partition(bundle: EquivariantBundle) -> PartitionReport:
    """Split every fiber into fixed and moving parts and tabulate the ranks."""
    validate_consistency(bundle)
    rows = []
    for s in bundle.base.strata:
        rep = bundle.fiber[s.id]
        fixed = rep.fixed_part(s.isotropy).real_rank
        moving = rep.moving_part(s.isotropy).real_rank
        rows.append(
            PartitionRow(
                stratum_id=s.id,
                isotropy=s.isotropy,
                base_dim=s.dim,
                codim=bundle.base.codim(s.id),
                fixed_rank=fixed,
                obstruction_rank=moving,
                r_h=s.dim - fixed,
            )
        )
    return PartitionReport(tuple(rows))


def _coindex_from_rows(rows) -> int | float:
    values = [r.codim - r.obstruction_rank for r in rows if not r.isotropy.is_trivial]
    return min(values) if values else math.inf


def coindex(bundle: EquivariantBundle) -> int | float:
    """Aggregate codim - obstruction_rank over nontrivial-isotropy strata.

    Returns +inf for a free action (no nontrivial stratum): the classical
    perturbation argument applies there.  A value above one means every
    singular stratum still has two spare codimensions after accounting for
    its obstruction bundle.
    """
    return _coindex_from_rows(partition(bundle).rows)


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    k: int
    coind: int | float
    rows: tuple[PartitionRow, ...]
    cycle_ok: bool
    dim_check_ok: bool
    oriented: bool
    feasible: bool
    verdict: str

    @property
    def r_e(self) -> int:
        return self.n - self.k

    @property
    def r_table(self) -> dict[str, int]:
        return {r.stratum_id: r.r_h for r in self.rows}


def feasibility_report(bundle: EquivariantBundle) -> FeasibilityReport:
    """Decide whether a generic equivariant perturbation yields an Euler cycle.

    Checks, in order: n >= k (otherwise the expected cycle is empty and the
    verdict is vacuous), orientation, coindex > 1, the dimension bound
    r_H <= n - k - 2 on every nontrivial-isotropy stratum, and the absence
    of codimension-one pieces in the expected zero-locus table.
    """
    report = partition(bundle)
    rows = report.rows
    n = bundle.base.total_dim
    k = bundle.real_rank
    coind = _coindex_from_rows(rows)

    cycle_table = {r.stratum_id: r.r_h for r in rows if r.r_h >= 0}
    cycle = check_cycle_condition(bundle.base, cycle_table)
    dim_ok = all(r.r_h <= n - k - 2 for r in rows if not r.isotropy.is_trivial)

    if n < k:
        feasible = False
        verdict = VERDICT_VACUOUS
    elif not bundle.oriented:
        feasible = False
        verdict = VERDICT_INFEASIBLE
    elif coind == math.inf:
        feasible = cycle.passed
        verdict = VERDICT_FREE if feasible else VERDICT_INFEASIBLE
    else:
        feasible = coind > 1 and dim_ok and cycle.passed
        verdict = VERDICT_FEASIBLE if feasible else VERDICT_INFEASIBLE

    return FeasibilityReport(
        n=n,
        k=k,
        coind=coind,
        rows=rows,
        cycle_ok=cycle.passed,
        dim_check_ok=dim_ok,
        oriented=bundle.oriented,
        feasible=feasible,
        verdict=verdict,
    )


def feasibility_json(report: FeasibilityReport) -> dict:
    """JSON-ready report following the published schema."""
    strata = [
        {
            "id": r.stratum_id,
            "isotropy": r.isotropy.label,
            "dim": r.base_dim,
            "codim": r.codim,
            "fixed_rank": r.fixed_rank,
            "obstruction_rank": r.obstruction_rank,
            "r_H": r.r_h,
        }
        for r in report.rows
    ]
    coind = "inf" if report.coind == math.inf else report.coind
    return {
        "strata": strata,
        "coindex": coind,
        "cycle_ok": report.cycle_ok,
        "verdict": report.verdict,
    }
