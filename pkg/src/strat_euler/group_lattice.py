"""Closed subgroups of the circle group and of finite cyclic groups.

The ambient group is either the circle S1 or a finite cyclic group Z_n.  In
both cases the closed subgroups form the divisibility lattice: Cyclic(m) is
contained in Cyclic(m') exactly when m divides m', the trivial group is the
bottom element and the whole group the top.  Cyclic(1) coincides with the
trivial subgroup, so every subgroup has a unique representation.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AmbientMismatchError, ValidationError

__all__ = ["AmbientGroup", "Subgroup", "subgroup_leq", "join", "meet"]


@dataclass(frozen=True)
class AmbientGroup:
    """The acting group: the circle (``order is None``) or Z_n (``order=n``)."""

    order: int | None = None

    def __post_init__(self) -> None:
        if self.order is not None and (not isinstance(self.order, int) or self.order < 1):
            raise ValidationError(
                f"cyclic group order must be a positive integer, got {self.order!r}"
            )

    @classmethod
    def circle(cls) -> "AmbientGroup":
        return cls(None)

    @classmethod
    def cyclic(cls, n: int) -> "AmbientGroup":
        return cls(n)

    @property
    def is_circle(self) -> bool:
        return self.order is None

    @property
    def label(self) -> str:
        return "S1" if self.is_circle else f"Z{self.order}"

    def full_subgroup(self) -> "Subgroup":
        """The whole group, viewed as a subgroup of itself."""
        return Subgroup(self, self.order)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1)

    def __repr__(self) -> str:
        return f"AmbientGroup({self.label})"


@dataclass(frozen=True)
class Subgroup:
    """A closed subgroup: trivial (order 1), Cyclic(m), or the full circle.

    ``order is None`` encodes the full circle and is only legal inside the
    circle ambient group; in a cyclic ambient Z_n the order must divide n.
    """

    ambient: AmbientGroup
    order: int | None

    def __post_init__(self) -> None:
        if self.order is None:
            if not self.ambient.is_circle:
                raise ValidationError(
                    "the full circle is not a subgroup of a finite cyclic group"
                )
            return
        if not isinstance(self.order, int) or self.order < 1:
            raise ValidationError(
                f"subgroup order must be a positive integer, got {self.order!r}"
            )
        if self.ambient.order is not None and self.ambient.order % self.order != 0:
            raise ValidationError(
                f"Z{self.order} is not a subgroup of Z{self.ambient.order}"
            )

    @classmethod
    def trivial(cls, ambient: AmbientGroup) -> "Subgroup":
        return cls(ambient, 1)

    @classmethod
    def cyclic(cls, ambient: AmbientGroup, m: int) -> "Subgroup":
        return cls(ambient, m)

    @classmethod
    def full_circle(cls, ambient: AmbientGroup) -> "Subgroup":
        return cls(ambient, None)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_full_circle(self) -> bool:
        return self.order is None

    @property
    def is_whole_group(self) -> bool:
        """True when this subgroup is the entire ambient group."""
        return self.order is None or self.order == self.ambient.order

    @property
    def label(self) -> str:
        if self.order is None:
            return "S1"
        if self.order == 1:
            return "e"
        return f"Z{self.order}"

    def sort_key(self) -> tuple[int, int]:
        # full circle sorts last, finite subgroups by order
        return (1, 0) if self.order is None else (0, self.order)

    def __repr__(self) -> str:
        return f"Subgroup({self.label} < {self.ambient.label})"


def _require_same_ambient(a: Subgroup, b: Subgroup) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatchError(
            f"subgroups live in different ambient groups: "
            f"{a.ambient.label} vs {b.ambient.label}"
        )


def subgroup_leq(a: Subgroup, b: Subgroup) -> bool:
    """True iff ``a`` is contained in ``b``."""
    _require_same_ambient(a, b)
    if b.order is None:
        return True
    if a.order is None:
        return False
    return b.order % a.order == 0


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    """Least subgroup containing both ``a`` and ``b``."""
    _require_same_ambient(a, b)
    if a.order is None or b.order is None:
        return Subgroup(a.ambient, None)
    return Subgroup(a.ambient, math.lcm(a.order, b.order))


def meet(a: Subgroup, b: Subgroup) -> Subgroup:
    """Largest subgroup contained in both ``a`` and ``b`` (the intersection)."""
    _require_same_ambient(a, b)
    if a.order is None:
        return b
    if b.order is None:
        return a
    return Subgroup(a.ambient, math.gcd(a.order, b.order))
