"""Integer-weight representations and the fixed/moving fiber decomposition.

A representation is a multiset of complex one-dimensional summands, each of
real rank two and labelled by an integer weight w (the group parameter acts
on the summand as rotation with speed w), plus a trivial real factor.  For a
cyclic group of order m only the residue of w mod m matters, so weights are
stored reduced to [0, m); for the circle they keep their sign, which is what
orientation-sensitive localization denominators see.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatchError, ValidationError
from .group_lattice import AmbientGroup, Subgroup, subgroup_leq

__all__ = [
    "Representation",
    "circle_representation",
    "cyclic_representation",
    "restrict",
    "fixed_part",
    "moving_part",
]


@dataclass(frozen=True)
class Representation:
    """A representation of ``group`` given by complex weights and a trivial real part."""

    group: Subgroup
    weights: tuple[int, ...] = ()
    trivial_real_dim: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.trivial_real_dim, int) or self.trivial_real_dim < 0:
            raise ValidationError(
                f"trivial_real_dim must be a nonnegative integer, got {self.trivial_real_dim!r}"
            )
        ws = tuple(self.weights)
        if not all(isinstance(w, int) for w in ws):
            raise ValidationError(f"weights must be integers, got {ws!r}")
        order = self.group.order
        if order is not None:
            ws = tuple(w % order for w in ws)
        object.__setattr__(self, "weights", tuple(sorted(ws)))

    @property
    def real_rank(self) -> int:
        return 2 * len(self.weights) + self.trivial_real_dim

    def restrict(self, h: Subgroup) -> "Representation":
        """The same summands viewed as a representation of the subgroup ``h``."""
        if h.ambient != self.group.ambient:
            raise AmbientMismatchError(
                f"subgroup of {h.ambient.label} cannot restrict a representation "
                f"over {self.group.ambient.label}"
            )
        if not subgroup_leq(h, self.group):
            raise ValidationError(
                f"{h.label} is not a subgroup of {self.group.label}"
            )
        return Representation(h, self.weights, self.trivial_real_dim)

    def fixed_part(self, h: Subgroup) -> "Representation":
        """Sub-representation on which ``h`` acts trivially."""
        res = self.restrict(h)
        return Representation(
            h,
            tuple(w for w in res.weights if w == 0),
            res.trivial_real_dim,
        )

    def moving_part(self, h: Subgroup) -> "Representation":
        """Complement of the fixed part: all summands ``h`` genuinely rotates."""
        res = self.restrict(h)
        return Representation(h, tuple(w for w in res.weights if w != 0), 0)

    def __repr__(self) -> str:
        return (
            f"Representation({self.group.label}; weights={list(self.weights)}, "
            f"trivial={self.trivial_real_dim})"
        )


def circle_representation(
    weights: tuple[int, ...] | list[int] = (),
    trivial_real_dim: int = 0,
) -> Representation:
    """A representation of the full circle group."""
    ambient = AmbientGroup.circle()
    return Representation(ambient.full_subgroup(), tuple(weights), trivial_real_dim)


def cyclic_representation(
    n: int,
    weights: tuple[int, ...] | list[int] = (),
    trivial_real_dim: int = 0,
) -> Representation:
    """A representation of the cyclic group Z_n."""
    ambient = AmbientGroup.cyclic(n)
    return Representation(ambient.full_subgroup(), tuple(weights), trivial_real_dim)


def restrict(rep: Representation, h: Subgroup) -> Representation:
    return rep.restrict(h)


def fixed_part(rep: Representation, h: Subgroup) -> Representation:
    return rep.fixed_part(h)


def moving_part(rep: Representation, h: Subgroup) -> Representation:
    return rep.moving_part(h)
