"""Fixed-point localization of equivariant integrals, exactly.

An integral over the total space is evaluated as a sum over fixed
components: restrict the class, divide by the equivariant Euler class of the
normal bundle, and integrate over the component.  All normal weights must be
nonzero, which is what makes the division a finite Laurent-polynomial
computation.

The intersection pairing of two problems of complementary rank is the
integral of the Euler class of their direct sum; it must come out as a pure
number, and any leftover u-power signals inconsistent input data.  The same
number can be computed through the fixed/moving factorization over the fixed
locus, with the equivariant Poincare dual of the cut-down locus substituted
for the Euler class of the fixed subbundle; both pipelines are implemented
and agree exactly on admissible data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    PoleCancellationError,
    SplitValidationError,
    ValidationError,
)
from .equivariant_classes import (
    EquivariantClass,
    FiniteBasisRing,
    LineSummand,
    RationalLaurent,
    _normalize_chern,
    euler_class,
    integrate_over_component,
    invert_euler,
)

__all__ = [
    "BundleRestriction",
    "FixedComponent",
    "LocalizationProblem",
    "ComponentSplit",
    "abbv_integral",
    "intersection_number",
    "fixed_locus_pairing",
    "product_formula_check",
    "canonical_split",
    "TRANSVERSALITY_ASSUMPTION",
]

TRANSVERSALITY_ASSUMPTION = (
    "assumes stratified transversality of the paired moduli spaces"
)


@dataclass(frozen=True)
class BundleRestriction:
    """Restriction of one equivariant bundle to a fixed component.

    ``summands`` are the weight-w complex lines; ``extra_euler`` is the
    ordinary Euler class of an optional weight-zero real part (for example
    the tangent bundle of the component inside a tangent-bundle restriction)
    whose real rank is ``extra_rank``.
    """

    summands: tuple[LineSummand, ...] = ()
    extra_euler: tuple[tuple[str, Fraction], ...] | None = None
    extra_rank: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(self.summands))
        if self.extra_euler is not None:
            object.__setattr__(self, "extra_euler", _normalize_chern(self.extra_euler))
        if not isinstance(self.extra_rank, int) or self.extra_rank < 0:
            raise ValidationError(f"extra_rank must be >= 0, got {self.extra_rank!r}")
        if self.extra_euler is not None and self.extra_rank == 0:
            raise ValidationError(
                "a weight-zero Euler factor needs its real rank (extra_rank)"
            )

    @property
    def rank(self) -> int:
        return 2 * len(self.summands) + self.extra_rank


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of the fixed locus with its localized data."""

    ring: FiniteBasisRing
    dim: int
    normal: tuple[LineSummand, ...]
    bundles: Mapping[str, BundleRestriction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 0 or self.dim % 2 != 0:
            raise ValidationError(f"component dimension must be even and >= 0, got {self.dim!r}")
        if self.ring.degrees[self.ring.top_label] != self.dim:
            raise ValidationError(
                f"ring top degree {self.ring.degrees[self.ring.top_label]} must "
                f"equal the component dimension {self.dim}"
            )
        object.__setattr__(self, "normal", tuple(self.normal))
        object.__setattr__(self, "bundles", dict(self.bundles))

    def euler_of(self, names: Sequence[str]) -> EquivariantClass:
        """Equivariant Euler class of the direct sum of the named bundles."""
        result = EquivariantClass.one(self.ring)
        for name in names:
            if name not in self.bundles:
                raise ValidationError(f"component has no bundle named {name!r}")
            restriction = self.bundles[name]
            result = result * euler_class(
                self.ring, restriction.summands, restriction.extra_euler
            )
        return result

    def normal_euler(self) -> EquivariantClass:
        return euler_class(self.ring, self.normal)


@dataclass(frozen=True)
class LocalizationProblem:
    """A total space described purely through its fixed-point data."""

    total_dim: int
    components: tuple[FixedComponent, ...]
    ranks: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "ranks", dict(self.ranks))
        if not self.components:
            raise ValidationError("a localization problem needs at least one component")
        names = set(self.ranks)
        for idx, comp in enumerate(self.components):
            codim = self.total_dim - comp.dim
            if 2 * len(comp.normal) != codim:
                raise ValidationError(
                    f"component {idx}: {len(comp.normal)} normal lines give real "
                    f"rank {2 * len(comp.normal)}, expected codimension {codim}"
                )
            if set(comp.bundles) != names:
                raise ValidationError(
                    f"component {idx}: bundle names {sorted(comp.bundles)} do not "
                    f"match the registry {sorted(names)}"
                )
            for name, restriction in comp.bundles.items():
                if restriction.rank != self.ranks[name]:
                    raise ValidationError(
                        f"component {idx}: bundle {name!r} has rank "
                        f"{restriction.rank}, registry says {self.ranks[name]}"
                    )

    def rank_of(self, names: Sequence[str]) -> int:
        return sum(self.ranks[name] for name in names)


def _as_name_list(class_spec) -> list[str]:
    if isinstance(class_spec, str):
        return [class_spec]
    return list(class_spec)


def abbv_integral(problem: LocalizationProblem, class_spec) -> RationalLaurent:
    """Fixed-point evaluation of the integral of an Euler class.

    ``class_spec`` is a bundle name or a sequence of names meaning the Euler
    class of their direct sum; the empty sequence means the constant class 1.
    The result is the exact Laurent polynomial in u.
    """
    names = _as_name_list(class_spec)
    for name in names:
        if name not in problem.ranks:
            raise ValidationError(f"unknown bundle name {name!r}")
    total = RationalLaurent.zero()
    for comp in problem.components:
        numerator = comp.euler_of(names)
        inverse_normal = invert_euler(comp.normal_euler())
        total = total + integrate_over_component(numerator * inverse_normal)
    return total


def intersection_number(
    problem: LocalizationProblem, alpha: str, beta: str
) -> Fraction:
    """Pairing of two problems of complementary rank, as a pure number."""
    for name in (alpha, beta):
        if name not in problem.ranks:
            raise ValidationError(f"unknown bundle name {name!r}")
    rank_sum = problem.rank_of([alpha, beta])
    if rank_sum != problem.total_dim:
        raise ValidationError(
            f"rank({alpha}) + rank({beta}) = {rank_sum} must equal the total "
            f"dimension {problem.total_dim}"
        )
    value = abbv_integral(problem, [alpha, beta])
    if not value.is_constant:
        raise PoleCancellationError(value)
    return value.constant_term


@dataclass(frozen=True)
class ComponentSplit:
    """Designation of the summands of one bundle over one component."""

    fixed: tuple[LineSummand, ...] = ()
    moving: tuple[LineSummand, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed", tuple(self.fixed))
        object.__setattr__(self, "moving", tuple(self.moving))


def canonical_split(
    problem: LocalizationProblem, name: str
) -> tuple[ComponentSplit, ...]:
    """Split by weight: weight-zero summands are fixed, the rest moving."""
    if name not in problem.ranks:
        raise ValidationError(f"unknown bundle name {name!r}")
    splits = []
    for comp in problem.components:
        summands = comp.bundles[name].summands
        splits.append(
            ComponentSplit(
                fixed=tuple(s for s in summands if s.weight == 0),
                moving=tuple(s for s in summands if s.weight != 0),
            )
        )
    return tuple(splits)


def _summand_key(s: LineSummand):
    return (s.weight, s.chern)


def _validate_split(
    problem: LocalizationProblem, name: str, splits: Sequence[ComponentSplit]
) -> None:
    if len(splits) != len(problem.components):
        raise SplitValidationError(
            f"split for {name!r} covers {len(splits)} components, "
            f"problem has {len(problem.components)}"
        )
    for idx, (comp, split) in enumerate(zip(problem.components, splits)):
        for s in split.fixed:
            if s.weight != 0:
                raise SplitValidationError(
                    f"component {idx}: weight-{s.weight} summand of {name!r} "
                    f"classified as fixed"
                )
        for s in split.moving:
            if s.weight == 0:
                raise SplitValidationError(
                    f"component {idx}: weight-0 summand of {name!r} classified "
                    f"as moving"
                )
        declared = sorted(split.fixed + split.moving, key=_summand_key)
        actual = sorted(comp.bundles[name].summands, key=_summand_key)
        if declared != actual:
            raise SplitValidationError(
                f"component {idx}: split of {name!r} is not a partition of its "
                f"summands"
            )


def fixed_locus_pairing(
    problem: LocalizationProblem,
    alpha: str,
    beta: str,
    split: Mapping[str, Sequence[ComponentSplit]] | None = None,
) -> Fraction:
    """Pairing computed through the fixed/moving factorization.

    Per component this integrates e(fixed part) * e(moving part) / e(normal),
    where the Euler class of the fixed part stands in for the equivariant
    Poincare dual of the cut-down locus.  Weight-zero real factors always
    belong to the fixed side.
    """
    for name in (alpha, beta):
        if name not in problem.ranks:
            raise ValidationError(f"unknown bundle name {name!r}")
    rank_sum = problem.rank_of([alpha, beta])
    if rank_sum != problem.total_dim:
        raise ValidationError(
            f"rank({alpha}) + rank({beta}) = {rank_sum} must equal the total "
            f"dimension {problem.total_dim}"
        )
    split = dict(split) if split else {}
    splits = {}
    for name in (alpha, beta):
        splits[name] = tuple(split.get(name) or canonical_split(problem, name))
        _validate_split(problem, name, splits[name])

    total = RationalLaurent.zero()
    for idx, comp in enumerate(problem.components):
        fixed_summands = splits[alpha][idx].fixed + splits[beta][idx].fixed
        moving_summands = splits[alpha][idx].moving + splits[beta][idx].moving
        e_fixed = euler_class(comp.ring, fixed_summands)
        for name in (alpha, beta):
            extra = comp.bundles[name].extra_euler
            if extra is not None:
                e_fixed = e_fixed * EquivariantClass.from_element(
                    comp.ring, dict(extra)
                )
        e_moving = euler_class(comp.ring, moving_summands)
        inverse_normal = invert_euler(comp.normal_euler())
        total = total + integrate_over_component(e_fixed * e_moving * inverse_normal)
    if not total.is_constant:
        raise PoleCancellationError(total)
    return total.constant_term


def product_formula_check(
    problem: LocalizationProblem,
    name: str,
    split: Mapping[str, Sequence[ComponentSplit]] | Sequence[ComponentSplit] | None = None,
) -> bool:
    """Whitney check: e(all summands) == e(fixed part) * e(moving part).

    The split is taken at face value, so doubling or dropping a summand in
    one factor makes the check return False rather than raise.
    """
    if name not in problem.ranks:
        raise ValidationError(f"unknown bundle name {name!r}")
    if split is None:
        splits: Sequence[ComponentSplit] = canonical_split(problem, name)
    elif isinstance(split, Mapping):
        splits = tuple(split.get(name) or canonical_split(problem, name))
    else:
        splits = tuple(split)
    if len(splits) != len(problem.components):
        raise ValidationError(
            f"split covers {len(splits)} components, problem has "
            f"{len(problem.components)}"
        )
    for comp, comp_split in zip(problem.components, splits):
        restriction = comp.bundles[name]
        whole = euler_class(comp.ring, restriction.summands, restriction.extra_euler)
        factored = euler_class(
            comp.ring, comp_split.fixed, restriction.extra_euler
        ) * euler_class(comp.ring, comp_split.moving)
        if whole != factored:
            return False
    return True
