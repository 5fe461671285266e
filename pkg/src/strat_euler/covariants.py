"""Minimal generators of invariant and equivariant monomials for cyclic weights.

Monomials in the complex coordinates z_i and their conjugates zb_i carry the
weight sum((alpha_i - beta_i) * w_i).  A modulus m >= 1 asks for congruence
mod m; modulus 0 encodes the circle, where weights must match exactly.

Generation is degree-bounded: enumeration runs over all monomials up to the
bound, invariant generators are the indecomposables of the invariant monoid
found there, and covariant generators of a target weight are the monomials
not divisible by any nontrivial invariant.  Completeness within the bound is
certified only heuristically through the saturation flag.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .errors import ValidationError

__all__ = [
    "MonomialMap",
    "UniversalVarietyInfo",
    "invariant_generators",
    "covariant_generators",
    "universal_variety_info",
]


@dataclass(frozen=True)
class MonomialMap:
    """A monomial z^alpha * zb^beta, optionally aimed at one target summand."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    target_index: int | None = None

    def __post_init__(self) -> None:
        alpha = tuple(self.alpha)
        beta = tuple(self.beta)
        if len(alpha) != len(beta):
            raise ValidationError("alpha and beta must have the same length")
        if any(not isinstance(e, int) or e < 0 for e in alpha + beta):
            raise ValidationError("exponents must be nonnegative integers")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def weight(self, weights: Sequence[int]) -> int:
        return sum((a - b) * w for a, b, w in zip(self.alpha, self.beta, weights))

    def divides(self, other: "MonomialMap") -> bool:
        return all(a <= oa for a, oa in zip(self.alpha, other.alpha)) and all(
            b <= ob for b, ob in zip(self.beta, other.beta)
        )

    def monomial_string(self) -> str:
        if self.degree == 0:
            return "1"
        k = len(self.alpha)
        parts = []
        for i, e in enumerate(self.alpha):
            if e:
                var = "z" if k == 1 else f"z{i + 1}"
                parts.append(var if e == 1 else f"{var}^{e}")
        for i, e in enumerate(self.beta):
            if e:
                var = "zb" if k == 1 else f"zb{i + 1}"
                parts.append(var if e == 1 else f"{var}^{e}")
        return "*".join(parts)

    def sort_key(self):
        # degree first, plain variables before conjugates, then z1 > z2 > ...
        return (
            self.degree,
            sum(self.beta),
            tuple(-b for b in self.beta),
            tuple(-a for a in self.alpha),
        )

    def __repr__(self) -> str:
        return f"MonomialMap({self.monomial_string()})"


def _congruent(value: int, target: int, modulus: int) -> bool:
    if modulus == 0:
        return value == target
    return (value - target) % modulus == 0


def _validate(modulus: int, weights: Sequence[int], degree_bound: int) -> None:
    if not isinstance(modulus, int) or modulus < 0:
        raise ValidationError(
            f"modulus must be a positive integer, or 0 for the circle, got {modulus!r}"
        )
    if not isinstance(degree_bound, int) or degree_bound < 1:
        raise ValidationError(f"degree bound must be >= 1, got {degree_bound!r}")
    if any(not isinstance(w, int) for w in weights):
        raise ValidationError(f"weights must be integers, got {list(weights)!r}")


def _monomials(num_vars: int, min_degree: int, max_degree: int) -> Iterator[MonomialMap]:
    """All monomials in the degree window, ordered by (degree, beta, alpha)."""
    for degree in range(min_degree, max_degree + 1):
        shell = []
        for exponents in _compositions(degree, 2 * num_vars):
            shell.append(
                MonomialMap(exponents[:num_vars], exponents[num_vars:])
            )
        shell.sort(key=MonomialMap.sort_key)
        yield from shell


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def invariant_generators(
    modulus: int, weights: Sequence[int], degree_bound: int
) -> list[MonomialMap]:
    """Indecomposable invariant monomials up to the degree bound.

    A monomial of weight zero is a generator when no smaller nontrivial
    invariant monomial divides it; the quotient by such a divisor is again
    invariant, so this is exactly indecomposability in the invariant monoid.
    """
    _validate(modulus, weights, degree_bound)
    generators: list[MonomialMap] = []
    for mono in _monomials(len(weights), 1, degree_bound):
        if not _congruent(mono.weight(weights), 0, modulus):
            continue
        if any(g.divides(mono) for g in generators):
            continue
        generators.append(mono)
    return generators


def covariant_generators(
    modulus: int,
    v_weights: Sequence[int],
    w_weight: int,
    degree_bound: int,
) -> list[MonomialMap]:
    """Module generators of the equivariant monomials of one target weight.

    Candidates are the monomials whose weight is congruent to ``w_weight``;
    a candidate is dropped when a nontrivial invariant monomial divides it,
    since the quotient is then a smaller covariant of the same weight.
    """
    _validate(modulus, v_weights, degree_bound)
    invariants = invariant_generators(modulus, v_weights, degree_bound)
    generators: list[MonomialMap] = []
    for mono in _monomials(len(v_weights), 0, degree_bound):
        if not _congruent(mono.weight(v_weights), w_weight, modulus):
            continue
        if any(inv.divides(mono) for inv in invariants):
            continue
        generators.append(mono)
    return generators


@dataclass(frozen=True)
class UniversalVarietyInfo:
    """Dimension bookkeeping for the zero set of the universal map.

    ``ambient_dim`` counts real coordinates of V times the generator
    coefficients; ``defining_equation_rank`` the real rank of the target.
    ``saturated`` is the heuristic completeness certificate: no minimal
    generator appeared in the top window of width max-found-degree.
    """

    generator_count: int
    ambient_dim: int
    defining_equation_rank: int
    saturated: bool
    generators: tuple[MonomialMap, ...] = ()


def universal_variety_info(
    modulus: int,
    v_weights: Sequence[int],
    w_weights: Sequence[int],
    degree_bound: int,
) -> UniversalVarietyInfo:
    """Collect covariant generators for every target summand and size the variety."""
    _validate(modulus, v_weights, degree_bound)
    all_generators: list[MonomialMap] = []
    for index, w in enumerate(w_weights):
        for g in covariant_generators(modulus, v_weights, w, degree_bound):
            all_generators.append(replace(g, target_index=index))
    if all_generators:
        max_found = max(g.degree for g in all_generators)
        window_start = degree_bound - max_found
        saturated = not any(
            window_start < g.degree <= degree_bound for g in all_generators
        )
    else:
        saturated = False
    return UniversalVarietyInfo(
        generator_count=len(all_generators),
        ambient_dim=2 * len(v_weights) + len(all_generators),
        defining_equation_rank=2 * len(w_weights),
        saturated=saturated,
        generators=tuple(all_generators),
    )
