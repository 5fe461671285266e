"""Standard fixed-point models: rotation spheres, CP^2, products.

These builders produce LocalizationProblem values for the classical circle
actions used as fixtures.  Sign conventions: the tangent weight at the north
pole of the rotation two-sphere is +1 and at the south pole -1, and a line
bundle with pole weights (m_N, m_S) has degree m_N - m_S.
"""

from __future__ import annotations

from typing import Mapping

from .equivariant_classes import LineSummand, point_ring, sphere_ring
from .errors import ValidationError
from .localization import BundleRestriction, FixedComponent, LocalizationProblem

__all__ = [
    "s2_rotation_model",
    "s4_semifree_model",
    "cp2_model",
    "s2xs2_model",
]


def s2_rotation_model(
    lines: Mapping[str, tuple[int, int]] | None = None,
    tangent_name: str = "T",
    speed: int = 1,
) -> LocalizationProblem:
    """Rotation of S^2 with two fixed points.

    ``lines`` maps bundle names to pole weights (m_N, m_S); the induced
    degree is m_N - m_S.
    """
    if speed == 0:
        raise ValidationError("rotation speed must be nonzero")
    lines = dict(lines or {})
    ranks = {tangent_name: 2, **{name: 2 for name in lines}}
    components = []
    for pole_index, sign in enumerate((1, -1)):
        bundles = {tangent_name: BundleRestriction((LineSummand(sign * speed),))}
        for name, (m_north, m_south) in lines.items():
            weight = m_north if pole_index == 0 else m_south
            bundles[name] = BundleRestriction((LineSummand(weight),))
        components.append(
            FixedComponent(
                ring=point_ring(),
                dim=0,
                normal=(LineSummand(sign * speed),),
                bundles=bundles,
            )
        )
    return LocalizationProblem(total_dim=2, components=tuple(components), ranks=ranks)


def s4_semifree_model(
    a=1,
    w: int = 1,
    b=3,
    normal_weight: int = 1,
    normal_chern=0,
    alpha_name: str = "Ea",
    beta_name: str = "Eb",
    tangent_name: str | None = None,
) -> LocalizationProblem:
    """Semi-free S^1-action on S^4 with fixed locus S^2.

    The first bundle is a weight-zero line with chern a*x, the second a
    weight-w line with chern b*x; the normal line has the given weight and an
    optional chern twist.  Passing ``tangent_name`` adds the rank-4 tangent
    bundle, whose weight-zero part is the tangent of the fixed sphere with
    ordinary Euler class 2x.
    """
    if normal_weight == 0:
        raise ValidationError("the normal weight of a fixed component must be nonzero")
    ring = sphere_ring("x")
    bundles = {
        alpha_name: BundleRestriction((LineSummand(0, {"x": a}),)),
        beta_name: BundleRestriction((LineSummand(w, {"x": b}),)),
    }
    ranks = {alpha_name: 2, beta_name: 2}
    if tangent_name is not None:
        bundles[tangent_name] = BundleRestriction(
            (LineSummand(normal_weight, {"x": normal_chern}),),
            extra_euler={"x": 2},
            extra_rank=2,
        )
        ranks[tangent_name] = 4
    component = FixedComponent(
        ring=ring,
        dim=2,
        normal=(LineSummand(normal_weight, {"x": normal_chern}),),
        bundles=bundles,
    )
    return LocalizationProblem(total_dim=4, components=(component,), ranks=ranks)


def cp2_model(
    lambdas: tuple[int, int, int] = (0, 1, 2),
    lines: Mapping[str, tuple[int, int]] | None = None,
    tangent_name: str = "T",
) -> LocalizationProblem:
    """Standard torus-circle action on CP^2 with three fixed points.

    The tangent weights at the i-th fixed point are lambda_j - lambda_i for
    j != i, so the lambdas must be pairwise distinct.  ``lines`` maps bundle
    names to (m, shift): the weight of the m-fold hyperplane bundle with
    linearization shift c at the i-th point is m*lambda_i + c.
    """
    if len(set(lambdas)) != 3:
        raise ValidationError("the three weights must be pairwise distinct")
    lines = dict(lines or {})
    ranks = {tangent_name: 4, **{name: 2 for name in lines}}
    components = []
    for i, li in enumerate(lambdas):
        tangent = tuple(
            LineSummand(lj - li) for j, lj in enumerate(lambdas) if j != i
        )
        bundles = {tangent_name: BundleRestriction(tangent)}
        for name, (multiple, shift) in lines.items():
            bundles[name] = BundleRestriction((LineSummand(multiple * li + shift),))
        components.append(
            FixedComponent(ring=point_ring(), dim=0, normal=tangent, bundles=bundles)
        )
    return LocalizationProblem(total_dim=4, components=tuple(components), ranks=ranks)


def s2xs2_model(
    speeds: tuple[int, int] = (1, 1), tangent_name: str = "T"
) -> LocalizationProblem:
    """Product of two rotation spheres: four isolated fixed points."""
    if 0 in speeds:
        raise ValidationError("both rotation speeds must be nonzero")
    components = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            tangent = (LineSummand(s1 * speeds[0]), LineSummand(s2 * speeds[1]))
            components.append(
                FixedComponent(
                    ring=point_ring(),
                    dim=0,
                    normal=tangent,
                    bundles={tangent_name: BundleRestriction(tangent)},
                )
            )
    return LocalizationProblem(
        total_dim=4, components=tuple(components), ranks={tangent_name: 4}
    )
