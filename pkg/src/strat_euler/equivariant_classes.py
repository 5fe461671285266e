"""Exact arithmetic for circle-equivariant cohomology classes.

Classes live in H*(F)[u, u^-1] where F is a fixed component whose rational
cohomology is a finite-basis graded commutative ring concentrated in even
degrees, and u is the degree-two equivariant parameter.  Coefficients are
exact rationals throughout; there is no floating point anywhere, so
localization identities cancel on the nose.

The equivariant Euler class of a sum of weight-w complex line bundles is the
product of the factors w*u + c, with c the ordinary first Chern class of the
line.  Such a product is invertible as a Laurent polynomial exactly when all
weights are nonzero, because positive-degree ring elements are nilpotent and
the geometric series terminates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonInvertibleError, RingMismatchError, ValidationError

__all__ = [
    "FiniteBasisRing",
    "EquivariantClass",
    "LineSummand",
    "RationalLaurent",
    "ring_mul",
    "euler_class",
    "invert_euler",
    "integrate_over_component",
    "point_ring",
    "sphere_ring",
    "projective_space_ring",
    "tensor_ring",
    "builtin_ring",
    "BUILTIN_RING_NAMES",
]

Elem = dict  # {basis label: Fraction}, sparse, no zero entries


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValidationError(
        f"coefficients must be exact rationals (int, Fraction or 'p/q'), got {value!r}"
    )


class FiniteBasisRing:
    """Graded commutative ring with a finite labelled basis.

    The basis must contain the unit label "1" in degree zero and nothing else
    in degree zero; all degrees are even, which keeps multiplication
    sign-free.  Products absent from the table are zero (truncation above the
    top degree).  Associativity is checked exhaustively over the basis at
    construction time, so a ring that constructs is safe to compute in.
    """

    def __init__(
        self,
        basis: Iterable[tuple[str, int]],
        products: Mapping[tuple[str, str], Mapping[str, object]],
        top_label: str,
        name: str | None = None,
    ):
        labels: list[str] = []
        degrees: dict[str, int] = {}
        for label, degree in basis:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"basis labels must be nonempty strings, got {label!r}")
            if label in degrees:
                raise ValidationError(f"duplicate basis label {label!r}")
            if not isinstance(degree, int) or degree < 0:
                raise ValidationError(f"basis degree must be >= 0, got {degree!r}")
            if degree % 2 != 0:
                raise ValidationError(
                    f"odd-degree basis element {label!r} rejected: only even "
                    f"cohomology is supported"
                )
            labels.append(label)
            degrees[label] = degree
        if degrees.get("1") != 0:
            raise ValidationError('the basis must contain the unit label "1" in degree 0')
        if sum(1 for d in degrees.values() if d == 0) != 1:
            raise ValidationError("degree 0 must be spanned by the unit alone")
        if top_label not in degrees:
            raise ValidationError(f"top label {top_label!r} is not a basis element")

        self.labels: tuple[str, ...] = tuple(labels)
        self.degrees: dict[str, int] = degrees
        self.top_label = top_label
        self.top_degree = max(degrees.values())
        self.name = name

        table: dict[tuple[str, str], Elem] = {}
        for (a, b), combo in products.items():
            if a not in degrees or b not in degrees:
                raise ValidationError(f"product entry ({a!r}, {b!r}) names unknown labels")
            entry: Elem = {}
            for label, coeff in combo.items():
                if label not in degrees:
                    raise ValidationError(
                        f"product ({a!r}, {b!r}) produces unknown label {label!r}"
                    )
                c = _frac(coeff)
                if c:
                    if degrees[label] != degrees[a] + degrees[b]:
                        raise ValidationError(
                            f"grading violated: {a!r}*{b!r} has a degree-"
                            f"{degrees[label]} component {label!r}"
                        )
                    entry[label] = c
            for key in ((a, b), (b, a)):
                if key in table and table[key] != entry:
                    raise ValidationError(
                        f"conflicting product entries for {key!r}: multiplication "
                        f"must be commutative"
                    )
                table[key] = entry
        for label in labels:
            unit_row = {label: Fraction(1)}
            for key in (("1", label), (label, "1")):
                if key in table and table[key] != unit_row:
                    raise ValidationError(f"product with the unit must be the identity, {key!r}")
                table[key] = unit_row
        for a in labels:
            for b in labels:
                table.setdefault((a, b), {})
        self._table = table
        self._check_associativity()

    def _check_associativity(self) -> None:
        for a, b, c in itertools.product(self.labels, repeat=3):
            left = self.multiply_elements(self._table[(a, b)], {c: Fraction(1)})
            right = self.multiply_elements({a: Fraction(1)}, self._table[(b, c)])
            if left != right:
                raise ValidationError(
                    f"multiplication table is not associative at ({a!r}, {b!r}, {c!r})"
                )

    # -- element arithmetic -------------------------------------------------

    def element(self, value) -> Elem:
        """Coerce a scalar, a label, label->coefficient pairs, or a mapping."""
        if isinstance(value, str):
            if value not in self.degrees:
                raise ValidationError(f"unknown basis label {value!r}")
            return {value: Fraction(1)}
        if isinstance(value, tuple) and all(
            isinstance(p, tuple) and len(p) == 2 for p in value
        ):
            value = dict(value)
        if isinstance(value, Mapping):
            out: Elem = {}
            for label, coeff in value.items():
                if label not in self.degrees:
                    raise ValidationError(f"unknown basis label {label!r}")
                c = _frac(coeff)
                if c:
                    out[label] = c
            return out
        c = _frac(value)
        return {"1": c} if c else {}

    def add_elements(self, x: Elem, y: Elem) -> Elem:
        out = dict(x)
        for label, coeff in y.items():
            c = out.get(label, Fraction(0)) + coeff
            if c:
                out[label] = c
            else:
                out.pop(label, None)
        return out

    def scale_element(self, x: Elem, s: Fraction) -> Elem:
        s = _frac(s)
        return {label: coeff * s for label, coeff in x.items()} if s else {}

    def multiply_elements(self, x: Elem, y: Elem) -> Elem:
        out: Elem = {}
        for la, ca in x.items():
            for lb, cb in y.items():
                for label, coeff in self._table[(la, lb)].items():
                    c = out.get(label, Fraction(0)) + ca * cb * coeff
                    if c:
                        out[label] = c
                    else:
                        out.pop(label, None)
        return out

    def integral(self, x: Elem) -> Fraction:
        """Evaluation against the fundamental class: coefficient of the top label."""
        return x.get(self.top_label, Fraction(0))

    def element_degrees(self, x: Elem) -> set[int]:
        return {self.degrees[label] for label in x}

    def __repr__(self) -> str:
        shown = self.name or ",".join(self.labels)
        return f"FiniteBasisRing({shown})"


class EquivariantClass:
    """A Laurent polynomial in u with coefficients in a FiniteBasisRing."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: FiniteBasisRing, terms: Mapping[int, Mapping] = ()):
        normalized: dict[int, Elem] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for upow, elem in items:
            if not isinstance(upow, int):
                raise ValidationError(f"u-power must be an integer, got {upow!r}")
            e = ring.element(elem) if not isinstance(elem, dict) else {
                label: _frac(c) for label, c in elem.items() if _frac(c)
            }
            for label in e:
                if label not in ring.degrees:
                    raise ValidationError(f"unknown basis label {label!r}")
            if e:
                normalized[upow] = e
        self.ring = ring
        self._terms = normalized

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring: FiniteBasisRing) -> "EquivariantClass":
        return cls(ring, {})

    @classmethod
    def one(cls, ring: FiniteBasisRing) -> "EquivariantClass":
        return cls(ring, {0: {"1": Fraction(1)}})

    @classmethod
    def scalar(cls, ring: FiniteBasisRing, value, upow: int = 0) -> "EquivariantClass":
        c = _frac(value)
        return cls(ring, {upow: {"1": c}} if c else {})

    @classmethod
    def from_element(cls, ring: FiniteBasisRing, element, upow: int = 0) -> "EquivariantClass":
        return cls(ring, {upow: ring.element(element)})

    @classmethod
    def u(cls, ring: FiniteBasisRing, power: int = 1) -> "EquivariantClass":
        return cls.scalar(ring, 1, upow=power)

    # -- accessors -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def upowers(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def u_coefficient(self, upow: int) -> Elem:
        return dict(self._terms.get(upow, {}))

    def terms(self) -> dict[int, Elem]:
        return {j: dict(e) for j, e in self._terms.items()}

    def homogeneous_degree(self) -> int | None:
        """The common degree 2*upow + deg(label) of all terms, or None if mixed."""
        degrees = {
            2 * upow + self.ring.degrees[label]
            for upow, elem in self._terms.items()
            for label in elem
        }
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def scalar_support(self) -> list[tuple[int, Fraction]]:
        """The u-monomials whose coefficient has a unit component."""
        return sorted(
            (upow, elem["1"]) for upow, elem in self._terms.items() if "1" in elem
        )

    # -- arithmetic ----------------------------------------------------------

    def _require_same_ring(self, other: "EquivariantClass") -> None:
        if self.ring is not other.ring:
            raise RingMismatchError("classes belong to different coefficient rings")

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        self._require_same_ring(other)
        terms = {j: dict(e) for j, e in self._terms.items()}
        for j, e in other._terms.items():
            combined = self.ring.add_elements(terms.get(j, {}), e)
            if combined:
                terms[j] = combined
            else:
                terms.pop(j, None)
        return EquivariantClass(self.ring, terms)

    def __neg__(self) -> "EquivariantClass":
        return EquivariantClass(
            self.ring,
            {j: {label: -c for label, c in e.items()} for j, e in self._terms.items()},
        )

    def __sub__(self, other: "EquivariantClass") -> "EquivariantClass":
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, EquivariantClass):
            self._require_same_ring(other)
            terms: dict[int, Elem] = {}
            for ja, ea in self._terms.items():
                for jb, eb in other._terms.items():
                    prod = self.ring.multiply_elements(ea, eb)
                    if prod:
                        j = ja + jb
                        combined = self.ring.add_elements(terms.get(j, {}), prod)
                        if combined:
                            terms[j] = combined
                        else:
                            terms.pop(j, None)
            return EquivariantClass(self.ring, terms)
        scalar = _frac(other)
        return EquivariantClass(
            self.ring,
            {j: self.ring.scale_element(e, scalar) for j, e in self._terms.items()},
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "EquivariantClass":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError("only nonnegative integer powers are supported")
        result = EquivariantClass.one(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        raise TypeError("EquivariantClass is unhashable")

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "upow": j,
                    "coeffs": {label: str(c) for label, c in sorted(e.items())},
                }
                for j, e in sorted(self._terms.items())
            ]
        }

    def __repr__(self) -> str:
        if self.is_zero:
            return "EquivariantClass(0)"
        parts = []
        for j in sorted(self._terms, reverse=True):
            elem = " + ".join(
                f"{c}*{label}" if label != "1" else f"{c}"
                for label, c in sorted(self._terms[j].items())
            )
            if j == 0:
                parts.append(f"({elem})")
            else:
                parts.append(f"({elem})*u^{j}")
        return "EquivariantClass(" + " + ".join(parts) + ")"


def _normalize_chern(value) -> tuple[tuple[str, Fraction], ...]:
    if value is None:
        return ()
    if isinstance(value, tuple) and all(
        isinstance(p, tuple) and len(p) == 2 for p in value
    ):
        pairs = value
    elif isinstance(value, Mapping):
        pairs = tuple(value.items())
    else:
        raise ValidationError(f"chern data must be a mapping, got {value!r}")
    out = []
    for label, coeff in pairs:
        c = _frac(coeff)
        if c:
            out.append((label, c))
    return tuple(sorted(out))


@dataclass(frozen=True)
class LineSummand:
    """A weight-w complex line with an ordinary degree-two first Chern class."""

    weight: int
    chern: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.weight, int) or isinstance(self.weight, bool):
            raise ValidationError(f"weight must be an integer, got {self.weight!r}")
        object.__setattr__(self, "chern", _normalize_chern(self.chern))

    def chern_element(self, ring: FiniteBasisRing) -> Elem:
        elem = ring.element(dict(self.chern))
        for label in elem:
            if ring.degrees[label] != 2:
                raise ValidationError(
                    f"chern class must be a degree-2 element, {label!r} has "
                    f"degree {ring.degrees[label]}"
                )
        return elem


def ring_mul(a: EquivariantClass, b: EquivariantClass) -> EquivariantClass:
    """Exact product of two classes over the same ring."""
    if not isinstance(a, EquivariantClass) or not isinstance(b, EquivariantClass):
        raise ValidationError("ring_mul expects two EquivariantClass values")
    if a.ring is not b.ring:
        raise RingMismatchError("classes belong to different coefficient rings")
    return a * b


def euler_class(
    ring: FiniteBasisRing,
    summands: Sequence[LineSummand],
    extra_real_euler=None,
) -> EquivariantClass:
    """Product of the factors w*u + c, times an optional weight-zero factor.

    The optional factor is the ordinary Euler class of a weight-zero real
    subbundle (for instance the tangent bundle of the component itself) and
    enters the product as a plain ring element.
    """
    result = EquivariantClass.one(ring)
    for summand in summands:
        chern = summand.chern_element(ring)
        terms: dict[int, Elem] = {}
        if summand.weight != 0:
            terms[1] = {"1": Fraction(summand.weight)}
        if chern:
            terms[0] = chern
        result = result * EquivariantClass(ring, terms)
    if extra_real_euler is not None:
        result = result * EquivariantClass.from_element(ring, extra_real_euler)
    return result


def invert_euler(e: EquivariantClass) -> EquivariantClass:
    """Exact Laurent-polynomial inverse of an admissible Euler class.

    Writes e = s*u^N*(1 + nu) with s a nonzero rational and nu nilpotent
    (every term carries a positive-degree ring element), then expands the
    finite geometric series.  A weight-zero factor leaves no single leading
    scalar monomial and is rejected.
    """
    ring = e.ring
    scalars = e.scalar_support()
    if len(scalars) != 1:
        raise NonInvertibleError(
            "class has no Laurent inverse: expected exactly one scalar u-monomial "
            f"(found {len(scalars)}); a weight-0 direction in a normal bundle "
            "produces exactly this failure"
        )
    lead_pow, lead_coeff = scalars[0]
    lead_inv = EquivariantClass.scalar(ring, Fraction(1) / lead_coeff, upow=-lead_pow)
    one = EquivariantClass.one(ring)
    nu = lead_inv * e - one
    minus_nu = -nu
    acc = one
    power = one
    for _ in range(ring.top_degree // 2 + 1):
        power = power * minus_nu
        if power.is_zero:
            break
        acc = acc + power
    return lead_inv * acc


class RationalLaurent:
    """A Laurent polynomial in u with plain rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        normalized: dict[int, Fraction] = {}
        for power, coeff in items:
            if not isinstance(power, int):
                raise ValidationError(f"u-power must be an integer, got {power!r}")
            c = _frac(coeff)
            if c:
                normalized[power] = c
        self._coeffs = normalized

    @classmethod
    def zero(cls) -> "RationalLaurent":
        return cls({})

    @classmethod
    def constant(cls, value) -> "RationalLaurent":
        return cls({0: value})

    def coefficient(self, power: int) -> Fraction:
        return self._coeffs.get(power, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def nonzero_powers(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def residue_powers(self) -> tuple[int, ...]:
        return tuple(p for p in sorted(self._coeffs) if p != 0)

    @property
    def is_constant(self) -> bool:
        return not self.residue_powers()

    def __add__(self, other: "RationalLaurent") -> "RationalLaurent":
        if not isinstance(other, RationalLaurent):
            return NotImplemented
        coeffs = dict(self._coeffs)
        for power, coeff in other._coeffs.items():
            c = coeffs.get(power, Fraction(0)) + coeff
            if c:
                coeffs[power] = c
            else:
                coeffs.pop(power, None)
        return RationalLaurent(coeffs)

    def __sub__(self, other: "RationalLaurent") -> "RationalLaurent":
        if not isinstance(other, RationalLaurent):
            return NotImplemented
        return self + RationalLaurent({p: -c for p, c in other._coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalLaurent):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalLaurent.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for power in sorted(self._coeffs, reverse=True):
            coeff = self._coeffs[power]
            if power == 0:
                parts.append(str(coeff))
            else:
                u = "u" if power == 1 else f"u^{power}"
                if coeff == 1:
                    parts.append(u)
                elif coeff == -1:
                    parts.append(f"-{u}")
                else:
                    parts.append(f"{coeff}*{u}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RationalLaurent({self})"

    def to_json(self) -> dict:
        return {
            "value": str(self.coefficient(0)),
            "residue_upowers": list(self.residue_powers()),
        }


def integrate_over_component(c: EquivariantClass) -> RationalLaurent:
    """Push a class forward to a point: apply the ring integral per u-power."""
    return RationalLaurent(
        {upow: c.ring.integral(elem) for upow, elem in c.terms().items()}
    )


# -- built-in rings ----------------------------------------------------------


def point_ring() -> FiniteBasisRing:
    """H*(pt): the rationals in degree zero."""
    return FiniteBasisRing([("1", 0)], {}, "1", name="point")


def sphere_ring(var: str = "x") -> FiniteBasisRing:
    """H*(S^2): basis 1, x with x^2 = 0 and integral x = 1."""
    name = "s2" if var == "x" else f"s2({var})"
    return FiniteBasisRing([("1", 0), (var, 2)], {(var, var): {}}, var, name=name)


def projective_space_ring(n: int, var: str = "x") -> FiniteBasisRing:
    """H*(CP^n): truncated polynomial ring on one degree-two generator."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"projective space dimension must be >= 1, got {n!r}")

    def label(k: int) -> str:
        return "1" if k == 0 else (var if k == 1 else f"{var}^{k}")

    basis = [(label(k), 2 * k) for k in range(n + 1)]
    products = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            products[(label(i), label(j))] = {label(i + j): 1} if i + j <= n else {}
    return FiniteBasisRing(basis, products, label(n), name=f"cp{n}")


def _pair_label(la: str, lb: str) -> str:
    if la == "1":
        return lb
    if lb == "1":
        return la
    return f"{la}*{lb}"


def tensor_ring(
    left: FiniteBasisRing, right: FiniteBasisRing, name: str | None = None
) -> FiniteBasisRing:
    """Tensor product ring; the integral is the product of the top coefficients."""
    overlap = (set(left.labels) & set(right.labels)) - {"1"}
    if overlap:
        raise ValidationError(
            f"tensor factors must use disjoint labels, both contain {sorted(overlap)}"
        )
    basis = []
    for la in left.labels:
        for lb in right.labels:
            basis.append((_pair_label(la, lb), left.degrees[la] + right.degrees[lb]))
    products: dict[tuple[str, str], dict[str, Fraction]] = {}
    for la1 in left.labels:
        for lb1 in right.labels:
            for la2 in left.labels:
                for lb2 in right.labels:
                    key = (_pair_label(la1, lb1), _pair_label(la2, lb2))
                    combo: dict[str, Fraction] = {}
                    for la, ca in left._table[(la1, la2)].items():
                        for lb, cb in right._table[(lb1, lb2)].items():
                            combo[_pair_label(la, lb)] = ca * cb
                    products[key] = combo
    top = _pair_label(left.top_label, right.top_label)
    return FiniteBasisRing(basis, products, top, name=name)


BUILTIN_RING_NAMES = ("point", "s2", "cp1", "cp2", "cp3", "s2xs2")


def builtin_ring(name: str) -> FiniteBasisRing:
    """Construct one of the named fixture rings."""
    key = name.lower()
    if key == "point":
        return point_ring()
    if key == "s2":
        return sphere_ring()
    if key.startswith("cp") and key[2:].isdigit():
        return projective_space_ring(int(key[2:]))
    if key == "s2xs2":
        return tensor_ring(sphere_ring("x"), sphere_ring("y"), name="s2xs2")
    raise ValidationError(
        f"unknown builtin ring {name!r}; known: {', '.join(BUILTIN_RING_NAMES)}"
    )
