"""Planar measure models exposed through their mixed moments M(r, s).

The moment engine consumes nothing about a base measure except the numbers
M(r, s) = integral of z^r * conj(z)^s.  The models here give those numbers in
closed form, exactly over rationals wherever the parameters allow:

* ``Atomic``      -- finitely many weighted point masses
* ``UniformDisk`` -- uniform on the disk of a given radius
* ``UniformAnnulus`` -- uniform on the annulus with radii sqrt(c-1), sqrt(c)
* ``UniformEllipse`` -- uniform on the solid ellipse attached to an elliptic
  deformation with half-parameters (a, b); realized as the push-forward of the
  uniform unit disk under z -> alpha*z + beta*conj(z) with real alpha, beta
* ``MomentTable`` -- explicit table up to a declared degree
* ``ScaledMeasure`` -- push-forward under multiplication by a fixed scalar

Sampling lives elsewhere; these models are pure moment oracles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CapExceededError, WordParseError
from .exact import (
    CQ_ONE,
    CQ_ZERO,
    ComplexRational,
    MomentValue,
    exact_or_float,
    format_rational,
    parse_rational,
)


@dataclass(frozen=True)
class Atomic:
    """Finitely many atoms (location, weight); weights must sum to 1."""

    atoms: tuple[tuple[ComplexRational, Fraction], ...]

    def __post_init__(self):
        norm = []
        for loc, w in self.atoms:
            if not isinstance(loc, ComplexRational):
                raise TypeError("atom locations must be ComplexRational")
            norm.append((loc, parse_rational(w)))
        object.__setattr__(self, "atoms", tuple(norm))
        if sum((w for _, w in self.atoms), Fraction(0)) != 1:
            raise ValueError("atomic weights must sum to exactly 1")
        if any(w <= 0 for _, w in self.atoms):
            raise ValueError("atomic weights must be positive")

    @classmethod
    def delta(cls, location: ComplexRational | Fraction | int) -> "Atomic":
        loc = location if isinstance(location, ComplexRational) else ComplexRational(Fraction(location))
        return cls(((loc, Fraction(1)),))

    def moment(self, r: int, s: int) -> ComplexRational:
        total = CQ_ZERO
        for loc, w in self.atoms:
            total = total + w * (loc**r * loc.conjugate() ** s)
        return total


@dataclass(frozen=True)
class UniformDisk:
    """Uniform probability measure on the disk of radius R about 0.

    A rational radius gives exact moments; a float radius gives floats.
    """

    radius: Fraction | float

    def __post_init__(self):
        object.__setattr__(self, "radius", exact_or_float(self.radius))
        if self.radius <= 0:
            raise ValueError("disk radius must be positive")

    def moment(self, r: int, s: int):
        if r != s:
            return CQ_ZERO
        value = self.radius ** (2 * r) / (r + 1)
        return ComplexRational(value) if isinstance(value, Fraction) else complex(value)


@dataclass(frozen=True)
class UniformAnnulus:
    """Uniform measure on the annulus with radii sqrt(c-1) and sqrt(c), c >= 1.

    The squared modulus is then uniform on [c-1, c], which is what makes these
    the base measures of the free Poisson family.
    """

    c: Fraction | float

    def __post_init__(self):
        object.__setattr__(self, "c", exact_or_float(self.c))
        if self.c < 1:
            raise ValueError("annulus parameter must satisfy c >= 1")

    def moment(self, r: int, s: int):
        if r != s:
            return CQ_ZERO
        c = self.c
        value = (c ** (r + 1) - (c - 1) ** (r + 1)) / (r + 1)
        return ComplexRational(value) if isinstance(value, Fraction) else complex(value)


@dataclass(frozen=True)
class UniformEllipse:
    """Uniform measure on the solid ellipse with semi-axes 2a^2/sqrt(a^2+b^2)
    and 2b^2/sqrt(a^2+b^2) along the real and imaginary axes.

    Moments come from writing the measure as the image of the uniform unit
    disk under z -> alpha*z + beta*conj(z); only alpha^2, beta^2 and
    alpha*beta enter any moment, and those are rational in a, b.
    """

    a: Fraction | float
    b: Fraction | float

    def __post_init__(self):
        object.__setattr__(self, "a", exact_or_float(self.a))
        object.__setattr__(self, "b", exact_or_float(self.b))
        if self.a <= 0 or self.b <= 0:
            raise ValueError("ellipse parameters must be positive")

    def _alpha_beta_products(self):
        a2, b2 = self.a * self.a, self.b * self.b
        denom = a2 + b2
        asq_major = 4 * a2 * a2 / denom  # (semi-axis along the real axis)^2
        asq_minor = 4 * b2 * b2 / denom
        cross = 4 * a2 * b2 / denom  # product of the two semi-axes
        alpha_sq = (asq_major + asq_minor + 2 * cross) / 4
        beta_sq = (asq_major + asq_minor - 2 * cross) / 4
        alpha_beta = (asq_major - asq_minor) / 4
        return alpha_sq, beta_sq, alpha_beta

    def moment(self, r: int, s: int):
        if (r - s) % 2 == 1:
            return CQ_ZERO
        alpha_sq, beta_sq, alpha_beta = self._alpha_beta_products()
        exact = isinstance(alpha_sq, Fraction)
        total = Fraction(0) if exact else 0.0
        for i in range(r + 1):
            j = i - (r - s) // 2
            if not 0 <= j <= s:
                continue
            p = i + s - j  # unit-disk moment degree; equals r - i + j
            u = i + j
            v = (r + s) - u
            if u % 2 == 0:
                coeff = alpha_sq ** (u // 2) * beta_sq ** (v // 2)
            else:
                coeff = alpha_beta * alpha_sq ** ((u - 1) // 2) * beta_sq ** ((v - 1) // 2)
            total += comb(r, i) * comb(s, j) * coeff / (p + 1)
        return ComplexRational(total) if exact else complex(total)


@dataclass(frozen=True)
class MomentTable:
    """Explicit mixed moments up to a declared maximal total degree.

    Entries are stored for (r, s); a missing entry falls back to the conjugate
    of (s, r), so only one triangle need be given.
    """

    max_degree: int
    entries: tuple[tuple[tuple[int, int], ComplexRational], ...]

    def __post_init__(self):
        table = dict(self.entries)
        if table.get((0, 0), CQ_ONE) != CQ_ONE:
            raise ValueError("M(0, 0) must be 1")
        object.__setattr__(self, "entries", tuple(sorted(table.items())))

    def moment(self, r: int, s: int) -> ComplexRational:
        if r + s > self.max_degree:
            raise CapExceededError(
                f"moment degree {r + s} exceeds the table's max degree {self.max_degree}"
            )
        if (r, s) == (0, 0):
            return CQ_ONE
        table = dict(self.entries)
        if (r, s) in table:
            return table[(r, s)]
        if (s, r) in table:
            return table[(s, r)].conjugate()
        return CQ_ZERO


@dataclass(frozen=True)
class ScaledMeasure:
    """Push-forward of a base model under multiplication by ``lam``."""

    base: "MeasureModel"
    lam: ComplexRational

    def __post_init__(self):
        if self.lam == CQ_ZERO:
            raise ValueError("scaling by zero is rejected")

    def moment(self, r: int, s: int) -> ComplexRational:
        return self.lam**r * self.lam.conjugate() ** s * self.base.moment(r, s)


MeasureModel = Atomic | UniformDisk | UniformAnnulus | UniformEllipse | MomentTable | ScaledMeasure

DELTA_ZERO = Atomic.delta(0)


def mixed_moment(mu: MeasureModel, r: int, s: int) -> MomentValue:
    """M(r, s) of the model, tagged with the backend that produced it."""
    if r < 0 or s < 0:
        raise ValueError("moment orders must be nonnegative")
    return MomentValue.wrap(mu.moment(r, s))


def ellipse_mixed_moment(a, b, r: int, s: int) -> MomentValue:
    return mixed_moment(UniformEllipse(a, b), r, s)


def scale(mu: MeasureModel, lam: ComplexRational) -> MeasureModel:
    """The measure of ``lam * z`` when z is distributed by ``mu``."""
    if not isinstance(lam, ComplexRational):
        lam = ComplexRational(parse_rational(lam))
    if lam == CQ_ZERO:
        raise ValueError("scaling by zero is rejected")
    if isinstance(mu, Atomic):
        return Atomic(tuple((lam * loc, w) for loc, w in mu.atoms))
    if isinstance(mu, ScaledMeasure):
        return ScaledMeasure(mu.base, lam * mu.lam)
    return ScaledMeasure(mu, lam)


def conjugate(mu: MeasureModel) -> MeasureModel:
    """The measure of conj(z); mixed moments get their orders swapped."""
    if isinstance(mu, Atomic):
        return Atomic(tuple((loc.conjugate(), w) for loc, w in mu.atoms))
    if isinstance(mu, (UniformDisk, UniformAnnulus, UniformEllipse)):
        return mu  # invariant under conjugation
    if isinstance(mu, MomentTable):
        return MomentTable(
            mu.max_degree, tuple(((s, r), v.conjugate()) for (r, s), v in mu.entries)
        )
    return ScaledMeasure(conjugate(mu.base), mu.lam.conjugate())


def measure_fingerprint(mu: MeasureModel) -> tuple:
    """A hashable identity used as part of memo keys."""
    if isinstance(mu, Atomic):
        return ("atomic", mu.atoms)
    if isinstance(mu, UniformDisk):
        return ("disk", mu.radius)
    if isinstance(mu, UniformAnnulus):
        return ("annulus", mu.c)
    if isinstance(mu, UniformEllipse):
        return ("ellipse", mu.a, mu.b)
    if isinstance(mu, MomentTable):
        return ("table", mu.max_degree, mu.entries)
    return ("scaled", mu.lam, measure_fingerprint(mu.base))


# -- JSON specification ------------------------------------------------------


def _cq_from_json(obj) -> ComplexRational:
    if isinstance(obj, dict):
        return ComplexRational(
            parse_rational(obj.get("re", 0)), parse_rational(obj.get("im", 0))
        )
    return ComplexRational(parse_rational(obj))


def measure_from_json(spec) -> MeasureModel:
    """Build a model from its JSON object (or JSON text) specification.

    Accepted forms:
      {"type": "atomic", "atoms": [{"re": ..., "im": ..., "w": "p/q"}, ...]}
      {"type": "disk", "radius": "p/q"}
      {"type": "annulus", "c": "p/q"}
      {"type": "ellipse", "a": ..., "b": ...}
      {"type": "table", "max_degree": d, "entries": [{"r": r, "s": s, "re": ..., "im": ...}]}
    """
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as e:
            raise WordParseError(f"bad measure JSON: {e}") from None
    if not isinstance(spec, dict) or "type" not in spec:
        raise WordParseError("measure spec must be an object with a 'type' field")
    kind = spec["type"]
    try:
        if kind == "atomic":
            atoms = tuple(
                (
                    ComplexRational(parse_rational(a.get("re", 0)), parse_rational(a.get("im", 0))),
                    parse_rational(a["w"]),
                )
                for a in spec["atoms"]
            )
            return Atomic(atoms)
        if kind == "disk":
            return UniformDisk(parse_rational(spec["radius"]))
        if kind == "annulus":
            return UniformAnnulus(parse_rational(spec["c"]))
        if kind == "ellipse":
            return UniformEllipse(parse_rational(spec["a"]), parse_rational(spec["b"]))
        if kind == "table":
            entries = tuple(
                ((int(e["r"]), int(e["s"])), _cq_from_json(e)) for e in spec["entries"]
            )
            return MomentTable(int(spec["max_degree"]), entries)
    except (KeyError, TypeError, ValueError) as e:
        raise WordParseError(f"bad measure spec for type {kind!r}: {e}") from None
    raise WordParseError(f"unknown measure type {kind!r}")


def measure_to_json(mu: MeasureModel) -> dict:
    if isinstance(mu, Atomic):
        return {
            "type": "atomic",
            "atoms": [
                {"re": format_rational(loc.re), "im": format_rational(loc.im), "w": format_rational(w)}
                for loc, w in mu.atoms
            ],
        }
    if isinstance(mu, UniformDisk):
        return {"type": "disk", "radius": format_rational(mu.radius)}
    if isinstance(mu, UniformAnnulus):
        return {"type": "annulus", "c": format_rational(mu.c)}
    if isinstance(mu, UniformEllipse):
        return {"type": "ellipse", "a": format_rational(mu.a), "b": format_rational(mu.b)}
    if isinstance(mu, MomentTable):
        return {
            "type": "table",
            "max_degree": mu.max_degree,
            "entries": [
                {"r": r, "s": s, "re": format_rational(v.re), "im": format_rational(v.im)}
                for (r, s), v in mu.entries
            ],
        }
    raise WordParseError("scaled measures have no JSON form; scale the base instead")
