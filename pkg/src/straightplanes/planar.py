"""Planar points and small vector helpers shared by all kernels.

Coordinates are either exact `fractions.Fraction` values or 64-bit floats.
A single computation should stay in one mode; exact mode gives exact
predicates, float mode is governed by the documented tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]


def rat_str(value) -> str:
    """Format a rational as an explicit ``"numerator/denominator"`` string."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def scalar_to_json(value: Scalar):
    if isinstance(value, float):
        return value
    return rat_str(value)


def scalar_from_json(data) -> Scalar:
    if isinstance(data, str):
        return Fraction(data)
    if isinstance(data, bool):
        raise TypeError("coordinate must be a number or a rational string")
    if isinstance(data, int):
        return Fraction(data)
    return float(data)


@dataclass(frozen=True)
class PlanarPoint:
    """A point of the affine plane, in exact or float mode."""

    x: Scalar
    y: Scalar

    @property
    def is_exact(self) -> bool:
        return not (isinstance(self.x, float) or isinstance(self.y, float))

    def as_exact(self) -> "PlanarPoint":
        return PlanarPoint(Fraction(self.x), Fraction(self.y))

    def as_float(self) -> "PlanarPoint":
        return PlanarPoint(float(self.x), float(self.y))

    def __add__(self, other: "PlanarPoint") -> "PlanarPoint":
        return PlanarPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlanarPoint") -> "PlanarPoint":
        return PlanarPoint(self.x - other.x, self.y - other.y)

    def __mul__(self, s: Scalar) -> "PlanarPoint":
        return PlanarPoint(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "PlanarPoint") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "PlanarPoint") -> Scalar:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(float(self.x), float(self.y))

    def to_json(self):
        return [scalar_to_json(self.x), scalar_to_json(self.y)]

    @classmethod
    def from_json(cls, data) -> "PlanarPoint":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise TypeError("planar point JSON must be a pair")
        return cls(scalar_from_json(data[0]), scalar_from_json(data[1]))


def orient(a: PlanarPoint, b: PlanarPoint, c: PlanarPoint) -> Scalar:
    """Twice the signed area of triangle abc; exact when inputs are exact."""
    return (b - a).cross(c - a)


def euclid_dist(a: PlanarPoint, b: PlanarPoint) -> float:
    return (b - a).norm()


def between(a: PlanarPoint, b: PlanarPoint, r: PlanarPoint, strict: bool = False) -> bool:
    """Is r on segment [a, b]?  Exact when inputs are exact.

    Requires collinearity; the position along the segment is tested with
    dot products so no division is performed.
    """
    if orient(a, b, r) != 0:
        return False
    d = b - a
    t_num = (r - a).dot(d)
    t_den = d.dot(d)
    if strict:
        return 0 < t_num < t_den
    return 0 <= t_num <= t_den
