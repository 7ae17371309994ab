"""Metric planes on convex carriers, all sharing affine chords as geodesics.

Four kinds of plane are provided:

* ``euclidean``        d(x,y) = |y-x|_2 on the whole plane
* ``minkowski``        d(x,y) = F(y-x), the gauge of a symmetric convex body
* ``hilbert_weak``     d(x,y) = h(x,y), the logarithmic chord ratio on a
                       convex domain:  with the chord through x and y
                       hitting the boundary at a (behind x) and b (beyond
                       y),   h(x,y) = log( |x-b|/|y-b| * |y-a|/|x-a| ).
                       On unbounded domains h degenerates: it vanishes
                       exactly on pairs whose full line stays inside.
* ``projective_sum``   d(x,y) = |y-x|_2 + h(x,y) on a convex domain.

Every geodesic is an affine chord of the carrier, reparametrized by
arclength.  ``GeodesicLine.point_at`` is an isometry from a real
interval onto the chord: d(point_at(s), point_at(t)) = |s-t|.

Numeric mode is 64-bit floating point; polygon chord endpoints are
solved exactly in rationals first and rounded once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .bodies import ConvexBody, GaugeBody, body_from_json, chord_boundary_intersection
from .errors import (
    CoincidentLines,
    CoincidentPoints,
    OutsideCarrier,
    PointsOutsideDomain,
    UnboundedChord,
)
from .planar import PlanarPoint

__all__ = [
    "EuclideanPlane",
    "MinkowskiPlane",
    "HilbertPlane",
    "ProjectiveSumPlane",
    "StraightPlane",
    "GeodesicLine",
    "plane_from_json",
    "hilbert_distance",
    "metric_distance",
    "geodesic_through",
    "line_line_meet",
    "chord_boundary_intersection",
]

_EXP_CLAMP = 700.0  # beyond this, exp() overflows; use asymptotic endpoint


def _chord_ratio_log(t_lo, t_hi, t0, t1) -> float:
    """log of the chord cross-ratio between parameters t0 < t1.

    The chord meets the boundary at t_lo < t0 and t_hi > t1; infinite
    endpoints contribute a factor 1.
    """
    num = 1
    den = 1
    if not math.isinf(float(t_hi)):
        num *= t_hi - t0
        den *= t_hi - t1
    if not math.isinf(float(t_lo)):
        num *= t1 - t_lo
        den *= t0 - t_lo
    if isinstance(num, Fraction) and isinstance(den, Fraction):
        return math.log(float(num / den))
    return math.log(float(num) / float(den))


def _hilbert_along(t_lo, t_hi, t0, t1) -> float:
    lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
    value = _chord_ratio_log(t_lo, t_hi, lo, hi)
    return value


@dataclass(frozen=True)
class EuclideanPlane:
    kind = "euclidean"

    def contains(self, p: PlanarPoint) -> bool:
        return True

    def distance(self, x: PlanarPoint, y: PlanarPoint) -> float:
        return (y - x).norm()

    def to_json(self):
        return {"kind": "euclidean"}


@dataclass(frozen=True)
class MinkowskiPlane:
    gauge: GaugeBody
    kind = "minkowski"

    def contains(self, p: PlanarPoint) -> bool:
        return True

    def distance(self, x: PlanarPoint, y: PlanarPoint) -> float:
        return self.gauge.gauge(y - x)

    def to_json(self):
        return {"kind": "minkowski", "gauge": self.gauge.to_json()}


@dataclass(frozen=True)
class HilbertPlane:
    domain: ConvexBody
    kind = "hilbert_weak"

    def contains(self, p: PlanarPoint) -> bool:
        return self.domain.contains(p, strict=True)

    def distance(self, x: PlanarPoint, y: PlanarPoint) -> float:
        return hilbert_distance(self.domain, x, y)

    def to_json(self):
        return {"kind": "hilbert_weak", "domain": self.domain.to_json()}


@dataclass(frozen=True)
class ProjectiveSumPlane:
    domain: ConvexBody
    kind = "projective_sum"

    def contains(self, p: PlanarPoint) -> bool:
        return self.domain.contains(p, strict=True)

    def distance(self, x: PlanarPoint, y: PlanarPoint) -> float:
        return (y - x).norm() + hilbert_distance(self.domain, x, y)

    def to_json(self):
        return {"kind": "projective_sum", "domain": self.domain.to_json()}


StraightPlane = Union[EuclideanPlane, MinkowskiPlane, HilbertPlane, ProjectiveSumPlane]


def plane_from_json(data) -> StraightPlane:
    if not isinstance(data, dict) or "kind" not in data:
        raise TypeError("plane JSON must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "euclidean":
        return EuclideanPlane()
    if kind == "minkowski":
        return MinkowskiPlane(GaugeBody(body_from_json(data["gauge"])))
    if kind == "hilbert_weak":
        return HilbertPlane(body_from_json(data["domain"]))
    if kind == "projective_sum":
        return ProjectiveSumPlane(body_from_json(data["domain"]))
    raise TypeError(f"unknown plane kind: {kind!r}")


def hilbert_distance(domain: ConvexBody, x: PlanarPoint, y: PlanarPoint) -> float:
    """Weak Hilbert distance between interior points of a convex domain."""
    if not (domain.contains(x, strict=True) and domain.contains(y, strict=True)):
        raise PointsOutsideDomain("hilbert distance needs interior points")
    if float(x.x) == float(y.x) and float(x.y) == float(y.y):
        return 0.0
    t_lo, t_hi = domain.chord_params(x, y - x)
    return _hilbert_along(t_lo, t_hi, 0, 1)


def metric_distance(plane: StraightPlane, x: PlanarPoint, y: PlanarPoint) -> float:
    if not (plane.contains(x) and plane.contains(y)):
        raise OutsideCarrier("distance arguments must lie in the carrier")
    return plane.distance(x, y)


@dataclass(frozen=True)
class GeodesicLine:
    """Affine chord with an arclength parametrization under a plane's metric.

    ``base`` sits at parameter 0; the point at affine parameter t is
    base + t*direction.  ``point_at`` maps signed arclength to points,
    ``param_of`` inverts it for points on the chord.
    """

    plane: StraightPlane
    base: PlanarPoint
    direction: PlanarPoint
    t_lo: float
    t_hi: float

    def _s_of_t(self, t: float) -> float:
        plane = self.plane
        if isinstance(plane, EuclideanPlane):
            return t * self.direction.norm()
        if isinstance(plane, MinkowskiPlane):
            return t * plane.gauge.gauge(self.direction)
        if isinstance(plane, HilbertPlane):
            return self._hilbert_s(t)
        s_h = self._hilbert_s(t)
        return t * self.direction.norm() + s_h

    def _hilbert_s(self, t: float) -> float:
        if t == 0.0:
            return 0.0
        sign = 1.0 if t > 0 else -1.0
        value = _hilbert_along(self.t_lo, self.t_hi, min(0.0, t), max(0.0, t))
        return sign * value

    def _hilbert_t(self, s: float) -> float:
        t_lo, t_hi = self.t_lo, self.t_hi
        if s == 0.0:
            return 0.0
        if math.isinf(t_hi) and math.isinf(t_lo):
            raise UnboundedChord("degenerate chord: weak metric vanishes along it")
        if math.isinf(t_hi):
            # s = log((t - t_lo)/(-t_lo))
            return t_lo * (1.0 - math.exp(min(s, _EXP_CLAMP)))
        if math.isinf(t_lo):
            # s = log(t_hi/(t_hi - t))
            return t_hi * (1.0 - math.exp(-min(s, _EXP_CLAMP)))
        if s >= _EXP_CLAMP:
            return t_hi
        if s <= -_EXP_CLAMP:
            return t_lo
        e = math.exp(s)
        return t_lo * t_hi * (1.0 - e) / (t_hi - e * t_lo)

    def _t_of_s(self, s: float) -> float:
        plane = self.plane
        if isinstance(plane, EuclideanPlane):
            return s / self.direction.norm()
        if isinstance(plane, MinkowskiPlane):
            return s / plane.gauge.gauge(self.direction)
        if isinstance(plane, HilbertPlane):
            return self._hilbert_t(s)
        # projective_sum: strictly monotone s(t); bisect on the open chord
        return self._bisect_t(s)

    def _bisect_t(self, s: float) -> float:
        lo, hi = self.t_lo, self.t_hi
        # expand finite brackets for unbounded sides
        if math.isinf(lo):
            lo = -1.0
            while self._s_of_t(lo) > s:
                lo *= 2.0
        if math.isinf(hi):
            hi = 1.0
            while self._s_of_t(hi) < s:
                hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if self._s_of_t(mid) < s:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def point_at(self, s: float) -> PlanarPoint:
        t = self._t_of_s(float(s))
        return self.base + self.direction * t

    def param_of(self, p: PlanarPoint) -> float:
        """Signed arclength of a point assumed to lie on the chord."""
        u = self.direction
        t = float((p - self.base).dot(u)) / float(u.dot(u))
        return self._s_of_t(t)

    def affine_param_bounds(self) -> Tuple[float, float]:
        return self.t_lo, self.t_hi

    def chord_endpoints(self) -> Optional[Tuple[PlanarPoint, PlanarPoint]]:
        """Boundary endpoints of the underlying chord, None if unbounded."""
        if math.isinf(self.t_lo) or math.isinf(self.t_hi):
            return None
        return (
            self.base + self.direction * self.t_lo,
            self.base + self.direction * self.t_hi,
        )


def geodesic_through(plane: StraightPlane, x: PlanarPoint, y: PlanarPoint) -> GeodesicLine:
    """The unique geodesic line through x and y, arclength-parametrized.

    point_at(0) = x and point_at(d(x, y)) = y.
    """
    xf, yf = x.as_float(), y.as_float()
    if xf == yf:
        raise CoincidentPoints("geodesic needs two distinct points")
    if not (plane.contains(x) and plane.contains(y)):
        raise OutsideCarrier("geodesic endpoints must lie in the carrier")
    u = yf - xf
    if isinstance(plane, (HilbertPlane, ProjectiveSumPlane)):
        t_lo, t_hi = plane.domain.chord_params(xf, u)
        t_lo, t_hi = float(t_lo), float(t_hi)
        if isinstance(plane, HilbertPlane) and math.isinf(t_lo) and math.isinf(t_hi):
            raise UnboundedChord("weak metric vanishes along a fully contained line")
    else:
        t_lo, t_hi = -math.inf, math.inf
    return GeodesicLine(plane, xf, u, t_lo, t_hi)


def _same_chord(g1: GeodesicLine, g2: GeodesicLine, tol: float = 1e-12) -> bool:
    u1, u2 = g1.direction, g2.direction
    scale = u1.norm() * u2.norm()
    if abs(float(u1.cross(u2))) > tol * scale:
        return False
    w = g2.base - g1.base
    return abs(float(u1.cross(w))) <= tol * u1.norm() * max(w.norm(), 1.0)


def line_line_meet(
    plane: StraightPlane, g1: GeodesicLine, g2: GeodesicLine
) -> Optional[PlanarPoint]:
    """Intersection of the underlying chords, or None when it misses the carrier."""
    if _same_chord(g1, g2):
        raise CoincidentLines("geodesics share their underlying chord")
    u1, u2 = g1.direction, g2.direction
    den = float(u1.cross(u2))
    if den == 0.0:
        return None
    w = g2.base - g1.base
    t1 = float(w.cross(u2)) / den
    p = g1.base + u1 * t1
    if not plane.contains(p):
        return None
    return p
