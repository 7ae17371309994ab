"""Convex bodies: carriers for metric planes and unit balls for gauges.

Polygons keep exact rational vertices; chord/boundary intersections on a
polygon are solved in integer homogeneous arithmetic and rounded once at
the very end.  Disks and ellipses are solved numerically (one quadratic).
Axis-aligned strips and half-planes exist only to exercise the degenerate
behaviour of the weak Hilbert metric on unbounded domains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import CoincidentPoints, DegenerateInput, PointsOutsideDomain, UnboundedChord
from .planar import PlanarPoint, rat_str

INF = math.inf


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon, vertices in counterclockwise order."""

    vertices: Tuple[PlanarPoint, ...]

    def __post_init__(self):
        verts = tuple(v.as_exact() for v in self.vertices)
        if len(verts) < 3:
            raise DegenerateInput("polygon needs at least 3 vertices")
        n = len(verts)
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if (b - a).cross(c - b) <= 0:
                raise DegenerateInput("polygon must be strictly convex and counterclockwise")
        object.__setattr__(self, "vertices", verts)
        # common-denominator integer form; keeps chord solves in pure ints
        den = 1
        for v in verts:
            den = _lcm(den, v.x.denominator)
            den = _lcm(den, v.y.denominator)
        ints = tuple((int(v.x * den), int(v.y * den)) for v in verts)
        object.__setattr__(self, "_scale", den)
        object.__setattr__(self, "_int_vertices", ints)

    @property
    def kind(self) -> str:
        return "polygon"

    @property
    def is_bounded(self) -> bool:
        return True

    def contains(self, p: PlanarPoint, strict: bool = False) -> bool:
        q = p.as_exact()
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            side = (b - a).cross(q - a)
            if side < 0 or (strict and side == 0):
                return False
        return True

    def chord_params(self, x: PlanarPoint, d: PlanarPoint):
        """Exact parameters (t_lo, t_hi) where x + t*d crosses the boundary.

        x must be interior and d nonzero; returns Fractions with
        t_lo < 0 < t_hi relative to interior base points.
        """
        xe, de = x.as_exact(), d.as_exact()
        scale = _lcm(
            _lcm(xe.x.denominator, xe.y.denominator),
            _lcm(de.x.denominator, de.y.denominator),
        )
        scale = _lcm(scale, self._scale)
        xi = (int(xe.x * scale), int(xe.y * scale))
        di = (int(de.x * scale), int(de.y * scale))
        verts = [(int(v.x * scale), int(v.y * scale)) for v in self.vertices]
        n = len(verts)
        hits = []
        for i in range(n):
            vi, vj = verts[i], verts[(i + 1) % n]
            ex, ey = vj[0] - vi[0], vj[1] - vi[1]
            den = di[0] * ey - di[1] * ex
            if den == 0:
                continue  # chord parallel to this edge
            wx, wy = vi[0] - xi[0], vi[1] - xi[1]
            t_num = wx * ey - wy * ex
            s_num = wx * di[1] - wy * di[0]
            # edge parameter s = (w x d)/(d x e) must be in [0, 1]
            s = Fraction(s_num, den)
            if 0 <= s <= 1:
                t = Fraction(t_num, den)
                if t not in hits:
                    hits.append(t)
        if len(hits) != 2:
            raise PointsOutsideDomain("chord base point must be interior to the polygon")
        lo, hi = min(hits), max(hits)
        return lo, hi

    def to_json(self):
        return {"kind": "polygon", "vertices": [[rat_str(v.x), rat_str(v.y)] for v in self.vertices]}


@dataclass(frozen=True)
class Disk:
    center: PlanarPoint
    radius: float

    def __post_init__(self):
        if float(self.radius) <= 0:
            raise DegenerateInput("disk radius must be positive")

    @property
    def kind(self) -> str:
        return "disk"

    @property
    def is_bounded(self) -> bool:
        return True

    def contains(self, p: PlanarPoint, strict: bool = False) -> bool:
        dx = float(p.x) - float(self.center.x)
        dy = float(p.y) - float(self.center.y)
        rr = dx * dx + dy * dy
        r2 = float(self.radius) ** 2
        return rr < r2 if strict else rr <= r2

    def chord_params(self, x: PlanarPoint, d: PlanarPoint):
        cx, cy = float(self.center.x), float(self.center.y)
        px, py = float(x.x) - cx, float(x.y) - cy
        dx, dy = float(d.x), float(d.y)
        a = dx * dx + dy * dy
        b = 2.0 * (px * dx + py * dy)
        c = px * px + py * py - float(self.radius) ** 2
        disc = b * b - 4.0 * a * c
        if disc <= 0 or a == 0:
            raise PointsOutsideDomain("chord base point must be interior to the disk")
        root = math.sqrt(disc)
        return (-b - root) / (2.0 * a), (-b + root) / (2.0 * a)

    def to_json(self):
        return {"kind": "disk", "center": self.center.to_json(), "radius": float(self.radius)}


@dataclass(frozen=True)
class Ellipse:
    center: PlanarPoint
    semi_x: float
    semi_y: float
    rotation: float = 0.0  # radians, counterclockwise

    def __post_init__(self):
        if float(self.semi_x) <= 0 or float(self.semi_y) <= 0:
            raise DegenerateInput("ellipse semi-axes must be positive")

    @property
    def kind(self) -> str:
        return "ellipse"

    @property
    def is_bounded(self) -> bool:
        return True

    def _to_unit(self, px: float, py: float) -> Tuple[float, float]:
        cx, cy = float(self.center.x), float(self.center.y)
        ct, st = math.cos(float(self.rotation)), math.sin(float(self.rotation))
        ux = ct * (px - cx) + st * (py - cy)
        uy = -st * (px - cx) + ct * (py - cy)
        return ux / float(self.semi_x), uy / float(self.semi_y)

    def contains(self, p: PlanarPoint, strict: bool = False) -> bool:
        ux, uy = self._to_unit(float(p.x), float(p.y))
        rr = ux * ux + uy * uy
        return rr < 1.0 if strict else rr <= 1.0

    def chord_params(self, x: PlanarPoint, d: PlanarPoint):
        ux, uy = self._to_unit(float(x.x), float(x.y))
        # direction transforms without the translation
        ct, st = math.cos(float(self.rotation)), math.sin(float(self.rotation))
        dx, dy = float(d.x), float(d.y)
        vx = (ct * dx + st * dy) / float(self.semi_x)
        vy = (-st * dx + ct * dy) / float(self.semi_y)
        a = vx * vx + vy * vy
        b = 2.0 * (ux * vx + uy * vy)
        c = ux * ux + uy * uy - 1.0
        disc = b * b - 4.0 * a * c
        if disc <= 0 or a == 0:
            raise PointsOutsideDomain("chord base point must be interior to the ellipse")
        root = math.sqrt(disc)
        return (-b - root) / (2.0 * a), (-b + root) / (2.0 * a)

    def to_json(self):
        return {
            "kind": "ellipse",
            "center": self.center.to_json(),
            "semi_x": float(self.semi_x),
            "semi_y": float(self.semi_y),
            "rotation": float(self.rotation),
        }


@dataclass(frozen=True)
class Strip:
    """Axis-aligned horizontal strip y_lo < y < y_hi; either bound may be None.

    Unbounded carrier used only to exhibit the degeneracy of the weak
    Hilbert metric: chords parallel to the strip have no boundary points.
    """

    y_lo: Optional[float]
    y_hi: Optional[float]

    def __post_init__(self):
        if self.y_lo is not None and self.y_hi is not None and not float(self.y_lo) < float(self.y_hi):
            raise DegenerateInput("strip needs y_lo < y_hi")
        if self.y_lo is None and self.y_hi is None:
            raise DegenerateInput("strip needs at least one boundary")

    @property
    def kind(self) -> str:
        return "strip"

    @property
    def is_bounded(self) -> bool:
        return False

    def contains(self, p: PlanarPoint, strict: bool = False) -> bool:
        y = float(p.y)
        if self.y_lo is not None and (y < float(self.y_lo) or (strict and y == float(self.y_lo))):
            return False
        if self.y_hi is not None and (y > float(self.y_hi) or (strict and y == float(self.y_hi))):
            return False
        return True

    def chord_params(self, x: PlanarPoint, d: PlanarPoint):
        y0, dy = float(x.y), float(d.y)
        if dy == 0.0:
            return -INF, INF
        ts = [
            (float(bound) - y0) / dy
            for bound in (self.y_lo, self.y_hi)
            if bound is not None
        ]
        if len(ts) == 2:
            return min(ts), max(ts)
        t = ts[0]  # half-plane: one crossing, the other side unbounded
        return (t, INF) if t < 0 else (-INF, t)

    def to_json(self):
        return {"kind": "strip", "y_lo": self.y_lo, "y_hi": self.y_hi}


ConvexBody = Union[Polygon, Disk, Ellipse, Strip]


def body_from_json(data) -> ConvexBody:
    if not isinstance(data, dict) or "kind" not in data:
        raise TypeError("convex body JSON must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "polygon":
        verts = tuple(PlanarPoint.from_json(v) for v in data["vertices"])
        return Polygon(verts)
    if kind == "disk":
        return Disk(PlanarPoint.from_json(data["center"]), float(data["radius"]))
    if kind == "ellipse":
        return Ellipse(
            PlanarPoint.from_json(data["center"]),
            float(data["semi_x"]),
            float(data["semi_y"]),
            float(data.get("rotation", 0.0)),
        )
    if kind == "strip":
        return Strip(data.get("y_lo"), data.get("y_hi"))
    raise TypeError(f"unknown convex body kind: {kind!r}")


def chord_boundary_intersection(
    body: ConvexBody, x: PlanarPoint, y: PlanarPoint
) -> Tuple[PlanarPoint, PlanarPoint]:
    """Boundary points (a, b) of the chord through interior points x, y.

    Ordered so that x lies between a and y, and y between x and b.  On a
    polygon the parameters are solved exactly and rounded once; on a disk
    or ellipse a quadratic is solved in floats.  Chords of an unbounded
    strip that never reach the boundary raise UnboundedChord.
    """
    if float(x.x) == float(y.x) and float(x.y) == float(y.y):
        raise CoincidentPoints("chord needs two distinct points")
    if not (body.contains(x, strict=True) and body.contains(y, strict=True)):
        raise PointsOutsideDomain("chord base points must be interior")
    d = y - x
    t_lo, t_hi = body.chord_params(x, d)
    if not (t_lo < 0 and t_hi > 1):
        raise PointsOutsideDomain("chord parameters inconsistent with interior points")
    if math.isinf(float(t_lo)) or math.isinf(float(t_hi)):
        raise UnboundedChord("chord leaves the domain unbounded on one side")
    xf, df = x.as_float(), d.as_float()
    a = xf + df * float(t_lo)
    b = xf + df * float(t_hi)
    return a, b


@dataclass(frozen=True)
class GaugeBody:
    """Centrally symmetric convex body with the origin interior: a unit ball.

    The gauge of v is the factor F with v/F on the boundary, i.e. the
    norm whose unit ball is this body.
    """

    body: ConvexBody

    def __post_init__(self):
        body = self.body
        origin = PlanarPoint(Fraction(0), Fraction(0))
        if isinstance(body, Strip):
            raise DegenerateInput("a gauge body must be bounded")
        if not body.contains(origin, strict=True):
            raise DegenerateInput("gauge body must contain the origin in its interior")
        if isinstance(body, Polygon):
            vset = {(v.x, v.y) for v in body.vertices}
            if any((-v.x, -v.y) not in vset for v in body.vertices):
                raise DegenerateInput("gauge polygon must be centrally symmetric")
        elif isinstance(body, Disk):
            if float(body.center.x) != 0.0 or float(body.center.y) != 0.0:
                raise DegenerateInput("gauge disk must be centered at the origin")
        elif isinstance(body, Ellipse):
            if float(body.center.x) != 0.0 or float(body.center.y) != 0.0:
                raise DegenerateInput("gauge ellipse must be centered at the origin")

    def gauge(self, v: PlanarPoint) -> float:
        """Gauge functional of v (exact boundary scaling on polygons)."""
        if float(v.x) == 0.0 and float(v.y) == 0.0:
            return 0.0
        origin = PlanarPoint(Fraction(0), Fraction(0))
        _, t_hi = self.body.chord_params(origin, v)
        if isinstance(t_hi, Fraction):
            return float(1 / t_hi)
        return 1.0 / float(t_hi)

    def to_json(self):
        return self.body.to_json()
