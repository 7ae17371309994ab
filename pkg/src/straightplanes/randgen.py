"""Seeded random generators for the verification suites.

A single 64-bit seed drives `random.Random` (Mersenne Twister); rational
samples keep numerator and denominator bounded by 1000 so exact
arithmetic stays fast.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Tuple

from .planar import PlanarPoint
from .projective import ProjPoint, Triangle, collinear

MAX_NUM = 1000
MAX_DEN = 1000


def rational(rng: random.Random, max_num: int = MAX_NUM, max_den: int = MAX_DEN) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rational_in(rng: random.Random, lo: float, hi: float, den: int = MAX_DEN) -> Fraction:
    return Fraction(rng.randint(math.ceil(lo * den), math.floor(hi * den)), den)


def proj_point(rng: random.Random) -> ProjPoint:
    return ProjPoint.affine(rational(rng), rational(rng))


def planar_point(rng: random.Random, lo: float = -3.0, hi: float = 3.0) -> PlanarPoint:
    return PlanarPoint(rational_in(rng, lo, hi), rational_in(rng, lo, hi))


def proj_triangle(rng: random.Random) -> Triangle:
    while True:
        t = (proj_point(rng), proj_point(rng), proj_point(rng))
        if not collinear(*t):
            return t


def perspective_pair(rng: random.Random) -> Tuple[Triangle, Triangle, ProjPoint]:
    """A rational triangle pair perspective from a random affine center.

    Built by central projection: each primed vertex is the center
    stretched toward the original vertex by a random rational factor,
    so concurrency of the connectors holds by construction, not by the
    code under test.
    """
    while True:
        tri = proj_triangle(rng)
        center = proj_point(rng)
        if any(v == center for v in tri):
            continue
        o = center.to_affine()
        factors = []
        while len(factors) < 3:
            lam = rational(rng, 40, 8)
            if lam not in (0, 1):
                factors.append(lam)
        primed = []
        for v, lam in zip(tri, factors):
            vx, vy = v.to_affine()
            primed.append(
                ProjPoint.affine(o[0] + lam * (vx - o[0]), o[1] + lam * (vy - o[1]))
            )
        t2 = tuple(primed)
        if collinear(*t2):
            continue
        return tri, t2, center


def triangle_pair(rng: random.Random) -> Tuple[Triangle, Triangle]:
    return proj_triangle(rng), proj_triangle(rng)


def interior_point(body, rng: random.Random, margin: float = 0.0) -> PlanarPoint:
    """Uniform-ish interior sample by rejection from the bounding box."""
    xmin, ymin, xmax, ymax = _bbox(body)
    for _ in range(10_000):
        p = PlanarPoint(rng.uniform(xmin, xmax), rng.uniform(ymin, ymax))
        if body.contains(p, strict=True):
            if margin == 0.0:
                return p
            shrunk = PlanarPoint(
                p.x + margin * (0.5 * (xmin + xmax) - p.x),
                p.y + margin * (0.5 * (ymin + ymax) - p.y),
            )
            return shrunk
    raise RuntimeError("interior sampling failed; body has negligible area?")


def _bbox(body) -> Tuple[float, float, float, float]:
    kind = body.kind
    if kind == "polygon":
        xs = [float(v.x) for v in body.vertices]
        ys = [float(v.y) for v in body.vertices]
        return min(xs), min(ys), max(xs), max(ys)
    if kind == "disk":
        cx, cy, r = float(body.center.x), float(body.center.y), float(body.radius)
        return cx - r, cy - r, cx + r, cy + r
    if kind == "ellipse":
        cx, cy = float(body.center.x), float(body.center.y)
        r = max(float(body.semi_x), float(body.semi_y))
        return cx - r, cy - r, cx + r, cy + r
    if kind == "strip":
        lo = -10.0 if body.y_lo is None else float(body.y_lo)
        hi = 10.0 if body.y_hi is None else float(body.y_hi)
        return -10.0, lo, 10.0, hi
    raise TypeError(f"no bounding box for body kind {kind!r}")
