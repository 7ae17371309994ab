"""Synthetic constructions executed inside a metric plane.

Everything here consumes the StraightPlane interface and the fact that
its geodesics are affine chords of the carrier:

* quadrangle-based harmonic conjugates (`metric_harmonic_conjugate`),
* harmonic division of a labeled base quadrilateral and its iterated
  refinement into a dyadically labeled net (`harmonic_division`,
  `build_harmonic_net`),
* the square-coordinates chart on the base hull and its extension to
  the whole carrier (`psi_map`, `psi_extend`),
* the triangle-comparison chart built from a flat model triangle with
  matching side lengths (`PaschMap`, `pasch_phi`, `pasch_phi_preimage`).

Meets of chords are computed in homogeneous coordinates so that
parallel and exterior auxiliary intersections need no special casing;
with exact rational input in the Euclidean plane every construction
stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateAuxiliary,
    DegenerateInput,
    DegenerateQuadrilateral,
    GeometryError,
    IllConditionedIntersection,
    IntersectionOutsideCarrier,
    MissingIdealIntersection,
    ModelDegenerate,
    NoAdmissibleSecants,
    NoFiniteConjugate,
    OutsideCarrier,
    OutsideHull,
    ResolutionUnreachable,
    SignAmbiguous,
)
from .metric import GeodesicLine, StraightPlane, geodesic_through, line_line_meet, metric_distance
from .planar import PlanarPoint, orient

DEFAULT_PSI_RESOLUTION = 2.0 ** -32
_MAX_PSI_LEVELS = 48


# -- homogeneous helpers (exact on Fractions, plain floats otherwise) ---------

def _hpt(p: PlanarPoint):
    one = Fraction(1) if p.is_exact else 1.0
    return (p.x, p.y, one)


def _hcross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _is_zero_triple(h) -> bool:
    return h[0] == 0 and h[1] == 0 and h[2] == 0


def _dehom(h) -> Optional[PlanarPoint]:
    if h[2] == 0:
        return None
    return PlanarPoint(h[0] / h[2], h[1] / h[2])


# -- base quadrilateral and harmonic division --------------------------------

@dataclass(frozen=True)
class BaseQuadrilateral:
    """Convex quadrilateral with corners labeled a(0,0) b(1,0) y(1,1) x(0,1)."""

    a: PlanarPoint
    b: PlanarPoint
    y: PlanarPoint
    x: PlanarPoint

    def __post_init__(self):
        corners = (self.a, self.b, self.y, self.x)
        turns = [
            orient(corners[i], corners[(i + 1) % 4], corners[(i + 2) % 4])
            for i in range(4)
        ]
        if any(t == 0 for t in turns):
            raise DegenerateQuadrilateral("three corners are collinear")
        if not (all(t > 0 for t in turns) or all(t < 0 for t in turns)):
            raise DegenerateQuadrilateral("corners do not bound a convex quadrilateral")

    def corners(self) -> Tuple[PlanarPoint, PlanarPoint, PlanarPoint, PlanarPoint]:
        return (self.a, self.b, self.y, self.x)

    def contains(self, p: PlanarPoint) -> bool:
        """Closed convex-hull membership, orientation agnostic."""
        corners = self.corners()
        sides = [
            orient(corners[i], corners[(i + 1) % 4], p) for i in range(4)
        ]
        return all(s >= 0 for s in sides) or all(s <= 0 for s in sides)

    def as_float(self) -> "BaseQuadrilateral":
        return BaseQuadrilateral(
            self.a.as_float(), self.b.as_float(), self.y.as_float(), self.x.as_float()
        )


@dataclass(frozen=True)
class HarmonicDivision:
    """The five points splitting a base quadrilateral at dyadic midpoints.

    w(1/2,1/2), q(1/2,0), s(1,1/2), t(1/2,1), u(0,1/2).  ``variant``
    records whether the two auxiliary intersections (the meet z of the
    side lines ax, by and the meet p of ab, xy) were finite or ideal.
    """

    w: PlanarPoint
    q: PlanarPoint
    s: PlanarPoint
    t: PlanarPoint
    u: PlanarPoint
    z_point: Optional[PlanarPoint]
    p_point: Optional[PlanarPoint]
    variant: str


def harmonic_division(plane: StraightPlane, quad: BaseQuadrilateral) -> HarmonicDivision:
    """Harmonically divide a base quadrilateral inside the plane's carrier.

    The center w is the meet of the diagonals; the edge points q, s, t, u
    complete harmonic quadruples with the auxiliary meets z = ax.by and
    p = ab.xy, which may lie outside the carrier or at infinity (the
    homogeneous meets keep working either way).
    """
    for corner in quad.corners():
        if not plane.contains(corner):
            raise OutsideCarrier("quadrilateral corners must lie in the carrier")
    # work relative to the centroid: small cells far from the origin would
    # otherwise lose the auxiliary meets to floating-point cancellation
    corners = quad.corners()
    quarter = Fraction(1, 4) if corners[0].is_exact else 0.25
    g = (corners[0] + corners[1] + corners[2] + corners[3]) * quarter
    a, b, yy, xx = (c - g for c in corners)
    ha, hb, hy, hx = _hpt(a), _hpt(b), _hpt(yy), _hpt(xx)

    line_ab = _hcross(ha, hb)
    line_xy = _hcross(hx, hy)
    line_ax = _hcross(ha, hx)
    line_by = _hcross(hb, hy)
    line_ay = _hcross(ha, hy)
    line_xb = _hcross(hx, hb)

    hw = _hcross(line_ay, line_xb)
    w = _dehom(hw)
    if w is None:
        raise DegenerateQuadrilateral("diagonals fail to meet at a finite point")

    hz = _hcross(line_ax, line_by)
    hp = _hcross(line_ab, line_xy)
    if _is_zero_triple(hz) or _is_zero_triple(hp):
        raise MissingIdealIntersection("side lines coincide; no auxiliary meet")

    line_zw = _hcross(hz, hw)
    line_pw = _hcross(hp, hw)
    if _is_zero_triple(line_zw) or _is_zero_triple(line_pw):
        raise MissingIdealIntersection("auxiliary meet coincides with the center")

    q = _dehom(_hcross(line_ab, line_zw))
    s = _dehom(_hcross(line_pw, line_by))
    t = _dehom(_hcross(line_zw, line_xy))
    u = _dehom(_hcross(line_ax, line_pw))
    if q is None or s is None or t is None or u is None:
        raise MissingIdealIntersection("an edge point escaped to infinity")
    w, q, s, t, u = (pt + g for pt in (w, q, s, t, u))
    for pt in (w, q, s, t, u):
        if not plane.contains(pt):
            raise IntersectionOutsideCarrier("division point left the carrier")
    variant = "z:{},p:{}".format(
        "ideal" if hz[2] == 0 else "finite", "ideal" if hp[2] == 0 else "finite"
    )
    zp = _dehom(hz)
    pp = _dehom(hp)
    return HarmonicDivision(
        w=w, q=q, s=s, t=t, u=u,
        z_point=None if zp is None else zp + g,
        p_point=None if pp is None else pp + g,
        variant=variant,
    )


# -- dyadically labeled net ---------------------------------------------------

@dataclass(frozen=True)
class NetLabel:
    """Dyadic label (m/2^k, n/2^k), stored in lowest terms."""

    m: int
    n: int
    k: int

    def __post_init__(self):
        m, n, k = self.m, self.n, self.k
        if k < 0 or not (0 <= m <= 2 ** k and 0 <= n <= 2 ** k):
            raise DegenerateInput(f"label ({m}, {n}, depth {k}) outside the unit square")
        while k > 0 and m % 2 == 0 and n % 2 == 0:
            m //= 2
            n //= 2
            k -= 1
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.m, 2 ** self.k)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.n, 2 ** self.k)

    def key(self) -> str:
        from .planar import rat_str

        return f"{rat_str(self.alpha)},{rat_str(self.beta)}"


@dataclass
class HarmonicNet:
    """All net points of a base quadrilateral up to a given dyadic depth."""

    plane: StraightPlane
    base: BaseQuadrilateral
    depth: int
    points: Dict[NetLabel, PlanarPoint]
    consistency_dev: float

    def point(self, label: NetLabel) -> PlanarPoint:
        return self.points[label]

    def __len__(self) -> int:
        return len(self.points)

    def sorted_items(self):
        return sorted(
            self.points.items(), key=lambda kv: (kv[0].alpha, kv[0].beta)
        )

    def to_json(self):
        return {
            "depth": self.depth,
            "consistency_dev": self.consistency_dev,
            "points": {
                label.key(): [float(p.x), float(p.y)]
                for label, p in self.sorted_items()
            },
        }

    def to_csv_rows(self):
        yield ("alpha", "beta", "x", "y")
        for label, p in self.sorted_items():
            yield (str(label.alpha), str(label.beta), repr(float(p.x)), repr(float(p.y)))


def build_harmonic_net(plane: StraightPlane, quad: BaseQuadrilateral, depth: int) -> HarmonicNet:
    """Iterate harmonic division to depth k, deduplicating by dyadic label.

    Cells are processed in deterministic label order; a point reached by
    a second cell is kept from the first computation and cross-checked
    against the recomputation (the maximal deviation is recorded and must
    stay within 1e-8).
    """
    if depth < 0:
        raise DegenerateInput("depth must be nonnegative")
    points: Dict[NetLabel, PlanarPoint] = {
        NetLabel(0, 0, 0): quad.a,
        NetLabel(1, 0, 0): quad.b,
        NetLabel(1, 1, 0): quad.y,
        NetLabel(0, 1, 0): quad.x,
    }
    dev = 0.0

    def put(label: NetLabel, value: PlanarPoint):
        nonlocal dev
        if label in points:
            old = points[label]
            dev = max(
                dev,
                math.hypot(float(old.x) - float(value.x), float(old.y) - float(value.y)),
            )
            return
        points[label] = value

    for level in range(depth):
        scale = 2 ** level
        for m in range(scale):
            for n in range(scale):
                cell = BaseQuadrilateral(
                    points[NetLabel(m, n, level)],
                    points[NetLabel(m + 1, n, level)],
                    points[NetLabel(m + 1, n + 1, level)],
                    points[NetLabel(m, n + 1, level)],
                )
                try:
                    div = harmonic_division(plane, cell)
                except GeometryError as exc:
                    raise type(exc)(
                        f"cell ({m}/{scale}, {n}/{scale}): {exc}"
                    ) from exc
                mm, nn, lv = 2 * m, 2 * n, level + 1
                put(NetLabel(mm + 1, nn + 1, lv), div.w)
                put(NetLabel(mm + 1, nn, lv), div.q)
                put(NetLabel(mm + 2, nn + 1, lv), div.s)
                put(NetLabel(mm + 1, nn + 2, lv), div.t)
                put(NetLabel(mm, nn + 1, lv), div.u)
    if dev > 1e-8:
        raise GeometryError(f"net recursion paths disagree by {dev:.3e}")
    return HarmonicNet(plane=plane, base=quad, depth=depth, points=points, consistency_dev=dev)


# -- square-coordinates chart -------------------------------------------------

def _locate_subcell(div: HarmonicDivision, cell: BaseQuadrilateral, v: PlanarPoint) -> int:
    """Index 0..3 (ll, lr, ur, ul) of the sub-quadrilateral holding v.

    Chooses the cell whose worst oriented side value is best, which is
    the containing cell when v is strictly inside one and a deterministic
    nearest cell when v sits on a shared edge.
    """
    a, b, yy, xx = cell.corners()
    subs = (
        (a, div.q, div.w, div.u),
        (div.q, b, div.s, div.w),
        (div.w, div.s, yy, div.t),
        (div.u, div.w, div.t, xx),
    )
    best_idx, best_score = 0, -math.inf
    for idx, corners in enumerate(subs):
        sides = [
            float(orient(corners[i], corners[(i + 1) % 4], v)) for i in range(4)
        ]
        score = min(sides) if sum(sides) >= 0 else min(-s for s in sides)
        if score > best_score:
            best_idx, best_score = idx, score
    return best_idx


def psi_map(
    plane: StraightPlane,
    net: HarmonicNet,
    v: PlanarPoint,
    resolution: float = DEFAULT_PSI_RESOLUTION,
) -> PlanarPoint:
    """Unit-square coordinates of a point in the base hull.

    Net points map to their dyadic labels; everything else is located by
    nested harmonic bisection of the containing cell until the dyadic
    cell is smaller than ``resolution``, and the cell center is returned.
    Collinear triples in the hull map to collinear label triples up to
    the bisection quantum.
    """
    base = net.base.as_float()
    vf = v.as_float()
    if not base.contains(vf):
        raise OutsideHull("psi_map argument must lie in the base hull")
    cell = base
    m = n = 0
    level = 0
    while 2.0 ** -(level + 1) > resolution:
        if level >= _MAX_PSI_LEVELS:
            raise ResolutionUnreachable(
                f"requested resolution {resolution} needs more than "
                f"{_MAX_PSI_LEVELS} bisection levels"
            )
        try:
            div = harmonic_division(plane, cell)
        except GeometryError as exc:
            raise ResolutionUnreachable(
                f"cell ({m}/{2 ** level}, {n}/{2 ** level}) failed to divide: {exc}"
            ) from exc
        idx = _locate_subcell(div, cell, vf)
        a, b, yy, xx = cell.corners()
        if idx == 0:
            cell = BaseQuadrilateral(a, div.q, div.w, div.u)
            m, n = 2 * m, 2 * n
        elif idx == 1:
            cell = BaseQuadrilateral(div.q, b, div.s, div.w)
            m, n = 2 * m + 1, 2 * n
        elif idx == 2:
            cell = BaseQuadrilateral(div.w, div.s, yy, div.t)
            m, n = 2 * m + 1, 2 * n + 1
        else:
            cell = BaseQuadrilateral(div.u, div.w, div.t, xx)
            m, n = 2 * m, 2 * n + 1
        level += 1
    size = 2.0 ** -level
    return PlanarPoint((m + 0.5) * size, (n + 0.5) * size)


_SECANT_ANCHOR_LABELS = (
    (1, 1, 1),  # (1/2, 1/2)
    (1, 1, 2),  # (1/4, 1/4)
    (3, 1, 2),
    (3, 3, 2),
    (1, 3, 2),
    (1, 2, 2),  # (1/4, 1/2)
    (2, 1, 2),
    (3, 2, 2),
    (2, 3, 2),
)


def _hull_chord_interval(base: BaseQuadrilateral, origin: PlanarPoint, d: PlanarPoint):
    """Parameter interval of {origin + t d} inside the hull, or None."""
    ts = []
    corners = base.corners()
    for i in range(4):
        p0, p1 = corners[i], corners[(i + 1) % 4]
        e = p1 - p0
        den = float(d.cross(e))
        if den == 0.0:
            continue
        w = p0 - origin
        t = float(w.cross(e)) / den
        s = float(w.cross(d)) / den
        if -1e-12 <= s <= 1 + 1e-12:
            ts.append(t)
    if len(ts) < 2:
        return None
    lo, hi = min(ts), max(ts)
    if hi - lo <= 0:
        return None
    return lo, hi


def psi_extend(
    plane: StraightPlane,
    net: HarmonicNet,
    v: PlanarPoint,
    anchor_pair: Optional[Tuple[int, int]] = None,
    resolution: float = DEFAULT_PSI_RESOLUTION,
) -> PlanarPoint:
    """Extend the square chart to a carrier point outside the base hull.

    Two secant geodesics through v crossing the hull interior are mapped
    through `psi_map`; their straight images are intersected in label
    space.  The result does not depend on the admissible secant choice
    (up to the chart resolution); nearly parallel image lines are skipped
    in favour of the next anchor pair.
    """
    if net.depth < 2:
        raise DegenerateInput("psi_extend needs a net of depth >= 2")
    if not plane.contains(v):
        raise NoAdmissibleSecants("point must lie in the open carrier")
    base = net.base.as_float()
    vf = v.as_float()
    if base.contains(vf):
        raise DegenerateInput("point is inside the hull; use psi_map")

    anchors = [net.point(NetLabel(*lbl)) for lbl in _SECANT_ANCHOR_LABELS]

    def secant_images(anchor: PlanarPoint):
        d = anchor.as_float() - vf
        interval = _hull_chord_interval(base, vf, d)
        if interval is None:
            return None
        lo, hi = interval
        u1 = vf + d * (lo + 0.3 * (hi - lo))
        u2 = vf + d * (lo + 0.7 * (hi - lo))
        img1 = psi_map(plane, net, u1, resolution)
        img2 = psi_map(plane, net, u2, resolution)
        if (img2 - img1).norm() < 1e-6:
            return None
        return img1, img2

    if anchor_pair is not None:
        pairs = [anchor_pair]
    else:
        pairs = [
            (i, j)
            for i in range(len(anchors))
            for j in range(i + 1, len(anchors))
        ]
    cache: Dict[int, Optional[Tuple[PlanarPoint, PlanarPoint]]] = {}

    def images_for(idx: int):
        if idx not in cache:
            cache[idx] = secant_images(anchors[idx])
        return cache[idx]

    last_reason = "no admissible secants"
    got_secants = False
    for i, j in pairs:
        im1 = images_for(i)
        im2 = images_for(j)
        if im1 is None or im2 is None:
            continue
        got_secants = True
        d1 = im1[1] - im1[0]
        d2 = im2[1] - im2[0]
        den = float(d1.cross(d2))
        sin_angle = abs(den) / (d1.norm() * d2.norm())
        if sin_angle < 0.05:
            last_reason = "image lines nearly parallel"
            continue
        w = im2[0] - im1[0]
        t = float(w.cross(d2)) / den
        return im1[0] + d1 * t
    if got_secants:
        raise IllConditionedIntersection(last_reason)
    raise NoAdmissibleSecants(last_reason)


def psi_extend_samples(
    plane: StraightPlane,
    net: HarmonicNet,
    v: PlanarPoint,
    count: int = 5,
    resolution: float = DEFAULT_PSI_RESOLUTION,
) -> List[PlanarPoint]:
    """Images of an exterior point under ``count`` distinct admissible secant pairs.

    Scans the anchor pairs deterministically and keeps the first ``count``
    well-conditioned ones; the spread of the returned images measures the
    secant independence of the extension.
    """
    n = len(_SECANT_ANCHOR_LABELS)
    images: List[PlanarPoint] = []
    for i in range(n):
        for j in range(i + 1, n):
            try:
                images.append(
                    psi_extend(plane, net, v, anchor_pair=(i, j), resolution=resolution)
                )
            except (IllConditionedIntersection, NoAdmissibleSecants):
                continue
            if len(images) == count:
                return images
    raise NoAdmissibleSecants(
        f"only {len(images)} well-conditioned secant pairs, needed {count}"
    )


# -- metric harmonic conjugate ------------------------------------------------

def _off_chord_residual(g: GeodesicLine, p: PlanarPoint) -> float:
    u = g.direction
    w = p.as_float() - g.base
    return abs(float(u.cross(w))) / (u.norm() * max(1.0, w.norm()))


def metric_harmonic_conjugate(
    plane: StraightPlane,
    a: PlanarPoint,
    b: PlanarPoint,
    p: PlanarPoint,
    z: PlanarPoint,
    x: PlanarPoint,
) -> PlanarPoint:
    """Quadrangle construction of the harmonic conjugate with geodesics.

    a, b, p must share a geodesic, z lies off it, x on the geodesic az
    strictly between a and z.  The conjugate of the metric midpoint has
    no finite position in a bounded carrier; that case raises
    NoFiniteConjugate.
    """
    base = geodesic_through(plane, a, b)
    if _off_chord_residual(base, p) > 1e-9:
        raise DegenerateInput("p must lie on the geodesic through a and b")
    if _off_chord_residual(base, z) <= 1e-9:
        raise DegenerateAuxiliary("z must avoid the geodesic through a and b")
    az = geodesic_through(plane, a, z)
    if _off_chord_residual(az, x) > 1e-9:
        raise DegenerateAuxiliary("x must lie on the geodesic through a and z")
    sx = az.param_of(x.as_float())
    sz = az.param_of(z.as_float())
    if not (min(0.0, sz) < sx < max(0.0, sz)) or sx == 0.0:
        raise DegenerateAuxiliary("x must lie strictly between a and z")
    try:
        yy = line_line_meet(plane, geodesic_through(plane, p, x), geodesic_through(plane, b, z))
        if yy is None:
            raise IntersectionOutsideCarrier("auxiliary meet px.bz not in the carrier")
        w = line_line_meet(plane, geodesic_through(plane, x, b), geodesic_through(plane, yy, a))
        if w is None:
            raise IntersectionOutsideCarrier("auxiliary meet xb.ya not in the carrier")
        q = line_line_meet(plane, base, geodesic_through(plane, w, z))
    except (CoincidentPoints, CoincidentLines) as exc:
        raise DegenerateAuxiliary(f"construction degenerated: {exc}") from exc
    if q is None:
        raise NoFiniteConjugate("conjugate is ideal or beyond the carrier")
    return q


# -- triangle comparison chart ------------------------------------------------

@dataclass(frozen=True)
class PaschMap:
    """Correspondence between a metric triangle and a flat model triangle.

    The model has the same pairwise side lengths, with A at the origin,
    B on the positive x-axis and C in the upper half-plane; P sits on
    [A, C] at the distance of p from a.
    """

    plane: StraightPlane
    a: PlanarPoint
    b: PlanarPoint
    c: PlanarPoint
    p: PlanarPoint
    A: PlanarPoint
    B: PlanarPoint
    C: PlanarPoint
    P: PlanarPoint
    d_ab: float
    d_ac: float
    d_bc: float

    @classmethod
    def build(
        cls,
        plane: StraightPlane,
        a: PlanarPoint,
        b: PlanarPoint,
        c: PlanarPoint,
        p: PlanarPoint,
    ) -> "PaschMap":
        d_ab = metric_distance(plane, a, b)
        d_ac = metric_distance(plane, a, c)
        d_bc = metric_distance(plane, b, c)
        slack = min(
            d_ab + d_bc - d_ac, d_ab + d_ac - d_bc, d_ac + d_bc - d_ab
        )
        if slack <= 1e-12 * max(d_ab, d_ac, d_bc):
            raise ModelDegenerate("triangle inequality is tight; the points are aligned")
        cx = (d_ab * d_ab + d_ac * d_ac - d_bc * d_bc) / (2.0 * d_ab)
        cy_sq = d_ac * d_ac - cx * cx
        if cy_sq <= 0.0:
            raise ModelDegenerate("flat model collapses onto a line")
        d_ap = metric_distance(plane, a, p)
        d_pc = metric_distance(plane, p, c)
        if d_ap == 0.0 or d_pc == 0.0 or abs(d_ap + d_pc - d_ac) > 1e-9 * max(1.0, d_ac):
            raise DegenerateInput("p must lie strictly between a and c")
        A = PlanarPoint(0.0, 0.0)
        B = PlanarPoint(d_ab, 0.0)
        C = PlanarPoint(cx, math.sqrt(cy_sq))
        P = A + (C - A) * (d_ap / d_ac)
        return cls(plane, a, b, c, p, A, B, C, P, d_ab, d_ac, d_bc)

    def model_sides(self) -> Tuple[float, float, float]:
        return (
            (self.B - self.A).norm(),
            (self.C - self.A).norm(),
            (self.C - self.B).norm(),
        )


def _segment_hit(P: PlanarPoint, Q: PlanarPoint, s0: PlanarPoint, s1: PlanarPoint):
    """Intersection of line PQ with closed segment [s0, s1], or None."""
    d = Q - P
    e = s1 - s0
    den = float(d.cross(e))
    if den == 0.0:
        return None
    w = s0 - P
    s = float(w.cross(d)) / den
    if -1e-12 <= s <= 1 + 1e-12:
        s = min(1.0, max(0.0, s))
        return s0 + e * s
    return None


def pasch_phi(pm: PaschMap, Q: PlanarPoint) -> PlanarPoint:
    """Carry a flat model point Q to the metric plane.

    The line PQ crosses the model sides [A,B] u [B,C] at S; S pulls back
    to s by matching arclength, and q is placed on the geodesic line ps
    so that d(q,s), d(q,p), d(p,s) are proportional to the model
    distances Q-S, Q-P, P-S with one common factor.
    """
    Qf = Q.as_float()
    if (Qf - pm.P).norm() == 0.0:
        raise DegenerateInput("Q must differ from the model base point P")
    hit_ab = _segment_hit(pm.P, Qf, pm.A, pm.B)
    hit_bc = _segment_hit(pm.P, Qf, pm.B, pm.C)
    if hit_ab is not None:
        S = hit_ab
        geo = geodesic_through(pm.plane, pm.a, pm.b)
        s_point = geo.point_at((S - pm.A).norm())
    elif hit_bc is not None:
        S = hit_bc
        geo = geodesic_through(pm.plane, pm.b, pm.c)
        s_point = geo.point_at((S - pm.B).norm())
    else:
        raise GeometryError("model line PQ missed both opposite sides")

    d_ps = metric_distance(pm.plane, pm.p, s_point)
    model_ps = (S - pm.P).norm()
    lam = d_ps / model_ps
    mag = (Qf - pm.P).norm() * lam
    target = (Qf - S).norm() * lam
    geo_ps = geodesic_through(pm.plane, pm.p, s_point)
    err_pos = abs(abs(mag - d_ps) - target)
    err_neg = abs(mag + d_ps - target)
    scale = max(1.0, target, d_ps)
    if abs(err_pos - err_neg) <= 1e-12 * scale and min(err_pos, err_neg) > 1e-9 * scale:
        raise SignAmbiguous("both placements satisfy the ratio display")
    tau = mag if err_pos <= err_neg else -mag
    return geo_ps.point_at(tau)


def pasch_phi_ratios(pm: PaschMap, Q: PlanarPoint, q: PlanarPoint) -> Tuple[float, float, float]:
    """The three ratios d(q,s)/|Q-S|-style checks reduce to: returns
    (d(q,p)/|Q-P|, d(q,s)/|Q-S|, d(p,s)/|P-S|) for the S determined by Q."""
    Qf = Q.as_float()
    hit_ab = _segment_hit(pm.P, Qf, pm.A, pm.B)
    if hit_ab is not None:
        S = hit_ab
        geo = geodesic_through(pm.plane, pm.a, pm.b)
        s_point = geo.point_at((S - pm.A).norm())
    else:
        S = _segment_hit(pm.P, Qf, pm.B, pm.C)
        geo = geodesic_through(pm.plane, pm.b, pm.c)
        s_point = geo.point_at((S - pm.B).norm())
    r_p = metric_distance(pm.plane, pm.p, q) / (Qf - pm.P).norm()
    qs = (Qf - S).norm()
    r_s = metric_distance(pm.plane, q, s_point) / qs if qs > 0 else None
    r_ps = metric_distance(pm.plane, pm.p, s_point) / (S - pm.P).norm()
    if r_s is None:
        r_s = r_ps
    return r_p, r_s, r_ps


def pasch_phi_preimage(pm: PaschMap, q_target: PlanarPoint, iterations: int = 90) -> PlanarPoint:
    """Solve pasch_phi(Q) = q_target for Q by bisection along the model sides.

    Sweeps the boundary path A -> B -> C; the chord from p to the swept
    metric point rotates monotonically around p, so the side of q_target
    flips exactly once.  The matched crossing determines the direction of
    Q from P and the ratio fixes its distance.
    """
    qf = q_target.as_float()
    if not pm.plane.contains(qf):
        raise OutsideCarrier("target must lie in the carrier")
    geo_ab = geodesic_through(pm.plane, pm.a, pm.b)
    geo_bc = geodesic_through(pm.plane, pm.b, pm.c)
    len_ab = (pm.B - pm.A).norm()
    len_bc = (pm.C - pm.B).norm()

    def model_point(sigma: float) -> PlanarPoint:
        if sigma <= len_ab:
            return pm.A + (pm.B - pm.A) * (sigma / len_ab)
        return pm.B + (pm.C - pm.B) * ((sigma - len_ab) / len_bc)

    def metric_point(sigma: float) -> PlanarPoint:
        if sigma <= len_ab:
            return geo_ab.point_at(sigma)
        return geo_bc.point_at(sigma - len_ab)

    pf = pm.p.as_float()

    def side(sigma: float) -> float:
        s = metric_point(sigma)
        return float((s - pf).cross(qf - pf))

    total = len_ab + len_bc
    lo, hi = 0.0, total
    f_lo, f_hi = side(lo), side(hi)
    if f_lo == 0.0 or f_hi == 0.0 or f_lo * f_hi > 0:
        # q on the line through a and c: map it along that geodesic directly
        geo_ac = geodesic_through(pm.plane, pm.a, pm.c)
        if _off_chord_residual(geo_ac, qf) < 1e-9:
            u = geo_ac.param_of(qf) - geo_ac.param_of(pf)
            direction = (pm.C - pm.A) * (1.0 / (pm.C - pm.A).norm())
            return pm.P + direction * u
        raise GeometryError("boundary sweep found no sign change")
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        f_mid = side(mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if f_lo * f_mid < 0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    sigma = 0.5 * (lo + hi)
    s_point = metric_point(sigma)
    S = model_point(sigma)
    lam = metric_distance(pm.plane, pm.p, s_point) / (S - pm.P).norm()
    u = geodesic_through(pm.plane, pm.p, s_point).param_of(qf)
    direction = (S - pm.P) * (1.0 / (S - pm.P).norm())
    return pm.P + direction * (u / lam)
