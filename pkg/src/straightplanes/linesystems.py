"""Incidence-with-betweenness line systems on a planar carrier.

Two systems are provided:

* ``euclidean_chords(body)`` - straight chords of a convex body; the
  carrier is the body itself.
* ``moulton(bend)`` - the full plane where lines of negative slope
  multiply their slope by ``bend`` when crossing from x < 0 to x > 0;
  vertical and nonnegative-slope lines are straight.  For bend != 1 this
  system satisfies all incidence and ordering axioms (including Pasch)
  but violates the center/axis perspectivity equivalence, which is what
  the witness search below exhibits.

All predicates are exact when coordinates are Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .bodies import ConvexBody
from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateInput,
    DegenerateTriangle,
    OutsideCarrier,
    SearchExhausted,
)
from .planar import PlanarPoint, between, orient, rat_str


def _canonical_line(a, b, c):
    for v in (a, b, c):
        if v != 0:
            return (a / v, b / v, c / v)
    raise DegenerateInput("line coefficients must not all vanish")


@dataclass(frozen=True)
class ChordLine:
    """A straight chord of a convex body, identified by its line equation."""

    coeffs: Tuple  # (a, b, c) with a*x + b*y + c = 0, canonical
    body: ConvexBody = field(compare=False)
    p0: PlanarPoint = field(compare=False)
    p1: PlanarPoint = field(compare=False)

    def contains(self, p: PlanarPoint) -> bool:
        a, b, c = self.coeffs
        return a * p.x + b * p.y + c == 0 and self.body.contains(p)

    def endpoints(self) -> Tuple[PlanarPoint, PlanarPoint]:
        """Boundary endpoints of the chord (exact on polygon bodies)."""
        d = self.p1 - self.p0
        t_lo, t_hi = self.body.chord_params(self.p0, d)
        return self.p0 + d * t_lo, self.p0 + d * t_hi


@dataclass(frozen=True)
class MoultonLine:
    """One line of the Moulton system.

    ``slope`` is the slope on x <= 0 (None for a vertical line); the
    slope on x >= 0 is ``slope * bend`` when slope < 0, else unchanged.
    ``offset`` is the y-intercept, or the x-coordinate for verticals.
    """

    bend: Fraction
    slope: Optional[Fraction]
    offset: Fraction

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    def right_slope(self) -> Fraction:
        if self.slope is None:
            raise DegenerateInput("vertical line has no slope")
        return self.slope * self.bend if self.slope < 0 else self.slope

    def y_at(self, x):
        if self.slope is None:
            raise DegenerateInput("vertical line is not a graph")
        m = self.slope if x <= 0 else self.right_slope()
        return m * x + self.offset

    def contains(self, p: PlanarPoint) -> bool:
        if self.slope is None:
            return p.x == self.offset
        return p.y == self.y_at(p.x)


SystemLine = Union[ChordLine, MoultonLine]


@dataclass(frozen=True)
class EuclideanChords:
    body: ConvexBody
    kind = "euclidean_chords"

    def to_json(self):
        return {"kind": "euclidean_chords", "body": self.body.to_json()}


@dataclass(frozen=True)
class MoultonSystem:
    bend: Fraction

    kind = "moulton"

    def __post_init__(self):
        bend = Fraction(self.bend)
        if bend <= 0:
            raise DegenerateInput("bend factor must be positive")
        object.__setattr__(self, "bend", bend)

    def to_json(self):
        return {"kind": "moulton", "bend": rat_str(self.bend)}


LineSystem = Union[EuclideanChords, MoultonSystem]


def system_from_json(data) -> LineSystem:
    from .bodies import body_from_json

    if not isinstance(data, dict) or "kind" not in data:
        raise TypeError("line system JSON must be an object with a 'kind'")
    if data["kind"] == "moulton":
        return MoultonSystem(Fraction(data["bend"]))
    if data["kind"] == "euclidean_chords":
        return EuclideanChords(body_from_json(data["body"]))
    raise TypeError(f"unknown line system kind: {data['kind']!r}")


def line_through(sys: LineSystem, p: PlanarPoint, q: PlanarPoint) -> SystemLine:
    """The unique system line through two distinct carrier points."""
    if p.x == q.x and p.y == q.y:
        raise CoincidentPoints("line_through needs distinct points")
    if isinstance(sys, EuclideanChords):
        if not (sys.body.contains(p) and sys.body.contains(q)):
            raise OutsideCarrier("chord endpoints must lie in the body")
        a = q.y - p.y
        b = p.x - q.x
        c = q.x * p.y - p.x * q.y
        return ChordLine(_canonical_line(a, b, c), sys.body, p, q)
    return _moulton_through(sys, p, q)


def _moulton_through(sys: MoultonSystem, p: PlanarPoint, q: PlanarPoint) -> MoultonLine:
    bend = sys.bend
    if p.x == q.x:
        return MoultonLine(bend, None, p.x)
    if p.x > q.x:
        p, q = q, p
    if q.x <= 0:
        m = (q.y - p.y) / (q.x - p.x)
        return MoultonLine(bend, m, p.y - m * p.x)
    if p.x >= 0:
        mr = (q.y - p.y) / (q.x - p.x)
        m = mr / bend if mr < 0 else mr
        return MoultonLine(bend, m, p.y - mr * p.x)
    # straddling the axis: descending pairs use the bent two-piece solve
    if q.y >= p.y:
        m = (q.y - p.y) / (q.x - p.x)
        return MoultonLine(bend, m, p.y - m * p.x)
    m = (q.y - p.y) / (bend * q.x - p.x)
    return MoultonLine(bend, m, p.y - m * p.x)


def intersect_lines(sys: LineSystem, l1: SystemLine, l2: SystemLine) -> Optional[PlanarPoint]:
    """The unique common carrier point of two distinct lines, or None."""
    if l1 == l2:
        raise CoincidentLines("intersect_lines needs distinct lines")
    if isinstance(sys, EuclideanChords):
        a1, b1, c1 = l1.coeffs
        a2, b2, c2 = l2.coeffs
        den = a1 * b2 - a2 * b1
        if den == 0:
            return None
        x = (b1 * c2 - b2 * c1) / den
        y = (a2 * c1 - a1 * c2) / den
        pt = PlanarPoint(x, y)
        return pt if sys.body.contains(pt) else None
    return _moulton_intersect(l1, l2)


def _moulton_intersect(l1: MoultonLine, l2: MoultonLine) -> Optional[PlanarPoint]:
    if l1.is_vertical and l2.is_vertical:
        return None  # distinct verticals are parallel
    if l1.is_vertical or l2.is_vertical:
        v, g = (l1, l2) if l1.is_vertical else (l2, l1)
        return PlanarPoint(v.offset, g.y_at(v.offset))
    candidates = []
    if l1.slope != l2.slope:
        x = (l2.offset - l1.offset) / (l1.slope - l2.slope)
        if x <= 0:
            candidates.append(PlanarPoint(x, l1.slope * x + l1.offset))
    r1, r2 = l1.right_slope(), l2.right_slope()
    if r1 != r2:
        x = (l2.offset - l1.offset) / (r1 - r2)
        if x >= 0:
            candidates.append(PlanarPoint(x, r1 * x + l1.offset))
    if not candidates:
        return None
    if len(candidates) == 2 and candidates[0] != candidates[1]:
        # impossible for distinct Moulton lines: both pieces crossing once
        raise DegenerateInput("moulton lines intersecting twice")
    return candidates[0]


def line_contains(sys: LineSystem, line: SystemLine, p: PlanarPoint) -> bool:
    return line.contains(p)


def system_collinear(sys: LineSystem, a: PlanarPoint, b: PlanarPoint, c: PlanarPoint) -> bool:
    if (a.x, a.y) == (b.x, b.y) or (a.x, a.y) == (c.x, c.y) or (b.x, b.y) == (c.x, c.y):
        return True
    return line_through(sys, a, b).contains(c)


def _between_on(line: SystemLine, a: PlanarPoint, b: PlanarPoint, r: PlanarPoint,
                strict: bool = False) -> bool:
    """Is r between a and b along the given line (all three incident)?"""
    if isinstance(line, ChordLine):
        return between(a, b, r, strict=strict)
    # Moulton lines are x-monotone graphs, verticals are y-monotone
    if line.is_vertical:
        lo, hi = min(a.y, b.y), max(a.y, b.y)
        return lo < r.y < hi if strict else lo <= r.y <= hi
    lo, hi = min(a.x, b.x), max(a.x, b.x)
    return lo < r.x < hi if strict else lo <= r.x <= hi


def pasch_check(
    sys: LineSystem,
    a: PlanarPoint,
    b: PlanarPoint,
    c: PlanarPoint,
    p: PlanarPoint,
    probe: SystemLine,
) -> bool:
    """Does a line through an interior point of side [a,c] meet [a,b] or [b,c]?

    The defining ordering axiom of two-dimensional line systems: for the
    systems in this package the answer must always be True.
    """
    line_ac = line_through(sys, a, c)
    line_ab = line_through(sys, a, b)
    line_bc = line_through(sys, b, c)
    if line_ab.contains(c):
        raise DegenerateTriangle("triangle vertices lie on one system line")
    if not line_ac.contains(p) or not _between_on(line_ac, a, c, p, strict=True):
        raise DegenerateInput("p must lie strictly between a and c")
    if not probe.contains(p):
        raise DegenerateInput("probe must pass through p")
    if probe == line_ac:
        raise DegenerateInput("probe must differ from the line through a and c")
    for side_line, u, v in ((line_ab, a, b), (line_bc, b, c)):
        if probe == side_line:
            return True
        hit = intersect_lines(sys, probe, side_line)
        if hit is not None and _between_on(side_line, u, v, hit):
            return True
    return False


# -- non-perspectivity witness in the Moulton system -------------------------


@dataclass(frozen=True)
class MoultonWitness:
    """Two Moulton-perspective triangles whose side-line meets are not collinear.

    ``defect`` is the exact signed deviation of the third meet from the
    Moulton line through the first two; it is nonzero by construction.
    The same seven points, read with straight lines, are perspective
    from the same center and have collinear meets.
    """

    bend: Fraction
    center: PlanarPoint
    triangle1: Tuple[PlanarPoint, PlanarPoint, PlanarPoint]
    triangle2: Tuple[PlanarPoint, PlanarPoint, PlanarPoint]
    meets: Tuple[PlanarPoint, PlanarPoint, PlanarPoint]
    defect: Fraction
    candidates_examined: int

    def to_json(self):
        def pt(p):
            return [rat_str(p.x), rat_str(p.y)]

        return {
            "bend": rat_str(self.bend),
            "center": pt(self.center),
            "triangle1": [pt(p) for p in self.triangle1],
            "triangle2": [pt(p) for p in self.triangle2],
            "meets": [pt(p) for p in self.meets],
            "defect": rat_str(self.defect),
            "candidates_examined": self.candidates_examined,
        }


def moulton_collinearity_defect(
    sys: MoultonSystem, i: PlanarPoint, j: PlanarPoint, k: PlanarPoint
) -> Optional[Fraction]:
    """Signed deviation of k from the Moulton line through i and j.

    None when i and j coincide.  For graph lines the deviation is
    measured vertically, for vertical lines horizontally; only the
    zero/nonzero distinction is meaningful across witnesses.
    """
    if (i.x, i.y) == (j.x, j.y):
        return None
    line = line_through(sys, i, j)
    if line.is_vertical:
        return Fraction(k.x) - Fraction(line.offset)
    return Fraction(k.y) - Fraction(line.y_at(k.x))


# Enumeration grid for the witness search: centers, base-triangle heights
# and rational stretch factors, all kept in the open left half-plane so
# that central perspectivity holds simultaneously for bent and straight
# lines.  The heights alternate in sign: side lines of mixed slope are
# what makes the bent meets leave the straight perspectivity axis.
_WITNESS_CENTERS = [(-6, 2), (-6, -2), (-7, 3), (-7, -3), (-8, 4)]
_WITNESS_HEIGHTS = [(-4, 2, -1), (3, -2, 1), (-3, 4, 0), (4, -3, 2), (-2, 3, -4), (2, -4, 3)]
_WITNESS_STRETCH = [
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
    Fraction(4, 3),
    Fraction(3, 2),
]


def moulton_desargues_counterexample(
    bend, budget: int = 500_000
) -> MoultonWitness:
    """Deterministic search for a perspectivity counterexample at the given bend.

    Enumerates the documented rational grid in a fixed order and returns
    the first configuration that is centrally perspective in the Moulton
    system while its three side-line meets fail to be Moulton-collinear.
    """
    bend = Fraction(bend)
    if bend == 1:
        raise DegenerateInput("bend factor 1 gives the straight system")
    sys = MoultonSystem(bend)
    examined = 0
    base_x = (Fraction(-5), Fraction(-3), Fraction(-2))
    for (ox, oy), heights, stretches in itertools.product(
        _WITNESS_CENTERS,
        _WITNESS_HEIGHTS,
        itertools.product(_WITNESS_STRETCH, repeat=3),
    ):
        examined += 1
        if examined > budget:
            raise SearchExhausted(f"no witness within {budget} candidates")
        o = PlanarPoint(Fraction(ox), Fraction(oy))
        tri1 = tuple(
            PlanarPoint(x, Fraction(h)) for x, h in zip(base_x, heights)
        )
        if orient(*tri1) == 0:
            continue
        tri2 = tuple(o + (v - o) * lam for v, lam in zip(tri1, stretches))
        if orient(*tri2) == 0:
            continue
        if any((u.x, u.y) == (v.x, v.y) for u, v in zip(tri1, tri2)):
            continue
        if any(v.x >= 0 for v in tri2):
            continue
        witness = _check_witness(sys, o, tri1, tri2, examined)
        if witness is not None:
            return witness
    raise SearchExhausted("witness grid exhausted")


def _check_witness(sys, o, tri1, tri2, examined) -> Optional[MoultonWitness]:
    a1, b1, c1 = tri1
    a2, b2, c2 = tri2
    # exact central perspectivity through the Moulton connector lines
    for v1, v2 in zip(tri1, tri2):
        if not line_through(sys, v1, v2).contains(o):
            return None
    pairs = ((a1, b1, a2, b2), (a1, c1, a2, c2), (b1, c1, b2, c2))
    meets = []
    for u1, v1, u2, v2 in pairs:
        s1 = line_through(sys, u1, v1)
        s2 = line_through(sys, u2, v2)
        if s1 == s2:
            return None
        m = intersect_lines(sys, s1, s2)
        if m is None:
            return None
        meets.append(m)
    i, j, k = meets
    defect = moulton_collinearity_defect(sys, i, j, k)
    if defect is None or defect == 0:
        return None
    return MoultonWitness(
        bend=sys.bend,
        center=o,
        triangle1=tri1,
        triangle2=tri2,
        meets=(i, j, k),
        defect=defect,
        candidates_examined=examined,
    )
