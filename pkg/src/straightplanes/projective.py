"""Exact projective plane over arbitrary-precision rationals.

Points and lines are homogeneous rational triples in a canonical form
(first nonzero coordinate scaled to 1), so projective equality is plain
field equality.  Every operation is exact: no rounding happens anywhere
in this module.  This kernel is the ground truth against which the
numeric constructions are checked.

Ideal points (h2 = 0) are ordinary values here; there is no separate
code path for parallels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateAuxiliary,
    DegenerateInput,
    NotCollinear,
    UndefinedCrossRatio,
)
from .planar import rat_str

Rat = Fraction


class _Infinity:
    """Sentinel for an infinite cross-ratio value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"


INFINITY = _Infinity()


def _canonical(h: Sequence[Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
    h = tuple(Fraction(v) for v in h)
    for v in h:
        if v != 0:
            return tuple(u / v for u in h)  # type: ignore[return-value]
    raise DegenerateInput("homogeneous triple must not be all zero")


def _cross3(a, b) -> Tuple[Fraction, Fraction, Fraction]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@dataclass(frozen=True)
class ProjPoint:
    """Projective point (h0 : h1 : h2), canonicalized on construction."""

    h0: Fraction
    h1: Fraction
    h2: Fraction

    def __post_init__(self):
        c = _canonical((self.h0, self.h1, self.h2))
        object.__setattr__(self, "h0", c[0])
        object.__setattr__(self, "h1", c[1])
        object.__setattr__(self, "h2", c[2])

    @classmethod
    def affine(cls, x, y) -> "ProjPoint":
        return cls(Fraction(x), Fraction(y), Fraction(1))

    @classmethod
    def ideal(cls, dx, dy) -> "ProjPoint":
        return cls(Fraction(dx), Fraction(dy), Fraction(0))

    @property
    def is_ideal(self) -> bool:
        return self.h2 == 0

    def coords(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.h0, self.h1, self.h2)

    def to_affine(self) -> Optional[Tuple[Fraction, Fraction]]:
        if self.is_ideal:
            return None
        return (self.h0 / self.h2, self.h1 / self.h2)

    def to_json(self):
        return [rat_str(self.h0), rat_str(self.h1), rat_str(self.h2)]

    @classmethod
    def from_json(cls, data) -> "ProjPoint":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise TypeError("projective point JSON must be a triple of rational strings")
        return cls(*(Fraction(s) for s in data))

    def __repr__(self):
        return f"ProjPoint({self.h0}:{self.h1}:{self.h2})"


@dataclass(frozen=True)
class ProjLine:
    """Projective line [l0 : l1 : l2]; a point p lies on it iff l . p = 0."""

    l0: Fraction
    l1: Fraction
    l2: Fraction

    def __post_init__(self):
        c = _canonical((self.l0, self.l1, self.l2))
        object.__setattr__(self, "l0", c[0])
        object.__setattr__(self, "l1", c[1])
        object.__setattr__(self, "l2", c[2])

    def coords(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.l0, self.l1, self.l2)

    def to_json(self):
        return [rat_str(self.l0), rat_str(self.l1), rat_str(self.l2)]

    @classmethod
    def from_json(cls, data) -> "ProjLine":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise TypeError("projective line JSON must be a triple of rational strings")
        return cls(*(Fraction(s) for s in data))

    def __repr__(self):
        return f"ProjLine[{self.l0}:{self.l1}:{self.l2}]"


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if p == q:
        raise CoincidentPoints(f"join of a point with itself: {p}")
    return ProjLine(*_cross3(p.coords(), q.coords()))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines."""
    if l == m:
        raise CoincidentLines(f"meet of a line with itself: {l}")
    return ProjPoint(*_cross3(l.coords(), m.coords()))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    a, b = p.coords(), l.coords()
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] == 0


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Exact vanishing of the 3x3 determinant of homogeneous coordinates."""
    a, b, c = p.coords(), q.coords(), r.coords()
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return det == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    a, b, c = l.coords(), m.coords(), n.coords()
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return det == 0


def _line_parameters(a: ProjPoint, b: ProjPoint, x: ProjPoint) -> Tuple[Fraction, Fraction]:
    """Coefficients (lam, mu) with x ~ lam*a + mu*b, for x on line ab.

    a and b must be distinct; the pair is unique up to common scale.
    """
    av, bv, xv = a.coords(), b.coords(), x.coords()
    for i in range(3):
        for j in range(i + 1, 3):
            det = av[i] * bv[j] - av[j] * bv[i]
            if det != 0:
                lam = (xv[i] * bv[j] - xv[j] * bv[i]) / det
                mu = (av[i] * xv[j] - av[j] * xv[i]) / det
                return lam, mu
    raise CoincidentPoints("parametrization base points coincide")


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint):
    """Cross-ratio (a,b;c,d) of four points on a common line.

    In any affine parameter t of the line the value is
    ((t_c - t_a)(t_d - t_b)) / ((t_c - t_b)(t_d - t_a)); it does not
    depend on the parametrization.  Returns an exact Fraction, or
    INFINITY when the denominator vanishes.  The harmonic position is
    the value -1.
    """
    if a == b:
        raise DegenerateInput("cross_ratio needs distinct base points a, b")
    line = join(a, b)
    if not (incident(c, line) and incident(d, line)):
        raise NotCollinear("cross_ratio arguments must lie on one line")
    params = [_line_parameters(a, b, x) for x in (a, b, c, d)]

    def det2(u, v):
        # parameters as projective coordinates (mu : lam); affine value mu/lam
        return u[1] * v[0] - v[1] * u[0]

    pa, pb, pc, pd = params
    num = det2(pc, pa) * det2(pd, pb)
    den = det2(pc, pb) * det2(pd, pa)
    if den != 0:
        return num / den
    if num != 0:
        return INFINITY
    raise UndefinedCrossRatio("cross_ratio undefined for this coincidence pattern")


def harmonic_conjugate_algebraic(a: ProjPoint, b: ProjPoint, p: ProjPoint) -> ProjPoint:
    """The point q with cross_ratio(a, b, p, q) = -1, computed in closed form.

    Writing p ~ lam*a + mu*b, the conjugate is lam*a - mu*b.
    """
    if a == b or p == a or p == b:
        raise DegenerateInput("harmonic conjugate needs three distinct collinear points")
    if not incident(p, join(a, b)):
        raise NotCollinear("p must lie on line ab")
    lam, mu = _line_parameters(a, b, p)
    av, bv = a.coords(), b.coords()
    q = tuple(lam * av[i] - mu * bv[i] for i in range(3))
    return ProjPoint(*q)


@dataclass(frozen=True)
class Quadrangle:
    """Complete quadrangle: four points, no three collinear, six side lines."""

    x: ProjPoint
    y: ProjPoint
    z: ProjPoint
    w: ProjPoint

    def __post_init__(self):
        pts = (self.x, self.y, self.z, self.w)
        if len(set(pts)) < 4:
            raise DegenerateInput("quadrangle vertices must be distinct")
        for i in range(4):
            trio = [pts[j] for j in range(4) if j != i]
            if collinear(*trio):
                raise DegenerateInput("no three quadrangle vertices may be collinear")

    def vertices(self) -> Tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint]:
        return (self.x, self.y, self.z, self.w)

    def side_lines(self) -> Tuple[ProjLine, ...]:
        pts = self.vertices()
        return tuple(
            join(pts[i], pts[j]) for i in range(4) for j in range(i + 1, 4)
        )


def harmonic_conjugate_quadrangle(
    a: ProjPoint, b: ProjPoint, p: ProjPoint, z: ProjPoint, x: ProjPoint
) -> ProjPoint:
    """Harmonic conjugate of p w.r.t. a, b via a complete quadrangle.

    The auxiliary z must avoid line ab and x must lie on line az
    (distinct from both).  The construction meets the four-point figure:
    y = px . bz, w = xb . ya, and the conjugate is ab . wz.  Its result
    does not depend on the admissible choice of (z, x).
    """
    if a == b or p == a or p == b:
        raise DegenerateInput("need three distinct collinear base points")
    base = join(a, b)
    if not incident(p, base):
        raise NotCollinear("p must lie on line ab")
    if incident(z, base):
        raise DegenerateAuxiliary("auxiliary z must avoid line ab")
    if x == a or x == z or not incident(x, join(a, z)):
        raise DegenerateAuxiliary("auxiliary x must lie on line az, distinct from a and z")
    try:
        y = meet(join(p, x), join(b, z))
        w = meet(join(x, b), join(y, a))
        Quadrangle(x, y, z, w)  # the four auxiliary points really form one
        q = meet(base, join(w, z))
    except (CoincidentPoints, CoincidentLines, DegenerateInput) as exc:
        raise DegenerateAuxiliary(f"quadrangle construction degenerated: {exc}") from exc
    return q


@dataclass(frozen=True)
class DesarguesVerdict:
    """Outcome of testing a pair of triangles for central/axial perspectivity.

    For non-degenerate input the two flags agree on every rational
    configuration; asserting that equality is the whole point of the
    randomized suites.
    """

    perspective_from_point: bool
    center: Optional[ProjPoint]
    perspective_from_line: bool
    axis: Optional[ProjLine]
    degenerate: bool = False
    reason: str = ""

    def to_json(self):
        return {
            "perspective_from_point": self.perspective_from_point,
            "center": self.center.to_json() if self.center else None,
            "perspective_from_line": self.perspective_from_line,
            "axis": self.axis.to_json() if self.axis else None,
            "degenerate": self.degenerate,
            "reason": self.reason,
        }


Triangle = Tuple[ProjPoint, ProjPoint, ProjPoint]


def _degenerate_verdict(reason: str) -> DesarguesVerdict:
    return DesarguesVerdict(False, None, False, None, degenerate=True, reason=reason)


def desargues_verdict(t1: Triangle, t2: Triangle) -> DesarguesVerdict:
    """Test two triangles for a center and an axis of perspectivity.

    Degenerate input (collinear triple, shared corresponding vertex,
    coincident corresponding side-line) yields a tagged degenerate
    verdict rather than an error, so randomized suites can count and
    skip such cases.
    """
    a1, b1, c1 = t1
    a2, b2, c2 = t2
    if collinear(a1, b1, c1) or collinear(a2, b2, c2):
        return _degenerate_verdict("collinear vertex triple")
    if a1 == a2 or b1 == b2 or c1 == c2:
        return _degenerate_verdict("shared corresponding vertex")

    sides1 = (join(a1, b1), join(a1, c1), join(b1, c1))
    sides2 = (join(a2, b2), join(a2, c2), join(b2, c2))
    if any(s1 == s2 for s1, s2 in zip(sides1, sides2)):
        return _degenerate_verdict("coincident corresponding side-lines")

    connectors = (join(a1, a2), join(b1, b2), join(c1, c2))
    distinct = []
    for ln in connectors:
        if ln not in distinct:
            distinct.append(ln)
    if len(distinct) == 1:
        # all six vertices on one line; unreachable past the collinearity check
        return _degenerate_verdict("all connectors coincide")
    if len(distinct) == 2:
        center = meet(distinct[0], distinct[1])
        from_point = True
    else:
        center = meet(connectors[0], connectors[1])
        from_point = incident(center, connectors[2])
        if not from_point:
            center = None

    i = meet(sides1[0], sides2[0])
    j = meet(sides1[1], sides2[1])
    k = meet(sides1[2], sides2[2])
    from_line = collinear(i, j, k)
    axis = None
    if from_line:
        if i != j:
            axis = join(i, j)
        elif i != k:
            axis = join(i, k)
        # i == j == k: every line through the common point fits; leave axis unset
    return DesarguesVerdict(from_point, center, from_line, axis)


def axis_points(t1: Triangle, t2: Triangle) -> Tuple[ProjPoint, ProjPoint, ProjPoint]:
    """The three meets of corresponding side-lines (the axis candidates)."""
    a1, b1, c1 = t1
    a2, b2, c2 = t2
    return (
        meet(join(a1, b1), join(a2, b2)),
        meet(join(a1, c1), join(a2, c2)),
        meet(join(b1, c1), join(b2, c2)),
    )


def apply_matrix(m: Sequence[Sequence[Fraction]], p: ProjPoint) -> ProjPoint:
    """Apply a 3x3 rational matrix to a point (used for invariance tests)."""
    v = p.coords()
    out = tuple(sum(Fraction(m[r][c]) * v[c] for c in range(3)) for r in range(3))
    return ProjPoint(*out)


def projective_map_from_unit_square(
    a: ProjPoint, b: ProjPoint, y: ProjPoint, x: ProjPoint
):
    """Exact evaluator for the projective map sending the unit square to a,b,y,x.

    Corners map as (0,0) -> a, (1,0) -> b, (1,1) -> y, (0,1) -> x.  Returns
    a function label -> ProjPoint taking exact rational (alpha, beta).
    Requires the four target points in general position.
    """
    av, bv, xv, yv = a.coords(), b.coords(), x.coords(), y.coords()
    # In label space (1,1,1) = (1,0,1) + (0,1,1) - (0,0,1), so we need
    # weights with y = wb*b + wx*x + wa*a and the a-column entering with
    # the opposite sign in the evaluator below.  Solved exactly by Cramer.
    cols = (bv, xv, av)

    def det3(c0, c1, c2):
        return (
            c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
            - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
            + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
        )

    d = det3(*cols)
    if d == 0:
        raise DegenerateInput("quadrilateral corners are not in general position")
    wb = det3(yv, cols[1], cols[2]) / d
    wx = det3(cols[0], yv, cols[2]) / d
    wa = det3(cols[0], cols[1], yv) / d
    if wb == 0 or wx == 0 or wa == 0:
        raise DegenerateInput("three of the four corners are collinear")

    def at(alpha, beta) -> ProjPoint:
        al, be = Fraction(alpha), Fraction(beta)
        coeff_b, coeff_x, coeff_a = al * wb, be * wx, -(1 - al - be) * wa
        v = tuple(coeff_b * bv[i] + coeff_x * xv[i] + coeff_a * av[i] for i in range(3))
        return ProjPoint(*v)

    return at
