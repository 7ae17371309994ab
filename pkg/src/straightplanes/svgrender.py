"""Deterministic SVG figures: perspectivity configurations, quadrangles,
nets, Moulton witnesses and the triangle-comparison chart.

Output is byte-identical for a fixed spec: world coordinates are mapped
through one computed transform and every number is printed with a fixed
format.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import List, Optional, Sequence, Tuple

from . import randgen
from .bodies import Disk
from .constructions import BaseQuadrilateral, PaschMap, build_harmonic_net, pasch_phi
from .errors import NothingToRender
from .linesystems import MoultonLine, MoultonSystem, line_through, moulton_desargues_counterexample
from .metric import HilbertPlane, EuclideanPlane, plane_from_json
from .planar import PlanarPoint
from .projective import ProjPoint, axis_points, desargues_verdict, harmonic_conjugate_quadrangle, join, meet


def _fmt(v: float) -> str:
    return f"{v:.4f}"


class _Canvas:
    """Collects world-coordinate primitives, emits one standalone SVG."""

    def __init__(self, width: int = 720, height: int = 560, margin: float = 48.0):
        self.width = width
        self.height = height
        self.margin = margin
        self.points: List[Tuple[float, float, str, str]] = []
        self.lines: List[Tuple[List[Tuple[float, float]], str]] = []
        self.circles: List[Tuple[float, float, float, str]] = []
        self._bounds: Optional[List[float]] = None

    def _see(self, x: float, y: float):
        if self._bounds is None:
            self._bounds = [x, y, x, y]
        else:
            b = self._bounds
            b[0], b[1] = min(b[0], x), min(b[1], y)
            b[2], b[3] = max(b[2], x), max(b[3], y)

    def add_point(self, p: PlanarPoint, label: str = "", cls: str = "pt"):
        x, y = float(p.x), float(p.y)
        self._see(x, y)
        self.points.append((x, y, label, cls))

    def add_polyline(self, pts: Sequence[PlanarPoint], cls: str = "line"):
        coords = [(float(p.x), float(p.y)) for p in pts]
        for x, y in coords:
            self._see(x, y)
        self.lines.append((coords, cls))

    def add_segment(self, p: PlanarPoint, q: PlanarPoint, cls: str = "line"):
        self.add_polyline([p, q], cls)

    def add_circle(self, center: PlanarPoint, radius: float, cls: str = "outline"):
        cx, cy = float(center.x), float(center.y)
        self._see(cx - radius, cy - radius)
        self._see(cx + radius, cy + radius)
        self.circles.append((cx, cy, radius, cls))

    def emit(self, title: str) -> str:
        if self._bounds is None:
            raise NothingToRender("empty canvas")
        x0, y0, x1, y1 = self._bounds
        spanx = max(x1 - x0, 1e-9)
        spany = max(y1 - y0, 1e-9)
        scale = min(
            (self.width - 2 * self.margin) / spanx,
            (self.height - 2 * self.margin) / spany,
        )

        def tx(x: float) -> float:
            return self.margin + (x - x0) * scale

        def ty(y: float) -> float:
            return self.height - self.margin - (y - y0) * scale

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">',
            f"<title>{title}</title>",
            "<style>"
            ".line{stroke:#333;stroke-width:1.1;fill:none}"
            ".axis{stroke:#a33;stroke-width:1.6;fill:none}"
            ".aux{stroke:#888;stroke-width:0.8;stroke-dasharray:4 3;fill:none}"
            ".outline{stroke:#58a;stroke-width:1.2;fill:none}"
            ".pt{fill:#111}"
            ".net-point{fill:#246}"
            ".model-pt{fill:#a33}"
            "text{font-family:monospace;font-size:10px;fill:#222}"
            "</style>",
            f'<rect width="{self.width}" height="{self.height}" fill="#fff"/>',
        ]
        for cx, cy, r, cls in self.circles:
            out.append(
                f'<circle class="{cls}" cx="{_fmt(tx(cx))}" cy="{_fmt(ty(cy))}" '
                f'r="{_fmt(r * scale)}"/>'
            )
        for coords, cls in self.lines:
            pts = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in coords)
            out.append(f'<polyline class="{cls}" points="{pts}"/>')
        for x, y, label, cls in self.points:
            out.append(
                f'<circle class="{cls}" cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="2.4"/>'
            )
            if label:
                out.append(
                    f'<text x="{_fmt(tx(x) + 4.0)}" y="{_fmt(ty(y) - 4.0)}">{label}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _proj_to_planar(p: ProjPoint) -> Optional[PlanarPoint]:
    aff = p.to_affine()
    if aff is None:
        return None
    return PlanarPoint(float(aff[0]), float(aff[1]))


def render_desargues(seed: int = 7) -> str:
    """A random rational perspectivity configuration: 10 points, 10 lines."""
    rng = Random(seed)
    while True:
        t1, t2, center = randgen.perspective_pair(rng)
        verdict = desargues_verdict(t1, t2)
        if verdict.degenerate or not verdict.perspective_from_line:
            continue
        i, j, k = axis_points(t1, t2)
        pts = [center, i, j, k, *t1, *t2]
        planar = [_proj_to_planar(p) for p in pts]
        if any(p is None for p in planar):
            continue
        span = max(abs(v) for p in planar for v in (p.x, p.y))
        if span < 1e3:  # keep the figure readable
            break
    canvas = _Canvas()
    o, ip, jp, kp = planar[:4]
    a1, b1, c1 = planar[4:7]
    a2, b2, c2 = planar[7:10]
    for tri in ((a1, b1, c1), (a2, b2, c2)):
        canvas.add_polyline([*tri, tri[0]], cls="line")
    for v1, v2 in zip((a1, b1, c1), (a2, b2, c2)):
        canvas.add_segment(o, v1 if (v1 - o).norm() > (v2 - o).norm() else v2, cls="aux")
    for corner_pair, target in (((a1, b1), ip), ((a1, c1), jp), ((b1, c1), kp)):
        canvas.add_segment(corner_pair[0], target, cls="aux")
        canvas.add_segment(corner_pair[1], target, cls="aux")
    canvas.add_segment(ip, jp, cls="axis")
    canvas.add_segment(jp, kp, cls="axis")
    for p, lbl in (
        (a1, "A"), (b1, "B"), (c1, "C"),
        (a2, "A'"), (b2, "B'"), (c2, "C'"),
        (o, "O"), (ip, "I"), (jp, "J"), (kp, "K"),
    ):
        canvas.add_point(p, lbl)
    return canvas.emit(f"perspectivity configuration (seed {seed})")


def render_quadrangle(seed: int = 7) -> str:
    """The complete-quadrangle construction of a harmonic conjugate."""
    rng = Random(seed)
    while True:
        a = ProjPoint.affine(0, 0)
        b = ProjPoint.affine(randgen.rational_in(rng, 1.0, 3.0), 0)
        p = ProjPoint.affine(randgen.rational_in(rng, 4.0, 7.0), 0)
        z = ProjPoint.affine(
            randgen.rational_in(rng, 0.5, 3.0), randgen.rational_in(rng, 2.0, 4.0)
        )
        lam = randgen.rational_in(rng, 0.3, 0.7)
        za = z.to_affine()
        x = ProjPoint.affine(Fraction(za[0]) * lam, Fraction(za[1]) * lam)
        try:
            y = meet(join(p, x), join(b, z))
            w = meet(join(x, b), join(y, a))
            q = harmonic_conjugate_quadrangle(a, b, p, z, x)
        except Exception:
            continue
        pts = [_proj_to_planar(v) for v in (a, b, p, z, x, y, w, q)]
        if all(v is not None for v in pts):
            break
    pa, pb, pp, pz, px, py, pw, pq = pts
    canvas = _Canvas()
    canvas.add_segment(pa, pp, cls="line")  # the base line through A, B, P, Q
    for seg in ((pa, pz), (pb, pz), (pp, px), (px, pb), (py, pa), (pz, pq)):
        canvas.add_segment(*seg, cls="aux")
    for p_, lbl in (
        (pa, "A"), (pb, "B"), (pp, "P"), (pz, "Z"),
        (px, "X"), (py, "Y"), (pw, "W"), (pq, "Q"),
    ):
        canvas.add_point(p_, lbl)
    return canvas.emit(f"harmonic conjugate via complete quadrangle (seed {seed})")


def render_net(depth: int = 3, plane_spec: Optional[dict] = None,
               base_corners: Optional[list] = None) -> str:
    """All net points of a base quadrilateral, labeled by dyadic address."""
    if plane_spec is None:
        plane = EuclideanPlane()
    else:
        plane = plane_from_json(plane_spec)
    if base_corners is None:
        if plane.kind in ("hilbert_weak", "projective_sum"):
            corners = [
                PlanarPoint(-0.5, -0.5), PlanarPoint(0.5, -0.5),
                PlanarPoint(0.5, 0.5), PlanarPoint(-0.5, 0.5),
            ]
        else:
            corners = [
                PlanarPoint(Fraction(0), Fraction(0)), PlanarPoint(Fraction(1), Fraction(0)),
                PlanarPoint(Fraction(1), Fraction(1)), PlanarPoint(Fraction(0), Fraction(1)),
            ]
    else:
        corners = [PlanarPoint.from_json(c) for c in base_corners]
    base = BaseQuadrilateral(*corners)
    net = build_harmonic_net(plane, base, depth)
    canvas = _Canvas()
    if plane.kind in ("hilbert_weak", "projective_sum") and isinstance(plane.domain, Disk):
        canvas.add_circle(plane.domain.center, float(plane.domain.radius))
    cs = base.corners()
    canvas.add_polyline([*cs, cs[0]], cls="line")
    for label, pt in net.sorted_items():
        canvas.add_point(pt.as_float(), label.key(), cls="net-point")
    return canvas.emit(f"harmonic net, depth {depth} ({len(net)} points)")


def _moulton_polyline(line: MoultonLine, xmin: float, xmax: float,
                      ymin: float, ymax: float) -> List[PlanarPoint]:
    if line.is_vertical:
        x = float(line.offset)
        return [PlanarPoint(x, ymin), PlanarPoint(x, ymax)]
    pts = [PlanarPoint(xmin, float(line.y_at(Fraction(xmin))))]
    if float(line.slope) < 0 and xmin < 0 < xmax:
        pts.append(PlanarPoint(0.0, float(line.offset)))
    pts.append(PlanarPoint(xmax, float(line.y_at(Fraction(xmax)))))
    return pts


def render_moulton(bend="2/1") -> str:
    """The witness configuration with its bent side lines drawn piecewise."""
    witness = moulton_desargues_counterexample(Fraction(bend))
    sys = MoultonSystem(witness.bend)
    pts = [witness.center, *witness.triangle1, *witness.triangle2, *witness.meets]
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    xmin, xmax = min(xs) - 0.8, max(xs) + 0.8
    ymin, ymax = min(ys) - 0.8, max(ys) + 0.8
    canvas = _Canvas()
    canvas.add_segment(PlanarPoint(0.0, ymin), PlanarPoint(0.0, ymax), cls="aux")
    a1, b1, c1 = witness.triangle1
    a2, b2, c2 = witness.triangle2
    for u, v in ((a1, b1), (a1, c1), (b1, c1), (a2, b2), (a2, c2), (b2, c2)):
        line = line_through(sys, u, v)
        canvas.add_polyline(_moulton_polyline(line, xmin, xmax, ymin, ymax), cls="line")
    for v1, v2 in zip(witness.triangle1, witness.triangle2):
        line = line_through(sys, v1, v2)
        canvas.add_polyline(_moulton_polyline(line, xmin, xmax, ymin, ymax), cls="aux")
    i, j, k = witness.meets
    axis_line = line_through(sys, i, j)
    canvas.add_polyline(_moulton_polyline(axis_line, xmin, xmax, ymin, ymax), cls="axis")
    for p, lbl in (
        (witness.center.as_float(), "O"),
        (a1.as_float(), "A"), (b1.as_float(), "B"), (c1.as_float(), "C"),
        (a2.as_float(), "A'"), (b2.as_float(), "B'"), (c2.as_float(), "C'"),
        (i.as_float(), "I"), (j.as_float(), "J"), (k.as_float(), "K"),
    ):
        canvas.add_point(p, lbl)
    return canvas.emit(f"moulton witness, bend {witness.bend}, defect {witness.defect}")


def render_phi(seed: int = 7, samples: int = 40) -> str:
    """Model triangle and its metric image under the comparison chart."""
    rng = Random(seed)
    plane = HilbertPlane(Disk(PlanarPoint(0.0, 0.0), 1.0))
    a = PlanarPoint(-0.4, -0.3)
    b = PlanarPoint(0.5, -0.2)
    c = PlanarPoint(0.0, 0.45)
    p = a + (c - a) * 0.35
    pm = PaschMap.build(plane, a, b, c, p)
    shift = PlanarPoint(2.6, 0.0)  # draw the model panel to the right

    canvas = _Canvas()
    canvas.add_circle(PlanarPoint(0.0, 0.0), 1.0)
    canvas.add_polyline([a, b, c, a], cls="line")
    canvas.add_polyline(
        [pm.A + shift, pm.B + shift, pm.C + shift, pm.A + shift], cls="line"
    )
    for pt, lbl in ((a, "a"), (b, "b"), (c, "c"), (p, "p")):
        canvas.add_point(pt, lbl)
    for pt, lbl in ((pm.A, "A"), (pm.B, "B"), (pm.C, "C"), (pm.P, "P")):
        canvas.add_point(pt + shift, lbl, cls="model-pt")
    for _ in range(samples):
        q_model = PlanarPoint(rng.uniform(-0.6, 2.2), rng.uniform(-1.0, 1.6))
        if (q_model - pm.P).norm() < 1e-3:
            continue
        image = pasch_phi(pm, q_model)
        if image.norm() > 0.97:
            continue
        canvas.add_point(q_model + shift, "", cls="model-pt")
        canvas.add_point(image, "", cls="net-point")
    return canvas.emit(f"triangle comparison chart (seed {seed})")


SCENES = {
    "desargues": lambda spec: render_desargues(seed=spec.get("seed", 7)),
    "quadrangle": lambda spec: render_quadrangle(seed=spec.get("seed", 7)),
    "net": lambda spec: render_net(
        depth=spec.get("depth", 3),
        plane_spec=spec.get("plane"),
        base_corners=spec.get("base"),
    ),
    "moulton": lambda spec: render_moulton(bend=spec.get("bend", "2/1")),
    "phi": lambda spec: render_phi(seed=spec.get("seed", 7), samples=spec.get("samples", 40)),
}


def render_svg(spec: dict) -> str:
    scene = spec.get("scene")
    if scene not in SCENES:
        raise NothingToRender(f"no renderable scene named {scene!r}")
    return SCENES[scene](spec)
