"""Dual-kernel plane geometry engine.

An exact projective incidence kernel over arbitrary-precision rationals
sits next to numeric metric planes (Euclidean, Minkowski gauges, weak
Hilbert and the chord-projective sum) on convex carriers.  Synthetic
constructions (harmonic conjugates, dyadic nets, the square and
triangle comparison charts) run on the metric side and are verified
against the exact kernel by the bundled property suites.
"""

from .bodies import (
    ConvexBody,
    Disk,
    Ellipse,
    GaugeBody,
    Polygon,
    Strip,
    body_from_json,
    chord_boundary_intersection,
)
from .constructions import (
    BaseQuadrilateral,
    HarmonicDivision,
    HarmonicNet,
    NetLabel,
    PaschMap,
    build_harmonic_net,
    harmonic_division,
    metric_harmonic_conjugate,
    pasch_phi,
    pasch_phi_preimage,
    psi_extend,
    psi_extend_samples,
    psi_map,
)
from .linesystems import (
    ChordLine,
    EuclideanChords,
    LineSystem,
    MoultonLine,
    MoultonSystem,
    MoultonWitness,
    intersect_lines,
    line_through,
    moulton_desargues_counterexample,
    pasch_check,
    system_from_json,
)
from .metric import (
    EuclideanPlane,
    GeodesicLine,
    HilbertPlane,
    MinkowskiPlane,
    ProjectiveSumPlane,
    StraightPlane,
    geodesic_through,
    hilbert_distance,
    line_line_meet,
    metric_distance,
    plane_from_json,
)
from .planar import PlanarPoint
from .projective import (
    INFINITY,
    DesarguesVerdict,
    ProjLine,
    ProjPoint,
    Quadrangle,
    collinear,
    cross_ratio,
    desargues_verdict,
    harmonic_conjugate_algebraic,
    harmonic_conjugate_quadrangle,
    incident,
    join,
    meet,
)
from .report import ConfigReport

__version__ = "0.1.0"
