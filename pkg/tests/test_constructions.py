"""Synthetic constructions: harmonic division, nets, the two charts."""

import math
import random
from fractions import Fraction as F

import pytest

from straightplanes.bodies import Disk
from straightplanes.constructions import (
    BaseQuadrilateral,
    NetLabel,
    PaschMap,
    build_harmonic_net,
    harmonic_division,
    metric_harmonic_conjugate,
    pasch_phi,
    pasch_phi_preimage,
    pasch_phi_ratios,
    psi_extend,
    psi_extend_samples,
    psi_map,
)
from straightplanes.errors import (
    DegenerateInput,
    DegenerateQuadrilateral,
    ModelDegenerate,
    NoAdmissibleSecants,
    NoFiniteConjugate,
    OutsideHull,
)
from straightplanes.metric import EuclideanPlane, HilbertPlane, metric_distance
from straightplanes.planar import PlanarPoint as P
from straightplanes.projective import (
    ProjPoint,
    cross_ratio,
    projective_map_from_unit_square,
)

UNIT_SQUARE = BaseQuadrilateral(
    P(F(0), F(0)), P(F(1), F(0)), P(F(1), F(1)), P(F(0), F(1))
)
SKEW_QUAD = BaseQuadrilateral(
    P(F(0), F(0)), P(F(2), F(0)), P(F(3), F(2)), P(F(-1), F(1))
)


def disk_base():
    return BaseQuadrilateral(
        P(-0.5, -0.5), P(0.5, -0.5), P(0.5, 0.5), P(-0.5, 0.5)
    )


# -- harmonic division -----------------------------------------------------------

def test_unit_square_division_exact(euclid):
    div = harmonic_division(euclid, UNIT_SQUARE)
    assert div.w == P(F(1, 2), F(1, 2))
    assert div.q == P(F(1, 2), F(0))
    assert div.s == P(F(1), F(1, 2))
    assert div.t == P(F(1, 2), F(1))
    assert div.u == P(F(0), F(1, 2))
    assert div.variant == "z:ideal,p:ideal"


def test_division_harmonic_quadruples_exact(euclid):
    """wpus, xypt, zwtq and xauz are harmonic quadruples (exact rationals)."""
    div = harmonic_division(euclid, SKEW_QUAD)
    z, p = div.z_point, div.p_point
    assert z is not None and p is not None

    def pp(pt):
        return ProjPoint.affine(pt.x, pt.y)

    quadruples = (
        (div.w, p, div.u, div.s),
        (SKEW_QUAD.x, SKEW_QUAD.y, p, div.t),
        (z, div.w, div.t, div.q),
        (SKEW_QUAD.x, SKEW_QUAD.a, div.u, z),
    )
    for a, b, c, d in quadruples:
        assert cross_ratio(pp(a), pp(b), pp(c), pp(d)) == F(-1)


def test_division_in_hilbert_disk_matches_affine_construction(disk_plane):
    base = disk_base()
    div = harmonic_division(disk_plane, base)
    assert abs(div.w.x) <= 1e-9 and abs(div.w.y) <= 1e-9
    assert abs(div.q.x) <= 1e-9 and abs(div.q.y + 0.5) <= 1e-9
    assert abs(div.s.x - 0.5) <= 1e-9 and abs(div.s.y) <= 1e-9


def test_degenerate_base_rejected():
    with pytest.raises(DegenerateQuadrilateral):
        BaseQuadrilateral(P(F(0), F(0)), P(F(1), F(0)), P(F(2), F(0)), P(F(0), F(1)))


# -- nets -------------------------------------------------------------------------

def test_depth2_net_on_unit_square_is_exact_dyadic_grid(euclid):
    net = build_harmonic_net(euclid, UNIT_SQUARE, 2)
    assert len(net) == 25
    for m in range(5):
        for n in range(5):
            assert net.point(NetLabel(m, n, 2)) == P(F(m, 4), F(n, 4))
    assert net.consistency_dev == 0.0


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_net_point_count(euclid, depth):
    net = build_harmonic_net(euclid, SKEW_QUAD, depth)
    assert len(net) == (2 ** depth + 1) ** 2


def test_skew_net_matches_projective_oracle_exactly(euclid):
    net = build_harmonic_net(euclid, SKEW_QUAD, 3)
    oracle = projective_map_from_unit_square(
        ProjPoint.affine(0, 0),
        ProjPoint.affine(2, 0),
        ProjPoint.affine(3, 2),
        ProjPoint.affine(-1, 1),
    )
    for label, pt in net.points.items():
        assert oracle(label.alpha, label.beta).to_affine() == (pt.x, pt.y)


def test_disk_net_matches_affine_oracle(disk_plane):
    base = disk_base()
    net = build_harmonic_net(disk_plane, base, 4)
    assert len(net) == 289
    worst = 0.0
    for label, pt in net.points.items():
        ex = P(-0.5 + float(label.alpha), -0.5 + float(label.beta))
        worst = max(worst, (pt - ex).norm())
    assert worst <= 1e-8
    assert net.consistency_dev <= 1e-8


def test_net_label_lowest_terms_dedup():
    assert NetLabel(2, 4, 3) == NetLabel(1, 2, 2)
    assert NetLabel(0, 0, 5) == NetLabel(0, 0, 0)
    assert NetLabel(3, 1, 2).key() == "3/4,1/4"
    with pytest.raises(DegenerateInput):
        NetLabel(9, 0, 3)


def test_net_exports(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 1)
    data = net.to_json()
    assert data["depth"] == 1
    assert set(data["points"]) == {
        "0/1,0/1", "1/1,0/1", "1/1,1/1", "0/1,1/1",
        "1/2,1/2", "1/2,0/1", "1/1,1/2", "1/2,1/1", "0/1,1/2",
    }
    rows = list(net.to_csv_rows())
    assert rows[0] == ("alpha", "beta", "x", "y")
    assert len(rows) == 10


# -- psi --------------------------------------------------------------------------

def test_psi_reproduces_net_labels(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 3)
    for label in (NetLabel(3, 1, 2), NetLabel(1, 1, 1), NetLabel(5, 7, 3)):
        img = psi_map(disk_plane, net, net.point(label))
        assert abs(img.x - float(label.alpha)) <= 1e-9
        assert abs(img.y - float(label.beta)) <= 1e-9


def test_psi_base_corner_maps_to_origin(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 2)
    img = psi_map(disk_plane, net, P(-0.5, -0.5))
    assert abs(img.x) <= 1e-9 and abs(img.y) <= 1e-9


def test_psi_outside_hull_raises(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 2)
    with pytest.raises(OutsideHull):
        psi_map(disk_plane, net, P(0.9, 0.0))


def test_psi_collinearity_and_depth_monotonicity(disk_plane, rng):
    base = disk_base()
    nets = {d: build_harmonic_net(disk_plane, base, d) for d in (4, 5)}
    triples = []
    while len(triples) < 60:
        p1 = P(rng.uniform(-0.45, 0.45), rng.uniform(-0.45, 0.45))
        p2 = P(rng.uniform(-0.45, 0.45), rng.uniform(-0.45, 0.45))
        if (p2 - p1).norm() < 0.25:
            continue
        mid = p1 + (p2 - p1) * rng.uniform(0.2, 0.8)
        triples.append((p1, mid, p2))
    residuals = {}
    for d, net in nets.items():
        worst = 0.0
        for p1, mid, p2 in triples:
            i1, i2, i3 = (psi_map(disk_plane, net, q) for q in (p1, mid, p2))
            dvec = i3 - i1
            worst = max(worst, abs(float(dvec.cross(i2 - i1))) / dvec.norm())
        residuals[d] = worst
    assert residuals[4] <= 1e-6
    assert residuals[5] <= residuals[4]


def test_psi_extend_euclidean_affine_case(euclid):
    net = build_harmonic_net(euclid, UNIT_SQUARE, 3)
    v = P(2.25, -0.75)
    img = psi_extend(euclid, net, v)
    assert abs(img.x - 2.25) <= 1e-6 and abs(img.y + 0.75) <= 1e-6


def test_psi_extend_secant_independence(disk_plane, rng):
    net = build_harmonic_net(disk_plane, disk_base(), 4)
    checked = 0
    while checked < 10:
        ang = rng.uniform(0, 2 * math.pi)
        r = rng.uniform(0.75, 0.9)
        v = P(r * math.cos(ang), r * math.sin(ang))
        if net.base.contains(v):
            continue
        images = psi_extend_samples(disk_plane, net, v, 5)
        diam = max(
            (q1 - q2).norm() for i, q1 in enumerate(images) for q2 in images[i + 1:]
        )
        assert diam <= 1e-6
        checked += 1


def test_psi_extend_boundary_point_rejected(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 2)
    with pytest.raises(NoAdmissibleSecants):
        psi_extend(disk_plane, net, P(1.0, 0.0))


def test_psi_extend_interior_point_rejected(disk_plane):
    net = build_harmonic_net(disk_plane, disk_base(), 2)
    with pytest.raises(DegenerateInput):
        psi_extend(disk_plane, net, P(0.0, 0.0))


# -- metric harmonic conjugate ------------------------------------------------------

def test_euclidean_conjugate_matches_algebraic_oracle(euclid):
    q = metric_harmonic_conjugate(
        euclid, P(0.0, 0.0), P(1.0, 0.0), P(2.0, 0.0), P(0.3, 0.9), P(0.1, 0.3)
    )
    assert abs(q.x - 2.0 / 3.0) <= 1e-12
    assert abs(q.y) <= 1e-12


def test_hilbert_midpoint_has_no_finite_conjugate(disk_plane):
    a, b, p = P(-0.25, 0.0), P(0.25, 0.0), P(0.0, 0.0)
    z = P(-0.14, 0.26)
    x = a + (z - a) * 0.65
    with pytest.raises(NoFiniteConjugate):
        metric_harmonic_conjugate(disk_plane, a, b, p, z, x)


def test_hilbert_conjugate_auxiliary_independence(disk_plane, rng):
    checked = 0
    while checked < 25:
        base = P(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25))
        ang = rng.uniform(0, math.pi)
        d = P(math.cos(ang), math.sin(ang))
        a = base + d * -0.15
        b = base + d * 0.15
        p = base + d * rng.uniform(0.3, 0.5)
        if not all(disk_plane.contains(t) for t in (a, b, p)):
            continue
        results = []
        tries = 0
        while len(results) < 3 and tries < 60:
            tries += 1
            z = P(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
            if not disk_plane.contains(z):
                continue
            x = a + (z - a) * rng.uniform(0.3, 0.7)
            try:
                results.append(metric_harmonic_conjugate(disk_plane, a, b, p, z, x))
            except Exception:
                continue
        if len(results) < 2:
            continue
        spread = max(
            (q1 - q2).norm() for i, q1 in enumerate(results) for q2 in results[i + 1:]
        )
        assert spread <= 1e-9
        checked += 1


# -- triangle comparison chart -------------------------------------------------------

def hilbert_pasch_map(disk_plane):
    a, b, c = P(-0.4, -0.3), P(0.5, -0.2), P(0.0, 0.45)
    p = a + (c - a) * 0.35
    return PaschMap.build(disk_plane, a, b, c, p)


def test_model_side_lengths_match(disk_plane):
    pm = hilbert_pasch_map(disk_plane)
    m_ab, m_ac, m_bc = pm.model_sides()
    assert abs(m_ab - pm.d_ab) <= 1e-10
    assert abs(m_ac - pm.d_ac) <= 1e-10
    assert abs(m_bc - pm.d_bc) <= 1e-10
    # P on [A, C] at the distance of p from a
    assert abs((pm.P - pm.A).norm() - metric_distance(disk_plane, pm.a, pm.p)) <= 1e-10


def test_collinear_triangle_is_model_degenerate(euclid):
    with pytest.raises(ModelDegenerate):
        PaschMap.build(euclid, P(0.0, 0.0), P(1.0, 0.0), P(2.0, 0.0), P(0.25, 0.0))


def test_p_off_segment_rejected(euclid):
    with pytest.raises(DegenerateInput):
        PaschMap.build(euclid, P(0.0, 0.0), P(1.0, 1.0), P(2.0, 0.0), P(1.5, 0.8))


def test_phi_identity_on_euclidean_self_model(euclid, rng):
    a, b, c = P(0.0, 0.0), P(2.0, 0.0), P(0.7, 1.5)
    pm = PaschMap.build(euclid, a, b, c, a + (c - a) * 0.4)
    for _ in range(150):
        q_model = P(rng.uniform(-2, 4), rng.uniform(-3, 4))
        if (q_model - pm.P).norm() < 1e-3:
            continue
        image = pasch_phi(pm, q_model)
        assert (image - q_model).norm() <= 1e-12


def test_phi_of_boundary_crossing_point_is_its_pullback(disk_plane):
    pm = hilbert_pasch_map(disk_plane)
    # Q on segment [A, B]: tau equals d(p, s), so phi(Q) = s exactly
    S = pm.A + (pm.B - pm.A) * 0.37
    q = pasch_phi(pm, S)
    from straightplanes.metric import geodesic_through

    s_expected = geodesic_through(disk_plane, pm.a, pm.b).point_at((S - pm.A).norm())
    assert (q - s_expected).norm() <= 1e-10


def test_phi_ratio_contract(disk_plane, rng):
    pm = hilbert_pasch_map(disk_plane)
    for _ in range(400):
        q_model = P(rng.uniform(-1.5, 2.5), rng.uniform(-1.5, 2.0))
        if (q_model - pm.P).norm() < 1e-3:
            continue
        q = pasch_phi(pm, q_model)
        r_p, r_s, r_ps = pasch_phi_ratios(pm, q_model, q)
        assert abs(r_p - r_ps) <= 1e-9 * max(1.0, r_ps)
        assert abs(r_s - r_ps) <= 1e-9 * max(1.0, r_ps)


def test_phi_preimage_recovers_targets(disk_plane, rng):
    pm = hilbert_pasch_map(disk_plane)
    recovered = 0
    while recovered < 40:
        ang = rng.uniform(0, 2 * math.pi)
        radius = rng.uniform(0.0, 0.85)
        target = P(radius * math.cos(ang), radius * math.sin(ang))
        if (target - pm.p.as_float()).norm() < 1e-2:
            continue
        q_model = pasch_phi_preimage(pm, target)
        assert (pasch_phi(pm, q_model) - target).norm() <= 1e-6
        recovered += 1


def test_phi_injective_on_grid(disk_plane):
    pm = hilbert_pasch_map(disk_plane)
    seen = {}
    resolution = 1e-9
    n = 30
    for i in range(n):
        for j in range(n):
            q_model = P(-1.0 + 3.2 * i / (n - 1), -1.2 + 3.0 * j / (n - 1))
            if (q_model - pm.P).norm() < 1e-6:
                continue
            q = pasch_phi(pm, q_model)
            key = (round(float(q.x) / resolution), round(float(q.y) / resolution))
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    other = seen.get((key[0] + dx, key[1] + dy))
                    if other is not None:
                        assert (other - q).norm() >= resolution
            seen[key] = q
