import numpy as np
import pytest
from scipy.linalg import expm

from ein3 import ads as A
from ein3 import crooked as C
from ein3.linalg import GeometryError
from ein3.oracle import make_rng

SP = A.ads_space()


def random_sl2(rng, scale=1.0):
    x = rng.normal(size=(2, 2)) * scale
    return expm(x - 0.5 * np.trace(x) * np.eye(2))


def test_embed():
    plane = A.embed(np.eye(2))
    assert np.allclose(plane.basis, np.vstack([np.eye(2), np.eye(2)]))
    assert plane.is_lagrangian
    rng = make_rng(0)
    for _ in range(30):
        f = random_sl2(rng)
        assert A.embed(f).is_lagrangian
    with pytest.raises(GeometryError):
        A.embed(np.diag([2.0, 1.0]))


def test_embed_equivariance():
    rng = make_rng(1)
    for _ in range(30):
        f, a_mat, b_mat = (random_sl2(rng) for _ in range(3))
        lhs = A.embed(a_mat @ f @ np.linalg.inv(b_mat))
        rhs = A.Plane2(SP, A.pair_action(a_mat, b_mat) @ A.embed(f).basis)
        assert lhs == rhs


def test_involution():
    plane = A.involution(A.embed(np.eye(2)))
    assert plane == A.Plane2(SP, np.vstack([np.eye(2), -np.eye(2)]))
    rng = make_rng(2)
    for _ in range(30):
        p = A.embed(random_sl2(rng))
        assert A.involution(A.involution(p)) == p
        # graphs of unimodular maps are never fixed
        assert not A.involution(p) == p


def test_ads_quadrilateral_structure():
    plane = A.AdsCrookedPlane(np.eye(2), [1, 0], [0, 1])
    quad = A.ads_quadrilateral(plane)
    for value in quad.product_residuals().values():
        assert abs(value) < 1e-12
    surf = C.CrookedSurface(quad)
    # the photon set is invariant under the involution
    inv = np.diag([1.0, 1.0, -1.0, -1.0])
    photons = [quad.u_plus, quad.u_minus, quad.v_plus, quad.v_minus]
    for ph in photons:
        image = inv @ ph
        assert any(
            abs(abs(image @ other)
                - np.linalg.norm(image) * np.linalg.norm(other)) < 1e-9
            for other in photons)
    # the wing vertices are fixed by the involution (boundary points) while
    # the base and its antipode are swapped
    assert A.involution(surf.p_plus) == surf.p_plus
    assert A.involution(surf.p_minus) == surf.p_minus
    assert A.involution(surf.p_inf) == surf.p_zero
    assert surf.p_inf == A.embed(np.eye(2))
    with pytest.raises(GeometryError):
        A.ads_quadrilateral(A.AdsCrookedPlane(np.eye(2), [1, 0], [2, 1e-12]))


def test_ads_quadrilateral_based_at_f():
    rng = make_rng(3)
    f = random_sl2(rng)
    plane = A.AdsCrookedPlane(f, [1, 0], [0, 1])
    quad = A.ads_quadrilateral(plane)
    for value in quad.product_residuals().values():
        assert abs(value) < 1e-10
    assert C.CrookedSurface(quad).p_inf == A.embed(f)


def test_ads_disjoint_identity_fails():
    p1 = A.AdsCrookedPlane(np.eye(2), [1, 0], [0, 1])
    p2 = A.AdsCrookedPlane(np.eye(2), [1, 1], [1, -1])
    assert not A.ads_disjoint(p1, p2)
    assert not A.dgk_criterion(p1, p2)
    margins = A.ads_margins(p1, p2)
    assert all(abs(v) < 1e-12 for v in margins.values())


def test_ads_disjoint_agrees_with_full_criterion():
    # a hyperbolic relative base with directions funneled into its
    # contracting cone gives a separated pair
    rng = make_rng(4)
    agreements = 0
    disjoint_seen = 0
    for _ in range(200):
        a, b, ap, bp = (rng.normal(size=2) for _ in range(4))
        try:
            p1 = A.AdsCrookedPlane(np.eye(2), a, b)
            p2 = A.AdsCrookedPlane(random_sl2(rng), ap, bp)
            margins = A.ads_margins(p1, p2)
        except GeometryError:
            continue
        if min(abs(v) for v in margins.values()) < 1e-6:
            continue
        four = A.ads_disjoint(p1, p2)
        sixteen = C.surfaces_disjoint(
            C.CrookedSurface(A.ads_quadrilateral(p1)),
            C.CrookedSurface(A.ads_quadrilateral(p2)))
        assert four == sixteen == A.dgk_criterion(p1, p2)
        agreements += 1
        disjoint_seen += four
    assert agreements > 100
    assert disjoint_seen > 0


def test_ads_disjoint_scale_invariance():
    rng = make_rng(5)
    p1 = A.AdsCrookedPlane(np.eye(2), [1, 0], [0, 1])
    base = random_sl2(rng)
    p2 = A.AdsCrookedPlane(base, [1.0, 0.4], [0.2, -1.0])
    verdict = A.ads_disjoint(p1, p2)
    for lam in (0.01, -3.0, 17.0):
        scaled = A.AdsCrookedPlane(base, lam * np.array([1.0, 0.4]), [0.2, -1.0])
        assert A.ads_disjoint(p1, scaled) == verdict


def test_general_base_pairs_reduce_by_left_translation():
    rng = make_rng(6)
    for _ in range(20):
        g, f = random_sl2(rng), random_sl2(rng)
        a, b, ap, bp = (rng.normal(size=2) for _ in range(4))
        try:
            pair1 = (A.AdsCrookedPlane(g, a, b), A.AdsCrookedPlane(g @ f, ap, bp))
            pair2 = (A.AdsCrookedPlane(np.eye(2), a, b), A.AdsCrookedPlane(f, ap, bp))
            m1 = A.ads_margins(*pair1)
            m2 = A.ads_margins(*pair2)
        except GeometryError:
            continue
        for key in m1:
            assert m1[key] == pytest.approx(m2[key], abs=1e-9)


def test_boundary_lift():
    assert np.array_equal(A.boundary_lift([1, 0]), [[0, -1], [0, 0]])
    rng = make_rng(7)
    for _ in range(50):
        a = rng.normal(size=2)
        if np.linalg.norm(a) < 1e-3:
            continue
        lift = A.boundary_lift(a)
        assert abs(np.trace(lift)) < 1e-12
        assert abs(A.killing(lift, lift)) < 1e-12 * max(1.0, np.abs(lift).max() ** 2)
        assert A.is_upper_null(lift)
        g = random_sl2(rng)
        assert np.allclose(A.boundary_lift(g @ a),
                           g @ lift @ np.linalg.inv(g), atol=1e-12 * max(
                               1.0, float(np.abs(g @ lift).max())))
    with pytest.raises(GeometryError):
        A.boundary_lift([0, 0])


def test_killing():
    x = A.boundary_lift([1, 0])
    y = A.boundary_lift([0, 1])
    assert A.killing(x, y) == -1.0  # matches omega0 = 1
    rng = make_rng(8)
    for _ in range(200):
        a, b = rng.normal(size=(2, 2))
        lhs = A.omega0(a, b) ** 2
        rhs = -A.killing(A.boundary_lift(a), A.boundary_lift(b)) \
            if np.linalg.norm(a) > 0 and np.linalg.norm(b) > 0 else lhs
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, lhs)


def test_horocycle_distance():
    xi1 = A.boundary_lift(np.array([1.0, 0.0]))
    xi2 = A.boundary_lift(np.array([0.0, 1.0]))
    assert A.killing(xi1, xi2) == -1.0
    h1 = A.Horocycle(xi1, 1.0)
    assert A.horocycle_distance(h1, A.Horocycle(xi2, 0.5)) == 0.0  # K = -2rr'
    # K = -8 r r' = -4: arccosh(-(-4 - 1/4)/2) = arccosh(17/8)
    h2 = A.Horocycle(4.0 * xi2, 0.5)
    assert A.horocycle_distance(h1, h2) == pytest.approx(np.arccosh(17 / 8))
    # monotone decreasing in r on the valid range
    dists = [A.horocycle_distance(A.Horocycle(xi1, r), A.Horocycle(4.0 * xi2, 1.0))
             for r in np.linspace(0.05, 2.0, 30)]
    assert all(d1 >= d2 - 1e-12 for d1, d2 in zip(dists, dists[1:]))
    with pytest.raises(GeometryError):
        A.horocycle_distance(h1, A.Horocycle(xi1, 1.0))  # same ideal point
    with pytest.raises(GeometryError):
        A.Horocycle(xi1, -1.0)
    with pytest.raises(GeometryError):
        A.Horocycle(-xi1, 1.0)  # lower half of the null cone


def test_dgk_identity_and_coincident_endpoints():
    p1 = A.AdsCrookedPlane(np.eye(2), [1, 0], [0, 1])
    p2 = A.AdsCrookedPlane(np.eye(2), [1, 1], [1, -1])
    assert not A.dgk_criterion(p1, p2)
    # coincident endpoints are reported and never disjoint
    p3 = A.AdsCrookedPlane(random_sl2(make_rng(9)), [1, 0], [1, 1])
    margins, coincident = A.dgk_margins(p1, p3)
    assert coincident
    assert not A.dgk_criterion(p1, p3)


def test_dgk_concrete_hyperbolic():
    # hyperbolic relative base with axis spanned by the lifted directions
    f = np.diag([3.0, 1.0 / 3.0])
    p1 = A.AdsCrookedPlane(np.eye(2), [1, 0], [0, 1])
    p2 = A.AdsCrookedPlane(f, [1, 1], [1, -1])
    four = A.ads_disjoint(p1, p2)
    dgk = A.dgk_criterion(p1, p2)
    sixteen = C.surfaces_disjoint(
        C.CrookedSurface(A.ads_quadrilateral(p1)),
        C.CrookedSurface(A.ads_quadrilateral(p2)))
    assert four == dgk == sixteen
    assert four is False  # the expansion grows two of the products
