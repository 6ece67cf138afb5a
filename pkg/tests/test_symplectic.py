import numpy as np
import pytest

from ein3 import einstein
from ein3 import symplectic as S
from ein3.linalg import GeometryError

SP = S.standard_space()
E4 = np.eye(4)


def plane(*cols):
    return S.Plane2(SP, np.column_stack(cols))


P13 = plane(E4[:, 0], E4[:, 2])
P24 = plane(E4[:, 1], E4[:, 3])
L12 = plane(E4[:, 0], E4[:, 1])
L34 = plane(E4[:, 2], E4[:, 3])


def test_wedge_product_examples():
    b13 = SP.plucker(P13)
    assert SP.wedge(b13, b13) == 0.0
    assert SP.wedge(b13, SP.plucker(P24)) == -1.0
    assert SP.wedge(SP.omega_star, SP.omega_star) == pytest.approx(-2.0, abs=1e-12)


def test_omega_star():
    # solved from the six defining equations
    b13 = SP.plucker(P13)
    b12 = SP.plucker(L12)
    expected = -(b13 + SP.plucker(P24))
    assert np.allclose(SP.omega_star, expected)
    assert SP.wedge(SP.omega_star, b13) == pytest.approx(1.0)
    assert SP.wedge(SP.omega_star, b12) == pytest.approx(0.0)
    rng = np.random.default_rng(0)
    for _ in range(50):
        u, v = rng.normal(size=(2, 4))
        biv = SP.plucker(np.column_stack([u, v])) if np.linalg.matrix_rank(
            np.column_stack([u, v])) == 2 else None
        if biv is None:
            continue
        assert SP.wedge(SP.omega_star, biv) == pytest.approx(SP.omega(u, v))


def test_plucker():
    b = SP.plucker(P13)
    assert np.allclose(b, [0, 1, 0, 0, 0, 0])
    rng = np.random.default_rng(1)
    for _ in range(50):
        p = S.Plane2(SP, rng.normal(size=(4, 2)))
        biv = SP.plucker(p)
        assert abs(SP.wedge(biv, biv)) < 1e-9 * float(biv @ biv)
        lam = rng.uniform(0.5, 2.0)
        assert np.allclose(SP.plucker(p.basis * lam), lam * lam * biv)
    with pytest.raises(GeometryError):
        SP.plucker(np.column_stack([E4[:, 0], E4[:, 0]]))


def test_lagrangians_map_to_null_kernel_lines():
    from ein3.oracle import make_rng, random_lagrangian
    rng = make_rng(2)
    for _ in range(50):
        l = random_lagrangian(SP, rng)
        biv = SP.plucker(l)
        nb = float(biv @ biv)
        assert abs(SP.wedge(SP.omega_star, biv)) < 1e-9 * np.sqrt(nb)
        assert abs(SP.wedge(biv, biv)) < 1e-9 * nb
        assert SP.in_kernel(biv)
        # and conversely: null kernel bivectors come from Lagrangian planes
        assert SP.bivector_to_plane(biv).is_lagrangian


def test_null_kernel_bivectors_are_lagrangian():
    # independently generated null vectors of the kernel (solving the
    # quadratic along random kernel lines) come from Lagrangian planes
    rng = np.random.default_rng(15)
    found = 0
    while found < 50:
        w1, w2 = rng.normal(size=(2, 6))
        for w in (w1, w2):
            w -= SP.omega_of(w) / SP.omega_of(SP.omega_star) * SP.omega_star
        a = SP.wedge(w2, w2)
        b = 2 * SP.wedge(w1, w2)
        c = SP.wedge(w1, w1)
        disc = b * b - 4 * a * c
        if disc <= 1e-9 or abs(a) < 1e-9:
            continue
        t = (-b + np.sqrt(disc)) / (2 * a)
        null = w1 + t * w2
        assert abs(SP.wedge(null, null)) < 1e-8 * float(null @ null)
        assert SP.in_kernel(null)
        plane = SP.bivector_to_plane(null, eps=1e-7)
        assert plane.is_lagrangian
        found += 1


def test_bivector_to_plane():
    b13 = SP.plucker(P13)
    assert SP.bivector_to_plane(b13) == P13
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = S.Plane2(SP, rng.normal(size=(4, 2)))
        biv = SP.plucker(p)
        back = SP.plucker(SP.bivector_to_plane(biv))
        cos = abs(back @ biv) / (np.linalg.norm(back) * np.linalg.norm(biv))
        assert cos == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(GeometryError):
        SP.bivector_to_plane(SP.omega_star)  # omega*.omega* = -2, not decomposable


def test_transverse():
    assert not SP.transverse(P13, P13)
    assert SP.transverse(L12, L34)
    assert not SP.transverse(L12, plane(E4[:, 1], E4[:, 2]))


def test_transverse_agrees_with_intersection_dim():
    rng = np.random.default_rng(4)
    for k in range(200):
        if k % 2 == 0:
            p = S.Plane2(SP, rng.normal(size=(4, 2)))
            q = S.Plane2(SP, rng.normal(size=(4, 2)))
        else:
            shared = rng.normal(size=4)
            p = S.Plane2(SP, np.column_stack([shared, rng.normal(size=4)]))
            q = S.Plane2(SP, np.column_stack([shared, rng.normal(size=4)]))
        assert SP.transverse(p, q) == (S.plane_intersection_dim(p, q) == 0)


def test_reflect_omega_star():
    rng = np.random.default_rng(5)
    # fixes the kernel of omega pointwise
    b = rng.normal(size=6)
    b -= SP.omega_of(b) / SP.omega_of(SP.omega_star) * SP.omega_star
    assert np.allclose(SP.reflect_omega_star(b), b)
    assert np.allclose(SP.reflect_omega_star(SP.omega_star), -SP.omega_star)
    refl = SP.reflect_omega_star(SP.plucker(P13))
    b24 = SP.plucker(P24)
    cos = abs(refl @ b24) / (np.linalg.norm(refl) * np.linalg.norm(b24))
    assert cos == pytest.approx(1.0, abs=1e-12)
    for _ in range(50):
        c = rng.normal(size=6)
        assert np.allclose(SP.reflect_omega_star(SP.reflect_omega_star(c)), c)


def test_symplectic_complement():
    assert S.symplectic_complement(SP, P13) == P24
    rng = np.random.default_rng(6)
    for _ in range(50):
        p = S.Plane2(SP, rng.normal(size=(4, 2)))
        if p.is_lagrangian:
            continue
        comp = S.symplectic_complement(SP, p)
        assert S.symplectic_complement(SP, comp) == p
        for i in range(2):
            for j in range(2):
                assert abs(SP.omega(p.sub.onb[:, i], comp.sub.onb[:, j])) < 1e-9
    with pytest.warns(UserWarning):
        self_comp = S.symplectic_complement(SP, L12)
    assert self_comp == L12


def test_maslov_examples():
    pp = plane(E4[:, 0] + E4[:, 2], E4[:, 1] + E4[:, 3])
    pm = plane(E4[:, 0] + E4[:, 2], E4[:, 1] - E4[:, 3])
    assert S.maslov(SP, L12, pp, L34) == 2
    assert S.maslov(SP, L12, pm, L34) == 0
    assert S.maslov(SP, L34, pp, L12) == -S.maslov(SP, L12, pp, L34)
    with pytest.raises(GeometryError):
        S.maslov(SP, L12, L12, L34)  # not transverse
    with pytest.raises(GeometryError):
        S.maslov(SP, L12, pp, P13)  # not Lagrangian


def test_maslov_antisymmetric_random():
    from ein3.oracle import make_rng, random_lagrangian
    rng = make_rng(7)
    count = 0
    while count < 50:
        l, p, lp = (random_lagrangian(SP, rng) for _ in range(3))
        try:
            m = S.maslov(SP, l, p, lp)
        except GeometryError:
            continue
        count += 1
        assert S.maslov(SP, lp, p, l) == -m
        assert m in (-2, 0, 2)


def test_mu():
    m = S.mu(SP, P13)
    assert np.allclose(m, [0, 0.5, 0, 0, -0.5, 0])
    assert SP.wedge(m, m) == pytest.approx(0.5)
    assert SP.wedge(m, SP.omega_star) == pytest.approx(0.0)
    rng = np.random.default_rng(8)
    from ein3.oracle import random_nondegenerate_plane
    for _ in range(50):
        s = random_nondegenerate_plane(SP, rng)
        ms = S.mu(SP, s)
        assert SP.wedge(ms, ms) == pytest.approx(0.5)
        assert abs(SP.wedge(ms, SP.omega_star)) < 1e-9
        comp = S.symplectic_complement(SP, s)
        # mu is blind to taking the complement
        assert np.allclose(S.mu(SP, comp), ms, atol=1e-9) or \
            np.allclose(S.mu(SP, comp), -ms, atol=1e-9)
    with pytest.raises(GeometryError):
        S.mu(SP, L12)


def test_splitting_from_spacelike():
    u = SP.plucker(P13) - SP.plucker(P24)
    split = S.splitting_from_spacelike(SP, u)
    got = [split.s, split.s_perp]
    assert any(p == P13 for p in got) and any(p == P24 for p in got)
    rng = np.random.default_rng(9)
    for _ in range(30):
        raw = rng.normal(size=6)
        raw -= SP.omega_of(raw) / SP.omega_of(SP.omega_star) * SP.omega_star
        if SP.wedge(raw, raw) < 1e-2:
            continue
        sp = S.splitting_from_spacelike(SP, raw)
        m = S.mu(SP, sp.s)
        cos = abs(SP.wedge(m, raw)) / np.sqrt(SP.wedge(m, m) * SP.wedge(raw, raw))
        assert cos == pytest.approx(1.0, abs=1e-9)
        # the two summands are swapped by the omega* reflection
        refl = SP.reflect_omega_star(SP.plucker(sp.s))
        other = SP.plucker(sp.s_perp)
        cos2 = abs(refl @ other) / (np.linalg.norm(refl) * np.linalg.norm(other))
        assert cos2 == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(GeometryError):
        S.splitting_from_spacelike(SP, SP.omega_star)  # not in the kernel


def test_lagrangian_in_torus():
    split = S.Splitting(SP, P13, P24)
    assert S.lagrangian_in_torus(SP, L12, split)  # shares e1 with span{e1,e3}
    l = plane(E4[:, 0] + E4[:, 1], E4[:, 2] - E4[:, 3])
    assert l.is_lagrangian
    # wedge of the two Pluecker images is 1, hence transverse, hence not in
    assert SP.wedge(SP.plucker(l), SP.plucker(P13)) == pytest.approx(1.0)
    assert not S.lagrangian_in_torus(SP, l, split)


def test_lagrangian_in_torus_matches_model():
    from ein3.oracle import make_rng, random_lagrangian, random_splitting
    rng = make_rng(10)
    hits = 0
    for _ in range(100):
        split = random_splitting(SP, rng)
        l = random_lagrangian(SP, rng)
        member = S.lagrangian_in_torus(SP, l, split)
        # model check: the point is orthogonal to the torus normal
        point = SP.to_einstein(SP.plucker(l))
        normal = S.torus_from_plane(SP, split.s).normal
        val = einstein.inner(point / np.linalg.norm(point), normal)
        if member:
            hits += 1
            assert abs(val) < 1e-7
        else:
            assert abs(val) > 1e-12


def test_graph_and_det():
    split = S.Splitting(SP, P13, P24)
    assert S.graph(SP, np.zeros((2, 2)), split) == P13
    lagr = S.graph(SP, np.diag([-1.0, 1.0]), split)  # det -1
    assert lagr.is_lagrangian
    assert not S.graph(SP, np.eye(2), split).is_lagrangian
    assert S.det_omega(np.eye(2)) == 1.0
    assert S.det_omega([[1, 2], [3, 4]]) == -2.0
    rng = np.random.default_rng(11)
    for _ in range(50):
        f = rng.normal(size=(2, 2))
        a1, a2 = split.s_basis[:, 0], split.s_basis[:, 1]
        fa1 = split.s_perp_basis @ f[:, 0]
        fa2 = split.s_perp_basis @ f[:, 1]
        assert SP.omega(fa1, fa2) == pytest.approx(
            S.det_omega(f) * SP.omega(a1, a2))


def test_adjugate():
    assert np.array_equal(S.adjugate(np.array([[1., 2.], [3., 4.]])),
                          [[4., -2.], [-3., 1.]])
    assert np.array_equal(S.adjugate(np.eye(2)), np.eye(2))
    rng = np.random.default_rng(12)
    for _ in range(100):
        f = rng.normal(size=(2, 2))
        assert np.allclose(S.adjugate(S.adjugate(f)), f)
        assert np.allclose(S.adjugate(f) @ f, S.det_omega(f) * np.eye(2),
                           atol=1e-12)
        if abs(S.det_omega(f)) > 1e-6:
            assert np.allclose(S.adjugate(f),
                               S.det_omega(f) * np.linalg.inv(f), atol=1e-9)


def test_perp_graph():
    split = S.Splitting(SP, P13, P24)
    assert S.perp_graph(SP, np.zeros((2, 2)), split) == P24
    rng = np.random.default_rng(13)
    for _ in range(50):
        f = rng.normal(size=(2, 2))
        if abs(S.det_omega(f) + 1.0) < 1e-3:
            continue
        g = S.graph(SP, f, split)
        gp = S.perp_graph(SP, f, split)
        for i in range(2):
            for j in range(2):
                assert abs(SP.omega(g.basis[:, i], gp.basis[:, j])) < 1e-9
    with pytest.raises(GeometryError):
        S.perp_graph(SP, np.diag([-1.0, 1.0]), split)


def test_eta_from_det():
    assert S.eta_from_det(np.eye(2)) == 0.0
    assert S.eta_from_det(np.zeros((2, 2))) == 1.0
    f = np.diag([3.0, 1.0])
    assert S.eta_from_det(f) == pytest.approx(0.5)
    split = S.Splitting(SP, P13, P24)
    t = S.graph(SP, f, split)
    assert S.eta_from_mu(SP, split.s, t) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(GeometryError):
        S.eta_from_det(np.diag([-1.0, 1.0]))


def test_bridge_isometry():
    rng = np.random.default_rng(14)
    for space in (SP, S.SympSpace(np.array([[0., 1, 0, 0], [-1, 0, 0, 0],
                                            [0, 0, 0, -1], [0, 0, 1, 0]]))):
        for _ in range(50):
            b1, b2 = rng.normal(size=(2, 6))
            for b in (b1, b2):
                b -= space.omega_of(b) / space.omega_of(space.omega_star) \
                    * space.omega_star
            lhs = space.wedge(b1, b2)
            rhs = einstein.inner(space.to_einstein(b1), space.to_einstein(b2))
            assert lhs == pytest.approx(rhs, abs=1e-10)
            assert np.allclose(space.from_einstein(space.to_einstein(b1)), b1,
                               atol=1e-10)


def test_symplectic_basis_general_space():
    omega = np.array([[0., 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    space = S.SympSpace(omega)
    d = S.symplectic_basis(space)
    gram = d.T @ space.matrix @ d
    assert np.allclose(gram, S.STANDARD_OMEGA, atol=1e-12)
