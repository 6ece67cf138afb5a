"""Crooked surfaces in the symplectic model, and their disjointness.

A lightlike quadrilateral is a basis (u+, u-, v+, v-) of V with
omega(u+, v-) = omega(u-, v+) = 1 and all other products among the four
vanishing.  The crooked surface it determines has two wings, swept by the
photon families [t u+ + s v+] with t s >= 0 and [t u- + s v-] with
t s <= 0, and a stem: the part of the Einstein torus of the splitting
span{u+, v-} + span{u-, v+} that is timelike with respect to the vertices
P0 = span{v+, v-} and P_infinity = span{u+, u-}.

A photon avoids such a surface exactly when two explicit inequalities hold,
and two surfaces are disjoint exactly when each of the eight defining
photons avoids the other surface: sixteen strict inequalities in total.
Values within the tolerance margin count as *not* disjoint, the safe
failure mode for fundamental-domain use.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ein3.linalg import EPS_ALG, EPS_RANK, GeometryError, as_vector, intersect
from ein3.symplectic import Plane2, SympSpace, maslov

_QUAD_KEYS = ("u_plus", "u_minus", "v_plus", "v_minus")


class SurfaceRegion(Enum):
    WING_PLUS = "wing_plus"
    WING_MINUS = "wing_minus"
    STEM = "stem"


class LightlikeQuadrilateral:
    """Four photon vectors normalized to the quadrilateral products.

    Parameters
    ----------
    space : SympSpace
    u_plus, u_minus, v_plus, v_minus : length-4 vectors
        Must satisfy omega(u+, v-) = omega(u-, v+) = 1 and have all four
        remaining mutual products zero, within eps; the vectors must span V.

    Violated products are reported with their magnitudes.  Note the actual
    vectors matter beyond their projective classes: rescaling u+ by p and
    v- by 1/p preserves the configuration, but flipping the sign of one
    pair swaps a wing family for its complement and describes a different
    surface.
    """

    def __init__(self, space, u_plus, u_minus, v_plus, v_minus, eps=EPS_ALG):
        self.space = space
        self.u_plus = as_vector(u_plus, 4)
        self.u_minus = as_vector(u_minus, 4)
        self.v_plus = as_vector(v_plus, 4)
        self.v_minus = as_vector(v_minus, 4)
        residuals = self.product_residuals()
        bad = {k: v for k, v in residuals.items() if abs(v) > eps}
        if bad:
            raise GeometryError(
                "quadrilateral products violated: "
                + ", ".join(f"{k} off by {v:.3e}" for k, v in bad.items()))
        m = np.column_stack([self.u_plus, self.u_minus, self.v_plus, self.v_minus])
        if abs(np.linalg.det(m)) <= EPS_RANK:
            raise GeometryError("quadrilateral vectors do not form a basis")

    def product_residuals(self):
        """Deviation of each omega product from its required value."""
        w = self.space.omega
        return {
            "omega(u+, v-) - 1": w(self.u_plus, self.v_minus) - 1.0,
            "omega(u-, v+) - 1": w(self.u_minus, self.v_plus) - 1.0,
            "omega(u+, u-)": w(self.u_plus, self.u_minus),
            "omega(u+, v+)": w(self.u_plus, self.v_plus),
            "omega(u-, v-)": w(self.u_minus, self.v_minus),
            "omega(v+, v-)": w(self.v_plus, self.v_minus),
        }

    def vectors(self):
        return (self.u_plus, self.u_minus, self.v_plus, self.v_minus)

    def transformed(self, g):
        """Image of the quadrilateral under a symplectic matrix."""
        g = np.asarray(g, dtype=float)
        return LightlikeQuadrilateral(
            self.space, g @ self.u_plus, g @ self.u_minus,
            g @ self.v_plus, g @ self.v_minus)

    def to_dict(self):
        return {k: list(getattr(self, k)) for k in _QUAD_KEYS}

    def __repr__(self):
        return ("LightlikeQuadrilateral("
                + ", ".join(f"{k}={getattr(self, k).tolist()}" for k in _QUAD_KEYS)
                + ")")


def canonical_quadrilateral(space=None):
    """The quadrilateral (e1, e2, e4, e3) in the standard basis convention."""
    if space is None:
        space = SympSpace()
    e = np.eye(4)
    return LightlikeQuadrilateral(space, e[:, 0], e[:, 1], e[:, 3], e[:, 2])


class CrookedSurface:
    """Crooked surface of a lightlike quadrilateral: two wings and a stem.

    Derived data: the four Lagrangian vertices P0, P_infinity, P+, P- and
    the nondegenerate, mutually omega-orthogonal stem planes S1, S2.
    """

    def __init__(self, quad):
        self.quad = quad
        space = quad.space
        self.space = space
        self.p_zero = Plane2.span(space, quad.v_plus, quad.v_minus)
        self.p_inf = Plane2.span(space, quad.u_plus, quad.u_minus)
        self.p_plus = Plane2.span(space, quad.u_plus, quad.v_plus)
        self.p_minus = Plane2.span(space, quad.u_minus, quad.v_minus)
        for vertex, name in ((self.p_zero, "P0"), (self.p_inf, "Pinf"),
                             (self.p_plus, "P+"), (self.p_minus, "P-")):
            if not vertex.is_lagrangian:
                raise GeometryError(f"vertex {name} is not Lagrangian")
        self.stem1 = Plane2.span(space, quad.u_plus, quad.v_minus)
        self.stem2 = Plane2.span(space, quad.u_minus, quad.v_plus)
        if self.stem1.is_lagrangian or self.stem2.is_lagrangian:
            raise GeometryError("stem planes must be nondegenerate")

    def __repr__(self):
        return f"CrookedSurface({self.quad!r})"


def _wing_data(surface, sign):
    if sign not in (+1, -1):
        raise GeometryError("wing sign must be +1 or -1")
    if sign == +1:
        return surface.p_plus, surface.quad.u_plus, surface.quad.v_plus
    return surface.p_minus, surface.quad.u_minus, surface.quad.v_minus


def wing_contains(surface, l, sign, eps=EPS_ALG):
    """Whether a Lagrangian lies on the chosen wing.

    The wing with sign +1 (-1) is the union of the photons
    [t u + s v] with t s >= 0 (<= 0) through the vertex P+ (P-).  A point
    lies on it when its plane meets the vertex plane in a line whose
    photon coordinates satisfy the sign condition; the vertex itself,
    through which every wing photon passes, counts as a member.
    """
    if not l.is_lagrangian:
        raise GeometryError("expected a Lagrangian plane")
    vertex, u, v = _wing_data(surface, sign)
    line = intersect(l.sub, vertex.sub)
    if line.dim == 0:
        return False
    if line.dim == 2:
        return True
    gen = line.onb[:, 0]
    ts, *_ = np.linalg.lstsq(np.column_stack([u, v]), gen, rcond=None)
    product = ts[0] * ts[1]
    if sign == +1:
        return product >= -eps
    return product <= eps


def stem_contains(surface, l, eps=EPS_ALG):
    """Whether a Lagrangian lies on the (open) stem.

    Stem members meet both stem planes S1 and S2 in lines, are transverse
    to the vertices P0 and P_infinity, and are timelike there: the Maslov
    index of (P0, L, P_infinity) is +/-2.  This is the stem interior;
    boundary photons of the stem belong to the wings.
    """
    if not l.is_lagrangian:
        raise GeometryError("expected a Lagrangian plane")
    if intersect(l.sub, surface.stem1.sub).dim < 1:
        return False
    if intersect(l.sub, surface.stem2.sub).dim < 1:
        return False
    space = surface.space
    if not space.transverse(l, surface.p_zero, eps):
        return False
    if not space.transverse(l, surface.p_inf, eps):
        return False
    return abs(maslov(space, surface.p_zero, l, surface.p_inf)) == 2


def surface_contains(surface, l, eps=EPS_ALG) -> Optional[SurfaceRegion]:
    """First region containing the Lagrangian, or None.

    Checked in the order wing+, wing-, stem; the regions only overlap on
    wing boundaries, and the open stem meets neither wing.
    """
    if wing_contains(surface, l, +1, eps):
        return SurfaceRegion.WING_PLUS
    if wing_contains(surface, l, -1, eps):
        return SurfaceRegion.WING_MINUS
    if stem_contains(surface, l, eps):
        return SurfaceRegion.STEM
    return None


def photon_margins(p, surface):
    """The two signed quantities deciding whether photon [p] avoids a surface.

    Returns (m1, m2) with m1 = omega(p, v+) omega(p, u+) and
    m2 = omega(p, v-) omega(p, u-), evaluated on the unit rescaling of p so
    the values are scale-invariant.  The photon avoids the surface exactly
    when m1 > 0 and m2 < 0.
    """
    p = as_vector(p, 4)
    norm = np.linalg.norm(p)
    if norm == 0.0:
        raise GeometryError("zero photon vector")
    p = p / norm
    q = surface.quad
    w = surface.space.omega
    m1 = w(p, q.v_plus) * w(p, q.u_plus)
    m2 = w(p, q.v_minus) * w(p, q.u_minus)
    return m1, m2


def photon_disjoint(p, surface, eps=EPS_ALG):
    """Whether the photon of a vector p misses the crooked surface entirely.

    Both inequalities m1 > 0, m2 < 0 must hold with margin eps; values
    within the margin (the photon touching the surface) count as not
    disjoint.
    """
    m1, m2 = photon_margins(p, surface)
    return m1 > eps and m2 < -eps


def find_crossing_lagrangian(p, surface, eps=EPS_ALG):
    """A surface point on the photon of p, when one of the two photon
    inequalities fails; None when the photon is disjoint.

    The construction follows the wing parametrization: if m1 <= 0 the wing+
    photon with coordinates (omega(p, v+), -omega(p, u+)) is incident to p,
    and symmetrically for m2 >= 0 on the wing- side; the vertex plane covers
    the corner case where both coordinates vanish.
    """
    p = as_vector(p, 4)
    p = p / np.linalg.norm(p)
    q = surface.quad
    w = surface.space.omega
    m1, m2 = photon_margins(p, surface)
    if m1 <= eps:
        t, s = w(p, q.v_plus), -w(p, q.u_plus)
        if abs(t) <= eps and abs(s) <= eps:
            return surface.p_plus
        return Plane2.span(surface.space, p, t * q.u_plus + s * q.v_plus)
    if m2 >= -eps:
        t, s = w(p, q.v_minus), -w(p, q.u_minus)
        if abs(t) <= eps and abs(s) <= eps:
            return surface.p_minus
        return Plane2.span(surface.space, p, t * q.u_minus + s * q.v_minus)
    return None


@dataclass
class PhotonTest:
    """Margins of one defining photon against the other surface."""
    label: str
    wing_plus_margin: float   # must be > 0 for disjointness
    wing_minus_margin: float  # must be < 0 for disjointness

    @property
    def passed(self):
        return self.wing_plus_margin > 0.0 and self.wing_minus_margin < 0.0


def disjointness_report(c1, c2):
    """All sixteen inequality values behind the disjointness criterion.

    Each of the eight defining photons contributes its two margins against
    the other surface.
    """
    tests = []
    for (surface, quad, tag) in ((c1, c2.quad, "of C2 vs C1"),
                                 (c2, c1.quad, "of C1 vs C2")):
        for key in _QUAD_KEYS:
            m1, m2 = photon_margins(getattr(quad, key), surface)
            tests.append(PhotonTest(f"{key} {tag}", m1, m2))
    return tests


def surfaces_disjoint(c1, c2, eps=EPS_ALG):
    """Whether two crooked surfaces are disjoint.

    True exactly when every one of the eight defining photons (four per
    quadrilateral) misses the other surface; equivalently when all sixteen
    strict inequalities hold with margin eps.
    """
    for test in disjointness_report(c1, c2):
        if not (test.wing_plus_margin > eps and test.wing_minus_margin < -eps):
            return False
    return True
