"""Surface signatures, model triangulations, and infinite-type ambients.

Finite-type surfaces are described by (genus, punctures); boundary curves
of a domain count as punctures throughout, so cutting and curve-complex
computations stay inside one category.  Infinite-type surfaces are
restricted to three archetypes, each approximated at desk scale by a
finite *carrier* surface whose designated frontier punctures mark the
directions in which the real surface continues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .triangulation import Triangulation


@dataclass(frozen=True, order=True)
class SurfaceSignature:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be non-negative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def complexity(self) -> int:
        """3g - 3 + n, the dimension bound for multicurves."""
        return 3 * self.genus - 3 + self.punctures

    def __str__(self):
        return f"S_{{{self.genus},{self.punctures}}}"


def euler_characteristic(sig: SurfaceSignature) -> int:
    return sig.euler_characteristic


# ---------------------------------------------------------------------------
# model triangulations


def torus_model() -> Triangulation:
    """Once-punctured torus; edges 0 horizontal, 1 vertical, 2 diagonal."""
    return Triangulation([(0, 1, ~2), (2, ~0, ~1)])


def four_punctured_sphere_model() -> Triangulation:
    """Pillowcase; edges 0..5 = AB, BD, AD, CA, DC, BC on the flat square."""
    return Triangulation([(0, 1, ~2), (2, 4, 3), (~3, ~5, ~0), (5, ~4, ~1)])


def torus_slope_weights(p: int, q: int) -> tuple[int, int, int]:
    return (abs(q), abs(p), abs(p - q))

def four_punctured_slope_weights(p: int, q: int) -> tuple[int, ...]:
    # both diagonal edges are folded (1,1)-direction circles
    return (abs(q), abs(p), abs(p - q), abs(p), abs(q), abs(p - q))


def thrice_punctured_sphere_model() -> Triangulation:
    return Triangulation([(0, 1, 2), (~0, ~2, ~1)])


def _split_triangle(tri: Triangulation, ti: int) -> Triangulation:
    """Subdivide triangle ti around a new interior vertex (new puncture)."""
    a, b, c = tri.triangles[ti]
    e = tri.num_edges
    u, v, w = e, e + 1, e + 2
    new = list(tri.triangles)
    new[ti] = (a, ~v, u)
    new.append((b, ~w, v))
    new.append((c, ~u, w))
    return Triangulation(new)


def std_triangulation(g: int, n: int) -> Triangulation:
    """Canonical triangulation of the (g, n) surface, n >= 1 (n >= 3 if g=0).

    Genus part is a fan-triangulated 4g-gon with the standard side
    pairing; extra punctures are added by repeatedly subdividing the
    highest-index triangle.
    """
    if g == 0:
        if n < 3:
            raise ValueError("need at least three punctures when genus is zero")
        tri = thrice_punctured_sphere_model()
        extra = n - 3
    elif g == 1 and n >= 1:
        tri = torus_model()
        extra = n - 1
    else:
        if n < 1:
            raise ValueError("closed surfaces have no ideal triangulation")
        m = 4 * g
        # polygon sides: pair (4k, 4k+2) -> edge a_k, (4k+1, 4k+3) -> edge b_k
        side_label = {}
        for k in range(g):
            side_label[4 * k] = 2 * k
            side_label[4 * k + 2] = ~(2 * k)
            side_label[4 * k + 1] = 2 * k + 1
            side_label[4 * k + 3] = ~(2 * k + 1)
        diag = {i: 2 * g + (i - 2) for i in range(2, m - 1)}
        tris = [(side_label[0], side_label[1], ~diag[2])]
        for i in range(2, m - 2):
            tris.append((diag[i], side_label[i], ~diag[i + 1]))
        tris.append((diag[m - 2], side_label[m - 2], side_label[m - 1]))
        tri = Triangulation(tris)
        extra = n - 1
    for _ in range(extra):
        tri = _split_triangle(tri, tri.num_triangles - 1)
    sig = SurfaceSignature(g, n)
    if tri.genus != g or tri.num_vertices != n or not tri.is_connected:
        raise AssertionError(f"template for {sig} came out wrong")
    return tri


def vertex_link_weights(tri: Triangulation, vertex: int) -> tuple[int, ...]:
    """Normal coordinates of the small circle around a puncture."""
    w = [0] * tri.num_edges
    for e in range(tri.num_edges):
        if tri.tail(e) == vertex:
            w[e] += 1
        if tri.head(e) == vertex:
            w[e] += 1
    return tuple(w)
