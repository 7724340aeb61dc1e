"""Normal multicurves on a triangulation and the point-level tracer.

A multicurve is stored as one non-negative integer weight per edge; the
weights must satisfy, in every triangle, the parity condition and the
corner (triangle) inequalities.  Such a vector determines a unique
isotopy class of multicurve in minimal position, so validated weight
vectors *are* the canonical form of their class.

The tracer recovers the individual embedded circles from a weight
vector: points on an edge are indexed along the positive side label and
arcs inside each triangle connect them corner by corner.
"""

from __future__ import annotations

from functools import lru_cache

from .surfaces import vertex_link_weights
from .triangulation import Triangulation, norm_edge


class InvalidMulticurveError(ValueError):
    pass


def check_normal(tri: Triangulation, weights) -> tuple[int, ...]:
    """Validate matching conditions; return the weights as a tuple."""
    w = tuple(weights)
    if len(w) != tri.num_edges:
        raise InvalidMulticurveError("weight vector length != number of edges")
    if any(x < 0 or int(x) != x for x in w):
        raise InvalidMulticurveError("weights must be non-negative integers")
    for ti, t in enumerate(tri.triangles):
        ws = [w[norm_edge(l)] for l in t]
        if sum(ws) % 2 != 0:
            raise InvalidMulticurveError(f"parity fails in triangle {ti}")
        for k in range(3):
            if ws[(k + 2) % 3] + ws[k] - ws[(k + 1) % 3] < 0:
                raise InvalidMulticurveError(f"corner inequality fails in triangle {ti}")
    return w


def tail_corner_count(tri: Triangulation, w, label: int) -> int:
    """Arcs cutting the corner at the tail of this side."""
    prev = tri.prev_side(label)
    nxt = tri.next_side(label)
    return (w[norm_edge(prev)] + w[norm_edge(label)] - w[norm_edge(nxt)]) // 2


def arc_partner(tri: Triangulation, w, label: int, pos: int) -> tuple[int, int]:
    """Other endpoint of the arc leaving (label, pos) into label's triangle."""
    prev = tri.prev_side(label)
    nxt = tri.next_side(label)
    ct = tail_corner_count(tri, w, label)
    if pos < ct:
        return (prev, w[norm_edge(prev)] - 1 - pos)
    return (nxt, w[norm_edge(label)] - 1 - pos)


def _norm_point(tri, w, label, pos):
    e = norm_edge(label)
    return (e, pos) if label >= 0 else (e, w[e] - 1 - pos)


def trace(tri: Triangulation, weights) -> list[dict]:
    """Split a weight vector into its embedded circles.

    Returns one record per circle with its weight vector and the walk
    as (side label, position) states.  Deterministic order.
    """
    w = check_normal(tri, weights)
    visited = set()
    cycles = []
    for e in range(tri.num_edges):
        for p0 in range(w[e]):
            if (e, p0) in visited:
                continue
            steps = []
            vec = [0] * tri.num_edges
            label, pos = e, p0
            while True:
                pt = _norm_point(tri, w, label, pos)
                if steps and (label, pos) == (e, p0):
                    break
                visited.add(pt)
                vec[norm_edge(label)] += 1
                steps.append((label, pos))
                m, pm = arc_partner(tri, w, label, pos)
                label, pos = ~m, w[norm_edge(m)] - 1 - pm
            cycles.append({"weights": tuple(vec), "steps": tuple(steps)})
    cycles.sort(key=lambda c: (sum(c["weights"]), c["weights"]))
    return cycles


def components(tri: Triangulation, weights) -> list[tuple[tuple[int, ...], int]]:
    """Component weight vectors with multiplicities, deterministic order."""
    counts: dict[tuple, int] = {}
    for c in trace(tri, weights):
        counts[c["weights"]] = counts.get(c["weights"], 0) + 1
    return sorted(counts.items(), key=lambda kv: (sum(kv[0]), kv[0]))


@lru_cache(maxsize=None)
def _vertex_link_set(tri: Triangulation) -> frozenset:
    return frozenset(vertex_link_weights(tri, v) for v in range(tri.num_vertices))


def is_peripheral_vector(tri: Triangulation, weights) -> bool:
    """True when the vector is the round-a-puncture circle of some vertex."""
    return tuple(weights) in _vertex_link_set(tri)


def is_essential_component(tri: Triangulation, weights) -> bool:
    """A traced single circle is essential iff it is not puncture-parallel.

    Null-homotopic circles admit no normal representative, so the only
    inessential normal circles are the vertex links.
    """
    return any(weights) and not is_peripheral_vector(tri, weights)


class NormalMulticurve:
    """Validated multicurve; ``weights`` is canonical for its class."""

    __slots__ = ("tri", "weights")

    def __init__(self, tri: Triangulation, weights):
        object.__setattr__(self, "tri", tri)
        object.__setattr__(self, "weights", check_normal(tri, weights))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        if not isinstance(other, NormalMulticurve):
            return NotImplemented
        return self.tri == other.tri and self.weights == other.weights

    def __hash__(self):
        return hash((self.tri, self.weights))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.weights)!r})"

    @staticmethod
    def make(tri: Triangulation, weights, strip_peripheral: bool = False,
             forbid_peripheral: bool = False) -> "NormalMulticurve":
        w = check_normal(tri, weights)
        if strip_peripheral or forbid_peripheral:
            total = [0] * tri.num_edges
            for vec, mult in components(tri, w):
                if is_peripheral_vector(tri, vec):
                    if forbid_peripheral:
                        raise InvalidMulticurveError("peripheral component present")
                    continue
                for i, x in enumerate(vec):
                    total[i] += mult * x
            w = tuple(total)
        return NormalMulticurve(tri, w)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def is_empty(self) -> bool:
        return not any(self.weights)

    def components(self):
        return components(self.tri, self.weights)

    def component_curves(self) -> list["Curve"]:
        return [Curve(self.tri, vec) for vec, _ in self.components()]

    def is_multicurve_simple(self) -> bool:
        """True when every component has multiplicity one."""
        return all(m == 1 for _, m in self.components())

    def __add__(self, other: "NormalMulticurve") -> "NormalMulticurve":
        if self.tri != other.tri:
            raise ValueError("different triangulations")
        return NormalMulticurve(self.tri, tuple(a + b for a, b in zip(self.weights, other.weights)))


class Curve(NormalMulticurve):
    """A single essential circle in canonical (normal) coordinates."""

    def __init__(self, tri: Triangulation, weights, _checked: bool = False):
        super().__init__(tri, weights)
        if not _checked:
            comps = self.components()
            if len(comps) != 1 or comps[0][1] != 1:
                raise InvalidMulticurveError("not a single circle")
            if not is_essential_component(tri, self.weights):
                raise InvalidMulticurveError("circle is not essential")


def empty_multicurve(tri: Triangulation) -> NormalMulticurve:
    return NormalMulticurve(tri, (0,) * tri.num_edges)


def multicurve_from_curves(curves) -> NormalMulticurve:
    """Disjoint union of curves given as one summed vector."""
    if not curves:
        raise ValueError("need at least one curve")
    tri = curves[0].tri
    total = [0] * tri.num_edges
    for c in curves:
        if c.tri != tri:
            raise ValueError("different triangulations")
        for i, x in enumerate(c.weights):
            total[i] += x
    return NormalMulticurve(tri, tuple(total))


def disjoint(a: NormalMulticurve, b: NormalMulticurve) -> bool:
    """Exact zero-intersection test via the geometric sum.

    Two multicurves are disjoint iff the sum vector traces to exactly
    the union of their components; any crossing reroutes the sum into
    different circles.
    """
    if a.tri != b.tri:
        raise ValueError("different triangulations")
    if a.is_empty() or b.is_empty():
        return True
    want: dict[tuple, int] = {}
    for vec, m in a.components():
        want[vec] = want.get(vec, 0) + m
    for vec, m in b.components():
        want[vec] = want.get(vec, 0) + m
    got: dict[tuple, int] = {}
    for vec, m in components(a.tri, tuple(x + y for x, y in zip(a.weights, b.weights))):
        got[vec] = got.get(vec, 0) + m
    return want == got


def enumerate_curves(tri: Triangulation, budget: int) -> list[Curve]:
    """All essential curves of total weight <= budget, sorted.

    Exhaustive depth-first search over weight vectors with per-triangle
    pruning; each isotopy class appears exactly once since normal
    coordinates are canonical.
    """
    return list(_enumerate_curves_cached(tri, budget))


@lru_cache(maxsize=None)
def _enumerate_curves_cached(tri: Triangulation, budget: int) -> tuple:
    order = _edge_order(tri)
    results = []
    w = [None] * tri.num_edges

    tri_edges = [tuple(norm_edge(l) for l in t) for t in tri.triangles]

    def triangle_ok(edges) -> bool:
        a, b, c = (w[e] for e in edges)
        if (a + b + c) % 2 != 0:
            return False
        return a <= b + c and b <= a + c and c <= a + b

    def feasible(remaining: int) -> bool:
        # lower bounds from triangles with exactly one unassigned edge
        lb: dict[int, int] = {}
        for edges in tri_edges:
            vals = [w[e] for e in edges]
            missing = [i for i, v in enumerate(vals) if v is None]
            if len(missing) == 1:
                i = missing[0]
                known = [vals[(i + 1) % 3], vals[(i + 2) % 3]]
                e = edges[i]
                need = abs(known[0] - known[1])
                lb[e] = max(lb.get(e, 0), need)
            elif len(missing) == 2 and edges[missing[0]] == edges[missing[1]]:
                # self-folded triangle with its doubled edge unassigned
                other = vals[3 - missing[0] - missing[1]]
                e = edges[missing[0]]
                lb[e] = max(lb.get(e, 0), (other + 1) // 2)
        return sum(lb.values()) <= remaining

    def rec(i: int, remaining: int):
        if i == len(order):
            vec = tuple(w)
            if any(vec):
                results.append(vec)
            return
        e = order[i]
        for k in range(remaining + 1):
            w[e] = k
            ok = True
            for edges in tri_edges:
                if e in edges and all(w[x] is not None for x in edges):
                    if not triangle_ok(edges):
                        ok = False
                        break
            if ok and feasible(remaining - k):
                rec(i + 1, remaining - k)
        w[e] = None

    rec(0, budget)

    curves = []
    for vec in results:
        comps = components(tri, vec)
        if len(comps) == 1 and comps[0][1] == 1 and is_essential_component(tri, vec):
            curves.append(Curve(tri, vec, _checked=True))
    curves.sort(key=lambda c: (c.total_weight, c.weights))
    return tuple(curves)


def _edge_order(tri: Triangulation) -> list[int]:
    """Assignment order that completes triangles as early as possible."""
    remaining = set(range(tri.num_edges))
    order = []
    tri_edges = [set(norm_edge(l) for l in t) for t in tri.triangles]
    while remaining:
        best = min(
            remaining,
            key=lambda e: (
                -max((len(te - remaining) for te in tri_edges if e in te), default=0),
                e,
            ),
        )
        order.append(best)
        remaining.discard(best)
    return order
