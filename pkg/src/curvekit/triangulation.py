"""Combinatorial ideal triangulations of punctured surfaces.

A triangulation is a list of oriented triangles; each triangle is a triple
of *side labels* in counterclockwise order.  Edge ``e`` contributes two
sides, labelled ``e`` and ``~e`` (Python bitwise complement, so ``~e ==
-1 - e``).  Every label appears exactly once across all triangles, which
forces the glued surface to be oriented.  Vertices of the glued complex
are the punctures of the surface.

This module knows nothing about curves; it provides the complex itself,
edge flips with their quadrilateral data, mirror images, and isomorphism
search between labelled complexes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


def norm_edge(label: int) -> int:
    """Edge index underlying a side label."""
    return label if label >= 0 else ~label


def is_positive(label: int) -> bool:
    return label >= 0


class Triangulation:
    """Immutable oriented triangulated surface with ideal vertices."""

    def __init__(self, triangles):
        self.triangles = tuple(tuple(t) for t in triangles)
        if any(len(t) != 3 for t in self.triangles):
            raise ValueError("triangles must be triples of side labels")
        labels = [l for t in self.triangles for l in t]
        edges = sorted({norm_edge(l) for l in labels})
        if edges != list(range(len(edges))):
            raise ValueError("edge indices must be 0..E-1 without gaps")
        if sorted(labels) != sorted([e for e in edges] + [~e for e in edges]):
            raise ValueError("each side label must occur exactly once")
        self.num_edges = len(edges)
        self.num_triangles = len(self.triangles)
        # side -> (triangle index, position)
        self._loc = {}
        for ti, t in enumerate(self.triangles):
            for pos, l in enumerate(t):
                self._loc[l] = (ti, pos)

    # -- basic queries ----------------------------------------------------

    def location(self, label: int) -> tuple[int, int]:
        return self._loc[label]

    def triangle_of(self, label: int) -> tuple[int, int, int]:
        return self.triangles[self._loc[label][0]]

    def next_side(self, label: int) -> int:
        ti, pos = self._loc[label]
        return self.triangles[ti][(pos + 1) % 3]

    def prev_side(self, label: int) -> int:
        ti, pos = self._loc[label]
        return self.triangles[ti][(pos + 2) % 3]

    @cached_property
    def _tail_vertex(self) -> dict[int, int]:
        """Map each side label to the vertex id at its tail.

        Two sides share a tail exactly when they are related by
        ``tail(next(l)) == head(l) == tail(~l)`` chains; union-find over
        those relations yields the vertex classes.
        """
        parent = {l: l for l in self._loc}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for t in self.triangles:
            for i in range(3):
                # head of t[i] is the tail of t[i+1], and head(l) = tail(~l)
                union(t[(i + 1) % 3], ~t[i])
        roots = {}
        out = {}
        for l in sorted(self._loc):
            r = find(l)
            if r not in roots:
                roots[r] = len(roots)
            out[l] = roots[r]
        return out

    @cached_property
    def num_vertices(self) -> int:
        return len(set(self._tail_vertex.values()))

    def tail(self, label: int) -> int:
        return self._tail_vertex[label]

    def head(self, label: int) -> int:
        return self._tail_vertex[~label]

    def edge_vertices(self, edge: int) -> tuple[int, int]:
        return (self.tail(edge), self.head(edge))

    @cached_property
    def vertex_degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in range(self.num_edges):
            deg[self.tail(e)] += 1
            deg[self.head(e)] += 1
        return deg

    @cached_property
    def euler_characteristic(self) -> int:
        """Euler characteristic of the punctured surface: F - E."""
        return self.num_triangles - self.num_edges

    @cached_property
    def genus(self) -> int:
        # V - E + F = 2 - 2g for the glued closed complex
        chi_closed = self.num_vertices - self.num_edges + self.num_triangles
        if chi_closed % 2 != 0:
            raise ValueError("inconsistent complex")
        return (2 - chi_closed) // 2

    @cached_property
    def is_connected(self) -> bool:
        if not self.triangles:
            return True
        seen = {0}
        stack = [0]
        while stack:
            ti = stack.pop()
            for l in self.triangles[ti]:
                tj = self._loc[~l][0]
                if tj not in seen:
                    seen.add(tj)
                    stack.append(tj)
        return len(seen) == self.num_triangles

    def signature(self):
        from .surfaces import SurfaceSignature

        return SurfaceSignature(self.genus, self.num_vertices)

    # -- corner bookkeeping ------------------------------------------------

    def corner_vertex(self, ti: int, k: int) -> int:
        """Vertex at the corner between sides k-1 and k of triangle ti."""
        return self.tail(self.triangles[ti][k])

    def corner_count(self, weights, ti: int, k: int) -> int:
        """Number of arcs cutting the corner before side k, times 2.

        Returns twice the arc count so callers can check integrality.
        """
        t = self.triangles[ti]
        a = weights[norm_edge(t[(k + 2) % 3])]
        b = weights[norm_edge(t[k])]
        c = weights[norm_edge(t[(k + 1) % 3])]
        return a + b - c

    # -- flips --------------------------------------------------------------

    def is_flippable(self, edge: int) -> bool:
        return self._loc[edge][0] != self._loc[~edge][0]

    def flip_square(self, edge: int) -> tuple[int, int, int, int]:
        """Sides (s1, s2, s3, s4) of the square around a flippable edge.

        With ``t_a = (edge, s1, s2)`` and ``t_b = (~edge, s3, s4)``; the
        square boundary reads s1, s2, s3, s4 and the flip pairs opposite
        sides (s1, s3) and (s2, s4).
        """
        if not self.is_flippable(edge):
            raise ValueError(f"edge {edge} is not flippable")
        s1 = self.next_side(edge)
        s2 = self.next_side(s1)
        s3 = self.next_side(~edge)
        s4 = self.next_side(s3)
        return (s1, s2, s3, s4)

    def flip(self, edge: int) -> "Triangulation":
        """Flip an edge, reusing its index for the new diagonal."""
        s1, s2, s3, s4 = self.flip_square(edge)
        ta = self._loc[edge][0]
        tb = self._loc[~edge][0]
        new_triangles = list(self.triangles)
        new_triangles[ta] = (edge, s2, s3)
        new_triangles[tb] = (~edge, s4, s1)
        return Triangulation(new_triangles)

    def flip_weights(self, edge: int, weights) -> tuple:
        """Transport multicurve edge weights across ``flip(edge)``."""
        s1, s2, s3, s4 = self.flip_square(edge)
        w = list(weights)
        a, b = w[norm_edge(s1)], w[norm_edge(s2)]
        c, d = w[norm_edge(s3)], w[norm_edge(s4)]
        w[edge] = max(a + c, b + d) - w[edge]
        return tuple(w)

    # -- symmetries ----------------------------------------------------------

    def mirror(self) -> "Triangulation":
        """Orientation-reversed copy on the same edge set."""
        return Triangulation([(~t[2], ~t[1], ~t[0]) for t in self.triangles])

    def relabel(self, side_map: dict[int, int]) -> "Triangulation":
        """Apply a side-label map (must send edge pairs to edge pairs)."""
        full = dict(side_map)
        for l, m in side_map.items():
            full.setdefault(~l, ~m)
        return Triangulation([tuple(full.get(l, l) for l in t) for t in self.triangles])

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return set(map(_cyclic_min, self.triangles)) == set(map(_cyclic_min, other.triangles))

    def __hash__(self):
        return hash(frozenset(map(_cyclic_min, self.triangles)))

    def __repr__(self):
        return f"Triangulation({list(self.triangles)!r})"


def _cyclic_min(t):
    rots = [t, (t[1], t[2], t[0]), (t[2], t[0], t[1])]
    return min(rots)


def find_isomorphisms(src: Triangulation, dst: Triangulation):
    """All oriented simplicial isomorphisms between labelled complexes.

    Yields dicts mapping every side label of ``src`` to one of ``dst`` so
    that triangles map to triangles preserving cyclic order.  Since the
    complexes are connected, the image of one triangle propagates to the
    whole map, so at most ``3 * F`` candidates are tried.  Deterministic
    order.
    """
    if src.num_triangles != dst.num_triangles or src.num_edges != dst.num_edges:
        return
    if not src.triangles:
        yield {}
        return
    seed = src.triangles[0]
    for ti in range(dst.num_triangles):
        t = dst.triangles[ti]
        for r in range(3):
            image = (t[r], t[(r + 1) % 3], t[(r + 2) % 3])
            side_map = {}
            ok = True
            stack = list(zip(seed, image))
            while stack and ok:
                s, d = stack.pop()
                for a, b in ((s, d), (~s, ~d)):
                    prev = side_map.get(a)
                    if prev is None:
                        side_map[a] = b
                        # propagate around both triangles containing a
                        sa, sb = src.next_side(a), dst.next_side(b)
                        stack.append((sa, sb))
                    elif prev != b:
                        ok = False
                        break
            if not ok or len(side_map) != 2 * src.num_edges:
                continue
            if len(set(side_map.values())) != len(side_map):
                continue
            yield side_map
