"""Mutable sphere triangulations, dart-based, supporting vertex insertion
and edge flips.

Darts are ints; edge ``k`` owns darts ``2k`` and ``2k + 1`` (its side-0 and
side-1 ends), ``twin(d) = d ^ 1``.  ``fnext`` walks each triangular face
counterclockwise, and the induced rotation at a vertex is
``fnext(twin(d))``, so exported rotation systems trace the triangulation's
faces and have genus 0 by construction.

The graph is kept simple: a flip is refused when it would create a loop or
a parallel edge, which also keeps every degree at least 3.
"""

from __future__ import annotations

from .core import Edge, EdgeEnd, Multigraph, RotationSystem
from .errors import DomainError


class SphereTriangulation:
    """Triangulation of the sphere grown from a triangle by vertex
    insertions into faces."""

    def __init__(self):
        # triangle 0,1,2: inner face (0->1, 1->2, 2->0), outer face reversed
        self.origin = [0, 1, 1, 2, 2, 0]
        self.fnext = [2, 5, 4, 1, 0, 3]
        self.adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return len(self.origin) // 2

    @property
    def num_darts(self) -> int:
        return len(self.origin)

    def endpoints(self, e: int):
        return self.origin[2 * e], self.origin[2 * e + 1]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def target(self, d: int) -> int:
        return self.origin[d ^ 1]

    def _new_edge(self, u: int, v: int) -> int:
        """Allocate darts 2k (origin u) and 2k+1 (origin v); faces are wired
        up by the caller."""
        k = self.num_edges
        self.origin.extend((u, v))
        self.fnext.extend((-1, -1))
        self.adj[u].add(v)
        self.adj[v].add(u)
        return k

    def insert_vertex(self, dart: int) -> int:
        """Subdivide the face containing ``dart`` into three by a new vertex."""
        d = dart
        a = self.fnext[d]
        b = self.fnext[a]
        x, y, z = self.origin[d], self.origin[a], self.origin[b]
        v = self.num_vertices
        self.adj[v] = set()
        ex = self._new_edge(x, v)
        ey = self._new_edge(y, v)
        ez = self._new_edge(z, v)
        xv, vx = 2 * ex, 2 * ex + 1
        yv, vy = 2 * ey, 2 * ey + 1
        zv, vz = 2 * ez, 2 * ez + 1
        self.fnext[d], self.fnext[yv], self.fnext[vx] = yv, vx, d
        self.fnext[a], self.fnext[zv], self.fnext[vy] = zv, vy, a
        self.fnext[b], self.fnext[xv], self.fnext[vz] = xv, vz, b
        return v

    def flip_targets(self, e: int):
        """The two opposite vertices (z, w) of the faces at edge ``e``."""
        d, t = 2 * e, 2 * e + 1
        a = self.fnext[d]
        b = self.fnext[a]
        c = self.fnext[t]
        f = self.fnext[c]
        return self.origin[b], self.origin[f]

    def flippable(self, e: int) -> bool:
        z, w = self.flip_targets(e)
        return z != w and z not in self.adj[w]

    def flip(self, e: int):
        """Replace edge xy by the other diagonal zw of its two faces.

        Returns ((x, y), (z, w)).  Flipping the same edge again restores
        the original triangulation.
        """
        d, t = 2 * e, 2 * e + 1
        a = self.fnext[d]
        b = self.fnext[a]
        c = self.fnext[t]
        f = self.fnext[c]
        x, y = self.origin[d], self.origin[t]
        z, w = self.origin[b], self.origin[f]
        if z == w or z in self.adj[w]:
            raise DomainError(f"edge {e} is not flippable")
        self.adj[x].discard(y)
        self.adj[y].discard(x)
        self.adj[z].add(w)
        self.adj[w].add(z)
        self.origin[d], self.origin[t] = w, z
        self.fnext[b], self.fnext[c], self.fnext[d] = c, d, b
        self.fnext[f], self.fnext[a], self.fnext[t] = a, t, f
        return (x, y), (z, w)

    def to_graph_and_rotation(self):
        """Export as an immutable multigraph plus its genus-0 rotation."""
        g = Multigraph(
            tuple(range(self.num_vertices)),
            tuple(Edge(k, *self.endpoints(k)) for k in range(self.num_edges)),
        )
        darts_at = {v: [] for v in range(self.num_vertices)}
        for d, v in enumerate(self.origin):
            darts_at[v].append(d)
        orders = {}
        for v, darts in darts_at.items():
            start = min(darts)
            cycle = []
            d = start
            while True:
                cycle.append(EdgeEnd(d >> 1, d & 1))
                d = self.fnext[d ^ 1]
                if d == start:
                    break
            if len(cycle) != len(darts):
                raise DomainError("corrupt triangulation: broken rotation cycle")
            orders[v] = tuple(cycle)
        return g, RotationSystem(orders)
