"""Combinatorial model of multigraphs, rotation systems, closed walks and
(punctured) 2-complexes, with the operations connecting them: third-edges,
link graphs, paired quotients and face-traced genus.

Conventions used throughout:

* Ids (for vertices and edges) are ints, strings, or tuples of these.
  ``id_sort_key`` gives them a total order; every container stores its
  parts in that order, so all derived objects are reproducible
  byte-for-byte.
* An edge has two distinguishable ends, side 0 and side 1.  A loop has
  both ends at the same vertex but the sides remain distinct.
* All types are immutable; every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional, Sequence, Union

from .errors import DomainError

VertexId = Union[int, str, tuple]
EdgeId = Union[int, str, tuple]

GENUINE = "genuine"
PUNCTURED = "punctured"


def id_sort_key(value):
    """Total order over ids: ints first, then strings, then tuples.

    Doubles as the id validator; raises DomainError for anything else.
    """
    if isinstance(value, bool):
        raise DomainError("booleans are not valid ids")
    if isinstance(value, int):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, tuple(id_sort_key(v) for v in value))
    raise DomainError(f"unsupported id {value!r}: ids are ints, strings or tuples")


class EdgeEnd(NamedTuple):
    """One of the two distinguishable ends of an edge.

    A third-edge (an end-third of a topological edge) is canonically named
    by the edge-end it contains, so this type doubles as the vertex type of
    link graphs.
    """

    edge: EdgeId
    side: int

    def flipped(self) -> "EdgeEnd":
        return EdgeEnd(self.edge, 1 - self.side)


#: Third-edges are edge-ends under a different reading.
ThirdEdge = EdgeEnd


def end_sort_key(end: EdgeEnd):
    return (id_sort_key(end.edge), end.side)


class Edge(NamedTuple):
    id: EdgeId
    end0: VertexId
    end1: VertexId

    @property
    def is_loop(self) -> bool:
        return self.end0 == self.end1

    def endpoint(self, side: int) -> VertexId:
        return self.end0 if side == 0 else self.end1


@dataclass(frozen=True)
class Multigraph:
    """Vertices plus edges with two distinguishable ends.

    Loops and parallel edges are allowed.  The degree of a vertex counts
    edge-ends, so a loop contributes 2.
    """

    vertices: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        verts = tuple(sorted(self.vertices, key=id_sort_key))
        edges = tuple(
            sorted(
                (e if isinstance(e, Edge) else Edge(*e) for e in self.edges),
                key=lambda e: id_sort_key(e.id),
            )
        )
        if len(set(verts)) != len(verts):
            raise DomainError("duplicate vertex id")
        vset = set(verts)
        by_id = {}
        ends_at = {v: [] for v in verts}
        for e in edges:
            if e.id in by_id:
                raise DomainError(f"duplicate edge id {e.id!r}")
            if e.end0 not in vset or e.end1 not in vset:
                raise DomainError(f"edge {e.id!r} references a missing vertex")
            by_id[e.id] = e
            ends_at[e.end0].append(EdgeEnd(e.id, 0))
            ends_at[e.end1].append(EdgeEnd(e.id, 1))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_edge_by_id", by_id)
        object.__setattr__(
            self,
            "_ends_at",
            {v: tuple(sorted(es, key=end_sort_key)) for v, es in ends_at.items()},
        )

    def edge(self, edge_id) -> Edge:
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise DomainError(f"unknown edge {edge_id!r}") from None

    def has_edge(self, edge_id) -> bool:
        return edge_id in self._edge_by_id

    def has_vertex(self, v) -> bool:
        return v in self._ends_at

    def ends_at(self, v) -> tuple:
        try:
            return self._ends_at[v]
        except KeyError:
            raise DomainError(f"unknown vertex {v!r}") from None

    def degree(self, v) -> int:
        return len(self.ends_at(v))

    def end_vertex(self, end: EdgeEnd) -> VertexId:
        return self.edge(end.edge).endpoint(end.side)

    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)


def connected_components(g: Multigraph) -> tuple:
    """Vertex sets of the components of ``g``, each sorted, ordered by
    their smallest vertex."""
    unseen = set(g.vertices)
    comps = []
    for start in g.vertices:
        if start not in unseen:
            continue
        unseen.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for end in g.ends_at(v):
                w = g.end_vertex(end.flipped())
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp, key=id_sort_key)))
    return tuple(comps)


def third_edges(g: Multigraph) -> list:
    """The 2|E| third-edges of ``g``, sorted by (edge id, side)."""
    return [EdgeEnd(e.id, s) for e in g.edges for s in (0, 1)]


# ---------------------------------------------------------------------------
# Closed walks


class WalkStep(NamedTuple):
    """One directed edge traversal: enter ``edge`` at side ``entry`` and
    exit at the other side.  Loops are traversed in two distinguishable
    directions, told apart by the entry side."""

    edge: EdgeId
    entry: int

    def flipped(self) -> "WalkStep":
        return WalkStep(self.edge, 1 - self.entry)


@dataclass(frozen=True)
class ClosedWalk:
    """Cyclic sequence of directed edge traversals.

    The stored order and starting step are significant (sealing reads the
    first step), so no cyclic normalisation is applied.
    """

    steps: tuple

    def __post_init__(self):
        steps = tuple(s if isinstance(s, WalkStep) else WalkStep(*s) for s in self.steps)
        if not steps:
            raise DomainError("a closed walk must be nonempty")
        for s in steps:
            if s.entry not in (0, 1):
                raise DomainError(f"walk step {s!r} has an invalid entry side")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)


def step_entry_vertex(g: Multigraph, step: WalkStep) -> VertexId:
    return g.edge(step.edge).endpoint(step.entry)


def step_exit_vertex(g: Multigraph, step: WalkStep) -> VertexId:
    return g.edge(step.edge).endpoint(1 - step.entry)


def validate_walk(g: Multigraph, walk: ClosedWalk) -> None:
    """Check that ``walk`` lives in ``g`` and is cyclically vertex-compatible."""
    for s in walk.steps:
        if not g.has_edge(s.edge):
            raise DomainError(f"walk not contained in skeleton: unknown edge {s.edge!r}")
    n = len(walk.steps)
    for i in range(n):
        here = step_exit_vertex(g, walk.steps[i])
        there = step_entry_vertex(g, walk.steps[(i + 1) % n])
        if here != there:
            raise DomainError(
                f"walk is not vertex-compatible between steps {i} and {(i + 1) % n}"
            )


def walk_reverse(w: ClosedWalk) -> ClosedWalk:
    """The same closed walk traversed backwards."""
    return ClosedWalk(tuple(s.flipped() for s in reversed(w.steps)))


def walk_concat(g: Multigraph, walks: Sequence[ClosedWalk]) -> ClosedWalk:
    """Splice closed walks that share their basepoint into one closed walk."""
    if not walks:
        raise DomainError("nothing to concatenate")
    n = len(walks)
    for i in range(n):
        here = step_exit_vertex(g, walks[i].steps[-1])
        there = step_entry_vertex(g, walks[(i + 1) % n].steps[0])
        if here != there:
            raise DomainError(f"incompatible junction between walks {i} and {(i + 1) % n}")
    steps = tuple(s for w in walks for s in w.steps)
    out = ClosedWalk(steps)
    validate_walk(g, out)
    return out


# ---------------------------------------------------------------------------
# Pairings and paired graphs


@dataclass(frozen=True)
class Pairing:
    """Partition of a vertex set into classes of size exactly two."""

    pairs: tuple = ()

    def __post_init__(self):
        canon = []
        seen = set()
        for raw in self.pairs:
            members = tuple(raw)
            if len(members) != 2 or members[0] == members[1]:
                raise DomainError(f"pairing class {members!r} must have exactly two distinct members")
            members = tuple(sorted(members, key=id_sort_key))
            for m in members:
                if m in seen:
                    raise DomainError(f"vertex {m!r} appears in more than one pair")
                seen.add(m)
            canon.append(members)
        canon.sort(key=lambda p: id_sort_key(p[0]))
        object.__setattr__(self, "pairs", tuple(canon))
        object.__setattr__(self, "_pair_of", {m: p for p in canon for m in p})

    def pair_of(self, v) -> tuple:
        try:
            return self._pair_of[v]
        except KeyError:
            raise DomainError(f"vertex {v!r} is not paired") from None

    def partner(self, v):
        p = self.pair_of(v)
        return p[1] if p[0] == v else p[0]

    def representative(self, v):
        return self.pair_of(v)[0]

    def members(self) -> tuple:
        return tuple(m for p in self.pairs for m in p)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic orders of the edge-ends at each vertex.

    Certifies a combinatorial embedding; its genus is computable by face
    tracing.  Stored orders are rotated to start at their smallest end so
    equal embeddings compare equal.
    """

    orders: tuple = ()

    def __post_init__(self):
        raw = self.orders
        if isinstance(raw, Mapping):
            raw = tuple(raw.items())
        norm = []
        seen_vertices = set()
        for v, order in raw:
            if v in seen_vertices:
                raise DomainError(f"vertex {v!r} appears twice in rotation system")
            seen_vertices.add(v)
            ends = tuple(e if isinstance(e, EdgeEnd) else EdgeEnd(*e) for e in order)
            for e in ends:
                if e.side not in (0, 1):
                    raise DomainError(f"edge-end {e!r} has an invalid side")
            if not ends:
                continue
            pivot = min(range(len(ends)), key=lambda i: end_sort_key(ends[i]))
            ends = ends[pivot:] + ends[:pivot]
            norm.append((v, ends))
        norm.sort(key=lambda item: id_sort_key(item[0]))
        object.__setattr__(self, "orders", tuple(norm))
        object.__setattr__(self, "_order_at", dict(norm))

    def order_at(self, v) -> tuple:
        return self._order_at.get(v, ())

    def as_dict(self) -> dict:
        return {v: list(order) for v, order in self.orders}


def validate_rotation(g: Multigraph, rot: RotationSystem) -> None:
    """Check that ``rot`` lists every edge-end of ``g`` exactly once, at the
    right vertex."""
    seen = set()
    for v, order in rot.orders:
        if not g.has_vertex(v):
            raise DomainError(f"rotation mentions unknown vertex {v!r}")
        for end in order:
            if not g.has_edge(end.edge):
                raise DomainError(f"rotation mentions unknown edge {end.edge!r}")
            if g.end_vertex(end) != v:
                raise DomainError(f"edge-end {end!r} is not incident to vertex {v!r}")
            if end in seen:
                raise DomainError(f"edge-end {end!r} appears twice in rotation system")
            seen.add(end)
    missing = 2 * len(g.edges) - len(seen)
    if missing:
        raise DomainError(f"rotation system is missing {missing} edge-end(s)")


def rotation_successor(rot: RotationSystem) -> dict:
    succ = {}
    for _, order in rot.orders:
        n = len(order)
        for i, end in enumerate(order):
            succ[end] = order[(i + 1) % n]
    return succ


@dataclass(frozen=True)
class PairedGraph:
    """A multigraph with a perfect pairing of its vertices, optionally
    carrying a rotation system as a planarity certificate."""

    graph: Multigraph
    pairing: Pairing
    rotation: Optional[RotationSystem] = None

    def __post_init__(self):
        if set(self.pairing.members()) != set(self.graph.vertices):
            raise DomainError("pairing does not cover exactly the vertex set")
        if self.rotation is not None:
            validate_rotation(self.graph, self.rotation)

    def pair_of(self, v) -> tuple:
        return self.pairing.pair_of(v)

    def certified_planar(self) -> bool:
        return self.rotation is not None and is_planar_embedding(self.graph, self.rotation)


# ---------------------------------------------------------------------------
# Face tracing and genus


class ComponentEmbedding(NamedTuple):
    vertices: tuple
    edge_count: int
    face_count: int
    genus: int


def trace_faces(g: Multigraph, rot: RotationSystem) -> tuple:
    """Face boundaries of the embedding: orbits of dart -> successor of the
    reversed dart.  Every dart lies on exactly one face."""
    validate_rotation(g, rot)
    succ = rotation_successor(rot)
    darts = sorted(succ, key=end_sort_key)
    faces = []
    visited = set()
    for start in darts:
        if start in visited:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            visited.add(d)
            d = succ[d.flipped()]
            if d == start:
                break
        faces.append(tuple(face))
    return tuple(faces)


def genus_check(g: Multigraph, rot: RotationSystem) -> tuple:
    """Per-component genus of the embedding certified by ``rot``.

    A component with no edges counts one face.  The genus of a valid
    rotation system is always a non-negative integer.
    """
    faces = trace_faces(g, rot)
    comps = connected_components(g)
    comp_index = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_index[v] = i
    edge_counts = [0] * len(comps)
    for e in g.edges:
        edge_counts[comp_index[e.end0]] += 1
    face_counts = [0] * len(comps)
    for face in faces:
        face_counts[comp_index[g.end_vertex(face[0])]] += 1
    out = []
    for i, comp in enumerate(comps):
        f = face_counts[i] if edge_counts[i] else 1
        euler = len(comp) - edge_counts[i] + f
        if euler % 2:
            raise DomainError("face tracing produced an odd Euler characteristic")
        genus = (2 - euler) // 2
        if genus < 0:
            raise DomainError("face tracing produced a negative genus")
        out.append(ComponentEmbedding(comp, edge_counts[i], f, genus))
    return tuple(out)


def is_planar_embedding(g: Multigraph, rot: RotationSystem) -> bool:
    return all(c.genus == 0 for c in genus_check(g, rot))


# ---------------------------------------------------------------------------
# 2-complexes and link graphs


@dataclass(frozen=True)
class TwoComplex:
    """A multigraph skeleton with 2-cells glued along closed walks.

    ``kind`` records whether the cells are genuine discs or punctured
    (half-open annuli).  The combinatorial data is the same either way,
    and so is the link graph.
    """

    skeleton: Multigraph
    cells: tuple = ()
    kind: str = GENUINE

    def __post_init__(self):
        if self.kind not in (GENUINE, PUNCTURED):
            raise DomainError(f"unknown complex kind {self.kind!r}")
        cells = tuple(c if isinstance(c, ClosedWalk) else ClosedWalk(tuple(c)) for c in self.cells)
        for walk in cells:
            validate_walk(self.skeleton, walk)
        object.__setattr__(self, "cells", cells)


def link_graph(c: TwoComplex) -> PairedGraph:
    """The link graph of a 2-complex, with its default pairing.

    Vertices are the third-edges of the skeleton.  Every cyclically
    consecutive pair of steps in a cell walk contributes one link edge,
    joining the exit third-edge of the first step to the entry third-edge
    of the next; a walk of length k contributes exactly k link edges.
    Parallel link edges and link loops are kept.  The default pairing puts
    (e, 0) with (e, 1) for every skeleton edge e.
    """
    verts = tuple(third_edges(c.skeleton))
    edges = []
    for ci, cell in enumerate(c.cells):
        k = len(cell.steps)
        for j in range(k):
            a = cell.steps[j]
            b = cell.steps[(j + 1) % k]
            exit_third = EdgeEnd(a.edge, 1 - a.entry)
            entry_third = EdgeEnd(b.edge, b.entry)
            edges.append(Edge((ci, j), exit_third, entry_third))
    pairing = Pairing(tuple((EdgeEnd(e.id, 0), EdgeEnd(e.id, 1)) for e in c.skeleton.edges))
    return PairedGraph(Multigraph(verts, tuple(edges)), pairing)


def paired_quotient(pg: PairedGraph) -> Multigraph:
    """Identify the two vertices of every pair, keeping all edges.

    The quotient vertex of a pair is named by the pair's smaller member.
    An edge inside one pair becomes a loop; parallel edges are preserved.
    """
    rep = {v: p[0] for p in pg.pairing.pairs for v in p}
    verts = tuple(p[0] for p in pg.pairing.pairs)
    edges = tuple(Edge(e.id, rep[e.end0], rep[e.end1]) for e in pg.graph.edges)
    return Multigraph(verts, edges)


def simple_quotient(pg: PairedGraph) -> Multigraph:
    """The paired quotient with loops deleted and parallel classes collapsed
    to their smallest edge id.  This is the graph that carries all colouring
    constraints: within-pair adjacencies impose none."""
    q = paired_quotient(pg)
    keep = {}
    for e in q.edges:
        if e.is_loop:
            continue
        key = tuple(sorted((e.end0, e.end1), key=id_sort_key))
        if key not in keep:
            keep[key] = e
    return Multigraph(q.vertices, tuple(keep.values()))


def is_simplicial(c: TwoComplex) -> bool:
    """True iff the skeleton is simple and every cell goes once around a
    triangle (3 distinct vertices, 3 distinct edges)."""
    seen_endpoints = set()
    for e in c.skeleton.edges:
        if e.is_loop:
            return False
        key = tuple(sorted((e.end0, e.end1), key=id_sort_key))
        if key in seen_endpoints:
            return False
        seen_endpoints.add(key)
    for cell in c.cells:
        if len(cell.steps) != 3:
            return False
        edges = {s.edge for s in cell.steps}
        corners = {step_entry_vertex(c.skeleton, s) for s in cell.steps}
        if len(edges) != 3 or len(corners) != 3:
            return False
    return True
