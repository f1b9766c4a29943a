"""Constructive machinery for 2-complexes with prescribed link graphs.

The centrepiece is a pipeline that turns a planar paired graph whose
quotient is K12 into a genuine 2-complex with edge-chromatic number
exactly 12:

1. ``make_degree_faithful`` doubles every edge and balances pairs with
   loops, preserving the embedding's genus and all cross-pair adjacencies;
2. ``pi_trail_decomposition`` splits the edge set into cyclic trails whose
   consecutive edges meet at partnered vertices;
3. ``inverse_link`` rebuilds a punctured 2-complex (one vertex, one loop
   per pair) whose link graph is the input, exactly, under the canonical
   naming of loop ends;
4. ``seal`` replaces each punctured cell walk W by W U U~ W~ (U the first
   step, ~ denoting reversal), turning it into a genuine 2-cell without
   changing the colouring constraints.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .colour import (
    ComplexColouring,
    edge_chromatic_number_complex,
    heawood_colour_12,
    is_valid_complex_colouring,
    pair_chromatic_number,
)
from .core import (
    GENUINE,
    PUNCTURED,
    ClosedWalk,
    Edge,
    EdgeEnd,
    Multigraph,
    PairedGraph,
    Pairing,
    RotationSystem,
    TwoComplex,
    WalkStep,
    connected_components,
    end_sort_key,
    genus_check,
    id_sort_key,
    link_graph,
    paired_quotient,
    simple_quotient,
    validate_rotation,
)
from .errors import DomainError
from .triangulate import SphereTriangulation


def require_certified_planar(pg: PairedGraph) -> None:
    if pg.rotation is None:
        raise DomainError("planarity certificate missing: no rotation system")
    if any(comp.genus != 0 for comp in genus_check(pg.graph, pg.rotation)):
        raise DomainError("planarity certificate invalid: embedding has positive genus")


def is_degree_faithful(pg: PairedGraph) -> bool:
    return all(pg.graph.degree(u) == pg.graph.degree(v) for u, v in pg.pairing.pairs)


# ---------------------------------------------------------------------------
# Genus-preserving rotation surgery


def _insert_parallel(orders: dict, e: Edge, new_id) -> None:
    """Insert a parallel twin of ``e`` next to it in the rotations: after
    the side-0 end, before the side-1 end.  The twin bounds a bigon with
    the original, so the genus is unchanged."""
    at0 = orders[e.end0]
    at0.insert(at0.index(EdgeEnd(e.id, 0)) + 1, EdgeEnd(new_id, 0))
    at1 = orders[e.end1]
    at1.insert(at1.index(EdgeEnd(e.id, 1)), EdgeEnd(new_id, 1))


def _append_loop(orders: dict, v, new_id) -> None:
    """Append a loop as two consecutive rotation entries, which adds a
    monogon face and keeps the genus."""
    orders[v].extend((EdgeEnd(new_id, 0), EdgeEnd(new_id, 1)))


def make_degree_faithful(pg: PairedGraph) -> PairedGraph:
    """Double every edge, then balance each pair with loops at its
    smaller-degree vertex.

    The output pairing is degree-faithful, the genus is unchanged, and the
    simple quotient's cross-pair adjacencies are exactly those of the
    input.
    """
    if pg.rotation is None:
        raise DomainError("rotation system required to augment while preserving genus")
    orders = {v: list(pg.rotation.order_at(v)) for v in pg.graph.vertices}
    edges = list(pg.graph.edges)
    for e in pg.graph.edges:
        new_id = ("dbl", e.id)
        edges.append(Edge(new_id, e.end0, e.end1))
        _insert_parallel(orders, e, new_id)
    degree = {v: len(orders[v]) for v in pg.graph.vertices}
    for u, v in pg.pairing.pairs:
        if degree[u] == degree[v]:
            continue
        w = u if degree[u] < degree[v] else v
        deficit = abs(degree[u] - degree[v])
        # degrees are even after doubling, so the deficit is even
        for i in range(deficit // 2):
            new_id = ("bal", w, i)
            edges.append(Edge(new_id, w, w))
            _append_loop(orders, w, new_id)
    return PairedGraph(
        Multigraph(pg.graph.vertices, tuple(edges)),
        pg.pairing,
        RotationSystem(orders),
    )


# ---------------------------------------------------------------------------
# Trail decomposition


@dataclass(frozen=True)
class PiTrail:
    """Cyclic sequence of directed edges; each step enters its edge at the
    tail side, and the next step's tail vertex is the partner of the
    current step's head vertex."""

    steps: tuple

    def __post_init__(self):
        steps = tuple(s if isinstance(s, WalkStep) else WalkStep(*s) for s in self.steps)
        if not steps:
            raise DomainError("a trail must be nonempty")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)


def validate_trail(pg: PairedGraph, trail: PiTrail) -> None:
    n = len(trail.steps)
    for i in range(n):
        here = trail.steps[i]
        there = trail.steps[(i + 1) % n]
        head = pg.graph.edge(here.edge).endpoint(1 - here.entry)
        tail = pg.graph.edge(there.edge).endpoint(there.entry)
        if tail != pg.pairing.partner(head):
            raise DomainError(f"trail breaks the partner-jump condition at step {i}")


def _euler_circuit(adj: dict, q: Multigraph, start) -> list:
    """Deterministic Hierholzer on a multigraph given sorted incidence
    lists; returns the circuit as entry-side walk steps."""
    ptr = {v: 0 for v in adj}
    used = set()
    stack = [(start, None)]
    out = []
    while stack:
        v, instep = stack[-1]
        lst = adj[v]
        i = ptr[v]
        while i < len(lst) and lst[i].edge in used:
            i += 1
        ptr[v] = i
        if i == len(lst):
            stack.pop()
            if instep is not None:
                out.append(instep)
        else:
            end = lst[i]
            used.add(end.edge)
            w = q.edge(end.edge).endpoint(1 - end.side)
            stack.append((w, WalkStep(end.edge, end.side)))
    out.reverse()
    return out


def pi_trail_decomposition(pg: PairedGraph) -> tuple:
    """Decompose all edges of a degree-faithful paired graph into trails.

    Every quotient vertex has even degree, so each quotient component has
    an Euler circuit; orienting each edge along its circuit traversal makes
    the head count at every vertex equal the tail count at its partner.
    The canonical (sorted) bijection between those ends defines a successor
    permutation on directed edges whose cycles are the trails.  Each edge
    is used exactly once across the decomposition.
    """
    if not is_degree_faithful(pg):
        raise DomainError("pairing is not degree-faithful")
    q = paired_quotient(pg)
    adj = {v: [] for v in q.vertices}
    for e in q.edges:
        adj[e.end0].append(EdgeEnd(e.id, 0))
        adj[e.end1].append(EdgeEnd(e.id, 1))
    for v in adj:
        adj[v].sort(key=end_sort_key)
    orient = {}
    for comp in connected_components(q):
        start = next((v for v in comp if adj[v]), None)
        if start is None:
            continue
        for step in _euler_circuit(adj, q, start):
            orient[step.edge] = step.entry
    assert len(orient) == len(pg.graph.edges)

    heads_at = defaultdict(list)
    tails_at = defaultdict(list)
    for e in pg.graph.edges:
        s = orient[e.id]
        tails_at[e.endpoint(s)].append(EdgeEnd(e.id, s))
        heads_at[e.endpoint(1 - s)].append(EdgeEnd(e.id, 1 - s))
    successor = {}
    for y in pg.graph.vertices:
        partner = pg.pairing.partner(y)
        heads = sorted(heads_at[y], key=end_sort_key)
        tails = sorted(tails_at[partner], key=end_sort_key)
        assert len(heads) == len(tails), "oriented end counts must balance across partners"
        for h, t in zip(heads, tails):
            successor[h] = t

    trails = []
    visited = set()
    for e in pg.graph.edges:
        if e.id in visited:
            continue
        steps = []
        cur = WalkStep(e.id, orient[e.id])
        while cur.edge not in visited:
            visited.add(cur.edge)
            steps.append(cur)
            tail_end = successor[EdgeEnd(cur.edge, 1 - cur.entry)]
            cur = WalkStep(tail_end.edge, tail_end.side)
        trails.append(PiTrail(tuple(steps)))
    return tuple(trails)


# ---------------------------------------------------------------------------
# Inverse link construction and sealing

SKELETON_VERTEX = "h"


def canonical_link_identification(pg: PairedGraph) -> dict:
    """Identify the link vertices of ``inverse_link(pg)`` with the vertices
    of ``pg``: each pair {u, v} (u < v) becomes the loop named u, whose
    side-0 third-edge stands for u and side-1 for v."""
    out = {}
    for u, v in pg.pairing.pairs:
        out[EdgeEnd(u, 0)] = u
        out[EdgeEnd(u, 1)] = v
    return out


def inverse_link(pg: PairedGraph) -> TwoComplex:
    """A punctured 2-complex whose link graph is ``pg``, exactly, under the
    canonical identification of loop ends with paired vertices.

    The skeleton is a single vertex with one loop per pair; each trail of
    the decomposition becomes one punctured-cell walk that enters the loop
    of the pair containing each directed edge's head vertex, through the
    third-edge standing for that head.
    """
    if not is_degree_faithful(pg):
        raise DomainError("pairing is not degree-faithful")
    require_certified_planar(pg)
    trails = pi_trail_decomposition(pg)
    loops = tuple(Edge(u, SKELETON_VERTEX, SKELETON_VERTEX) for u, _ in pg.pairing.pairs)
    skeleton = Multigraph((SKELETON_VERTEX,), loops)
    cells = []
    for trail in trails:
        steps = []
        for st in trail.steps:
            head = pg.graph.edge(st.edge).endpoint(1 - st.entry)
            u, v = pg.pairing.pair_of(head)
            steps.append(WalkStep(u, 0 if head == u else 1))
        cells.append(ClosedWalk(tuple(steps)))
    return TwoComplex(skeleton, tuple(cells), kind=PUNCTURED)


def link_matches_paired_graph(link_pg: PairedGraph, pg: PairedGraph, ident: Optional[dict] = None) -> bool:
    """Exact comparison of a link graph with a paired graph under a vertex
    identification: equal vertex sets, equal edge multisets (as endpoint
    pairs) and equal pairings."""
    if ident is None:
        ident = {v: v for v in link_pg.graph.vertices}
    mapped = [ident[v] for v in link_pg.graph.vertices]
    if len(set(mapped)) != len(mapped) or set(mapped) != set(pg.graph.vertices):
        return False

    def endpoint_multiset(graph, mapping):
        return Counter(
            tuple(sorted((mapping[e.end0], mapping[e.end1]), key=id_sort_key))
            for e in graph.edges
        )

    identity = {v: v for v in pg.graph.vertices}
    if endpoint_multiset(link_pg.graph, ident) != endpoint_multiset(pg.graph, identity):
        return False
    mapped_pairs = {
        tuple(sorted((ident[a], ident[b]), key=id_sort_key)) for a, b in link_pg.pairing.pairs
    }
    return mapped_pairs == set(pg.pairing.pairs)


def seal(c: TwoComplex) -> TwoComplex:
    """Seal every punctured cell: walk W becomes W U U~ W~ with U its first
    step.  Lengths go from k to 2k + 2; the link graph keeps its vertex set
    and gains only duplicate edges and loops, so colouring constraints are
    unchanged."""
    if c.kind != PUNCTURED:
        raise DomainError("only punctured complexes can be sealed")
    cells = []
    for walk in c.cells:
        steps = walk.steps
        first = steps[0]
        sealed = steps + (first, first.flipped()) + tuple(s.flipped() for s in reversed(steps))
        cells.append(ClosedWalk(sealed))
    return TwoComplex(c.skeleton, tuple(cells), GENUINE)


# ---------------------------------------------------------------------------
# Witnesses: a planar paired graph whose quotient is K12


@dataclass(frozen=True)
class TwelvePireWitness:
    """A candidate 12-chromatic planar paired graph, held loosely so that
    verification can report failures instead of refusing to load."""

    graph: Multigraph
    pairs: tuple
    rotation: Optional[RotationSystem]
    designated_pairs: tuple
    provenance: dict = field(default_factory=dict)

    def paired_graph(self) -> PairedGraph:
        return PairedGraph(self.graph, Pairing(self.pairs), self.rotation)


@dataclass(frozen=True)
class WitnessCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class WitnessReport:
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list:
        return [
            f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in self.checks
        ]


def verify_witness(w: TwelvePireWitness) -> WitnessReport:
    """Four checks: genus 0 on every component, perfect pairing, K12 on the
    designated pairs in the simple quotient, and pair-chromatic number
    exactly 12 (lower bound from the clique, upper bound from the
    degeneracy 12-colouring)."""
    checks = []

    if w.rotation is None:
        checks.append(WitnessCheck("planar-embedding", False, "no rotation system"))
    else:
        try:
            validate_rotation(w.graph, w.rotation)
            genera = [c.genus for c in genus_check(w.graph, w.rotation)]
            ok = all(g == 0 for g in genera)
            checks.append(
                WitnessCheck(
                    "planar-embedding",
                    ok,
                    f"component genera {genera}" if genera else "empty graph",
                )
            )
        except DomainError as exc:
            checks.append(WitnessCheck("planar-embedding", False, str(exc)))

    pairing = None
    try:
        pairing = Pairing(w.pairs)
        if set(pairing.members()) != set(w.graph.vertices):
            pairing = None
            raise DomainError("pairing does not cover exactly the vertex set")
        checks.append(
            WitnessCheck("perfect-pairing", True, f"{len(pairing.pairs)} pairs cover all vertices")
        )
    except DomainError as exc:
        checks.append(WitnessCheck("perfect-pairing", False, str(exc)))

    if pairing is None:
        checks.append(WitnessCheck("designated-k12", False, "pairing invalid"))
        checks.append(WitnessCheck("pair-chromatic-12", False, "pairing invalid"))
        return WitnessReport(tuple(checks))

    pg = PairedGraph(w.graph, pairing)
    designated = tuple(tuple(sorted(p, key=id_sort_key)) for p in w.designated_pairs)
    if len(designated) != 12 or any(p not in pairing.pairs for p in designated):
        checks.append(
            WitnessCheck("designated-k12", False, "must designate 12 pairs of the pairing")
        )
    else:
        sq = simple_quotient(pg)
        present = {
            tuple(sorted((e.end0, e.end1), key=id_sort_key)) for e in sq.edges
        }
        reps = sorted((p[0] for p in designated), key=id_sort_key)
        missing = [
            (a, b)
            for i, a in enumerate(reps)
            for b in reps[i + 1 :]
            if (a, b) not in present and (b, a) not in present
        ]
        checks.append(
            WitnessCheck(
                "designated-k12",
                not missing,
                "all 66 pair adjacencies realised" if not missing else f"{len(missing)} adjacencies missing",
            )
        )

    k, _ = pair_chromatic_number(pg)
    detail = f"exact pair-chromatic number {k}"
    if k == 12 and w.rotation is not None and checks[0].passed:
        hw = heawood_colour_12(PairedGraph(w.graph, pairing, w.rotation))
        detail += f"; degeneracy colouring uses {hw.colours_used()} colours"
    checks.append(WitnessCheck("pair-chromatic-12", k == 12, detail))
    return WitnessReport(tuple(checks))


def load_shipped_witness() -> TwelvePireWitness:
    """The witness shipped with the package (also at data/k12_pire.json in
    the source tree)."""
    from importlib import resources

    from . import formats

    ref = resources.files("linkchroma").joinpath("data/k12_pire.json")
    if not ref.is_file():
        raise DomainError("no shipped witness: data/k12_pire.json is missing")
    return formats.witness_from_doc(formats.loads(ref.read_text(encoding="utf-8")))


# ---------------------------------------------------------------------------
# Random generators (property-test utilities)


def random_planar_paired_graph(
    seed,
    n_pairs: int,
    delete_prob: float = 0.12,
    duplicate_prob: float = 0.12,
) -> PairedGraph:
    """Random certified-planar paired graph: grow a triangulation by random
    vertex insertions (genus 0 by construction), randomly delete and
    duplicate some edges, then pair the vertices by a random matching."""
    if n_pairs < 1:
        raise DomainError("need at least one pair")
    rng = random.Random(seed)
    n = 2 * n_pairs
    if n < 3:
        g = Multigraph((0, 1), (Edge(0, 0, 1),))
        orders = {0: [EdgeEnd(0, 0)], 1: [EdgeEnd(0, 1)]}
    else:
        tri = SphereTriangulation()
        while tri.num_vertices < n:
            tri.insert_vertex(rng.randrange(tri.num_darts))
        g, rot = tri.to_graph_and_rotation()
        orders = {v: list(rot.order_at(v)) for v in g.vertices}
    edges = {e.id: e for e in g.edges}
    for e in list(edges.values()):
        if rng.random() < delete_prob:
            del edges[e.id]
            orders[e.end0].remove(EdgeEnd(e.id, 0))
            orders[e.end1].remove(EdgeEnd(e.id, 1))
    for e in list(edges.values()):
        if rng.random() < duplicate_prob:
            new_id = ("dup", e.id)
            edges[new_id] = Edge(new_id, e.end0, e.end1)
            _insert_parallel(orders, e, new_id)
    verts = list(g.vertices)
    rng.shuffle(verts)
    pairing = Pairing(tuple((verts[2 * i], verts[2 * i + 1]) for i in range(n_pairs)))
    return PairedGraph(
        Multigraph(g.vertices, tuple(edges.values())), pairing, RotationSystem(orders)
    )


def random_degree_faithful_planar(seed, n_pairs: int) -> PairedGraph:
    return make_degree_faithful(random_planar_paired_graph(seed, n_pairs))


# ---------------------------------------------------------------------------
# The full pipeline


@dataclass(frozen=True)
class PipelineStages:
    witness: TwelvePireWitness
    augmented: PairedGraph
    punctured: TwoComplex
    sealed: TwoComplex
    edge_chromatic: int
    exact_colouring: ComplexColouring
    degeneracy_colouring: ComplexColouring


def run_pipeline(witness: Optional[TwelvePireWitness] = None) -> PipelineStages:
    """Witness -> degree-faithful augmentation -> inverse link -> sealing,
    with every stage guarantee checked at build time.

    The sealed complex's edge-chromatic number is exactly 12: the lower
    bound comes from the K12 quotient clique via the exact solver, and the
    12-colour upper bound from the degeneracy colouring of the augmented
    map, whose simple quotient equals the sealed link graph's.
    """
    if witness is None:
        witness = load_shipped_witness()
    report = verify_witness(witness)
    if not report.all_passed:
        failed = ", ".join(c.name for c in report.checks if not c.passed)
        raise DomainError(f"witness failed verification: {failed}")

    augmented = make_degree_faithful(witness.paired_graph())
    punctured = inverse_link(augmented)
    ident = canonical_link_identification(augmented)
    if not link_matches_paired_graph(link_graph(punctured), augmented, ident):
        raise DomainError("internal error: inverse link does not reproduce the augmented map")

    sealed = seal(punctured)
    link_p = link_graph(punctured)
    link_s = link_graph(sealed)
    if set(link_s.graph.vertices) != set(link_p.graph.vertices):
        raise DomainError("internal error: sealing changed the link graph's vertex set")
    pairs_p = Counter(
        tuple(sorted((e.end0, e.end1), key=id_sort_key)) for e in link_p.graph.edges
    )
    pairs_s = Counter(
        tuple(sorted((e.end0, e.end1), key=id_sort_key)) for e in link_s.graph.edges
    )
    if pairs_p - pairs_s:
        raise DomainError("internal error: sealing lost link edges")

    k, exact_colouring = edge_chromatic_number_complex(sealed)
    if k != 12:
        raise DomainError(f"pipeline produced edge-chromatic number {k}, expected 12")

    hw = heawood_colour_12(augmented)
    degeneracy_colouring = ComplexColouring(
        hw.palette_size,
        {pair[0]: hw.assignment[pair] for pair in augmented.pairing.pairs},
    )
    if not is_valid_complex_colouring(sealed, degeneracy_colouring):
        raise DomainError("internal error: degeneracy colouring fails on the sealed complex")

    return PipelineStages(
        witness=witness,
        augmented=augmented,
        punctured=punctured,
        sealed=sealed,
        edge_chromatic=k,
        exact_colouring=exact_colouring,
        degeneracy_colouring=degeneracy_colouring,
    )


def build_non_11_colourable(witness: Optional[TwelvePireWitness] = None) -> TwoComplex:
    """The genuine 2-complex that needs 12 colours (and so is not
    11-colourable)."""
    return run_pipeline(witness).sealed
