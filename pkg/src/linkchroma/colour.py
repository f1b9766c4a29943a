"""Colouring of paired graphs and 2-complexes.

Three independently computable quantities agree for every 2-complex: its
edge-chromatic number, the pair-chromatic number of its link graph, and
the vertex-chromatic number of the link graph's simple quotient.  This
module provides the validity checkers, an exact branch-and-bound solver,
a walk-level brute-force oracle, and the degeneracy-greedy 12-colouring
of planar paired graphs (empire maps with two countries per empire).

Colouring semantics: an edge joining two vertices of the same pair,
including loops, imposes no constraint.  All constraint checking routes
through ``simple_quotient``, except the walk-level complex checker which
is deliberately independent of link graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional

from .core import (
    Multigraph,
    PairedGraph,
    TwoComplex,
    EdgeEnd,
    genus_check,
    id_sort_key,
    link_graph,
    simple_quotient,
)
from .errors import DomainError


@dataclass(frozen=True)
class PairColouring:
    """Colours on the pairs of a paired graph, keyed by the canonical
    (smaller, larger) pair tuple.  Colours are 0-based and < palette_size."""

    palette_size: int
    assignment: Mapping

    def __post_init__(self):
        assignment = dict(self.assignment)
        for pair, colour in assignment.items():
            if not isinstance(colour, int) or isinstance(colour, bool):
                raise DomainError(f"colour of pair {pair!r} must be an integer")
            if not 0 <= colour < self.palette_size:
                raise DomainError(
                    f"colour {colour} of pair {pair!r} is outside palette of size {self.palette_size}"
                )
        object.__setattr__(self, "assignment", assignment)

    def colours_used(self) -> int:
        return len(set(self.assignment.values()))


@dataclass(frozen=True)
class ComplexColouring:
    """Colours on the edges of a 2-complex, keyed by edge id."""

    palette_size: int
    assignment: Mapping

    def __post_init__(self):
        assignment = dict(self.assignment)
        for edge, colour in assignment.items():
            if not isinstance(colour, int) or isinstance(colour, bool):
                raise DomainError(f"colour of edge {edge!r} must be an integer")
            if not 0 <= colour < self.palette_size:
                raise DomainError(
                    f"colour {colour} of edge {edge!r} is outside palette of size {self.palette_size}"
                )
        object.__setattr__(self, "assignment", assignment)

    def colours_used(self) -> int:
        return len(set(self.assignment.values()))


def is_valid_pair_colouring(pg: PairedGraph, colouring: PairColouring) -> bool:
    """True iff distinct pairs joined by an edge receive distinct colours.

    Within-pair edges are exempt; the check runs on the simple quotient.
    """
    colour_of_rep = {}
    for pair in pg.pairing.pairs:
        if pair not in colouring.assignment:
            raise DomainError(f"pair {pair!r} is uncoloured")
        colour_of_rep[pair[0]] = colouring.assignment[pair]
    for e in simple_quotient(pg).edges:
        if colour_of_rep[e.end0] == colour_of_rep[e.end1]:
            return False
    return True


def is_valid_complex_colouring(c: TwoComplex, colouring: ComplexColouring) -> bool:
    """True iff no cell boundary enters and leaves a vertex through two
    distinct equal-coloured edges.

    Checked directly on the cell walks, independently of the link graph.
    """
    for e in c.skeleton.edges:
        if e.id not in colouring.assignment:
            raise DomainError(f"edge {e.id!r} is uncoloured")
    col = colouring.assignment
    for cell in c.cells:
        k = len(cell.steps)
        for i in range(k):
            exit_edge = cell.steps[i].edge
            entry_edge = cell.steps[(i + 1) % k].edge
            if exit_edge != entry_edge and col[exit_edge] == col[entry_edge]:
                return False
    return True


# ---------------------------------------------------------------------------
# Exact vertex chromatic number: clique-seeded DSATUR branch and bound


def _simple_adjacency(g: Multigraph) -> dict:
    """Adjacency sets with loops dropped and parallels collapsed."""
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        if not e.is_loop:
            adj[e.end0].add(e.end1)
            adj[e.end1].add(e.end0)
    return adj


def _greedy_clique(adj: dict) -> list:
    """Deterministic greedy clique: repeatedly add the candidate of highest
    degree within the candidate set, lowest id first on ties."""
    if not adj:
        return []
    clique = []
    candidates = set(adj)
    while candidates:
        v = min(candidates, key=lambda u: (-len(adj[u] & candidates), id_sort_key(u)))
        clique.append(v)
        candidates &= adj[v]
    return clique


@dataclass
class SolverLog:
    """Diagnostics from one exact solve."""

    clique: list
    dsatur_upper: int
    branch_nodes: int

    def as_dict(self) -> dict:
        return {
            "clique_size": len(self.clique),
            "clique": list(self.clique),
            "dsatur_upper": self.dsatur_upper,
            "branch_nodes": self.branch_nodes,
        }


def chromatic_number(g: Multigraph, log: Optional[SolverLog] = None):
    """Exact vertex chromatic number with a witness colouring.

    Loops are removed and parallel edges collapsed before colouring.  The
    search is a clique-seeded DSATUR branch and bound with deterministic
    tie-breaking (lowest vertex id, lowest colour first), so the witness is
    reproducible.  The empty graph has chromatic number 0.
    """
    adj = _simple_adjacency(g)
    n = len(adj)
    if n == 0:
        if log is not None:
            log.clique, log.dsatur_upper, log.branch_nodes = [], 0, 0
        return 0, {}

    order_key = {v: id_sort_key(v) for v in adj}
    clique = _greedy_clique(adj)

    # DSATUR greedy upper bound, also the initial incumbent witness.
    colours = {}
    saturation = {v: set() for v in adj}
    for _ in range(n):
        v = min(
            (u for u in adj if u not in colours),
            key=lambda u: (-len(saturation[u]), -len(adj[u]), order_key[u]),
        )
        c = 0
        while c in saturation[v]:
            c += 1
        colours[v] = c
        for w in adj[v]:
            saturation[w].add(c)
    best_k = max(colours.values()) + 1
    best_witness = dict(colours)
    dsatur_upper = best_k

    lower = len(clique)
    nodes = 0

    if best_k > lower:
        # Branch and bound; the clique is pre-coloured 0..len(clique)-1 and a
        # fresh colour may only be the next unused one, both exactness-safe
        # symmetry breaks.
        assign = {v: i for i, v in enumerate(clique)}
        sat = {v: {assign[w] for w in adj[v] & set(assign)} for v in adj}

        def extend(used: int):
            nonlocal best_k, best_witness, nodes
            if best_k == lower:
                return
            if len(assign) == n:
                if used < best_k:
                    best_k = used
                    best_witness = dict(assign)
                return
            v = min(
                (u for u in adj if u not in assign),
                key=lambda u: (-len(sat[u]), -len(adj[u]), order_key[u]),
            )
            limit = min(used + 1, best_k - 1)
            for c in range(limit):
                if c in sat[v]:
                    continue
                nodes += 1
                assign[v] = c
                touched = [w for w in adj[v] if w not in assign and c not in sat[w]]
                for w in touched:
                    sat[w].add(c)
                extend(max(used, c + 1))
                for w in touched:
                    sat[w].discard(c)
                del assign[v]
                if best_k == lower:
                    return

        extend(len(clique))

    if log is not None:
        log.clique = clique
        log.dsatur_upper = dsatur_upper
        log.branch_nodes = nodes
    return best_k, best_witness


def pair_chromatic_number(pg: PairedGraph, log: Optional[SolverLog] = None):
    """Exact pair-chromatic number: the chromatic number of the simple
    quotient, with the witness lifted back to pairs."""
    k, witness = chromatic_number(simple_quotient(pg), log)
    assignment = {pair: witness[pair[0]] for pair in pg.pairing.pairs}
    return k, PairColouring(k, assignment)


def edge_chromatic_number_complex(c: TwoComplex, log: Optional[SolverLog] = None):
    """Exact edge-chromatic number of a 2-complex via its link graph.

    The witness colours each edge e with the colour of the pair
    {(e,0), (e,1)} and is checked against the walk-level validator before
    being returned.
    """
    k, pair_witness = pair_chromatic_number(link_graph(c), log)
    assignment = {
        e.id: pair_witness.assignment[(EdgeEnd(e.id, 0), EdgeEnd(e.id, 1))]
        for e in c.skeleton.edges
    }
    witness = ComplexColouring(k, assignment)
    if not is_valid_complex_colouring(c, witness):
        raise DomainError("internal error: edge-chromatic witness failed the walk-level check")
    return k, witness


def brute_force_edge_chromatic(c: TwoComplex, k_max: int, force: bool = False) -> int:
    """Smallest palette size admitting a valid edge colouring, by exhaustive
    search over assignments checked with the walk-level validator.

    Independent of the link-graph route.  Guarded to complexes with at most
    12 edges unless ``force`` is given.  The first edge's colour is fixed to
    0 (colour permutations are symmetries).
    """
    edge_ids = [e.id for e in c.skeleton.edges]
    if len(edge_ids) > 12 and not force:
        raise DomainError("refusing brute force on more than 12 edges (use force=True)")
    if not edge_ids:
        return 0
    for k in range(1, k_max + 1):
        for rest in itertools.product(range(k), repeat=len(edge_ids) - 1):
            assignment = dict(zip(edge_ids, (0,) + rest))
            if is_valid_complex_colouring(c, ComplexColouring(k, assignment)):
                return k
    raise DomainError(f"no valid colouring with at most {k_max} colours")


# ---------------------------------------------------------------------------
# Degeneracy-greedy 12-colouring of certified-planar paired graphs


def _require_planar_certificate(pg: PairedGraph) -> None:
    if pg.rotation is None:
        raise DomainError("planarity certificate missing: no rotation system")
    if any(comp.genus != 0 for comp in genus_check(pg.graph, pg.rotation)):
        raise DomainError("planarity certificate invalid: embedding has positive genus")


def heawood_degeneracy_order(pg: PairedGraph) -> list:
    """Elimination order of pairs by repeatedly removing a pair of minimum
    degree in the current simple quotient (lowest pair id on ties).

    Requires a certified planar input.  Returns (pair, degree-at-removal)
    records; Euler's formula for planar graphs guarantees every recorded
    degree is at most 11, and the function asserts this.
    """
    _require_planar_certificate(pg)
    sq = simple_quotient(pg)
    adj = _simple_adjacency(sq)
    pair_of_rep = {pair[0]: pair for pair in pg.pairing.pairs}
    order = []
    remaining = set(adj)
    while remaining:
        v = min(remaining, key=lambda u: (len(adj[u] & remaining), id_sort_key(u)))
        degree = len(adj[v] & remaining)
        assert degree <= 11, "planar paired graph produced a quotient of minimum degree > 11"
        order.append((pair_of_rep[v], degree))
        remaining.discard(v)
    return order


def heawood_colour_12(pg: PairedGraph) -> PairColouring:
    """12-pair-colouring of a certified-planar paired graph.

    Greedy back-insertion along the reverse elimination order; each pair
    takes the smallest colour in 0..11 unused by its already-coloured
    quotient neighbours.  Always succeeds on certified inputs.
    """
    order = heawood_degeneracy_order(pg)
    adj = _simple_adjacency(simple_quotient(pg))
    assignment = {}
    colour_of_rep = {}
    for pair, _ in reversed(order):
        rep = pair[0]
        used = {colour_of_rep[w] for w in adj[rep] if w in colour_of_rep}
        colour = next(c for c in range(12) if c not in used)
        assignment[pair] = colour
        colour_of_rep[rep] = colour
    palette = max(assignment.values()) + 1 if assignment else 0
    return PairColouring(palette, assignment)
