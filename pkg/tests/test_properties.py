import hypothesis.strategies as st
from hypothesis import given, settings

from linkchroma import (
    TwoComplex,
    chromatic_number,
    genus_check,
    link_graph,
    paired_quotient,
    simple_quotient,
    third_edges,
    trace_faces,
    validate_walk,
    walk_reverse,
)
from linkchroma.catalogue import k5_graph
from linkchroma.corpus import chromatic_number_reference

from strategies import complexes, multigraphs, rotations


@given(complexes())
def test_walk_reverse_is_involution_and_valid(c):
    for cell in c.cells:
        validate_walk(c.skeleton, cell)
        rev = walk_reverse(cell)
        validate_walk(c.skeleton, rev)
        assert walk_reverse(rev) == cell


@given(complexes())
def test_link_graph_counts(c):
    L = link_graph(c)
    assert len(L.graph.vertices) == 2 * len(c.skeleton.edges)
    assert len(L.graph.edges) == sum(len(cell) for cell in c.cells)
    assert len(L.pairing.pairs) == len(c.skeleton.edges)


@given(complexes())
def test_link_graph_invariant_under_puncturing(c):
    flipped = "punctured" if c.kind == "genuine" else "genuine"
    assert link_graph(c) == link_graph(TwoComplex(c.skeleton, c.cells, flipped))


@given(complexes())
def test_quotient_preserves_edge_count(c):
    L = link_graph(c)
    q = paired_quotient(L)
    assert len(q.edges) == len(L.graph.edges)
    n = len(L.pairing.pairs)
    assert len(simple_quotient(L).edges) <= min(len(q.edges), n * (n - 1) // 2)


@given(complexes())
def test_third_edges_are_link_vertices(c):
    assert tuple(third_edges(c.skeleton)) == link_graph(c).graph.vertices


@given(multigraphs())
def test_random_rotations_trace_consistently(g):
    rot = _any_rotation(g)
    faces = trace_faces(g, rot)
    darts = [d for f in faces for d in f]
    assert len(darts) == 2 * len(g.edges)
    assert len(set(darts)) == len(darts)
    for comp in genus_check(g, rot):
        assert comp.genus >= 0
        assert (len(comp.vertices) - comp.edge_count + comp.face_count) % 2 == 0


def _any_rotation(g):
    from linkchroma import RotationSystem

    return RotationSystem({v: g.ends_at(v) for v in g.vertices})


@given(rotations(k5_graph()))
@settings(max_examples=40)
def test_k5_has_no_planar_rotation(rot):
    g = k5_graph()
    assert any(comp.genus >= 1 for comp in genus_check(g, rot))


@given(multigraphs(max_vertices=7, max_edges=10))
@settings(max_examples=60, deadline=None)
def test_solver_matches_reference(g):
    assert chromatic_number(g)[0] == chromatic_number_reference(g)


@given(multigraphs(max_vertices=7, max_edges=10))
@settings(max_examples=60, deadline=None)
def test_solver_witness_is_proper(g):
    k, witness = chromatic_number(g)
    assert set(witness) == set(g.vertices)
    for e in g.edges:
        if not e.is_loop:
            assert witness[e.end0] != witness[e.end1]
    assert all(0 <= c < k for c in witness.values())


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=20))
@settings(max_examples=25, deadline=None)
def test_random_planar_generator_is_certified(seed, n_pairs):
    from linkchroma.construct import random_planar_paired_graph

    pg = random_planar_paired_graph(seed, n_pairs)
    assert all(comp.genus == 0 for comp in genus_check(pg.graph, pg.rotation))
    sq = simple_quotient(pg)
    if sq.vertices:
        assert min(sq.degree(v) for v in sq.vertices) <= 11


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=12))
@settings(max_examples=25, deadline=None)
def test_round_trip_property(seed, n_pairs):
    from linkchroma.construct import (
        canonical_link_identification,
        inverse_link,
        link_matches_paired_graph,
        random_degree_faithful_planar,
    )

    pg = random_degree_faithful_planar(seed, n_pairs)
    assert link_matches_paired_graph(
        link_graph(inverse_link(pg)), pg, canonical_link_identification(pg)
    )


@given(complexes(max_vertices=3, max_edges=3, max_cells=2))
@settings(max_examples=40, deadline=None)
def test_three_chromatic_quantities_agree(c):
    from linkchroma import brute_force_edge_chromatic, pair_chromatic_number

    genuine = TwoComplex(c.skeleton, c.cells, "genuine")
    bf = brute_force_edge_chromatic(genuine, k_max=8)
    L = link_graph(genuine)
    assert bf == pair_chromatic_number(L)[0]
    assert bf == chromatic_number(simple_quotient(L))[0]
