import pytest

from linkchroma import (
    ClosedWalk,
    DomainError,
    Edge,
    EdgeEnd,
    Multigraph,
    PairedGraph,
    Pairing,
    RotationSystem,
    TwoComplex,
    WalkStep,
    connected_components,
    genus_check,
    is_planar_embedding,
    is_simplicial,
    link_graph,
    paired_quotient,
    simple_quotient,
    third_edges,
    trace_faces,
    validate_walk,
    walk_concat,
    walk_reverse,
)
from linkchroma.catalogue import (
    k4_with_planar_rotation,
    k5_graph,
    one_loop_complex,
    tetrahedron_complex,
    triangle_complex,
)


def edge_pairs(g):
    """Multiset of unordered endpoint pairs, for id-free comparisons."""
    from collections import Counter
    from linkchroma import id_sort_key

    return Counter(tuple(sorted((e.end0, e.end1), key=id_sort_key)) for e in g.edges)


class TestMultigraph:
    def test_degree_counts_loops_twice(self):
        g = Multigraph(("v",), (Edge("e", "v", "v"),))
        assert g.degree("v") == 2

    def test_duplicate_edge_id_rejected(self):
        with pytest.raises(DomainError):
            Multigraph(("u", "v"), (Edge("e", "u", "v"), Edge("e", "v", "u")))

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(DomainError):
            Multigraph(("u", "u"), ())

    def test_dangling_endpoint_rejected(self):
        with pytest.raises(DomainError):
            Multigraph(("u",), (Edge("e", "u", "v"),))

    def test_storage_is_sorted(self):
        g = Multigraph((3, 1, 2), (Edge("b", 1, 2), Edge("a", 2, 3)))
        assert g.vertices == (1, 2, 3)
        assert [e.id for e in g.edges] == ["a", "b"]

    def test_components(self):
        g = Multigraph((1, 2, 3, 4), (Edge("e", 1, 2),))
        assert connected_components(g) == ((1, 2), (3,), (4,))


class TestThirdEdges:
    def test_single_edge(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        assert third_edges(g) == [EdgeEnd("e", 0), EdgeEnd("e", 1)]

    def test_loop_still_has_two_ends(self):
        g = Multigraph(("v",), (Edge("e", "v", "v"),))
        assert third_edges(g) == [EdgeEnd("e", 0), EdgeEnd("e", 1)]

    def test_triangle_has_six(self):
        assert len(third_edges(triangle_complex().skeleton)) == 6


class TestWalks:
    def test_validation_rejects_unknown_edge(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        with pytest.raises(DomainError):
            validate_walk(g, ClosedWalk((WalkStep("f", 0),)))

    def test_validation_rejects_incompatible_steps(self):
        g = Multigraph(("u", "v", "w"), (Edge("e", "u", "v"), Edge("f", "w", "w")))
        with pytest.raises(DomainError):
            validate_walk(g, ClosedWalk((WalkStep("e", 0), WalkStep("f", 0))))

    def test_empty_walk_rejected(self):
        with pytest.raises(DomainError):
            ClosedWalk(())

    def test_reverse_flips_entry_side(self):
        w = ClosedWalk((WalkStep("e", 0),))
        assert walk_reverse(w).steps == (WalkStep("e", 1),)

    def test_reverse_is_involution(self):
        w = triangle_complex().cells[0]
        assert walk_reverse(walk_reverse(w)) == w

    def test_reverse_preserves_validity(self):
        c = tetrahedron_complex()
        for cell in c.cells:
            validate_walk(c.skeleton, walk_reverse(cell))

    def test_concat_lengths_add(self):
        c = triangle_complex()
        g = c.skeleton
        w2 = ClosedWalk((WalkStep("a", 0), WalkStep("a", 1)))  # u -> v -> u
        w3 = c.cells[0]  # u -> v -> w -> u
        out = walk_concat(g, [w2, w3])
        assert len(out) == 5
        validate_walk(g, out)

    def test_concat_rejects_incompatible_junctions(self):
        c = triangle_complex()
        g = c.skeleton
        at_u = c.cells[0]
        at_v = ClosedWalk((WalkStep("b", 0), WalkStep("b", 1)))  # v -> w -> v
        with pytest.raises(DomainError):
            walk_concat(g, [at_u, at_v])


class TestLinkGraph:
    def test_triangle_link_is_perfect_matching(self):
        L = link_graph(triangle_complex())
        assert len(L.graph.vertices) == 6
        assert edge_pairs(L.graph) == {
            (EdgeEnd("a", 1), EdgeEnd("b", 0)): 1,
            (EdgeEnd("b", 1), EdgeEnd("c", 0)): 1,
            (EdgeEnd("a", 0), EdgeEnd("c", 1)): 1,
        }

    def test_tetrahedron_link_is_four_disjoint_triangles(self):
        L = link_graph(tetrahedron_complex())
        assert len(L.graph.vertices) == 12
        assert len(L.graph.edges) == 12
        comps = connected_components(L.graph)
        assert len(comps) == 4
        assert all(len(comp) == 3 for comp in comps)
        # each component is a triangle: 3 vertices, 3 edges among them
        for comp in comps:
            members = set(comp)
            count = sum(1 for e in L.graph.edges if e.end0 in members and e.end1 in members)
            assert count == 3

    def test_one_loop_link_is_single_within_pair_edge(self):
        L = link_graph(one_loop_complex())
        assert len(L.graph.vertices) == 2
        assert edge_pairs(L.graph) == {(EdgeEnd("e", 0), EdgeEnd("e", 1)): 1}
        assert L.pairing.pairs == ((EdgeEnd("e", 0), EdgeEnd("e", 1)),)

    def test_invariant_counts(self):
        for c in (triangle_complex(), tetrahedron_complex(), one_loop_complex()):
            L = link_graph(c)
            assert len(L.graph.vertices) == 2 * len(c.skeleton.edges)
            assert len(L.graph.edges) == sum(len(cell) for cell in c.cells)

    def test_puncturing_invariance(self):
        c = triangle_complex()
        punctured = TwoComplex(c.skeleton, c.cells, kind="punctured")
        assert link_graph(c) == link_graph(punctured)

    def test_rejects_walk_not_in_skeleton(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        with pytest.raises(DomainError):
            TwoComplex(g, (ClosedWalk((WalkStep("zzz", 0),)),))


class TestQuotients:
    def test_triangle_quotient_is_triangle(self):
        L = link_graph(triangle_complex())
        q = paired_quotient(L)
        assert q.vertices == (EdgeEnd("a", 0), EdgeEnd("b", 0), EdgeEnd("c", 0))
        assert len(q.edges) == 3
        assert edge_pairs(q) == {
            (EdgeEnd("a", 0), EdgeEnd("b", 0)): 1,
            (EdgeEnd("b", 0), EdgeEnd("c", 0)): 1,
            (EdgeEnd("a", 0), EdgeEnd("c", 0)): 1,
        }

    def test_tetrahedron_quotient_is_octahedron(self):
        L = link_graph(tetrahedron_complex())
        q = simple_quotient(L)
        assert len(q.vertices) == 6
        assert len(q.edges) == 12
        # octahedron: every vertex has degree 4, opposite K4 edges non-adjacent
        assert all(q.degree(v) == 4 for v in q.vertices)

    def test_within_pair_edge_becomes_loop(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        pg = PairedGraph(g, Pairing((("u", "v"),)))
        q = paired_quotient(pg)
        assert q.vertices == ("u",)
        assert q.edges == (Edge("e", "u", "u"),)
        assert simple_quotient(pg).edges == ()

    def test_parallel_quotient_edges_collapse(self):
        g = Multigraph(
            ("a", "b", "c", "d"),
            (Edge(1, "a", "c"), Edge(2, "a", "d"), Edge(3, "b", "c")),
        )
        pg = PairedGraph(g, Pairing((("a", "b"), ("c", "d"))))
        q = paired_quotient(pg)
        assert len(q.edges) == 3
        sq = simple_quotient(pg)
        assert len(sq.edges) == 1
        assert sq.edges[0].id == 1  # smallest id in the parallel class survives

    def test_quotient_preserves_edge_count(self):
        L = link_graph(tetrahedron_complex())
        assert len(paired_quotient(L).edges) == len(L.graph.edges)


class TestGenus:
    def test_k4_planar_rotation(self):
        g, rot = k4_with_planar_rotation()
        (comp,) = genus_check(g, rot)
        assert comp.face_count == 4
        assert comp.genus == 0
        assert is_planar_embedding(g, rot)

    def test_k5_any_rotation_has_positive_genus(self):
        g = k5_graph()
        rot = RotationSystem({v: g.ends_at(v) for v in g.vertices})
        assert all(comp.genus >= 1 for comp in genus_check(g, rot))

    def test_single_vertex_no_edges(self):
        g = Multigraph((0,), ())
        (comp,) = genus_check(g, RotationSystem({}))
        assert comp == ((0,), 0, 1, 0)

    def test_each_dart_on_exactly_one_face(self):
        g, rot = k4_with_planar_rotation()
        faces = trace_faces(g, rot)
        darts = [d for face in faces for d in face]
        assert len(darts) == 12
        assert len(set(darts)) == 12

    def test_malformed_rotation_rejected(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        with pytest.raises(DomainError):
            genus_check(g, RotationSystem({"u": (EdgeEnd("e", 0),)}))  # missing (e,1)
        with pytest.raises(DomainError):
            genus_check(
                g,
                RotationSystem(
                    {"u": (EdgeEnd("e", 0), EdgeEnd("e", 0)), "v": (EdgeEnd("e", 1),)}
                ),
            )

    def test_rotation_at_wrong_vertex_rejected(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        with pytest.raises(DomainError):
            genus_check(
                g, RotationSystem({"u": (EdgeEnd("e", 1),), "v": (EdgeEnd("e", 0),)})
            )


class TestPairings:
    def test_classes_must_have_two_distinct_members(self):
        with pytest.raises(DomainError):
            Pairing((("u", "u"),))
        with pytest.raises(DomainError):
            Pairing((("u", "v", "w"),))

    def test_disjointness(self):
        with pytest.raises(DomainError):
            Pairing((("u", "v"), ("v", "w")))

    def test_paired_graph_requires_exact_cover(self):
        g = Multigraph(("u", "v", "w"), ())
        with pytest.raises(DomainError):
            PairedGraph(g, Pairing((("u", "v"),)))

    def test_partner_and_representative(self):
        p = Pairing(((2, 1), (3, 4)))
        assert p.pairs == ((1, 2), (3, 4))
        assert p.partner(2) == 1
        assert p.representative(4) == 3


class TestSimplicial:
    def test_classics(self):
        assert is_simplicial(tetrahedron_complex())
        assert is_simplicial(triangle_complex())
        assert not is_simplicial(one_loop_complex())

    def test_parallel_edges_break_simpliciality(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"), Edge("f", "u", "v")))
        assert not is_simplicial(TwoComplex(g, ()))

    def test_non_triangle_walk_breaks_simpliciality(self):
        c = triangle_complex()
        back_and_forth = ClosedWalk((WalkStep("a", 0), WalkStep("a", 1)))
        assert not is_simplicial(TwoComplex(c.skeleton, (back_and_forth,)))
