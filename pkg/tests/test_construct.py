from collections import Counter

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
    genus_check,
    id_sort_key,
    link_graph,
    pair_chromatic_number,
    simple_quotient,
)
from linkchroma.construct import (
    canonical_link_identification,
    inverse_link,
    is_degree_faithful,
    link_matches_paired_graph,
    make_degree_faithful,
    pi_trail_decomposition,
    random_degree_faithful_planar,
    random_planar_paired_graph,
    seal,
    validate_trail,
)


def single_pair_single_edge():
    g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
    rot = RotationSystem({"u": (EdgeEnd("e", 0),), "v": (EdgeEnd("e", 1),)})
    return PairedGraph(g, Pairing((("u", "v"),)), rot)


def cross_pair_adjacencies(pg):
    return {
        tuple(sorted((e.end0, e.end1), key=id_sort_key))
        for e in simple_quotient(pg).edges
    }


class TestMakeDegreeFaithful:
    def test_requires_rotation(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"),))
        pg = PairedGraph(g, Pairing((("u", "v"),)))
        with pytest.raises(DomainError):
            make_degree_faithful(pg)

    def test_already_faithful_input_only_doubles(self):
        pg = single_pair_single_edge()
        out = make_degree_faithful(pg)
        assert is_degree_faithful(out)
        assert len(out.graph.edges) == 2
        assert out.graph.degree("u") == out.graph.degree("v") == 2

    def test_unbalanced_pair_gets_loops(self):
        # deg(u) = 1, deg(v) = 3; after doubling 2 and 6; two loops at u
        g = Multigraph(
            ("u", "v", "x", "y"),
            (Edge("a", "u", "v"), Edge("b", "v", "x"), Edge("c", "v", "y"), Edge("d", "x", "y")),
        )
        rot = RotationSystem(
            {
                "u": (EdgeEnd("a", 0),),
                "v": (EdgeEnd("a", 1), EdgeEnd("b", 0), EdgeEnd("c", 0)),
                "x": (EdgeEnd("b", 1), EdgeEnd("d", 0)),
                "y": (EdgeEnd("d", 1), EdgeEnd("c", 1)),
            }
        )
        pg = PairedGraph(g, Pairing((("u", "v"), ("x", "y"))), rot)
        assert all(c.genus == 0 for c in genus_check(g, rot))
        out = make_degree_faithful(pg)
        assert is_degree_faithful(out)
        assert out.graph.degree("u") == out.graph.degree("v") == 6
        loops = [e for e in out.graph.edges if e.is_loop]
        assert len(loops) == 2 and all(e.end0 == "u" for e in loops)

    def test_single_pair_no_edges_unchanged(self):
        g = Multigraph(("u", "v"), ())
        pg = PairedGraph(g, Pairing((("u", "v"),)), RotationSystem({}))
        out = make_degree_faithful(pg)
        assert out.graph.edges == ()

    def test_preserves_genus_and_adjacency_and_chromatic(self):
        for seed in range(20):
            pg = random_planar_paired_graph(seed, 1 + seed % 8)
            out = make_degree_faithful(pg)
            assert is_degree_faithful(out)
            assert all(c.genus == 0 for c in genus_check(out.graph, out.rotation))
            assert cross_pair_adjacencies(out) == cross_pair_adjacencies(pg)
            assert pair_chromatic_number(out)[0] == pair_chromatic_number(pg)[0]


class TestTrailDecomposition:
    def test_requires_degree_faithful(self):
        g = Multigraph(
            ("u", "v", "w", "x"), (Edge("a", "u", "v"), Edge("b", "u", "w"))
        )
        pg = PairedGraph(g, Pairing((("u", "v"), ("w", "x"))))
        with pytest.raises(DomainError):
            pi_trail_decomposition(pg)

    def test_single_edge_single_trail(self):
        pg = single_pair_single_edge()
        trails = pi_trail_decomposition(pg)
        assert len(trails) == 1 and len(trails[0]) == 1
        validate_trail(pg, trails[0])

    def test_two_parallel_edges(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"), Edge("f", "u", "v")))
        pg = PairedGraph(g, Pairing((("u", "v"),)))
        trails = pi_trail_decomposition(pg)
        used = sorted(s.edge for t in trails for s in t.steps)
        assert used == ["e", "f"]
        for t in trails:
            validate_trail(pg, t)

    def test_covers_each_edge_once(self):
        for seed in range(25):
            pg = random_degree_faithful_planar(seed, 1 + seed % 10)
            trails = pi_trail_decomposition(pg)
            used = sorted((s.edge for t in trails for s in t.steps), key=id_sort_key)
            assert used == sorted(pg.graph.edge_ids(), key=id_sort_key)
            for t in trails:
                validate_trail(pg, t)

    def test_deterministic(self):
        pg = random_degree_faithful_planar(5, 6)
        assert pi_trail_decomposition(pg) == pi_trail_decomposition(pg)


class TestInverseLink:
    def test_single_pair_single_edge(self):
        pg = make_degree_faithful(single_pair_single_edge())
        c = inverse_link(pg)
        assert c.kind == "punctured"
        assert len(c.skeleton.vertices) == 1
        assert len(c.skeleton.edges) == 1 and c.skeleton.edges[0].is_loop
        L = link_graph(c)
        assert link_matches_paired_graph(L, pg, canonical_link_identification(pg))

    def test_no_edges_gives_loops_but_no_cells(self):
        g = Multigraph((0, 1, 2, 3), ())
        pg = PairedGraph(g, Pairing(((0, 1), (2, 3))), RotationSystem({}))
        c = inverse_link(pg)
        assert len(c.skeleton.edges) == 2
        assert c.cells == ()
        assert link_graph(c).graph.edges == ()

    def test_requires_certificate(self):
        g = Multigraph(("u", "v"), (Edge("e", "u", "v"), Edge("f", "u", "v")))
        pg = PairedGraph(g, Pairing((("u", "v"),)))
        with pytest.raises(DomainError):
            inverse_link(pg)

    def test_round_trip_on_random_instances(self):
        for seed in range(50):
            pg = random_degree_faithful_planar(seed, 1 + seed % 12)
            c = inverse_link(pg)
            L = link_graph(c)
            assert link_matches_paired_graph(L, pg, canonical_link_identification(pg)), seed


class TestSeal:
    def test_rejects_genuine_complex(self):
        g = Multigraph(("h",), (Edge("e", "h", "h"),))
        c = TwoComplex(g, (ClosedWalk((WalkStep("e", 0),)),), kind="genuine")
        with pytest.raises(DomainError):
            seal(c)

    def test_length_one_walk_seals_to_four(self):
        g = Multigraph(("h",), (Edge("e", "h", "h"),))
        c = TwoComplex(g, (ClosedWalk((WalkStep("e", 0),)),), kind="punctured")
        s = seal(c)
        assert s.kind == "genuine"
        assert len(s.cells[0]) == 4

    def test_step_sequence_pattern(self):
        # W = s1 s2 s3 seals to s1 s2 s3 s1 s1~ s3~ s2~ s1~
        g = Multigraph(("h",), (Edge("x", "h", "h"), Edge("y", "h", "h"), Edge("z", "h", "h")))
        s1, s2, s3 = WalkStep("x", 0), WalkStep("y", 1), WalkStep("z", 0)
        c = TwoComplex(g, (ClosedWalk((s1, s2, s3)),), kind="punctured")
        sealed = seal(c).cells[0]
        assert sealed.steps == (
            s1, s2, s3, s1,
            s1.flipped(), s3.flipped(), s2.flipped(), s1.flipped(),
        )

    def test_link_graph_invariants(self):
        for seed in range(25):
            pg = random_degree_faithful_planar(100 + seed, 1 + seed % 9)
            c = inverse_link(pg)
            s = seal(c)
            Lc, Ls = link_graph(c), link_graph(s)
            assert set(Ls.graph.vertices) == set(Lc.graph.vertices)

            def multiset(L):
                return Counter(
                    tuple(sorted((e.end0, e.end1), key=id_sort_key)) for e in L.graph.edges
                )

            assert not (multiset(Lc) - multiset(Ls))  # superset
            for before, after in zip(c.cells, s.cells):
                assert len(after) == 2 * len(before) + 2


class TestRandomGenerator:
    def test_one_pair(self):
        pg = random_planar_paired_graph(3, 1)
        assert len(pg.graph.vertices) == 2
        assert all(c.genus == 0 for c in genus_check(pg.graph, pg.rotation))

    def test_always_certified_planar(self):
        for seed in range(40):
            pg = random_planar_paired_graph(seed, 1 + (seed * 13) % 40)
            assert all(c.genus == 0 for c in genus_check(pg.graph, pg.rotation))

    def test_quotient_min_degree_at_most_11(self):
        for seed in range(40):
            pg = random_planar_paired_graph(seed, 1 + (seed * 7) % 60)
            sq = simple_quotient(pg)
            if sq.vertices:
                assert min(sq.degree(v) for v in sq.vertices) <= 11

    def test_deterministic(self):
        assert random_planar_paired_graph(11, 9) == random_planar_paired_graph(11, 9)

    def test_rejects_zero_pairs(self):
        with pytest.raises(DomainError):
            random_planar_paired_graph(0, 0)
