import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trvb.core import (DegreeSet, InvalidGraph, MalformedRotation,
                       MissingRotation, Multigraph, NotBreakable,
                       UnknownVertex, VariantSpec, break_set, break_vertex,
                       connected_components, has_cycle, is_connected, is_tree,
                       required_vertex_growth, rotation_is_planar, trace_faces,
                       validate)

from helpers import (cycle_graph, cycle_rotation, icosahedron, isomorphic,
                     path_graph, random_multigraph)


def k4_embedded(breakable=frozenset()):
    edges = ((0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3))
    rot = {0: ((0, 0), (3, 0), (2, 1)),
           1: ((1, 0), (4, 0), (0, 1)),
           2: ((2, 0), (5, 0), (1, 1)),
           3: ((5, 1), (3, 1), (4, 1))}
    vs = {0, 1, 2, 3}
    return Multigraph(frozenset(breakable), frozenset(vs - set(breakable)), edges, rot)


def theta_graph():
    rot = {0: ((0, 0), (1, 0), (2, 0)), 1: ((2, 1), (1, 1), (0, 1))}
    return Multigraph(frozenset(), frozenset({0, 1}),
                      ((0, 1), (0, 1), (0, 1)), rot)


@st.composite
def multigraphs(draw, max_v=6, max_e=9):
    n = draw(st.integers(1, max_v))
    m = draw(st.integers(0, max_e))
    vertex = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), min_size=m, max_size=m))
    breakable = draw(st.sets(vertex))
    return Multigraph.of(breakable, set(range(n)) - breakable, edges)


class TestConstruction:
    def test_overlapping_kinds_rejected(self):
        with pytest.raises(InvalidGraph):
            Multigraph(frozenset({0}), frozenset({0}), ())

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(InvalidGraph):
            Multigraph.of(unbreakable=[0], edges=[(0, 1)])

    def test_rotation_must_cover_half_edges(self):
        with pytest.raises(MalformedRotation):
            Multigraph.of(unbreakable=[0, 1], edges=[(0, 1)],
                          rotation={0: [(0, 0)], 1: []})

    def test_self_loop_degree_counts_twice(self):
        g = Multigraph.of(breakable=[0], edges=[(0, 0)])
        assert g.degree(0) == 2
        assert g.half_edges_at(0) == ((0, 0), (0, 1))


class TestBreakVertex:
    def test_degree_4_distinct_neighbors(self):
        g = Multigraph.of(breakable=[0], unbreakable=[1, 2, 3, 4],
                          edges=[(0, 1), (0, 2), (0, 3), (0, 4)])
        g2, trace = break_vertex(g, 0)
        assert g2.num_vertices == g.num_vertices + 3
        assert g2.num_edges == g.num_edges
        assert trace.broken == (0,)
        assert len(trace.spawned[0]) == 4
        for f in trace.spawned[0]:
            assert g2.degree(f) == 1

    def test_self_loop_becomes_single_edge_tree(self):
        g = Multigraph.of(breakable=[0], edges=[(0, 0)])
        g2, _ = break_vertex(g, 0)
        assert g2.num_vertices == 2 and g2.num_edges == 1
        assert is_tree(g2)

    def test_degree_1_break_is_isomorphic(self):
        # breaking a degree-1 vertex changes nothing structurally
        g = Multigraph.of(breakable=[0], unbreakable=[1, 2], edges=[(0, 1), (1, 2)])
        g2, _ = break_vertex(g, 0)
        shape1 = Multigraph(frozenset(), g.vertices, g.edges)
        shape2 = Multigraph(frozenset(), g2.vertices, g2.edges)
        assert isomorphic(shape1, shape2)

    def test_fresh_ids_above_max(self):
        g = Multigraph.of(breakable=[7], unbreakable=[3], edges=[(7, 3), (7, 3)])
        g2, trace = break_vertex(g, 7)
        assert trace.spawned[7] == (8, 9)
        assert 7 not in g2.vertices

    def test_unknown_and_unbreakable_errors(self):
        g = Multigraph.of(breakable=[0], unbreakable=[1], edges=[(0, 1)])
        with pytest.raises(UnknownVertex):
            break_vertex(g, 9)
        with pytest.raises(NotBreakable):
            break_vertex(g, 1)

    def test_rotation_inherited(self):
        g = k4_embedded(breakable={3})
        g2, _ = break_vertex(g, 3)
        assert g2.rotation is not None
        for v in (0, 1, 2):
            assert len(g2.rotation[v]) == 3
        assert rotation_is_planar(g2)


class TestBreakSet:
    def test_empty_set_unchanged(self):
        g = cycle_graph(3, breakable={0})
        assert break_set(g, set()) == g

    def test_triangle_single_breakable_gives_path(self):
        g = cycle_graph(3, breakable={1})
        # hand oracle over both subsets: only breaking vertex 1 gives a tree
        assert not is_tree(g)
        out = break_set(g, {1})
        assert is_tree(out)
        assert sorted(out.degree(v) for v in out.vertices) == [1, 1, 2, 2]

    def test_adjacent_pair_isolates_shared_edge(self):
        g = Multigraph.of(breakable=[0, 1], unbreakable=[2, 3, 4, 5],
                          edges=[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        out = break_set(g, {0, 1})
        comps = connected_components(out)
        sizes = sorted(len(c) for c in comps)
        assert 2 in sizes  # the former shared edge, now between two fresh leaves
        two = next(c for c in comps if len(c) == 2)
        assert sum(1 for a, b in out.edges if a in two and b in two) == 1

    def test_duplicates_rejected(self):
        g = cycle_graph(3, breakable={0})
        with pytest.raises(InvalidGraph):
            break_set(g, [0, 0])

    def test_order_invariance(self):
        rng = random.Random(4242)
        for _ in range(60):
            g = random_multigraph(rng)
            bs = sorted(g.breakable)
            if len(bs) < 2:
                continue
            s = rng.sample(bs, rng.randint(2, len(bs)))
            assert break_set(g, s) == break_set(g, list(reversed(s)))
            assert break_set(g, set(s)) == break_set(g, tuple(s))


class TestTreePredicates:
    def test_examples(self):
        assert not is_tree(cycle_graph(3))
        assert is_tree(path_graph(3))
        two_edges = Multigraph.of(unbreakable=[0, 1, 2, 3], edges=[(0, 1), (2, 3)])
        assert not is_tree(two_edges)

    def test_single_vertex_is_tree(self):
        assert is_tree(Multigraph.of(unbreakable=[0]))

    def test_empty_graph_is_not(self):
        assert not is_tree(Multigraph.of())

    @given(multigraphs())
    @settings(max_examples=150, deadline=None)
    def test_characterization_against_cycle_search(self, g):
        lhs = is_tree(g)
        rhs = is_connected(g) and g.num_edges == g.num_vertices - 1
        assert lhs == rhs
        if g.num_vertices > 0:
            assert lhs == (is_connected(g) and not has_cycle(g))


class TestBreakInvariants:
    @given(multigraphs())
    @settings(max_examples=150, deadline=None)
    def test_counts_conserved(self, g):
        for v in sorted(g.breakable):
            g2, _ = break_vertex(g, v)
            assert g2.num_edges == g.num_edges
            assert g2.num_vertices == g.num_vertices + g.degree(v) - 1
            break

    def test_growth_identity_on_break_sets(self):
        rng = random.Random(77)
        for _ in range(80):
            g = random_multigraph(rng)
            bs = sorted(g.breakable)
            s = [v for v in bs if rng.random() < 0.5]
            out = break_set(g, s)
            assert out.num_vertices == g.num_vertices + sum(g.degree(v) - 1 for v in s)
            assert out.num_edges == g.num_edges

    def test_breaking_preserves_planarity_of_embedding(self):
        pool = [k4_embedded(breakable={0, 2}), cycle_graph(4, breakable={1})]
        pool[1] = Multigraph(pool[1].breakable, pool[1].unbreakable,
                             pool[1].edges, cycle_rotation(4))
        for g in pool:
            assert rotation_is_planar(g)
            for v in sorted(g.breakable):
                g2, _ = break_vertex(g, v)
                assert rotation_is_planar(g2)


class TestFaces:
    def test_single_edge_one_face(self):
        g = Multigraph.of(unbreakable=[0, 1], edges=[(0, 1)],
                          rotation={0: [(0, 0)], 1: [(0, 1)]})
        faces = trace_faces(g)
        assert len(faces) == 1 and len(faces[0]) == 2

    def test_theta_graph_three_faces(self):
        faces = trace_faces(theta_graph())
        assert len(faces) == 3
        assert sorted(len(f) for f in faces) == [2, 2, 2]

    def test_k4_four_triangles(self):
        faces = trace_faces(k4_embedded())
        assert len(faces) == 4
        assert all(len(f) == 3 for f in faces)

    def test_dart_coverage(self):
        for g in (theta_graph(), k4_embedded()):
            faces = trace_faces(g)
            darts = [d for walk in faces for d in walk]
            assert len(darts) == 2 * g.num_edges
            assert len(set(darts)) == len(darts)

    def test_missing_rotation(self):
        with pytest.raises(MissingRotation):
            trace_faces(cycle_graph(3))


class TestGrowth:
    def test_tree_growth_zero(self):
        assert required_vertex_growth(path_graph(5)) == 0

    def test_triangle_growth_one(self):
        assert required_vertex_growth(cycle_graph(3)) == 1


class TestDegreeSet:
    def test_membership(self):
        s = DegreeSet.parse("1,2,6+")
        assert 1 in s and 2 in s and 6 in s and 100 in s
        assert 3 not in s and 5 not in s

    def test_parse_format_roundtrip(self):
        for text in ("none", "all", "4", "4,5", "6+", "1,2,6+"):
            assert str(DegreeSet.parse(text)) == text

    def test_tail_absorbs_finite(self):
        assert DegreeSet(frozenset({6, 8}), 6) == DegreeSet.at_least(6)

    def test_queries(self):
        assert DegreeSet.of(2, 3).subset_of({1, 2, 3})
        assert not DegreeSet.at_least(2).subset_of({1, 2, 3})
        assert DegreeSet.of(4).intersects_range(1, 5)
        assert not DegreeSet.of(7).intersects_range(1, 5)
        assert DegreeSet.at_least(9).intersects_range(1, 10)
        assert DegreeSet().is_empty()
        assert DegreeSet.of(4).has_at_least(4)
        assert not DegreeSet.of(3).has_at_least(4)


class TestValidate:
    def test_icosahedron_all_unbreakable(self):
        g = icosahedron()
        spec = VariantSpec(DegreeSet(), DegreeSet.of(5), planar=True, simple=True)
        report = validate(g, spec)
        assert report.ok and report.planar
        assert all(report.degree_ok.values())

    def test_doubled_edge_simple_violation(self):
        g = Multigraph.of(unbreakable=[0, 1], edges=[(0, 1), (0, 1)])
        report = validate(g, VariantSpec(DegreeSet(), DegreeSet.all(), simple=True))
        assert any(v.kind == "parallel-edges" for v in report.violations)

    def test_self_loop_simple_violation(self):
        g = Multigraph.of(breakable=[0], edges=[(0, 0)])
        report = validate(g, VariantSpec(DegreeSet.all(), DegreeSet.all(), simple=True))
        assert any(v.kind == "self-loop" for v in report.violations)

    def test_k4_planar_valid(self):
        report = validate(k4_embedded(), VariantSpec(DegreeSet(), DegreeSet.of(3),
                                                     planar=True, simple=True))
        assert report.ok and report.planar

    def test_planar_flag_without_rotation(self):
        report = validate(cycle_graph(3), VariantSpec(DegreeSet(), DegreeSet.of(2),
                                                      planar=True))
        assert not report.ok
        assert any(v.kind == "missing-rotation" for v in report.violations)
        assert report.planar is False

    def test_degree_violation_reported_per_vertex(self):
        g = path_graph(3, breakable={1})
        report = validate(g, VariantSpec(DegreeSet.of(3), DegreeSet.of(1)))
        assert not report.degree_ok[1]
        assert report.degree_ok[0] and report.degree_ok[2]
