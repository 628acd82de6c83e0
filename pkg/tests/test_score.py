import random
from itertools import product

import pytest

from trvb.core import InvalidGraph, MissingRotation, Multigraph
from trvb.score import Bundle, bundles_at, score, tree_score_inequality

from helpers import cycle_graph, path_graph, random_tree, tree_from_sequence


def seven_leaf_vertex():
    """Degree-10 vertex with seven leaves interleaved as runs of 2, 2, 3.

    The three non-leaf neighbors are chained so each has degree >= 2.
    """
    c = 0
    leaves = list(range(1, 8))
    others = [8, 9, 10]
    edges = []
    for u in leaves + others:
        edges.append((c, u))
    edges.append((8, 9))
    edges.append((9, 10))
    # rotation: leaf, leaf, other, leaf, leaf, other, leaf, leaf, leaf, other
    order = [0, 1, 7, 2, 3, 8, 4, 5, 6, 9]  # indices into c's edges
    rot = {c: tuple((i, 0) for i in order)}
    g0 = Multigraph.of(unbreakable=range(11), edges=edges)
    for v in range(1, 11):
        rot[v] = g0.half_edges_at(v)
    return Multigraph(frozenset(), frozenset(range(11)), tuple(edges), rot)


class TestBundles:
    def test_interleaved_runs(self):
        g = seven_leaf_vertex()
        sizes = sorted(b.size for b in bundles_at(g, 0))
        assert sizes == [2, 2, 3]

    def test_no_leaf_neighbors(self):
        g = cycle_graph(4)
        rot = {v: g.half_edges_at(v) for v in g.vertices}
        g = Multigraph(g.breakable, g.unbreakable, g.edges, rot)
        assert bundles_at(g, 0) == []

    def test_star_center_single_bundle(self):
        edges = [(0, i) for i in range(1, 6)]
        g0 = Multigraph.of(unbreakable=range(6), edges=edges)
        rot = {v: g0.half_edges_at(v) for v in range(6)}
        g = Multigraph(frozenset(), frozenset(range(6)), tuple(edges), rot)
        bs = bundles_at(g, 0)
        assert len(bs) == 1 and bs[0].size == 5

    def test_missing_rotation(self):
        with pytest.raises(MissingRotation):
            bundles_at(cycle_graph(3), 0)


class TestScore:
    def test_interleaved_vertex_scores_four(self):
        # bundle scores 1 + 1 + 2, independently recomputed by hand
        g = seven_leaf_vertex()
        assert sum(b.score for b in bundles_at(g, 0)) == 4
        assert score(g) == 4  # every other vertex has no degree-1 neighbors

    def test_no_degree_one_vertices_scores_zero(self):
        g = cycle_graph(5)
        rot = {v: g.half_edges_at(v) for v in g.vertices}
        assert score(Multigraph(g.breakable, g.unbreakable, g.edges, rot)) == 0

    def test_single_bundle_of_size_one(self):
        g0 = path_graph(4)
        rot = {v: g0.half_edges_at(v) for v in g0.vertices}
        g = Multigraph(g0.breakable, g0.unbreakable, g0.edges, rot)
        # vertex 1 sees one leaf neighbor and one degree-2 neighbor
        bs = bundles_at(g, 1)
        assert len(bs) == 1 and bs[0].size == 1 and bs[0].score == -1
        assert score(g) == -2  # symmetric size-1 bundle at vertex 2

    def test_all_neighbors_leaves_merge_into_one_bundle(self):
        g0 = path_graph(3)
        rot = {v: g0.half_edges_at(v) for v in g0.vertices}
        g = Multigraph(g0.breakable, g0.unbreakable, g0.edges, rot)
        bs = bundles_at(g, 1)
        assert len(bs) == 1 and bs[0].size == 2
        assert score(g) == 1

    def test_additivity_randomized(self):
        rng = random.Random(71)
        for _ in range(40):
            t = random_tree(rng, rng.randint(2, 9))
            rot = {v: t.half_edges_at(v) for v in t.vertices}
            g = Multigraph(t.breakable, t.unbreakable, t.edges, rot)
            assert score(g) == sum(sum(b.score for b in bundles_at(g, v))
                                   for v in g.vertices)


class TestTreeInequality:
    def test_two_vertex_tree(self):
        assert tree_score_inequality(path_graph(2))  # 4 > 1

    def test_star_six(self):
        edges = [(0, i) for i in range(1, 6)]
        g = Multigraph.of(unbreakable=range(6), edges=edges)
        assert tree_score_inequality(g)  # 10 > 5

    def test_path_four(self):
        assert tree_score_inequality(path_graph(4))  # 2*2 + 2 = 6 > 3

    def test_rejects_non_trees(self):
        with pytest.raises(InvalidGraph):
            tree_score_inequality(cycle_graph(3))
        with pytest.raises(InvalidGraph):
            tree_score_inequality(Multigraph.of(unbreakable=[0]))

    def test_exhaustive_small(self):
        for n in range(3, 7):
            for seq in product(range(n), repeat=n - 2):
                assert tree_score_inequality(tree_from_sequence(list(seq), n))

    def test_randomized_large(self):
        rng = random.Random(1001)
        for _ in range(2000):
            assert tree_score_inequality(random_tree(rng, rng.randint(2, 12)))
