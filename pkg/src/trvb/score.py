"""Bundle decomposition and scoring for embedded multigraphs.

A bundle at a vertex is a maximal contiguous run, in rotation order, of edges
whose far endpoints have degree 1.  Bundles score -1 at size 1 and size - 1
otherwise; the graph score sums vertex scores.  Scores are defined on explicit
states only (bundle membership keys on current degrees), never inferred across
breaks.  The tree inequality 2*leaves + deg2 > edges backs the always-"no"
result for planar simple instances without small degrees.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import HalfEdge, InvalidGraph, MissingRotation, Multigraph, is_tree


@dataclass(frozen=True)
class Bundle:
    vertex: int
    members: tuple[HalfEdge, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def score(self) -> int:
        return -1 if self.size == 1 else self.size - 1


def bundles_at(g: Multigraph, x: int) -> list[Bundle]:
    """Bundles at x, in rotation order.

    If every neighbor of x has degree 1 the whole neighborhood is one bundle
    (maximality with no separating edges).
    """
    if g.rotation is None:
        raise MissingRotation("bundles are defined on an embedded graph")
    seq = g.rotation.get(x, ())
    if x not in g.vertices:
        raise InvalidGraph(f"vertex {x} not in graph")
    flags = [g.degree(g.far_vertex(he)) == 1 for he in seq]
    if not any(flags):
        return []
    if all(flags):
        return [Bundle(x, tuple(seq))]
    n = len(seq)
    # Walk runs cyclically, starting just after a non-member slot.
    start = next(i for i, f in enumerate(flags) if not f)
    bundles: list[Bundle] = []
    run: list[HalfEdge] = []
    for k in range(1, n + 1):
        i = (start + k) % n
        if flags[i]:
            run.append(seq[i])
        elif run:
            bundles.append(Bundle(x, tuple(run)))
            run = []
    if run:
        bundles.append(Bundle(x, tuple(run)))
    return bundles


def score(g: Multigraph) -> int:
    """Graph score: sum over vertices of their bundle scores."""
    if g.rotation is None:
        raise MissingRotation("scoring is defined on an embedded graph")
    return sum(b.score for v in g.vertices for b in bundles_at(g, v))


def tree_score_inequality(t: Multigraph) -> bool:
    """Truth of 2*leaves + deg2 > edges on a tree with at least 2 vertices.

    Holds for every such tree; the operation exists so the claim can be
    property-tested rather than assumed.
    """
    if t.num_vertices < 2 or not is_tree(t):
        raise InvalidGraph("defined only for trees with at least 2 vertices")
    leaves = sum(1 for v in t.vertices if t.degree(v) == 1)
    deg2 = sum(1 for v in t.vertices if t.degree(v) == 2)
    return 2 * leaves + deg2 > t.num_edges
