"""Hypergraph spanning trees and the equivalence with TRVB.

A hypergraph spanning tree is a hyperedge subset S whose incidence subgraph
induced on all vertices plus S is a tree.  TRVB on the incidence graph (edge
nodes breakable, vertex nodes unbreakable) is equivalent to spanning-tree
existence, which gives conversions in both directions: ``incidence_graph`` maps
hypergraphs to TRVB instances, and ``trvb_to_hst`` rewrites an arbitrary TRVB
instance into bipartite form and reads the hypergraph off it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (GuardExceeded, InvalidGraph, Multigraph, _UnionFind,
                   break_vertex)
from .reductions import contract_unbreakable_adjacent


@dataclass(frozen=True)
class Hypergraph:
    vertices: frozenset[int]
    hyperedges: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, vertices: Iterable[int],
           hyperedges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(frozenset(int(v) for v in vertices),
                   tuple(frozenset(int(v) for v in e) for e in hyperedges))

    def __post_init__(self) -> None:
        for j, e in enumerate(self.hyperedges):
            bad = e - self.vertices
            if bad:
                raise InvalidGraph(f"hyperedge {j} has unknown endpoints {sorted(bad)}")


@dataclass(frozen=True)
class TrivialNo:
    """The rewrite pipeline already shows the instance answers "no"."""

    reason: str


def incidence_graph(h: Hypergraph) -> Multigraph:
    """Bipartite TRVB instance: vertex nodes unbreakable, hyperedge nodes breakable.

    Vertex nodes keep their ids; the node of hyperedge j is max_vertex_id + 1 + j.
    """
    base = max(h.vertices, default=-1) + 1
    edges = []
    for j, e in enumerate(h.hyperedges):
        for v in sorted(e):
            edges.append((base + j, v))
    return Multigraph(frozenset(base + j for j in range(len(h.hyperedges))),
                      h.vertices, tuple(edges))


def edge_node_id(h: Hypergraph, j: int) -> int:
    """Incidence-graph node id of hyperedge j under the deterministic scheme."""
    return max(h.vertices, default=-1) + 1 + j


def is_spanning_tree(h: Hypergraph, s: Iterable[int]) -> bool:
    """Is the incidence subgraph induced on all vertices plus the edges of s a tree?"""
    chosen = sorted(set(s))
    for j in chosen:
        if not 0 <= j < len(h.hyperedges):
            raise InvalidGraph(f"no hyperedge with index {j}")
    nodes = len(h.vertices) + len(chosen)
    if nodes == 0:
        return False
    incidences = sum(len(h.hyperedges[j]) for j in chosen)
    if incidences != nodes - 1:
        return False
    uf = _UnionFind(h.vertices)
    for j in chosen:
        uf.add(("e", j))
        for v in h.hyperedges[j]:
            uf.union(("e", j), v)
    return uf.component_count() == 1


def hst_brute(h: Hypergraph, guard: int = 20) -> frozenset[int] | None:
    """Exhaustive spanning-tree search; returns the lexicographically least witness.

    Subsets are visited in lexicographic order of their sorted index tuples, so
    the first hit is the canonical one.
    """
    m = len(h.hyperedges)
    if m > guard:
        raise GuardExceeded(f"hst_brute guard is {guard} hyperedges, got {m}")

    chosen: list[int] = []

    def rec(start: int) -> frozenset[int] | None:
        if is_spanning_tree(h, chosen):
            return frozenset(chosen)
        for j in range(start, m):
            chosen.append(j)
            hit = rec(j + 1)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(0)


def uniformity(h: Hypergraph) -> int | None:
    """The common hyperedge size, or None if sizes vary or there are no hyperedges."""
    sizes = {len(e) for e in h.hyperedges}
    return sizes.pop() if len(sizes) == 1 else None


def regularity(h: Hypergraph) -> int | None:
    """The common vertex degree, or None if degrees vary or there are no vertices."""
    if not h.vertices:
        return None
    deg = {v: 0 for v in h.vertices}
    for e in h.hyperedges:
        for v in e:
            deg[v] += 1
    degrees = set(deg.values())
    return degrees.pop() if len(degrees) == 1 else None


def _forced_breakable(g: Multigraph) -> int | None:
    """A breakable vertex lying on a cycle whose only breakable vertex is itself.

    With unbreakable-unbreakable edges already contracted, the only such cycles
    are self-loops at a breakable vertex and parallel breakable-unbreakable edge
    pairs.  Every solution must break such a vertex, so breaking it up front
    preserves the answer.
    """
    pair_count: dict[tuple[int, int], int] = {}
    for a, b in g.edges:
        if a == b:
            if a in g.breakable:
                return a
            continue
        key = (min(a, b), max(a, b))
        pair_count[key] = pair_count.get(key, 0) + 1
    candidates = []
    for (a, b), c in pair_count.items():
        if c >= 2 and (a in g.breakable) != (b in g.breakable):
            candidates.append(a if a in g.breakable else b)
    return min(candidates) if candidates else None


def _split_breakable_pairs(g: Multigraph) -> Multigraph:
    """Insert one unbreakable degree-2 vertex into every breakable-breakable edge."""
    counter = g.max_vertex_id() + 1
    new_edges: list[tuple[int, int]] = []
    fresh: list[int] = []
    for a, b in g.edges:
        if a in g.breakable and b in g.breakable:
            new_edges.append((a, counter))
            new_edges.append((counter, b))
            fresh.append(counter)
            counter += 1
        else:
            new_edges.append((a, b))
    return Multigraph(g.breakable, g.unbreakable | frozenset(fresh),
                      tuple(new_edges), None)


def trvb_to_hst(g: Multigraph) -> TrivialNo | Hypergraph:
    """Rewrite a TRVB instance into a hypergraph with the same answer.

    Pipeline: contract unbreakable-unbreakable edges; divert to TrivialNo on a
    self-loop at an unbreakable vertex; break any vertex that every solution is
    forced to break (self-looped breakables, breakables with parallel edges to
    one unbreakable) and re-contract; finally split breakable-breakable edges
    with fresh unbreakable degree-2 vertices.  The result is bipartite and
    simple across the parts, so it is the incidence graph of a hypergraph whose
    hyperedges are the breakable nodes' neighbor sets.
    """
    work = g
    while True:
        work = contract_unbreakable_adjacent(work)
        if any(a == b and a in work.unbreakable for a, b in work.edges):
            return TrivialNo("self-loop at an unbreakable vertex")
        forced = _forced_breakable(work)
        if forced is None:
            break
        work, _ = break_vertex(work, forced)
    work = _split_breakable_pairs(work)
    neighbor_sets: dict[int, set[int]] = {b: set() for b in work.breakable}
    for a, b in work.edges:
        if a in work.breakable:
            neighbor_sets[a].add(b)
        else:
            neighbor_sets[b].add(a)
    return Hypergraph(work.unbreakable,
                      tuple(frozenset(neighbor_sets[b]) for b in sorted(work.breakable)))


def hst_to_trvb(h: Hypergraph) -> Multigraph:
    """The reverse direction is exactly the incidence-graph construction."""
    return incidence_graph(h)
