"""Directed-graph preprocessing and reductions between Hamiltonicity and TRVB.

Directed multigraphs carry an optional rotation system over arc-ends (end 0 is
the tail slot, end 1 the head slot).  ``simplify_over_edge`` contracts a forced
arc while deleting its competitors; repeated simplification drives every in-
and out-degree to exactly 2 or decides the instance outright.  From such a
graph, ``hamiltonicity_to_trvb`` builds a planar TRVB instance whose breakable
vertices all have degree k and unbreakable vertices degree 4, with the answer
preserved.  The module also hosts the answer-preserving undirected rewrites
used elsewhere: edge subdivision by unbreakable degree-2 vertices and
contraction of unbreakable-unbreakable edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import (GuardExceeded, HalfEdge, InvalidGraph, MalformedRotation,
                   MissingRotation, Multigraph, UnknownVertex,
                   rotation_is_planar)

ArcEnd = tuple[int, int]  # (arc index, end): 0 = tail (outgoing), 1 = head (incoming)


@dataclass(frozen=True)
class DirectedMultigraph:
    vertices: frozenset[int]
    arcs: tuple[tuple[int, int], ...]  # (tail, head); parallel arcs and self-loops allowed
    rotation: dict[int, tuple[ArcEnd, ...]] | None = None

    @classmethod
    def of(cls, vertices: Iterable[int], arcs: Iterable[tuple[int, int]],
           rotation: Mapping[int, Iterable[ArcEnd]] | None = None) -> "DirectedMultigraph":
        rot = None
        if rotation is not None:
            rot = {int(v): tuple((int(a), int(e)) for a, e in seq)
                   for v, seq in rotation.items()}
        return cls(frozenset(int(v) for v in vertices),
                   tuple((int(t), int(h)) for t, h in arcs), rot)

    def __post_init__(self) -> None:
        for j, (t, h) in enumerate(self.arcs):
            if t not in self.vertices or h not in self.vertices:
                raise InvalidGraph(f"arc {j} = ({t}, {h}) has an unknown endpoint")
        if self.rotation is not None:
            for v in self.rotation:
                if v not in self.vertices:
                    raise MalformedRotation(f"rotation entry for unknown vertex {v}")
            for v in self.vertices:
                seq = self.rotation.get(v, ())
                if sorted(seq) != sorted(self.arc_ends_at(v)):
                    raise MalformedRotation(
                        f"rotation at vertex {v} is not a permutation of its arc-ends")

    def arc_ends_at(self, v: int) -> tuple[ArcEnd, ...]:
        out: list[ArcEnd] = []
        for j, (t, h) in enumerate(self.arcs):
            if t == v:
                out.append((j, 0))
            if h == v:
                out.append((j, 1))
        return tuple(out)

    def in_degree(self, v: int) -> int:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        return sum(1 for _, h in self.arcs if h == v)

    def out_degree(self, v: int) -> int:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        return sum(1 for t, _ in self.arcs if t == v)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


def to_undirected(d: DirectedMultigraph) -> Multigraph:
    """Forget orientations: arc j becomes edge j, arc-ends become half-edges.

    All vertices are marked unbreakable; the rotation carries over verbatim, so
    planarity of a directed rotation is certified through the undirected view.
    """
    rot = None
    if d.rotation is not None:
        rot = {v: tuple(seq) for v, seq in d.rotation.items()}
    return Multigraph(frozenset(), d.vertices, tuple(d.arcs), rot)


def is_non_alternating(d: DirectedMultigraph) -> bool:
    """True iff every vertex's cyclic arc-end sequence has at most one in-to-out switch."""
    if d.rotation is None:
        raise MissingRotation("alternation is defined on an embedded graph")
    for v in d.vertices:
        seq = d.rotation.get(v, ())
        n = len(seq)
        switches = sum(1 for i in range(n)
                       if seq[i][1] == 1 and seq[(i + 1) % n][1] == 0)
        if switches > 1:
            return False
    return True


def simplify_over_edge(d: DirectedMultigraph, arc_index: int) -> DirectedMultigraph:
    """Delete the competitors of arc (u, v), then contract it.

    Removes every other arc into v and every other arc out of u, then merges u
    and v into one vertex (keeping u's id) that inherits u's in-arcs and v's
    out-arcs.  An arc (v, u) survives as a self-loop.  A rotation system, when
    present, is maintained by splicing v's cyclic order into u's at the
    contracted arc, which preserves planarity and the non-alternating property.
    """
    if not 0 <= arc_index < len(d.arcs):
        raise InvalidGraph(f"no arc with index {arc_index}")
    u, v = d.arcs[arc_index]
    if u == v:
        raise InvalidGraph("cannot simplify over a self-loop arc")
    dropped = {j for j, (t, h) in enumerate(d.arcs)
               if j != arc_index and (h == v or t == u)}
    dropped.add(arc_index)
    keep = [j for j in range(len(d.arcs)) if j not in dropped]
    index_map = {old: new for new, old in enumerate(keep)}
    new_arcs = []
    for j in keep:
        t, h = d.arcs[j]
        new_arcs.append((u if t == v else t, u if h == v else h))
    rot = None
    if d.rotation is not None:
        def strip(seq: tuple[ArcEnd, ...]) -> tuple[ArcEnd, ...]:
            return tuple((index_map[j], e) for j, e in seq if j in index_map)

        useq = d.rotation.get(u, ())
        vseq = d.rotation.get(v, ())
        pu = useq.index((arc_index, 0))
        pv = vseq.index((arc_index, 1))
        u_part = useq[pu + 1:] + useq[:pu]
        v_part = vseq[pv + 1:] + vseq[:pv]
        rot = {w: strip(seq) for w, seq in d.rotation.items() if w not in (u, v)}
        rot[u] = strip(u_part + v_part)
    return DirectedMultigraph(d.vertices - {v}, tuple(new_arcs), rot)


@dataclass(frozen=True)
class PreprocessOutcome:
    """Either a reduced all-degree-2 graph or an immediate yes/no decision."""

    reduced: DirectedMultigraph | None
    decided: bool | None

    def __post_init__(self) -> None:
        if (self.reduced is None) == (self.decided is None):
            raise ValueError("exactly one of reduced/decided must be set")


def preprocess_to_degree2(d: DirectedMultigraph) -> PreprocessOutcome:
    """Simplify until every in- and out-degree is exactly 2, preserving Hamiltonicity.

    Input degrees must all lie in {1, 2}.  Degenerate outcomes (at most 2
    vertices left) are decided inline; a stuck state with an in/out-degree of 0
    or a forced self-loop admits no Hamiltonian cycle and is decided "no".
    """
    for v in d.vertices:
        if d.in_degree(v) not in (1, 2) or d.out_degree(v) not in (1, 2):
            raise InvalidGraph(f"vertex {v} has in/out-degree outside {{1, 2}}")
    g = d
    while True:
        if g.num_vertices <= 2:
            return PreprocessOutcome(None, ham_brute(g))
        indeg = {v: g.in_degree(v) for v in g.vertices}
        outdeg = {v: g.out_degree(v) for v in g.vertices}
        pick = None
        for j, (t, h) in enumerate(g.arcs):
            if t != h and (outdeg[t] == 1 or indeg[h] == 1):
                pick = j
                break
        if pick is None:
            if all(indeg[v] == 2 and outdeg[v] == 2 for v in g.vertices):
                return PreprocessOutcome(g, None)
            # Some vertex has in/out-degree 0, or its only in/out arc is a
            # self-loop; either way no Hamiltonian cycle exists.
            return PreprocessOutcome(None, False)
        g = simplify_over_edge(g, pick)


def ham_brute(d: DirectedMultigraph, guard: int = 12) -> bool:
    """Backtracking Hamiltonian-cycle decision; a single vertex counts as Hamiltonian."""
    n = d.num_vertices
    if n > guard:
        raise GuardExceeded(f"ham_brute guard is {guard} vertices, got {n}")
    if n == 0:
        return False
    if n == 1:
        return True
    succ: dict[int, set[int]] = {v: set() for v in d.vertices}
    for t, h in d.arcs:
        if t != h:
            succ[t].add(h)
    start = min(d.vertices)
    visited = {start}

    def rec(at: int) -> bool:
        if len(visited) == n:
            return start in succ[at]
        for nxt in sorted(succ[at]):
            if nxt not in visited:
                visited.add(nxt)
                if rec(nxt):
                    return True
                visited.remove(nxt)
        return False

    return rec(start)


# -- Hamiltonicity -> TRVB -----------------------------------------------------


def _blocks(seq: tuple[ArcEnd, ...]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Arc indices (in1, in2), (out1, out2) of the contiguous blocks, in cyclic order."""
    n = len(seq)
    ins = [i for i in range(n) if seq[i][1] == 1]
    if len(ins) != 2 or n != 4:
        raise InvalidGraph("expected exactly two in-ends and two out-ends")
    p = next(i for i in range(n) if seq[i][1] == 1 and seq[(i - 1) % n][1] == 0)
    q = next(i for i in range(n) if seq[i][1] == 0 and seq[(i - 1) % n][1] == 1)
    i1, i2 = seq[p][0], seq[(p + 1) % n][0]
    o1, o2 = seq[q][0], seq[(q + 1) % n][0]
    return (i1, i2), (o1, o2)


def _insert_before(seq: list[HalfEdge], anchor: HalfEdge, new: list[HalfEdge]) -> None:
    i = seq.index(anchor)
    seq[i:i] = new


def _insert_after(seq: list[HalfEdge], anchor: HalfEdge, new: list[HalfEdge]) -> None:
    i = seq.index(anchor)
    seq[i + 1:i + 1] = new


def hamiltonicity_to_trvb(d: DirectedMultigraph, k: int,
                          removed_vertex: int | None = None) -> Multigraph:
    """Build a planar TRVB instance equivalent to Hamiltonicity of d.

    Requires a planar non-alternating rotation, all in- and out-degrees exactly
    2, no self-loop arcs, and k >= 4.  The output has one unbreakable degree-4
    node per input vertex and one breakable degree-k node per arc, except that
    the node of ``removed_vertex`` (lowest id by default) is deleted with its
    four edges replaced by two direct edges.  For n input vertices the output
    has exactly 3n - 1 vertices and n(k + 2) - 2 edges and carries a planar
    rotation derived from d's.
    """
    if k < 4:
        raise InvalidGraph("k must be at least 4")
    if d.rotation is None:
        raise MissingRotation("the construction needs an embedding")
    for j, (t, h) in enumerate(d.arcs):
        if t == h:
            raise InvalidGraph(f"arc {j} is a self-loop; not supported")
    for v in d.vertices:
        if d.in_degree(v) != 2 or d.out_degree(v) != 2:
            raise InvalidGraph(f"vertex {v} does not have in- and out-degree 2")
    if not is_non_alternating(d):
        raise InvalidGraph("rotation is alternating at some vertex")
    if not rotation_is_planar(to_undirected(d)):
        raise InvalidGraph("rotation fails the Euler planarity check")
    anchor = min(d.vertices) if removed_vertex is None else removed_vertex
    if anchor not in d.vertices:
        raise UnknownVertex(f"vertex {anchor} not in graph")

    verts = sorted(d.vertices)
    n = len(verts)
    node_of_vertex = {v: i for i, v in enumerate(verts)}
    node_of_arc = {j: n + j for j in range(len(d.arcs))}

    edges: list[tuple[int, int]] = []
    rot: dict[int, list[HalfEdge]] = {}
    # Subdivided skeleton: arc j = (t, h) becomes edges 2j = (node(t), node(j))
    # and 2j + 1 = (node(j), node(h)).
    for j, (t, h) in enumerate(d.arcs):
        edges.append((node_of_vertex[t], node_of_arc[j]))
        edges.append((node_of_arc[j], node_of_vertex[h]))
        rot[node_of_arc[j]] = [(2 * j, 1), (2 * j + 1, 0)]
    for v in verts:
        seq: list[HalfEdge] = []
        for j, end in d.rotation[v]:
            seq.append((2 * j, 0) if end == 0 else (2 * j + 1, 1))
        rot[node_of_vertex[v]] = seq

    blocks = {v: _blocks(d.rotation[v]) for v in verts}
    for v in verts:
        (i1, i2), (o1, o2) = blocks[v]
        # One edge between the out-arc nodes, hugging the corner between the
        # two out-arcs at v.
        idx = len(edges)
        edges.append((node_of_arc[o1], node_of_arc[o2]))
        _insert_before(rot[node_of_arc[o1]], (2 * o1, 1), [(idx, 0)])
        _insert_after(rot[node_of_arc[o2]], (2 * o2, 1), [(idx, 1)])
        # k - 3 nested parallel edges between the in-arc nodes.
        first = len(edges)
        for _ in range(k - 3):
            edges.append((node_of_arc[i1], node_of_arc[i2]))
        new_ids = list(range(first, first + k - 3))
        _insert_before(rot[node_of_arc[i1]], (2 * i1 + 1, 0), [(c, 0) for c in new_ids])
        _insert_after(rot[node_of_arc[i2]], (2 * i2 + 1, 0),
                      [(c, 1) for c in reversed(new_ids)])

    # Remove the anchor's node; reroute each of its former 2-paths directly.
    (i1, i2), (o1, o2) = blocks[anchor]
    a_idx = len(edges)
    edges.append((node_of_arc[i1], node_of_arc[i2]))
    b_idx = len(edges)
    edges.append((node_of_arc[o1], node_of_arc[o2]))

    def replace(seq: list[HalfEdge], old: HalfEdge, new: HalfEdge) -> None:
        seq[seq.index(old)] = new

    replace(rot[node_of_arc[i1]], (2 * i1 + 1, 0), (a_idx, 0))
    replace(rot[node_of_arc[i2]], (2 * i2 + 1, 0), (a_idx, 1))
    replace(rot[node_of_arc[o1]], (2 * o1, 1), (b_idx, 0))
    replace(rot[node_of_arc[o2]], (2 * o2, 1), (b_idx, 1))
    anchor_node = node_of_vertex[anchor]
    del rot[anchor_node]
    removed_edges = {2 * i1 + 1, 2 * i2 + 1, 2 * o1, 2 * o2}
    keep = [i for i in range(len(edges)) if i not in removed_edges]
    edge_map = {old: new for new, old in enumerate(keep)}
    final_edges = tuple(edges[i] for i in keep)
    final_rot = {v: tuple((edge_map[e], s) for e, s in seq)
                 for v, seq in rot.items()}

    breakable = frozenset(node_of_arc.values())
    unbreakable = frozenset(node_of_vertex[v] for v in verts if v != anchor)
    return Multigraph(breakable, unbreakable, final_edges, final_rot)


# -- answer-preserving undirected rewrites ------------------------------------


def insert_unbreakable_deg2(g: Multigraph, per_edge: int) -> Multigraph:
    """Subdivide every edge with per_edge fresh unbreakable degree-2 vertices.

    Does not influence the TRVB answer; with per_edge = 2 the result is simple.
    """
    if per_edge < 1:
        raise InvalidGraph("per_edge must be at least 1")
    base = g.max_vertex_id() + 1
    new_edges: list[tuple[int, int]] = []
    fresh_all: list[int] = []
    he_map: dict[HalfEdge, HalfEdge] = {}
    fresh_rot: dict[int, tuple[HalfEdge, ...]] = {}
    counter = base
    for i, (a, b) in enumerate(g.edges):
        chain = [counter + t for t in range(per_edge)]
        counter += per_edge
        fresh_all.extend(chain)
        path = [a] + chain + [b]
        first = len(new_edges)
        for t in range(len(path) - 1):
            new_edges.append((path[t], path[t + 1]))
        he_map[(i, 0)] = (first, 0)
        he_map[(i, 1)] = (first + per_edge, 1)
        for t, f in enumerate(chain):
            fresh_rot[f] = ((first + t, 1), (first + t + 1, 0))
    rot = None
    if g.rotation is not None:
        rot = {v: tuple(he_map[he] for he in seq) for v, seq in g.rotation.items()}
        rot.update(fresh_rot)
    return Multigraph(g.breakable, g.unbreakable | frozenset(fresh_all),
                      tuple(new_edges), rot)


def _contract_edge(g: Multigraph, edge_index: int) -> Multigraph:
    """Contract one non-loop edge; the merged vertex keeps the smaller id."""
    a, b = g.edges[edge_index]
    if a == b:
        raise InvalidGraph("cannot contract a self-loop")
    lo, hi = min(a, b), max(a, b)
    keep = [i for i in range(len(g.edges)) if i != edge_index]
    index_map = {old: new for new, old in enumerate(keep)}
    new_edges = []
    for i in keep:
        x, y = g.edges[i]
        new_edges.append((lo if x == hi else x, lo if y == hi else y))
    rot = None
    if g.rotation is not None:
        def strip(seq: tuple[HalfEdge, ...]) -> tuple[HalfEdge, ...]:
            return tuple((index_map[e], s) for e, s in seq if e in index_map)

        lo_end = 0 if g.edges[edge_index][0] == lo else 1
        lseq = g.rotation.get(lo, ())
        hseq = g.rotation.get(hi, ())
        pl = lseq.index((edge_index, lo_end))
        ph = hseq.index((edge_index, 1 - lo_end))
        merged = lseq[pl + 1:] + lseq[:pl] + hseq[ph + 1:] + hseq[:ph]
        rot = {v: strip(seq) for v, seq in g.rotation.items() if v not in (lo, hi)}
        rot[lo] = strip(merged)
    breakable = g.breakable - {hi}
    unbreakable = g.unbreakable - {hi}
    return Multigraph(breakable, unbreakable, tuple(new_edges), rot)


def contract_unbreakable_adjacent(g: Multigraph) -> Multigraph:
    """Contract edges between distinct unbreakable vertices until none remain.

    Self-loops arising from parallel edges between merged vertices are kept.
    Preserves the TRVB answer.  The output may contain degree-0 vertices (for
    example an all-unbreakable path collapses to a single bare vertex).
    """
    out = g
    while True:
        pick = None
        for i, (a, b) in enumerate(out.edges):
            if a != b and a in out.unbreakable and b in out.unbreakable:
                pick = i
                break
        if pick is None:
            return out
        out = _contract_edge(out, pick)
