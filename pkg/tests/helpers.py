"""Shared fixtures: graph builders, seeded random generators, and corpora."""
from __future__ import annotations

import random
from itertools import permutations

from trvb.core import Multigraph, rotation_is_planar
from trvb.reductions import DirectedMultigraph, is_non_alternating, to_undirected


def path_graph(n: int, breakable: set[int] = frozenset()) -> Multigraph:
    edges = [(i, i + 1) for i in range(n - 1)]
    vs = set(range(n))
    return Multigraph.of(breakable & vs, vs - breakable, edges)


def cycle_graph(n: int, breakable: set[int] = frozenset()) -> Multigraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    vs = set(range(n))
    return Multigraph.of(breakable & vs, vs - breakable, edges)


def cycle_rotation(n: int) -> dict[int, tuple[tuple[int, int], ...]]:
    """Planar rotation for cycle_graph(n)."""
    rot = {}
    for i in range(n):
        prev = (i - 1) % n
        rot[i] = ((prev, 1), (i, 0))
    return rot


def relabel(g: Multigraph, perm: dict[int, int]) -> Multigraph:
    rot = None
    if g.rotation is not None:
        rot = {perm[v]: seq for v, seq in g.rotation.items()}
    return Multigraph(frozenset(perm[v] for v in g.breakable),
                      frozenset(perm[v] for v in g.unbreakable),
                      tuple((perm[a], perm[b]) for a, b in g.edges), rot)


def canonical_edge_multiset(g: Multigraph, perm: dict[int, int]):
    return sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges)


def isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Brute-force kind-preserving isomorphism check; small graphs only."""
    if (g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges
            or len(g1.breakable) != len(g2.breakable)):
        return False
    v1, v2 = sorted(g1.vertices), sorted(g2.vertices)
    target = canonical_edge_multiset(g2, {v: v for v in v2})
    for perm in permutations(v2):
        mapping = dict(zip(v1, perm))
        if any((u in g1.breakable) != (mapping[u] in g2.breakable) for u in v1):
            continue
        if canonical_edge_multiset(g1, mapping) == target:
            return True
    return False


def random_multigraph(rng: random.Random, max_v: int = 6, max_e: int = 9,
                      p_breakable: float = 0.6) -> Multigraph:
    n = rng.randint(1, max_v)
    m = rng.randint(0, max_e)
    vs = list(range(n))
    edges = []
    if n > 1 and m >= n - 1 and rng.random() < 0.7:
        order = vs[:]
        rng.shuffle(order)
        for i in range(1, n):
            edges.append((order[i], order[rng.randrange(i)]))
    while len(edges) < m:
        a, b = rng.choice(vs), rng.choice(vs)
        edges.append((a, b))
    breakable = {v for v in vs if rng.random() < p_breakable}
    return Multigraph.of(breakable, set(vs) - breakable, edges)


def random_hypergraph(rng: random.Random, max_v: int = 5, max_e: int = 6):
    from trvb.hypergraph import Hypergraph
    n = rng.randint(1, max_v)
    m = rng.randint(0, max_e)
    vs = list(range(n))
    hyperedges = []
    for _ in range(m):
        size = rng.randint(1, min(4, n))
        hyperedges.append(frozenset(rng.sample(vs, size)))
    return Hypergraph(frozenset(vs), tuple(hyperedges))


def random_tree(rng: random.Random, n: int) -> Multigraph:
    """Uniform labeled tree on n >= 2 vertices via a random parent sequence."""
    if n == 2:
        return path_graph(2)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_sequence(seq, n)


def tree_from_sequence(seq: list[int], n: int) -> Multigraph:
    """Decode a length-(n-2) sequence over {0..n-1} into a labeled tree."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)[:2] if len(leaves) >= 2 else (leaves[0], leaves[0])
    edges.append((u, v))
    return Multigraph.of(set(), set(range(n)), edges)


# -- directed corpus: planar non-alternating all-degree-2 instances -----------


def _doubled_cycle_parts(n: int, offset: int = 0, arc_offset: int = 0):
    vertices = list(range(offset, offset + n))
    arcs, rot = [], {}
    if n == 2:
        arcs = [(offset, offset + 1)] * 2 + [(offset + 1, offset)] * 2
        rot[offset] = [(0, 0), (1, 0), (2, 1), (3, 1)]
        rot[offset + 1] = [(3, 0), (2, 0), (1, 1), (0, 1)]
    else:
        for i in range(n):
            arcs.append((offset + i, offset + (i + 1) % n))
            arcs.append((offset + i, offset + (i + 1) % n))
        for i in range(n):
            prev = (i - 1) % n
            rot[offset + i] = [(2 * i, 0), (2 * prev, 1), (2 * prev + 1, 1), (2 * i + 1, 0)]
    rot = {v: [(j + arc_offset, e) for j, e in seq] for v, seq in rot.items()}
    return vertices, arcs, rot


def doubled_cycle_digraph(n: int) -> DirectedMultigraph:
    vs, arcs, rot = _doubled_cycle_parts(n)
    return DirectedMultigraph.of(vs, arcs, rot)


def disjoint_union(parts) -> DirectedMultigraph:
    vertices, arcs, rot = [], [], {}
    for d in parts:
        voff = max(vertices, default=-1) + 1
        aoff = len(arcs)
        remap = {v: voff + i for i, v in enumerate(sorted(d.vertices))}
        for t, h in d.arcs:
            arcs.append((remap[t], remap[h]))
        for v, seq in (d.rotation or {}).items():
            rot[remap[v]] = [(j + aoff, e) for j, e in seq]
        vertices.extend(remap.values())
    return DirectedMultigraph.of(vertices, arcs, rot)


def _embedded_bases() -> list[tuple[list[int], list[tuple[int, int]], dict]]:
    """Undirected embedded 4-regular planar multigraphs on <= 5 vertices."""
    bases = []
    # K4 with one matching doubled: outer triangle 0,1,2; center 3.
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (0, 1), (2, 3)]
    rot = {
        0: [(0, 0), (6, 0), (3, 0), (2, 1)],
        1: [(1, 0), (4, 0), (6, 1), (0, 1)],
        2: [(2, 0), (5, 0), (7, 0), (1, 1)],
        3: [(7, 1), (5, 1), (3, 1), (4, 1)],
    }
    bases.append((list(range(4)), edges, rot))
    # 4-cycle with multiplicities 3, 1, 3, 1.
    edges = [(0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3), (3, 0)]
    rot = {
        0: [(0, 0), (1, 0), (2, 0), (7, 1)],
        1: [(3, 0), (2, 1), (1, 1), (0, 1)],
        2: [(6, 0), (5, 0), (4, 0), (3, 1)],
        3: [(4, 1), (5, 1), (6, 1), (7, 0)],
    }
    bases.append((list(range(4)), edges, rot))
    return bases


def _orientations(vertices, edges, rot):
    """All arc orientations that are in/out-degree 2 and non-alternating."""
    m = len(edges)
    out = []
    for mask in range(1 << m):
        arcs = []
        for i, (a, b) in enumerate(edges):
            arcs.append((b, a) if mask >> i & 1 else (a, b))
        indeg = {v: 0 for v in vertices}
        outdeg = {v: 0 for v in vertices}
        for t, h in arcs:
            outdeg[t] += 1
            indeg[h] += 1
        if any(indeg[v] != 2 or outdeg[v] != 2 for v in vertices):
            continue
        drot = {}
        for v, seq in rot.items():
            entries = []
            for i, s in seq:
                flipped = bool(mask >> i & 1)
                # end slot 0 in the undirected base is endpoint edges[i][0]
                is_tail = (s == 0) != flipped
                entries.append((i, 0 if is_tail else 1))
            drot[v] = entries
        d = DirectedMultigraph.of(vertices, arcs, drot)
        if is_non_alternating(d):
            out.append(d)
    return out


def reverse_digraph(d: DirectedMultigraph) -> DirectedMultigraph:
    rot = None
    if d.rotation is not None:
        rot = {v: [(j, 1 - e) for j, e in seq] for v, seq in d.rotation.items()}
    return DirectedMultigraph.of(d.vertices, [(h, t) for t, h in d.arcs], rot)


def directed_corpus() -> list[DirectedMultigraph]:
    """Valid planar non-alternating in/out-degree-2 instances on <= 5 vertices.

    Every entry is checked against the preconditions mechanically; the mix
    contains Hamiltonian and non-Hamiltonian (disconnected) graphs.
    """
    corpus: list[DirectedMultigraph] = []
    for n in (2, 3, 4, 5):
        corpus.append(doubled_cycle_digraph(n))
        corpus.append(reverse_digraph(doubled_cycle_digraph(n)))
    for vertices, edges, rot in _embedded_bases():
        corpus.extend(_orientations(vertices, edges, rot))
    two_cycles = _orientations(*_doubled_cycle_parts(2))
    corpus.extend(two_cycles[1:])  # the first is the all-forward one already present
    three = doubled_cycle_digraph(3)
    for part in two_cycles:
        corpus.append(disjoint_union([part, three]))
    corpus.append(disjoint_union([two_cycles[0], two_cycles[0]]))
    for d in corpus:
        assert is_non_alternating(d)
        assert rotation_is_planar(to_undirected(d))
        assert all(d.in_degree(v) == 2 and d.out_degree(v) == 2 for v in d.vertices)
        assert all(t != h for t, h in d.arcs)
    return corpus


# -- planar simple fixtures with embeddings from networkx ----------------------


def embedded_from_nx(G, breakable: set[int] = frozenset()) -> Multigraph:
    """Multigraph with a rotation system taken from a networkx planar embedding."""
    import networkx as nx
    ok, emb = nx.check_planarity(G)
    assert ok, "fixture graph must be planar"
    nodes = sorted(G.nodes())
    ids = {u: i for i, u in enumerate(nodes)}
    edges = [tuple(sorted((ids[u], ids[v]))) for u, v in sorted(map(sorted, G.edges()))]
    edge_idx = {e: i for i, e in enumerate(edges)}
    rot = {}
    for u in nodes:
        seq = []
        for w in emb.neighbors_cw_order(u):
            a, b = sorted((ids[u], ids[w]))
            i = edge_idx[(a, b)]
            seq.append((i, 0 if edges[i][0] == ids[u] else 1))
        rot[ids[u]] = tuple(seq)
    vs = set(ids.values())
    marked = {ids[u] for u in breakable if u in ids}
    return Multigraph(frozenset(marked), frozenset(vs - marked), tuple(edges), rot)


def icosahedron() -> Multigraph:
    """All-unbreakable icosahedron: planar, simple, 5-regular."""
    import networkx as nx
    return embedded_from_nx(nx.icosahedral_graph())


def pentakis_dodecahedron(breakable_high_degree: bool = True) -> Multigraph:
    """Dodecahedron with an apex in every pentagonal face.

    32 vertices: the 20 original ones reach degree 6, the 12 apexes degree 5.
    With ``breakable_high_degree`` the degree-6 vertices are breakable, giving a
    valid planar simple instance with breakable degrees >= 6 and unbreakable
    degrees >= 5.
    """
    import networkx as nx
    from trvb.core import trace_faces
    base = embedded_from_nx(nx.dodecahedral_graph())
    G = nx.Graph()
    G.add_edges_from((a, b) for a, b in base.edges)
    apex = base.num_vertices
    faces = trace_faces(base)
    pentagons = [walk for walk in faces if len(walk) == 5]
    assert len(pentagons) == 12
    for walk in pentagons:
        ring = {base.edges[e][s] for e, s in walk}
        for v in ring:
            G.add_edge(apex, v)
        apex += 1
    high = {v for v in G.nodes() if G.degree(v) == 6}
    out = embedded_from_nx(G, breakable=high if breakable_high_degree else set())
    return out
