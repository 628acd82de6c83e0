"""Vertex-simulation gadgets and their mechanical behavioral certification.

A gadget is a multigraph fragment with ordered boundary ports.  Ports are
represented by degree-1 unbreakable stub vertices inside the body, so every
internal vertex shows its full declared degree and the fragment is an ordinary
multigraph.  The behavior engine enumerates break subsets of the internal
breakable vertices and classifies each broken fragment as admissible iff it
contains no cycle and no component disconnected from every port: a surviving
cycle violates acyclicity in any host, and a port-free component is
disconnected in any host.  This is the weakest local condition sound for all
hosts.  A gadget is certified equivalent to an unbreakable vertex when the only
admissible port partition keeps all ports in one block, and to a breakable
vertex when exactly the one-block and all-singletons partitions are admissible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (GuardExceeded, HalfEdge, InvalidGraph, MissingRotation,
                   Multigraph, UnknownVertex, _UnionFind, rotation_is_planar)

Partition = frozenset[frozenset[int]]

BEHAVIOR_GUARD = 24


@dataclass(frozen=True)
class Gadget:
    name: str
    body: Multigraph              # includes the port stub vertices
    ports: tuple[int, ...]        # stub vertex ids, in boundary order
    target_kind: str              # "unbreakable" or "breakable"
    target_degree: int
    reconstructed: bool = False   # topology inferred from constraints, then certified
    planar: bool = False          # Euler verdict of the attached rotation


def _make(name: str, body: Multigraph, ports: tuple[int, ...], target_kind: str,
          target_degree: int, reconstructed: bool = False) -> Gadget:
    if not ports:
        raise InvalidGraph("a gadget needs at least one port")
    for stub in ports:
        if stub not in body.unbreakable:
            raise InvalidGraph(f"port stub {stub} must be an unbreakable vertex")
        hes = body.half_edges_at(stub)
        if len(hes) != 1:
            raise InvalidGraph(f"port stub {stub} must have degree 1")
        if body.far_vertex(hes[0]) in ports:
            raise InvalidGraph("a port edge must have exactly one endpoint inside the body")
    for v in body.vertices:
        if v not in ports and body.degree(v) == 0:
            raise InvalidGraph(f"internal vertex {v} has no incident edges")
    planar = body.rotation is not None and rotation_is_planar(body)
    return Gadget(name, body, ports, target_kind, target_degree, reconstructed, planar)


@dataclass(frozen=True)
class Behavior:
    ports: int
    admissible: frozenset[Partition]
    solution_counts: dict[Partition, int]


def all_in_one_block(ports: int) -> Partition:
    return frozenset({frozenset(range(ports))})


def all_singletons(ports: int) -> Partition:
    return frozenset(frozenset({i}) for i in range(ports))


def behavior(gd: Gadget, force: bool = False) -> Behavior:
    """Exhaustively classify every break subset of the gadget's interior.

    Guarded at 2^24 subsets unless ``force`` is given.
    """
    breakables = sorted(gd.body.breakable)
    if len(breakables) > BEHAVIOR_GUARD and not force:
        raise GuardExceeded(
            f"behavior enumeration over {len(breakables)} breakable vertices "
            f"exceeds the guard of {BEHAVIOR_GUARD}; pass force=True to override")
    edges = gd.body.edges
    counts: dict[Partition, int] = {}
    for mask in range(1 << len(breakables)):
        broken = {breakables[i] for i in range(len(breakables)) if mask >> i & 1}
        uf = _UnionFind()
        acyclic = True
        for i, (a, b) in enumerate(edges):
            na = a if a not in broken else ("leaf", i, 0)
            nb = b if b not in broken else ("leaf", i, 1)
            uf.add(na)
            uf.add(nb)
            if na == nb or not uf.union(na, nb):
                acyclic = False
                break
        if not acyclic:
            continue
        roots_with_port = {uf.find(stub) for stub in gd.ports}
        if any(uf.find(x) not in roots_with_port for x in uf.parent):
            continue  # some component reaches no port
        groups: dict[object, set[int]] = {}
        for idx, stub in enumerate(gd.ports):
            groups.setdefault(uf.find(stub), set()).add(idx)
        partition: Partition = frozenset(frozenset(g) for g in groups.values())
        counts[partition] = counts.get(partition, 0) + 1
    return Behavior(len(gd.ports), frozenset(counts), counts)


def equivalent_to_unbreakable(gd: Gadget, t: int) -> bool:
    """Does the gadget behave exactly like an unbreakable degree-t vertex?"""
    if t != len(gd.ports):
        raise InvalidGraph(f"gadget has {len(gd.ports)} ports, asked about degree {t}")
    return behavior(gd).admissible == frozenset({all_in_one_block(t)})


def equivalent_to_breakable(gd: Gadget, t: int) -> bool:
    """Exactly the connect-all and disconnect-all behaviors, like a breakable vertex."""
    if t != len(gd.ports):
        raise InvalidGraph(f"gadget has {len(gd.ports)} ports, asked about degree {t}")
    expected = frozenset({all_in_one_block(t), all_singletons(t)})
    return behavior(gd).admissible == expected


def substitute(g: Multigraph, v: int, gd: Gadget) -> Multigraph:
    """Replace vertex v by the gadget, joining v's half-edges to the ports in order.

    When the host carries a rotation the gadget body must too; v's cyclic order
    is respected, so planarity carries over for gadgets with planar rotations
    and boundary-ordered ports.
    """
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v} not in graph")
    t = len(gd.ports)
    if g.degree(v) != t:
        raise InvalidGraph(f"vertex {v} has degree {g.degree(v)}, gadget has {t} ports")
    if g.rotation is not None and gd.body.rotation is None:
        raise MissingRotation("host carries an embedding; gadget body must carry one too")
    base = g.max_vertex_id() + 1
    internal = sorted(gd.body.vertices - set(gd.ports))
    vmap = {u: base + i for i, u in enumerate(internal)}
    port_edge: dict[int, int] = {}
    port_attach: dict[int, int] = {}
    for idx, stub in enumerate(gd.ports):
        he = gd.body.half_edges_at(stub)[0]
        port_edge[idx] = he[0]
        port_attach[idx] = gd.body.far_vertex(he)
    host_half = g.incident_half_edges(v)
    new_edges = list(g.edges)
    for idx, (e, s) in enumerate(host_half):
        a, b = new_edges[e]
        tgt = vmap[port_attach[idx]]
        new_edges[e] = (tgt, b) if s == 0 else (a, tgt)
    dropped = set(port_edge.values())
    body_map: dict[int, int] = {}
    for bi in range(len(gd.body.edges)):
        if bi in dropped:
            continue
        body_map[bi] = len(new_edges)
        x, y = gd.body.edges[bi]
        new_edges.append((vmap[x], vmap[y]))
    rot = None
    if g.rotation is not None:
        assert gd.body.rotation is not None
        attach_half: dict[HalfEdge, HalfEdge] = {}
        for idx, stub in enumerate(gd.ports):
            pe, pend = gd.body.half_edges_at(stub)[0]
            attach_half[(pe, 1 - pend)] = host_half[idx]
        rot = {u: seq for u, seq in g.rotation.items() if u != v}
        for u in internal:
            seq: list[HalfEdge] = []
            for bi, s in gd.body.rotation.get(u, ()):
                if bi in body_map:
                    seq.append((body_map[bi], s))
                else:
                    seq.append(attach_half[(bi, s)])
            rot[vmap[u]] = tuple(seq)
    breakable = (g.breakable - {v}) | frozenset(vmap[u] for u in internal
                                                if u in gd.body.breakable)
    unbreakable = (g.unbreakable - {v}) | frozenset(vmap[u] for u in internal
                                                    if u in gd.body.unbreakable)
    return Multigraph(breakable, unbreakable, tuple(new_edges), rot)


def bare_gadget(breakable: bool, degree: int) -> Gadget:
    """A single vertex of the given kind and degree, exposed as a gadget."""
    if degree < 1:
        raise InvalidGraph("degree must be positive")
    stubs = tuple(range(1, degree + 1))
    edges = tuple((0, s) for s in stubs)
    rotation = {0: tuple((i, 0) for i in range(degree))}
    rotation.update({s: ((i, 1),) for i, s in enumerate(stubs)})
    body = Multigraph(frozenset({0}) if breakable else frozenset(),
                      (frozenset() if breakable else frozenset({0})) | frozenset(stubs),
                      edges, rotation)
    kind = "breakable" if breakable else "unbreakable"
    return _make(f"bare_{kind[0]}{degree}", body, stubs, kind, degree)


# -- builtin catalog -----------------------------------------------------------


def u4_from_b4() -> Gadget:
    """Unbreakable degree-4 behavior from four breakable degree-4 vertices.

    Two pair vertices joined by three parallel edges, each hanging off one hub;
    the hubs share an edge and carry two ports apiece.  Exactly one pair vertex
    breaks in any admissible solution (two realizations).
    """
    p0, p1, q0, q1 = 0, 1, 2, 3
    edges = ((p0, p1), (p0, p1), (p0, p1), (p0, q0), (p1, q1), (q0, q1),
             (q0, 4), (q0, 5), (q1, 6), (q1, 7))
    rotation = {
        q0: ((3, 1), (6, 0), (7, 0), (5, 0)),
        p0: ((3, 0), (0, 0), (1, 0), (2, 0)),
        p1: ((2, 1), (1, 1), (0, 1), (4, 0)),
        q1: ((8, 0), (4, 1), (5, 1), (9, 0)),
        4: ((6, 1),), 5: ((7, 1),), 6: ((8, 1),), 7: ((9, 1),),
    }
    body = Multigraph(frozenset({p0, p1, q0, q1}), frozenset({4, 5, 6, 7}),
                      edges, rotation)
    return _make("u4_from_b4", body, (4, 5, 7, 6), "unbreakable", 4,
                 reconstructed=True)


def u_from_bk(k: int, a: int) -> Gadget:
    """Unbreakable degree-(k-2a) behavior from breakable degree-k vertices.

    A hub with 2a edges to pair vertices and k-2a ports; each pair shares k-1
    parallel edges, forcing exactly one of the two to break while the hub never
    does.
    """
    if k < 4 or a < 1 or k - 2 * a < 2:
        raise InvalidGraph(f"need k >= 4, a >= 1, k - 2a >= 2; got k={k}, a={a}")
    hub = 0
    pair = [1 + j for j in range(2 * a)]
    ports = tuple(1 + 2 * a + t for t in range(k - 2 * a))
    edges: list[tuple[int, int]] = [(hub, p) for p in pair]
    petal_first = {}
    for i in range(a):
        petal_first[i] = len(edges)
        edges.extend((pair[2 * i], pair[2 * i + 1]) for _ in range(k - 1))
    port_first = len(edges)
    edges.extend((hub, s) for s in ports)
    rotation: dict[int, tuple[HalfEdge, ...]] = {}
    hub_seq: list[HalfEdge] = []
    for i in range(a):
        hub_seq.extend([(2 * i + 1, 0), (2 * i, 0)])
    hub_seq.extend((port_first + t, 0) for t in range(k - 2 * a))
    rotation[hub] = tuple(hub_seq)
    for i in range(a):
        f = petal_first[i]
        rotation[pair[2 * i]] = ((2 * i, 1),) + tuple((f + r, 0) for r in range(k - 1))
        rotation[pair[2 * i + 1]] = tuple((f + r, 1) for r in reversed(range(k - 1))) \
            + ((2 * i + 1, 1),)
    for t, s in enumerate(ports):
        rotation[s] = ((port_first + t, 1),)
    body = Multigraph(frozenset([hub] + pair), frozenset(ports),
                      tuple(edges), rotation)
    return _make(f"u_from_bk(k={k},a={a})", body, ports, "unbreakable", k - 2 * a)


def u4_split_u3() -> Gadget:
    """Unbreakable degree-4 behavior from two unbreakable degree-3 vertices."""
    edges = ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5))
    rotation = {
        0: ((0, 0), (1, 0), (2, 0)),
        1: ((4, 0), (0, 1), (3, 0)),
        2: ((1, 1),), 3: ((2, 1),), 4: ((3, 1),), 5: ((4, 1),),
    }
    body = Multigraph(frozenset(), frozenset({0, 1, 2, 3, 4, 5}), edges, rotation)
    return _make("u4_split_u3", body, (2, 3, 4, 5), "unbreakable", 4)


def u2_from_bk(k: int) -> Gadget:
    """Unbreakable degree-2 behavior from 2k-2 breakable degree-k vertices.

    Complete bipartite edges between k-2 left vertices and a path of k right
    vertices, with one port at each end of the path.  The unique solution
    breaks every left vertex and none of the right ones.  Planar only at k = 4
    (larger k embeds a K33); the attached rotation is canonical otherwise.
    """
    if k < 4:
        raise InvalidGraph(f"need k >= 4, got k={k}")
    left = list(range(k - 2))
    right = [k - 2 + j for j in range(k)]
    stub_a, stub_b = 2 * k - 2, 2 * k - 1
    edges: list[tuple[int, int]] = []
    for i in left:
        edges.extend((i, r) for r in right)
    path_first = len(edges)
    edges.extend((right[j], right[j + 1]) for j in range(k - 1))
    pa = len(edges)
    edges.append((right[0], stub_a))
    pb = len(edges)
    edges.append((right[-1], stub_b))
    body_sets = (frozenset(left + right), frozenset({stub_a, stub_b}))
    if k == 4:
        rotation: dict[int, tuple[HalfEdge, ...]] = {
            left[0]: ((3, 0), (2, 0), (1, 0), (0, 0)),
            left[1]: ((4, 0), (5, 0), (6, 0), (7, 0)),
            right[0]: ((pa, 0), (0, 1), (path_first, 0), (4, 1)),
            right[1]: ((path_first, 1), (1, 1), (path_first + 1, 0), (5, 1)),
            right[2]: ((path_first + 1, 1), (2, 1), (path_first + 2, 0), (6, 1)),
            right[3]: ((7, 1), (path_first + 2, 1), (3, 1), (pb, 0)),
            stub_a: ((pa, 1),), stub_b: ((pb, 1),),
        }
    else:
        g0 = Multigraph(body_sets[0], body_sets[1], tuple(edges))
        rotation = {v: g0.half_edges_at(v) for v in g0.vertices}
    body = Multigraph(body_sets[0], body_sets[1], tuple(edges), rotation)
    return _make(f"u2_from_bk(k={k})", body, (stub_a, stub_b), "unbreakable", 2)


def u2_from_b4() -> Gadget:
    """Unbreakable degree-2 behavior from breakable degree-4 vertices."""
    gd = u2_from_bk(4)
    return Gadget("u2_from_b4", gd.body, gd.ports, gd.target_kind,
                  gd.target_degree, gd.reconstructed, gd.planar)


def u2_from_bk_u4(k: int) -> Gadget:
    """Unbreakable degree-2 behavior from breakable degree-k and unbreakable degree-4.

    Two breakable fan apexes over a path of k unbreakable vertices; each apex
    sits on a cycle with no other breakable vertex, so both must break.
    """
    if k < 4:
        raise InvalidGraph(f"need k >= 4, got k={k}")
    x, y = 0, 1
    spine = [2 + i for i in range(k)]
    stub_a, stub_b = k + 2, k + 3
    edges: list[tuple[int, int]] = [(x, s) for s in spine]
    edges.extend((y, s) for s in spine)
    path_first = len(edges)
    edges.extend((spine[i], spine[i + 1]) for i in range(k - 1))
    pa = len(edges)
    edges.append((spine[0], stub_a))
    pb = len(edges)
    edges.append((spine[-1], stub_b))
    rotation: dict[int, tuple[HalfEdge, ...]] = {
        x: tuple((i, 0) for i in range(k)),
        y: tuple((k + i, 0) for i in reversed(range(k))),
        spine[0]: ((path_first, 0), (0, 1), (pa, 0), (k, 1)),
        spine[-1]: ((pb, 0), (k - 1, 1), (path_first + k - 2, 1), (2 * k - 1, 1)),
        stub_a: ((pa, 1),), stub_b: ((pb, 1),),
    }
    for i in range(1, k - 1):
        rotation[spine[i]] = ((path_first + i, 0), (i, 1),
                              (path_first + i - 1, 1), (k + i, 1))
    body = Multigraph(frozenset({x, y}), frozenset(spine + [stub_a, stub_b]),
                      tuple(edges), rotation)
    return _make(f"u2_from_bk_u4(k={k})", body, (stub_a, stub_b), "unbreakable", 2,
                 reconstructed=True)


def u2_from_bk_u3(k: int) -> Gadget:
    """Unbreakable degree-2 behavior from breakable degree-k and unbreakable degree-3.

    One breakable fan apex over a path of k unbreakable vertices; the apex is
    forced to break.
    """
    if k < 4:
        raise InvalidGraph(f"need k >= 4, got k={k}")
    x = 0
    spine = [1 + i for i in range(k)]
    stub_a, stub_b = k + 1, k + 2
    edges: list[tuple[int, int]] = [(x, s) for s in spine]
    path_first = len(edges)
    edges.extend((spine[i], spine[i + 1]) for i in range(k - 1))
    pa = len(edges)
    edges.append((spine[0], stub_a))
    pb = len(edges)
    edges.append((spine[-1], stub_b))
    rotation: dict[int, tuple[HalfEdge, ...]] = {
        x: tuple((i, 0) for i in range(k)),
        spine[0]: ((path_first, 0), (0, 1), (pa, 0)),
        spine[-1]: ((pb, 0), (k - 1, 1), (path_first + k - 2, 1)),
        stub_a: ((pa, 1),), stub_b: ((pb, 1),),
    }
    for i in range(1, k - 1):
        rotation[spine[i]] = ((path_first + i, 0), (i, 1), (path_first + i - 1, 1))
    body = Multigraph(frozenset({x}), frozenset(spine + [stub_a, stub_b]),
                      tuple(edges), rotation)
    return _make(f"u2_from_bk_u3(k={k})", body, (stub_a, stub_b), "unbreakable", 2,
                 reconstructed=True)


def u2_from_bk_u1(k: int) -> Gadget:
    """Unbreakable degree-2 behavior from one breakable degree-k hub and k-2 leaves.

    Breaking the hub would strand the leaves, so it never breaks.
    """
    if k < 4:
        raise InvalidGraph(f"need k >= 4, got k={k}")
    hub = 0
    leaves = [1 + i for i in range(k - 2)]
    stub_a, stub_b = k - 1, k
    edges: list[tuple[int, int]] = [(hub, stub_a)]
    edges.extend((hub, u) for u in leaves)
    edges.append((hub, stub_b))
    rotation: dict[int, tuple[HalfEdge, ...]] = {
        hub: tuple((i, 0) for i in range(k)),
        stub_a: ((0, 1),), stub_b: ((k - 1, 1),),
    }
    for i, u in enumerate(leaves):
        rotation[u] = ((1 + i, 1),)
    body = Multigraph(frozenset({hub}), frozenset(leaves + [stub_a, stub_b]),
                      tuple(edges), rotation)
    return _make(f"u2_from_bk_u1(k={k})", body, (stub_a, stub_b), "unbreakable", 2)


def u2_from_bk_b2(k: int, a: int) -> Gadget:
    """Unbreakable degree-(k-2a) behavior from one breakable degree-k hub and
    2a breakable degree-2 pair vertices joined pairwise by single edges."""
    if k < 4 or a < 1 or k - 2 * a < 2:
        raise InvalidGraph(f"need k >= 4, a >= 1, k - 2a >= 2; got k={k}, a={a}")
    hub = 0
    pair = [1 + j for j in range(2 * a)]
    ports = tuple(1 + 2 * a + t for t in range(k - 2 * a))
    edges: list[tuple[int, int]] = [(hub, p) for p in pair]
    petal_first = len(edges)
    edges.extend((pair[2 * i], pair[2 * i + 1]) for i in range(a))
    port_first = len(edges)
    edges.extend((hub, s) for s in ports)
    rotation: dict[int, tuple[HalfEdge, ...]] = {}
    hub_seq: list[HalfEdge] = []
    for i in range(a):
        hub_seq.extend([(2 * i + 1, 0), (2 * i, 0)])
    hub_seq.extend((port_first + t, 0) for t in range(k - 2 * a))
    rotation[hub] = tuple(hub_seq)
    for i in range(a):
        rotation[pair[2 * i]] = ((2 * i, 1), (petal_first + i, 0))
        rotation[pair[2 * i + 1]] = ((petal_first + i, 1), (2 * i + 1, 1))
    for t, s in enumerate(ports):
        rotation[s] = ((port_first + t, 1),)
    body = Multigraph(frozenset([hub] + pair), frozenset(ports),
                      tuple(edges), rotation)
    return _make(f"u2_from_bk_b2(k={k},a={a})", body, ports, "unbreakable", k - 2 * a)


def u2_from_b3() -> Gadget:
    """Unbreakable degree-2 behavior from four breakable degree-3 vertices.

    Apex over a path of three; exactly one of the apex and the path middle
    breaks (two realizations).
    """
    edges = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (3, 5))
    rotation = {
        0: ((0, 0), (1, 0), (2, 0)),
        1: ((0, 1), (5, 0), (3, 0)),
        2: ((4, 0), (1, 1), (3, 1)),
        3: ((6, 0), (2, 1), (4, 1)),
        4: ((5, 1),), 5: ((6, 1),),
    }
    body = Multigraph(frozenset({0, 1, 2, 3}), frozenset({4, 5}), edges, rotation)
    return _make("u2_from_b3", body, (4, 5), "unbreakable", 2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]       # parameter names the constructor takes
    description: str
    reconstructed: bool


CATALOG: dict[str, CatalogEntry] = {
    "u4_from_b4": CatalogEntry("u4_from_b4", (),
                               "unbreakable degree-4 from breakable degree-4 vertices", True),
    "u_from_bk": CatalogEntry("u_from_bk", ("k", "a"),
                              "unbreakable degree-(k-2a) from breakable degree-k vertices", False),
    "u4_split_u3": CatalogEntry("u4_split_u3", (),
                                "unbreakable degree-4 from two unbreakable degree-3 vertices", False),
    "u2_from_bk": CatalogEntry("u2_from_bk", ("k",),
                               "unbreakable degree-2 from breakable degree-k vertices", False),
    "u2_from_bk_u4": CatalogEntry("u2_from_bk_u4", ("k",),
                                  "unbreakable degree-2 from breakable degree-k and "
                                  "unbreakable degree-4 vertices", True),
    "u2_from_bk_u3": CatalogEntry("u2_from_bk_u3", ("k",),
                                  "unbreakable degree-2 from breakable degree-k and "
                                  "unbreakable degree-3 vertices", True),
    "u2_from_bk_u1": CatalogEntry("u2_from_bk_u1", ("k",),
                                  "unbreakable degree-2 from a breakable degree-k hub "
                                  "and unbreakable leaves", False),
    "u2_from_bk_b2": CatalogEntry("u2_from_bk_b2", ("k", "a"),
                                  "unbreakable degree-(k-2a) from a breakable degree-k hub "
                                  "and breakable degree-2 pairs", False),
    "u2_from_b3": CatalogEntry("u2_from_b3", (),
                               "unbreakable degree-2 from breakable degree-3 vertices", False),
    "u2_from_b4": CatalogEntry("u2_from_b4", (),
                               "unbreakable degree-2 from breakable degree-4 vertices", False),
}

_CONSTRUCTORS = {
    "u4_from_b4": lambda k, a: u4_from_b4(),
    "u_from_bk": lambda k, a: u_from_bk(k, a),
    "u4_split_u3": lambda k, a: u4_split_u3(),
    "u2_from_bk": lambda k, a: u2_from_bk(k),
    "u2_from_bk_u4": lambda k, a: u2_from_bk_u4(k),
    "u2_from_bk_u3": lambda k, a: u2_from_bk_u3(k),
    "u2_from_bk_u1": lambda k, a: u2_from_bk_u1(k),
    "u2_from_bk_b2": lambda k, a: u2_from_bk_b2(k, a),
    "u2_from_b3": lambda k, a: u2_from_b3(),
    "u2_from_b4": lambda k, a: u2_from_b4(),
}


def builtin(name: str, k: int | None = None, a: int | None = None) -> Gadget:
    """Construct a catalog gadget by name; k and a where the entry takes them."""
    entry = CATALOG.get(name)
    if entry is None:
        raise InvalidGraph(f"unknown gadget {name!r}; known: {', '.join(sorted(CATALOG))}")
    if "k" in entry.params and k is None:
        raise InvalidGraph(f"gadget {name} needs parameter k")
    if "a" in entry.params and a is None:
        raise InvalidGraph(f"gadget {name} needs parameter a")
    return _CONSTRUCTORS[name](k, a)


def certification_catalog() -> list[Gadget]:
    """Representative instantiations certified by the acceptance suite.

    The 32-vertex degree-5 gadget has no constructor (its topology is not
    recoverable); its arithmetic checks live in the acceptance suite instead.
    """
    return [
        builtin("u4_from_b4"),
        builtin("u_from_bk", k=5, a=1),
        builtin("u_from_bk", k=6, a=1),
        builtin("u_from_bk", k=7, a=2),
        builtin("u4_split_u3"),
        builtin("u2_from_bk", k=4),
        builtin("u2_from_bk", k=5),
        builtin("u2_from_bk_u4", k=4),
        builtin("u2_from_bk_u4", k=5),
        builtin("u2_from_bk_u3", k=4),
        builtin("u2_from_bk_u3", k=5),
        builtin("u2_from_bk_u1", k=4),
        builtin("u2_from_bk_u1", k=5),
        builtin("u2_from_bk_b2", k=4, a=1),
        builtin("u2_from_bk_b2", k=5, a=1),
        builtin("u2_from_bk_b2", k=6, a=2),
        builtin("u2_from_b3"),
        builtin("u2_from_b4"),
    ]
