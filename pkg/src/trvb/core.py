"""Labeled multigraphs with half-edge identity, vertex breaking, and embedding checks.

Vertices carry a breakable / unbreakable kind.  Edges are an indexed list of
unordered endpoint pairs; self-loops and parallel edges are first-class.  A
half-edge is the pair (edge index, end) with end in {0, 1}, so every edge side
keeps its identity through rewrites.  An optional rotation system (one cyclic
order of half-edges per vertex) encodes a combinatorial embedding; planarity is
certified from it via face tracing and the Euler relation, never searched for.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

HalfEdge = tuple[int, int]  # (edge index, end in {0, 1})
Dart = tuple[int, int]      # (edge index, source end): traverses the edge away from that end


class InvalidGraph(ValueError):
    """Structurally invalid graph, rotation, or operation argument."""


class MissingRotation(InvalidGraph):
    """An operation that needs an embedding was given a graph without one."""


class MalformedRotation(InvalidGraph):
    pass


class UnknownVertex(InvalidGraph):
    pass


class NotBreakable(InvalidGraph):
    """Asked to break an unbreakable vertex; a caller bug, not a "no" answer."""


class GuardExceeded(RuntimeError):
    """An exhaustive operation was asked to exceed its feasibility guard."""


@dataclass(frozen=True)
class Multigraph:
    """Immutable labeled multigraph.

    All operations return new values; instances are safe to share. ``rotation``
    maps a vertex to the cyclic sequence of its half-edges; when present it must
    list every half-edge exactly once at its own endpoint (a self-loop
    contributes both its half-edges to its vertex and 2 to the degree).
    """

    breakable: frozenset[int]
    unbreakable: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    rotation: dict[int, tuple[HalfEdge, ...]] | None = None

    @classmethod
    def of(cls, breakable: Iterable[int] = (), unbreakable: Iterable[int] = (),
           edges: Iterable[tuple[int, int]] = (),
           rotation: Mapping[int, Iterable[HalfEdge]] | None = None) -> "Multigraph":
        rot = None
        if rotation is not None:
            rot = {int(v): tuple((int(e), int(s)) for e, s in seq)
                   for v, seq in rotation.items()}
        return cls(frozenset(int(v) for v in breakable),
                   frozenset(int(v) for v in unbreakable),
                   tuple((int(a), int(b)) for a, b in edges),
                   rot)

    def __post_init__(self) -> None:
        overlap = self.breakable & self.unbreakable
        if overlap:
            raise InvalidGraph(f"vertices marked both breakable and unbreakable: {sorted(overlap)}")
        verts = self.breakable | self.unbreakable
        for i, (a, b) in enumerate(self.edges):
            if a not in verts or b not in verts:
                raise InvalidGraph(f"edge {i} = ({a}, {b}) has an unknown endpoint")
        if self.rotation is not None:
            self._check_rotation(verts)

    def _check_rotation(self, verts: frozenset[int]) -> None:
        assert self.rotation is not None
        for v in self.rotation:
            if v not in verts:
                raise MalformedRotation(f"rotation entry for unknown vertex {v}")
        for v in verts:
            seq = self.rotation.get(v, ())
            if sorted(seq) != sorted(self.half_edges_at(v)):
                raise MalformedRotation(
                    f"rotation at vertex {v} is not a permutation of its half-edges")

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self.breakable | self.unbreakable

    @property
    def num_vertices(self) -> int:
        return len(self.breakable) + len(self.unbreakable)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_breakable(self, v: int) -> bool:
        if v in self.breakable:
            return True
        if v in self.unbreakable:
            return False
        raise UnknownVertex(f"vertex {v} not in graph")

    def half_edges_at(self, v: int) -> tuple[HalfEdge, ...]:
        """Half-edges incident to v in edge-index order (self-loops give two)."""
        out: list[HalfEdge] = []
        for i, (a, b) in enumerate(self.edges):
            if a == v:
                out.append((i, 0))
            if b == v:
                out.append((i, 1))
        return tuple(out)

    def incident_half_edges(self, v: int) -> tuple[HalfEdge, ...]:
        """Rotation order when an embedding is present, else edge-index order."""
        if self.rotation is not None and v in self.rotation:
            return self.rotation[v]
        return self.half_edges_at(v)

    def degree(self, v: int) -> int:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        return len(self.half_edges_at(v))

    def end_vertex(self, he: HalfEdge) -> int:
        e, s = he
        return self.edges[e][s]

    def far_vertex(self, he: HalfEdge) -> int:
        e, s = he
        return self.edges[e][1 - s]

    def max_vertex_id(self) -> int:
        return max(self.vertices, default=-1)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


# -- breaking --------------------------------------------------------------


@dataclass(frozen=True)
class BreakTrace:
    """Which vertices were broken and which fresh leaves each one spawned.

    ``spawned[v]`` is aligned index-by-index with v's incident half-edges at
    the moment of breaking (rotation order if present, else edge-index order).
    """

    broken: tuple[int, ...]
    spawned: dict[int, tuple[int, ...]]


def break_vertex(g: Multigraph, v: int) -> tuple[Multigraph, BreakTrace]:
    """Replace breakable vertex v by one fresh degree-1 vertex per incident half-edge.

    Edge count is unchanged; vertex count grows by deg(v) - 1.  Fresh ids are
    allocated from a monotone counter above the current maximum id, in the
    incident half-edge order, so results are reproducible.  A rotation system,
    when present, is inherited: surviving vertices keep their cyclic order and
    each fresh leaf carries its single half-edge.
    """
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v} not in graph")
    if v not in g.breakable:
        raise NotBreakable(f"vertex {v} is unbreakable")
    order = g.incident_half_edges(v)
    base = g.max_vertex_id() + 1
    fresh = tuple(base + i for i in range(len(order)))
    new_edges = list(g.edges)
    for (e, s), f in zip(order, fresh):
        a, b = new_edges[e]
        new_edges[e] = (f, b) if s == 0 else (a, f)
    rot = None
    if g.rotation is not None:
        rot = {u: seq for u, seq in g.rotation.items() if u != v}
        for he, f in zip(order, fresh):
            rot[f] = (he,)
    g2 = Multigraph(g.breakable - {v}, g.unbreakable | frozenset(fresh),
                    tuple(new_edges), rot)
    return g2, BreakTrace((v,), {v: fresh})


def break_set(g: Multigraph, s: Iterable[int]) -> Multigraph:
    """Break every vertex of s; the result depends only on the set, not the order."""
    members = list(s)
    if len(members) != len(set(members)):
        raise InvalidGraph("duplicate vertex in break set")
    for v in members:
        if v not in g.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        if v not in g.breakable:
            raise NotBreakable(f"vertex {v} is unbreakable")
    out = g
    for v in sorted(members):
        out, _ = break_vertex(out, v)
    return out


# -- connectivity and trees -------------------------------------------------


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, items: Iterable[int] = ()):
        self.parent: dict = {x: x for x in items}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; False if already together."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True

    def component_count(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


def connected_components(g: Multigraph) -> list[frozenset[int]]:
    uf = _UnionFind(g.vertices)
    for a, b in g.edges:
        uf.union(a, b)
    groups: dict[int, set[int]] = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), set()).add(v)
    return [frozenset(grp) for grp in groups.values()]


def is_connected(g: Multigraph) -> bool:
    if g.num_vertices == 0:
        return False
    uf = _UnionFind(g.vertices)
    for a, b in g.edges:
        uf.union(a, b)
    return uf.component_count() == 1


def is_tree(g: Multigraph) -> bool:
    """True iff g is connected with exactly V - 1 edges (hence acyclic)."""
    return g.num_edges == g.num_vertices - 1 and is_connected(g)


def has_cycle(g: Multigraph) -> bool:
    """Independent cycle search: union-find over edges, loops count."""
    uf = _UnionFind(g.vertices)
    for a, b in g.edges:
        if a == b or not uf.union(a, b):
            return True
    return False


def required_vertex_growth(g: Multigraph) -> int:
    """E - V + 1: the exact total of (deg(v) - 1) over any tree-yielding break set.

    Breaking S yields V + sum(deg(v) - 1 for v in S) vertices and E edges, and a
    tree needs exactly one more vertex than edges.
    """
    return g.num_edges - g.num_vertices + 1


# -- rotation systems and faces ----------------------------------------------


def trace_faces(g: Multigraph) -> list[list[Dart]]:
    """Face walks of the embedding given by g's rotation system.

    A dart (e, s) traverses edge e away from endpoint s.  Every dart lies in
    exactly one walk and the walk lengths sum to 2E.
    """
    if g.rotation is None:
        raise MissingRotation("face tracing needs a rotation system")
    succ: dict[HalfEdge, HalfEdge] = {}
    for v in g.vertices:
        seq = g.rotation.get(v, ())
        for i, he in enumerate(seq):
            succ[he] = seq[(i + 1) % len(seq)]
    faces: list[list[Dart]] = []
    seen: set[Dart] = set()
    for e in range(g.num_edges):
        for s in (0, 1):
            start: Dart = (e, s)
            if start in seen:
                continue
            walk: list[Dart] = []
            d = start
            while True:
                walk.append(d)
                seen.add(d)
                de, ds = d
                d = succ[(de, 1 - ds)]
                if d == start:
                    break
            faces.append(walk)
    return faces


def rotation_is_planar(g: Multigraph) -> bool:
    """Euler check V - E + F = 2 on every connected component.

    Components without edges are trivially planar.  Requires a rotation system.
    """
    if g.rotation is None:
        raise MissingRotation("planarity certification needs a rotation system")
    comp_of: dict[int, int] = {}
    for idx, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_of[v] = idx
    counts: dict[int, list[int]] = {}  # comp -> [V, E, F]
    for v, c in comp_of.items():
        counts.setdefault(c, [0, 0, 0])[0] += 1
    for a, b in g.edges:
        counts[comp_of[a]][1] += 1
    for walk in trace_faces(g):
        e, s = walk[0]
        counts[comp_of[g.edges[e][s]]][2] += 1
    return all(V - E + F == 2 for V, E, F in counts.values() if E > 0)


# -- degree sets and variant validation ---------------------------------------


@dataclass(frozen=True)
class DegreeSet:
    """A finite set of positive degrees, optionally with a cofinite tail.

    ``tail_start = m`` means every integer >= m is also a member, so variants
    like "all degrees at least 6" are first-class.  Membership is O(1).
    """

    finite: frozenset[int] = frozenset()
    tail_start: int | None = None

    def __post_init__(self) -> None:
        for n in self.finite:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"degree sets hold positive integers, got {n!r}")
        if self.tail_start is not None and self.tail_start < 1:
            raise ValueError("tail must start at a positive integer")
        if self.tail_start is not None:
            object.__setattr__(self, "finite",
                               frozenset(n for n in self.finite if n < self.tail_start))

    def __contains__(self, n: int) -> bool:
        return n in self.finite or (self.tail_start is not None and n >= self.tail_start)

    def is_empty(self) -> bool:
        return not self.finite and self.tail_start is None

    def intersects_range(self, lo: int, hi: int) -> bool:
        """Does the set meet {lo..hi}?"""
        if any(lo <= n <= hi for n in self.finite):
            return True
        return self.tail_start is not None and self.tail_start <= hi

    def subset_of(self, values: Iterable[int]) -> bool:
        if self.tail_start is not None:
            return False
        return self.finite <= set(values)

    def has_at_least(self, k: int) -> bool:
        """Does the set contain some degree >= k?"""
        return self.tail_start is not None or any(n >= k for n in self.finite)

    def union(self, other: "DegreeSet") -> "DegreeSet":
        tails = [t for t in (self.tail_start, other.tail_start) if t is not None]
        return DegreeSet(self.finite | other.finite, min(tails) if tails else None)

    @classmethod
    def of(cls, *degrees: int) -> "DegreeSet":
        return cls(frozenset(degrees))

    @classmethod
    def at_least(cls, m: int) -> "DegreeSet":
        return cls(frozenset(), m)

    @classmethod
    def all(cls) -> "DegreeSet":
        return cls(frozenset(), 1)

    @classmethod
    def parse(cls, text: str) -> "DegreeSet":
        """Parse "4,5", "6+", "1,2,6+", "all", or "none"."""
        text = text.strip().lower()
        if text in ("none", ""):
            return cls()
        if text == "all":
            return cls.all()
        finite: set[int] = set()
        tail: int | None = None
        for token in text.split(","):
            token = token.strip()
            if token.endswith("+"):
                start = int(token[:-1])
                tail = start if tail is None else min(tail, start)
            else:
                finite.add(int(token))
        return cls(frozenset(finite), tail)

    def __str__(self) -> str:
        if self.is_empty():
            return "none"
        if self.tail_start == 1:
            return "all"
        parts = [str(n) for n in sorted(self.finite)]
        if self.tail_start is not None:
            parts.append(f"{self.tail_start}+")
        return ",".join(parts)


@dataclass(frozen=True)
class VariantSpec:
    """Degree and structure restrictions defining a TRVB variant."""

    B: DegreeSet
    U: DegreeSet
    planar: bool = False
    simple: bool = False


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    vertex: int | None = None
    edge: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    degree_ok: dict[int, bool]
    planar: bool | None  # None when the spec did not request planarity

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(g: Multigraph, spec: VariantSpec) -> ValidationReport:
    """Check g against a variant's degree, simplicity, and planarity constraints.

    Planarity is certified from the supplied rotation system (face tracing plus
    the per-component Euler relation); a planar-flagged instance without a
    rotation is itself a violation.
    """
    violations: list[Violation] = []
    degree_ok: dict[int, bool] = {}
    for v in sorted(g.vertices):
        d = g.degree(v)
        allowed = spec.B if v in g.breakable else spec.U
        degree_ok[v] = d in allowed
        if not degree_ok[v]:
            kind = "breakable" if v in g.breakable else "unbreakable"
            violations.append(Violation(
                "degree", f"{kind} vertex {v} has degree {d}, allowed {allowed}", vertex=v))
    if spec.simple:
        seen_pairs: dict[tuple[int, int], int] = {}
        for i, (a, b) in enumerate(g.edges):
            if a == b:
                violations.append(Violation("self-loop", f"edge {i} is a self-loop at {a}", edge=i))
                continue
            key = (min(a, b), max(a, b))
            if key in seen_pairs:
                violations.append(Violation(
                    "parallel-edges", f"edges {seen_pairs[key]} and {i} both join {key}", edge=i))
            else:
                seen_pairs[key] = i
    planar: bool | None = None
    if spec.planar:
        if g.rotation is None:
            planar = False
            violations.append(Violation(
                "missing-rotation", "planar-flagged instance carries no rotation system"))
        else:
            planar = rotation_is_planar(g)
            if not planar:
                violations.append(Violation(
                    "euler", "rotation system fails the Euler planarity check"))
    return ValidationReport(tuple(violations), degree_ok, planar)
