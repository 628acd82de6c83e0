"""Exact TRVB decision with certificates via pruned exhaustive search.

The search explores subsets of breakable vertices.  Three sound prunings are
implemented, each individually toggleable for differential testing against the
unpruned subset-enumeration oracle:

* budget: a tree residue forces sum(deg(v) - 1 for v in S) == E - V + 1, so
  partial sums outside the reachable window kill the branch;
* adjacency: breaking both endpoints of an edge isolates that edge, which is
  only a tree when it is the entire graph (E == 1);
* isolated cycle: a cycle whose breakable vertices are all decided-unbroken
  survives every extension of the branch.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .core import (Multigraph, _UnionFind, break_set, is_tree,
                   required_vertex_growth)


@dataclass(frozen=True)
class BreakCertificate:
    broken: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "BreakCertificate":
        return cls(frozenset(vertices))

    def sorted_ids(self) -> list[int]:
        return sorted(self.broken)


@dataclass(frozen=True)
class PruningOptions:
    budget: bool = True
    adjacency: bool = True
    isolated_cycle: bool = True

    @classmethod
    def none(cls) -> "PruningOptions":
        return cls(False, False, False)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None  # "unknown-vertex" | "not-breakable" | "not-a-tree"

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class EnumerationResult:
    certificates: tuple[BreakCertificate, ...]
    truncated: bool


def verify(g: Multigraph, cert: BreakCertificate) -> VerifyResult:
    """True iff every member is a breakable vertex of g and breaking them yields a tree."""
    for v in cert.broken:
        if v not in g.vertices:
            return VerifyResult(False, "unknown-vertex")
        if v not in g.breakable:
            return VerifyResult(False, "not-breakable")
    if not is_tree(break_set(g, cert.broken)):
        return VerifyResult(False, "not-a-tree")
    return VerifyResult(True)


def _doomed_cycle(g: Multigraph, can_break: set[int]) -> bool:
    """Is there a cycle avoiding every vertex that can still be broken?"""
    uf = _UnionFind(v for v in g.vertices if v not in can_break)
    for a, b in g.edges:
        if a in can_break or b in can_break:
            continue
        if a == b or not uf.union(a, b):
            return True
    return False


def _search(g: Multigraph, order: list[int], prunings: PruningOptions,
            emit: Callable[[frozenset[int]], bool]) -> None:
    """Enumerate break subsets over ``order``; emit returns True to stop.

    Subsets are visited in prefix order: a set is emitted before any of its
    extensions by later vertices, so with ascending-id ``order`` the emission
    sequence is the lexicographic order of sorted id tuples.
    """
    n = len(order)
    target = required_vertex_growth(g)
    contrib = {v: g.degree(v) - 1 for v in order}
    suffix_max = [0] * (n + 1)
    suffix_min = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        c = contrib[order[i]]
        suffix_max[i] = suffix_max[i + 1] + max(c, 0)
        suffix_min[i] = suffix_min[i + 1] + min(c, 0)
    adj = g.adjacency()
    single_edge = g.num_edges == 1
    stop = False

    def rec(chosen: list[int], chosen_set: set[int], total: int, i: int) -> None:
        nonlocal stop
        if stop:
            return
        if prunings.isolated_cycle:
            can_break = chosen_set | set(order[i:])
            if _doomed_cycle(g, can_break):
                return
        if not prunings.budget or total == target:
            if is_tree(break_set(g, chosen)):
                if emit(frozenset(chosen)):
                    stop = True
                    return
        for j in range(i, n):
            v = order[j]
            c = contrib[v]
            if prunings.budget:
                t = total + c
                if t + suffix_min[j + 1] > target or t + suffix_max[j + 1] < target:
                    continue
            if prunings.adjacency and not single_edge:
                if v in adj[v] or any(u in chosen_set for u in adj[v]):
                    continue
            chosen.append(v)
            chosen_set.add(v)
            rec(chosen, chosen_set, total + c, j + 1)
            chosen.pop()
            chosen_set.remove(v)
            if stop:
                return

    rec([], set(), 0, 0)


def solve(g: Multigraph, prunings: PruningOptions = PruningOptions()) -> BreakCertificate | None:
    """Decide TRVB on g; return a verifying certificate or None.

    Branches on breakable vertices in descending degree order so the budget
    pruning bites earliest on large degrees.  "No" is returned as None, never
    raised.
    """
    order = sorted(g.breakable, key=lambda v: (-g.degree(v), v))
    found: list[BreakCertificate] = []

    def emit(s: frozenset[int]) -> bool:
        found.append(BreakCertificate(s))
        return True

    _search(g, order, prunings, emit)
    return found[0] if found else None


def solve_brute(g: Multigraph) -> BreakCertificate | None:
    """Unpruned oracle: try every subset of breakable vertices, smallest first."""
    bs = sorted(g.breakable)
    for r in range(len(bs) + 1):
        for combo in combinations(bs, r):
            if is_tree(break_set(g, combo)):
                return BreakCertificate(frozenset(combo))
    return None


def enumerate_solutions(g: Multigraph, cap: int = 10 ** 6,
                        prunings: PruningOptions = PruningOptions()) -> EnumerationResult:
    """All valid certificates in canonical (sorted-id lexicographic) order.

    Output is truncated at ``cap`` certificates; truncation keeps the canonical
    prefix because the search emits in canonical order.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    order = sorted(g.breakable)
    out: list[BreakCertificate] = []
    truncated = [False]

    def emit(s: frozenset[int]) -> bool:
        if len(out) == cap:
            truncated[0] = True
            return True
        out.append(BreakCertificate(s))
        return False

    _search(g, order, prunings, emit)
    return EnumerationResult(tuple(out), truncated[0])
