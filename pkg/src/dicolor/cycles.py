"""Directed-cycle machinery: acyclicity, digirth, and max-degree-2 decomposition."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .digraph import Digraph
from .errors import DegreeTooHigh

INFINITE = math.inf


def _rotate_min_first(cycle: list[int]) -> list[int]:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def find_cycle(D: Digraph, vertices: Iterable[int] | None = None) -> list[int] | None:
    """Return a directed cycle of ``D`` (restricted to ``vertices`` if given), or None.

    The cycle follows arcs head-to-tail and starts at its smallest vertex.
    """
    if vertices is None:
        allowed = None
        roots = range(D.n)
    else:
        allowed = set(vertices)
        roots = sorted(allowed)
    state = {}
    for s in roots:
        if s in state:
            continue
        state[s] = 1
        path = [s]
        pos = {s: 0}
        stack = [iter(D.out[s])]
        while stack:
            for w in stack[-1]:
                if allowed is not None and w not in allowed:
                    continue
                st = state.get(w, 0)
                if st == 1:
                    return _rotate_min_first(path[pos[w]:])
                if st == 0:
                    state[w] = 1
                    pos[w] = len(path)
                    path.append(w)
                    stack.append(iter(D.out[w]))
                    break
            else:
                stack.pop()
                done = path.pop()
                del pos[done]
                state[done] = 2
    return None


def is_acyclic(D: Digraph, vertices: Iterable[int] | None = None) -> bool:
    return find_cycle(D, vertices) is None


def _shortest_cycle_through(D: Digraph, v: int, limit: float) -> list[int] | None:
    """Shortest directed cycle through ``v`` of length < ``limit``, or None."""
    targets = set(D.inn[v])
    if not targets:
        return None
    parent = {v: None}
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if u in targets:
            # first in-neighbour reached by BFS closes the shortest cycle through v
            cycle = []
            while u is not None:
                cycle.append(u)
                u = parent[u]
            cycle.reverse()
            return cycle
        if dist[u] + 2 >= limit:
            continue
        for w in D.out[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return None


def shortest_cycle(D: Digraph, below: float = INFINITE, at_least: int = 2) -> list[int] | None:
    """A globally shortest directed cycle of length < ``below``, or None.

    Ties are broken by the smallest start vertex; the cycle is rotated so its
    smallest vertex comes first. ``at_least`` is a known lower bound on the
    digirth that lets the scan stop early without changing the result.
    """
    best = None
    limit = below
    for v in range(D.n):
        cyc = _shortest_cycle_through(D, v, limit)
        if cyc is not None:
            best = cyc
            limit = len(cyc)
            if limit <= at_least:
                break
    return None if best is None else _rotate_min_first(best)


def digirth(D: Digraph) -> int | float:
    """Length of a shortest directed cycle; ``INFINITE`` when ``D`` is acyclic."""
    cyc = shortest_cycle(D)
    return INFINITE if cyc is None else len(cyc)


def closes_cycle(D: Digraph, members: int, v: int) -> bool:
    """True iff adding ``v`` to the acyclic vertex bitmask ``members`` creates a directed cycle."""
    targets = D.in_mask[v] & members
    if not targets:
        return False
    frontier = D.out_mask[v] & members
    seen = frontier
    out_mask = D.out_mask
    while frontier:
        if frontier & targets:
            return True
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= out_mask[low.bit_length() - 1]
            frontier ^= low
        nxt &= members & ~seen
        seen |= nxt
        frontier = nxt
    return False


@dataclass
class LinearForestDecomposition:
    paths: list[list[int]] = field(default_factory=list)
    directed_cycles: list[list[int]] = field(default_factory=list)
    non_directed_cycles: list[list[int]] = field(default_factory=list)

    def components(self) -> list[list[int]]:
        return self.paths + self.directed_cycles + self.non_directed_cycles


def linear_forest_decompose(D: Digraph) -> LinearForestDecomposition:
    """Split a digraph of underlying max degree <= 2 into oriented paths and cycles.

    Directed cycles are reported head-to-tail starting at their smallest vertex.
    A digon counts as a directed cycle of length 2.
    """
    # underlying multigraph: one edge per arc, so a digon is a double edge
    edges = D.sorted_arcs()
    incident = [[] for _ in range(D.n)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    for v in range(D.n):
        if len(incident[v]) > 2:
            raise DegreeTooHigh(v, len(incident[v]))

    def other(eid, x):
        u, v = edges[eid]
        return v if x == u else u

    def walk(start, first_edge):
        seq = [start]
        prev_edge, cur = first_edge, other(first_edge, start)
        while cur != start:
            seq.append(cur)
            nxt = [e for e in incident[cur] if e != prev_edge]
            if not nxt:
                break
            prev_edge = nxt[0]
            cur = other(prev_edge, cur)
        return seq

    result = LinearForestDecomposition()
    visited = [False] * D.n
    # paths first: start from endpoints (degree <= 1) in index order
    for v in range(D.n):
        if visited[v] or len(incident[v]) > 1:
            continue
        seq = [v] if not incident[v] else walk(v, incident[v][0])
        for x in seq:
            visited[x] = True
        result.paths.append(seq)
    # whatever is left lies on 2-regular components, i.e. cycles
    for v in range(D.n):
        if visited[v]:
            continue
        seq = walk(v, incident[v][0])
        for x in seq:
            visited[x] = True
        size = len(seq)
        forward = all(D.has_arc(seq[i], seq[(i + 1) % size]) for i in range(size))
        backward = all(D.has_arc(seq[(i + 1) % size], seq[i]) for i in range(size))
        if forward:
            result.directed_cycles.append(_rotate_min_first(seq))
        elif backward:
            result.directed_cycles.append(_rotate_min_first(seq[::-1]))
        else:
            result.non_directed_cycles.append(seq)
    return result
