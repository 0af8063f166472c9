"""Degree-splitting partitions by local search.

Every vertex ends in a block where it keeps at most ``deg(v) // k`` of its
incidences. The search moves one violating vertex at a time to the block where
it has the fewest neighbours; each move strictly lowers the number of
monochromatic arcs, so there are at most ``m`` moves.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .digraph import Digraph
from .errors import InvalidK


@dataclass(frozen=True)
class Partition:
    k: int
    assignment: tuple[int, ...]
    moves: int = 0

    @property
    def blocks(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for v, b in enumerate(self.assignment):
            out[b].append(v)
        return out


def _incidences(D: Digraph) -> list[list[int]]:
    # one entry per arc end, so a digon partner shows up twice
    return [list(D.out[v]) + list(D.inn[v]) for v in range(D.n)]


def intra_degrees(D: Digraph, assignment: Sequence[int]) -> list[int]:
    return [
        sum(1 for w in nbrs if assignment[w] == assignment[v])
        for v, nbrs in enumerate(_incidences(D))
    ]


def monochromatic_arcs(D: Digraph, assignment: Sequence[int]) -> int:
    return sum(1 for u, v in D.arcs if assignment[u] == assignment[v])


def degree_split(D: Digraph, k: int, seed: int | None = None) -> Partition:
    """Partition ``V(D)`` into ``k`` blocks with intra-block degree <= ``deg(v) // k``.

    Round-robin start ``v % k`` by default; a seed switches to a random start.
    """
    if k < 1:
        raise InvalidK(k)
    n = D.n
    if seed is None:
        block = [v % k for v in range(n)]
    else:
        rng = random.Random(seed)
        block = [rng.randrange(k) for _ in range(n)]
    if k == 1:
        return Partition(1, tuple(block))

    nbrs = _incidences(D)
    cap = [len(a) // k for a in nbrs]
    intra = [sum(1 for w in nbrs[v] if block[w] == block[v]) for v in range(n)]

    queue = deque(v for v in range(n) if intra[v] > cap[v])
    queued = [False] * n
    for v in queue:
        queued[v] = True
    moves = 0
    while queue:
        v = queue.popleft()
        queued[v] = False
        if intra[v] <= cap[v]:
            continue
        counts = [0] * k
        for w in nbrs[v]:
            counts[block[w]] += 1
        old = block[v]
        new = min(range(k), key=counts.__getitem__)
        # pigeonhole: counts sum to deg(v), so the minimum is <= deg(v) // k < counts[old]
        block[v] = new
        intra[v] = counts[new]
        moves += 1
        for w in nbrs[v]:
            if block[w] == old:
                intra[w] -= 1
            elif block[w] == new:
                intra[w] += 1
                if intra[w] > cap[w] and not queued[w]:
                    queued[w] = True
                    queue.append(w)
    return Partition(k, tuple(block), moves)
