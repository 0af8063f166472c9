"""Seeded instance generators with controlled digirth.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937) seeded
with a plain integer. Only ``random()`` and ``randrange()`` are used, both of
which have produced stable streams for a given integer seed since Python 3.2.
"""
from __future__ import annotations

import random
from typing import Iterable

from .cycles import shortest_cycle
from .digraph import Digraph
from .errors import BadN, BadStep


def gen_directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise BadN(f"a directed cycle needs at least 2 vertices, got {n}")
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)))


def gen_circulant(n: int, steps: Iterable[int]) -> Digraph:
    """Arcs ``i -> i + s (mod n)`` for every vertex ``i`` and step ``s``."""
    steps = sorted(set(steps))
    if n < 1:
        raise BadN(f"need at least one vertex, got {n}")
    if not steps:
        raise BadStep("empty step set")
    for s in steps:
        if not 1 <= s <= n - 1:
            raise BadStep(f"step {s} not in [1, {n - 1}]")
    return Digraph(n, ((i, (i + s) % n) for i in range(n) for s in steps))


def gen_random_digirth(n: int, p: float, gamma: int, seed: int) -> Digraph:
    """Random digraph with digirth >= gamma.

    Each ordered pair is kept with probability ``p``; then, while a directed
    cycle shorter than ``gamma`` exists, a uniformly chosen arc of a shortest
    one is deleted.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    arcs = {
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    }
    D = Digraph(n, arcs)
    shortest = 2
    while True:
        cyc = shortest_cycle(D, below=gamma, at_least=shortest)
        if cyc is None:
            return D
        shortest = len(cyc)
        i = rng.randrange(len(cyc))
        arcs.discard((cyc[i], cyc[(i + 1) % len(cyc)]))
        D = Digraph(n, arcs)
