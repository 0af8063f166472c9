"""Acyclic systems of representatives.

Given a partition of ``V(D)`` into large blocks, pick one vertex per block so
the chosen set induces an acyclic subdigraph. Existence is guaranteed when
``digirth(D) >= gamma`` and every block has at least
``gamma / (gamma - 1) * maxout(D)`` vertices, but no efficient construction is
known. We run a cheap repair loop first and fall back to exhaustive
backtracking, which always succeeds under the size condition.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .cycles import closes_cycle, digirth, find_cycle
from .digraph import Digraph, max_out_degree
from .errors import NotFound, PreconditionViolated


@dataclass(frozen=True)
class RepresentativeSystem:
    chosen: tuple[int, ...]
    phase: int

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.chosen)


def _check_structure(D: Digraph, blocks: Sequence[Sequence[int]], gamma: int) -> None:
    if gamma < 2:
        raise PreconditionViolated(f"gamma must be at least 2, got {gamma}")
    flat = [v for blk in blocks for v in blk]
    if sorted(flat) != list(range(D.n)):
        raise PreconditionViolated("blocks are not an exact partition of the vertex set")
    if any(len(blk) == 0 for blk in blocks):
        raise PreconditionViolated("empty block")


def check_preconditions(D: Digraph, blocks: Sequence[Sequence[int]], gamma: int) -> list[str]:
    """Violated existence conditions (digirth and block size); empty if all hold."""
    _check_structure(D, blocks, gamma)
    problems = []
    g = digirth(D)
    if g < gamma:
        problems.append(f"digirth {g} < gamma {gamma}")
    dout = max_out_degree(D)
    for i, blk in enumerate(blocks):
        # |V_i| >= gamma/(gamma-1) * maxout, compared exactly
        if len(blk) * (gamma - 1) < gamma * dout:
            need = -(-gamma * dout // (gamma - 1))
            problems.append(f"block {i} has {len(blk)} vertices, needs {need}")
    return problems


def _chosen_mask(chosen):
    mask = 0
    for v in chosen:
        mask |= 1 << v
    return mask


def _repair(D, blocks, block_of, chosen, max_iter, rng):
    for _ in range(max_iter):
        cyc = find_cycle(D, chosen)
        if cyc is None:
            return True
        v = cyc[rng.randrange(len(cyc))]
        i = block_of[v]
        rest = _chosen_mask(chosen) & ~(1 << v)

        def arcs_into(u):
            return bin((D.out_mask[u] | D.in_mask[u]) & rest).count("1")

        candidates = [u for u in blocks[i] if u != v]
        if not candidates:
            return False
        chosen[i] = min(candidates, key=lambda u: (arcs_into(u), u))
    return find_cycle(D, chosen) is None


def _backtrack(D, blocks):
    order = sorted(range(len(blocks)), key=lambda i: (len(blocks[i]), i))
    chosen = [None] * len(blocks)

    def rec(pos, mask):
        if pos == len(order):
            return True
        i = order[pos]
        for u in blocks[i]:
            if closes_cycle(D, mask, u):
                continue
            chosen[i] = u
            if rec(pos + 1, mask | (1 << u)):
                return True
        return False

    return chosen if rec(0, 0) else None


def acyclic_sdr(
    D: Digraph,
    blocks: Sequence[Sequence[int]],
    gamma: int,
    *,
    best_effort: bool = False,
    seed: int = 0,
    max_iter: int | None = None,
) -> RepresentativeSystem:
    """One representative per block such that the representatives induce an acyclic digraph.

    Raises PreconditionViolated unless ``best_effort`` is set; in best-effort
    mode a failed search raises NotFound.
    """
    blocks = [sorted(blk) for blk in blocks]
    problems = check_preconditions(D, blocks, gamma)
    if problems and not best_effort:
        raise PreconditionViolated("; ".join(problems))

    block_of = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            block_of[v] = i
    chosen = [blk[0] for blk in blocks]
    if find_cycle(D) is None:
        return RepresentativeSystem(tuple(chosen), 1)

    rng = random.Random(seed)
    if max_iter is None:
        max_iter = 50 * len(blocks)
    if _repair(D, blocks, block_of, chosen, max_iter, rng):
        result = RepresentativeSystem(tuple(chosen), 1)
    else:
        found = _backtrack(D, blocks)
        if found is None:
            raise NotFound("no acyclic system of representatives exists")
        result = RepresentativeSystem(tuple(found), 2)

    if find_cycle(D, result.chosen) is not None or any(
        block_of[v] != i for i, v in enumerate(result.chosen)
    ):
        raise RuntimeError("representative search returned an unsound selection")
    return result
