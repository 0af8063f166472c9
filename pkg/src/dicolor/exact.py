"""Ground truth: coloring verification and exact dichromatic numbers.

Two independent exact strategies live here. :func:`exists_acyclic_partition`
assigns vertices one at a time with incremental cycle pruning;
:func:`dichromatic_number_by_partitions` enumerates set partitions and checks
each block from scratch. They share nothing beyond the :class:`Digraph`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .colorings import Coloring, compact
from .cycles import closes_cycle, find_cycle
from .digraph import Digraph
from .errors import IncompleteColoring, TooLarge

DEFAULT_N_CAP = 14


@dataclass
class VerificationReport:
    valid: bool
    violations: list[tuple[int, list[int]]] = field(default_factory=list)


def _assignment(col) -> Sequence:
    return col.assignment if isinstance(col, Coloring) else col


def verify_coloring(D: Digraph, col: Coloring | Sequence[int]) -> VerificationReport:
    """Check that every color class induces an acyclic subdigraph.

    Each violation is ``(color, cycle)`` with the cycle in original vertex labels.
    """
    assignment = _assignment(col)
    for v in range(D.n):
        if v >= len(assignment) or assignment[v] is None:
            raise IncompleteColoring(v)
    classes: dict[int, list[int]] = {}
    for v in range(D.n):
        classes.setdefault(assignment[v], []).append(v)
    violations = []
    for c in sorted(classes):
        cyc = find_cycle(D, classes[c])
        if cyc is not None:
            violations.append((c, cyc))
    return VerificationReport(not violations, violations)


def _search_order(D: Digraph) -> list[int]:
    return sorted(range(D.n), key=lambda v: (-D.degree(v), v))


def exists_acyclic_partition(D: Digraph, c: int) -> Coloring | None:
    """An acyclic coloring with at most ``c`` colors, or None if none exists."""
    if c < 1:
        raise ValueError(f"need at least one color, got {c}")
    if D.n == 0:
        return Coloring(())
    order = _search_order(D)
    classes = [0] * c
    color = [-1] * D.n

    def place(i: int, opened: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        bit = 1 << v
        # symmetry breaking: only the first unopened class may be opened
        for j in range(min(opened + 1, c)):
            if closes_cycle(D, classes[j], v):
                continue
            classes[j] |= bit
            color[v] = j
            if place(i + 1, max(opened, j + 1)):
                return True
            classes[j] ^= bit
        color[v] = -1
        return False

    if not place(0, 0):
        return None
    return compact(color)


def dichromatic_number(D: Digraph, n_cap: int = DEFAULT_N_CAP) -> int:
    if D.n > n_cap:
        raise TooLarge(D.n, n_cap)
    if D.n == 0:
        return 0
    c = 1
    while exists_acyclic_partition(D, c) is None:
        c += 1
    return c


def _restricted_growth_strings(n: int):
    """Every set partition of ``range(n)`` as a list of block labels."""
    labels = [0] * n

    def rec(i, top):
        if i == n:
            yield list(labels)
            return
        for b in range(top + 2):
            labels[i] = b
            yield from rec(i + 1, max(top, b))

    if n == 0:
        yield []
        return
    yield from rec(1, 0)


def _kahn_acyclic(D: Digraph, members: list[int]) -> bool:
    inside = set(members)
    indeg = {v: sum(1 for u in D.inn[v] if u in inside) for v in members}
    ready = [v for v in members if indeg[v] == 0]
    removed = 0
    while ready:
        u = ready.pop()
        removed += 1
        for w in D.out[u]:
            if w in inside:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return removed == len(members)


def dichromatic_number_by_partitions(D: Digraph, n_cap: int = 10) -> int:
    """Exact dichromatic number by exhausting all set partitions (Bell-number cost)."""
    if D.n > n_cap:
        raise TooLarge(D.n, n_cap)
    best = D.n
    for labels in _restricted_growth_strings(D.n):
        k = max(labels, default=-1) + 1
        if k >= best:
            continue
        blocks = [[] for _ in range(k)]
        for v, b in enumerate(labels):
            blocks[b].append(v)
        if all(_kahn_acyclic(D, blk) for blk in blocks):
            best = k
    return best
