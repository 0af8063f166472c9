"""Acyclic coloring procedures for digraphs of large digirth.

* :func:`color_highgirth` -- at most ``delta // 3 + 2`` colors when the digirth
  exceeds the maximum out-degree.
* :func:`peel_color` -- at most ``g + 1`` colors when ``delta <= 3g - 1`` and the
  digirth is at least ``2g - 1``.
* :func:`color_theorem` -- at most ``(g + 1) * (delta // (3g) + 1)`` colors for
  digirth at least ``2g - 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .colorings import Coloring, compact
from .cycles import INFINITE, closes_cycle, digirth, linear_forest_decompose
from .digraph import Digraph, induced, max_degree, max_out_degree
from .errors import DigirthTooSmall, PreconditionViolated
from .exact import verify_coloring
from .sdr import acyclic_sdr
from .split import degree_split


@dataclass(frozen=True)
class BoundReport:
    g: int
    delta: int
    ell: int
    integer_bound: int
    real_bound: Fraction
    coefficient: Fraction


def bound_report(g: int, delta: int) -> BoundReport:
    ell = delta // (3 * g) + 1
    coefficient = Fraction(1, 3) + Fraction(1, 3 * g)
    return BoundReport(
        g=g,
        delta=delta,
        ell=ell,
        integer_bound=(g + 1) * ell,
        real_bound=coefficient * delta + (g + 1),
        coefficient=coefficient,
    )


def _checked(D: Digraph, col: Coloring) -> Coloring:
    assert verify_coloring(D, col).valid, "produced a coloring with a cyclic class"
    return col


def color_highgirth(D: Digraph, seed: int | None = None) -> Coloring:
    """Acyclic coloring with at most ``delta // 3 + 2`` colors.

    Requires ``digirth(D) > maxout(D)``.
    """
    n = D.n
    if n == 0:
        return Coloring(())
    delta = max_degree(D)
    if delta == 0:
        return Coloring((0,) * n)
    girth = digirth(D)
    if girth == INFINITE:
        return Coloring((0,) * n)
    if not girth > max_out_degree(D):
        raise PreconditionViolated(
            f"digirth {girth} does not exceed max out-degree {max_out_degree(D)}"
        )

    k = delta // 3 + 1
    part = degree_split(D, k, seed)
    # every block now has underlying max degree <= 2
    cycles = []
    for blk in part.blocks:
        if not blk:
            continue
        sub, labels = induced(D, blk)
        for cyc in linear_forest_decompose(sub).directed_cycles:
            cycles.append([labels[x] for x in cyc])

    hitting = set()
    if cycles:
        sub, labels = induced(D, [v for cyc in cycles for v in cyc])
        index = {x: i for i, x in enumerate(labels)}
        reps = acyclic_sdr(
            sub, [[index[x] for x in cyc] for cyc in cycles], int(girth), seed=seed or 0
        )
        hitting = {labels[i] for i in reps.chosen}

    assignment = [k if v in hitting else part.assignment[v] for v in range(n)]
    return _checked(D, compact(assignment))


def peel(H: Digraph, g: int) -> tuple[list[int], list[int]]:
    """Repeatedly strip vertices of in-degree <= g.

    Returns ``(removal_order, core)``; every core vertex keeps in-degree >= g + 1
    inside the core.
    """
    indeg = [len(a) for a in H.inn]
    removed = [False] * H.n
    order = []
    queue = deque(v for v in range(H.n) if indeg[v] <= g)
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in H.out[v]:
            if not removed[w]:
                indeg[w] -= 1
                if indeg[w] == g:
                    queue.append(w)
    core = [v for v in range(H.n) if not removed[v]]
    return order, core


def _peel_color(H: Digraph, g: int, seed: int | None = None) -> Coloring:
    order, core = peel(H, g)
    palette = g + 1
    color = [-1] * H.n
    classes = [0] * palette
    if core:
        sub, labels = induced(H, core)
        core_col = color_highgirth(sub, seed)
        if core_col.num_colors > palette:
            raise RuntimeError("core coloring exceeded g + 1 colors")
        for i, c in enumerate(core_col.assignment):
            color[labels[i]] = c
            classes[c] |= 1 << labels[i]
    for v in reversed(order):
        # v has at most g in-neighbours among the vertices present, so some class has none
        j = next(j for j in range(palette) if not H.in_mask[v] & classes[j])
        color[v] = j
        classes[j] |= 1 << v
    return compact(color)


def peel_color(H: Digraph, g: int, seed: int | None = None) -> Coloring:
    """Acyclic coloring with at most ``g + 1`` colors.

    Requires ``delta(H) <= 3g - 1`` and ``digirth(H) >= 2g - 1``.
    """
    if g < 2:
        raise PreconditionViolated(f"g must be at least 2, got {g}")
    if max_degree(H) > 3 * g - 1:
        raise PreconditionViolated(f"max degree {max_degree(H)} exceeds 3g-1 = {3 * g - 1}")
    girth = digirth(H)
    if girth < 2 * g - 1:
        raise PreconditionViolated(f"digirth {girth} is below 2g-1 = {2 * g - 1}")
    if girth == INFINITE:
        return Coloring((0,) * H.n)
    return _checked(H, _peel_color(H, g, seed))


def color_theorem(D: Digraph, g: int, seed: int | None = None) -> tuple[Coloring, BoundReport]:
    """Acyclic coloring with at most ``(g + 1) * (delta // (3g) + 1)`` colors."""
    if g < 2:
        raise PreconditionViolated(f"g must be at least 2, got {g}")
    girth = digirth(D)
    if girth < 2 * g - 1:
        raise DigirthTooSmall(girth, 2 * g - 1)
    delta = max_degree(D)
    report = bound_report(g, delta)
    if D.n == 0:
        return Coloring(()), report
    if girth == INFINITE:
        return Coloring((0,) * D.n), report

    part = degree_split(D, report.ell, seed)
    assignment = [-1] * D.n
    for i, blk in enumerate(part.blocks):
        if not blk:
            continue
        sub, labels = induced(D, blk)
        # delta(sub) <= delta // ell <= 3g - 1 and digirth only grows in subgraphs
        col = _peel_color(sub, g, seed)
        for x, c in enumerate(col.assignment):
            assignment[labels[x]] = i * (g + 1) + c
    return _checked(D, compact(assignment)), report


def auto_g(D: Digraph) -> int:
    """The feasible g minimising the integer bound (ties go to the larger g)."""
    girth = digirth(D)
    if girth < 3:
        raise DigirthTooSmall(girth, 3)
    delta = max_degree(D)
    cap = max(2, -(-delta // 3) + 1)
    top = cap if girth == INFINITE else min(cap, (int(girth) + 1) // 2)
    return min(range(2, top + 1), key=lambda g: (bound_report(g, delta).integer_bound, -g))


def greedy_baseline(D: Digraph) -> Coloring:
    """Each vertex, in index order, takes the smallest color whose class stays acyclic."""
    classes: list[int] = []
    color = []
    for v in range(D.n):
        for j, members in enumerate(classes):
            if not closes_cycle(D, members, v):
                classes[j] |= 1 << v
                color.append(j)
                break
        else:
            classes.append(1 << v)
            color.append(len(classes) - 1)
    return _checked(D, Coloring(tuple(color)))
