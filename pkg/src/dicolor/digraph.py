"""Immutable digraph on dense vertices ``0..n-1`` plus edge-list I/O.

Adjacency is stored both as sorted tuples (for deterministic iteration) and as
integer bitmasks (for the set-heavy searches in :mod:`dicolor.exact` and
:mod:`dicolor.sdr`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateArc, EmptyDigraph, LoopArc, ParseError, VertexOutOfRange


class Digraph:
    """Loop-free digraph without parallel arcs. Digons are allowed."""

    __slots__ = ("n", "arcs", "out", "inn", "out_mask", "in_mask")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in arcs:
            u, v = int(u), int(v)
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(x, n)
            if u == v:
                raise LoopArc(u)
            if (u, v) in seen:
                raise DuplicateArc(u, v)
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs = frozenset(seen)
        self.out = tuple(tuple(sorted(a)) for a in out)
        self.inn = tuple(tuple(sorted(a)) for a in inn)
        self.out_mask = tuple(sum(1 << w for w in a) for a in self.out)
        self.in_mask = tuple(sum(1 << w for w in a) for a in self.inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.out[v])

    def in_degree(self, v: int) -> int:
        return len(self.inn[v])

    def degree(self, v: int) -> int:
        # a digon contributes one in- and one out-incidence
        return len(self.out[v]) + len(self.inn[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def has_digon(self) -> bool:
        return any((v, u) in self.arcs for u, v in self.arcs)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self.arcs))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, arcs)


@dataclass(frozen=True)
class DegreeStats:
    delta: int
    delta_out: int
    delta_in: int
    min_out: int
    min_in: int
    delta_tilde: float

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "delta_out": self.delta_out,
            "delta_in": self.delta_in,
            "min_out": self.min_out,
            "min_in": self.min_in,
            "delta_tilde": self.delta_tilde,
        }


def degree_stats(D: Digraph) -> DegreeStats:
    if D.n == 0:
        raise EmptyDigraph()
    outs = [len(a) for a in D.out]
    ins = [len(a) for a in D.inn]
    return DegreeStats(
        delta=max(o + i for o, i in zip(outs, ins)),
        delta_out=max(outs),
        delta_in=max(ins),
        min_out=min(outs),
        min_in=min(ins),
        delta_tilde=max(math.sqrt(o * i) for o, i in zip(outs, ins)),
    )


def max_degree(D: Digraph) -> int:
    """Underlying maximum degree, 0 for the empty digraph."""
    return max((D.degree(v) for v in D.vertices()), default=0)


def max_out_degree(D: Digraph) -> int:
    return max((len(a) for a in D.out), default=0)


def induced(D: Digraph, X: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Return ``(D[X], labels)`` where ``labels[i]`` is the original vertex of new vertex ``i``.

    New indices follow the sorted order of ``X``.
    """
    labels = sorted(set(X))
    for x in labels:
        if not 0 <= x < D.n:
            raise VertexOutOfRange(x, D.n)
    index = {x: i for i, x in enumerate(labels)}
    arcs = [
        (index[u], index[v])
        for u in labels
        for v in D.out[u]
        if v in index
    ]
    return Digraph(len(labels), arcs), labels


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then m lines "u v"; '#' starts a comment line


def parse_edge_list(text: str) -> Digraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    (n, m), arcs = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise ParseError(f"negative header values n={n} m={m}")
    if len(arcs) != m:
        raise ParseError(f"header announces {m} arcs but {len(arcs)} were given")
    try:
        return Digraph(n, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"]
    lines.extend(f"{u} {v}" for u, v in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(D: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(D))


def from_mask_members(mask: int) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Sequence[int] | Iterable[int]) -> int:
    return sum(1 << v for v in set(vertices))
