from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Coloring:
    """Vertex ``v`` gets color ``assignment[v]``; colors are ``0..num_colors-1``."""

    assignment: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]


def compact(assignment: Sequence[int]) -> Coloring:
    """Renumber the nonempty classes consecutively, keeping their relative order."""
    used = sorted(set(assignment))
    relabel = {c: i for i, c in enumerate(used)}
    return Coloring(tuple(relabel[c] for c in assignment))


def from_classes(n: int, classes: Iterable[Iterable[int]]) -> Coloring:
    assignment = [-1] * n
    for c, members in enumerate(classes):
        for v in members:
            assignment[v] = c
    if -1 in assignment:
        raise ValueError(f"vertex {assignment.index(-1)} is in no class")
    return compact(assignment)
