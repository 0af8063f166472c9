"""Acyclic colorings of digraphs with large digirth."""
from .colorings import Coloring, compact
from .cycles import INFINITE, digirth, find_cycle, is_acyclic, linear_forest_decompose
from .digraph import DegreeStats, Digraph, build, degree_stats, induced
from .engine import (
    BoundReport,
    auto_g,
    bound_report,
    color_highgirth,
    color_theorem,
    greedy_baseline,
    peel_color,
)
from .exact import dichromatic_number, exists_acyclic_partition, verify_coloring
from .generators import gen_circulant, gen_directed_cycle, gen_random_digirth
from .sdr import acyclic_sdr
from .split import Partition, degree_split

__all__ = [
    "BoundReport", "Coloring", "DegreeStats", "Digraph", "INFINITE", "Partition",
    "acyclic_sdr", "auto_g", "bound_report", "build", "color_highgirth",
    "color_theorem", "compact", "degree_split", "degree_stats", "dichromatic_number",
    "digirth", "exists_acyclic_partition", "find_cycle", "gen_circulant",
    "gen_directed_cycle", "gen_random_digirth", "greedy_baseline", "induced",
    "is_acyclic", "linear_forest_decompose", "peel_color", "verify_coloring",
]
