import math

import pytest
from hypothesis import given

from dicolor import build, degree_stats, gen_circulant, induced
from dicolor.digraph import format_edge_list, parse_edge_list
from dicolor.errors import DuplicateArc, EmptyDigraph, LoopArc, ParseError, VertexOutOfRange

from .strategies import digraphs

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_build_triangle():
    D = build(3, TRIANGLE)
    assert D.n == 3 and D.arcs == set(TRIANGLE)
    assert D.out[0] == (1,) and D.inn[0] == (2,)


def test_digon_is_valid():
    D = build(2, [(0, 1), (1, 0)])
    assert D.m == 2 and D.has_digon()


@pytest.mark.parametrize(
    "n, arcs, exc",
    [
        (2, [(0, 0)], LoopArc),
        (2, [(0, 1), (0, 1)], DuplicateArc),
        (2, [(0, 2)], VertexOutOfRange),
        (2, [(-1, 0)], VertexOutOfRange),
    ],
)
def test_build_rejects(n, arcs, exc):
    with pytest.raises(exc):
        build(n, arcs)


def test_loop_error_carries_vertex():
    with pytest.raises(LoopArc) as info:
        build(2, [(0, 0)])
    assert info.value.u == 0


def test_stats_triangle():
    s = degree_stats(build(3, TRIANGLE))
    assert (s.delta, s.delta_out, s.delta_in, s.min_out, s.min_in) == (2, 1, 1, 1, 1)
    assert s.delta_tilde == 1.0


def test_stats_digon():
    s = degree_stats(build(2, [(0, 1), (1, 0)]))
    assert s.delta == 2 and s.delta_tilde == 1.0


def test_stats_circulant():
    s = degree_stats(gen_circulant(7, [1, 2]))
    assert (s.delta, s.delta_out, s.delta_in, s.delta_tilde) == (4, 2, 2, 2.0)


def test_stats_empty_raises():
    with pytest.raises(EmptyDigraph):
        degree_stats(build(0, []))


def test_induced_examples():
    sub, labels = induced(build(3, TRIANGLE), {0, 1})
    assert sub.arcs == {(0, 1)} and labels == [0, 1]

    D = gen_circulant(7, [1, 2])
    same, labels = induced(D, range(7))
    assert same == D and labels == list(range(7))

    sub, _ = induced(D, {0, 1, 2, 3})
    assert sub.arcs == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}


def test_induced_relabels():
    sub, labels = induced(build(4, [(3, 1), (1, 0)]), [1, 3])
    assert labels == [1, 3]
    assert sub.arcs == {(1, 0)}


def test_induced_out_of_range():
    with pytest.raises(VertexOutOfRange):
        induced(build(2, []), [5])


@given(digraphs())
def test_round_trip(D):
    assert build(D.n, list(D.arcs)).arcs == D.arcs
    assert parse_edge_list(format_edge_list(D)) == D


@given(digraphs(min_n=1))
def test_delta_by_independent_count(D):
    counts = [0] * D.n
    for u, v in D.arcs:
        counts[u] += 1
        counts[v] += 1
    s = degree_stats(D)
    assert s.delta == max(counts)
    assert s.min_out <= s.delta_out <= s.delta
    assert s.min_in <= s.delta_in <= s.delta


@given(digraphs(min_n=1, digons=False))
def test_delta_tilde_at_most_half_delta_without_digons(D):
    s = degree_stats(D)
    assert s.delta_tilde <= s.delta / 2 + 1e-12


@given(digraphs())
def test_induced_counts(D):
    X = [v for v in range(D.n) if v % 2 == 0]
    sub, labels = induced(D, X)
    assert sub.n == len(X)
    assert sub.m == sum(1 for u, v in D.arcs if u in X and v in X)
    assert {(labels[u], labels[v]) for u, v in sub.arcs} <= D.arcs


def test_parse_comments_and_errors():
    D = parse_edge_list("# header comment\n3 2\n0 1\n# mid\n1 2\n")
    assert D.arcs == {(0, 1), (1, 2)}
    for bad in ["", "3 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 0\n", "2 1\n0 1 2\n"]:
        with pytest.raises(ParseError):
            parse_edge_list(bad)


def test_format_is_sorted():
    assert format_edge_list(build(3, [(2, 0), (0, 1)])) == "3 2\n0 1\n2 0\n"
    assert math.isclose(degree_stats(build(1, [])).delta_tilde, 0.0)
