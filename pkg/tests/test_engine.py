from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from dicolor import (
    INFINITE,
    auto_g,
    bound_report,
    build,
    color_highgirth,
    color_theorem,
    degree_split,
    dichromatic_number,
    digirth,
    gen_circulant,
    gen_directed_cycle,
    gen_random_digirth,
    greedy_baseline,
    induced,
    peel_color,
    verify_coloring,
)
from dicolor.digraph import degree_stats, max_degree, max_out_degree
from dicolor.engine import peel
from dicolor.errors import DigirthTooSmall, PreconditionViolated

from .strategies import digraphs

TRIANGLE = build(3, [(0, 1), (1, 2), (2, 0)])
DIGON = build(2, [(0, 1), (1, 0)])


def dag(n):
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u + v) % 3])


# -- bound arithmetic -------------------------------------------------------

def test_bound_report_g2_delta12():
    r = bound_report(2, 12)
    assert (r.ell, r.integer_bound) == (3, 9)
    assert r.real_bound == 9


def test_coefficients():
    assert bound_report(5, 0).coefficient == Fraction(2, 5)
    assert bound_report(6, 0).coefficient == Fraction(7, 18) < Fraction(2, 5)


@given(st.integers(2, 60), st.integers(0, 500))
def test_integer_bound_below_real_bound(g, delta):
    r = bound_report(g, delta)
    assert r.integer_bound <= r.real_bound
    assert bound_report(g + 1, delta).coefficient < r.coefficient
    assert r.coefficient > Fraction(1, 3)


# -- high-girth colorer ------------------------------------------------------

def test_highgirth_acyclic():
    assert color_highgirth(dag(7)).num_colors == 1


def test_highgirth_five_cycle():
    col = color_highgirth(gen_directed_cycle(5))
    assert col.num_colors == 2 == dichromatic_number(gen_directed_cycle(5))
    assert verify_coloring(gen_directed_cycle(5), col).valid


def test_highgirth_circulant_13():
    D = gen_circulant(13, [1, 2, 3])
    assert digirth(D) == 5 > max_out_degree(D) == 3
    col = color_highgirth(D)
    assert verify_coloring(D, col).valid
    assert col.num_colors <= 4


def test_highgirth_digon():
    col = color_highgirth(DIGON)
    assert col.num_colors == 2


def test_highgirth_precondition():
    D = gen_circulant(7, [1, 2, 3])  # digirth 3, max out-degree 3
    assert digirth(D) == 3 == max_out_degree(D)
    with pytest.raises(PreconditionViolated):
        color_highgirth(D)


def _highgirth_ok(D):
    return digirth(D) > max_out_degree(D)


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=10))
def test_highgirth_bound_property(D):
    assume(_highgirth_ok(D))
    col = color_highgirth(D)
    assert verify_coloring(D, col).valid
    assert col.num_colors <= max_degree(D) // 3 + 2
    assert dichromatic_number(D) <= col.num_colors


# -- peeling colorer ----------------------------------------------------------

def test_peel_five_cycle_g2():
    D = gen_directed_cycle(5)
    col = peel_color(D, 2)
    assert verify_coloring(D, col).valid
    assert 2 == dichromatic_number(D) <= col.num_colors <= 3


def test_peel_empty():
    assert peel_color(build(5, []), 3).assignment == (0,) * 5


def test_peel_circulant_11():
    D = gen_circulant(11, [1, 2])
    assert max_degree(D) == 4 and digirth(D) == 6
    col = peel_color(D, 2)
    assert verify_coloring(D, col).valid and col.num_colors <= 3


def test_peel_preconditions():
    with pytest.raises(PreconditionViolated):
        peel_color(gen_circulant(13, [1, 2, 3]), 2)  # degree 6 > 5
    with pytest.raises(PreconditionViolated):
        peel_color(TRIANGLE, 3)  # digirth 3 < 5


def test_peel_core_is_nontrivial_on_dense_circulant():
    # Z_n with steps {1, 2, 3} has in-degree 3 everywhere: nothing peels at g = 2
    D = gen_circulant(13, [1, 2, 3])
    order, core = peel(D, 2)
    assert order == [] and core == list(range(13))


def test_peel_full_core_goes_through_highgirth():
    # in/out-degree 4, delta 8 = 3g - 1 and digirth 5 = 2g - 1 at g = 3
    D = gen_circulant(17, [1, 2, 3, 4])
    assert max_degree(D) == 8 and digirth(D) == 5
    order, core = peel(D, 3)
    assert order == [] and len(core) == 17
    col = peel_color(D, 3)
    assert verify_coloring(D, col).valid and col.num_colors <= 4


@given(digraphs(max_n=12))
def test_g2_core_always_empty(D):
    # delta <= 5 with min in-degree >= 3 would force max out-degree <= 2 < average in-degree
    assume(max_degree(D) <= 5)
    assert peel(D, 2)[1] == []


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=10, digons=False), st.integers(2, 4))
def test_peel_property(D, g):
    assume(max_degree(D) <= 3 * g - 1 and digirth(D) >= 2 * g - 1)
    col = peel_color(D, g)
    assert verify_coloring(D, col).valid
    assert col.num_colors <= g + 1
    order, core = peel(D, g)
    assert sorted(order + core) == list(range(D.n))
    if core:
        sub, _ = induced(D, core)
        s = degree_stats(sub)
        assert s.min_in >= g + 1
        assert s.delta_out <= 2 * g - 2


# -- theorem pipeline ---------------------------------------------------------

def test_theorem_acyclic():
    col, report = color_theorem(dag(8), 4)
    assert col.num_colors == 1 <= report.integer_bound


def test_theorem_seven_cycle():
    D = gen_directed_cycle(7)
    col, report = color_theorem(D, 3)
    assert (report.delta, report.ell, report.integer_bound) == (2, 1, 4)
    assert verify_coloring(D, col).valid
    assert dichromatic_number(D) == 2 <= col.num_colors <= 4


def test_theorem_digirth_too_small():
    with pytest.raises(DigirthTooSmall) as info:
        color_theorem(DIGON, 2)
    assert (info.value.found, info.value.required) == (2, 3)
    with pytest.raises(DigirthTooSmall):
        color_theorem(gen_directed_cycle(10), 6)
    color_theorem(gen_directed_cycle(11), 6)


def test_theorem_blocks_have_small_degree():
    D = gen_random_digirth(60, 0.2, 3, seed=3)
    report = bound_report(2, max_degree(D))
    for blk in degree_split(D, report.ell).blocks:
        sub, _ = induced(D, blk)
        assert max_degree(sub) <= 3 * 2 - 1


@settings(max_examples=150, deadline=None)
@given(digraphs(max_n=10, digons=False), st.integers(2, 4), st.one_of(st.none(), st.integers(0, 99)))
def test_theorem_property(D, g, seed):
    assume(digirth(D) >= 2 * g - 1)
    col, report = color_theorem(D, g, seed)
    assert verify_coloring(D, col).valid
    assert col.num_colors <= report.integer_bound <= report.real_bound
    assert dichromatic_number(D) <= col.num_colors


def test_theorem_deterministic():
    D = gen_random_digirth(40, 0.1, 5, seed=11)
    assert color_theorem(D, 3) == color_theorem(D, 3)
    assert color_theorem(D, 3, seed=4) == color_theorem(D, 3, seed=4)


# -- auto_g and greedy -------------------------------------------------------

def test_auto_g_enumerated_case():
    # digirth 5 and delta 30: g=2 gives 3*6=18, g=3 gives 4*4=16
    assert bound_report(2, 30).integer_bound == 18
    assert bound_report(3, 30).integer_bound == 16


def test_auto_g_digirth_five_delta_thirty():
    # hub 0 with 15 disjoint 5-cycles 0 -> a -> b -> c -> d -> 0 through it
    arcs = []
    n = 1
    for _ in range(15):
        a, b, c, d = n, n + 1, n + 2, n + 3
        arcs += [(0, a), (a, b), (b, c), (c, d), (d, 0)]
        n += 4
    D = build(n, arcs)
    assert max_degree(D) == 30 and digirth(D) == 5
    assert auto_g(D) == 3


def test_auto_g_small_digirth():
    assert auto_g(TRIANGLE) == 2
    with pytest.raises(DigirthTooSmall):
        auto_g(DIGON)


def test_auto_g_acyclic_uses_cap():
    # delta 6: cap = max(2, 2 + 1) = 3; bounds g=2 -> 6, g=3 -> 4
    D = build(7, [(0, v) for v in range(1, 7)])
    assert max_degree(D) == 6 and digirth(D) == INFINITE
    assert auto_g(D) == 3
    assert auto_g(build(3, [])) == 2


@given(digraphs(max_n=9, digons=False))
def test_auto_g_minimises(D):
    girth = digirth(D)
    assume(girth >= 3)
    g = auto_g(D)
    assert 2 * g - 1 <= girth
    delta = max_degree(D)
    best = bound_report(g, delta).integer_bound
    top = max(2, -(-delta // 3) + 1)
    if girth != INFINITE:
        top = min(top, (girth + 1) // 2)
    assert all(bound_report(h, delta).integer_bound >= best for h in range(2, top + 1))


def test_greedy_examples():
    assert greedy_baseline(dag(6)).num_colors == 1
    assert greedy_baseline(DIGON).num_colors == 2
    assert greedy_baseline(TRIANGLE).assignment == (0, 0, 1)


@given(digraphs(max_n=9))
def test_greedy_valid(D):
    col = greedy_baseline(D)
    assert verify_coloring(D, col).valid
    assert dichromatic_number(D) <= col.num_colors
