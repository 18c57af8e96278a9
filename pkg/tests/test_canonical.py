import pytest

from edgebetti.canonical import canonical_generators, n_set, second_top_type3
from edgebetti.degrees import Multidegree, big_d, theta
from edgebetti.errors import NotTypeThree, UnsupportedFamily
from edgebetti.graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    LabeledGraph,
    MultiPath,
    OneEar,
    TwoEar,
    build_family,
    induced_subgraph,
)
from tests.conftest import SUITE


def mono(**exps):
    return Multidegree(exps)


def test_generators_compact_c_with_two_w_cycles():
    g = build_family(CompactC((1,), (1,), (1, 1)))
    th = theta(g)
    got = canonical_generators(g).generators
    want = {th * mono(u=2, v=1, w=1), th * mono(u=1, v=2, w=1),
            th * mono(u=1, v=1, w=2), th * mono(u=1, v=1, w=4)}
    assert got == want


def test_generators_compact_c_single_cycles_longer_branch():
    # a longer branch cycle changes Theta but not the big-vertex exponents
    g = build_family(CompactC((2,), (1,), (1,)))
    th = theta(g)
    got = canonical_generators(g).generators
    want = {th * mono(u=2, v=1, w=1), th * mono(u=1, v=2, w=1),
            th * mono(u=1, v=1, w=2)}
    assert got == want


def test_generators_two_ear():
    for m in (1, 2, 3):
        g = build_family(TwoEar(m))
        base = Multidegree({f"u{i}": 1 for i in range(1, m)}) * mono(x2=1, y2=1)
        want = {base * mono(x1=1, y1=1, v1=k, v2=m + 1 - k) for k in range(1, m + 1)}
        assert canonical_generators(g).generators == want


def test_generators_one_ear():
    # the closed form here corrects two misprints; it is pinned both by the
    # brute-force cone search and by the oracle Betti tables
    for m in (2, 3, 4):
        g = build_family(OneEar(m))
        base = Multidegree({f"u{i}": 1 for i in range(1, m)}) * mono(x1=1, y2=1)
        want = {base * mono(y1=2, v1=k, v2=m + 1 - k) for k in range(1, m)}
        assert canonical_generators(g).generators == want


def test_generators_multipath_even():
    g = build_family(MultiPath((2, 2)))
    assert canonical_generators(g).generators == {
        mono(u1_1=1, u2_1=1, v1=1, v2=1)}


def test_generators_compact_b_zero():
    g = build_family(CompactB((1, 1), (1,), 0))
    th = theta(g)
    got = canonical_generators(g).generators
    want = {th * mono(u=1, v=1), th * mono(u=3, v=1)}
    assert got == want
    # a single longer cycle on the u side gives just the shared generator
    g = build_family(CompactB((2,), (1,), 0))
    th = theta(g)
    assert canonical_generators(g).generators == {th * mono(u=1, v=1)}


@pytest.mark.parametrize("spec", SUITE, ids=str)
def test_generators_match_brute_force(spec):
    canonical_generators(build_family(spec), validate=True)


def test_n_set_compact_a():
    g = build_family(CompactA((1, 1, 1)))
    th = theta(g)
    assert n_set(g).n_set == {th * mono(u=2), th * mono(u=4)}


def test_n_set_compact_b_lemma():
    # type 2 with no connecting path: the L-shaped exponent set
    g = build_family(CompactB((1, 1), (1,), 0))
    th = theta(g)
    m, n = 2, 1
    want = {th * mono(u=2 * ell, v=2 * n) for ell in range(1, m + 1)}
    want |= {th * mono(u=2 * m, v=2 * ell) for ell in range(1, n)}
    assert n_set(g).n_set == want
    # with a connecting path the big-vertex exponents turn odd
    g = build_family(CompactB((1,), (1, 1), 2))
    th = theta(g)
    m, n = 1, 2
    want = {th * mono(u=2 * ell, v=2 * n + 1) for ell in range(1, m + 1)}
    want |= {th * mono(u=2 * m + 1, v=2 * ell) for ell in range(1, n + 1)}
    assert n_set(g).n_set == want


def test_n_set_compact_c_lemma():
    g = build_family(CompactC((1,), (1,), (1, 1)))
    th = theta(g)
    m, n, k = 1, 1, 2
    want = {th * mono(u=2 * ell, v=2 * n + 1, w=2 * k + 1) for ell in range(1, m + 1)}
    want |= {th * mono(u=2 * m + 1, v=2 * ell, w=2 * k + 1) for ell in range(1, n + 1)}
    want |= {th * mono(u=2 * m + 1, v=2 * n + 1, w=2 * ell) for ell in range(1, k + 1)}
    assert n_set(g).n_set == want


def test_n_set_one_ear():
    for m in (2, 3, 4):
        g = build_family(OneEar(m))
        base = Multidegree({f"u{i}": 1 for i in range(1, m)}) * mono(x1=1, y2=1)
        want = {base * mono(y1=1, v1=ell, v2=m - ell) for ell in range(1, m)}
        assert n_set(g).n_set == want


def test_n_set_true_mixed_multipath():
    g = build_family(MultiPath((2, 2, 2, 3, 3, 3)))
    th = theta(g)
    want = {th * mono(v1=2, v2=3), th * mono(v1=3, v2=2),
            th * mono(v1=3, v2=4), th * mono(v1=4, v2=3)}
    assert n_set(g).n_set == want


def test_n_set_single_minority_path():
    # one odd path among evens: the top degrees come from the even part and
    # their support misses the odd path
    g = build_family(MultiPath((2, 2, 3)))
    tops = n_set(g).n_set
    assert tops == {mono(u1_1=1, u2_1=1, v1=1, v2=1)}
    assert all(set(t.support()) < set(g.vertices) for t in tops)


def test_n_set_members_divide_big_d():
    for spec in SUITE:
        g = build_family(spec)
        d_top = big_d(g)
        for alpha in n_set(g).n_set:
            assert alpha.divides(d_top)


def test_n_set_support_is_whole_vertex_set():
    for spec in [CompactA((1, 1)), CompactB((1,), (1,), 2), CompactC((1,), (1,), (1,)),
                 MultiPath((2, 2, 2)), MultiPath((3, 3, 3)), TwoEar(3), OneEar(3),
                 CompleteBipartite2d(4)]:
        g = build_family(spec)
        for alpha in n_set(g).n_set:
            assert alpha.support() == frozenset(g.vertices)


def test_second_top_type3():
    g = build_family(CompactC((1,), (1,), (1, 1)))
    th = theta(g)
    ranks = second_top_type3(g)
    assert ranks[th * mono(u=2, v=2, w=4)] == 2
    assert ranks[th * mono(u=2, v=2, w=2)] == 1
    assert len(ranks) == 2

    g = build_family(CompactC((1,), (1,), (1,)))
    th = theta(g)
    assert second_top_type3(g) == {th * mono(u=2, v=2, w=2): 2}

    g = build_family(CompactC((1, 1), (1,), (1,)))
    th = theta(g)
    ranks = second_top_type3(g)
    assert ranks[th * mono(u=2, v=2, w=2)] == 1
    assert ranks[th * mono(u=4, v=2, w=2)] == 2

    with pytest.raises(NotTypeThree):
        second_top_type3(build_family(TwoEar(2)))


def test_m_set_sizes():
    g = build_family(CompactC((1, 1), (1,), (1, 1)))
    tops = n_set(g)
    m, n, k = 2, 1, 2
    assert len(tops.m1_set) == m + n + k - 3
    assert len(tops.m2_set) == 1
    for alpha in tops.m1_set | tops.m2_set:
        assert alpha.support() == frozenset(g.vertices)


def test_cardinality_matches_family_counts():
    cases = [
        (CompactA((1, 1, 1)), 2), (CompactB((1, 1), (1,), 0), 2),
        (CompactB((1,), (1,), 2), 2), (CompactC((1,), (1, 1), (1,)), 4),
        (MultiPath((2, 2, 2)), 2), (MultiPath((3, 3, 3)), 2),
        (MultiPath((2, 2, 3, 3)), 1), (TwoEar(3), 3), (OneEar(3), 2),
        (CompleteBipartite2d(4), 3),
    ]
    for spec, count in cases:
        assert len(canonical_generators(build_family(spec)).generators) == count


def test_unsupported_family():
    triangle = LabeledGraph([("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(UnsupportedFamily):
        canonical_generators(triangle)


def test_subgraph_n_sets_feed_census():
    # the two-ear census subgraphs expose their own top degrees in parent names
    g = build_family(TwoEar(2))
    sub = induced_subgraph(g, set(g.vertices) - {"x2"})
    tops = n_set(sub).n_set
    base = mono(u1=1, x1=1, y2=1)
    assert tops == {base * mono(y1=1, v1=1, v2=1)}
