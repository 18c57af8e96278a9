from itertools import combinations

import pytest

from edgebetti.errors import (
    Disconnected,
    InvalidSpec,
    OddCycleConditionViolated,
    PathLengthOne,
    UnknownVertex,
)
from edgebetti.graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    Custom,
    LabeledGraph,
    MultiPath,
    OneEar,
    TwoEar,
    bipartition,
    build_family,
    classify,
    family_subgraph_census,
    has_even_cycle,
    induced_subgraph,
    is_compact,
    minimal_cycles,
    odd_cycle_condition,
    pdim,
)

TRIANGLE = LabeledGraph([("a", "b"), ("b", "c"), ("a", "c")])


def test_build_compact_a():
    g = build_family(CompactA((1, 1)))
    assert len(g.vertices) == 5 and len(g.edges) == 6
    assert g.degree("u") == 4


def test_build_two_ear_type1():
    g = build_family(TwoEar(1))
    assert set(g.vertices) == {"v1", "v2", "x1", "x2", "y1", "y2"}
    assert len(g.edges) == 7


def test_build_compact_c_figure():
    g = build_family(CompactC((1,), (1,), (1, 1)))
    assert len(g.vertices) == 11
    # five triangles: one per branch cycle plus the big triangle
    assert len(g.edges) == 15
    assert {g.degree(v) for v in ("u", "v")} == {4} and g.degree("w") == 6


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        CompactA((1,))
    with pytest.raises(InvalidSpec):
        CompactB((1,), (1,), 3)  # odd connecting path
    with pytest.raises(InvalidSpec):
        CompactC((), (1,), (1,))
    with pytest.raises(PathLengthOne):
        MultiPath((1, 2))
    with pytest.raises(InvalidSpec):
        TwoEar(0)
    with pytest.raises(InvalidSpec):
        CompleteBipartite2d(1)


def test_odd_cycle_condition_examples():
    assert odd_cycle_condition(build_family(CompactA((1, 1))))
    assert odd_cycle_condition(build_family(TwoEar(3)))
    joined_by_path = LabeledGraph(
        [("a", "b"), ("b", "c"), ("a", "c"), ("c", "m"), ("m", "d"),
         ("d", "e"), ("e", "f"), ("d", "f")])
    assert not odd_cycle_condition(joined_by_path)
    with pytest.raises(Disconnected):
        odd_cycle_condition(LabeledGraph([("a", "b"), ("c", "d")]))


def test_minimal_cycles_counts():
    assert len(minimal_cycles(build_family(CompactC((1,), (1,), (1, 1))))) == 5
    cycles = minimal_cycles(build_family(CompactB((1,), (1,), 2)))
    assert sorted(c.length for c in cycles) == [3, 3, 3]
    assert len(minimal_cycles(TRIANGLE)) == 1


def test_minimal_cycles_are_chordless_and_unique():
    g = build_family(TwoEar(3))
    cycles = minimal_cycles(g)
    seen = set()
    for c in cycles:
        vs = c.vertex_set()
        assert vs not in seen
        seen.add(vs)
        for a, b in combinations(c.vertices, 2):
            if g.has_edge(a, b):
                # adjacency only along consecutive cycle positions
                ia, ib = c.vertices.index(a), c.vertices.index(b)
                assert (ia - ib) % len(c.vertices) in (1, len(c.vertices) - 1)


def test_even_cycle_detection():
    assert not has_even_cycle(build_family(CompactA((2, 3))))
    assert has_even_cycle(build_family(MultiPath((2, 2))))
    assert has_even_cycle(build_family(TwoEar(2)))
    assert not has_even_cycle(TRIANGLE)


def test_is_compact():
    assert is_compact(build_family(CompactB((1,), (2,), 0)))
    assert not is_compact(build_family(TwoEar(2)))
    assert not is_compact(LabeledGraph([("a", "b")]))


def test_classify_roundtrip():
    specs = [
        CompactA((1, 2)), CompactA((1, 1, 1)),
        CompactB((1,), (2,), 0), CompactB((1,), (1,), 2),
        CompactC((1,), (1,), (1, 1)),
        MultiPath((2, 2)), MultiPath((2, 3, 3)), MultiPath((2, 2, 3, 3)),
        TwoEar(2), TwoEar(4), OneEar(1), OneEar(3), CompleteBipartite2d(5),
    ]
    for spec in specs:
        assert classify(build_family(spec)) == spec


def test_classify_collisions_and_aliases():
    # the type-1 two-ear graph is the compact graph with two bridged triangles
    assert classify(build_family(TwoEar(1))) == CompactB((1,), (1,), 0)
    # K_{2,d} for d >= 3 is preferred over the all-twos multi-path spelling
    k24 = LabeledGraph([("a", f"m{i}") for i in range(4)]
                       + [("b", f"m{i}") for i in range(4)])
    assert classify(k24) == CompleteBipartite2d(4)
    assert classify(build_family(CompleteBipartite2d(2))) == MultiPath((2, 2))
    assert classify(TRIANGLE) == Custom(TRIANGLE.edges)
    tree = LabeledGraph([("a", "b"), ("b", "c")])
    assert isinstance(classify(tree), Custom)


def test_classify_bare_cycles():
    c6 = LabeledGraph([(f"a{i}", f"a{(i + 1) % 6}") for i in range(6)])
    assert classify(c6) == MultiPath((3, 3))
    c5 = LabeledGraph([(f"a{i}", f"a{(i + 1) % 5}") for i in range(5)])
    assert classify(c5) == MultiPath((2, 3))


def test_induced_subgraph():
    g = build_family(TwoEar(3))
    sub = induced_subgraph(g, set(g.vertices) - {"x2"})
    assert classify(sub) == OneEar(3)
    assert induced_subgraph(g, g.vertices) == g
    with pytest.raises(UnknownVertex):
        induced_subgraph(g, {"nope"})
    c = build_family(CompactC((1,), (1,), (1, 1)))
    sub = induced_subgraph(c, set(c.vertices) - {"w2_1", "w2_2"})
    assert classify(sub) == CompactC((1,), (1,), (1,))
    assert len(minimal_cycles(sub)) == 4


def test_pdim():
    assert pdim(build_family(TwoEar(3))) == 3
    assert pdim(build_family(TwoEar(1))) == 1
    assert pdim(build_family(MultiPath((2, 2)))) == 1
    assert pdim(build_family(CompactC((1,), (1,), (1, 1)))) == 4
    assert pdim(build_family(OneEar(2))) == 1
    with pytest.raises(OddCycleConditionViolated):
        pdim(LabeledGraph(
            [("a", "b"), ("b", "c"), ("a", "c"), ("c", "m"), ("m", "d"),
             ("d", "e"), ("e", "f"), ("d", "f")]))


def test_pdim_equals_cycles_minus_one_on_compact():
    for spec in [CompactA((1, 1)), CompactA((2, 1, 1)), CompactB((1, 2), (1,), 0),
                 CompactB((1,), (1,), 4), CompactC((1,), (1, 1), (1,))]:
        g = build_family(spec)
        assert pdim(g) == len(minimal_cycles(g)) - 1


def test_compact_census_worked_example():
    c = build_family(CompactC((1,), (1,), (1, 1)))
    census = family_subgraph_census(c, 3)
    assert census.counts == {"compact": 4, "type3": 1}
    type3 = [h for kind, h in census.entries if kind == "type3"]
    assert type3 == [c]
    census2 = family_subgraph_census(c, 4)
    assert census2.counts == {"compact": 1, "type3": 0}


def test_two_ear_census_counts():
    te3 = build_family(TwoEar(3))
    census = family_subgraph_census(te3, 2)
    assert census.counts == {"two_ear": 2, "one_ear": 2, "k2d": 0}
    from math import comb

    for m in (2, 3, 4):
        g = build_family(TwoEar(m))
        for i in range(1, m + 1):
            counts = family_subgraph_census(g, i).counts
            assert sum(counts.values()) == comb(m + 1, i + 1)


def test_multipath_census():
    record = family_subgraph_census(build_family(MultiPath((2, 2))), 1)
    assert record.counts == {"non_mixed": 1, "true_mixed": 0}
    assert record.entries[0][1] == build_family(MultiPath((2, 2)))
    record = family_subgraph_census(build_family(MultiPath((2, 2, 3, 3))), 2)
    assert record.counts == {"non_mixed": 0, "true_mixed": 1}


def test_bipartition_classes():
    g = build_family(MultiPath((2, 2, 2)))
    parts = bipartition(g)
    assert parts is not None
    assert {"v1", "v2"} <= set(parts[0]) or {"v1", "v2"} <= set(parts[1])
    assert bipartition(TRIANGLE) is None
