from itertools import product

import pytest

from edgebetti.cone import (
    cone_contains,
    even_multipath_system,
    fundamental_sets,
    inequality_system,
    minimal_interior_vectors,
    regular_vertices,
    relint_contains,
)
from edgebetti.degrees import Multidegree, big_d, theta
from edgebetti.errors import BipartiteGraph, DimensionMismatch, UnsupportedFamily
from edgebetti.graphs import (
    CompactA,
    CompactC,
    LabeledGraph,
    MultiPath,
    OneEar,
    TwoEar,
    build_family,
)
from tests.conftest import SUITE

TRIANGLE = LabeledGraph([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.mark.parametrize("spec", SUITE, ids=str)
def test_system_sound_on_edge_degrees(spec):
    g = build_family(spec)
    sys_ = inequality_system(g)
    for u, v in g.edges:
        e = Multidegree.edge(u, v)
        assert cone_contains(sys_, e)
        for form in sys_.forms:
            value = form.evaluate(e)
            assert value == 0 if form.implicit_equality else value >= 0


def test_two_ear_regular_and_fundamental():
    g = build_family(TwoEar(3))
    assert regular_vertices(g) == frozenset(g.vertices)
    found = {fs.t for fs in fundamental_sets(g)}
    listed = {
        frozenset({"u1", "u2", "x1", "y2"}),
        frozenset({"u1", "u2", "x2", "y1"}),
        frozenset({"v1", "v2"}),
        frozenset({"v1", "y1"}),
        frozenset({"v2", "x1"}),
    }
    assert listed <= found
    # exhaustive facet enumeration shows five more facet-defining sets
    extra = {
        frozenset({"u1", "u2", "x2", "y2"}),
        frozenset({"v1"}), frozenset({"v2"}),
        frozenset({"x2"}), frozenset({"y2"}),
    }
    assert found == listed | extra


def test_fundamental_sets_are_exactly_the_facets():
    # cross-check against a from-scratch facet enumeration of the cone
    from fractions import Fraction
    from itertools import combinations

    g = build_family(TwoEar(2))
    verts = g.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    vecs = []
    for u, v in g.edges:
        w = [0] * n
        w[idx[u]] += 1
        w[idx[v]] += 1
        vecs.append(tuple(w))

    def solve_normal(rows):
        a = [list(map(Fraction, r)) for r in rows]
        piv_cols, r0 = [], 0
        for c in range(n):
            piv = next((i for i in range(r0, len(a)) if a[i][c]), None)
            if piv is None:
                continue
            a[r0], a[piv] = a[piv], a[r0]
            for i in range(len(a)):
                if i != r0 and a[i][c]:
                    f = a[i][c] / a[r0][c]
                    a[i] = [p - f * q for p, q in zip(a[i], a[r0])]
            piv_cols.append(c)
            r0 += 1
        free = [c for c in range(n) if c not in piv_cols]
        if len(free) != 1:
            return None
        x = [Fraction(0)] * n
        x[free[0]] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            x[pc] = -a[i][free[0]] / a[i][pc]
        return x

    normals = set()
    for sub in combinations(range(len(vecs)), n - 1):
        x = solve_normal([vecs[i] for i in sub])
        if x is None:
            continue
        vals = [sum(a * b for a, b in zip(x, v)) for v in vecs]
        if all(v <= 0 for v in vals):
            x, vals = [-a for a in x], [-v for v in vals]
        if not all(v >= 0 for v in vals):
            continue
        from math import gcd

        scale = 1
        for f in x:
            scale = scale * f.denominator // gcd(scale, f.denominator)
        xi = [int(f * scale) for f in x]
        g0 = 0
        for a in xi:
            g0 = gcd(g0, a)
        normals.add(tuple(a // g0 for a in xi))

    sys_ = inequality_system(g)
    from_system = set()
    for form in sys_.forms:
        row = [0] * n
        for v, c in form.coeffs:
            row[idx[v]] = c
        from_system.add(tuple(row))
    assert from_system == normals


def test_compact_a_regular_vertices():
    # removing the shared big vertex leaves two paths, so it is not regular
    g = build_family(CompactA((1, 1)))
    assert regular_vertices(g) == frozenset(g.vertices) - {"u"}


def test_triangle_system():
    # every vertex removal leaves a single edge, so no vertex is regular;
    # the fundamental sets are the three singletons
    assert regular_vertices(TRIANGLE) == frozenset()
    assert {fs.t for fs in fundamental_sets(TRIANGLE)} == {
        frozenset({"a"}), frozenset({"b"}), frozenset({"c"})}
    sys_ = inequality_system(TRIANGLE)
    assert len(sys_.forms) == 3
    assert cone_contains(sys_, Multidegree({"a": 1, "b": 1}))
    assert not cone_contains(sys_, Multidegree({"a": 2, "b": 3, "c": 6}))


def test_fundamental_sets_reject_bipartite():
    with pytest.raises(BipartiteGraph):
        fundamental_sets(build_family(MultiPath((2, 2))))


def test_cone_contains_basics():
    g = build_family(TwoEar(2))
    sys_ = inequality_system(g)
    assert cone_contains(sys_, big_d(g))
    with pytest.raises(DimensionMismatch):
        cone_contains(sys_, Multidegree({"zz": 1}))


def test_relint_examples():
    g = build_family(TwoEar(3))
    sys_ = inequality_system(g)
    m = 3
    for ell in range(1, m + 1):
        alpha = Multidegree({"u1": 1, "u2": 1, "x1": 1, "x2": 1, "y1": 1, "y2": 1,
                             "v1": ell, "v2": m + 1 - ell})
        assert relint_contains(sys_, alpha)
        assert cone_contains(sys_, alpha)
    # a single edge degree lies on a proper face
    e = Multidegree.edge(*g.edges[0])
    assert not relint_contains(sys_, e)


def test_relint_implies_cone_on_box_sample():
    g = build_family(CompactA((1, 1)))
    sys_ = inequality_system(g)
    order = g.vertices
    for vec in product(range(3), repeat=len(order)):
        d = Multidegree({v: x for v, x in zip(order, vec) if x})
        if relint_contains(sys_, d):
            assert cone_contains(sys_, d)


@pytest.mark.parametrize(
    "spec,expected",
    [
        (CompactA((1, 1)), 1),
        (CompactA((1, 1, 1)), 2),
        (CompactC((1,), (1,), (1, 1)), 4),
        (MultiPath((2, 2, 2)), 2),
        (TwoEar(2), 2),
        (OneEar(3), 2),
    ],
    ids=str,
)
def test_minimal_interior_vector_counts(spec, expected):
    g = build_family(spec)
    assert len(minimal_interior_vectors(g)) == expected


def test_minimal_interior_vectors_reject_custom():
    with pytest.raises(UnsupportedFamily):
        minimal_interior_vectors(TRIANGLE)


def test_minimal_vectors_compact_a_closed_form():
    g = build_family(CompactA((1, 1, 1)))
    th = theta(g)
    want = {th * Multidegree({"u": 2 * k}) for k in (1, 2)}
    assert minimal_interior_vectors(g) == want


def test_minimality_against_definition():
    # no returned vector decomposes into a relint lattice point plus a
    # nonzero semigroup element inside the box
    from edgebetti.cone import lattice_contains

    g = build_family(TwoEar(2))
    sys_ = inequality_system(g)
    minimal = minimal_interior_vectors(g)
    order = g.vertices
    for d in minimal:
        dvec = [d[v] for v in order]
        for vec in product(*[range(x + 1) for x in dvec]):
            part = Multidegree({v: x for v, x in zip(order, vec) if x})
            rest = d.quotient(part)
            if not rest or rest == d:
                continue
            decomposed = (
                relint_contains(sys_, part)
                and lattice_contains(g, part)
                and cone_contains(sys_, rest)
                and lattice_contains(g, rest)
            )
            assert not decomposed


def test_even_multipath_hardcoded_system_agrees():
    for lengths in [(2, 2), (2, 2, 2), (2, 2, 4), (2, 2, 2, 2)]:
        g = build_family(MultiPath(lengths))
        general = inequality_system(g)
        hard = even_multipath_system(g)
        order = g.vertices
        top = big_d(g)
        for vec in product(*[range(top[v] + 1) for v in order]):
            d = Multidegree({v: x for v, x in zip(order, vec) if x})
            assert cone_contains(general, d) == cone_contains(hard, d)
            assert relint_contains(general, d) == relint_contains(hard, d)
