"""Canonical-module generators and top Betti degrees per family.

Each family has a closed-form list of minimal generators of the canonical
module of its edge ring; the top multi-graded Betti degrees are their
complements in D_G.  Compact graphs with three big vertices additionally
carry second-top degrees, split into a rank-one and a rank-two part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cone import inequality_system, minimal_interior_vectors
from .degrees import Multidegree, big_d
from .errors import InternalInconsistency, NotTypeThree, UnsupportedFamily
from .graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    FamilySpec,
    LabeledGraph,
    MultiPath,
    OneEar,
    Recognition,
    TwoEar,
    recognize,
)


@dataclass(frozen=True)
class CanonicalGenerators:
    generators: frozenset
    spec: FamilySpec


@dataclass(frozen=True)
class TopDegreeSet:
    n_set: frozenset
    m1_set: frozenset = frozenset()
    m2_set: frozenset = frozenset()


def canonical_generators(g: LabeledGraph, validate: bool = False) -> CanonicalGenerators:
    """Minimal generators of the canonical module of the edge ring of g.

    With validate=True the closed form is checked against the brute-force
    minimal interior vectors of the edge cone and any disagreement raises,
    since a wrong generator list would poison every downstream table.
    """
    rec = recognize(g)
    gens = _generators(g, rec)
    if validate:
        brute = minimal_interior_vectors(g)
        if brute != gens:
            raise InternalInconsistency(
                f"closed-form generators disagree with the edge cone search: "
                f"{sorted(x.monomial() for x in gens)} vs "
                f"{sorted(x.monomial() for x in brute)}"
            )
    return CanonicalGenerators(gens, rec.spec)


def n_set(g: LabeledGraph) -> TopDegreeSet:
    """Degrees carrying the top Betti numbers, plus the type-3 M sets.

    The top degrees are D_G divided by the canonical-module generators; for
    a compact graph of type 3 the second-top degrees split into the rank-one
    set M1 and the single rank-two degree M2.
    """
    rec = recognize(g)
    d_top = big_d(g)
    gens = _generators(g, rec)
    top = frozenset(d_top.quotient(gamma) for gamma in gens)
    if isinstance(rec.spec, CompactC):
        m1, m2 = _type3_m_sets(g, rec)
        return TopDegreeSet(top, m1, m2)
    return TopDegreeSet(top)


def second_top_type3(g: LabeledGraph) -> dict:
    """Second-top rank map of a type-3 compact graph: 1 on M1, 2 on M2."""
    rec = recognize(g)
    if not isinstance(rec.spec, CompactC):
        raise NotTypeThree(f"{type(rec.spec).__name__} is not compact of type 3")
    m1, m2 = _type3_m_sets(g, rec)
    ranks = {alpha: 1 for alpha in m1}
    ranks.update({alpha: 2 for alpha in m2})
    return ranks


# ---------------------------------------------------------------------------
# closed forms


def _vertex_sum(vertices) -> Multidegree:
    return Multidegree({v: 1 for v in vertices})


def _rest_of(g: LabeledGraph, *named) -> Multidegree:
    """Degree-one product of every vertex of g outside the named ones."""
    drop = set(named)
    return Multidegree({v: 1 for v in g.vertices if v not in drop})


def _generators(g: LabeledGraph, rec: Recognition) -> frozenset:
    spec = rec.spec
    if isinstance(spec, CompactA):
        u = rec.roles["u"]
        m = len(spec.p)
        base = _rest_of(g, u)
        return frozenset(base * Multidegree({u: 2 * k}) for k in range(1, m))
    if isinstance(spec, CompactB):
        u, v = rec.roles["u"], rec.roles["v"]
        m, n = len(spec.p), len(spec.q)
        base = _rest_of(g, u, v)
        out = set()
        if spec.s == 0:
            for k in range(m):
                out.add(base * Multidegree({u: 2 * k + 1, v: 1}))
            for k in range(1, n):
                out.add(base * Multidegree({u: 1, v: 2 * k + 1}))
        else:
            for k in range(1, m + 1):
                out.add(base * Multidegree({u: 2 * k, v: 1}))
            for k in range(1, n + 1):
                out.add(base * Multidegree({u: 1, v: 2 * k}))
        return frozenset(out)
    if isinstance(spec, CompactC):
        u, v, w = rec.roles["u"], rec.roles["v"], rec.roles["w"]
        m, n, k = len(spec.p), len(spec.q), len(spec.r)
        base = _rest_of(g, u, v, w)
        out = set()
        for big, count in ((u, m), (v, n), (w, k)):
            others = {u, v, w} - {big}
            for ell in range(1, count + 1):
                out.add(base * Multidegree({big: 2 * ell}) * _vertex_sum(others))
        return frozenset(out)
    if isinstance(spec, (MultiPath, CompleteBipartite2d)):
        return _multipath_generators(rec)
    if isinstance(spec, TwoEar):
        r = rec.roles
        m = spec.m
        base = _vertex_sum(rec.data["u_list"]) * _vertex_sum((r["x2"], r["y2"]))
        ears = Multidegree({r["x1"]: 1, r["y1"]: 1})
        return frozenset(
            base * ears * Multidegree({r["v1"]: k, r["v2"]: m + 1 - k})
            for k in range(1, m + 1)
        )
    if isinstance(spec, OneEar):
        r = rec.roles
        m = spec.m
        if m == 1:
            return frozenset({big_d(g)})  # the edge ring is a polynomial ring
        base = _vertex_sum(rec.data["u_list"]) * _vertex_sum((r["x1"], r["y2"]))
        return frozenset(
            base * Multidegree({r["y1"]: 2, r["v1"]: k, r["v2"]: m + 1 - k})
            for k in range(1, m)
        )
    raise UnsupportedFamily("no closed-form generators outside the families")


def _multipath_generators(rec: Recognition) -> frozenset:
    v1, v2 = rec.roles["v1"], rec.roles["v2"]
    chains = rec.data["paths"]
    evens = [c for c in chains if (len(c) + 1) % 2 == 0]
    odds = [c for c in chains if (len(c) + 1) % 2 == 1]

    def part_generators(part, even):
        count = len(part)
        theta = _vertex_sum(v for c in part for v in c)
        if count == 0:
            return [Multidegree.zero()]
        if count == 1:
            # single path: polynomial-ring factor, principal canonical module
            chain = part[0]
            return [theta ** 2 * Multidegree({v1: 1, v2: 1})]
        out = []
        for k in range(1, count):
            apexes = {v1: k, v2: count - k} if even else {v1: k, v2: k}
            out.append(theta * Multidegree(apexes))
        return out

    return frozenset(
        a * b
        for a in part_generators(evens, even=True)
        for b in part_generators(odds, even=False)
    )


def _type3_m_sets(g: LabeledGraph, rec: Recognition):
    spec = rec.spec
    u, v, w = rec.roles["u"], rec.roles["v"], rec.roles["w"]
    m, n, k = len(spec.p), len(spec.q), len(spec.r)
    base = _rest_of(g, u, v, w)
    corner = {u: 2 * m, v: 2 * n, w: 2 * k}
    m1 = set()
    for big, count in ((u, m), (v, n), (w, k)):
        for ell in range(1, count):
            exps = dict(corner)
            exps[big] = 2 * ell
            m1.add(base * Multidegree(exps))
    m2 = frozenset({base * Multidegree(corner)})
    return frozenset(m1), m2
