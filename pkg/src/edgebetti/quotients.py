"""Ordered monomial ideals with regular quotients and mapping-cone bounds.

A monomial ideal has regular quotients when, for some ordering of its
minimal generators, each colon ideal by the next generator is generated by
monomials with pairwise disjoint supports.  The colon lengths k_s feed the
mapping-cone bound sum_s C(k_s, i) + C(0, i) on the total Betti numbers.
The two-ear initial ideal (with the ordering that realizes the colon
shape) is recorded as data; the monomial order constructing it is imported
from prior work and out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .betti import GradedBettiTable, betti_table, graded_table
from .degrees import Multidegree
from .errors import InvalidSpec, IrregularStep, UnitColon
from .graphs import TwoEar, build_family


@dataclass(frozen=True)
class OrderedMonomialIdeal:
    """Minimal monomial generators in a fixed linear order."""

    generators: tuple[Multidegree, ...]

    def __post_init__(self):
        gens = self.generators
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if i != j and a.divides(b):
                    raise InvalidSpec(
                        f"generators are not minimal: {a.monomial()} divides {b.monomial()}")


@dataclass(frozen=True)
class ColonStep:
    index: int
    generators: tuple[Multidegree, ...]
    regular: bool

    @property
    def k(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class ColonReport:
    steps: tuple[ColonStep, ...]

    @property
    def all_regular(self) -> bool:
        return all(s.regular for s in self.steps)

    def k_sequence(self) -> tuple[int, ...]:
        return tuple(s.k for s in self.steps)

    def to_json(self) -> dict:
        return {
            "all_regular": self.all_regular,
            "steps": [
                {"index": s.index, "regular": s.regular, "k": s.k,
                 "generators": [m.monomial() for m in s.generators]}
                for s in self.steps
            ],
        }


def _gcd(a: Multidegree, b: Multidegree) -> Multidegree:
    return Multidegree({v: min(e, b[v]) for v, e in a.items() if b[v]})


def colon_ideal(prefix, g: Multidegree) -> tuple[Multidegree, ...]:
    """Minimal generators of (prefix) : g."""
    quotients = []
    for a in prefix:
        q = a.quotient(_gcd(a, g))
        if not q:
            raise UnitColon(f"{a.monomial()} divides {g.monomial()}")
        quotients.append(q)
    minimal = []
    for q in quotients:
        if any(o != q and o.divides(q) for o in quotients):
            continue
        if q not in minimal:
            minimal.append(q)
    return tuple(minimal)


def regular_quotients(ideal: OrderedMonomialIdeal) -> ColonReport:
    """Colon shapes of each generator against its predecessors."""
    gens = ideal.generators
    steps = []
    for s in range(2, len(gens) + 1):
        colon = colon_ideal(gens[: s - 1], gens[s - 1])
        supports = [q.support() for q in colon]
        regular = all(
            not (supports[i] & supports[j])
            for i in range(len(supports))
            for j in range(i + 1, len(supports))
        )
        steps.append(ColonStep(s, colon, regular))
    return ColonReport(tuple(steps))


def mapping_cone_bound(report: ColonReport, i: int) -> int:
    """Upper bound for the i-th total Betti number of the ideal."""
    if not report.all_regular:
        bad = [s.index for s in report.steps if not s.regular]
        raise IrregularStep(f"steps {bad} are not regular sequences")
    return sum(comb(s.k, i) for s in report.steps) + comb(0, i)


# ---------------------------------------------------------------------------
# the two-ear initial ideal


def twoear_edge_variables(m: int) -> tuple[str, ...]:
    """Edge-variable names of the two-ear graph, in a fixed order."""
    out = []
    for i in range(1, m):
        out += [f"e{i}_1", f"e{i}_2"]
    return tuple(out + ["f1", "f2", "f3", "g1", "g2", "g3", "w"])


def twoear_edge_name(m: int, edge: tuple[str, str]) -> str:
    """Name of an edge of the canonical two-ear graph as an edge variable."""
    lookup = {
        frozenset({"v1", "x1"}): "f1", frozenset({"x1", "x2"}): "f2",
        frozenset({"v1", "x2"}): "f3", frozenset({"v2", "y1"}): "g1",
        frozenset({"y1", "y2"}): "g2", frozenset({"v2", "y2"}): "g3",
        frozenset({"x1", "y1"}): "w",
    }
    for i in range(1, m):
        lookup[frozenset({"v1", f"u{i}"})] = f"e{i}_1"
        lookup[frozenset({"v2", f"u{i}"})] = f"e{i}_2"
    return lookup[frozenset(edge)]


def twoear_initial_ideal(m: int) -> OrderedMonomialIdeal:
    """Generators of the two-ear initial ideal in the regular-quotient order.

    Four families: products of cross path-edges e_{i,1} e_{j,2} with i < j
    (ordered by j, then i), the two ear-bridging families g1 f2 e_{i,1} and
    g2 f1 e_{i,2}, and the single generator f1 f2 g1 g2, arranged so that
    each colon ideal is generated by a regular sequence.
    """
    if m < 1:
        raise InvalidSpec("two-ear type must be >= 1")
    mono = Multidegree
    gens: list[Multidegree] = []
    for j in range(2, m):
        for i in range(1, j):
            gens.append(mono({f"e{i}_1": 1, f"e{j}_2": 1}))
    for i in range(1, m):
        gens.append(mono({"g1": 1, "f2": 1, f"e{i}_1": 1}))
    gens.append(mono({"f1": 1, "f2": 1, "g1": 1, "g2": 1}))
    for i in range(m - 1, 0, -1):
        gens.append(mono({"g2": 1, "f1": 1, f"e{i}_2": 1}))
    return OrderedMonomialIdeal(tuple(gens))


def twoear_expected_k_sequence(m: int) -> tuple[int, ...]:
    """(1,1, 2,2,2, ..., m-1 repeated m times)."""
    out: list[int] = []
    for k in range(1, m):
        out += [k] * (k + 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# comparison of the initial ideal with the toric ideal (oracle route)


def ideal_graded_betti_oracle(variables, generators, cap: int = 2_000_000
                              ) -> GradedBettiTable:
    """Graded Betti table of a monomial ideal in a polynomial ring.

    Scans the divisors of the componentwise lcm of the generators; every
    Betti degree of a monomial ideal divides that lcm.
    """
    from .errors import RegionTooLarge
    from .oracle import (
        MonomialAlgebraPresentation,
        SimplicialComplex,
        _gamma_faces,
        reduced_homology,
    )

    pres = MonomialAlgebraPresentation.polynomial_ring(variables)
    gen_vecs = [pres.vector(a) for a in generators]
    lcm = tuple(max(v[i] for v in gen_vecs) for i in range(len(pres.coords)))
    count = 1
    for x in lcm:
        count *= x + 1
    if count > cap:
        raise RegionTooLarge(f"lcm box holds {count} degrees")
    entries: dict[tuple[int, int], int] = {}
    for hvec in product(*[range(x + 1) for x in lcm]):
        faces = _gamma_faces(pres, gen_vecs, hvec)
        if not faces:
            continue
        profile = reduced_homology(SimplicialComplex(pres.names, frozenset(faces)))
        j = sum(hvec)
        for i, dim in enumerate(profile.dims):
            if dim:
                key = (i, j)
                entries[key] = entries.get(key, 0) + dim
    return GradedBettiTable(entries)


@dataclass
class InitialComparison:
    m: int
    ideal_table: GradedBettiTable
    ring_table: GradedBettiTable
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches


def initial_betti_comparison(m: int) -> InitialComparison:
    """Graded Betti numbers of the two-ear initial ideal vs the toric ideal.

    The toric side comes from the closed-form ring table, shifted by one
    homological degree to convert between resolutions of the quotient ring
    and of the ideal.
    """
    ideal = twoear_initial_ideal(m)
    ideal_table = ideal_graded_betti_oracle(twoear_edge_variables(m), ideal.generators)
    ring = graded_table(betti_table(build_family(TwoEar(m))))
    mismatches = []
    keys = {(i, j) for i, j in ideal_table.entries}
    keys |= {(i - 1, j) for i, j in ring.entries if i >= 1}
    for i, j in sorted(keys):
        left = ideal_table.rank(i, j)
        right = ring.rank(i + 1, j)
        if left != right:
            mismatches.append({"i": i, "j": j, "initial": left, "toric": right})
    return InitialComparison(m, ideal_table, ring, mismatches)
