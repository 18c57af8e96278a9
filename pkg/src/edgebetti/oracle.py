"""Brute-force multi-graded Betti numbers via divisor complexes and homology.

For a monomial ideal I in a monomial algebra T, the multi-graded Betti
number of I at degree h is the dimension of reduced homology, one degree
down, of the simplicial complex whose faces F satisfy: h minus the degrees
of the generators indexed by F lands in I.  Taking I to be the whole
algebra gives the squarefree divisor complex and the Betti numbers of the
algebra itself.  All ranks are computed exactly over the rationals and
cross-checked over a large prime field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .betti import BettiTable, total_betti
from .cone import InequalitySystem, inequality_system, lattice_contains
from .degrees import Multidegree, big_d
from .errors import InternalInconsistency, OddCycleConditionViolated, RegionTooLarge
from .graphs import (
    Custom,
    LabeledGraph,
    bipartition,
    connected_components,
    induced_subgraph,
    odd_cycle_condition,
    recognize,
)

_CHECK_PRIME = 2_147_483_647  # ranks are recomputed mod this prime and compared


# ---------------------------------------------------------------------------
# monomial algebra presentations and monoid membership


class MonomialAlgebraPresentation:
    """Monomial algebra given by the multidegrees of its generators.

    For edge rings the generators are the edge degrees and membership in
    the degree monoid is decided through the cone description (the graphs
    in scope are normal); a backtracking search over generators supplies
    witnesses and covers the general case.
    """

    def __init__(self, coords, names, degrees, graph=None, system=None):
        self.coords = tuple(coords)
        self.names = tuple(names)
        self.degrees = tuple(tuple(d) for d in degrees)
        if not self.degrees:
            raise ValueError("a monomial algebra needs at least one generator")
        for d in self.degrees:
            if len(d) != len(self.coords) or any(x < 0 for x in d) or not any(d):
                raise ValueError(f"bad generator degree {d}")
        self.graph = graph
        self.system = system
        self._nonbip = graph is not None and bipartition(graph) is None
        self._memo: dict[tuple, bool] = {}
        self._at_coord = [
            [gi for gi, d in enumerate(self.degrees) if d[i] > 0]
            for i in range(len(self.coords))
        ]
        self.sparse_degrees = tuple(
            tuple((i, x) for i, x in enumerate(d) if x) for d in self.degrees
        )

    @classmethod
    def from_graph(cls, g: LabeledGraph, system: InequalitySystem | None = None):
        if system is None:
            system = inequality_system(g)
        if not odd_cycle_condition(g):
            raise OddCycleConditionViolated(
                "cone-based membership needs a normal edge ring")
        order = g.vertices
        index = {v: i for i, v in enumerate(order)}
        names, degs = [], []
        for u, v in g.edges:
            names.append(f"{u}*{v}")
            d = [0] * len(order)
            d[index[u]] = d[index[v]] = 1
            degs.append(tuple(d))
        return cls(order, names, degs, graph=g, system=system)

    @classmethod
    def polynomial_ring(cls, variables):
        variables = tuple(variables)
        n = len(variables)
        degs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        return cls(variables, variables, degs)

    def vector(self, d: Multidegree) -> tuple[int, ...]:
        index = {v: i for i, v in enumerate(self.coords)}
        vec = [0] * len(self.coords)
        for v, e in d.items():
            vec[index[v]] = e
        return tuple(vec)

    def degree_of(self, vec) -> Multidegree:
        return Multidegree({v: x for v, x in zip(self.coords, vec) if x})

    def member(self, vec) -> bool:
        """Is the vector a nonnegative integer combination of the generators?"""
        memo = self._memo
        got = memo.get(vec)
        if got is not None:
            return got
        if any(x < 0 for x in vec):
            got = False
        elif not any(vec):
            got = True
        elif self.graph is not None:
            got = not (self._nonbip and sum(vec) % 2) and self.system.contains_vec(vec)
        else:
            got = self.witness(vec) is not None
        memo[vec] = got
        return got

    def witness(self, vec):
        """A representation of vec over the generators, or None.

        Deterministic: always branches on the first coordinate with positive
        residual, trying generators in index order.
        """
        vec = tuple(vec)
        if any(x < 0 for x in vec):
            return None
        failed: set[tuple] = set()

        def search(cur):
            for i, x in enumerate(cur):
                if x > 0:
                    break
            else:
                return {}
            if cur in failed:
                return None
            if self.graph is not None and not self.member(cur):
                failed.add(cur)
                return None
            for gi in self._at_coord[i]:
                deg = self.degrees[gi]
                if all(d <= c for d, c in zip(deg, cur)):
                    sub = search(tuple(c - d for c, d in zip(cur, deg)))
                    if sub is not None:
                        sub[gi] = sub.get(gi, 0) + 1
                        return sub
            failed.add(cur)
            return None

        return search(vec)


def monoid_member(pres: MonomialAlgebraPresentation, d: Multidegree):
    """Witness multiset {generator name: multiplicity} for d, or None."""
    got = pres.witness(pres.vector(d))
    if got is None:
        return None
    return {pres.names[gi]: k for gi, k in sorted(got.items())}


# ---------------------------------------------------------------------------
# divisor complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces over a labeled ground set, stored as sorted index tuples."""

    ground: tuple[str, ...]
    faces: frozenset

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def facets(self) -> list[tuple[int, ...]]:
        faces = self.faces
        used = {e for f in faces for e in f}
        out = []
        for f in faces:
            fs = set(f)
            if any(tuple(sorted(fs | {e})) in faces for e in used if e not in fs):
                continue
            out.append(f)
        return sorted(out)

    def facet_labels(self) -> list[tuple[str, ...]]:
        return [tuple(self.ground[i] for i in f) for f in self.facets()]

    def euler_characteristic(self) -> int:
        # reduced: the empty face contributes -1 in dimension -1
        return sum((-1) ** (len(f) - 1) for f in self.faces)


def gamma_complex(pres: MonomialAlgebraPresentation, ideal_gens, h: Multidegree
                  ) -> SimplicialComplex:
    """The divisor complex of the ideal generated by ideal_gens at degree h.

    Passing the empty list (or a single zero degree) selects the whole
    algebra, i.e. the squarefree divisor complex of h.
    """
    hvec = pres.vector(h)
    gens = [pres.vector(a) for a in ideal_gens] or [tuple([0] * len(pres.coords))]
    faces = _gamma_faces(pres, gens, hvec)
    return SimplicialComplex(pres.names, frozenset(faces))


def _gamma_faces(pres, gens, hvec, max_size=None):
    member = pres.member
    algebra = len(gens) == 1 and not any(gens[0])

    if algebra:
        in_ideal = member
    else:
        gen_sparse = [tuple((i, x) for i, x in enumerate(a) if x) for a in gens]

        def in_ideal(res):
            for sparse in gen_sparse:
                rem = list(res)
                for i, x in sparse:
                    rem[i] -= x
                    if rem[i] < 0:
                        break
                else:
                    if member(tuple(rem)):
                        return True
            return False

    faces: list[tuple[int, ...]] = []
    if not in_ideal(hvec):
        return faces
    faces.append(())
    sparse_degrees = pres.sparse_degrees
    admissible = [
        gi for gi, sparse in enumerate(sparse_degrees)
        if all(hvec[i] >= x for i, x in sparse)
    ]

    def grow(face, residual, start):
        if max_size is not None and len(face) >= max_size:
            return
        for pos in range(start, len(admissible)):
            gi = admissible[pos]
            lst = list(residual)
            for i, x in sparse_degrees[gi]:
                lst[i] -= x
                if lst[i] < 0:
                    break
            else:
                res = tuple(lst)
                if in_ideal(res):
                    nxt = face + (gi,)
                    faces.append(nxt)
                    grow(nxt, res, pos + 1)

    grow((), hvec, 0)
    return faces


# ---------------------------------------------------------------------------
# exact reduced homology


@dataclass(frozen=True)
class HomologyProfile:
    """dims[i] is the dimension of reduced homology in degree i-1."""

    dims: tuple[int, ...]

    def betti(self, i: int) -> int:
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def top_index(self) -> int:
        return max((i for i, d in enumerate(self.dims) if d), default=-1)


def reduced_homology(complex_: SimplicialComplex) -> HomologyProfile:
    """Reduced homology dimensions over the rationals (prime cross-checked)."""
    faces = complex_.faces
    if not faces:
        return HomologyProfile(())
    if faces == frozenset({()}):
        return HomologyProfile((1,))
    # cone shortcut: v is an apex iff union with v is a bijection from the
    # faces avoiding v onto the faces containing it (it is always injective)
    counts: dict[int, int] = {}
    for f in faces:
        for e in f:
            counts[e] = counts.get(e, 0) + 1
    if any(2 * c == len(faces) for c in counts.values()):
        return HomologyProfile(())  # cone, hence contractible
    by_dim: dict[int, list] = {}
    for f in faces:
        if f:
            by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    for d in by_dim:
        by_dim[d].sort()
    index = {d: {f: k for k, f in enumerate(by_dim[d])} for d in by_dim}
    ranks = {}
    for d in range(1, top + 1):
        cols = []
        lower = index[d - 1]
        for f in by_dim[d]:
            col = {}
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                col[lower[sub]] = 1 if j % 2 == 0 else -1
            cols.append(col)
        ranks[d] = _rank_checked(cols)
    ranks[0] = 1  # the map to the empty face is all ones on a nonempty vertex set
    ranks[top + 1] = 0
    dims = []
    dims.append(1 - ranks[0])  # reduced homology in degree -1
    for d in range(0, top + 1):
        f_d = len(by_dim.get(d, ()))
        dims.append(f_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
    while dims and dims[-1] == 0:
        dims.pop()
    if any(x < 0 for x in dims):
        raise InternalInconsistency("negative homology dimension")
    return HomologyProfile(tuple(dims))


def _rank_checked(cols) -> int:
    over_q = _rank_fraction(cols)
    mod_p = _rank_prime(cols, _CHECK_PRIME)
    if over_q != mod_p:
        raise InternalInconsistency(
            f"rank over Q is {over_q} but {mod_p} mod {_CHECK_PRIME}")
    return over_q


def _rank_fraction(cols) -> int:
    """Exact rank over the rationals; stays in integers while pivots divide."""
    pivots: dict[int, dict] = {}
    rank = 0
    for col in cols:
        cur = dict(col)
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = cur
                rank += 1
                break
            a, b = cur.pop(r), piv[r]
            if isinstance(a, int) and isinstance(b, int) and a % b == 0:
                factor = a // b
            else:
                factor = Fraction(a) / Fraction(b)
            for rr, vv in piv.items():
                if rr == r:
                    continue
                val = cur.get(rr, 0) - factor * vv
                if val:
                    cur[rr] = val
                else:
                    cur.pop(rr, None)
        # empty column: dependent, contributes nothing
    return rank


def _rank_prime(cols, p) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        cur = {r: v % p for r, v in col.items() if v % p}
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = cur
                rank += 1
                break
            factor = (cur[r] * pow(piv[r], p - 2, p)) % p
            for rr, vv in piv.items():
                val = (cur.get(rr, 0) - factor * vv) % p
                if val:
                    cur[rr] = val
                else:
                    cur.pop(rr, None)
    return rank


# ---------------------------------------------------------------------------
# Betti numbers through the oracle


def betti_oracle(pres: MonomialAlgebraPresentation, ideal_gens, i: int,
                 h: Multidegree) -> int:
    """dim of reduced homology in degree i-1 of the divisor complex at h."""
    return reduced_homology(gamma_complex(pres, ideal_gens, h)).betti(i)


def _support_is_free(g: LabeledGraph, support: frozenset) -> bool:
    """True when the edge degrees inside the support are linearly independent.

    Rank of the edge-degree span of a graph is the vertex count minus the
    number of bipartite components, so independence makes the subring a
    polynomial ring and kills all positive Betti rows at such degrees.
    """
    sub = induced_subgraph(g, support)
    if any(sub.degree(v) == 0 for v in support):
        return True  # an uncovered vertex means no monomial has this support
    rank = 0
    for comp in connected_components(sub):
        piece = induced_subgraph(sub, comp)
        rank += len(comp) - (1 if bipartition(piece) is not None else 0)
    return len(sub.edges) == rank


def _support_has_uncovered_vertex(g: LabeledGraph, support: frozenset) -> bool:
    sub = induced_subgraph(g, support)
    return any(sub.degree(v) == 0 for v in support)


def divisor_supports(g: LabeledGraph):
    """Supports S whose degrees can carry positive Betti rows, with D bounds."""
    from itertools import combinations

    verts = g.vertices
    for size in range(1, len(verts) + 1):
        for support in combinations(verts, size):
            s = frozenset(support)
            if not _support_is_free(g, s):
                yield s


def betti_table_oracle(g: LabeledGraph, region: str = "divisors",
                       cap: int = 5_000_000, threads: int = 1) -> BettiTable:
    """Betti table of the edge ring computed degree by degree via homology.

    The default region is all divisors of D_G.  Degrees whose support spans
    linearly independent edge degrees are skipped, since the corresponding
    edge subring is a polynomial ring; every other degree gets an honest
    homology computation.  With threads > 1 the supports are scanned by a
    process pool; the result does not depend on the thread count.
    """
    pres = MonomialAlgebraPresentation.from_graph(g)
    dvec = pres.vector(big_d(g))
    _check_region_size(g, dvec, region, cap)
    if threads > 1 and region == "divisors":
        entries = _scan_parallel(g, threads)
    else:
        entries = {}
        for hvec in _region_vectors(g, pres, dvec, region):
            for i, h, dim in _entries_at(pres, hvec):
                entries[(i, h)] = dim
    return BettiTable(entries)


def _entries_at(pres, hvec):
    if not pres.member(hvec):
        return
    profile = _algebra_profile(pres, hvec)
    h = pres.degree_of(hvec)
    for i, dim in enumerate(profile.dims):
        if dim and i >= 1:
            yield i, h, dim


def _check_region_size(g, dvec, region, cap):
    index = {v: i for i, v in enumerate(g.vertices)}
    if region == "divisors":
        size = 0
        for support in divisor_supports(g):
            block = 1
            for v in support:
                block *= dvec[index[v]]
            size += block
    elif region.startswith("box:"):
        size = (int(region.split(":", 1)[1]) + 1) ** len(g.vertices)
    else:
        raise ValueError(f"unknown region {region!r}")
    if size > cap:
        raise RegionTooLarge(f"{size} degrees in scan region exceeds cap {cap}")


def _scan_support_chunk(args):
    edges, supports = args
    g = LabeledGraph(edges)
    pres = MonomialAlgebraPresentation.from_graph(g)
    dvec = pres.vector(big_d(g))
    index = {v: i for i, v in enumerate(g.vertices)}
    nonbip = bipartition(g) is None
    out = []
    for support in supports:
        pos = sorted(index[v] for v in support)
        for combo in product(*[range(1, dvec[i] + 1) for i in pos]):
            if nonbip and sum(combo) % 2:
                continue
            vec = [0] * len(g.vertices)
            for i, x in zip(pos, combo):
                vec[i] = x
            for i, h, dim in _entries_at(pres, tuple(vec)):
                out.append((i, tuple(h.items()), dim))
    return out


def _scan_parallel(g: LabeledGraph, threads: int):
    from concurrent.futures import ProcessPoolExecutor

    supports = list(divisor_supports(g))
    chunks = [supports[k::threads] for k in range(threads)]
    entries: dict[tuple[int, Multidegree], int] = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_scan_support_chunk,
                             [(g.edges, chunk) for chunk in chunks if chunk]):
            for i, items, dim in part:
                entries[(i, Multidegree(items))] = dim
    return entries


def _algebra_profile(pres, hvec) -> HomologyProfile:
    faces = _gamma_faces(pres, [tuple([0] * len(pres.coords))], hvec)
    return reduced_homology(SimplicialComplex(pres.names, frozenset(faces)))


def _region_vectors(g, pres, dvec, region):
    order = g.vertices
    index = {v: i for i, v in enumerate(order)}
    nonbip = bipartition(g) is None
    if region == "divisors":
        for support in divisor_supports(g):
            pos = sorted(index[v] for v in support)
            for combo in product(*[range(1, dvec[i] + 1) for i in pos]):
                if nonbip and sum(combo) % 2:
                    continue
                vec = [0] * len(order)
                for i, x in zip(pos, combo):
                    vec[i] = x
                yield tuple(vec)
    elif region.startswith("box:"):
        k = int(region.split(":", 1)[1])
        for combo in product(range(k + 1), repeat=len(order)):
            if any(combo) and not (nonbip and sum(combo) % 2):
                yield combo
    else:
        raise ValueError(f"unknown region {region!r}")


def certify_row_totals(g: LabeledGraph, table: BettiTable) -> dict:
    """Compare oracle row sums with the closed-form totals of the family."""
    rows = {}
    ok = True
    top = max(table.pdim, 0)
    if isinstance(recognize(g).spec, Custom):
        return {"family": False, "rows": {}, "complete": None}
    for i in range(top + 1):
        want = total_betti(g, i)
        got = table.row_total(i)
        rows[i] = {"oracle": got, "formula": want}
        ok = ok and got == want
    return {"family": True, "rows": rows, "complete": ok}


# ---------------------------------------------------------------------------
# canonical-module side and duality


def omega_presentation(g: LabeledGraph):
    """Presentation of the edge ring plus the canonical-module generators."""
    from .canonical import canonical_generators

    pres = MonomialAlgebraPresentation.from_graph(g)
    gens = sorted(canonical_generators(g).generators, key=lambda d: d.sort_key())
    return pres, gens


@dataclass
class DualityReport:
    graph: LabeledGraph
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def duality_check(g: LabeledGraph, table: BettiTable | None = None,
                  indices=(0, 1)) -> DualityReport:
    """Verify beta_{p-i,h}(ring) = beta_{i,D-h}(canonical module) on the scan.

    The ring side comes from the oracle table; the module side is computed
    from scratch through divisor complexes of the canonical ideal, which for
    i <= 1 only needs faces up to dimension one.
    """
    from .graphs import pdim as _pdim

    p = _pdim(g)
    if table is None:
        table = betti_table_oracle(g)
    pres, gens = omega_presentation(g)
    gen_vecs = [pres.vector(a) for a in gens]
    dvec = pres.vector(big_d(g))
    report = DualityReport(g)
    max_size = max(indices) + 1
    nonbip = bipartition(g) is None
    empty = HomologyProfile(())
    for hvec in product(*[range(x + 1) for x in dvec]):
        comp = tuple(d - x for d, x in zip(dvec, hvec))
        if (nonbip and sum(comp) % 2) or not pres.system.contains_vec(comp):
            profile = empty  # degrees outside the monoid have a void complex
        else:
            faces = _gamma_faces(pres, gen_vecs, comp, max_size=max_size)
            profile = _ideal_low_profile(pres, faces, max_size)
        h = pres.degree_of(hvec)
        report.checked += 1
        for i in indices:
            ring_side = table.rank(p - i, h)
            module_side = profile.betti(i)
            if ring_side != module_side:
                report.mismatches.append(
                    {"i": i, "degree": h.to_json(), "ring": ring_side,
                     "module": module_side})
    return report


def _ideal_low_profile(pres, faces, max_size) -> HomologyProfile:
    """Profile in homological degrees < max_size from a truncated face list."""
    if not faces:
        return HomologyProfile(())
    if max_size <= 1:
        return HomologyProfile((1,) if faces == [()] else (0,))
    vertices = [f for f in faces if len(f) == 1]
    if not vertices:
        return HomologyProfile((1,))
    comp_of = {f[0]: {f[0]} for f in vertices}
    for f in faces:
        if len(f) == 2:
            a, b = f
            ca, cb = comp_of[a], comp_of[b]
            if ca is not cb:
                ca |= cb
                for x in cb:
                    comp_of[x] = ca
        elif len(f) > 2:
            raise InternalInconsistency("truncated face list has a large face")
    comps = len({id(c) for c in comp_of.values()})
    return HomologyProfile((0, comps - 1))


def restriction_agrees(g: LabeledGraph, sub_vertices, h: Multidegree,
                       max_index: int | None = None) -> bool:
    """Oracle values at h agree between g and its induced subgraph.

    Requires supp(h) inside the subgraph; this exercises the restriction
    property of divisor complexes through two independent presentations.
    """
    sub = induced_subgraph(g, sub_vertices)
    if not h.support() <= set(sub.vertices):
        raise ValueError("degree must be supported on the subgraph")
    pres_g = MonomialAlgebraPresentation.from_graph(g)
    pres_h = MonomialAlgebraPresentation.from_graph(sub)
    prof_g = _algebra_profile(pres_g, pres_g.vector(h))
    prof_h = _algebra_profile(pres_h, pres_h.vector(h))
    top = max(len(prof_g.dims), len(prof_h.dims))
    if max_index is not None:
        top = min(top, max_index + 1)
    return all(prof_g.betti(i) == prof_h.betti(i) for i in range(top))
