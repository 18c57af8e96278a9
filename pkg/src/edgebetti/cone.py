"""Edge cones: facet inequalities, membership, minimal interior vectors.

The edge cone of a graph is the nonnegative span of its edge degrees.  For
bipartite graphs the facet description uses vertex inequalities plus
neighborhood forms over subsets of one bipartition class together with the
affine balance equation; for non-bipartite graphs it uses regular vertices
and fundamental independent sets.  All arithmetic is exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .degrees import Multidegree, big_d
from .errors import BipartiteGraph, DimensionMismatch, Disconnected, UnsupportedFamily
from .graphs import (
    Custom,
    LabeledGraph,
    bipartition,
    connected_components,
    induced_subgraph,
    is_connected,
    recognize,
)


@dataclass(frozen=True)
class LinearForm:
    """Integer linear form over vertex coordinates, sense >= 0."""

    coeffs: tuple[tuple[str, int], ...]
    implicit_equality: bool
    label: str

    def evaluate(self, d) -> int:
        return sum(c * d.get(v, 0) for v, c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": dict(self.coeffs), "implicit_equality": self.implicit_equality,
                "label": self.label}


class InequalitySystem:
    """Inequality description of an edge cone, with implicit equalities split off.

    A form is an implicit equality when it vanishes on every edge degree; on
    the cone such forms are identically zero, so relative-interior membership
    requires equality there and strict positivity everywhere else.
    """

    def __init__(self, graph: LabeledGraph, forms: list[LinearForm]):
        self.graph = graph
        self.vertex_index = {v: i for i, v in enumerate(graph.vertices)}
        self.forms = tuple(forms)
        n = len(graph.vertices)
        rows, implicit = [], []
        for f in forms:
            row = [0] * n
            for v, c in f.coeffs:
                row[self.vertex_index[v]] = c
            (implicit if f.implicit_equality else rows).append(tuple(row))
        self._strict_rows = tuple(rows)
        self._implicit_rows = tuple(implicit)

    def vector(self, d) -> tuple[int, ...]:
        """Coordinate tuple of a multidegree in this system's vertex order."""
        vec = [0] * len(self.graph.vertices)
        for v, e in d.items():
            i = self.vertex_index.get(v)
            if i is None:
                raise DimensionMismatch(f"vertex {v!r} not in graph")
            vec[i] = e
        return tuple(vec)

    def contains_vec(self, vec) -> bool:
        dot = _dot
        for row in self._implicit_rows:
            if dot(row, vec) != 0:
                return False
        for row in self._strict_rows:
            if dot(row, vec) < 0:
                return False
        return True

    def relint_contains_vec(self, vec) -> bool:
        dot = _dot
        for row in self._implicit_rows:
            if dot(row, vec) != 0:
                return False
        for row in self._strict_rows:
            if dot(row, vec) <= 0:
                return False
        return True

    def to_json(self) -> list[dict]:
        return [f.to_json() for f in self.forms]


def _dot(row, vec) -> int:
    return sum(r * x for r, x in zip(row, vec))


def regular_vertices(g: LabeledGraph) -> frozenset:
    """Vertices whose removal leaves only components containing odd cycles."""
    _require_nonbipartite(g)
    out = set()
    for j in g.vertices:
        rest = induced_subgraph(g, set(g.vertices) - {j})
        if all(_has_odd_cycle(rest, comp) for comp in connected_components(rest)):
            out.add(j)
    return frozenset(out)


@dataclass(frozen=True)
class FundamentalSet:
    t: frozenset
    neighborhood: frozenset


def fundamental_sets(g: LabeledGraph) -> list[FundamentalSet]:
    """All fundamental independent sets of a connected non-bipartite graph."""
    _require_nonbipartite(g)
    out = []
    for t in _independent_sets(g):
        nt = frozenset().union(*(g.neighbors(v) for v in t))
        if not _crossing_connected(g, t, nt):
            continue
        rest_verts = set(g.vertices) - t - nt
        if rest_verts:
            rest = induced_subgraph(g, rest_verts)
            if not all(_has_odd_cycle(rest, comp) for comp in connected_components(rest)):
                continue
        out.append(FundamentalSet(frozenset(t), nt))
    out.sort(key=lambda f: sorted(f.t))
    return out


def _require_nonbipartite(g: LabeledGraph):
    if not is_connected(g):
        raise Disconnected("edge-cone analysis needs a connected graph")
    if bipartition(g) is not None:
        raise BipartiteGraph("use the bipartite facet description instead")


def _has_odd_cycle(g: LabeledGraph, comp) -> bool:
    return bipartition(induced_subgraph(g, comp)) is None


def _independent_sets(g: LabeledGraph):
    """Nonempty independent sets, enumerated over the sorted vertex order."""
    verts = g.vertices
    n = len(verts)

    def grow(start: int, current: frozenset):
        for i in range(start, n):
            v = verts[i]
            if any(g.has_edge(v, u) for u in current):
                continue
            nxt = current | {v}
            yield nxt
            yield from grow(i + 1, nxt)

    yield from grow(0, frozenset())


def _crossing_connected(g: LabeledGraph, t, nt) -> bool:
    """The bipartite graph on t and nt with only crossing edges is connected."""
    both = t | nt
    if not both:
        return False
    start = next(iter(t))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        in_t = v in t
        for w in g.neighbors(v):
            if w in seen or w not in both:
                continue
            if in_t == (w in t):
                continue  # edges inside nt are not part of the crossing graph
            seen.add(w)
            stack.append(w)
    return seen == both


def _neighborhood_form(g: LabeledGraph, t, label: str) -> LinearForm:
    nt = frozenset().union(*(g.neighbors(v) for v in t))
    coeffs = {v: 1 for v in nt}
    for v in t:
        coeffs[v] = coeffs.get(v, 0) - 1
    return LinearForm(tuple(sorted(coeffs.items())), False, label)


def inequality_system(g: LabeledGraph) -> InequalitySystem:
    """Facet-level inequality description of the edge cone of g."""
    if not is_connected(g):
        raise Disconnected("edge cone description needs a connected graph")
    parts = bipartition(g)
    forms: list[LinearForm] = []
    if parts is None:
        for v in sorted(regular_vertices(g)):
            forms.append(LinearForm(((v, 1),), False, f"vertex:{v}"))
        for fs in fundamental_sets(g):
            forms.append(_neighborhood_form(g, fs.t, "T:" + ",".join(sorted(fs.t))))
        return InequalitySystem(g, forms)
    v1, v2 = parts
    balance = {v: 1 for v in v1}
    balance.update({v: -1 for v in v2})
    forms.append(LinearForm(tuple(sorted(balance.items())), True, "balance:V1-V2"))
    for v in g.vertices:
        rest = set(g.vertices) - {v}
        if is_connected(induced_subgraph(g, rest)):
            forms.append(LinearForm(((v, 1),), False, f"vertex:{v}"))
    for t in _proper_subsets(sorted(v1)):
        tset = frozenset(t)
        nt = frozenset().union(*(g.neighbors(v) for v in tset))
        inside = tset | nt
        outside = set(g.vertices) - inside
        if not is_connected(induced_subgraph(g, inside)):
            continue
        if not outside or not is_connected(induced_subgraph(g, outside)):
            continue
        forms.append(_neighborhood_form(g, tset, "T:" + ",".join(sorted(tset))))
    return InequalitySystem(g, forms)


def _proper_subsets(items):
    from itertools import combinations

    for size in range(1, len(items)):
        yield from combinations(items, size)


def cone_contains(sys: InequalitySystem, d) -> bool:
    """Membership of a multidegree (or mapping) in the closed edge cone."""
    return sys.contains_vec(sys.vector(d))


def relint_contains(sys: InequalitySystem, d) -> bool:
    """Membership in the relative interior of the edge cone."""
    return sys.relint_contains_vec(sys.vector(d))


def lattice_contains(g: LabeledGraph, d) -> bool:
    """Membership of d in the group generated by the edge degrees.

    For a connected non-bipartite graph this group is the even-total-degree
    sublattice; for a connected bipartite graph it is cut out by the balance
    equation, which the inequality system already enforces.
    """
    if bipartition(g) is not None:
        return True
    return sum(d.values()) % 2 == 0


def semigroup_contains(g: LabeledGraph, sys: InequalitySystem, d) -> bool:
    """Membership in the edge semigroup of a normal (odd-cycle) graph.

    By normality the semigroup equals cone intersect edge lattice, so no
    search is needed.
    """
    return lattice_contains(g, d) and cone_contains(sys, d)


def minimal_interior_vectors(g: LabeledGraph, sys: InequalitySystem | None = None) -> frozenset:
    """All minimal lattice vectors in the relative interior of the edge cone.

    A relative-interior lattice point is minimal when it is not the sum of a
    relative-interior lattice point and a nonzero semigroup element.  The
    search box [1, D_G] per coordinate is justified for the supported
    families, whose generators all divide D_G; interior points are strictly
    positive everywhere because no coordinate vanishes on the whole cone.
    """
    if isinstance(recognize(g).spec, Custom):
        raise UnsupportedFamily("no verified search box for this graph")
    if sys is None:
        sys = inequality_system(g)
    d_top = big_d(g)
    order = g.vertices
    bip = bipartition(g) is not None
    ranges = [range(1, d_top[v] + 1) for v in order]
    interior = []
    for vec in product(*ranges):
        if not bip and sum(vec) % 2:
            continue
        if sys.relint_contains_vec(vec):
            interior.append(vec)
    minimal = []
    for vec in interior:
        decomposable = False
        for other in interior:
            if other is vec or any(o > x for o, x in zip(other, vec)):
                continue
            diff = tuple(x - o for x, o in zip(vec, other))
            if any(diff) and sys.contains_vec(diff):
                decomposable = True
                break
        if not decomposable:
            minimal.append(vec)
    return frozenset(
        Multidegree({v: x for v, x in zip(order, vec) if x}) for vec in minimal
    )


# ---------------------------------------------------------------------------
# hard-coded facet list for even multi-path graphs, used as a cross-check


def even_multipath_facet_sets(g: LabeledGraph) -> list[frozenset]:
    """The seven families of facet-defining subsets for an even multi-path graph.

    Chains are the internal vertex lists of the paths from one apex to the
    other; the sets consist of odd-position vertices (prefixes, suffixes,
    full columns minus one path with optional prefix/suffix, and middles).
    """
    rec = recognize(g)
    chains = rec.data["paths"]
    if any((len(c) + 1) % 2 for c in chains):
        raise UnsupportedFamily("facet list applies to even multi-path graphs only")
    odd_cols = [tuple(c[0::2]) for c in chains]
    halves = [len(col) for col in odd_cols]
    m = len(chains)
    sets: set[frozenset] = set()

    def all_prefix_choices(indices, proper_only):
        # every way to pick a nonempty prefix per chosen path
        choice_lists = []
        for p in indices:
            top = halves[p] - 1 if proper_only else halves[p]
            choice_lists.append([tuple(odd_cols[p][:k]) for k in range(1, top + 1)])
        return choice_lists

    from itertools import combinations

    for size in range(1, m + 1):
        for indices in combinations(range(m), size):
            for pick in product(*all_prefix_choices(indices, proper_only=True)):
                sets.add(frozenset(v for block in pick for v in block))
            suffix_lists = []
            for p in indices:
                suffix_lists.append([tuple(odd_cols[p][k - 1:]) for k in range(2, halves[p] + 1)])
            for pick in product(*suffix_lists):
                sets.add(frozenset(v for block in pick for v in block))
    for p in range(m):
        rest = frozenset(v for j in range(m) if j != p for v in odd_cols[j])
        sets.add(rest)
        for f in range(1, halves[p]):
            sets.add(rest | set(odd_cols[p][:f]))
        for k in range(2, halves[p] + 1):
            sets.add(rest | set(odd_cols[p][k - 1:]))
        for f in range(1, halves[p]):
            for k in range(f + 2, halves[p] + 1):
                sets.add(rest | set(odd_cols[p][:f]) | set(odd_cols[p][k - 1:]))
    for j in range(m):
        for f in range(2, halves[j]):
            for k in range(f, halves[j]):
                sets.add(frozenset(odd_cols[j][f - 1:k]))
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def even_multipath_system(g: LabeledGraph) -> InequalitySystem:
    """Inequality system built from the hard-coded facet list (i)-(vii)."""
    parts = bipartition(g)
    if parts is None:
        raise UnsupportedFamily("even multi-path graphs are bipartite")
    v1c, v2c = parts
    balance = {v: 1 for v in v1c}
    balance.update({v: -1 for v in v2c})
    forms = [LinearForm(tuple(sorted(balance.items())), True, "balance:V1-V2")]
    for v in g.vertices:
        forms.append(LinearForm(((v, 1),), False, f"vertex:{v}"))
    for t in even_multipath_facet_sets(g):
        forms.append(_neighborhood_form(g, t, "T:" + ",".join(sorted(t))))
    return InequalitySystem(g, forms)
