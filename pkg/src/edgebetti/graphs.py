"""Graph families, recognition, and cycle structure.

Builds the three graph families studied here (compact graphs with no even
cycle, multi-path graphs, and the two-ear / one-ear graphs), enumerates
chordless cycles, checks the odd-cycle condition, and recognizes family
membership of arbitrary labeled graphs together with a role assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import (
    Disconnected,
    InvalidSpec,
    OddCycleConditionViolated,
    PathLengthOne,
    UnknownVertex,
    UnsupportedFamily,
)


# ---------------------------------------------------------------------------
# family specifications


@dataclass(frozen=True)
class CompactA:
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if len(self.p) < 2:
            raise InvalidSpec("compact type 1 needs at least two cycles")
        if any(x < 1 for x in self.p):
            raise InvalidSpec("cycle half-lengths must be positive")


@dataclass(frozen=True)
class CompactB:
    p: tuple[int, ...]
    q: tuple[int, ...]
    s: int = 0

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        if not self.p or not self.q:
            raise InvalidSpec("compact type 2 needs cycles at both big vertices")
        if any(x < 1 for x in self.p + self.q):
            raise InvalidSpec("cycle half-lengths must be positive")
        if self.s < 0 or self.s % 2 == 1:
            raise InvalidSpec(f"connecting path length must be even and >= 0, got {self.s}")


@dataclass(frozen=True)
class CompactC:
    p: tuple[int, ...]
    q: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if not (self.p and self.q and self.r):
            raise InvalidSpec("compact type 3 needs cycles at all three big vertices")
        if any(x < 1 for x in self.p + self.q + self.r):
            raise InvalidSpec("cycle half-lengths must be positive")


@dataclass(frozen=True)
class MultiPath:
    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if len(self.lengths) < 2:
            raise InvalidSpec("multi-path graph needs at least two paths")
        if any(x < 1 for x in self.lengths):
            raise InvalidSpec("path lengths must be positive")
        if any(x == 1 for x in self.lengths):
            raise PathLengthOne("paths of length one are not supported")


@dataclass(frozen=True)
class TwoEar:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidSpec("two-ear type must be >= 1")


@dataclass(frozen=True)
class OneEar:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidSpec("one-ear type must be >= 1")


@dataclass(frozen=True)
class CompleteBipartite2d:
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise InvalidSpec("K_{2,d} needs d >= 2")


@dataclass(frozen=True)
class Custom:
    edges: tuple[tuple[str, str], ...]


FamilySpec = (
    CompactA | CompactB | CompactC | MultiPath | TwoEar | OneEar | CompleteBipartite2d | Custom
)


# ---------------------------------------------------------------------------
# labeled graphs


class LabeledGraph:
    """Simple undirected graph with canonical vertex names and role tags."""

    __slots__ = ("vertices", "edges", "roles", "_adj", "_cycles")

    def __init__(self, edges, vertices=(), roles=None):
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidSpec(f"loop at {u!r}")
            norm.add((u, v) if u <= v else (v, u))
        verts = set(vertices)
        for u, v in norm:
            verts.add(u)
            verts.add(v)
        self.vertices: tuple[str, ...] = tuple(sorted(verts))
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(norm))
        self.roles: dict[str, str] = dict(roles or {})
        adj: dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._cycles = None

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a vertex") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def __eq__(self, other) -> bool:
        if isinstance(other, LabeledGraph):
            return self.vertices == other.vertices and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"LabeledGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class Cycle:
    """Chordless cycle, stored with minimal vertex first and fixed direction."""

    vertices: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edges(self):
        vs = self.vertices
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            yield (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------------------
# basic graph algorithms


def is_connected(g: LabeledGraph) -> bool:
    if not g.vertices:
        return True
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def bipartition(g: LabeledGraph):
    """Return (V1, V2) for a bipartite graph, else None.

    V1 is the class containing the smallest vertex of each component.
    """
    color: dict[str, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    one = frozenset(v for v, c in color.items() if c == 0)
    two = frozenset(v for v, c in color.items() if c == 1)
    return one, two


def connected_components(g: LabeledGraph) -> list[frozenset]:
    comps = []
    seen: set = set()
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            for w in g.neighbors(stack.pop()):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def blocks(g: LabeledGraph) -> list[tuple[tuple[str, str], ...]]:
    """Biconnected components as edge tuples (bridges are single edges)."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    out: list[tuple[tuple[str, str], ...]] = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        stack = [(root, None, iter(sorted(g.neighbors(root))))]
        index[root] = low[root] = counter
        counter += 1
        estack: list[tuple[str, str]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    parent = None  # skip the tree edge once; parallel edges impossible
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= index[u]:
                    block = []
                    while estack:
                        e = estack.pop()
                        block.append(e if e[0] <= e[1] else (e[1], e[0]))
                        if e == (u, v):
                            break
                    out.append(tuple(sorted(block)))
    return out


def has_even_cycle(g: LabeledGraph) -> bool:
    """True when some cycle of g (not necessarily induced) has even length.

    A 2-connected graph without even cycles is a single odd cycle, so it
    suffices to inspect the blocks.
    """
    for block in blocks(g):
        if len(block) <= 1:
            continue
        verts = {v for e in block for v in e}
        if len(block) != len(verts) or len(block) % 2 == 0:
            return True
    return False


def minimal_cycles(g: LabeledGraph) -> list[Cycle]:
    """All chordless cycles of g, each once up to rotation and reflection.

    DFS over vertex-ordered paths: the path starts at the minimal vertex of
    the cycle and may only be extended by larger vertices with no chord back
    into the path interior.
    """
    if g._cycles is not None:
        return list(g._cycles)
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = {v: sorted(g.neighbors(v), key=idx.__getitem__) for v in g.vertices}
    cycles: list[Cycle] = []

    def extend(path: list, members: set):
        r = path[0]
        last = path[-1]
        interior = path[1:-1]
        for w in adj[last]:
            if idx[w] <= idx[r] or w in members:
                continue
            if any(g.has_edge(w, p) for p in interior):
                continue
            if g.has_edge(w, r):
                if len(path) >= 2 and idx[path[1]] < idx[w]:
                    cycles.append(Cycle(tuple(path) + (w,)))
            else:
                members.add(w)
                extend(path + [w], members)
                members.remove(w)

    for r in g.vertices:
        for a in adj[r]:
            if idx[a] > idx[r]:
                extend([r, a], {r, a})
    g._cycles = tuple(cycles)
    return list(cycles)


def odd_cycle_condition(g: LabeledGraph) -> bool:
    """Any two vertex-disjoint odd cycles are joined by an edge.

    Checking chordless odd cycles suffices: shortcutting a chord of an odd
    cycle leaves an odd chordless cycle on a subset of its vertices, which
    would still witness a violation.
    """
    if not is_connected(g):
        raise Disconnected("odd-cycle condition is defined for connected graphs")
    odd = [c for c in minimal_cycles(g) if c.odd]
    for i, c1 in enumerate(odd):
        s1 = c1.vertex_set()
        for c2 in odd[i + 1:]:
            s2 = c2.vertex_set()
            if s1 & s2:
                continue
            if not any(g.has_edge(u, v) for u in s1 for v in s2):
                return False
    return True


def is_compact(g: LabeledGraph) -> bool:
    """Connected, minimum degree two, no even cycles, odd-cycle condition."""
    if not g.vertices or not is_connected(g):
        return False
    if any(g.degree(v) < 2 for v in g.vertices):
        return False
    if has_even_cycle(g):
        return False
    return odd_cycle_condition(g)


def pdim(g: LabeledGraph) -> int:
    """Projective dimension of the edge ring over the edge polynomial ring."""
    if not is_connected(g):
        raise Disconnected("projective dimension formula needs a connected graph")
    if not odd_cycle_condition(g):
        raise OddCycleConditionViolated("edge ring is not normal")
    e, n = len(g.edges), len(g.vertices)
    return e - n + 1 if bipartition(g) is not None else e - n


def induced_subgraph(g: LabeledGraph, w) -> LabeledGraph:
    keep = set(w)
    for v in keep:
        if v not in g._adj:
            raise UnknownVertex(f"{v!r} is not a vertex")
    edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    roles = {v: tag for v, tag in g.roles.items() if v in keep}
    return LabeledGraph(edges, vertices=keep, roles=roles)


# ---------------------------------------------------------------------------
# family construction


def build_family(spec: FamilySpec) -> LabeledGraph:
    """Build the labeled graph of a family spec with canonical vertex names."""
    if isinstance(spec, CompactA):
        edges, roles = [], {"u": "big"}
        for i, p in enumerate(spec.p, start=1):
            ring = [f"u{i}_{j}" for j in range(1, 2 * p + 1)]
            edges += _path_edges(["u"] + ring + ["u"])
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, CompactB):
        edges, roles = [("u", "v")], {"u": "big", "v": "big"}
        for i, p in enumerate(spec.p, start=1):
            edges += _path_edges(["u"] + [f"u{i}_{j}" for j in range(1, 2 * p + 1)] + ["u"])
        for i, q in enumerate(spec.q, start=1):
            edges += _path_edges(["v"] + [f"v{i}_{j}" for j in range(1, 2 * q + 1)] + ["v"])
        if spec.s:
            mid = [f"w{j}" for j in range(1, spec.s)]
            edges += _path_edges(["u"] + mid + ["v"])
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, CompactC):
        edges = [("u", "v"), ("v", "w"), ("u", "w")]
        roles = {"u": "big", "v": "big", "w": "big"}
        for big, letter, vec in (("u", "u", spec.p), ("v", "v", spec.q), ("w", "w", spec.r)):
            for i, p in enumerate(vec, start=1):
                ring = [f"{letter}{i}_{j}" for j in range(1, 2 * p + 1)]
                edges += _path_edges([big] + ring + [big])
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, MultiPath):
        edges, roles = [], {"v1": "apex", "v2": "apex"}
        for i, length in enumerate(spec.lengths, start=1):
            inner = [f"u{i}_{j}" for j in range(1, length)]
            edges += _path_edges(["v1"] + inner + ["v2"])
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, CompleteBipartite2d):
        edges = []
        for i in range(1, spec.d + 1):
            edges += [("v1", f"u{i}_1"), (f"u{i}_1", "v2")]
        return LabeledGraph(edges, roles={"v1": "apex", "v2": "apex"})
    if isinstance(spec, TwoEar):
        edges = [("v1", "x1"), ("v1", "x2"), ("x1", "x2"),
                 ("v2", "y1"), ("v2", "y2"), ("y1", "y2"), ("x1", "y1")]
        for i in range(1, spec.m):
            edges += [("v1", f"u{i}"), ("v2", f"u{i}")]
        roles = {"v1": "apex", "v2": "apex", "x1": "ear", "x2": "ear",
                 "y1": "ear", "y2": "ear"}
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, OneEar):
        edges = [("v1", "x1"), ("v2", "y1"), ("v2", "y2"), ("y1", "y2"), ("x1", "y1")]
        for i in range(1, spec.m):
            edges += [("v1", f"u{i}"), ("v2", f"u{i}")]
        roles = {"v1": "apex", "v2": "apex", "x1": "ear", "y1": "ear", "y2": "ear"}
        return LabeledGraph(edges, roles=roles)
    if isinstance(spec, Custom):
        return LabeledGraph(spec.edges)
    raise InvalidSpec(f"unknown spec {spec!r}")


def _path_edges(names: list) -> list:
    return [(names[i], names[i + 1]) for i in range(len(names) - 1)]


# ---------------------------------------------------------------------------
# recognition


@dataclass
class Recognition:
    """Family spec plus the role assignment that witnesses it."""

    spec: FamilySpec
    roles: dict[str, str] = field(default_factory=dict)
    data: dict = field(default_factory=dict)


def classify(g: LabeledGraph) -> FamilySpec:
    """Recognize the family of g, falling back to Custom.

    A graph that is both a two-ear graph of type 1 and a compact graph of
    type 2 (the graphs coincide for m = 1) is reported as compact.
    """
    return recognize(g).spec


def recognize(g: LabeledGraph) -> Recognition:
    if g.vertices and is_connected(g):
        for attempt in (_recognize_multipath, _recognize_two_ear, _recognize_one_ear,
                        _recognize_compact):
            rec = attempt(g)
            if rec is not None:
                return rec
    return Recognition(Custom(g.edges))


def _recognize_multipath(g: LabeledGraph):
    n = len(g.vertices)
    if n < 3:
        return None
    degs = {v: g.degree(v) for v in g.vertices}
    if all(d == 2 for d in degs.values()):
        # single cycle; split it into two paths at antipodal-ish vertices
        if n < 4:
            return None
        v1 = g.vertices[0]
        order = [v1, min(g.neighbors(v1))]
        while len(order) < n:
            nxt = [w for w in g.neighbors(order[-1]) if w != order[-2]]
            order.append(nxt[0])
        half = n // 2
        v2 = order[half]
        chains = [order[1:half], list(reversed(order[half + 1:]))]
        lengths = (half, n - half)
        spec = MultiPath(tuple(sorted(lengths)))
        paths = sorted(chains, key=len)
        return Recognition(spec, {"v1": v1, "v2": v2}, {"paths": paths})
    apexes = sorted(v for v, d in degs.items() if d >= 3)
    if len(apexes) != 2:
        return None
    v1, v2 = apexes
    if g.has_edge(v1, v2):
        return None  # a length-one path is outside the supported specs
    if any(degs[v] != 2 for v in g.vertices if v not in apexes):
        return None
    paths = []
    for start in sorted(g.neighbors(v1)):
        chain = [start]
        prev, cur = v1, start
        while cur != v2:
            nxt = [w for w in g.neighbors(cur) if w != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            if cur in (v1,):
                return None
            if cur != v2:
                chain.append(cur)
        paths.append(chain)
    if len(paths) != degs[v1] or degs[v1] != degs[v2]:
        return None
    if sum(len(c) for c in paths) + 2 != n:
        return None
    lengths = tuple(sorted(len(c) + 1 for c in paths))
    paths = sorted(paths, key=len)
    if len(lengths) >= 3 and all(x == 2 for x in lengths):
        spec: FamilySpec = CompleteBipartite2d(len(lengths))
    else:
        spec = MultiPath(lengths)
    return Recognition(spec, {"v1": v1, "v2": v2}, {"paths": paths})


def _recognize_two_ear(g: LabeledGraph):
    n = len(g.vertices)
    if n < 7 or len(g.edges) != 2 * n - 5:
        return None  # m = 1 coincides with a compact type-2 graph and is reported there
    deg3 = [v for v in g.vertices if g.degree(v) == 3]
    for x1 in sorted(deg3):
        for y1 in sorted(g.neighbors(x1)):
            if g.degree(y1) != 3:
                continue
            got = _match_two_ear(g, x1, y1)
            if got is not None:
                return got
    return None


def _match_two_ear(g: LabeledGraph, x1, y1):
    xrest = sorted(g.neighbors(x1) - {y1})
    yrest = sorted(g.neighbors(y1) - {x1})
    if len(xrest) != 2 or len(yrest) != 2:
        return None
    for x2 in xrest:
        v1 = (set(xrest) - {x2}).pop()
        if not (g.degree(x2) == 2 and g.neighbors(x2) == frozenset({x1, v1})):
            continue
        for y2 in yrest:
            v2 = (set(yrest) - {y2}).pop()
            if not (g.degree(y2) == 2 and g.neighbors(y2) == frozenset({y1, v2})):
                continue
            named = {x1, y1, x2, y2, v1, v2}
            if len(named) != 6 or g.has_edge(v1, v2):
                continue
            us = sorted(set(g.vertices) - named)
            if any(g.neighbors(u) != frozenset({v1, v2}) for u in us):
                continue
            if g.neighbors(v1) != frozenset({x1, x2, *us}):
                continue
            if g.neighbors(v2) != frozenset({y1, y2, *us}):
                continue
            roles = {"v1": v1, "v2": v2, "x1": x1, "x2": x2, "y1": y1, "y2": y2}
            return Recognition(TwoEar(len(us) + 1), roles, {"u_list": us})
    return None


def _recognize_one_ear(g: LabeledGraph):
    n = len(g.vertices)
    if n < 5 or len(g.edges) != 2 * n - 5:
        return None
    for y1 in sorted(v for v in g.vertices if g.degree(v) == 3):
        for x1 in sorted(g.neighbors(y1)):
            if g.degree(x1) != 2:
                continue
            v1 = next(iter(g.neighbors(x1) - {y1}))
            if v1 == y1 or g.has_edge(v1, y1):
                continue
            for y2 in sorted(g.neighbors(y1) - {x1}):
                if g.degree(y2) != 2:
                    continue
                v2 = next(iter(g.neighbors(y2) - {y1}))
                if v2 not in g.neighbors(y1) or v2 in (v1, x1):
                    continue
                named = {x1, y1, y2, v1, v2}
                if len(named) != 5 or g.has_edge(v1, v2):
                    continue
                us = sorted(set(g.vertices) - named)
                if any(g.neighbors(u) != frozenset({v1, v2}) for u in us):
                    continue
                if g.neighbors(v1) != frozenset({x1, *us}):
                    continue
                if g.neighbors(v2) != frozenset({y1, y2, *us}):
                    continue
                roles = {"v1": v1, "v2": v2, "x1": x1, "y1": y1, "y2": y2}
                return Recognition(OneEar(len(us) + 1), roles, {"u_list": us})
    return None


def _recognize_compact(g: LabeledGraph):
    if not is_compact(g):
        return None
    cycles = minimal_cycles(g)
    if len(cycles) < 2:
        return None  # a single odd cycle has no family spec of its own
    big = sorted(v for v in g.vertices if g.degree(v) >= 3)
    halves = lambda cs: tuple(sorted((c.length - 1) // 2 for c in cs))
    if len(big) == 1:
        u = big[0]
        if any(u not in c.vertex_set() for c in cycles):
            return None
        return Recognition(CompactA(halves(cycles)), {"u": u}, {"u_cycles": cycles})
    if len(big) == 2:
        u, v = big
        if not g.has_edge(u, v):
            return None
        ucs = [c for c in cycles if u in c.vertex_set() and v not in c.vertex_set()]
        vcs = [c for c in cycles if v in c.vertex_set() and u not in c.vertex_set()]
        mid = [c for c in cycles if {u, v} <= c.vertex_set()]
        if not ucs or not vcs or len(mid) > 1 or len(ucs) + len(vcs) + len(mid) != len(cycles):
            return None
        s = mid[0].length - 1 if mid else 0
        if mid and (s < 2 or s % 2):
            return None
        data = {"u_cycles": ucs, "v_cycles": vcs, "mid_cycle": mid[0] if mid else None}
        return Recognition(CompactB(halves(ucs), halves(vcs), s), {"u": u, "v": v}, data)
    if len(big) == 3:
        u, v, w = big
        if not (g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)):
            return None
        tri = [c for c in cycles if c.vertex_set() == frozenset({u, v, w})]
        if len(tri) != 1:
            return None
        attach = {u: [], v: [], w: []}
        for c in cycles:
            if c is tri[0]:
                continue
            hits = [b for b in (u, v, w) if b in c.vertex_set()]
            if len(hits) != 1:
                return None
            attach[hits[0]].append(c)
        if not all(attach.values()):
            return None
        spec = CompactC(halves(attach[u]), halves(attach[v]), halves(attach[w]))
        data = {"u_cycles": attach[u], "v_cycles": attach[v], "w_cycles": attach[w],
                "big_cycle": tri[0]}
        return Recognition(spec, {"u": u, "v": v, "w": w}, data)
    return None


# ---------------------------------------------------------------------------
# census of family-shaped induced subgraphs


@dataclass
class CensusRecord:
    """Induced subgraphs contributing to the homological index i."""

    family: str
    i: int
    entries: list[tuple[str, LabeledGraph]]
    counts: dict[str, int]


def family_subgraph_census(g: LabeledGraph, i: int) -> CensusRecord:
    """Enumerate the induced subgraphs that carry the i-th Betti degrees.

    For a compact graph these are the compact induced subgraphs with i+1
    minimal cycles plus the type-3 ones with i+2 minimal cycles; for a
    multi-path graph the non-mixed path subsets of i+1 paths plus the
    true-mixed subsets of i+2 paths; for two-ear (and one-ear) graphs the
    smaller two-ear, one-ear and K_{2,i+1} subgraphs.
    """
    if i < 1:
        raise InvalidSpec("census is defined for homological index i >= 1")
    rec = recognize(g)
    spec = rec.spec
    if isinstance(spec, (CompactA, CompactB, CompactC)):
        return _compact_census(g, i)
    if isinstance(spec, (MultiPath, CompleteBipartite2d)):
        return _multipath_census(g, rec, i)
    if isinstance(spec, TwoEar):
        return _ear_census(g, rec, i, two_ear=True)
    if isinstance(spec, OneEar):
        return _ear_census(g, rec, i, two_ear=False)
    raise UnsupportedFamily(f"no census for {type(spec).__name__}")


def _compact_census(g: LabeledGraph, i: int) -> CensusRecord:
    from itertools import combinations

    cycles = minimal_cycles(g)
    entries: list[tuple[str, LabeledGraph]] = []
    for size, kind in ((i + 1, "compact"), (i + 2, "type3")):
        for subset in combinations(cycles, size):
            verts = frozenset().union(*(c.vertex_set() for c in subset))
            h = induced_subgraph(g, verts)
            if not is_compact(h) or len(minimal_cycles(h)) != size:
                continue
            if kind == "type3":
                if sum(1 for v in h.vertices if h.degree(v) >= 3) != 3:
                    continue
            entries.append((kind, h))
    counts = {"compact": sum(1 for k, _ in entries if k == "compact"),
              "type3": sum(1 for k, _ in entries if k == "type3")}
    return CensusRecord("compact", i, entries, counts)


def _multipath_census(g: LabeledGraph, rec: Recognition, i: int) -> CensusRecord:
    from itertools import combinations

    v1, v2 = rec.roles["v1"], rec.roles["v2"]
    paths = rec.data["paths"]
    evens = [c for c in paths if (len(c) + 1) % 2 == 0]
    odds = [c for c in paths if (len(c) + 1) % 2 == 1]
    entries: list[tuple[str, LabeledGraph]] = []

    def subgraph(chains):
        verts = {v1, v2}.union(*[set(c) for c in chains]) if chains else {v1, v2}
        return induced_subgraph(g, verts)

    for chains in combinations(evens, i + 1):
        entries.append(("non_mixed", subgraph(chains)))
    for chains in combinations(odds, i + 1):
        entries.append(("non_mixed", subgraph(chains)))
    for je in range(2, i + 1):
        jo = i + 2 - je
        if jo < 2:
            continue
        for echains in combinations(evens, je):
            for ochains in combinations(odds, jo):
                entries.append(("true_mixed", subgraph(echains + ochains)))
    counts = {"non_mixed": sum(1 for k, _ in entries if k == "non_mixed"),
              "true_mixed": sum(1 for k, _ in entries if k == "true_mixed")}
    return CensusRecord("multipath", i, entries, counts)


def _ear_census(g: LabeledGraph, rec: Recognition, i: int, two_ear: bool) -> CensusRecord:
    from itertools import combinations

    roles = rec.roles
    us = rec.data["u_list"]
    m = len(us) + 1
    v1, v2 = roles["v1"], roles["v2"]
    entries: list[tuple[str, LabeledGraph]] = []
    ear_x = [roles["x1"], roles.get("x2")] if two_ear else [roles["x1"]]
    ear_y = [roles["y1"], roles["y2"]]

    if two_ear:
        for subset in combinations(us, i - 1):
            verts = {v1, v2, *ear_x, *ear_y, *subset}
            entries.append(("two_ear", induced_subgraph(g, verts)))
        drops = [roles["x2"], roles["y2"]]
    else:
        drops = []
    one_ear_bases = []
    if two_ear:
        for dropped in drops:
            one_ear_bases.append({v1, v2, *ear_x, *ear_y} - {dropped})
    else:
        one_ear_bases.append({v1, v2, roles["x1"], roles["y1"], roles["y2"]})
    for base in one_ear_bases:
        for subset in combinations(us, i):
            entries.append(("one_ear", induced_subgraph(g, base | set(subset))))
    for subset in combinations(us, i + 1):
        entries.append(("k2d", induced_subgraph(g, {v1, v2, *subset})))

    counts = {"two_ear": comb(m - 1, i - 1) if two_ear else 0,
              "one_ear": (2 if two_ear else 1) * comb(m - 1, i),
              "k2d": comb(m - 1, i + 1)}
    assert counts["two_ear"] == sum(1 for k, _ in entries if k == "two_ear")
    assert counts["one_ear"] == sum(1 for k, _ in entries if k == "one_ear")
    assert counts["k2d"] == sum(1 for k, _ in entries if k == "k2d")
    return CensusRecord("two_ear" if two_ear else "one_ear", i, entries, counts)
