"""Closed-form multi-graded and graded Betti tables for the graph families."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .canonical import n_set, second_top_type3
from .degrees import Multidegree
from .errors import InternalInconsistency, OddTotalDegree, UnsupportedFamily
from .graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    LabeledGraph,
    MultiPath,
    OneEar,
    TwoEar,
    family_subgraph_census,
    pdim,
    recognize,
)


class BettiTable:
    """Map (homological index, multidegree) -> rank, with beta_{0,0} = 1."""

    def __init__(self, entries=None):
        self.entries: dict[tuple[int, Multidegree], int] = dict(entries or {})
        self.entries.setdefault((0, Multidegree.zero()), 1)

    @property
    def pdim(self) -> int:
        return max(i for i, _ in self.entries)

    def rank(self, i: int, h: Multidegree) -> int:
        return self.entries.get((i, h), 0)

    def row(self, i: int) -> dict:
        return {h: r for (j, h), r in self.entries.items() if j == i}

    def row_total(self, i: int) -> int:
        return sum(r for (j, _), r in self.entries.items() if j == i)

    def total(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiTable):
            return self.entries == other.entries
        return NotImplemented

    def __repr__(self) -> str:
        return f"BettiTable(pdim={self.pdim}, {len(self.entries)} entries)"

    def to_json(self) -> dict:
        rows = []
        for i in range(self.pdim + 1):
            row = self.row(i)
            rows.append({
                "i": i,
                "entries": [
                    {"degree": h.to_json(), "monomial": h.monomial(), "rank": row[h]}
                    for h in sorted(row, key=lambda d: d.sort_key())
                ],
            })
        return {"pdim": self.pdim, "rows": rows}


@dataclass
class GradedBettiTable:
    """Map (i, j) -> rank where j is the edge-variable degree."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def rank(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row_total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def to_rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, r) for (i, j), r in sorted(self.entries.items())]


def betti_table(g: LabeledGraph) -> BettiTable:
    """Multi-graded Betti table of the edge ring of a family graph.

    Row i collects the top degrees of the census subgraphs for index i, at
    rank one, plus (for compact graphs) the second-top degrees of the type-3
    census subgraphs at ranks one and two.  Row sums are checked against the
    closed-form totals.
    """
    rec = recognize(g)
    if not isinstance(rec.spec, (CompactA, CompactB, CompactC, MultiPath,
                                 CompleteBipartite2d, TwoEar, OneEar)):
        raise UnsupportedFamily("no Betti formula outside the families")
    p = pdim(g)
    entries: dict[tuple[int, Multidegree], int] = {}

    def put(i, alpha, rank):
        key = (i, alpha)
        if key in entries:
            raise InternalInconsistency(
                f"degree {alpha.monomial()} hit twice in row {i}")
        entries[key] = rank

    for i in range(1, p + 1):
        census = family_subgraph_census(g, i)
        for kind, sub in census.entries:
            if kind == "type3":
                for alpha, rank in second_top_type3(sub).items():
                    put(i, alpha, rank)
            else:
                for alpha in n_set(sub).n_set:
                    put(i, alpha, 1)
    table = BettiTable(entries)
    for i in range(p + 1):
        want = total_betti(g, i)
        got = table.row_total(i)
        if got != want:
            raise InternalInconsistency(
                f"row {i} sums to {got}, closed form says {want}")
    return table


def total_betti(g: LabeledGraph, i: int) -> int:
    """Total i-th Betti number of the edge ring, by the closed forms."""
    if i == 0:
        return 1
    rec = recognize(g)
    spec = rec.spec
    if isinstance(spec, (CompactA, CompactB, CompactC)):
        from .graphs import minimal_cycles

        return i * comb(len(minimal_cycles(g)), i + 1)
    if isinstance(spec, (MultiPath, CompleteBipartite2d)):
        chains = rec.data["paths"]
        ne = sum(1 for c in chains if (len(c) + 1) % 2 == 0)
        no = len(chains) - ne
        if ne == 0 or no == 0:
            return i * comb(len(chains), i + 1)
        mixed = sum(
            comb(ne, j + 1) * comb(no, k + 1) * j * k
            for j in range(1, i)
            for k in (i - j,)
        )
        return mixed + i * (comb(ne, i + 1) + comb(no, i + 1))
    if isinstance(spec, TwoEar):
        return i * comb(spec.m + 1, i + 1)
    if isinstance(spec, OneEar):
        return i * comb(spec.m, i + 1)
    raise UnsupportedFamily("no closed-form totals outside the families")


def graded_table(bt: BettiTable) -> GradedBettiTable:
    """Fold a multi-graded table to the edge grading: beta_{i,j} over |h| = 2j."""
    out: dict[tuple[int, int], int] = {}
    for (i, h), rank in bt.entries.items():
        total = h.total()
        if total % 2:
            raise OddTotalDegree(f"degree {h.monomial()} has odd total {total}")
        key = (i, total // 2)
        out[key] = out.get(key, 0) + rank
    return GradedBettiTable(out)


def tensor_betti(a: BettiTable, b: BettiTable) -> BettiTable:
    """Betti table of a tensor product: convolution in (i, degree)."""
    entries: dict[tuple[int, Multidegree], int] = {}
    for (i, h), r in a.entries.items():
        for (j, k), s in b.entries.items():
            key = (i + j, h * k)
            entries[key] = entries.get(key, 0) + r * s
    return BettiTable(entries)


def cm_type(g: LabeledGraph) -> int:
    """Cohen-Macaulay type: the number of top Betti degrees."""
    return len(n_set(g).n_set)
