import pytest

from edgebetti.graphs import (
    CompactA,
    CompactB,
    CompactC,
    CompleteBipartite2d,
    MultiPath,
    OneEar,
    TwoEar,
    build_family,
)

# the verification suite of family instances exercised end to end
SUITE = [
    CompactA((1, 1)),
    CompactA((1, 1, 1)),
    CompactA((2, 1)),
    CompactB((1,), (1,), 0),
    CompactB((1,), (1,), 2),
    CompactC((1,), (1,), (1,)),
    CompactC((1,), (1,), (1, 1)),
    MultiPath((2, 2)),
    MultiPath((2, 2, 2)),
    MultiPath((3, 3)),
    MultiPath((3, 3, 3)),
    MultiPath((2, 2, 3, 3)),
    TwoEar(1),
    TwoEar(2),
    TwoEar(3),
    OneEar(2),
    OneEar(3),
    CompleteBipartite2d(3),
    CompleteBipartite2d(4),
]

SUITE_IDS = [
    "A11", "A111", "A21", "B0_1_1", "B2_1_1", "C111", "C1111",
    "MP22", "MP222", "MP33", "MP333", "MP2233",
    "TE1", "TE2", "TE3", "OE2", "OE3", "K2D3", "K2D4",
]


@pytest.fixture(scope="session")
def suite_graphs():
    return {ident: build_family(spec) for ident, spec in zip(SUITE_IDS, SUITE)}
