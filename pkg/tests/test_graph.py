import pytest

from kyfanli import families as fam
from kyfanli.graph import (
    Graph,
    GraphError,
    complement,
    components,
    conjugate_degree_sequence,
    cyclomatic,
    degree_sequence,
    first_zagreb,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_threshold,
    is_threshold_bruteforce,
    is_tree,
    join,
    threshold_creation_sequence,
    triangle_count,
)


def test_construction_normalizes_edges():
    G = Graph(3, [(1, 0), (2, 1)])
    assert G.edges == ((0, 1), (1, 2))
    assert G.degrees() == [1, 2, 1]
    assert G == Graph(3, [(0, 1), (1, 2)])
    assert hash(G) == hash(Graph(3, [(1, 2), (0, 1)]))


@pytest.mark.parametrize("n,edges", [(2, [(0, 0)]), (2, [(0, 2)]), (3, [(0, 1), (1, 0)]), (-1, [])])
def test_invalid_input(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


def test_immutable():
    G = Graph(2, [(0, 1)])
    with pytest.raises(AttributeError):
        G.n = 3


def test_empty_vertex_set_allowed():
    G = Graph(0)
    assert G.m == 0 and not is_connected(G)


def test_laplacian_rows_sum_to_zero():
    L = fam.cycle(7).laplacian()
    assert abs(L.sum(axis=1)).max() == 0


def test_complement_and_join():
    P = fam.path(4)
    C = complement(P)
    assert C.m == 6 - 3
    J = join(fam.complete(2), Graph(3))
    assert J == fam.complete_split(2, 5)
    assert J.m == 1 + 6


def test_components_and_cyclomatic():
    G = fam.union(fam.cycle(3), fam.path(2), Graph(1))
    assert len(set(components(G))) == 3
    assert cyclomatic(G) == 1
    assert not is_connected(G)
    assert is_tree(fam.star(5))


def test_bipartite_and_triangles():
    assert is_bipartite(fam.cycle(6))
    assert not is_bipartite(fam.cycle(5))
    assert triangle_count(fam.complete(5)) == 10


def test_conjugate_degree_sequence():
    assert conjugate_degree_sequence([3, 2, 2, 1]) == (4, 3, 1, 0)
    assert degree_sequence(fam.star(4)) == (3, 1, 1, 1)
    assert first_zagreb(fam.star(4)) == 9 + 3


def test_threshold_recognition_matches_bruteforce():
    from itertools import combinations

    pairs = list(combinations(range(5), 2))
    for mask in range(0, 1 << len(pairs), 7):
        G = Graph(5, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
        assert is_threshold(G) == is_threshold_bruteforce(G)


def test_threshold_creation_sequence_roundtrip():
    G = fam.threshold_from_sequence("0101101")
    seq = threshold_creation_sequence(G)
    assert seq is not None
    H = fam.threshold_from_sequence(seq)
    from kyfanli.iso import isomorphism

    assert isomorphism(G, H) is not None
    assert threshold_creation_sequence(fam.path(4)) is None


def test_induced_subgraph():
    H = induced_subgraph(fam.complete(5), [0, 2, 4])
    assert H == fam.complete(3)
