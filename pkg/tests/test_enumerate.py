import networkx as nx
import pytest

from kyfanli.enumerate import (
    Budget,
    EnumSpec,
    EnumerationError,
    enum_bicyclic,
    enum_connected,
    enum_trees,
    enum_unicyclic,
    prufer_to_tree,
    sample_chunk,
    sample_class,
    tree_has_perfect_matching,
)
from kyfanli.graph import c_cyclic, is_tree
from kyfanli.iso import invariant_key

# A000055, A001429, A001435 (connected), A001349
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657}
BICYCLIC = {4: 1, 5: 5, 6: 19, 7: 67, 8: 236}
CONNECTED = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_counts(n):
    trees = list(enum_trees(n))
    assert len(trees) == TREES[n - 1]
    assert all(is_tree(T) for T in trees)


@pytest.mark.parametrize("n", range(1, 11))
def test_trees_match_networkx(n):
    ours = sorted(invariant_key(T) for T in enum_trees(n))
    ref = []
    for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
        from kyfanli.graph import Graph

        ref.append(invariant_key(Graph(n, list(t.edges()))))
    assert ours == sorted(ref)


@pytest.mark.parametrize("n", sorted(UNICYCLIC))
def test_unicyclic_counts(n):
    gs = list(enum_unicyclic(n))
    assert len(gs) == UNICYCLIC[n]
    assert all(c_cyclic(G) == 1 for G in gs)


@pytest.mark.parametrize("n", sorted(BICYCLIC))
def test_bicyclic_counts(n):
    gs = list(enum_bicyclic(n))
    assert len(gs) == BICYCLIC[n]
    assert all(c_cyclic(G) == 2 for G in gs)


def _atlas_connected(n):
    from kyfanli.graph import Graph

    return [Graph(n, list(g.edges())) for g in nx.graph_atlas_g() if g.number_of_nodes() == n
            and (n == 0 or nx.is_connected(g))]


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_matches_atlas(n):
    ours = list(enum_connected(n))
    assert len(ours) == CONNECTED[n - 1]
    ref = _atlas_connected(n)
    assert sorted(invariant_key(G) for G in ours) == sorted(invariant_key(G) for G in ref)


@pytest.mark.parametrize("n", range(3, 8))
def test_classes_agree_with_bruteforce(n):
    conn = list(enum_connected(n))
    assert len(list(enum_trees(n))) == sum(1 for G in conn if G.m == n - 1)
    assert len(list(enum_unicyclic(n))) == sum(1 for G in conn if G.m == n)
    if n >= 4:
        assert len(list(enum_bicyclic(n))) == sum(1 for G in conn if G.m == n + 1)


def test_connected_by_edge_count():
    assert sum(len(list(enum_connected(6, m))) for m in range(5, 16)) == 112


def test_limits():
    with pytest.raises(EnumerationError):
        list(enum_trees(17))
    with pytest.raises(EnumerationError):
        list(enum_connected(8))
    with pytest.raises(EnumerationError):
        EnumSpec("trees", 5, m=5)
    with pytest.raises(EnumerationError):
        EnumSpec("cubic", 5)


def test_hash_dedup_flag():
    assert EnumSpec("unicyclic", 13).exact is False
    assert EnumSpec("unicyclic", 10).exact is True
    assert EnumSpec("unicyclic", 10, dedup="hash").exact is False


def test_prufer():
    T = prufer_to_tree([3, 3, 3, 4], 6)
    assert is_tree(T) and T.degree(3) == 4


def test_samplers_are_seeded():
    a = [G.edges for G in sample_class("bicyclic", 12, 50, seed=7)]
    b = [G.edges for G in sample_class("bicyclic", 12, 50, seed=7)]
    assert a == b
    assert all(c_cyclic(G) == 2 for G in sample_class("bicyclic", 12, 50, seed=7))
    assert all(is_tree(G) for G in sample_class("trees", 9, 30, seed=1))
    c = [G.edges for G in sample_class("bicyclic", 12, 50, seed=8)]
    assert a != c


def test_sample_chunks_concatenate():
    stream = [G.edges for G in sample_class("trees", 10, 2500, seed=3)]
    parts = sample_chunk("trees", 10, 3, 0, 1000) + sample_chunk("trees", 10, 3, 2, 500)
    assert stream[:1000] + stream[2000:] == [G.edges for G in parts]


def test_perfect_matching():
    from kyfanli import families as fam

    assert tree_has_perfect_matching(fam.path(6))
    assert not tree_has_perfect_matching(fam.path(5))
    assert not tree_has_perfect_matching(fam.star(4))
    assert tree_has_perfect_matching(fam.double_star(1, 1))


def test_budget():
    b = Budget(max_graphs=3)
    assert list(b.take(range(10))) == [0, 1, 2]
    assert b.exhausted
    b = Budget(max_graphs=30)
    assert len(list(b.take(range(10)))) == 10 and not b.exhausted
