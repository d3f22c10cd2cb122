import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kyfanli import families as fam
from kyfanli.graph import Graph
from kyfanli.iso import dedup, invariant_key, is_isomorphic, isomorphism, wl_hash


@st.composite
def graph_and_perm(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(list(range(n))))
    return Graph(n, [p for p, b in zip(pairs, bits) if b]), list(perm)


@settings(max_examples=200, deadline=None)
@given(graph_and_perm())
def test_relabelled_graphs_are_isomorphic(gp):
    G, perm = gp
    H = G.relabel(perm)
    mapping = isomorphism(G, H)
    assert mapping is not None
    assert G.relabel(mapping) == H
    assert wl_hash(G) == wl_hash(H)
    assert invariant_key(G) == invariant_key(H)


@settings(max_examples=200, deadline=None)
@given(graph_and_perm(max_n=7), graph_and_perm(max_n=7))
def test_agrees_with_networkx(a, b):
    G, H = a[0], b[0]
    if G.n != H.n:
        return
    nG, nH = nx.Graph(), nx.Graph()
    nG.add_nodes_from(range(G.n))
    nH.add_nodes_from(range(H.n))
    nG.add_edges_from(G.edges)
    nH.add_edges_from(H.edges)
    assert is_isomorphic(G, H) == nx.is_isomorphic(nG, nH)


def test_regular_pair_separated():
    # C6 and two triangles share degrees and WL colours
    A, B = fam.cycle(6), fam.union(fam.cycle(3), fam.cycle(3))
    assert wl_hash(A) == wl_hash(B)
    assert isomorphism(A, B) is None


def test_cap():
    with pytest.raises(ValueError):
        isomorphism(fam.path(13), fam.path(13), max_n=12)


def test_dedup():
    gs = [fam.path(5), fam.path(5).relabel([4, 3, 2, 1, 0]), fam.star(5)]
    reps, exact = dedup(gs)
    assert len(reps) == 2 and exact
    reps, exact = dedup([fam.path(14), fam.path(14)], max_n=12)
    assert len(reps) == 1 and not exact
