import io

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kyfanli.graph import Graph
from kyfanli.graph6 import Graph6Error, decode, encode, read_graph6_lines, write_graph6_lines


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if not pairs:
        return Graph(n)
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_roundtrip(G):
    assert decode(encode(G)) == G


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=40))
def test_encoding_matches_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    ref = nx.to_graph6_bytes(H, header=False).decode().strip()
    assert encode(G) == ref


def test_large_n_prefix():
    G = Graph(63, [(0, 62)])
    s = encode(G)
    assert s[0] == "~"
    assert decode(s) == G


def test_header_is_accepted():
    assert decode(">>graph6<<A_") == Graph(2, [(0, 1)])


@pytest.mark.parametrize("bad", ["", "A_x", "A", "B" + chr(20), "~"])
def test_errors_carry_offset(bad):
    with pytest.raises(Graph6Error) as exc:
        decode(bad)
    assert exc.value.offset >= 0


def test_file_io_skips_comments():
    text = "# header\nA_\n\nBw  # triangle\n"
    gs = list(read_graph6_lines(io.StringIO(text)))
    assert [G.m for G in gs] == [1, 3]
    out = io.StringIO()
    write_graph6_lines(gs, out)
    assert out.getvalue().split() == ["A_", "Bw"]
