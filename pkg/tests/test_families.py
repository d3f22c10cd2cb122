import numpy as np
import pytest

from kyfanli import families as fam
from kyfanli.graph import c_cyclic, is_connected, is_threshold, is_tree
from kyfanli.iso import isomorphism
from kyfanli.spectra import li_metrics


def test_basic_sizes():
    assert fam.complete(5).m == 10
    assert fam.path(5).m == 4
    assert fam.cycle(5).m == 5
    assert fam.star(5).degrees()[0] == 4
    assert fam.complete_bipartite(2, 3).m == 6
    assert fam.complete_multipartite([2, 2, 2]).m == 12


@pytest.mark.parametrize("ctor,arg", [(fam.cycle, 2), (fam.complete, 0), (fam.balanced_double_star, 3)])
def test_parameter_checks(ctor, arg):
    with pytest.raises(ValueError):
        ctor(arg)


def test_double_star_labels():
    G = fam.double_star(2, 3)
    assert G.n == 7 and is_tree(G)
    assert sorted(G.neighbors(0)) == [1, 2, 3]
    assert sorted(G.neighbors(1)) == [0, 4, 5, 6]
    assert isomorphism(fam.double_star(3, 2), G) is not None


@pytest.mark.parametrize("n", [8, 10, 13])
def test_spiders(n):
    for G in (fam.t_n_3(n), fam.t_n_4(n)):
        assert G.n == n and is_tree(G)
    assert sorted(fam.t_n_3(n).degrees())[-1] == n - 3
    assert sorted(fam.t_n_4(n).degrees())[-1] == n - 3


@pytest.mark.parametrize("n,m", [(4, 4), (5, 7), (10, 10), (10, 17), (12, 13)])
def test_g_mn(n, m):
    G = fam.g_mn(m, n)
    assert (G.n, G.m) == (n, m) and is_connected(G)
    assert G.degree(0) == n - 1


def test_g_mn_range():
    with pytest.raises(ValueError):
        fam.g_mn(9, 5)


@pytest.mark.parametrize("t", range(2, 8))
def test_h_n(t):
    G = fam.h_n(t)
    assert G.n == 3 * t and G.m == 4 * t and is_connected(G)
    lm = li_metrics(G)
    assert abs(lm.spectrum.mu1 - 5) < 1e-9
    assert abs(lm.sigma[0] - 8 / 3) < 1e-9


def test_fig_graphs():
    for n in (6, 9, 17):
        assert c_cyclic(fam.u_n_2(n)) == 1
        assert c_cyclic(fam.b_n_1(n)) == 2
        assert c_cyclic(fam.b_n_star(n)) == 2
    assert fam.b_n_star(9).degree(0) == 8


def test_threshold_families():
    G = fam.complete_split(3, 7)
    assert is_threshold(G) and G.m == 3 + 3 * 4
    T = fam.threshold_from_sequence("00101")
    assert is_threshold(T)
    mu = li_metrics(T).spectrum.mu
    from kyfanli.graph import conjugate_degree_sequence

    conj = list(conjugate_degree_sequence(T.degrees()))
    assert np.allclose(mu, conj[:-1] + [0])


@pytest.mark.parametrize("text,n,m", [("star:12", 12, 11), ("gmn:13,10", 10, 13), ("kn:4", 4, 6),
                                      ("threshold:0101", 4, 4), ("multipartite:1,2,3", 6, 11),
                                      ("csplit:2,6", 6, 9), ("hn:3", 9, 12)])
def test_parse_family(text, n, m):
    G = fam.build_family(text)
    assert (G.n, G.m) == (n, m)
    assert str(fam.parse_family(text)).split(":")[0] == fam.parse_family(text).name


@pytest.mark.parametrize("bad", ["star", "nosuch:3", "star:a", "gmn:5", "doublestar:1,2,3"])
def test_parse_family_errors(bad):
    with pytest.raises(ValueError):
        fam.parse_family(bad).build()
