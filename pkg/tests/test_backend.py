import numpy as np
import pytest

from kyfanli import _fallback
from kyfanli._backend import BACKEND, COMPILED
from kyfanli.families import spider
from kyfanli.iso import _search_order, wl_colors

compiled = pytest.mark.skipif(not COMPILED, reason="extension not built")


def test_backend_name():
    assert BACKEND in ("compiled", "python")


@compiled
def test_jacobi_parity(rng):
    from kyfanli import _kernels

    for n in (1, 3, 10, 25):
        a = rng.standard_normal((n, n))
        a = a + a.T
        x, y = a.copy(), a.copy()
        sx = _kernels.jacobi(x, None, 1e-12, 60)
        sy = _fallback.jacobi(y, None, 1e-12, 60)
        assert sx == sy
        assert np.array_equal(np.diag(x), np.diag(y))


@compiled
@pytest.mark.parametrize("n", range(1, 6))
def test_mask_parity(n):
    from kyfanli import _kernels

    assert _kernels.canonical_connected_masks(n, -1, True) == _fallback.canonical_connected_masks(n, -1, True)
    assert _kernels.canonical_connected_masks(n, 3, False) == _fallback.canonical_connected_masks(n, 3, False)


@compiled
def test_iso_parity():
    from kyfanli import _kernels

    G = spider([1, 1, 2, 2, 3])
    H = G.relabel(list(reversed(range(G.n))))
    c1, c2 = wl_colors(G), wl_colors(H)
    order = _search_order(G, c1)
    assert _kernels.iso_map(list(G.adj), list(H.adj), c1, c2, order) == \
        _fallback.iso_map(list(G.adj), list(H.adj), c1, c2, order)


def test_fallback_selected_by_env(tmp_path):
    import os
    import subprocess
    import sys

    env = dict(os.environ, KYFANLI_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from kyfanli._backend import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
