"""Laplacian spectra, LI-matrix singular values and Ky Fan norms.

All eigenvalues come from one cyclic Jacobi solver so that runs are
reproducible; the LI singular values use the shift identity
``sigma = sort(|mu - 2m/n|)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._backend import kernels
from .config import TOL
from .graph import Graph, num_components

OFF_TOL = 1e-12
MAX_SWEEPS = 60


class EigenSolverError(ArithmeticError):
    pass


class SpectrumInvariantError(ArithmeticError):
    pass


def _prepare(M) -> np.ndarray:
    A = np.array(M, dtype=float, order="C", copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    scale = float(np.linalg.norm(A))
    if A.size and float(np.abs(A - A.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    return A


def eigh_sym(M) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvector columns."""
    A = _prepare(M)
    n = A.shape[0]
    V = np.eye(n)
    if kernels.jacobi(A, V, OFF_TOL, MAX_SWEEPS) < 0:
        raise EigenSolverError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (n={n})")
    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def eigenvalues_sym(M, debug: bool = False) -> np.ndarray:
    """Eigenvalues of a symmetric matrix in descending order.

    With ``debug=True`` the eigenvectors are accumulated as well and the
    reconstruction ``||M - Q diag(w) Q^T||_F < 1e-9 (||M||_F + 1)`` is asserted.
    """
    if debug:
        w, Q = eigh_sym(M)
        M = np.asarray(M, dtype=float)
        err = float(np.linalg.norm(M - (Q * w) @ Q.T))
        if err >= 1e-9 * (float(np.linalg.norm(M)) + 1.0):
            raise EigenSolverError(f"reconstruction error {err:.3e}")
        return w
    A = _prepare(M)
    if kernels.jacobi(A, None, OFF_TOL, MAX_SWEEPS) < 0:
        raise EigenSolverError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (n={A.shape[0]})")
    return np.sort(np.diag(A))[::-1].copy()


@dataclass(frozen=True)
class Spectrum:
    """Descending Laplacian eigenvalues with the counts they came from."""

    mu: np.ndarray
    n: int
    m: int

    @property
    def avg(self) -> float:
        return 2.0 * self.m / self.n

    @property
    def mu1(self) -> float:
        return float(self.mu[0])

    @property
    def algebraic_connectivity(self) -> float:
        return float(self.mu[-2]) if self.n >= 2 else 0.0

    def check(self, components: int | None = None) -> None:
        mu, n, m = self.mu, self.n, self.m
        tol = 1e-9
        if abs(float(mu.sum()) - 2 * m) > tol * (2 * m + 1):
            raise SpectrumInvariantError(f"trace {mu.sum()} != 2m = {2 * m}")
        if abs(float(mu[-1])) > tol * max(1.0, n):
            raise SpectrumInvariantError(f"smallest eigenvalue {mu[-1]} is not 0")
        if float(mu[-1]) < -tol * max(1.0, n):
            raise SpectrumInvariantError("negative Laplacian eigenvalue")
        if m and float(mu[0]) > n + tol * n:
            raise SpectrumInvariantError(f"mu_1 = {mu[0]} exceeds n = {n}")
        if components is not None:
            zeros = int(np.sum(np.abs(mu) < 1e-8 * max(1.0, n)))
            if zeros != components:
                raise SpectrumInvariantError(
                    f"{zeros} zero eigenvalues but {components} components")


def laplacian_spectrum(G: Graph, check: bool = True) -> Spectrum:
    if G.n == 0:
        raise ValueError("spectrum of the empty vertex set")
    s = Spectrum(eigenvalues_sym(G.laplacian()), G.n, G.m)
    if check:
        s.check()
    return s


@dataclass(frozen=True)
class LIMetrics:
    spectrum: Spectrum

    @cached_property
    def sigma(self) -> np.ndarray:
        s = self.spectrum
        return np.sort(np.abs(s.mu - s.avg))[::-1]

    @cached_property
    def kyfan(self) -> np.ndarray:
        """``kyfan[k-1]`` is the Ky Fan k-norm."""
        return np.cumsum(self.sigma)

    @cached_property
    def partial_mu(self) -> np.ndarray:
        """``partial_mu[k-1] = S_k``, the sum of the k largest eigenvalues."""
        return np.cumsum(self.spectrum.mu)

    @property
    def LE(self) -> float:
        return float(self.kyfan[-1])

    @property
    def spr(self) -> float:
        mu = self.spectrum.mu
        return float(mu[0] - mu[-2]) if len(mu) >= 2 else 0.0

    def F(self, k: int) -> float:
        _check_k(k, self.spectrum.n)
        return float(self.kyfan[k - 1])

    def S(self, k: int) -> float:
        _check_k(k, self.spectrum.n)
        return float(self.partial_mu[k - 1])

    def indexed_F(self, k: int) -> float:
        """``sum_{i<=k} |mu_i - 2m/n|`` without re-sorting (mu-indexed reading)."""
        _check_k(k, self.spectrum.n)
        s = self.spectrum
        return float(np.abs(s.mu[:k] - s.avg).sum())

    def as_dict(self) -> dict:
        s = self.spectrum
        return {
            "n": s.n,
            "m": s.m,
            "avg_degree": s.avg,
            "mu": [float(x) for x in s.mu],
            "sigma": [float(x) for x in self.sigma],
            "kyfan": [float(x) for x in self.kyfan],
            "S": [float(x) for x in self.partial_mu],
            "LE": self.LE,
            "spr": self.spr,
            "algebraic_connectivity": s.algebraic_connectivity,
        }


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")


def li_metrics(G: Graph | Spectrum) -> LIMetrics:
    return LIMetrics(G if isinstance(G, Spectrum) else laplacian_spectrum(G))


def li_matrix(G: Graph) -> np.ndarray:
    return G.laplacian() - (2.0 * G.m / G.n) * np.eye(G.n)


def li_singular_values_direct(G: Graph) -> np.ndarray:
    """Singular values of LI(G) from the solver applied to LI itself."""
    return np.sort(np.abs(eigenvalues_sym(li_matrix(G))))[::-1]


def ky_fan(G: Graph, k: int) -> float:
    return li_metrics(G).F(k)


def spread(G: Graph) -> float:
    return li_metrics(G).spr


def s_k(G: Graph, k: int) -> float:
    return li_metrics(G).S(k)


def laplacian_energy(G: Graph) -> float:
    return li_metrics(G).LE


def algebraic_connectivity(G: Graph) -> float:
    return laplacian_spectrum(G).algebraic_connectivity


def check_spectrum_against_components(G: Graph) -> Spectrum:
    s = laplacian_spectrum(G, check=False)
    s.check(components=num_components(G))
    return s


# ---------------------------------------------------------------------------
# closed forms


def path_spectrum(n: int) -> np.ndarray:
    return np.sort(2.0 - 2.0 * np.cos(np.arange(n) * np.pi / n))[::-1]


def cycle_spectrum(n: int) -> np.ndarray:
    return np.sort(2.0 - 2.0 * np.cos(2.0 * np.pi * np.arange(n) / n))[::-1]


# ---------------------------------------------------------------------------
# majorization


def _validate_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("majorization needs two vectors of equal length")
    tol = TOL.majorization
    for name, v in (("x", x), ("y", y)):
        if np.any(np.diff(v) > tol):
            raise ValueError(f"{name} is not sorted in non-increasing order")
    return x, y


def weak_majorization(x, y, tol: float | None = None) -> bool:
    """``x <_w y``: every prefix sum of x is at most that of y."""
    x, y = _validate_pair(x, y)
    tol = TOL.majorization if tol is None else tol
    return bool(np.all(np.cumsum(x) <= np.cumsum(y) + tol))


def majorization(x, y, tol: float | None = None) -> bool:
    tol = TOL.majorization if tol is None else tol
    x, y = _validate_pair(x, y)
    return weak_majorization(x, y, tol) and abs(float(x.sum() - y.sum())) <= tol
