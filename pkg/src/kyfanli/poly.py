"""Exact integer polynomials: Laplacian characteristic polynomials and the
closed-form polynomials whose largest roots give extremal spectral radii."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph

CHARPOLY_MAX_N = 64


class IntPoly:
    """Polynomial with exact integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c) if c else (0,)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root: int) -> "IntPoly":
        """``x - root``."""
        return cls([-root, 1])

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:] or [0])

    def cauchy_bound(self) -> Fraction:
        """Every complex root has modulus below this bound."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.lead)
        return 1 + max(Fraction(abs(c), lead) for c in self.coeffs[:-1])

    def real_roots_intervals(self) -> list[tuple[Fraction, Fraction]]:
        """Disjoint rational intervals ``(a, b]`` each holding exactly one distinct real root."""
        if self.degree < 1:
            return []
        chain = _sturm_chain(self)
        B = self.cauchy_bound()
        out = []

        def split(a: Fraction, b: Fraction, count: int) -> None:
            if count == 0:
                return
            if count == 1:
                out.append((a, b))
                return
            mid = (a + b) / 2
            left = _sign_changes(chain, a) - _sign_changes(chain, mid)
            split(a, mid, left)
            split(mid, b, count - left)

        split(-B, B, _sign_changes(chain, -B) - _sign_changes(chain, B))
        return sorted(out)

    def largest_real_root(self, tol: float = 1e-12) -> float:
        """Largest real root by Sturm isolation then bisection to ``tol``."""
        intervals = self.real_roots_intervals()
        if not intervals:
            raise ValueError(f"{self} has no real roots")
        a, b = intervals[-1]
        sq = _squarefree(self)
        if sq(b) == 0:
            return float(b)
        return _bisect(sq, a, b, tol)

    def real_roots(self, tol: float = 1e-12) -> list[float]:
        """Distinct real roots, ascending."""
        roots = []
        sq = _squarefree(self)
        for a, b in self.real_roots_intervals():
            if sq(b) == 0:
                roots.append(float(b))
                continue
            roots.append(_bisect(sq, a, b, tol))
        return roots


def _bisect(f, a: Fraction, b: Fraction, tol: float) -> float:
    # one simple root in (a, b), f(b) != 0
    lo, hi = float(a), float(b)
    fhi = _sign(f(b))
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        fm = _sign(f(Fraction(mid)))
        if fm == 0:
            return mid
        if fm == fhi:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _frac_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        factor = num[-1] / den[-1]
        q[shift] = factor
        for i, d in enumerate(den):
            num[i + shift] -= factor * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _frac_poly(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _eval_frac(c: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _squarefree(p: IntPoly):
    """Callable evaluating ``p / gcd(p, p')`` exactly."""
    a = _frac_poly(p)
    b = _frac_poly(p.derivative())
    while b and any(b):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    q, _ = _frac_divmod(_frac_poly(p), a)
    return lambda x: _eval_frac(q, Fraction(x))


def _sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    """Sturm sequence of the square-free part of p."""
    a = _frac_poly(p)
    g_prev, g = a, _frac_poly(p.derivative())
    while g and any(g):
        _, r = _frac_divmod(g_prev, g)
        g_prev, g = g, r
    sq, _ = _frac_divmod(a, g_prev)
    d = [k * c for k, c in enumerate(sq)][1:]
    chain = [sq, d]
    while True:
        _, r = _frac_divmod(chain[-2], chain[-1])
        if not r or not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_sign(_eval_frac(c, x)) for c in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


# ---------------------------------------------------------------------------
# characteristic polynomials


def charpoly_int_matrix(M) -> IntPoly:
    """``det(xI - M)`` for an integer matrix (Faddeev-LeVerrier, exact)."""
    A = np.array(M, dtype=object)
    n = A.shape[0]
    if n > CHARPOLY_MAX_N:
        raise ValueError(f"exact characteristic polynomial limited to n <= {CHARPOLY_MAX_N}")
    c = [0] * (n + 1)
    c[n] = 1
    I = np.identity(n, dtype=object)
    Mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        Mk = A.dot(Mk) + c[n - k + 1] * I
        tr = int(np.trace(A.dot(Mk)))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c[n - k] = q
    return IntPoly(c)


def laplacian_charpoly(G: Graph) -> IntPoly:
    L = [[0] * G.n for _ in range(G.n)]
    for v, d in enumerate(G.degrees()):
        L[v][v] = d
    for u, v in G.edges:
        L[u][v] = L[v][u] = -1
    if G.n == 0:
        return IntPoly([1])
    return charpoly_int_matrix(L)


# ---------------------------------------------------------------------------
# closed-form polynomials


def balanced_product(n: int) -> int:
    """``ceil((n-2)/2) * floor((n-2)/2)``."""
    return ((n - 1) // 2) * ((n - 2) // 2)


def named_poly(name: str, n: int) -> IntPoly:
    """Integer polynomials attached to extremal trees of order ``n``.

    ``f1``/``f2``: largest roots are the spectral radii of S(1, n-3) and
    S(2, n-4). ``g``: cubic factor of the balanced double star's Laplacian
    polynomial, ``phi`` the full polynomial. ``h1``: cubic factor for the
    complement of S((n-1)/2, (n-3)/2) (odd n), ``varphi`` that complement's
    full Laplacian polynomial scaled by 4.
    """
    x = IntPoly.x()
    if name == "f1":
        _need(n >= 4, name, n)
        return IntPoly([-n, 3 * n - 2, -(n + 2), 1])
    if name == "f2":
        _need(n >= 6, name, n)
        return IntPoly([-n, 4 * n - 7, -(n + 2), 1])
    if name == "g":
        _need(n >= 4, name, n)
        return IntPoly([-n, 2 * n + balanced_product(n) + 1, -(n + 2), 1])
    if name == "phi":
        _need(n >= 4, name, n)
        return x * IntPoly.linear(1) ** (n - 4) * named_poly("g", n)
    if name == "h1":
        _need(n >= 5, name, n)
        return IntPoly([-n ** 3 + 4 * n ** 2 - 3 * n, 5 * n ** 2 - 12 * n + 7, -8 * (n - 1), 4])
    if name == "varphi":
        _need(n >= 5 and n % 2 == 1, name, n)
        return x * IntPoly.linear(n - 1) ** (n - 4) * named_poly("h1", n)
    raise ValueError(f"unknown polynomial {name!r}")


def _need(ok: bool, name: str, n: int) -> None:
    if not ok:
        raise ValueError(f"polynomial {name} is not defined for n={n}")


PAPER_POLYS = ("f1", "f2", "g", "h1", "phi", "varphi")
