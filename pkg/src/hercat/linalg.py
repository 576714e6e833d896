"""Exact linear algebra over Q and Z.

Matrices are lists of rows. Rational work goes through the integer
elimination kernel in :mod:`hercat.kernels` (rows are cleared of
denominators first, which leaves row spaces unchanged); lattice work
(Hermite and Smith forms, integer kernels) is done directly on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from hercat.errors import DimensionMismatch, SingularMatrix
from hercat.kernels import echelon


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix. ``cols`` is kept so that k-by-0 and 0-by-k
    shapes survive."""

    entries: tuple[tuple[int, ...], ...]
    cols: int

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        out = []
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionMismatch(f"row {i} has length {len(r)}, expected {cols}")
            conv = []
            for x in r:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise ValueError(f"non-integral entry {x} in row {i}")
                    x = x.numerator
                elif isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"integer entries required, got {x!r}")
                conv.append(int(x))
            out.append(tuple(conv))
        return cls(tuple(out), cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else tuple(() for _ in range(self.cols)), self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            return IntMatrix.of(matmul(self.tolist(), other.tolist(), self.cols, other.cols), other.cols)
        v = list(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square or k < 0:
            raise ValueError("matrix power needs a square matrix and k >= 0")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.entries), self.cols)


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a, ncols: int | None = None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*a)]


def matmul(a, b, acols: int | None = None, bcols: int | None = None):
    """Product of two row-list matrices; explicit widths handle empty shapes."""
    if acols is None:
        acols = len(a[0]) if a else 0
    if bcols is None:
        bcols = len(b[0]) if b else 0
    if len(b) != acols:
        raise DimensionMismatch(f"cannot multiply ?x{acols} by {len(b)}x{bcols}")
    bt = transpose(b, bcols)
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(r, v)) for r in a]


def integer_rows(rows) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for r in rows:
        d = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                d = lcm(d, x.denominator)
        if d == 1:
            out.append([int(x) for x in r])
        else:
            out.append([int(x * d) for x in r])
    return out


def rref(rows, ncols: int):
    """Reduced row echelon form over Q: ``(rows, pivots)`` with unit pivots."""
    red, piv = echelon(integer_rows(rows), ncols)
    out = []
    for r, p in zip(red, piv):
        d = r[p]
        out.append([Fraction(x, d) for x in r] if d != 1 else [Fraction(x) for x in r])
    return out, piv


def rank(rows, ncols: int) -> int:
    return len(echelon(integer_rows(rows), ncols)[1])


def nullspace(rows, ncols: int):
    """Basis of ``{x : rows @ x = 0}``, one vector per non-pivot column."""
    red, piv = echelon(integer_rows(rows), ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in zip(red, piv):
            if r[f]:
                x[p] = Fraction(-r[f], r[p])
        basis.append(x)
    return basis


def left_nullspace(rows, ncols: int):
    return nullspace(transpose(rows, ncols), len(rows))


def inverse(a):
    """Exact inverse of a square rational or integer matrix."""
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("inverse of a non-square matrix")
    if n == 0:
        return []
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularMatrix("matrix is singular over Q")
    return [r[n:] for r in red[:n]]


def det(a) -> Fraction:
    """Determinant by Bareiss elimination on the cleared integer matrix."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for r in a:
        d = 1
        for x in r:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
        scale /= d
        m.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return scale * sign * m[n - 1][n - 1]


class QuotientCoords:
    """Coordinates on ``k^n / W`` for a subspace ``W`` given by spanning rows.

    The complement used is spanned by the unit vectors at the non-pivot
    columns of the reduced echelon form of ``W``; ``coords(v)`` reduces ``v``
    modulo ``W`` and reads off those entries.
    """

    def __init__(self, spanning_rows, n: int):
        self.n = n
        self._rows, self._pivots = rref(spanning_rows, n)
        pivset = set(self._pivots)
        self.free = [c for c in range(n) if c not in pivset]

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for r, p in zip(self._rows, self._pivots):
            c = v[p]
            if c:
                for j in range(self.n):
                    if r[j]:
                        v[j] -= c * r[j]
        return v

    def coords(self, v):
        red = self.reduce(v)
        return [red[c] for c in self.free]

    def representative(self, k: int):
        e = [Fraction(0)] * self.n
        e[self.free[k]] = Fraction(1)
        return e


# -- integer lattices ---------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_rows(rows, ncols: int, track: bool = False):
    """Row-style Hermite normal form by unimodular row operations.

    Returns ``(H, U)`` where ``H = U @ rows`` (all rows kept, zero rows last)
    and ``U`` is unimodular; ``U`` is only built when ``track`` is set.
    Above-pivot entries are reduced into ``[0, pivot)``.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    top = 0
    pivots = []
    for c in range(ncols):
        if top == m:
            break
        for i in range(top + 1, m):
            if a[i][c] == 0:
                continue
            if a[top][c] == 0:
                a[top], a[i] = a[i], a[top]
                if track:
                    u[top], u[i] = u[i], u[top]
                continue
            g, x, y = _xgcd(a[top][c], a[i][c])
            p, q = a[top][c] // g, a[i][c] // g
            rt, ri = a[top], a[i]
            a[top] = [x * s + y * t for s, t in zip(rt, ri)]
            a[i] = [-q * s + p * t for s, t in zip(rt, ri)]
            if track:
                ut, ui = u[top], u[i]
                u[top] = [x * s + y * t for s, t in zip(ut, ui)]
                u[i] = [-q * s + p * t for s, t in zip(ut, ui)]
        if a[top][c] == 0:
            continue
        if a[top][c] < 0:
            a[top] = [-s for s in a[top]]
            if track:
                u[top] = [-s for s in u[top]]
        p = a[top][c]
        for i in range(top):
            q = a[i][c] // p
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[top])]
                if track:
                    u[i] = [s - q * t for s, t in zip(u[i], u[top])]
        pivots.append(c)
        top += 1
    return a, u


def lattice_basis(rows, ncols: int) -> list[tuple[int, ...]]:
    """Canonical (Hermite) basis of the Z-span of integer rows."""
    h, _ = hermite_rows(rows, ncols)
    return [tuple(r) for r in h if any(r)]


def integer_kernel(rows, ncols: int) -> list[tuple[int, ...]]:
    """Z-basis, in Hermite form, of ``{x in Z^ncols : rows @ x = 0}``."""
    m = len(rows)
    at = transpose(rows, ncols) if m else [[] for _ in range(ncols)]
    h, u = hermite_rows(at, m, track=True)
    kernel = [u[i] for i in range(ncols) if not any(h[i])]
    return lattice_basis(kernel, ncols) if kernel else []


def smith_normal_form(rows, ncols: int):
    """Smith normal form ``(D, P, Q)`` with ``P @ M @ Q == D``, P and Q unimodular."""
    a = [list(map(int, r)) for r in rows]
    m, n = len(a), ncols
    p = [[int(i == j) for j in range(m)] for i in range(m)]
    q = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in q:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        p[dst] = [x + k * y for x, y in zip(p[dst], p[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in q:
            r[dst] += k * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return a, p, q
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // piv))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // piv))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            p[t] = [-x for x in p[t]]
    return a, p, q


def is_integral(a) -> bool:
    return all(Fraction(x).denominator == 1 for r in a for x in r)


def primitive(v) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)
