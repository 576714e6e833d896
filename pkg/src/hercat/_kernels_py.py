"""Pure-Python reference implementation of the elimination kernel.

The compiled module ``hercat._kernels`` exposes the same function with the
same semantics; this one is used when the extension is unavailable or when
``HERCAT_PURE_PYTHON`` is set.
"""

from math import gcd


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def echelon(rows, ncols):
    """Fraction-free reduced row echelon form of an integer matrix.

    Returns ``(reduced, pivots)``. ``reduced`` holds only the nonzero rows,
    each a primitive integer vector with a positive pivot entry, and every
    pivot column is zero outside its own row. The row space over Q equals the
    row space of the input.
    """
    a = [list(r) for r in rows if any(r)]
    for r in a:
        if len(r) != ncols:
            raise ValueError("row length does not match ncols")
        g = _content(r)
        if g > 1:
            r[:] = [x // g for x in r]
    pivots = []
    top = 0
    m = len(a)
    for c in range(ncols):
        if top == m:
            break
        best = -1
        best_abs = 0
        for i in range(top, m):
            x = a[i][c]
            if x and (best < 0 or abs(x) < best_abs):
                best, best_abs = i, abs(x)
                if best_abs == 1:
                    break
        if best < 0:
            continue
        a[top], a[best] = a[best], a[top]
        prow = a[top]
        if prow[c] < 0:
            prow[:] = [-x for x in prow]
        p = prow[c]
        for i in range(m):
            if i == top:
                continue
            row = a[i]
            x = row[c]
            if not x:
                continue
            g = gcd(p, x)
            mp, mx = p // g, x // g
            new = [mp * u - mx * v for u, v in zip(row, prow)]
            g = _content(new)
            if g > 1:
                new = [u // g for u in new]
            a[i] = new
        pivots.append(c)
        top += 1
    return a[:top], pivots
