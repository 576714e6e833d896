# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel.

Same contract as ``hercat._kernels_py.echelon``. The matrix is copied into a
C buffer of 64-bit integers and reduced there; every multiply and subtract is
overflow-checked, and on overflow the call is retried with the arbitrary
precision routine, so results are always exact.
"""

from libc.stdlib cimport malloc, free

from hercat._kernels_py import echelon as _echelon_big

cdef extern from *:
    bint smul_overflow "__builtin_mul_overflow" (long long a, long long b, long long *res) nogil
    bint ssub_overflow "__builtin_sub_overflow" (long long a, long long b, long long *res) nogil

cdef long long LIMIT = 1LL << 62


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _make_primitive(long long *row, Py_ssize_t n) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(n):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(n):
            row[j] //= g


cdef int _reduce(long long *a, Py_ssize_t m, Py_ssize_t n, Py_ssize_t *piv) nogil:
    """Reduce ``a`` in place. Returns the rank, or -1 on overflow."""
    cdef Py_ssize_t top = 0, c, i, j, best
    cdef long long best_abs, x, p, g, mp, mx, u, v, t
    cdef long long *prow
    cdef long long *row
    for i in range(m):
        _make_primitive(a + i * n, n)
    for c in range(n):
        if top == m:
            break
        best = -1
        best_abs = 0
        for i in range(top, m):
            x = a[i * n + c]
            if x < 0:
                x = -x
            if x and (best < 0 or x < best_abs):
                best = i
                best_abs = x
                if x == 1:
                    break
        if best < 0:
            continue
        if best != top:
            for j in range(n):
                t = a[top * n + j]
                a[top * n + j] = a[best * n + j]
                a[best * n + j] = t
        prow = a + top * n
        if prow[c] < 0:
            for j in range(n):
                prow[j] = -prow[j]
        p = prow[c]
        for i in range(m):
            if i == top:
                continue
            row = a + i * n
            x = row[c]
            if not x:
                continue
            g = _gcd(p, x)
            mp = p // g
            mx = x // g
            for j in range(n):
                if smul_overflow(mp, row[j], &u):
                    return -1
                if smul_overflow(mx, prow[j], &v):
                    return -1
                if ssub_overflow(u, v, &row[j]):
                    return -1
            _make_primitive(row, n)
        piv[top] = c
        top += 1
    return <int>top


def echelon(rows, Py_ssize_t ncols):
    """Fraction-free reduced row echelon form (see the pure-Python twin)."""
    rows = [r for r in rows if any(r)]
    cdef Py_ssize_t m = len(rows), n = ncols, i, j
    if m == 0 or n == 0:
        return [], []
    for r in rows:
        if len(r) != n:
            raise ValueError("row length does not match ncols")
        for x in r:
            if x >= LIMIT or x <= -LIMIT:
                return _echelon_big(rows, ncols)
    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    cdef Py_ssize_t *piv = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if a == NULL or piv == NULL:
        free(a)
        free(piv)
        raise MemoryError()
    cdef int rank
    try:
        for i in range(m):
            r = rows[i]
            for j in range(n):
                a[i * n + j] = r[j]
        with nogil:
            rank = _reduce(a, m, n, piv)
        if rank < 0:
            return _echelon_big(rows, ncols)
        out = [[a[i * n + j] for j in range(n)] for i in range(rank)]
        return out, [piv[i] for i in range(rank)]
    finally:
        free(a)
        free(piv)
