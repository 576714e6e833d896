import os
import subprocess
import sys
from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from hypothesis import given, settings
from hypothesis import strategies as st

from hercat import kernels
from hercat.errors import DimensionMismatch, SingularMatrix
from hercat.linalg import (
    IntMatrix,
    QuotientCoords,
    det,
    hermite_rows,
    integer_kernel,
    inverse,
    lattice_basis,
    matmul,
    nullspace,
    primitive,
    rank,
    rref,
    smith_normal_form,
)


def int_matrices(max_rows=5, max_cols=5, bound=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def square_matrices(max_n=4, bound=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n)
    )


# -- backends -------------------------------------------------------------------


@given(int_matrices(6, 6, 20))
@settings(max_examples=200, deadline=None)
def test_backends_agree(a):
    n = len(a[0])
    assert kernels.echelon(a, n) == kernels.echelon_py(a, n)


def test_backends_agree_past_int64():
    big = 2**61
    a = [[big, big - 1, 3], [big + 5, 7, big * 3], [1, 2, 3]]
    assert kernels.echelon(a, 3) == kernels.echelon_py(a, 3)


def test_echelon_shape_and_normalization():
    red, piv = kernels.echelon_py([[2, 4, 6], [1, 2, 4], [0, 0, 0]], 3)
    assert piv == [0, 2]
    for r, p in zip(red, piv):
        assert r[p] > 0
        assert sympy.gcd_list(r) == 1
    assert red[1][0] == 0 and red[0][2] == 0


def test_echelon_rejects_ragged_rows():
    with pytest.raises(ValueError):
        kernels.echelon_py([[1, 2], [1]], 2)


# -- rational linear algebra ----------------------------------------------------


@given(int_matrices())
@settings(max_examples=150, deadline=None)
def test_rref_matches_sympy(a):
    n = len(a[0])
    red, piv = rref(a, n)
    m, spiv = sympy.Matrix(a).rref()
    assert tuple(piv) == spiv
    expected = [[Fraction(int(x.p), int(x.q)) for x in m.row(i)] for i in range(len(spiv))]
    assert red == expected
    assert rank(a, n) == sympy.Matrix(a).rank()


@given(int_matrices())
@settings(max_examples=150, deadline=None)
def test_nullspace_is_kernel_of_full_dimension(a):
    n = len(a[0])
    basis = nullspace(a, n)
    assert len(basis) == n - rank(a, n)
    for v in basis:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


@given(square_matrices())
@settings(max_examples=150, deadline=None)
def test_det_and_inverse_match_sympy(a):
    d = sympy.Matrix(a).det()
    assert det(a) == Fraction(int(d))
    if d == 0:
        with pytest.raises(SingularMatrix):
            inverse(a)
    else:
        inv = inverse(a)
        n = len(a)
        assert matmul(a, inv, n, n) == [[int(i == j) for j in range(n)] for i in range(n)]


def test_det_rational_entries():
    a = [[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(2, 3)]]
    assert det(a) == Fraction(1, 3) - Fraction(1, 3)
    assert det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_matmul_shape_check():
    with pytest.raises(DimensionMismatch):
        matmul([[1, 2]], [[1, 2]], 2, 2)


def test_quotient_coords():
    w = [[1, 1, 0]]
    qc = QuotientCoords(w, 3)
    assert qc.dim == 2
    assert qc.coords([1, 1, 0]) == [0, 0]
    assert qc.coords([2, 0, 5]) == qc.coords([0, -2, 5])
    assert qc.coords(qc.representative(1)) == [0, 1]


# -- integer lattices -----------------------------------------------------------


def test_int_matrix_basics():
    a = IntMatrix.of([[1, 2], [3, 4]])
    assert a.shape == (2, 2)
    assert (a @ a).tolist() == [[7, 10], [15, 22]]
    assert a @ (1, 1) == (3, 7)
    assert (a**0) == IntMatrix.identity(2)
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert (-a).tolist() == [[-1, -2], [-3, -4]]
    empty = IntMatrix.of([], 0)
    assert empty.shape == (0, 0) and empty.is_square


@given(int_matrices(4, 5, 8))
@settings(max_examples=150, deadline=None)
def test_integer_kernel_is_saturated_basis(a):
    n = len(a[0])
    ker = integer_kernel(a, n)
    assert len(ker) == n - rank(a, n)
    for v in ker:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)
    if ker:
        # saturated: the gcd of maximal minors is 1
        d, _, _ = smith_normal_form([list(v) for v in ker], n)
        assert all(abs(d[i][i]) == 1 for i in range(len(ker)))


@given(int_matrices(4, 4, 8))
@settings(max_examples=150, deadline=None)
def test_smith_normal_form(a):
    n = len(a[0])
    d, p, q = smith_normal_form(a, n)
    m = len(a)
    assert matmul(matmul(p, a, m, n), q, n, n) == d
    assert abs(det(p)) == 1 and abs(det(q)) == 1
    diag = [d[i][i] for i in range(min(m, n))]
    assert all(d[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    for x, y in zip(diag, diag[1:]):
        assert x >= 0 and (y == 0 or (x != 0 and y % x == 0))
    sym = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    assert sorted(abs(int(sym[i, i])) for i in range(min(m, n))) == sorted(abs(x) for x in diag)


def test_hermite_tracks_transform():
    rows = [[2, 4], [3, 5]]
    h, u = hermite_rows(rows, 2, track=True)
    assert matmul(u, rows, 2, 2) == h
    assert lattice_basis([[2, 0], [0, 2], [1, 1]], 2) == [(1, 1), (0, 2)]


def test_primitive():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)


def test_pure_python_override():
    env = dict(os.environ, HERCAT_PURE_PYTHON="1")
    code = "from hercat import BACKEND, kernels; print(BACKEND, kernels.echelon is kernels.echelon_py)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]
