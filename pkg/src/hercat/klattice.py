"""Integer lattices carrying an Euler form.

A lattice is ``Z^n`` with an integer Gram matrix ``A``; the form is
``chi(v, w) = v^T A w``. From it we get the Coxeter matrix
``C = -A^{-1} A^T`` (the action of the AR translate on classes), the radical
and the numerical quotient, K-level twists and the perpendicular splitting
off an exceptional class. Classes are plain integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from hercat.errors import (
    DimensionMismatch,
    LeftRightRadicalMismatch,
    NoIntegralCoxeter,
    NotExceptionalClass,
    SingularCartan,
    SingularMatrix,
)
from hercat.linalg import (
    IntMatrix,
    integer_kernel,
    inverse,
    is_integral,
    lattice_basis,
    matmul,
    smith_normal_form,
    transpose,
)


@dataclass(frozen=True)
class EulerLattice:
    gram: IntMatrix
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.gram, IntMatrix):
            object.__setattr__(self, "gram", IntMatrix.of(self.gram))
        if not self.gram.is_square:
            raise DimensionMismatch(f"Gram matrix must be square, got {self.gram.rows}x{self.gram.cols}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.gram.rows:
                raise DimensionMismatch(f"{len(labels)} labels for a rank {self.gram.rows} lattice")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows, labels=None) -> "EulerLattice":
        return cls(IntMatrix.of(rows), labels)

    @property
    def rank(self) -> int:
        return self.gram.rows

    def check(self, v) -> tuple[int, ...]:
        v = tuple(v)
        if len(v) != self.rank:
            raise DimensionMismatch(f"class of length {len(v)} in a rank {self.rank} lattice")
        for x in v:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"class coordinates must be integers, got {x!r}")
        return v

    def chi(self, v, w) -> int:
        v, w = self.check(v), self.check(w)
        return sum(v[i] * sum(a * y for a, y in zip(row, w)) for i, row in enumerate(self.gram.entries) if v[i])


def euler_form(lat: EulerLattice, v, w) -> int:
    return lat.chi(v, w)


def curve_lattice(genus: int) -> EulerLattice:
    """Num of a smooth projective curve in the basis [k(P)], [O_X]; coordinates
    are (degree, rank)."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return EulerLattice.from_rows([[0, -1], [1, 1 - genus]], labels=("k(P)", "O_X"))


def direct_sum(lattices: Sequence[EulerLattice]) -> EulerLattice:
    n = sum(l.rank for l in lattices)
    rows = [[0] * n for _ in range(n)]
    labels = []
    off = 0
    for lat in lattices:
        for i in range(lat.rank):
            rows[off + i][off : off + lat.rank] = lat.gram.entries[i]
        if lat.labels:
            labels.extend(lat.labels)
        else:
            labels.extend(f"e{off + i}" for i in range(lat.rank))
        off += lat.rank
    return EulerLattice(IntMatrix.of(rows, n), tuple(labels) if any(l.labels for l in lattices) else None)


def _as_lattice(lat) -> EulerLattice:
    return lat.lattice if isinstance(lat, NumLattice) else lat


def coxeter(lat) -> IntMatrix:
    """``C = -A^{-1} A^T``.

    Raises ``SingularCartan`` on a degenerate form (pass the numerical quotient
    instead) and ``NoIntegralCoxeter`` when C has a non-integral entry.
    """
    lat = _as_lattice(lat)
    a = lat.gram.tolist()
    try:
        ainv = inverse(a)
    except SingularMatrix:
        raise SingularCartan(f"Gram matrix of the rank {lat.rank} lattice is singular") from None
    c = matmul(ainv, transpose(a, lat.rank), lat.rank, lat.rank)
    c = [[-x for x in r] for r in c]
    if not is_integral(c):
        raise NoIntegralCoxeter("-A^{-1}A^T has non-integral entries")
    return IntMatrix.of(c, lat.rank)


class SerreCheck(NamedTuple):
    ok: bool
    coxeter: IntMatrix | None
    reason: str


def serre_check(lat) -> SerreCheck:
    """Does the form admit a Coxeter transformation with chi(v,w) = -chi(w, Cv)?"""
    lat = _as_lattice(lat)
    try:
        c = coxeter(lat)
    except SingularCartan:
        return SerreCheck(False, None, "singular")
    except NoIntegralCoxeter:
        return SerreCheck(False, None, "non-integral")
    n = lat.rank
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for v in basis:
        cv = c @ v
        for w in basis:
            if lat.chi(v, w) != -lat.chi(w, cv):
                return SerreCheck(False, c, "identity-fails")
    return SerreCheck(True, c, "ok")


@dataclass(frozen=True)
class NumLattice:
    """Quotient of a lattice by the radical of its form.

    ``complement`` (n x m) and ``radical_basis`` together form a unimodular
    basis of the parent; ``projection`` (m x n) is the quotient map and kills
    the radical.
    """

    parent: EulerLattice
    radical_basis: tuple[tuple[int, ...], ...]
    complement: IntMatrix
    projection: IntMatrix
    induced_gram: IntMatrix
    lattice: EulerLattice = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lattice", EulerLattice(self.induced_gram))

    @property
    def num_rank(self) -> int:
        return self.induced_gram.rows

    def project(self, v) -> tuple[int, ...]:
        return self.projection @ self.parent.check(v)

    def lift(self, u) -> tuple[int, ...]:
        return self.complement @ u


def _is_unimodular_extension(rows, n: int) -> bool:
    d, _, _ = smith_normal_form(rows, n)
    return all(d[i][i] == 1 for i in range(len(rows))) if len(rows) <= n else False


def _complement(radical: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Vectors completing a saturated sublattice basis to a basis of Z^n.

    Unit vectors are preferred (greedily, in index order); when that fails the
    completion is read off a Smith decomposition.
    """
    k = len(radical)
    chosen: list[tuple[int, ...]] = []
    for j in range(n):
        if k + len(chosen) == n:
            break
        e = tuple(int(i == j) for i in range(n))
        if _is_unimodular_extension(list(radical) + chosen + [e], n):
            chosen.append(e)
    if k + len(chosen) == n:
        return chosen
    _, p, _ = smith_normal_form(transpose(radical, n), k)
    pinv = inverse(p)
    return [tuple(int(pinv[i][j]) for i in range(n)) for j in range(k, n)]


def radical_quotient(lat: EulerLattice) -> NumLattice:
    n = lat.rank
    a = lat.gram.tolist()
    right = integer_kernel(a, n)  # chi(-, v) = 0
    left = integer_kernel(transpose(a, n), n)  # chi(v, -) = 0
    if right != left:
        raise LeftRightRadicalMismatch(
            f"left radical {left} differs from right radical {right}"
        )
    radical = sorted(right)
    comp = _complement(radical, n)
    basis_cols = radical + comp
    b = [[basis_cols[j][i] for j in range(n)] for i in range(n)]
    binv = inverse(b) if n else []
    k = len(radical)
    proj = [[int(x) for x in binv[i]] for i in range(k, n)]
    lift = [[comp[j][i] for j in range(n - k)] for i in range(n)]
    ind = matmul(matmul(transpose(lift, n - k), a, n, n), lift, n, n - k)
    return NumLattice(
        parent=lat,
        radical_basis=tuple(radical),
        complement=IntMatrix.of(lift, n - k),
        projection=IntMatrix.of(proj, n),
        induced_gram=IntMatrix.of(ind, n - k),
    )


def coxeter_period(c: IntMatrix, v, bound: int) -> int | None:
    """Smallest ``1 <= r <= bound`` with ``C^r v = v``.

    A class in a tube of rank r has Coxeter period dividing r, so this only
    screens candidates; it does not certify tube membership.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    v = tuple(v)
    if len(v) != c.cols or not c.is_square:
        raise DimensionMismatch("Coxeter matrix and class are incompatible")
    w = v
    for r in range(1, bound + 1):
        w = c @ w
        if w == v:
            return r
    return None


class FractionalCY(NamedTuple):
    """``(-C)^q = (-1)^p Id``; only the parity of p is visible on K_0."""

    p: int
    q: int

    @property
    def sign(self) -> int:
        return -1 if self.p % 2 else 1


def fractional_cy(c: IntMatrix, max_order: int) -> FractionalCY | None:
    if not c.is_square:
        raise DimensionMismatch("Coxeter matrix must be square")
    n = c.rows
    ident = IntMatrix.identity(n)
    neg = -ident
    s = -c
    power = ident
    for q in range(1, max_order + 1):
        power = power @ s
        if power == ident:
            return FractionalCY(0, q)
        if power == neg:
            return FractionalCY(1, q)
    return None


def twist_k(lat, spherical, v, direction: str = "left") -> tuple[int, ...]:
    """Action on classes of the twist along a family of component classes.

    left:  [T Y]  = [Y] - sum_i chi(s_i, Y) s_i
    right: [T* Y] = [Y] - sum_i chi(Y, s_i) s_i
    """
    lat = _as_lattice(lat)
    v = lat.check(v)
    s = [lat.check(x) for x in spherical]
    if direction == "left":
        coeffs = [lat.chi(si, v) for si in s]
    elif direction == "right":
        coeffs = [lat.chi(v, si) for si in s]
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    out = list(v)
    for k, si in zip(coeffs, s):
        if k:
            for j, x in enumerate(si):
                out[j] -= k * x
    return tuple(out)


def is_spherical_family(lat, spherical) -> bool:
    """K-level shadow of a (generalized) 1-spherical object: the total class is
    isotropic and fixed by the Coxeter matrix, and the family is permuted by it."""
    lat = _as_lattice(lat)
    s = [lat.check(x) for x in spherical]
    if not s:
        return False
    c = serre_check(lat).coxeter
    total = tuple(map(sum, zip(*s)))
    if lat.chi(total, total) != 0:
        return False
    if c is None:
        return True
    return sorted(c @ x for x in s) == sorted(s)


@dataclass(frozen=True)
class PerpSplit:
    """``Z^n = E^perp + Z e`` for an exceptional class e."""

    parent: EulerLattice
    e: tuple[int, ...]
    perp: EulerLattice
    inclusion: IntMatrix  # n x (n-1), columns are a basis of e^perp
    _coords: IntMatrix = field(repr=False, compare=False)

    def project(self, v) -> tuple[int, ...]:
        """Coordinates in ``perp`` of ``v - chi(e, v) e``."""
        return (self._coords @ self.parent.check(v))[: self.perp.rank]

    def embed(self, u) -> tuple[int, ...]:
        return self.inclusion @ u

    def e_component(self, v) -> int:
        return self.parent.chi(self.e, v)


def perp_split(lat, e) -> PerpSplit:
    lat = _as_lattice(lat)
    e = lat.check(e)
    if lat.chi(e, e) != 1:
        raise NotExceptionalClass(f"chi(e, e) = {lat.chi(e, e)}, expected 1")
    n = lat.rank
    row = [sum(e[i] * lat.gram[i, j] for i in range(n)) for j in range(n)]
    kernel = integer_kernel([row], n)
    b = [[kernel[j][i] for j in range(n - 1)] + [e[i]] for i in range(n)]
    binv = [[int(x) for x in r] for r in inverse(b)]
    inc = [r[: n - 1] for r in b]
    gram = matmul(matmul(transpose(inc, n - 1), lat.gram.tolist(), n, n), inc, n, n - 1)
    return PerpSplit(
        parent=lat,
        e=e,
        perp=EulerLattice(IntMatrix.of(gram, n - 1)),
        inclusion=IntMatrix.of(inc, n - 1),
        _coords=IntMatrix.of(binv, n),
    )


def torsion_test(lat, v, spherical_set) -> bool:
    lat = _as_lattice(lat)
    return all(lat.chi(v, s) == 0 for s in spherical_set)


@dataclass
class BlockReport:
    a: int
    b: int
    g: int
    checks: list[tuple[str, bool, str]]
    chi_tau2_e_e: int

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)


def block_cartan(a: int, b: int, g: int) -> EulerLattice:
    return EulerLattice.from_rows([[1, 0, 0], [a, 0, -1], [b, 1, 1 - g]], labels=("E", "M", "O_X"))


def block_coxeter_closed_form(a: int, b: int, g: int) -> list[list[int]]:
    h = 1 - g
    return [
        [-1, -a, -b],
        [a * h + b, a * a * h + a * b + 1, (a * b - 2) * h + b * b],
        [-a, -a * a, 1 - a * b],
    ]


def verify_section5(a: int, b: int, g: int) -> BlockReport:
    """Check the 3x3 Cartan block around an exceptional E with E^perp a curve."""
    lat = block_cartan(a, b, g)
    checks = []
    c = coxeter(lat)
    expected = block_coxeter_closed_form(a, b, g)
    checks.append(("coxeter-closed-form", c.tolist() == expected, f"C={c.tolist()}"))
    c2 = c @ c
    h = 1 - g
    col = [1 - a * a * h, a**3 * h * h + a * (a * b + 2) * h, -(a**3) * h]
    got_col = [c2[i, 0] for i in range(3)]
    checks.append(("c2-first-column", got_col == col, f"C^2[:,0]={got_col}"))
    chi = (c2.T @ lat.gram)[0, 0]
    closed = a**4 * h * h + a * a * h + 1
    checks.append(("chi-tau2E-E", chi == closed, f"(C^2)^T A[0,0]={chi}, closed form {closed}"))
    checks.append(("chi-tau2E-E-positive", chi > 0, f"{chi} > 0"))
    ok, _, reason = serre_check(lat)
    checks.append(("serre", ok, reason))
    if a == 0 and b == 1:
        target = [[1, 0, 0], [0, 1, 4 * g - 3], [0, 0, 1]]
        checks.append(("c2-simple-tube", c2.tolist() == target, f"C^2={c2.tolist()}"))
    return BlockReport(a, b, g, checks, chi)


def scan_classes(rank: int, bound: int):
    """Integer vectors of sup-norm <= bound in lexicographic order."""
    if rank == 0:
        yield ()
        return
    from itertools import product

    yield from product(range(-bound, bound + 1), repeat=rank)
