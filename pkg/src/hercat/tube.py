"""Tubes: nilpotent representations of the cyclic quiver with r vertices.

An indecomposable is uniserial and is recorded by its socle vertex ``base``
and its ``length``. Arrows run i -> i+1 (mod r), so the radical layers of
``(base, length)`` sit at base - length + 1, ..., base from top to socle.
Hom dimensions have a closed form; :func:`realize` produces explicit
matrices so the closed form can be checked against the general Hom/Ext
solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from hercat.errors import DimensionMismatch, InputError
from hercat.klattice import EulerLattice
from hercat.quiver import HomExtDims, Quiver, Rep, direct_sum, endomorphism_top_dim, hom_ext_dims, ringel_form


@dataclass(frozen=True)
class Tube:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("tube rank must be at least 1")


@dataclass(frozen=True, order=True)
class TubeObject:
    rank: int
    base: int
    length: int

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("tube rank must be at least 1")
        if not 0 <= self.base < self.rank:
            raise InputError(f"base {self.base} out of range for rank {self.rank}")
        if self.length < 1:
            raise InputError("length must be at least 1")

    @property
    def top(self) -> int:
        return (self.base - self.length + 1) % self.rank

    def composition_factors(self) -> list[int]:
        """Socle first."""
        return [(self.base - k) % self.rank for k in range(self.length)]

    def dims(self) -> tuple[int, ...]:
        d = [0] * self.rank
        for v in self.composition_factors():
            d[v] += 1
        return tuple(d)


def realize(x: TubeObject) -> Rep:
    """Uniserial representation with basis x_0 (top) ... x_{l-1} (socle).

    x_k lives at vertex top + k and the arrow out of that vertex sends x_k to
    x_{k+1}; every matrix is a 0/1 shift block.
    """
    r = x.rank
    q = Quiver.cyclic(r)
    dims = x.dims()
    # position of each basis vector inside its vertex space
    slot = []
    seen = [0] * r
    for k in range(x.length):
        v = (x.top + k) % r
        slot.append((v, seen[v]))
        seen[v] += 1
    maps = [[[Fraction(0)] * dims[i] for _ in range(dims[(i + 1) % r])] for i in range(r)]
    for k in range(x.length - 1):
        v, a = slot[k]
        w, b = slot[k + 1]
        maps[v][b][a] = Fraction(1)
    return Rep(q, dims, tuple(maps))


def tau(x: TubeObject) -> TubeObject:
    """Shift along the tube; the direction is the one forced by
    Ext^1(x, y) = D Hom(y, tau x)."""
    return TubeObject(x.rank, (x.base + 1) % x.rank, x.length)


def tau_inverse(x: TubeObject) -> TubeObject:
    return TubeObject(x.rank, (x.base - 1) % x.rank, x.length)


def hom_closed_form(x: TubeObject, y: TubeObject) -> int:
    """Maps x -> y factor as x ->> Q = U -> y with Q a top quotient of x and U
    a socle submodule of y; one dimension per common length k, which needs
    the socle of Q to be the socle of y."""
    if x.rank != y.rank:
        raise DimensionMismatch("objects lie in tubes of different rank")
    r = x.rank
    return sum(1 for k in range(1, min(x.length, y.length) + 1) if (x.top + k - 1) % r == y.base)


def tube_lattice(r: int) -> EulerLattice:
    """Ringel form of the cyclic quiver: entry (i, j) = delta_ij - delta_{i+1, j}."""
    return EulerLattice(ringel_form(Quiver.cyclic(r)), tuple(f"S{i}" for i in range(r)))


def tube_euler(x: TubeObject, y: TubeObject) -> int:
    return tube_lattice(x.rank).chi(x.dims(), y.dims())


def tube_hom(x: TubeObject, y: TubeObject, method: str = "closed") -> HomExtDims:
    """``(dim Hom, dim Ext^1)``.

    ``closed``: Hom by the closed form, Ext by the Euler form.
    ``realize``: both from the explicit matrices via the quiver solver.
    """
    if x.rank != y.rank:
        raise DimensionMismatch("objects lie in tubes of different rank")
    if method == "closed":
        h = hom_closed_form(x, y)
        return HomExtDims(h, h - tube_euler(x, y))
    if method == "realize":
        return hom_ext_dims(realize(x), realize(y))
    raise ValueError(f"unknown method {method!r}")


def objects(r: int, max_length: int) -> list[TubeObject]:
    return [TubeObject(r, b, l) for l in range(1, max_length + 1) for b in range(r)]


class SphericalCheck(NamedTuple):
    objects: list[TubeObject]
    hom_matrix: list[list[int]]
    ext_matrix: list[list[int]]
    semisimple: bool
    duality: bool
    tau_closed: bool

    @property
    def ok(self) -> bool:
        return self.semisimple and self.duality and self.tau_closed


def generalized_spherical(objs: Sequence[TubeObject]) -> SphericalCheck:
    """Check that the direct sum Y of ``objs`` has tau Y = Y, semisimple End(Y)
    and Ext^1(Y, Y) dual to Hom(Y, Y) (Ext matrix a transposed permutation of
    the Hom matrix under tau)."""
    objs = list(objs)
    hom = [[tube_hom(x, y).hom for y in objs] for x in objs]
    ext = [[tube_hom(x, y).ext for y in objs] for x in objs]
    y = direct_sum([realize(x) for x in objs])
    total = sum(map(sum, hom))
    semisimple = endomorphism_top_dim(y) == total
    tau_closed = sorted(tau(x) for x in objs) == sorted(objs)
    # Ext^1(x, y) = D Hom(y, tau x): compare against the transposed, tau-shifted Hom table
    duality = tau_closed and all(
        ext[i][j] == hom[j][objs.index(tau(objs[i]))] for i in range(len(objs)) for j in range(len(objs))
    )
    return SphericalCheck(objs, hom, ext, semisimple, duality, tau_closed)


def minimal_spherical(r: int) -> list[TubeObject]:
    """The r peripheral objects, whose sum is a minimal 1-spherical object."""
    if r < 1:
        raise InputError("tube rank must be at least 1")
    objs = [TubeObject(r, b, 1) for b in range(r)]
    check = generalized_spherical(objs)
    assert check.ok and sum(map(sum, check.hom_matrix)) == r and sum(map(sum, check.ext_matrix)) == r
    return objs
