"""Numerical lattices of desk-scale categories and branch consistency checks.

A descriptor names a category whose branch is known (quiver representations,
a tube, a curve, or a finite direct sum). :func:`classify` computes Num, its
Coxeter matrix and a bounded scan for exceptional and spherical classes, and
raises :class:`ClassificationInconsistency` if the invariants contradict the
descriptor's branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Union

from hercat.errors import ClassificationInconsistency, InputError
from hercat.klattice import (
    EulerLattice,
    FractionalCY,
    IntMatrix,
    curve_lattice,
    direct_sum,
    fractional_cy,
    radical_quotient,
    serre_check,
)
from hercat.linalg import integer_kernel
from hercat.quiver import Quiver, ringel_lattice
from hercat.tube import tube_lattice


@dataclass(frozen=True)
class QuiverCat:
    quiver: Quiver

    def __post_init__(self):
        if not self.quiver.acyclic:
            raise InputError("QuiverCat needs an acyclic quiver")


@dataclass(frozen=True)
class TubeCat:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("tube rank must be at least 1")


@dataclass(frozen=True)
class CurveCat:
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise InputError("genus must be nonnegative")


@dataclass(frozen=True)
class DirectSum:
    parts: tuple["Descriptor", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InputError("empty direct sum")


Descriptor = Union[QuiverCat, TubeCat, CurveCat, DirectSum]


def build_lattice(d: Descriptor) -> EulerLattice:
    if isinstance(d, QuiverCat):
        return ringel_lattice(d.quiver)
    if isinstance(d, TubeCat):
        return tube_lattice(d.rank)
    if isinstance(d, CurveCat):
        return curve_lattice(d.genus)
    if isinstance(d, DirectSum):
        return direct_sum([build_lattice(p) for p in d.parts])
    raise InputError(f"not a category descriptor: {d!r}")


@dataclass
class ClassificationReport:
    descriptor: Descriptor
    branch: str
    num_rank: int
    serre_ok: bool
    coxeter: IntMatrix
    has_exceptional_class: bool
    exceptional_witness: tuple[int, ...] | None
    has_spherical_class: bool
    spherical_witness: tuple[int, ...] | None
    fractional_cy: FractionalCY | None
    dynkin_type: str | None = None
    components: list["ClassificationReport"] = field(default_factory=list)


def _scan_key(v):
    """Sup-norm, then support size, then reverse lexicographic order."""
    return (max(map(abs, v)), sum(1 for x in v if x), tuple(-x for x in v))


def sup_norm_shells(rank: int, bound: int):
    """Nonzero integer vectors of sup-norm <= bound in ``_scan_key`` order,
    generated one shell at a time."""
    if rank == 0:
        return
    for k in range(1, bound + 1):
        shell = [v for v in product(range(-k, k + 1), repeat=rank) if max(map(abs, v)) == k]
        yield from sorted(shell, key=_scan_key)


def find_exceptional_class(lat: EulerLattice, bound: int) -> tuple[int, ...] | None:
    for v in sup_norm_shells(lat.rank, bound):
        if lat.chi(v, v) == 1:
            return v
    return None


def _bounded_lattice_points(basis: list[tuple[int, ...]], bound: int):
    """Nonzero points of the Z-span of a Hermite basis with sup-norm <= bound.

    Pivot coordinates determine the coefficients one at a time, which keeps
    the search finite and exact.
    """
    n = len(basis[0])
    pivots = [next(j for j, x in enumerate(b) if x) for b in basis]

    def rec(k, partial):
        if k == len(basis):
            if any(partial) and max(map(abs, partial)) <= bound:
                yield tuple(partial)
            return
        p, h = pivots[k], basis[k]
        cur = partial[p]
        lo = -((bound + cur) // h[p])
        hi = (bound - cur) // h[p]
        for c in range(lo, hi + 1):
            yield from rec(k + 1, [x + c * y for x, y in zip(partial, h)])

    yield from sorted(rec(0, [0] * n), key=_scan_key)


def find_spherical_class(lat: EulerLattice, c: IntMatrix, bound: int) -> tuple[int, ...] | None:
    """Isotropic Coxeter-fixed class of sup-norm <= bound."""
    n = lat.rank
    if n == 0:
        return None
    shifted = [[c[i, j] - int(i == j) for j in range(n)] for i in range(n)]
    fixed = integer_kernel(shifted, n)
    if not fixed:
        return None
    for v in _bounded_lattice_points(fixed, bound):
        if lat.chi(v, v) == 0:
            return v
    return None


CY_SEARCH = 60


def _report(d: Descriptor, num_lat: EulerLattice, branch: str, bound: int) -> ClassificationReport:
    ok, c, reason = serre_check(num_lat)
    if not ok:
        raise ClassificationInconsistency(f"Num of {d!r} fails the Serre identity ({reason})")
    exc = find_exceptional_class(num_lat, bound)
    sph = find_spherical_class(num_lat, c, bound)
    return ClassificationReport(
        descriptor=d,
        branch=branch,
        num_rank=num_lat.rank,
        serre_ok=ok,
        coxeter=c,
        has_exceptional_class=exc is not None,
        exceptional_witness=exc,
        has_spherical_class=sph is not None,
        spherical_witness=sph,
        fractional_cy=fractional_cy(c, CY_SEARCH),
    )


def _fail(d, msg):
    raise ClassificationInconsistency(f"{d!r}: {msg}")


def _block_diagonal(mats: list[IntMatrix]) -> IntMatrix:
    return direct_sum([EulerLattice(m) for m in mats]).gram


def classify(d: Descriptor, search_bound: int = 4) -> ClassificationReport:
    if isinstance(d, DirectSum):
        parts = [classify(p, search_bound) for p in d.parts]
        num = radical_quotient(build_lattice(d))
        if num.num_rank != sum(p.num_rank for p in parts):
            _fail(d, "numerical rank is not additive")
        sum_lat = direct_sum([EulerLattice(_num_gram(p.descriptor)) for p in parts])
        rep = _report(d, sum_lat, "+".join(p.branch for p in parts), search_bound)
        if rep.coxeter != _block_diagonal([p.coxeter for p in parts]):
            _fail(d, "Coxeter matrix of the sum is not block diagonal")
        if rep.has_exceptional_class != any(p.has_exceptional_class for p in parts):
            _fail(d, "exceptional scan of the sum disagrees with its summands")
        rep.components = parts
        return rep

    lat = build_lattice(d)
    num = radical_quotient(lat)
    if isinstance(d, QuiverCat):
        rep = _report(d, num.lattice, "QuiverRep", search_bound)
        q = d.quiver
        if num.num_rank != q.vertex_count:
            _fail(d, "Ringel form of an acyclic quiver should be nondegenerate")
        if q.vertex_count and not rep.has_exceptional_class:
            _fail(d, "simple representations give exceptional classes")
        if q.is_dynkin():
            rep.dynkin_type = q.dynkin_type()
            if rep.fractional_cy is None:
                _fail(d, "Dynkin quiver without fractional Calabi-Yau identity")
            if rep.has_spherical_class:
                _fail(d, "positive definite form has no isotropic classes")
        elif rep.fractional_cy is not None:
            _fail(d, "non-Dynkin quiver with a periodic Coxeter matrix")
        return rep
    if isinstance(d, TubeCat):
        rep = _report(d, num.lattice, "Tube", search_bound)
        r = d.rank
        if num.num_rank != r - 1:
            _fail(d, f"tube Num rank {num.num_rank}, expected {r - 1}")
        total = tuple([1] * r)
        if any(num.project(total)) or list(num.radical_basis) != [total]:
            _fail(d, "total class of the peripheral simples is not the radical")
        if rep.has_exceptional_class != (r >= 2):
            _fail(d, "peripheral simples are exceptional exactly when r >= 2")
        return rep
    if isinstance(d, CurveCat):
        rep = _report(d, num.lattice, "CurveLike", search_bound)
        if num.num_rank != 2:
            _fail(d, "a curve has Num = Z^2")
        g = d.genus
        if rep.coxeter.tolist() != [[1, 2 * g - 2], [0, 1]]:
            _fail(d, f"Coxeter matrix {rep.coxeter.tolist()}")
        if not rep.has_spherical_class:
            _fail(d, "point sheaves give a spherical class")
        if rep.has_exceptional_class != (g == 0):
            _fail(d, "exceptional classes exist exactly for genus 0")
        return rep
    raise InputError(f"not a category descriptor: {d!r}")


def _num_gram(d: Descriptor) -> IntMatrix:
    if isinstance(d, DirectSum):
        return direct_sum([EulerLattice(_num_gram(p)) for p in d.parts]).gram
    return radical_quotient(build_lattice(d)).induced_gram


def descriptor_suite(max_tube: int = 4, max_genus: int = 4) -> list[Descriptor]:
    """Tubes, curves, every orientation of A2..A4 and D4, and all two-term
    direct sums of these."""
    from hercat.quiver import dynkin_quiver

    base: list[Descriptor] = [TubeCat(r) for r in range(1, max_tube + 1)]
    base += [CurveCat(g) for g in range(max_genus + 1)]
    for kind in ("A2", "A3", "A4", "D4"):
        q = dynkin_quiver(kind)
        base += [QuiverCat(o) for o in q.all_orientations()]
    sums = [DirectSum((a, b)) for i, a in enumerate(base) for b in base[i:]]
    return base + sums
