"""Finite-dimensional representations of finite quivers over Q.

Everything here reduces to one linear map. For representations M, N the
complex

    0 -> Hom(M, N) -> (+)_i Hom(M_i, N_i) --d--> (+)_{a:i->j} Hom(M_i, N_j) -> Ext^1(M, N) -> 0

with ``d(f)_a = f_j M_a - N_a f_i`` computes both Hom (kernel) and Ext^1
(cokernel) because path algebras are hereditary. Cyclic quivers are allowed
as long as the representations are nilpotent.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from hercat.errors import (
    DimensionMismatch,
    HercatError,
    InputError,
    NotExceptionalSequence,
    NotSinkOrSource,
    NotTranslatable,
    SimpleSummandPresent,
    Unsupported,
)
from hercat.klattice import EulerLattice, coxeter
from hercat.linalg import IntMatrix, QuotientCoords, det, matmul, nullspace, rank, rref

Matrix = tuple[tuple[Fraction, ...], ...]


# -- quivers ------------------------------------------------------------------


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        for k, (s, t) in enumerate(arrows):
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise InputError(f"arrows[{k}] = ({s}, {t}) out of range for {self.vertex_count} vertices")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def linear_a(cls, n: int) -> "Quiver":
        """0 -> 1 -> ... -> n-1."""
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cyclic(cls, r: int) -> "Quiver":
        """Arrows i -> i+1 mod r; a single loop when r = 1."""
        return cls(r, tuple((i, (i + 1) % r) for i in range(r)))

    @classmethod
    def from_edges(cls, n: int, edges, orientation: int = 0) -> "Quiver":
        """Orient an unoriented edge list; bit k of ``orientation`` flips edge k."""
        arrows = []
        for k, (u, v) in enumerate(edges):
            arrows.append((v, u) if orientation >> k & 1 else (u, v))
        return cls(n, tuple(arrows))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((min(s, t), max(s, t)) for s, t in self.arrows)

    def all_orientations(self) -> list["Quiver"]:
        return [Quiver.from_edges(self.vertex_count, self.edges, o) for o in range(2 ** len(self.arrows))]

    def out_arrows(self, v: int) -> list[int]:
        return [k for k, (s, _) in enumerate(self.arrows) if s == v]

    def in_arrows(self, v: int) -> list[int]:
        return [k for k, (_, t) in enumerate(self.arrows) if t == v]

    def is_sink(self, v: int) -> bool:
        return not self.out_arrows(v)

    def is_source(self, v: int) -> bool:
        return not self.in_arrows(v)

    @cached_property
    def acyclic(self) -> bool:
        indeg = [0] * self.vertex_count
        for _, t in self.arrows:
            indeg[t] += 1
        queue = deque(v for v in range(self.vertex_count) if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for k in self.out_arrows(v):
                t = self.arrows[k][1]
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        return seen == self.vertex_count

    def reflected(self, v: int) -> "Quiver":
        return Quiver(self.vertex_count, tuple((t, s) if v in (s, t) else (s, t) for s, t in self.arrows))

    def components(self) -> list[list[int]]:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.arrows:
            parent[find(s)] = find(t)
        groups: dict[int, list[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    @property
    def connected(self) -> bool:
        return len(self.components()) <= 1

    def is_dynkin(self) -> bool:
        """Is the underlying graph a disjoint union of A, D, E diagrams?

        Equivalent to positive definiteness of the symmetrized Ringel form.
        """
        g = ringel_form(self).tolist()
        n = self.vertex_count
        sym = [[g[i][j] + g[j][i] for j in range(n)] for i in range(n)]
        return all(det([r[:k] for r in sym[:k]]) > 0 for k in range(1, n + 1))

    def dynkin_type(self) -> str:
        """Type label such as ``A3`` or ``A1+D4``; raises on non-Dynkin input."""
        if not self.is_dynkin():
            raise Unsupported("quiver is not of Dynkin type")
        labels = []
        for comp in self.components():
            n = len(comp)
            deg = {v: 0 for v in comp}
            nbrs = {v: [] for v in comp}
            for s, t in self.arrows:
                if s in deg:
                    deg[s] += 1
                    deg[t] += 1
                    nbrs[s].append(t)
                    nbrs[t].append(s)
            branch = [v for v in comp if deg[v] == 3]
            if not branch:
                labels.append(f"A{n}")
                continue
            c = branch[0]
            arms = []
            for start in nbrs[c]:
                length, prev, cur = 1, c, start
                while deg[cur] == 2:
                    prev, cur = cur, next(x for x in nbrs[cur] if x != prev)
                    length += 1
                arms.append(length)
            arms.sort()
            if arms[:2] == [1, 1]:
                labels.append(f"D{n}")
            else:
                labels.append(f"E{n}")
        return "+".join(sorted(labels))


def ringel_form(q: Quiver) -> IntMatrix:
    """Gram matrix of the Euler form in the basis of simples:
    entry (i, j) = delta_ij - #{arrows i -> j}."""
    n = q.vertex_count
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        g[s][t] -= 1
    return IntMatrix.of(g, n)


def ringel_lattice(q: Quiver) -> EulerLattice:
    return EulerLattice(ringel_form(q), tuple(f"S{i}" for i in range(q.vertex_count)))


# -- representations ----------------------------------------------------------


def _frac_matrix(m, rows: int, cols: int, where: str) -> Matrix:
    m = list(m)
    if len(m) != rows:
        raise DimensionMismatch(f"{where}: expected {rows} rows, got {len(m)}")
    out = []
    for i, r in enumerate(m):
        r = list(r)
        if len(r) != cols:
            raise DimensionMismatch(f"{where}[{i}]: expected {cols} columns, got {len(r)}")
        out.append(tuple(Fraction(x) for x in r))
    return tuple(out)


def _zeros(rows: int, cols: int) -> Matrix:
    z = Fraction(0)
    return tuple((z,) * cols for _ in range(rows))


def _mul(a: Matrix, b: Matrix, inner: int, cols: int) -> Matrix:
    return tuple(tuple(x) for x in matmul(a, b, inner, cols))


def _trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


@dataclass(frozen=True)
class Rep:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        q = self.quiver
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != q.vertex_count:
            raise DimensionMismatch(f"dims has length {len(dims)}, quiver has {q.vertex_count} vertices")
        if any(d < 0 for d in dims):
            raise InputError("dimensions must be nonnegative")
        maps = tuple(self.maps)
        if len(maps) != len(q.arrows):
            raise DimensionMismatch(f"{len(maps)} maps for {len(q.arrows)} arrows")
        maps = tuple(
            _frac_matrix(m, dims[t], dims[s], f"maps[{k}]") for k, (m, (s, t)) in enumerate(zip(maps, q.arrows))
        )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)

    @classmethod
    def zero_maps(cls, q: Quiver, dims) -> "Rep":
        return cls(q, tuple(dims), tuple(_zeros(dims[t], dims[s]) for s, t in q.arrows))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    @cached_property
    def nilpotent(self) -> bool:
        """Do all sufficiently long path compositions vanish?"""
        if self.quiver.acyclic:
            return True
        n = self.total_dim
        if n == 0:
            return True
        big = self.block_operators()
        # span of all path products of length k, as flattened n x n matrices
        layer = [b for b in big]
        for _ in range(n):
            flat = [[x for r in m for x in r] for m in layer]
            basis, _ = rref(flat, n * n)
            if not basis:
                return True
            mats = [tuple(tuple(row[i * n : (i + 1) * n]) for i in range(n)) for row in basis]
            layer = [_mul(b, m, n, n) for b in big for m in mats]
        flat = [[x for r in m for x in r] for m in layer]
        return rank(flat, n * n) == 0

    def block_operators(self) -> list[Matrix]:
        """Each arrow map embedded as an operator on the total space."""
        offs = _offsets(self.dims)
        n = self.total_dim
        out = []
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            big = [[Fraction(0)] * n for _ in range(n)]
            for r in range(self.dims[t]):
                for c in range(self.dims[s]):
                    big[offs[t] + r][offs[s] + c] = m[r][c]
            out.append(tuple(tuple(r) for r in big))
        return out


def _offsets(dims) -> list[int]:
    out, acc = [], 0
    for d in dims:
        out.append(acc)
        acc += d
    return out


def simple(q: Quiver, i: int) -> Rep:
    return Rep.zero_maps(q, tuple(int(j == i) for j in range(q.vertex_count)))


def direct_sum(reps: Sequence[Rep]) -> Rep:
    if not reps:
        raise InputError("direct_sum of an empty list")
    q = reps[0].quiver
    if any(r.quiver != q for r in reps):
        raise DimensionMismatch("direct sum over different quivers")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.vertex_count))
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        m = [[Fraction(0)] * dims[s] for _ in range(dims[t])]
        ro = co = 0
        for r in reps:
            blk = r.maps[k]
            for i in range(r.dims[t]):
                for j in range(r.dims[s]):
                    m[ro + i][co + j] = blk[i][j]
            ro += r.dims[t]
            co += r.dims[s]
        maps.append(m)
    return Rep(q, dims, tuple(maps))


def _paths_from(q: Quiver, i: int) -> list[tuple[int, tuple[int, ...]]]:
    """All paths starting at ``i`` as (end vertex, arrow sequence)."""
    if not q.acyclic:
        raise Unsupported("projective representations are infinite-dimensional on cyclic quivers")
    out = [(i, ())]
    frontier = [(i, ())]
    while frontier:
        nxt = []
        for v, p in frontier:
            for k in q.out_arrows(v):
                nxt.append((q.arrows[k][1], p + (k,)))
        out.extend(nxt)
        frontier = nxt
    return out


def _path_basis(q: Quiver, i: int) -> list[list[tuple[int, ...]]]:
    basis = [[] for _ in range(q.vertex_count)]
    for v, p in _paths_from(q, i):
        basis[v].append(p)
    return basis


def projective(q: Quiver, i: int) -> Rep:
    """P_i: the space at j has the paths i ~> j as basis."""
    basis = _path_basis(q, i)
    index = [{p: n for n, p in enumerate(b)} for b in basis]
    dims = tuple(len(b) for b in basis)
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        m = [[Fraction(0)] * dims[s] for _ in range(dims[t])]
        for c, p in enumerate(basis[s]):
            m[index[t][p + (k,)]][c] = Fraction(1)
        maps.append(m)
    return Rep(q, dims, tuple(maps))


def injective(q: Quiver, i: int) -> Rep:
    """I_i, the dual of the projective at i over the opposite quiver."""
    op = Quiver(q.vertex_count, tuple((t, s) for s, t in q.arrows))
    p = projective(op, i)
    maps = tuple(tuple(zip(*m)) if m and m[0] else _zeros(p.dims[s], p.dims[t]) for m, (s, t) in zip(p.maps, op.arrows))
    return Rep(q, p.dims, maps)


# -- Hom and Ext --------------------------------------------------------------


class HomExtDims(NamedTuple):
    hom: int
    ext: int


@dataclass
class HomExtResult:
    source: Rep
    target: Rep
    hom_basis: list[tuple[Matrix, ...]]
    ext_cocycles: list[tuple[Matrix, ...]]
    _quotient: QuotientCoords = field(repr=False)

    @property
    def hom_dim(self) -> int:
        return len(self.hom_basis)

    @property
    def ext_dim(self) -> int:
        return len(self.ext_cocycles)

    @property
    def dims(self) -> HomExtDims:
        return HomExtDims(self.hom_dim, self.ext_dim)

    def ext_coords(self, cochain: Sequence[Matrix]) -> list[Fraction]:
        """Coordinates of a cochain's class in the basis ``ext_cocycles``."""
        return self._quotient.coords(_flatten_cochain(self.source, self.target, cochain))

    def cocycle(self, coords) -> tuple[Matrix, ...]:
        vec = [Fraction(0)] * self._quotient.n
        for k, c in enumerate(coords):
            if c:
                e = self._quotient.representative(k)
                vec = [x + c * y for x, y in zip(vec, e)]
        return _unflatten_cochain(self.source, self.target, vec)


def _check_pair(m: Rep, n: Rep) -> None:
    if m.quiver != n.quiver:
        raise DimensionMismatch("representations live over different quivers")
    if not m.quiver.acyclic and not (m.nilpotent and n.nilpotent):
        raise Unsupported("non-nilpotent representation on a cyclic quiver")


def _differential(m: Rep, n: Rep):
    """Matrix of d with columns indexed by (vertex, p, q) and rows by (arrow, p, q)."""
    q = m.quiver
    md, nd = m.dims, n.dims
    voff = []
    acc = 0
    for i in range(q.vertex_count):
        voff.append(acc)
        acc += nd[i] * md[i]
    nvars = acc
    rows = []
    for k, (s, t) in enumerate(q.arrows):
        ma, na = m.maps[k], n.maps[k]
        for p in range(nd[t]):
            for c in range(md[s]):
                row = [0] * nvars
                # (f_t M_a)[p, c] = sum_r f_t[p, r] M_a[r, c]
                for r in range(md[t]):
                    x = ma[r][c]
                    if x:
                        row[voff[t] + p * md[t] + r] += x
                # (N_a f_s)[p, c] = sum_r N_a[p, r] f_s[r, c]
                for r in range(nd[s]):
                    x = na[p][r]
                    if x:
                        row[voff[s] + r * md[s] + c] -= x
                rows.append(row)
    return rows, nvars, voff


def _cochain_size(m: Rep, n: Rep) -> int:
    return sum(n.dims[t] * m.dims[s] for s, t in m.quiver.arrows)


def _flatten_cochain(m: Rep, n: Rep, cochain) -> list[Fraction]:
    out = []
    for (s, t), z in zip(m.quiver.arrows, cochain):
        for p in range(n.dims[t]):
            for c in range(m.dims[s]):
                out.append(Fraction(z[p][c]))
    return out


def _unflatten_cochain(m: Rep, n: Rep, vec) -> tuple[Matrix, ...]:
    out = []
    pos = 0
    for s, t in m.quiver.arrows:
        rows = []
        for p in range(n.dims[t]):
            rows.append(tuple(vec[pos : pos + m.dims[s]]))
            pos += m.dims[s]
        out.append(tuple(rows))
    return tuple(out)


def _unflatten_morphism(m: Rep, n: Rep, vec, voff) -> tuple[Matrix, ...]:
    out = []
    for i in range(m.quiver.vertex_count):
        base = voff[i]
        out.append(
            tuple(tuple(vec[base + p * m.dims[i] : base + (p + 1) * m.dims[i]]) for p in range(n.dims[i]))
        )
    return tuple(out)


def hom_ext_dims(m: Rep, n: Rep) -> HomExtDims:
    """``(dim Hom(M, N), dim Ext^1(M, N))`` from a single rank computation."""
    _check_pair(m, n)
    rows, nvars, _ = _differential(m, n)
    r = rank(rows, nvars) if rows and nvars else 0
    return HomExtDims(nvars - r, _cochain_size(m, n) - r)


def hom_ext(m: Rep, n: Rep) -> HomExtResult:
    _check_pair(m, n)
    rows, nvars, voff = _differential(m, n)
    ncoch = len(rows)
    hom = [_unflatten_morphism(m, n, v, voff) for v in nullspace(rows, nvars)] if nvars else []
    image_rows = [list(col) for col in zip(*rows)] if rows and nvars else []
    quot = QuotientCoords(image_rows, ncoch)
    cocycles = [_unflatten_cochain(m, n, quot.representative(k)) for k in range(quot.dim)]
    return HomExtResult(m, n, hom, cocycles, quot)


def hom_dim(m: Rep, n: Rep) -> int:
    return hom_ext_dims(m, n).hom


def ext_dim(m: Rep, n: Rep) -> int:
    return hom_ext_dims(m, n).ext


def compose(g: Sequence[Matrix], f: Sequence[Matrix], a: Rep, b: Rep, c: Rep) -> tuple[Matrix, ...]:
    """``g o f`` for f: A -> B and g: B -> C, vertexwise."""
    return tuple(_mul(g[i], f[i], b.dims[i], a.dims[i]) for i in range(a.quiver.vertex_count))


def _trace_form(basis, m: Rep) -> list[list[Fraction]]:
    nv = m.quiver.vertex_count
    t = []
    for x in basis:
        row = []
        for y in basis:
            row.append(sum((_trace(_mul(x[i], y[i], m.dims[i], m.dims[i])) for i in range(nv)), Fraction(0)))
        t.append(row)
    return t


def endomorphism_top_dim(m: Rep) -> int:
    """``dim End(M) / rad End(M)``.

    In characteristic zero the radical of an algebra of operators is the
    kernel of its trace form ``(x, y) -> tr(xy)``.
    """
    if m.is_zero():
        return 0
    basis = hom_ext(m, m).hom_basis
    t = _trace_form(basis, m)
    return rank(t, len(basis))


def indecomposable(m: Rep) -> bool:
    """End(M) is local (zero representation: False)."""
    return endomorphism_top_dim(m) == 1


def is_exceptional(m: Rep) -> bool:
    return tuple(hom_ext_dims(m, m)) == (1, 0)


def is_projective(m: Rep) -> bool:
    """Ext^1(M, S) = 0 for every simple S."""
    return all(ext_dim(m, simple(m.quiver, i)) == 0 for i in range(m.quiver.vertex_count))


def has_projective_summand(m: Rep) -> bool:
    """Over a hereditary algebra any nonzero map to a projective has projective
    image, which splits off; so this is ``Hom(M, kQ) != 0``."""
    return any(hom_dim(m, projective(m.quiver, k)) for k in range(m.quiver.vertex_count))


def is_isomorphic(m: Rep, n: Rep) -> bool:
    """Isomorphism test for indecomposable M.

    M and N are isomorphic iff some composite M -> N -> M is a unit of the
    local ring End(M), i.e. lies outside the trace-form radical.
    """
    if m.quiver != n.quiver or m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    if not indecomposable(m):
        raise Unsupported("isomorphism test needs an indecomposable first argument")
    f = hom_ext(m, n).hom_basis
    g = hom_ext(n, m).hom_basis
    if not f or not g:
        return False
    end = hom_ext(m, m).hom_basis
    nv = m.quiver.vertex_count
    for fi in f:
        for gj in g:
            x = compose(gj, fi, m, n, m)
            for y in end:
                tr = sum((_trace(_mul(x[i], y[i], m.dims[i], m.dims[i])) for i in range(nv)), Fraction(0))
                if tr:
                    return True
    return False


# -- Auslander-Reiten translate -----------------------------------------------


def _path_map(q: Quiver, b: int) -> tuple[Matrix, ...]:
    """The map P_l -> P_k, p -> p after b, for an arrow b: k -> l."""
    k, l = q.arrows[b]
    src = _path_basis(q, l)
    dst = _path_basis(q, k)
    index = [{p: n for n, p in enumerate(x)} for x in dst]
    out = []
    for j in range(q.vertex_count):
        m = [[Fraction(0)] * len(src[j]) for _ in range(len(dst[j]))]
        for c, p in enumerate(src[j]):
            m[index[j][(b,) + p]][c] = Fraction(1)
        out.append(tuple(tuple(r) for r in m))
    return tuple(out)


def ar_translate(m: Rep) -> Rep:
    """tau M = D Ext^1(M, kQ), with (tau M)_k = D Ext^1(M, P_k).

    For an arrow b: k -> l the map (tau M)_k -> (tau M)_l is dual to the map
    Ext^1(M, P_l) -> Ext^1(M, P_k) induced by P_l -> P_k.
    """
    q = m.quiver
    if not q.acyclic:
        raise Unsupported("use the tube model for representations of cyclic quivers")
    if has_projective_summand(m):
        raise NotTranslatable("representation has a projective direct summand")
    proj = [projective(q, k) for k in range(q.vertex_count)]
    ext = [hom_ext(m, p) for p in proj]
    dims = tuple(e.ext_dim for e in ext)
    maps = []
    for b, (k, l) in enumerate(q.arrows):
        phi = _path_map(q, b)
        cols = []
        for z in ext[l].ext_cocycles:
            pushed = [
                _mul(phi[t], za, proj[l].dims[t], m.dims[s]) for za, (s, t) in zip(z, q.arrows)
            ]
            cols.append(ext[k].ext_coords(pushed))
        # cols[c][r]: Ext(M,P_l) -> Ext(M,P_k); transposed gives (tau M)_k -> (tau M)_l
        maps.append(tuple(tuple(cols[c][r] for r in range(dims[k])) for c in range(dims[l])))
    return Rep(q, dims, tuple(maps))


def coxeter_of(q: Quiver) -> IntMatrix:
    return coxeter(ringel_lattice(q))


# -- reflection functors ------------------------------------------------------


def reflect(q: Quiver, m: Rep, v: int) -> tuple[Quiver, Rep]:
    """BGP reflection at a sink (kernel construction) or source (cokernel)."""
    if m.quiver != q:
        raise DimensionMismatch("representation is not over the given quiver")
    if not 0 <= v < q.vertex_count:
        raise InputError(f"vertex {v} out of range")
    new_q = q.reflected(v)
    dims = list(m.dims)
    maps = [list(map(list, x)) for x in m.maps]
    if q.is_sink(v):
        incoming = q.in_arrows(v)
        blocks = [q.arrows[a][0] for a in incoming]
        width = sum(m.dims[i] for i in blocks)
        h = [[x for a in incoming for x in m.maps[a][r]] for r in range(m.dims[v])]
        if (rank(h, width) if h and width else 0) != m.dims[v]:
            raise SimpleSummandPresent(f"simple at sink {v} is a direct summand")
        ker = nullspace(h, width) if width else []
        dims[v] = len(ker)
        off = 0
        for a, i in zip(incoming, blocks):
            maps[a] = [[ker[c][off + r] for c in range(len(ker))] for r in range(m.dims[i])]
            off += m.dims[i]
    elif q.is_source(v):
        outgoing = q.out_arrows(v)
        blocks = [q.arrows[a][1] for a in outgoing]
        height = sum(m.dims[j] for j in blocks)
        h = [row for a in outgoing for row in m.maps[a]]
        if (rank(h, m.dims[v]) if h and m.dims[v] else 0) != m.dims[v]:
            raise SimpleSummandPresent(f"simple at source {v} is a direct summand")
        image = [list(col) for col in zip(*h)] if h and m.dims[v] else []
        quot = QuotientCoords(image, height)
        dims[v] = quot.dim
        off = 0
        for a, j in zip(outgoing, blocks):
            cols = []
            for c in range(m.dims[j]):
                e = [Fraction(0)] * height
                e[off + c] = Fraction(1)
                cols.append(quot.coords(e))
            maps[a] = [[cols[c][r] for c in range(m.dims[j])] for r in range(quot.dim)]
            off += m.dims[j]
    else:
        raise NotSinkOrSource(f"vertex {v} is neither a sink nor a source")
    return new_q, Rep(new_q, tuple(dims), tuple(maps))


def simple_reflection(q: Quiver, d, v: int) -> tuple[int, ...]:
    """s_v on dimension vectors: d_v -> sum over edges at v of the neighbour - d_v."""
    d = list(d)
    nb = 0
    for s, t in q.arrows:
        if s == v and t != v:
            nb += d[t]
        elif t == v and s != v:
            nb += d[s]
    d[v] = nb - d[v]
    return tuple(d)


# -- Dynkin enumeration -------------------------------------------------------


def positive_roots(q: Quiver) -> list[tuple[int, ...]]:
    """Positive roots of a Dynkin quiver, closed under simple reflections."""
    if not q.is_dynkin():
        raise Unsupported("positive roots are enumerated for Dynkin quivers only")
    n = q.vertex_count
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for v in range(n):
                s = simple_reflection(q, r, v)
                if all(x >= 0 for x in s) and any(s) and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen)


def _reduction_path(q: Quiver, d: tuple[int, ...]):
    """Shortest chain of sink/source reflections taking (q, d) to a simple root."""
    n = q.vertex_count
    start = (q.arrows, d)
    prev = {start: None}
    queue = deque([start])
    while queue:
        arrows, dims = queue.popleft()
        if sum(dims) == 1:
            steps = []
            state = (arrows, dims)
            while prev[state] is not None:
                state, v = prev[state]
                steps.append((state, v))
            return (arrows, dims), steps  # steps run from the simple back to start
        cur = Quiver(n, arrows)
        for v in range(n):
            if dims[v] == sum(dims):
                continue
            if cur.is_sink(v) or cur.is_source(v):
                nxt = (cur.reflected(v).arrows, simple_reflection(cur, dims, v))
                if nxt not in prev:
                    prev[nxt] = ((arrows, dims), v)
                    queue.append(nxt)
    raise HercatError(f"no reflection chain reaches a simple from {d}")


def indecomposable_with_dims(q: Quiver, d) -> Rep:
    """The indecomposable representation of a Dynkin quiver with root ``d``,
    built from a simple by reflection functors."""
    d = tuple(d)
    (arrows, dims), steps = _reduction_path(q, d)
    cur_q = Quiver(q.vertex_count, arrows)
    rep = simple(cur_q, dims.index(1))
    for (arrows_prev, _), v in steps:
        cur_q, rep = reflect(cur_q, rep, v)
        assert cur_q.arrows == arrows_prev
    return rep


def enumerate_indecomposables(q: Quiver, dim_bound: int = 8) -> list[Rep]:
    if not q.acyclic or not q.is_dynkin():
        raise Unsupported("enumeration is restricted to Dynkin quivers")
    roots = [r for r in positive_roots(q) if max(r) <= dim_bound]
    return [indecomposable_with_dims(q, r) for r in roots]


def exceptional_class_injectivity(q: Quiver) -> bool:
    exc = [m for m in enumerate_indecomposables(q) if is_exceptional(m)]
    classes = [m.dims for m in exc]
    return len(set(classes)) == len(classes)


# -- tilting from exceptional sequences ---------------------------------------


def validate_exceptional_sequence(seq: Sequence[Rep]) -> None:
    for k, e in enumerate(seq):
        if not is_exceptional(e):
            raise NotExceptionalSequence(f"seq[{k}] is not exceptional")
    for i in range(len(seq)):
        for j in range(i):
            if tuple(hom_ext_dims(seq[i], seq[j])) != (0, 0):
                raise NotExceptionalSequence(f"Hom/Ext from seq[{i}] to seq[{j}] do not vanish")


def _glue(sub: Rep, quotients: list[Rep], cocycles: list[tuple[Matrix, ...]]) -> Rep:
    """Middle term of the extension of (+) quotients by sub, glued blockwise by
    ``cocycles[c]``, a cochain from ``quotients[c]`` to ``sub``."""
    q = sub.quiver
    top = direct_sum(quotients) if quotients else None
    if top is None:
        return sub
    x = direct_sum([sub, top])
    maps = [list(map(list, mm)) for mm in x.maps]
    for k, (s, t) in enumerate(q.arrows):
        col = sub.dims[s]
        for y, z in zip(quotients, cocycles):
            for r in range(sub.dims[t]):
                for c in range(y.dims[s]):
                    maps[k][r][col + c] = z[k][r][c]
            col += y.dims[s]
    return Rep(q, x.dims, tuple(maps))


def universal_extension(summands: Sequence[Rep], e: Rep) -> Rep:
    """Middle term of 0 -> E -> X -> Ext^1(F, E) (x)_{End F} F -> 0 for
    F = (+) summands (pairwise non-isomorphic bricks).

    Ext^1(F, E) is generated as a right End F-module by a complement of the
    classes pulled back along radical maps F_i -> F_j (i != j); one copy of
    F_i per generator realizes the tensor product.
    """
    quotients, cocycles = [], []
    exts = [hom_ext(f, e) for f in summands]
    for i, fi in enumerate(summands):
        if not exts[i].ext_dim:
            continue
        pulled = []
        for j, fj in enumerate(summands):
            if j == i or not exts[j].ext_dim:
                continue
            for phi in hom_ext(fi, fj).hom_basis:
                for xi in exts[j].ext_cocycles:
                    z = [
                        _mul(xa, phi[s], fj.dims[s], fi.dims[s]) for xa, (s, t) in zip(xi, fi.quiver.arrows)
                    ]
                    pulled.append(exts[i].ext_coords(z))
        top = QuotientCoords(pulled, exts[i].ext_dim)
        for k in top.free:
            quotients.append(fi)
            cocycles.append(exts[i].ext_cocycles[k])
    return _glue(e, quotients, cocycles)


def tilting_summands(seq: Sequence[Rep]) -> list[Rep]:
    validate_exceptional_sequence(seq)
    if not seq:
        return []
    summands = [seq[0]]
    for e in seq[1:]:
        summands.append(universal_extension(summands, e))
    return summands


def tilting_from_sequence(seq: Sequence[Rep]) -> Rep:
    return direct_sum(tilting_summands(seq))


# -- searches over desk-scale categories --------------------------------------


class MinExtResult(NamedTuple):
    obj: object
    hom: int
    ext: int
    kind: str  # "exceptional" or "1-spherical"


def min_self_ext_search(target, bound: int = 8) -> MinExtResult:
    """Indecomposable minimizing dim Ext^1(X, X) on a Dynkin quiver or a tube.

    ``target`` is a :class:`Quiver` or a :class:`hercat.tube.Tube`. The result
    is checked to be exceptional or 1-spherical (End = k and tau X = X).
    """
    from hercat import tube as tubes

    if isinstance(target, Quiver):
        best = None
        for x in enumerate_indecomposables(target, bound):
            h, e = hom_ext_dims(x, x)
            if best is None or e < best[2]:
                best = (x, h, e)
        x, h, e = best
        if (h, e) != (1, 0):
            raise HercatError("minimal object is neither exceptional nor 1-spherical")
        return MinExtResult(x, h, e, "exceptional")
    if isinstance(target, tubes.Tube):
        best = None
        for length in range(1, bound + 1):
            for base in range(target.rank):
                x = tubes.TubeObject(target.rank, base, length)
                h, e = tubes.tube_hom(x, x)
                if best is None or e < best[2]:
                    best = (x, h, e)
        x, h, e = best
        if (h, e) == (1, 0):
            return MinExtResult(x, h, e, "exceptional")
        if h == 1 and tubes.tau(x) == x:
            return MinExtResult(x, h, e, "1-spherical")
        raise HercatError("minimal object is neither exceptional nor 1-spherical")
    raise Unsupported(f"unsupported search target {type(target).__name__}")


def hom_graph(objs: Sequence[Rep]) -> list[list[bool]]:
    return [[bool(hom_dim(x, y)) for y in objs] for x in objs]


def path_distance_check(q: Quiver) -> bool:
    """Unoriented Hom-paths of length <= 2 between all indecomposables, and
    oriented ones of length <= 2 wherever any oriented path exists."""
    if not q.connected:
        raise Unsupported("path check needs a connected quiver")
    objs = enumerate_indecomposables(q)
    h = hom_graph(objs)
    n = len(objs)
    und = [[h[i][j] or h[j][i] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and not und[i][j] and not any(und[i][k] and und[k][j] for k in range(n)):
                return False
    reach = [row[:] for row in h]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    for i in range(n):
        for j in range(n):
            if i != j and reach[i][j] and not h[i][j] and not any(h[i][k] and h[k][j] for k in range(n)):
                return False
    return True


# -- random generation --------------------------------------------------------


def random_acyclic_quiver(rng: random.Random, max_vertices: int = 5, max_arrows: int = 6) -> Quiver:
    """Arrows only go from lower to higher index, so the quiver is acyclic."""
    n = rng.randint(1, max_vertices)
    arrows = []
    if n > 1:
        for _ in range(rng.randint(0, max_arrows)):
            s, t = sorted(rng.sample(range(n), 2))
            arrows.append((s, t))
    return Quiver(n, tuple(arrows))


def random_rep(rng: random.Random, q: Quiver, max_dim: int = 4, entry_bound: int = 3) -> Rep:
    dims = tuple(rng.randint(0, max_dim) for _ in range(q.vertex_count))
    maps = []
    for s, t in q.arrows:
        maps.append(
            [
                [Fraction(rng.randint(-entry_bound, entry_bound), rng.randint(1, entry_bound)) for _ in range(dims[s])]
                for _ in range(dims[t])
            ]
        )
    return Rep(q, dims, tuple(maps))


def dynkin_quiver(kind: str, orientation: int = 0) -> Quiver:
    """Quiver of type A_n, D_n (n >= 4) or E_6..E_8 with a chosen orientation."""
    letter, n = kind[0].upper(), int(kind[1:])
    if letter == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif letter == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif letter == "E" and 6 <= n <= 8:
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    else:
        raise InputError(f"unknown Dynkin type {kind!r}")
    return Quiver.from_edges(n, edges, orientation)


__all__ = [
    "HomExtDims",
    "HomExtResult",
    "MinExtResult",
    "Quiver",
    "Rep",
    "ar_translate",
    "compose",
    "coxeter_of",
    "direct_sum",
    "dynkin_quiver",
    "endomorphism_top_dim",
    "enumerate_indecomposables",
    "exceptional_class_injectivity",
    "ext_dim",
    "has_projective_summand",
    "hom_dim",
    "hom_ext",
    "hom_ext_dims",
    "hom_graph",
    "indecomposable",
    "indecomposable_with_dims",
    "injective",
    "is_exceptional",
    "is_isomorphic",
    "is_projective",
    "min_self_ext_search",
    "path_distance_check",
    "positive_roots",
    "projective",
    "random_acyclic_quiver",
    "random_rep",
    "reflect",
    "ringel_form",
    "ringel_lattice",
    "simple",
    "simple_reflection",
    "tilting_from_sequence",
    "tilting_summands",
    "universal_extension",
    "validate_exceptional_sequence",
]
