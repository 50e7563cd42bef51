"""Truncated simplicial sets, polygon combinatorics, and 2-Segal checkers.

Simplices are modeled as polygons: an n-simplex is an (n+1)-gon with
vertices 0..n in clockwise order.  A triangulation or subdivision of the
polygon induces a map from X_n to an iterated pullback of lower levels,
and the 2-Segal property asks these maps to be bijections.  The face and
degeneracy recipes of the polygon calculus (delete a triangle, attach a
degenerate triangle) are implemented here and checked against the stored
tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .reporting import CheckResult, Report
from .spans import FinMap, FinSet, StructuralError, identity_map


class GluingError(ValueError):
    """Raised when polygon components do not share matching edges."""


@dataclass(frozen=True)
class TruncSimplicialSet:
    """Levels X_0..X_N with face maps d_i^n and degeneracies s_i^n.

    `face[n]` holds (d_0^n, ..., d_n^n) for 1 <= n <= N (face[0] is empty);
    `degen[n]` holds (s_0^n, ..., s_n^n) for 0 <= n < N (degen[N] is empty).
    """

    N: int
    levels: tuple[FinSet, ...]
    face: tuple[tuple[FinMap, ...], ...]
    degen: tuple[tuple[FinMap, ...], ...]

    def __post_init__(self):
        if self.N < 2 or len(self.levels) != self.N + 1:
            raise StructuralError("need levels X_0..X_N with N >= 2")
        if len(self.face) != self.N + 1 or len(self.degen) != self.N + 1:
            raise StructuralError("face/degen tuples must be indexed by level")
        if self.face[0] != () or self.degen[self.N] != ():
            raise StructuralError("face[0] and degen[N] must be empty")
        for n in range(1, self.N + 1):
            if len(self.face[n]) != n + 1:
                raise StructuralError(f"need n+1 face maps at level {n}")
            for i, d in enumerate(self.face[n]):
                if d.dom != self.levels[n] or d.cod != self.levels[n - 1]:
                    raise StructuralError(f"face d_{i}^{n} has wrong boundaries")
        for n in range(self.N):
            if len(self.degen[n]) != n + 1:
                raise StructuralError(f"need n+1 degeneracy maps at level {n}")
            for i, s in enumerate(self.degen[n]):
                if s.dom != self.levels[n] or s.cod != self.levels[n + 1]:
                    raise StructuralError(f"degeneracy s_{i}^{n} has wrong boundaries")

    def d(self, n: int, i: int) -> FinMap:
        return self.face[n][i]

    def s(self, n: int, i: int) -> FinMap:
        return self.degen[n][i]


def make_simplicial(levels, face, degen) -> TruncSimplicialSet:
    """Assemble a TruncSimplicialSet from levels plus per-level map lists."""
    N = len(levels) - 1
    return TruncSimplicialSet(
        N,
        tuple(levels),
        tuple(tuple(fs) for fs in face),
        tuple(tuple(ss) for ss in degen),
    )


def check_simplicial_identities(X: TruncSimplicialSet) -> Report:
    """Verify every simplicial identity within the truncation; failures name
    the identity, the indices, and a witnessing element."""
    report = Report()
    violations = []
    for n in range(2, X.N + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = X.d(n, j).then(X.d(n - 1, i))
                rhs = X.d(n, i).then(X.d(n - 1, j - 1))
                for e in X.levels[n]:
                    if lhs.table[e] != rhs.table[e]:
                        violations.append((f"d_{i} d_{j} = d_{j-1} d_{i}", n, e))
                        break
    for n in range(X.N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = X.s(n, j).then(X.s(n + 1, i))
                rhs = X.s(n, i).then(X.s(n + 1, j + 1))
                for e in X.levels[n]:
                    if lhs.table[e] != rhs.table[e]:
                        violations.append((f"s_{i} s_{j} = s_{j+1} s_{i}", n, e))
                        break
    for n in range(X.N):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = X.s(n, j).then(X.d(n + 1, i))
                if i < j:
                    rhs = X.d(n, i).then(X.s(n - 1, j - 1)) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = identity_map(X.levels[n])
                else:
                    rhs = X.d(n, i - 1).then(X.s(n - 1, j)) if n >= 1 else None
                if rhs is None:
                    continue
                for e in X.levels[n]:
                    if lhs.table[e] != rhs.table[e]:
                        violations.append((f"d_{i} s_{j} mixed identity", n, e))
                        break
    for name, n, e in violations:
        report.add(CheckResult(f"simplicial identity {name} at level {n}", False, witness=e))
    if not violations:
        report.add(CheckResult("simplicial identities", True))
    return report


# ---------------------------------------------------------------------------
# polygon combinatorics


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of the (n+1)-gon on vertices 0..n."""

    n: int
    triangles: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise StructuralError("polygon needs at least 3 vertices")
        if len(self.triangles) != self.n - 1:
            raise StructuralError("a triangulation has n-1 triangles")
        if list(self.triangles) != sorted(tuple(sorted(t)) for t in self.triangles):
            raise StructuralError("triangles must be sorted triples in sorted order")
        edge_count: dict[tuple[int, int], int] = {}
        for t in self.triangles:
            if not all(0 <= v <= self.n for v in t):
                raise StructuralError("triangle vertex out of range")
            for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
                edge_count[e] = edge_count.get(e, 0) + 1
        for e in boundary_edges(self.n):
            if edge_count.get(e, 0) != 1:
                raise StructuralError(f"boundary edge {e} not covered exactly once")
        for e, c in edge_count.items():
            if e not in boundary_edges(self.n) and c != 2:
                raise StructuralError(f"diagonal {e} not shared by two triangles")

    @property
    def diagonals(self) -> tuple[tuple[int, int], ...]:
        seen = set()
        for t in self.triangles:
            for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
                if e not in boundary_edges(self.n):
                    seen.add(e)
        return tuple(sorted(seen))


@dataclass(frozen=True)
class Subdivision:
    """A subdivision of the (n+1)-gon into cells with at least 3 vertices,
    cut out by pairwise noncrossing diagonals."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(len(c) < 3 for c in self.cells):
            raise StructuralError("cells must be polygons")
        if list(self.cells) != sorted(tuple(sorted(c)) for c in self.cells):
            raise StructuralError("cells must be sorted tuples in sorted order")
        edge_count: dict[tuple[int, int], int] = {}
        for c in self.cells:
            if not all(0 <= v <= self.n for v in c):
                raise StructuralError("cell vertex out of range")
            cycle = list(c) + [c[0]]
            for a, b in zip(cycle, cycle[1:]):
                e = (min(a, b), max(a, b))
                edge_count[e] = edge_count.get(e, 0) + 1
        boundary = set(boundary_edges(self.n))
        for e in boundary:
            if edge_count.get(e, 0) != 1:
                raise StructuralError(f"boundary edge {e} not covered exactly once")
        diagonals = [e for e in edge_count if e not in boundary]
        for e in diagonals:
            if edge_count[e] != 2:
                raise StructuralError(f"diagonal {e} not shared by two cells")
        for (a, b) in diagonals:
            for (c, d) in diagonals:
                if a < c < b < d:
                    raise StructuralError(f"diagonals {(a, b)} and {(c, d)} cross")


def boundary_edges(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, i + 1) for i in range(n)) + ((0, n),)


def _triangulations_of(vertices: tuple[int, ...]):
    if len(vertices) == 2:
        yield ()
        return
    v0, vk = vertices[0], vertices[-1]
    for m in range(1, len(vertices) - 1):
        for left in _triangulations_of(vertices[: m + 1]):
            for right in _triangulations_of(vertices[m:]):
                yield left + ((v0, vertices[m], vk),) + right


def enumerate_triangulations(n: int) -> tuple[Triangulation, ...]:
    """All triangulations of the (n+1)-gon, Catalan(n-1) of them, in a
    deterministic order."""
    if n < 2:
        raise StructuralError("polygon needs at least 3 vertices")
    out = []
    for tris in _triangulations_of(tuple(range(n + 1))):
        out.append(Triangulation(n, tuple(sorted(tuple(sorted(t)) for t in tris))))
    return tuple(out)


def fan_triangulation(vertices: Sequence[int], anchor: int = 0) -> tuple[tuple[int, int, int], ...]:
    """Fan of a polygon given by `vertices` (cyclic order) from vertices[anchor]."""
    vs = list(vertices)
    a = vs[anchor]
    rest = vs[anchor + 1 :] + vs[:anchor]
    return tuple(tuple(sorted((a, rest[i], rest[i + 1]))) for i in range(len(rest) - 1))


def _subdivisions_of(vertices: tuple[int, ...]):
    if len(vertices) == 2:
        yield ()
        return
    v0, vk = vertices[0], vertices[-1]
    interior = vertices[1:-1]
    for size in range(1, len(interior) + 1):
        for subset in itertools.combinations(interior, size):
            cell = (v0,) + subset + (vk,)
            gap_lists = []
            walls = (v0,) + subset + (vk,)
            ok = True
            for a, b in zip(walls, walls[1:]):
                ia, ib = vertices.index(a), vertices.index(b)
                gap_lists.append(vertices[ia : ib + 1])
            for combo in itertools.product(*[_subdivisions_of(g) for g in gap_lists]):
                cells = (cell,)
                for part in combo:
                    cells = cells + part
                yield cells


def enumerate_subdivisions(n: int) -> tuple[Subdivision, ...]:
    """All polygon subdivisions of the (n+1)-gon (little Schroeder count)."""
    out = []
    for cells in _subdivisions_of(tuple(range(n + 1))):
        out.append(Subdivision(n, tuple(sorted(tuple(sorted(c)) for c in cells))))
    return tuple(out)


# ---------------------------------------------------------------------------
# induced maps and iterated pullbacks


def vertex_map(X: TruncSimplicialSet, n: int, keep: Sequence[int]) -> FinMap:
    """The map X_n -> X_{k} induced by the monotone inclusion of `keep`."""
    keep_set = set(keep)
    cur = identity_map(X.levels[n])
    level = n
    for v in sorted(set(range(n + 1)) - keep_set, reverse=True):
        cur = cur.then(X.d(level, v))
        level -= 1
    return cur


def edge_map(X: TruncSimplicialSet, n: int, kind) -> FinMap:
    """e_i^n picks the edge from i-1 to i; kind="out" picks the edge 0..n."""
    if kind == "out":
        return vertex_map(X, n, (0, n))
    i = int(kind)
    if not 1 <= i <= n:
        raise StructuralError("interior edge index out of range")
    return vertex_map(X, n, (i - 1, i))


def _cell_edge_value(X: TruncSimplicialSet, cell: tuple[int, ...], element: int, edge: tuple[int, int]) -> int:
    k = len(cell) - 1
    pi, pj = cell.index(edge[0]), cell.index(edge[1])
    return vertex_map(X, k, (pi, pj)).table[element] if k > 1 else element


@dataclass(frozen=True)
class PolygonStack:
    """The iterated pullback attached to a polygon subdivision: one component
    per cell, matching along shared diagonals.  Cells are kept in sorted
    order and elements in lexicographic order, left-nested."""

    X: TruncSimplicialSet
    n: int
    cells: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> dict[tuple[int, ...], int]:
        return _stack_index(self)

    def edge_value(self, element: tuple[int, ...], edge: tuple[int, int]) -> int:
        for c, e in zip(self.cells, element):
            if edge[0] in c and edge[1] in c:
                return _cell_edge_value(self.X, c, e, edge)
        raise GluingError(f"edge {edge} not present in the subdivision")


@lru_cache(maxsize=None)
def _stack_index(stack: PolygonStack) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(stack.elements)}


@lru_cache(maxsize=None)
def polygon_stack(X: TruncSimplicialSet, n: int, cells: tuple[tuple[int, ...], ...]) -> PolygonStack:
    shared: dict[tuple[int, int], list[int]] = {}
    for ci, c in enumerate(cells):
        for a, b in itertools.combinations(c, 2):
            shared.setdefault((a, b), []).append(ci)
    diagonals = {e: cs for e, cs in shared.items() if len(cs) == 2}

    partial: list[tuple[tuple[int, ...], dict]] = [((), {})]
    for ci, c in enumerate(cells):
        k = len(c) - 1
        grown = []
        for chosen, edges in partial:
            for e in X.levels[k]:
                new_edges = dict(edges)
                ok = True
                for a, b in itertools.combinations(c, 2):
                    if (a, b) not in diagonals:
                        continue
                    v = _cell_edge_value(X, c, e, (a, b))
                    if (a, b) in new_edges:
                        if new_edges[(a, b)] != v:
                            ok = False
                            break
                    else:
                        new_edges[(a, b)] = v
                if ok:
                    grown.append((chosen + (e,), new_edges))
        partial = grown
    elements = tuple(sorted(chosen for chosen, _ in partial))
    return PolygonStack(X, n, cells, elements)


@dataclass(frozen=True)
class SegalWitness:
    """A triangulation map together with its inverse when bijective."""

    n: int
    triangulation: Triangulation
    stack: PolygonStack
    forward: FinMap
    inverse: Optional[FinMap]


def subdivision_map(X: TruncSimplicialSet, n: int, cells: tuple[tuple[int, ...], ...]) -> tuple[PolygonStack, FinMap]:
    stack = polygon_stack(X, n, cells)
    idx = stack.index
    table = []
    for psi in X.levels[n]:
        comp = tuple(vertex_map(X, n, c).table[psi] for c in cells)
        if comp not in idx:
            raise GluingError(
                f"components of element {psi} at level {n} violate the shared-edge "
                "constraints; the simplicial identities do not hold"
            )
        table.append(idx[comp])
    fwd = FinMap(X.levels[n], FinSet(len(stack.elements)), tuple(table))
    return stack, fwd


def segal_map(X: TruncSimplicialSet, T: Triangulation) -> tuple[FinSet, FinMap]:
    """The iterated pullback of X_2's over X_1 for T and the map into it."""
    stack, fwd = subdivision_map(X, T.n, T.triangles)
    return FinSet(len(stack.elements)), fwd


@lru_cache(maxsize=None)
def segal_witness(X: TruncSimplicialSet, T: Triangulation) -> SegalWitness:
    stack, fwd = subdivision_map(X, T.n, T.triangles)
    inverse = fwd.inverse() if fwd.is_bijective() else None
    return SegalWitness(T.n, T, stack, fwd, inverse)


def check_2segal(X: TruncSimplicialSet) -> Report:
    """Decide bijectivity of every triangulation map for 3 <= n <= N."""
    report = Report()
    for n in range(3, X.N + 1):
        for T in enumerate_triangulations(n):
            w = segal_witness(X, T)
            name = f"2-Segal map at n={n}, diagonals {T.diagonals}"
            if w.inverse is not None:
                report.add(CheckResult(name, True))
            else:
                witness = _bijectivity_witness(w.forward)
                report.add(CheckResult(name, False, witness=witness))
    if X.N < 3:
        report.add(CheckResult("2-Segal maps", None, detail="truncation below 3"))
    return report


def _bijectivity_witness(f: FinMap):
    seen: dict[int, int] = {}
    for e in f.dom:
        v = f.table[e]
        if v in seen:
            return ("not injective", seen[v], e)
        seen[v] = e
    for v in f.cod:
        if v not in seen:
            return ("not surjective", v)
    return None


def check_subdivision_criterion(X: TruncSimplicialSet) -> Report:
    """Bijectivity of the map for every polygon subdivision up to level N."""
    report = Report()
    for n in range(3, X.N + 1):
        for S in enumerate_subdivisions(n):
            _, fwd = subdivision_map(X, n, S.cells)
            name = f"subdivision map at n={n}, cells {S.cells}"
            if fwd.is_bijective():
                report.add(CheckResult(name, True))
            else:
                report.add(CheckResult(name, False, witness=_bijectivity_witness(fwd)))
    return report


def check_unitality(X: TruncSimplicialSet) -> Report:
    """The three unitality squares, checked as pullbacks by fiber comparison."""
    report = Report()

    def pullback_square(name, into_first, into_second, pairs, domain):
        images = {}
        for x in domain:
            key = (into_first.table[x], into_second.table[x])
            if key in images:
                report.add(CheckResult(name, False, witness=("not injective", images[key], x)))
                return
            images[key] = x
        for pair in pairs:
            if pair not in images:
                report.add(CheckResult(name, False, witness=("not surjective", pair)))
                return
        if set(images) - set(pairs):
            report.add(CheckResult(name, False, witness=("square does not commute",)))
            return
        report.add(CheckResult(name, True))

    # (d0, s1) against s0: X_1 = X_2 x_{d0,s0} X_0
    pairs1 = {
        (xi, u)
        for xi in X.levels[2]
        for u in X.levels[0]
        if X.d(2, 0).table[xi] == X.s(0, 0).table[u]
    }
    pullback_square("unitality square d0/s1", X.s(1, 1), X.d(1, 0), pairs1, X.levels[1])

    # (d1, s0) against s0: X_1 = X_2 x_{d2,s0} X_0
    pairs2 = {
        (xi, u)
        for xi in X.levels[2]
        for u in X.levels[0]
        if X.d(2, 2).table[xi] == X.s(0, 0).table[u]
    }
    pullback_square("unitality square d1/s0", X.s(1, 0), X.d(1, 1), pairs2, X.levels[1])

    if X.N >= 3:
        # d_{02} keeps vertex 1 of a 2-simplex; d_{03} keeps the edge 1..2
        d02 = vertex_map(X, 2, (1,))
        d03 = vertex_map(X, 3, (1, 2))
        pairs3 = {
            (psi, u)
            for psi in X.levels[3]
            for u in X.levels[0]
            if d03.table[psi] == X.s(0, 0).table[u]
        }
        pullback_square("higher unitality square d02/s1", X.s(2, 1), d02, pairs3, X.levels[2])
    else:
        report.add(CheckResult("higher unitality square d02/s1", None, detail="truncation below 3"))
    return report


# ---------------------------------------------------------------------------
# gluing: the graphical calculus for faces and degeneracies


def unglue(X: TruncSimplicialSet, T: Triangulation, psi: int) -> tuple[int, ...]:
    """Decompose a simplex into its triangle components along T."""
    return tuple(vertex_map(X, T.n, t).table[psi] for t in T.triangles)


def glue(X: TruncSimplicialSet, T: Triangulation, parts: Sequence[int]) -> int:
    """The unique simplex with the given triangulated decomposition."""
    w = segal_witness(X, T)
    if w.inverse is None:
        raise GluingError("triangulation map is not bijective; cannot glue")
    key = tuple(parts)
    idx = w.stack.index
    if key not in idx:
        raise GluingError(f"incompatible parts {key} for diagonals {T.diagonals}")
    return w.inverse.table[idx[key]]


def _triangle_at_vertex(n: int, i: int) -> tuple[int, int, int]:
    if i == 0:
        return (0, 1, n)
    if i == n:
        return (0, n - 1, n)
    return (i - 1, i, i + 1)


def _triangulation_with_triangle(n: int, tri: tuple[int, int, int]) -> Triangulation:
    """A deterministic triangulation of the (n+1)-gon containing `tri`: each
    remaining region is fanned from its minimal vertex (vertex 0 whenever
    the region contains it)."""
    tris = [tri]
    # regions between consecutive corners of the triangle, walking the cycle
    corners = sorted(tri)
    loops = [
        list(range(corners[0], corners[1] + 1)),
        list(range(corners[1], corners[2] + 1)),
        list(range(corners[2], n + 1)) + list(range(0, corners[0] + 1)),
    ]
    for region in loops:
        uniq = []
        for v in region:
            if v not in uniq:
                uniq.append(v)
        if len(uniq) >= 3:
            tris.extend(fan_triangulation(uniq, anchor=uniq.index(min(uniq))))
    return Triangulation(n, tuple(sorted(set(tuple(sorted(t)) for t in tris))))


def face_via_polygon(X: TruncSimplicialSet, n: int, i: int, psi: int) -> int:
    """d_i by the polygon recipe: decompose along a triangulation containing
    the triangle at vertex i, delete that component, relabel, and glue."""
    if n < 3:
        return X.d(n, i).table[psi]
    tri = _triangle_at_vertex(n, i)
    T = _triangulation_with_triangle(n, tri)
    comps = dict(zip(T.triangles, unglue(X, T, psi)))
    del comps[tri]
    relabel = {v: v - (1 if v > i else 0) for v in range(n + 1) if v != i}
    new_tris = sorted(tuple(sorted(relabel[v] for v in t)) for t in comps)
    new_parts = tuple(
        comps[t]
        for t in sorted(comps, key=lambda t: tuple(sorted(relabel[v] for v in t)))
    )
    T_new = Triangulation(n - 1, tuple(new_tris))
    return glue(X, T_new, new_parts)


def degen_via_polygon(X: TruncSimplicialSet, n: int, i: int, psi: int) -> int:
    """s_i by the polygon recipe: attach a degenerate triangle so that the
    resulting (n+2)-gon has degenerate edge e_{i+1}."""
    if n < 2:
        return X.s(n, i).table[psi]
    if i <= n - 1:
        tri = (i, i + 1, i + 2)
        x = edge_map(X, n, i + 1).table[psi]
        tri_comp = X.s(1, 0).table[x]
        section = {v: (v if v <= i else v + 1) for v in range(n + 1)}
    else:
        tri = (n - 1, n, n + 1)
        x = edge_map(X, n, n).table[psi]
        tri_comp = X.s(1, 1).table[x]
        section = {v: (v if v <= n - 1 else v + 1) for v in range(n + 1)}
    base = fan_triangulation(list(range(n + 1)), anchor=0)
    comps = {tri: tri_comp}
    for t in base:
        lifted = tuple(sorted(section[v] for v in t))
        comps[lifted] = vertex_map(X, n, t).table[psi]
    T_new = Triangulation(n + 1, tuple(sorted(comps)))
    return glue(X, T_new, tuple(comps[t] for t in sorted(comps)))
