"""Pointed finite cardinals, Gamma-structures, and commutativity.

Morphisms of pointed cardinals <n> -> <m> are arbitrary basepoint-fixing
maps, encoded with 0 for the basepoint.  They factor through a permutation
followed by a monotone map, giving a generator decomposition into swaps,
degeneracies, and faces; a Gamma-set is then a simplicial set with
compatible symmetric-group actions generated by adjacent transpositions.

The interstice functor sends a monotone map of linear orders to the
pointed map on gaps; pulling a Gamma-set back along it recovers the
underlying simplicial structure.

On a 2-Segal base, the transposition at level 2 is a 2-cell from the
multiplication to its braided composite; the symmetry and hexagon
equations for it are verified both in reduced form and as genuine
span-level rewrite paths, and conversely such a 2-cell rebuilds the whole
tower of transpositions triangle by triangle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .diagrams import (
    Box,
    DiagramPath,
    RewriteRule,
    braiding_rule,
    cell_from_rule,
    compare_paths,
    evaluate,
    identity_box,
    hexagonator_rule,
    make_rule,
    rule_from_spancell,
    syllepsis_rule,
)
from .paracyclic import LambdaMor, lambda_compose
from .reporting import CheckResult, Report
from .simplicial import (
    Triangulation,
    TruncSimplicialSet,
    _triangulation_with_triangle,
    check_2segal,
    glue,
    unglue,
    vertex_map,
)
from .spans import (
    FinMap,
    FinSet,
    Span,
    SpanCell,
    StructuralError,
    braiding_span,
    encode_tuple,
    identity_map,
)


class NotCommutativeError(ValueError):
    """The supplied 2-cell fails the symmetry or hexagon equation."""


BASEPOINT = 0


@dataclass(frozen=True)
class PhiStarMor:
    """A pointed map <n> -> <m>; entry 0 encodes the basepoint."""

    n: int
    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.n:
            raise StructuralError("need one value per non-basepoint element")
        if any(not 0 <= v <= self.m for v in self.table):
            raise StructuralError("value out of range")

    def __call__(self, i: int) -> int:
        return BASEPOINT if i == BASEPOINT else self.table[i - 1]


def phistar_identity(n: int) -> PhiStarMor:
    return PhiStarMor(n, n, tuple(range(1, n + 1)))


def phistar_s(n: int, i: int) -> PhiStarMor:
    """The generator <n> -> <n+1> that skips i+1 (0 <= i <= n)."""
    if not 0 <= i <= n:
        raise StructuralError("degeneracy index out of range")
    return PhiStarMor(n, n + 1, tuple(k if k <= i else k + 1 for k in range(1, n + 1)))


def phistar_d(n: int, i: int) -> PhiStarMor:
    """The generator <n> -> <n-1>: collapses i and i+1 for i > 0, and
    collapses 1 to the basepoint for i = 0 (0 <= i <= n-1)."""
    if not 0 <= i <= n - 1:
        raise StructuralError("face index out of range")
    if i == 0:
        return PhiStarMor(n, n - 1, tuple([0] + [k - 1 for k in range(2, n + 1)]))
    return PhiStarMor(n, n - 1, tuple(k if k <= i else k - 1 for k in range(1, n + 1)))


def phistar_d_top(n: int) -> PhiStarMor:
    """The derived final face <n> -> <n-1>: collapses n to the basepoint."""
    return PhiStarMor(n, n - 1, tuple(list(range(1, n)) + [0]))


def phistar_theta(n: int, i: int) -> PhiStarMor:
    """The adjacent transposition swapping i and i+1 (1 <= i <= n-1)."""
    if not 1 <= i <= n - 1:
        raise StructuralError("transposition index out of range")
    table = list(range(1, n + 1))
    table[i - 1], table[i] = table[i], table[i - 1]
    return PhiStarMor(n, n, tuple(table))


def phistar_compose(f: PhiStarMor, g: PhiStarMor) -> PhiStarMor:
    """The composite g∘f of f: <n> -> <m> then g: <m> -> <k>."""
    if f.m != g.n:
        raise StructuralError("object mismatch in composition")
    return PhiStarMor(f.n, g.m, tuple(g(v) for v in f.table))


def phistar_to_phi(f: PhiStarMor) -> tuple[int, ...]:
    """The underlying unpointed map on {0..n}, basepoint folded to 0.

    This forgetful assignment is faithful and sends the generators to the
    cofaces (skipping 0), the codegeneracies, and the main transpositions
    of the category of finite cardinals.
    """
    return (0,) + tuple(f.table)


Token = tuple[str, int, int]  # (kind, level, index), kinds "s" | "d" | "theta"


def token_morphism(tok: Token) -> PhiStarMor:
    kind, n, i = tok
    if kind == "s":
        return phistar_s(n, i)
    if kind == "d":
        return phistar_d(n, i)
    if kind == "theta":
        return phistar_theta(n, i)
    raise StructuralError(f"unknown token kind {kind}")


def phistar_factorize(f: PhiStarMor) -> tuple[Token, ...]:
    """A generator word for f, in application order (first entry acts
    first).  The permutation part is produced by bubble sorting the stable
    argsort of the underlying pointed table; the monotone part peels
    degeneracies then faces."""
    p = [0] + list(f.table)  # underlying map on {0..n}, basepoint as 0
    n = f.n
    order = sorted(range(n + 1), key=lambda k: (p[k], k))
    position = [0] * (n + 1)
    for j, k in enumerate(order):
        position[k] = j
    word: list[Token] = []
    line = list(position)  # one-line form of the permutation rho'
    # bubble sort; each swap at slot k is the transposition theta_k
    changed = True
    while changed:
        changed = False
        for k in range(1, n):
            if line[k] > line[k + 1]:
                line[k], line[k + 1] = line[k + 1], line[k]
                word.append(("theta", n, k))
                changed = True
    h = [p[k] for k in order]  # monotone with h[0] = 0

    def monotone_word(values: list[int], target: int) -> list[Token]:
        a = len(values) - 1
        present = set(values)
        dups = [j for j in range(a) if values[j] == values[j + 1]]
        if dups:
            j = dups[0]
            rest = values[:j] + values[j + 1 :]
            return [("d", a, j)] + monotone_word(rest, target)
        missing = [v for v in range(target + 1) if v not in present]
        if missing:
            i = missing[0]
            rest = [v - 1 if v > i else v for v in values]
            return monotone_word(rest, target - 1) + [("s", target - 1, i - 1)]
        return []

    return tuple(word + monotone_word(h, f.m))


def phistar_recompose(n: int, word: tuple[Token, ...]) -> PhiStarMor:
    out = phistar_identity(n)
    for tok in word:
        out = phistar_compose(out, token_morphism(tok))
    return out


def check_phistar_relations(n_max: int = 6) -> Report:
    """The generator relations of the pointed-cardinal category up to
    n_max, as morphism equalities: simplicial part, Moore part, mixed
    part, and the final-face identity."""
    report = Report()

    def eq(name, lhs, rhs):
        ok = lhs == rhs
        report.add(CheckResult(name, ok, witness=None if ok else (lhs.table, rhs.table)))

    for n in range(n_max):
        for j in range(n + 1):
            for i in range(j + 1):
                eq(f"s_{i} s_{j} at <{n}>",
                   phistar_compose(phistar_s(n, j), phistar_s(n + 1, i)),
                   phistar_compose(phistar_s(n, i), phistar_s(n + 1, j + 1)))
    for n in range(2, n_max + 1):
        for j in range(n):
            for i in range(j):
                eq(f"d_{i} d_{j} at <{n}>",
                   phistar_compose(phistar_d(n, j), phistar_d(n - 1, i)),
                   phistar_compose(phistar_d(n, i), phistar_d(n - 1, j - 1)))
    for n in range(0, n_max):
        for j in range(n + 1):
            for i in range(n + 1):
                lhs = phistar_compose(phistar_s(n, j), phistar_d(n + 1, i))
                if i < j:
                    rhs = phistar_compose(phistar_d(n, i), phistar_s(n - 1, j - 1)) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = phistar_identity(n)
                else:
                    rhs = phistar_compose(phistar_d(n, i - 1), phistar_s(n - 1, j)) if n >= 1 else None
                if rhs is not None:
                    eq(f"d_{i} s_{j} at <{n}>", lhs, rhs)
    for n in range(2, n_max + 1):
        for i in range(1, n):
            eq(f"theta_{i} involution at <{n}>",
               phistar_compose(phistar_theta(n, i), phistar_theta(n, i)), phistar_identity(n))
        for i in range(1, n - 1):
            eq(f"braid at <{n}> index {i}",
               phistar_compose(phistar_compose(phistar_theta(n, i), phistar_theta(n, i + 1)), phistar_theta(n, i)),
               phistar_compose(phistar_compose(phistar_theta(n, i + 1), phistar_theta(n, i)), phistar_theta(n, i + 1)))
        for i in range(1, n):
            for j in range(i + 2, n):
                eq(f"commute theta_{i} theta_{j} at <{n}>",
                   phistar_compose(phistar_theta(n, i), phistar_theta(n, j)),
                   phistar_compose(phistar_theta(n, j), phistar_theta(n, i)))
    for n in range(1, n_max):
        for i in range(1, n + 1):
            for j in range(n + 1):
                lhs = phistar_compose(phistar_s(n, j), phistar_theta(n + 1, i))
                if i < j:
                    rhs = phistar_compose(phistar_theta(n, i), phistar_s(n, j))
                elif i == j:
                    rhs = phistar_s(n, i - 1)
                elif i == j + 1:
                    rhs = phistar_s(n, i)
                else:
                    rhs = phistar_compose(phistar_theta(n, i - 1), phistar_s(n, j))
                eq(f"theta_{i} s_{j} at <{n}>", lhs, rhs)
    for n in range(3, n_max + 1):
        for i in range(1, n - 1):
            for j in range(n):
                lhs = phistar_compose(phistar_d(n, j), phistar_theta(n - 1, i))
                if i < j - 1:
                    rhs = phistar_compose(phistar_theta(n, i), phistar_d(n, j))
                elif i == j - 1:
                    rhs = phistar_compose(phistar_compose(phistar_theta(n, i), phistar_theta(n, i + 1)), phistar_d(n, i))
                elif i == j:
                    rhs = phistar_compose(phistar_compose(phistar_theta(n, i + 1), phistar_theta(n, i)), phistar_d(n, i + 1))
                else:
                    rhs = phistar_compose(phistar_theta(n, i + 1), phistar_d(n, j))
                eq(f"theta_{i} d_{j} at <{n}>", lhs, rhs)
    for n in range(2, n_max + 1):
        for i in range(1, n):
            eq(f"d_{i} theta_{i} absorption at <{n}>",
               phistar_compose(phistar_theta(n, i), phistar_d(n, i)), phistar_d(n, i))
    for n in range(1, n_max + 1):
        word = phistar_identity(n)
        for i in range(n - 1, 0, -1):
            word = phistar_compose(word, phistar_theta(n, i))
        eq(f"final face from transpositions at <{n}>",
           phistar_compose(word, phistar_d(n, 0)), phistar_d_top(n))
    eq("pointed collapse d_0^1 = d_1^1", phistar_d(1, 0), phistar_d_top(1))
    return report


# ---------------------------------------------------------------------------
# the interstice functor


def cut(f: LambdaMor) -> PhiStarMor:
    """The pointed map <m> -> <n> induced on interstices by a monotone
    f: [n] -> [m]."""
    if not f.in_delta():
        raise StructuralError("interstice functor needs a simplex-category morphism")
    n, m = f.m, f.n  # f: [n] -> [m] in simplex indexing
    table = []
    for i in range(1, m + 1):
        if f.values[0] >= i or f.values[-1] < i:
            table.append(BASEPOINT)
        else:
            table.append(min(k for k in range(n + 1) if f.values[k] >= i))
    return PhiStarMor(m, n, tuple(table))


# ---------------------------------------------------------------------------
# Gamma structures


@dataclass(frozen=True)
class GammaData:
    """A truncated simplicial set with adjacent-transposition actions
    theta_i^n: X_n -> X_n for 1 <= i <= n-1."""

    base: TruncSimplicialSet
    theta_tables: tuple[tuple[FinMap, ...], ...]

    def __post_init__(self):
        if len(self.theta_tables) != self.base.N + 1:
            raise StructuralError("theta tables must be indexed by level")
        for n, row in enumerate(self.theta_tables):
            expected = max(0, n - 1)
            if len(row) != expected:
                raise StructuralError(f"need {expected} transpositions at level {n}")
            for t in row:
                if t.dom != self.base.levels[n] or t.cod != self.base.levels[n]:
                    raise StructuralError(f"theta at level {n} has wrong boundaries")

    def theta(self, n: int, i: int) -> FinMap:
        if not 1 <= i <= n - 1:
            raise StructuralError("transposition index out of range")
        return self.theta_tables[n][i - 1]


def evaluate_gamma(G: GammaData, f: PhiStarMor) -> FinMap:
    """The action X(f): X_n -> X_m via the generator word of f."""
    X = G.base
    if f.n > X.N or f.m > X.N:
        raise StructuralError("level outside the truncation")
    out = identity_map(X.levels[f.n])
    for kind, n, i in phistar_factorize(f):
        if kind == "s":
            out = out.then(X.s(n, i))
        elif kind == "d":
            out = out.then(X.d(n, i))
        else:
            out = out.then(G.theta(n, i))
    return out


def check_gamma(G: GammaData) -> Report:
    """The Moore, mixed, and final-face relations within the truncation."""
    X = G.base
    report = Report()

    def eq(name, lhs, rhs):
        ok = lhs.table == rhs.table
        w = None if ok else next(e for e in range(len(lhs.table)) if lhs.table[e] != rhs.table[e])
        report.add(CheckResult(name, ok, witness=w))

    eq("d_0^1 = d_1^1 (pointed collapse)", X.d(1, 0), X.d(1, 1))
    for n in range(2, X.N + 1):
        for i in range(1, n):
            eq(f"theta_{i}^2 = id at level {n}",
               G.theta(n, i).then(G.theta(n, i)), identity_map(X.levels[n]))
        for i in range(1, n - 1):
            eq(f"braid theta_{i} theta_{i+1} at level {n}",
               G.theta(n, i).then(G.theta(n, i + 1)).then(G.theta(n, i)),
               G.theta(n, i + 1).then(G.theta(n, i)).then(G.theta(n, i + 1)))
        for i in range(1, n):
            for j in range(i + 2, n):
                eq(f"theta_{i} theta_{j} commute at level {n}",
                   G.theta(n, i).then(G.theta(n, j)),
                   G.theta(n, j).then(G.theta(n, i)))
    # mixed with degeneracies: theta_i s_j (level 1 gives the swap of the
    # two degeneracies of an edge)
    for n in range(1, X.N):
        for i in range(1, n + 1):
            for j in range(n + 1):
                lhs = X.s(n, j).then(G.theta(n + 1, i))
                if i < j:
                    rhs = G.theta(n, i).then(X.s(n, j))
                elif i == j:
                    rhs = X.s(n, i - 1)
                elif i == j + 1:
                    rhs = X.s(n, i)
                else:
                    rhs = G.theta(n, i - 1).then(X.s(n, j))
                eq(f"theta_{i} s_{j} at level {n}", lhs, rhs)
    # mixed with faces: theta_i d_j for the generator faces j <= n-1
    for n in range(3, X.N + 1):
        for i in range(1, n - 1):
            for j in range(n):
                lhs = X.d(n, j).then(G.theta(n - 1, i))
                if i < j - 1:
                    rhs = G.theta(n, i).then(X.d(n, j))
                elif i == j - 1:
                    rhs = G.theta(n, i).then(G.theta(n, i + 1)).then(X.d(n, i))
                elif i == j:
                    rhs = G.theta(n, i + 1).then(G.theta(n, i)).then(X.d(n, i + 1))
                else:
                    rhs = G.theta(n, i + 1).then(X.d(n, j))
                eq(f"theta_{i} d_{j} at level {n}", lhs, rhs)
    # absorption d_i theta_i = d_i
    for n in range(2, X.N + 1):
        for i in range(1, n):
            eq(f"d_{i} theta_{i} = d_{i} at level {n}",
               G.theta(n, i).then(X.d(n, i)), X.d(n, i))
    # the final face from the transpositions
    for n in range(2, X.N + 1):
        pipeline = identity_map(X.levels[n])
        for i in range(n - 1, 0, -1):
            pipeline = pipeline.then(G.theta(n, i))
        eq(f"final face identity at level {n}", pipeline.then(X.d(n, 0)), X.d(n, n))
    return report


def permutation_action(G: GammaData, n: int, perm: tuple[int, ...]) -> FinMap:
    """The action of an arbitrary permutation of {1..n} on X_n, generated
    on demand from adjacent transpositions."""
    line = list(perm)
    out = identity_map(G.base.levels[n])
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if line[k] > line[k + 1]:
                line[k], line[k + 1] = line[k + 1], line[k]
                out = G.theta(n, k + 1).then(out)
                changed = True
    return out


# ---------------------------------------------------------------------------
# commutativity cells


@dataclass(frozen=True)
class CommutativityCell:
    """An invertible 2-cell from the multiplication to its braided form,
    carried by a level-2 involution."""

    gamma: SpanCell
    theta: FinMap


def _mu_box(X: TruncSimplicialSet) -> Box:
    from .pseudomonoid import mult_box, mult_span

    mu = mult_span(X.levels[1], X.levels[2], X.d(2, 0), X.d(2, 1), X.d(2, 2))
    return mult_box(mu, X.levels[1])


def _braided_mult_rows(X: TruncSimplicialSet, mub: Box):
    x1 = X.levels[1]
    rho = Box(braiding_span(x1, x1), (x1, x1), (x1, x1), name="braid")
    return ((rho,), (mub,))


def gamma_rule(X: TruncSimplicialSet, theta: FinMap, mub: Box) -> RewriteRule:
    """The rewrite rule mu => mu∘rho carried by a level-2 involution."""
    x1 = X.levels[1]
    idb = identity_box(x1)
    src = ((idb, idb), (mub,))
    tgt = _braided_mult_rows(X, mub)

    def fn(asn):
        m = asn[1][0]
        mprime = theta.table[m]
        p = X.d(2, 2).table[m] * x1.size + X.d(2, 0).table[m]
        return ((p,), (mprime,))

    return make_rule("commutor", src, tgt, fn)


def gamma_cell(X: TruncSimplicialSet, theta: FinMap) -> SpanCell:
    """The public form of the cell: multiplication span => braided composite."""
    from .pseudomonoid import mult_span

    x1 = X.levels[1]
    mu = mult_span(x1, X.levels[2], X.d(2, 0), X.d(2, 1), X.d(2, 2))
    mub = _mu_box(X)
    ev = evaluate(_braided_mult_rows(X, mub))
    table = []
    for m in X.levels[2]:
        mprime = theta.table[m]
        p = X.d(2, 2).table[m] * x1.size + X.d(2, 0).table[m]
        key = ((p,), (mprime,))
        if key not in ev.index:
            raise StructuralError(
                f"candidate involution is not compatible with the span legs at {m}"
            )
        table.append(ev.index[key])
    return SpanCell(mu, ev.span, FinMap(X.levels[2], ev.span.apex, tuple(table)))


def theta_from_gamma_cell(X: TruncSimplicialSet, gamma: SpanCell) -> FinMap:
    mub = _mu_box(X)
    ev = evaluate(_braided_mult_rows(X, mub))
    if gamma.target != ev.span:
        raise StructuralError("cell target is not the braided multiplication")
    table = tuple(ev.assignments[gamma.map.table[m]][1][0] for m in X.levels[2])
    return FinMap(X.levels[2], X.levels[2], table)


T13 = Triangulation(3, ((0, 1, 2), (0, 2, 3)))
T02 = Triangulation(3, ((0, 1, 3), (1, 2, 3)))


def crossing_map(X: TruncSimplicialSet, theta: FinMap) -> FinMap:
    """The auxiliary level-3 map c with d_1 c = theta d_2 and d_3 c = d_0."""
    table = []
    for psi in X.levels[3]:
        parts = (X.d(3, 0).table[psi], theta.table[X.d(3, 2).table[psi]])
        table.append(glue(X, T13, parts))
    return FinMap(X.levels[3], X.levels[3], tuple(table))


def theta_via_triangulation(
    X: TruncSimplicialSet, theta: FinMap, n: int, i: int,
    T: Optional[Triangulation] = None,
) -> FinMap:
    """theta_i^n: decompose along a triangulation containing the triangle
    (i-1, i, i+1), apply theta to that component, and glue back."""
    if n == 2:
        return theta
    tri = (i - 1, i, i + 1)
    if T is None:
        T = _triangulation_with_triangle(n, tri)
    if tri not in T.triangles:
        raise StructuralError("triangulation misses the required triangle")
    pos = T.triangles.index(tri)
    table = []
    for psi in X.levels[n]:
        comps = list(unglue(X, T, psi))
        comps[pos] = theta.table[comps[pos]]
        table.append(glue(X, T, tuple(comps)))
    return FinMap(X.levels[n], X.levels[n], tuple(table))


def span_level_commutativity(X: TruncSimplicialSet, theta: FinMap) -> Report:
    """The symmetry and hexagon equations as genuine span-level rewrite
    paths, using the braiding, syllepsis, slide, and hexagonator cells."""
    from .pseudomonoid import build_pseudomonoid, assoc_src_rows, assoc_tgt_rows

    report = Report()
    x1 = X.levels[1]
    P = build_pseudomonoid(X)
    mub, _, idb = P.boxes()
    a_rule = rule_from_spancell(
        "associator", assoc_src_rows(mub, idb), assoc_tgt_rows(mub, idb), P.assoc
    )
    g_rule = gamma_rule(X, theta, mub)
    v_inv = syllepsis_rule(x1, x1).inverse()

    start = ((mub,),)
    lhs = (
        DiagramPath(start)
        .insert_identity_row(0)
        .rewrite(g_rule, 0, (0, 0))
        .insert_identity_row(1)
        .rewrite(g_rule, 1, (0, 0))
    )
    rhs = (
        DiagramPath(start)
        .insert_identity_row(0)
        .insert_identity_row(0)
        .rewrite(v_inv, 0, (0, 0))
    )
    ok, disc = compare_paths(lhs, rhs)
    report.add(CheckResult("span-level symmetry equation", ok,
                           witness=None if ok else next((k, v) for k, v in disc.items() if k != v)))

    slide = braiding_rule(idb, mub)
    hexr = hexagonator_rule(x1, x1, x1)
    start = ((mub, idb), (mub,))
    lhs = (
        DiagramPath(start)
        .rewrite(a_rule, 0, (0, 0))
        .insert_identity_row(1)
        .rewrite(g_rule, 1, (0, 0))
        .rewrite(slide, 0, (0, 0))
        .rewrite(a_rule, 1, (0, 0))
    )
    rhs = (
        DiagramPath(start)
        .insert_identity_row(0)
        .rewrite(g_rule, 0, (0, 0))
        .rewrite(a_rule, 1, (0, 0))
        .insert_identity_row(1)
        .rewrite(g_rule, 1, (1, 1))
        .rewrite(hexr, 0, (0, 0))
        .delete_identity_row(1)
    )
    ok, disc = compare_paths(lhs, rhs)
    report.add(CheckResult("span-level hexagon equation", ok,
                           witness=None if ok else next((k, v) for k, v in disc.items() if k != v)))
    return report


def reduced_commutativity(X: TruncSimplicialSet, G: GammaData) -> Report:
    """The reduced symmetry and hexagon checks: theta is an involution and
    the crossing map equals theta_2 theta_1 at level 3."""
    report = Report()
    theta = G.theta(2, 1)

    def eq(name, lhs, rhs):
        ok = lhs.table == rhs.table
        w = None if ok else next(e for e in range(len(lhs.table)) if lhs.table[e] != rhs.table[e])
        report.add(CheckResult(name, ok, witness=w))

    eq("reduced symmetry: theta involution", theta.then(theta), identity_map(X.levels[2]))
    if X.N >= 3:
        c = crossing_map(X, theta)
        eq("reduced hexagon: crossing = theta_2 theta_1",
           c, G.theta(3, 1).then(G.theta(3, 2)))
        eq("hexagon component at d_1",
           G.theta(3, 1).then(G.theta(3, 2)).then(X.d(3, 1)),
           X.d(3, 2).then(theta))
        eq("hexagon component at d_3",
           G.theta(3, 1).then(G.theta(3, 2)).then(X.d(3, 3)),
           X.d(3, 0))
    return report


def commutative_from_gamma(G: GammaData, full_span_level: bool = False) -> tuple[CommutativityCell, Report]:
    """The commutativity cell of a Gamma structure, with the reduced checks
    (and optionally the full span-level equations)."""
    X = G.base
    segal = check_2segal(X)
    if not segal.ok:
        raise NotCommutativeError(f"base is not 2-Segal: {segal.failures[0].name}")
    theta = G.theta(2, 1)
    for name, lhs, rhs in (
        ("d0 theta = d2", theta.then(X.d(2, 0)), X.d(2, 2)),
        ("d1 theta = d1", theta.then(X.d(2, 1)), X.d(2, 1)),
        ("d2 theta = d0", theta.then(X.d(2, 2)), X.d(2, 0)),
    ):
        if lhs.table != rhs.table:
            raise NotCommutativeError(f"transposition is not a span cell: {name}")
    report = reduced_commutativity(X, G)
    if full_span_level:
        report.extend(span_level_commutativity(X, theta))
    return CommutativityCell(gamma_cell(X, theta), theta), report


def gamma_from_commutative(X: TruncSimplicialSet, gamma: SpanCell) -> GammaData:
    """Rebuild all transposition actions from a commutativity cell.

    The cell must be invertible and satisfy the span-level symmetry and
    hexagon equations (checked first); the higher transpositions are then
    constructed triangle by triangle and the full relation set is verified.
    """
    segal = check_2segal(X)
    if not segal.ok:
        raise NotCommutativeError(f"base is not 2-Segal: {segal.failures[0].name}")
    if not gamma.map.is_bijective():
        raise NotCommutativeError("cell is not invertible")
    theta = theta_from_gamma_cell(X, gamma)
    span_report = span_level_commutativity(X, theta)
    if not span_report.ok:
        raise NotCommutativeError(
            f"not commutative: {span_report.failures[0].name}, "
            f"diagnostic {span_report.failures[0].witness}"
        )
    tables: list[tuple[FinMap, ...]] = [(), (), (theta,)]
    for n in range(3, X.N + 1):
        tables.append(tuple(
            theta_via_triangulation(X, theta, n, i) for i in range(1, n)
        ))
    G = GammaData(X, tuple(tables[: X.N + 1]))
    rep = check_gamma(G)
    if not rep.ok:
        raise NotCommutativeError(f"derived structure fails: {rep.failures[0].name}")
    return G
