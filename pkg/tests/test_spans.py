"""The span calculus: pullbacks, composition, isomorphism, 2-cells, and
the monoidal coherence cells."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finspan.diagrams import (
    box_from_span,
    braiding_cell,
    evaluate,
    hexagonator_cell,
    syllepsis_cell,
    tensorator_cell,
    tensorator_rule,
)
from finspan.spans import (
    FinMap,
    FinSet,
    ProductShape,
    Span,
    SpanCell,
    StructuralError,
    UNIT,
    braiding_span,
    coherence_cell,
    compose_spans,
    horizontal_compose,
    identity_cell,
    identity_map,
    identity_span,
    product_span,
    pullback,
    spans_isomorphic,
    vertical_compose,
    whisker,
)


def rand_span(rng, ns, nt, na):
    src, tgt, apex = FinSet(ns), FinSet(nt), FinSet(na)
    return Span(
        src, tgt, apex,
        FinMap(apex, src, tuple(rng.randrange(ns) for _ in range(na))),
        FinMap(apex, tgt, tuple(rng.randrange(nt) for _ in range(na))),
    )


def rand_cell_into(rng, g, na):
    apex = FinSet(na)
    h = FinMap(apex, g.apex, tuple(rng.randrange(g.apex.size) for _ in range(na)))
    f = Span(g.src, g.tgt, apex, h.then(g.left), h.then(g.right))
    return SpanCell(f, g, h)


class TestPullback:
    def test_two_points_against_one(self):
        y = FinSet(1)
        f = FinMap(FinSet(2), y, (0, 0))
        g = FinMap(FinSet(1), y, (0,))
        apex, p1, p2 = pullback(f, g)
        assert apex.size == 2
        assert p1.table == (0, 1)
        assert p2.table == (0, 0)

    def test_identity_diagonal(self):
        x = FinSet(3)
        apex, p1, p2 = pullback(identity_map(x), identity_map(x))
        assert apex.size == 3
        assert p1.is_bijective() and p2.is_bijective()

    def test_disjoint_images(self):
        y = FinSet(2)
        f = FinMap(FinSet(1), y, (0,))
        g = FinMap(FinSet(1), y, (1,))
        apex, _, _ = pullback(f, g)
        assert apex.size == 0

    def test_codomain_mismatch(self):
        f = FinMap(FinSet(1), FinSet(2), (0,))
        g = FinMap(FinSet(1), FinSet(3), (0,))
        with pytest.raises(StructuralError):
            pullback(f, g)


class TestComposition:
    def test_identity_unitor(self):
        rng = random.Random(0)
        s = rand_span(rng, 3, 2, 4)
        left = compose_spans(identity_span(s.src), s)
        right = compose_spans(s, identity_span(s.tgt))
        for c in (left, right):
            cell = spans_isomorphic(c, s)
            assert cell is not None and cell.is_invertible()
        # the right unitor is the identity on indices; the left unitor is
        # the canonical pair projection
        assert right == s
        from finspan.spans import compose_pairs

        pairs = compose_pairs(identity_span(s.src), s)
        projection = FinMap(left.apex, s.apex, tuple(a for _, a in pairs))
        unitor = SpanCell(left, s, projection)
        assert unitor.is_invertible()

    def test_point_middle_gives_product(self):
        f = rand_span(random.Random(1), 2, 1, 2)
        g = rand_span(random.Random(2), 1, 3, 3)
        assert compose_spans(f, g).apex.size == 6

    def test_associativity_is_index_identity(self):
        rng = random.Random(3)
        f = rand_span(rng, 2, 2, 3)
        g = rand_span(rng, 2, 2, 3)
        h = rand_span(rng, 2, 2, 3)
        lhs = compose_spans(compose_spans(f, g), h)
        rhs = compose_spans(f, compose_spans(g, h))
        assert lhs == rhs  # left- and right-nested composites coincide


class TestSpansIsomorphic:
    def brute(self, f, g):
        if f.apex.size != g.apex.size:
            return False
        for perm in itertools.permutations(range(g.apex.size)):
            if all(
                g.left.table[perm[i]] == f.left.table[i]
                and g.right.table[perm[i]] == f.right.table[i]
                for i in f.apex
            ):
                return True
        return False

    def test_equal_spans_identity_cell(self):
        s = rand_span(random.Random(4), 2, 2, 5)
        cell = spans_isomorphic(s, s)
        assert cell is not None
        assert cell.map.table == tuple(range(5))

    def test_cardinality_obstruction(self):
        rng = random.Random(5)
        f = rand_span(rng, 1, 1, 2)
        g = rand_span(rng, 1, 1, 3)
        assert spans_isomorphic(f, g) is None

    def test_agrees_with_brute_force(self):
        rng = random.Random(6)
        for _ in range(300):
            ns, nt = rng.randrange(1, 4), rng.randrange(1, 4)
            f = rand_span(rng, ns, nt, rng.randrange(0, 6))
            g = rand_span(rng, ns, nt, rng.randrange(0, 6))
            cell = spans_isomorphic(f, g)
            assert (cell is not None) == self.brute(f, g)
            if cell is not None:
                assert cell.is_invertible()

    def test_equivalence_relation(self):
        rng = random.Random(7)
        spans = [rand_span(rng, 2, 2, 3) for _ in range(12)]
        for f in spans:
            assert spans_isomorphic(f, f) is not None
        for f, g in itertools.combinations(spans, 2):
            fg = spans_isomorphic(f, g)
            assert (fg is not None) == (spans_isomorphic(g, f) is not None)
        for f, g, h in itertools.combinations(spans, 3):
            if spans_isomorphic(f, g) and spans_isomorphic(g, h):
                assert spans_isomorphic(f, h) is not None


class TestTwoCells:
    def test_vertical_identity(self):
        s = rand_span(random.Random(8), 2, 2, 4)
        i = identity_cell(s)
        assert vertical_compose(i, i).map.table == i.map.table

    def test_whisker_identity_is_identity(self):
        rng = random.Random(9)
        f = rand_span(rng, 2, 3, 3)
        g = rand_span(rng, 3, 2, 4)
        w = whisker(g, identity_cell(f), side="left")
        assert w.map.table == tuple(range(w.source.apex.size))

    @given(st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_interchange(self, seed):
        rng = random.Random(seed)
        g1 = rand_span(rng, 2, 3, rng.randrange(1, 4))
        u = rand_cell_into(rng, g1, rng.randrange(1, 4))
        u2 = rand_cell_into(rng, u.source, rng.randrange(1, 4))
        g2 = rand_span(rng, 3, 2, rng.randrange(1, 4))
        v = rand_cell_into(rng, g2, rng.randrange(1, 4))
        v2 = rand_cell_into(rng, v.source, rng.randrange(1, 4))
        lhs = horizontal_compose(vertical_compose(u2, u), vertical_compose(v2, v))
        rhs = vertical_compose(horizontal_compose(u2, v2), horizontal_compose(u, v))
        assert lhs.map.table == rhs.map.table


class TestProductsAndShapes:
    def test_unit_factor(self):
        s = rand_span(random.Random(10), 2, 3, 4)
        p = product_span(s, identity_span(UNIT))
        cell = spans_isomorphic(p, s)
        assert cell is not None and cell.map.table == tuple(range(4))

    def test_sizes_multiply(self):
        rng = random.Random(11)
        f = rand_span(rng, 2, 2, 2)
        g = rand_span(rng, 2, 2, 3)
        assert product_span(f, g).apex.size == 6

    def test_rebracketing_cell(self):
        rng = random.Random(12)
        f = rand_span(rng, 1, 1, 2)
        g = rand_span(rng, 1, 1, 3)
        h = rand_span(rng, 1, 1, 4)
        lhs = product_span(product_span(f, g), h)
        rhs = product_span(f, product_span(g, h))
        assert lhs == rhs
        sh = [ProductShape.leaf(k) for k in (2, 3, 4)]
        a = ProductShape.node(ProductShape.node(sh[0], sh[1]), sh[2])
        b = ProductShape.node(sh[0], ProductShape.node(sh[1], sh[2]))
        cell = coherence_cell(lhs, a, b)
        assert cell.map.table == tuple(range(24))
        back = coherence_cell(rhs, b, a)
        assert vertical_compose(cell, back).map.table == tuple(range(24))

    def test_shape_mismatch_rejected(self):
        a = ProductShape.node(ProductShape.leaf(2), ProductShape.leaf(3))
        b = ProductShape.node(ProductShape.leaf(3), ProductShape.leaf(2))
        s = identity_span(FinSet(6))
        with pytest.raises(StructuralError):
            coherence_cell(s, a, b)

    def test_shape_codec(self):
        sh = ProductShape.node(
            ProductShape.leaf(2), ProductShape.node(ProductShape.leaf(3), ProductShape.leaf(4))
        )
        for i in range(sh.size):
            assert sh.encode(sh.decode(i)) == i

    def test_product_records_shape(self):
        from finspan.spans import product_shape

        rng = random.Random(16)
        f = rand_span(rng, 2, 2, 3)
        g = rand_span(rng, 2, 2, 4)
        p = product_span(f, g)
        sh = product_shape(f.apex, g.apex)
        assert sh.size == p.apex.size
        assert sh.decode(p.apex.size - 1) == (2, 3)


class TestCoherenceCells:
    def test_tensorator_composites_are_the_product(self):
        rng = random.Random(13)
        f = rand_span(rng, 2, 2, 3)
        g = rand_span(rng, 3, 2, 2)
        c = tensorator_cell(f, g)
        assert c.is_invertible()
        assert c.source.apex.size == f.apex.size * g.apex.size
        assert c.target.apex.size == f.apex.size * g.apex.size
        # the source composite is literally (id x g) after (f x id)
        direct = compose_spans(
            product_span(f, identity_span(g.src)),
            product_span(identity_span(f.tgt), g),
        )
        assert c.source == direct

    def test_tensorator_inverse(self):
        rng = random.Random(14)
        f = rand_span(rng, 2, 2, 2)
        g = rand_span(rng, 2, 2, 3)
        c = tensorator_cell(f, g)
        assert vertical_compose(c, c.inverse()).map.table == tuple(range(c.source.apex.size))

    def test_identity_spans_tensorator(self):
        x = FinSet(3)
        c = tensorator_cell(identity_span(x), identity_span(x))
        assert c.map.table == tuple(range(9))

    def test_braiding_round_trip_is_syllepsis(self):
        x, y = FinSet(2), FinSet(3)
        rho = braiding_span(x, y)
        rho_back = braiding_span(y, x)
        double = compose_spans(rho, rho_back)
        v = syllepsis_cell(x, y)
        assert v.source == double
        assert v.target == identity_span(FinSet(6))
        assert v.is_invertible()

    def test_braiding_on_point_factor(self):
        x = FinSet(4)
        rho = braiding_span(x, UNIT)
        cell = spans_isomorphic(rho, identity_span(FinSet(4)))
        assert cell is not None

    def test_braiding_cell_invertible(self):
        rng = random.Random(15)
        f = rand_span(rng, 2, 2, 3)
        g = rand_span(rng, 2, 3, 2)
        assert braiding_cell(f, g).is_invertible()

    def test_hexagonator_boundaries(self):
        x, y, z = FinSet(2), FinSet(2), FinSet(3)
        r = hexagonator_cell(x, y, z)
        assert r.is_invertible()
        # both sides are the span with identity left leg and the rotation
        n = 12
        assert r.source.left.is_bijective()
        rotated = sorted(
            (r.source.right.table[i], i) for i in range(n)
        )
        assert r.source.right.table == r.target.right.table
