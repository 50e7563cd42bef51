"""The stacked-diagram evaluator and rewrite engine."""

import random

import pytest

from finspan.diagrams import (
    Box,
    DiagramPath,
    box_from_span,
    compare_paths,
    delete_identity_row,
    evaluate,
    identity_box,
    insert_identity_row,
    make_rule,
    tensorator_rule,
)
from finspan.spans import (
    FinMap,
    FinSet,
    Span,
    StructuralError,
    compose_spans,
    identity_span,
    product_span,
)


def rand_span(rng, ns, nt, na):
    src, tgt, apex = FinSet(ns), FinSet(nt), FinSet(na)
    return Span(
        src, tgt, apex,
        FinMap(apex, src, tuple(rng.randrange(ns) for _ in range(na))),
        FinMap(apex, tgt, tuple(rng.randrange(nt) for _ in range(na))),
    )


def test_single_box_evaluates_to_itself():
    s = rand_span(random.Random(0), 3, 2, 4)
    ev = evaluate(((box_from_span(s),),))
    assert ev.span == s


def test_row_of_boxes_is_the_product():
    rng = random.Random(1)
    f = rand_span(rng, 2, 2, 3)
    g = rand_span(rng, 2, 3, 2)
    ev = evaluate(((box_from_span(f), box_from_span(g)),))
    assert ev.span == product_span(f, g)


def test_stack_is_the_composite():
    rng = random.Random(2)
    f = rand_span(rng, 2, 3, 4)
    g = rand_span(rng, 3, 2, 3)
    ev = evaluate(((box_from_span(f),), (box_from_span(g),)))
    assert ev.span == compose_spans(f, g)


def test_row_boundary_mismatch_rejected():
    rng = random.Random(3)
    f = rand_span(rng, 2, 3, 4)
    g = rand_span(rng, 2, 2, 3)
    with pytest.raises(StructuralError):
        evaluate(((box_from_span(f),), (box_from_span(g),)))


def test_insert_delete_identity_rows_cancel():
    rng = random.Random(4)
    f = rand_span(rng, 2, 3, 4)
    path = DiagramPath(((box_from_span(f),),))
    path.insert_identity_row(0).delete_identity_row(0)
    other = DiagramPath(((box_from_span(f),),))
    ok, _ = compare_paths(path, other)
    assert ok


def test_rewrite_with_tensorator_and_back():
    rng = random.Random(5)
    f = box_from_span(rand_span(rng, 2, 2, 3), "f")
    g = box_from_span(rand_span(rng, 2, 2, 2), "g")
    rule = tensorator_rule(f, g)
    start = rule.src
    path = DiagramPath(start).rewrite(rule, 0, (0, 0)).rewrite(rule.inverse(), 0, (0, 0))
    ok, _ = compare_paths(path, DiagramPath(start))
    assert ok


def test_rule_must_preserve_exterior_wires():
    x = FinSet(2)
    swap = Span(x, x, x, FinMap(x, x, (0, 1)), FinMap(x, x, (1, 0)))
    idb = identity_box(x)

    def bad(asn):
        return ((0,),)

    with pytest.raises(StructuralError):
        make_rule("bad", ((box_from_span(swap),),), ((idb,),), bad)
