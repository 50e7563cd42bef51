#!/usr/bin/env python3
"""Transposition actions against commutativity cells: the symmetric side.

    python3 demos/05_gamma_commutative.py
"""

from finspan import catalog
from finspan.gammaset import (
    check_gamma,
    commutative_from_gamma,
    cut,
    evaluate_gamma,
    gamma_from_commutative,
    phistar_factorize,
    PhiStarMor,
)
from finspan.paracyclic import LambdaMor

print("== pointed cardinals and the interstice functor ==")
f = LambdaMor(2, 3, (0, 2, 2))
c = cut(f)
print(f"the monotone map with values {f.values} induces the pointed map "
      f"{c.table} on interstices (0 is the basepoint)")
g = PhiStarMor(3, 2, (2, 1, 0))
word = phistar_factorize(g)
print(f"an arbitrary pointed map factors into generators: {word}")

print()
print("== transposition actions on the interval nerve ==")
G = catalog.commutative_monoid_gamma(catalog.interval_monoid(3), 4)
print("all relations hold:", check_gamma(G).ok)
print("theta at level 2 swaps summands:", G.theta(2, 1).table)

print()
print("== the commutor and its equations ==")
cell, report = commutative_from_gamma(G, full_span_level=True)
for line in report.lines():
    print(" ", line)

print()
print("== rebuilding every transposition from the level-2 cell ==")
G2 = gamma_from_commutative(G.base, cell.gamma)
print("round trip reproduces all theta maps:",
      all(
          G.theta(n, i).table == G2.theta(n, i).table
          for n in range(2, 5) for i in range(1, n)
      ))

print()
print("== graph partitions carry the same structure ==")
H = catalog.graph_partition_gamma(catalog.path_graph(3), 4)
print("relations hold:", check_gamma(H).ok)
print("evaluating an arbitrary pointed map on partitions:")
merge = PhiStarMor(3, 1, (1, 0, 1))  # merge blocks 1 and 3, drop block 2
act = evaluate_gamma(H, merge)
print(f"  it sends level-3 partitions to level-1 partitions "
      f"({act.dom.size} -> {act.cod.size} elements)")
