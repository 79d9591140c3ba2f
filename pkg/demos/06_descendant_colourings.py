"""Descendant colourings and the optimal path-product invariant.

Colouring each vertex's child edges 1..k in decreasing order of subtree
size makes subtree sizes grow geometrically along any rainbow path:
hosting a rainbow copy of a tree H forces the host order to reach the
minimum over roots and injective labellings of H's worst root-to-leaf
label product.  That quantity also sizes the geometric-arity host that
guarantees a rainbow complete binary tree.
"""

import math

from ramsey_lab import (
    RootedTree,
    descendant_colouring,
    embed_rainbow_binary,
    lazy_descendant_colouring,
    min_max_path_product,
    parse_graph,
    path,
    rainbow_binary_host,
)

t = RootedTree.from_graph(parse_graph("T(2,2)"), 0)
print("descendant colouring of the height-2 binary tree:")
for edge, label in sorted(descendant_colouring(t).items()):
    print(f"  {edge}: {label}")

print()
print("optimal worst path products:")
for spec in ("K2", "P2", "P3", "K1,3", "B2"):
    best = min_max_path_product(parse_graph(spec))
    print(f"  f({spec}) = {best.value}  (root {best.root}, labels {dict(sorted(best.labels.items()))})")

print()
print("paths beat the square root of the factorial:")
for d in range(1, 7):
    v = min_max_path_product(path(d)).value
    print(f"  f(P{d}) = {v:>3}  vs  sqrt({d}!) = {math.sqrt(math.factorial(d)):6.2f}")

print()
host = rainbow_binary_host(3)
print(f"geometric-arity host of height 3: {host.n} vertices, {len(host.leaves())} leaves")
w = embed_rainbow_binary(host, lazy_descendant_colouring(host), 3)
print(f"descendant-coloured host hosts a {w.kind} complete binary tree of height 3,")
print(f"rooted at {w.mapping[0]} with leaves mapped to {w.mapping[-4:]} ...")
