"""Exhaustive arrowing decisions on small graphs.

A graph arrows a pair (H1, H2) when every edge colouring, with any
number of colours, contains a monochromatic H1 or a rainbow H2.
Colourings are enumerated as canonical set partitions of the edge set;
counterexamples replay cleanly through the copy finders.
"""

from ramsey_lab import (
    arrows,
    constrained_ramsey_number,
    find_monochromatic_copy,
    find_rainbow_copy,
    parse_graph,
)

cherry = parse_graph("K1,2")
m2 = parse_graph("M2")
p3 = parse_graph("P3")

for g_spec, h1, h2 in [
    ("P2", cherry, cherry),
    ("K2", cherry, cherry),
    ("K1,2+K2", cherry, m2),
    ("P3", m2, p3),
    ("K3", cherry, m2),
]:
    g = parse_graph(g_spec)
    verdict = arrows(g, h1, h2)
    if verdict.arrows:
        print(f"{g_spec:>8} arrows: every one of its colourings is hit"
              f" ({verdict.colourings_examined} examined)")
    else:
        cx = verdict.counterexample
        print(f"{g_spec:>8} does not arrow; avoiding colouring {cx.colours}")
        assert find_monochromatic_copy(g, cx, h1) is None
        assert find_rainbow_copy(g, cx, h2) is None

print()
print("least complete graph arrowing (cherry, cherry):",
      constrained_ramsey_number(cherry, cherry, 5))
print("least complete graph arrowing (cherry, 2-matching):",
      constrained_ramsey_number(cherry, m2, 5))
print("  (the rainbow triangle defeats K3; the perfect-matching"
      " colouring defeats K4)")
