"""Exact graph densities and pattern-family classification.

Every density is an exact rational: max e(J)/v(J) over subgraphs for
the appearance threshold, and max (e(J)-1)/(v(J)-2) for the two-colour
threshold.  Classification flags (star, matching, constellation, short
forest, cherry) drive the threshold case analysis in later demos.
"""

from ramsey_lab import bridge_join, classify, max_2_density, max_density, parse_graph

for spec in ("K2", "K3", "K4", "P3", "K1,3", "K1,2+K2", "T(3,2)"):
    g = parse_graph(spec)
    print(f"{spec:>9}:  m = {str(max_density(g)):>5}   m2 = {max_2_density(g)}")

print()
print("family flags:")
for spec in ("M2", "K1,3", "P3", "K1,2", "K1,2+K1,3", "K1,2+K2"):
    cls = classify(parse_graph(spec))
    flags = [
        name
        for name in ("is_star", "is_matching", "is_constellation", "is_short_forest", "is_cherry")
        if getattr(cls, name)
    ]
    print(f"{spec:>10}: {', '.join(f[3:] for f in flags) or 'forest only'}")

print()
print("bridging two graphs never raises the 2-density above max(m2, 1):")
g1, g2 = parse_graph("K4"), parse_graph("K3")
joined = bridge_join(g1, g2, 0, 0)
print(f"  m2(K4) = {max_2_density(g1)}, m2(K3) = {max_2_density(g2)}")
print(f"  m2(K4 -bridge- K3) = {max_2_density(joined)}")
