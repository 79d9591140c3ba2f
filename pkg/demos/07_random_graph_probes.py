"""Seeded random-graph probes of the threshold predictions.

Sampling is reproducible bit for bit (named per-trial streams), and a
whole probability grid shares one uniform draw per pair, so estimates
are exactly monotone along the grid.  The triangle-containment sweep
locates the known n^-1 appearance threshold; the arrowing probe
estimates the arrow probability exactly on each decided sample.
"""

from ramsey_lab import arrow_probability, containment_sweep, parse_graph, rows_to_csv

n = 60
grid = [c / n for c in (0.25, 0.5, 1.0, 2.0, 4.0)]
rows = containment_sweep(parse_graph("K3"), n, grid, trials=300, seed=2024)
print(f"triangle containment in G({n}, p), 300 trials per point:")
print(rows_to_csv(rows))
crossing = next(r.p for r in rows if r.estimate >= 0.5)
print(f"half-probability crossing at p = {crossing:.4f} = {crossing * n:.2f}/n")

print()
print("arrowing probability for (cherry, cherry) at n = 6:")
for p in (0.05, 0.2, 0.6):
    row = arrow_probability(6, p, parse_graph("K1,2"), parse_graph("K1,2"),
                            trials=200, seed=77)
    print(f"  p = {p:4}: estimate {row.estimate:.3f} over {row.trials} trials"
          f" ({row.undecided} undecided)")
