"""
Searching for good codes
========================

Sweeping every valid generator spec over small lengths and ranking the
binary images by minimum distance reproduces the documented examples.
"""

from z2ucodes.cli import search_doc

# All codes with alpha <= 2, beta <= 3 whose image has distance >= 2
doc = search_doc(alpha_max=2, beta_max=3, d_min=2, budget=1 << 24)
print(f"{len(doc['rows'])} specs with d >= 2; the best few:")
for row in doc["rows"][:8]:
    print(f"  [{row['n']},{row['k']},{row['d']}]  case {row['case']}  {row['spec']}")

# The length-8 examples show up at (alpha, beta) = (2, 3)
length8 = [r for r in doc["rows"] if r["n"] == 8]
print(f"\n{len(length8)} length-8 codes found at (2, 3)")
best = max(length8, key=lambda r: (r["d"], r["k"]))
print("best by (d, k):", f"[{best['n']},{best['k']},{best['d']}]", best["spec"])
