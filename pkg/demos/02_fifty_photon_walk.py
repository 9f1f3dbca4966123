"""
A fifty-photon walk
===================

Start from |25, 25> and sweep the reflectivity.  At r = 1/2 the output is
the zero-energy edge state of a chain, peaked at both ends.
"""

import numpy as np
from homwalk import walk_distribution, edge_envelope

S, l = 50, 25
k = np.arange(S + 1)
for r in (0.0, 0.07, 0.25, 0.5):
    p = walk_distribution(S, l, r)
    print(f"r={r:4.2f}  p(0)={p[0]:.4f}  p(25)={p[25]:.4f}  mean |Delta|={np.sum(p * np.abs(S - 2 * k)):.2f}")

# compare with the algebraic envelope on even k, away from the edges
p = walk_distribution(S, l, 0.5)
even = k[(k % 2 == 0) & (k > 4) & (k < 46)]
print("p / envelope:", np.round(p[even] / edge_envelope(even, S), 3))
