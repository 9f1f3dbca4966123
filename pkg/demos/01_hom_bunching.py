"""
Hong-Ou-Mandel bunching as a quantum walk
=========================================

Two photons in each input port of a balanced beam splitter never leave
with an odd number in one output.  The walker position is Delta = S - 2l.
"""

import numpy as np
from homwalk import walk_distribution, variance_approx, variance_exact, theta_of_r

S, l = 4, 2
for r in (0.04, 0.3, 0.5, 0.96):
    p = walk_distribution(S, l, r)
    print(f"r={r:4.2f}  theta={theta_of_r(r):.3f}  p={np.round(p, 4)}"
          f"  var={variance_exact(S, l, r):.4f}  approx={variance_approx(S, l, r):.4f}")

# the balanced case is exactly (3/8, 0, 1/4, 0, 3/8)
print(walk_distribution(4, 2, 0.5) * 8)
