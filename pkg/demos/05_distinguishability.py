"""
Partially distinguishable photons
=================================

Rotating the polarisation of mode b by y interpolates between the quantum
walk (y = 0) and a classical random walk (y = pi/2).
"""

import math

import numpy as np
from homwalk import decohered_distribution, distribution_variance

for y in (0, math.pi / 24, math.pi / 6, math.pi / 3, math.pi / 2):
    p = decohered_distribution(50, 25, y, 0.5)
    print(f"y={y:.3f}  p(0)={p[0]:.4f}  p(25)={p[25]:.4f}  variance={distribution_variance(p):.2f}")
