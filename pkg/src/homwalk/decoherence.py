"""
Partial distinguishability as decoherence of the walk.

Mode b is rotated to ``cos(y) b^dag + sin(y) b_perp^dag``.  Its ``S - l``
photons split into ``n`` co-polarised and ``S - l - n`` orthogonal ones with
weight ``C(S-l, n) cos^{2n}(y) sin^{2(S-l-n)}(y)``.  Co-polarised photons
interfere with the ``l`` photons in mode a; orthogonal ones reach port a
independently with probability ``r``.  Detectors count both polarisations.
"""

from dataclasses import dataclass
from math import comb
import math

import numpy as np
from scipy.stats import binom

from .fock_walk import walk_distribution
from .kravchuk import _check_photons, _check_reflectivity

__all__ = ["DistinguishabilityInput", "decohered_distribution", "total_variation"]


@dataclass(frozen=True)
class DistinguishabilityInput:
    S: int
    l: int
    y: float

    def __post_init__(self):
        _check_photons(self.S)
        if not 0 <= self.l <= self.S:
            raise ValueError(f"l={self.l!r} outside 0..{self.S}")
        if not 0.0 <= self.y <= 0.5 * math.pi:
            raise ValueError(f"y must lie in [0, pi/2], got {self.y!r}")


def decohered_distribution(S, l, y, r):
    """Distribution of the total photon count at detector a.

    Parameters
    ----------
    S, l : int
        Total photons and photons in mode a.
    y : float
        Distinguishability angle in ``[0, pi/2]``; 0 is the coherent walk.
    r : float
        Beam-splitter reflectivity.
    """
    inp = DistinguishabilityInput(S, l, y)
    _check_reflectivity(r)
    m = inp.S - inp.l
    c2, s2 = math.cos(y) ** 2, math.sin(y) ** 2
    probs = np.zeros(S + 1)
    for n in range(m + 1):
        w = comb(m, n) * c2**n * s2 ** (m - n)
        if w == 0.0:
            continue
        coherent = walk_distribution(l + n, l, r)
        classical = binom.pmf(np.arange(m - n + 1), m - n, r)
        probs += w * np.convolve(coherent, classical)
    return probs


def total_variation(p, q):
    return 0.5 * float(np.sum(np.abs(np.asarray(p) - np.asarray(q))))
