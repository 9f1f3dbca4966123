"""
Altland-Zirnbauer classification of single-excitation hopping matrices.

Only the fixed candidate operators are tested: time reversal ``T = 1 K``,
the sublattice operator ``Gamma = diag((-1)^i)`` and ``C = Gamma K``.  No
search over other unitaries is attempted.
"""

from dataclasses import dataclass, asdict
from typing import Optional

import numpy as np

__all__ = [
    "SymmetryReport",
    "TEN_FOLD_WAY",
    "sublattice_operator",
    "check_time_reversal",
    "check_particle_hole",
    "check_chiral",
    "classify",
]

# (T^2, C^2, Gamma^2) -> class, 0 meaning "absent"
TEN_FOLD_WAY = {
    (0, 0, 0): "A",
    (0, 0, 1): "AIII",
    (1, 0, 0): "AI",
    (1, 1, 1): "BDI",
    (0, 1, 0): "D",
    (-1, 1, 1): "DIII",
    (-1, 0, 0): "AII",
    (-1, -1, 1): "CII",
    (0, -1, 0): "C",
    (1, -1, 1): "CI",
}


@dataclass
class SymmetryReport:
    has_T: bool
    has_C: bool
    has_Gamma: bool
    T_squared: Optional[int]
    C_squared: Optional[int]
    Gamma_squared: Optional[int]
    az_class: str

    @property
    def triple(self):
        return (self.T_squared or 0, self.C_squared or 0, self.Gamma_squared or 0)

    def to_dict(self):
        return asdict(self)


def _as_square(H):
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    return H


def _tol(H, atol):
    return atol * max(1.0, float(np.max(np.abs(H))) if H.size else 1.0)


def sublattice_operator(n):
    return np.diag((-1.0) ** np.arange(n))


def check_time_reversal(H, atol=1e-12):
    """``T = 1 K`` is a symmetry iff ``H`` is real (and symmetric). Returns ``(holds, T^2)``."""
    H = _as_square(H)
    tol = _tol(H, atol)
    holds = bool(np.max(np.abs(np.imag(H)), initial=0.0) < tol
                 and np.max(np.abs(H - H.T), initial=0.0) < tol)
    return holds, (1 if holds else None)


def check_chiral(H, atol=1e-12):
    """``Gamma H Gamma = -H`` for ``Gamma = diag((-1)^i)``. Returns ``(holds, Gamma^2)``."""
    H = _as_square(H)
    G = sublattice_operator(H.shape[0])
    holds = bool(np.max(np.abs(G @ H @ G + H), initial=0.0) < _tol(H, atol))
    return holds, (1 if holds else None)


def check_particle_hole(H, atol=1e-12):
    """``C = Gamma K`` anticommutes: ``Gamma H^* Gamma = -H``. Returns ``(holds, C^2)``."""
    H = _as_square(H)
    G = sublattice_operator(H.shape[0])
    holds = bool(np.max(np.abs(G @ H.conj() @ G + H), initial=0.0) < _tol(H, atol))
    return holds, (1 if holds else None)


def classify(H, atol=1e-12):
    """Symmetry report and ten-fold-way label of a hopping matrix.

    >>> classify(np.zeros((1, 1))).az_class
    'BDI'
    """
    has_T, t2 = check_time_reversal(H, atol)
    has_G, g2 = check_chiral(H, atol)
    has_C, c2 = check_particle_hole(H, atol)
    if has_T and has_G:
        # C = T Gamma, so C^2 = T^2 Gamma^2
        c2 = t2 * g2
    label = TEN_FOLD_WAY[(t2 or 0, c2 or 0, g2 or 0)]
    return SymmetryReport(has_T, has_C, has_G, t2, c2, g2, label)
