"""
Chiral XY chains restricted to the single-excitation sector.

``H_XY = sum_n J_n/2 (X_n X_{n+1} + Y_n Y_{n+1})`` acts on one flipped spin
as the hopping matrix with zero diagonal and off-diagonal ``J_n``.  The SSH
chain uses ``J_n = 2J(1 + delta (-1)^n)``; the generalised chain uses
``J_n = sqrt(n(S+1-n))/2`` and coincides with the beam-splitter Hamiltonian.
"""

from dataclasses import dataclass
import math

import numpy as np

from .fock_walk import hbs_matrix
from .tridiagonal import tridiagonal_eigh

__all__ = [
    "ChainSpec",
    "EdgeState",
    "AmbiguousZeroModeError",
    "NotExponentiallyLocalisedError",
    "ssh_couplings",
    "generalized_ssh_couplings",
    "ssh_localisation_length",
    "eigensystem",
    "zero_energy_mode",
    "near_zero_mode",
    "fit_localisation_length",
    "edge_envelope",
    "photonic_equivalence_check",
]


class AmbiguousZeroModeError(ValueError):
    """More than one eigenvalue inside the zero-mode tolerance."""


class NotExponentiallyLocalisedError(ValueError):
    """Edge profile is not a single exponential decay from one edge."""


@dataclass(frozen=True, eq=False)
class ChainSpec:
    """Couplings ``J_1..J_S`` of a chain with ``S + 1`` sites."""

    couplings: np.ndarray

    def __post_init__(self):
        J = np.atleast_1d(np.asarray(self.couplings, dtype=float))
        if J.ndim != 1:
            raise ValueError("couplings must be a vector")
        if np.any(J <= 0):
            raise ValueError("couplings must be strictly positive")
        object.__setattr__(self, "couplings", J)

    @property
    def n_sites(self):
        return self.couplings.size + 1

    @property
    def S(self):
        return self.couplings.size

    def matrix(self):
        """Single-excitation matrix: zero diagonal, ``J_n`` between sites n-1 and n."""
        J = self.couplings
        return np.diag(J, 1) + np.diag(J, -1)


@dataclass
class EdgeState:
    """Eigenvector over chain sites with its energy.

    ``localisation`` holds a fitted length in sites, ``"algebraic"`` when no
    exponential fit applies, or ``None`` if not assessed.
    """

    amps: np.ndarray
    energy: float
    localisation: object = None

    @property
    def probabilities(self):
        return np.abs(self.amps) ** 2


def ssh_couplings(S, J=1.0, delta=0.0):
    """SSH couplings ``J_n = 2J(1 + delta (-1)^n)`` for ``n = 1..S``."""
    if S < 1:
        raise ValueError("an SSH chain needs S >= 1")
    if not abs(delta) < 1:
        raise ValueError(f"|delta| must be below 1, got {delta!r}")
    n = np.arange(1, S + 1)
    return ChainSpec(2.0 * J * (1.0 + delta * (-1.0) ** n))


def generalized_ssh_couplings(S):
    """Couplings ``J_n = sqrt(n (S + 1 - n)) / 2`` reproducing the beam-splitter Hamiltonian."""
    if S < 1:
        raise ValueError("the chain needs S >= 1")
    n = np.arange(1, S + 1, dtype=float)
    return ChainSpec(0.5 * np.sqrt(n * (S + 1 - n)))


def ssh_localisation_length(delta):
    """``2 / ln((1 + delta)/(1 - delta))``, decay length of the SSH edge amplitude."""
    return 2.0 / math.log((1.0 + delta) / (1.0 - delta))


def eigensystem(spec):
    """Ascending eigenvalues and orthonormal eigenvectors of the chain matrix."""
    return tridiagonal_eigh(np.zeros(spec.n_sites), spec.couplings)


def _default_tol(spec):
    return 1e-8 * (spec.couplings.max() if spec.S else 1.0)


def _fix_sign(v):
    i = int(np.argmax(np.abs(v)))
    return v if v[i] >= 0 else -v


def _edge_state(v, energy):
    state = EdgeState(_fix_sign(v), float(energy))
    try:
        state.localisation = fit_localisation_length(state)
    except NotExponentiallyLocalisedError:
        state.localisation = "algebraic"
    return state


def zero_energy_mode(spec, tol=None):
    """The eigenvector with ``|lambda| < tol``, or ``None`` if there is none.

    Raises
    ------
    AmbiguousZeroModeError
        If several eigenvalues fall inside the tolerance.
    """
    tol = _default_tol(spec) if tol is None else tol
    w, v = eigensystem(spec)
    hits = np.flatnonzero(np.abs(w) < tol)
    if hits.size == 0:
        return None
    if hits.size > 1:
        raise AmbiguousZeroModeError(
            f"{hits.size} eigenvalues within {tol:g} of zero: {w[hits]}"
        )
    return _edge_state(v[:, hits[0]], w[hits[0]])


def near_zero_mode(spec):
    """Eigenvector of the smallest non-negative eigenvalue.

    For chains with an even number of sites the chiral spectrum has no exact
    zero; this returns the positive partner of the pair closest to zero.
    """
    w, v = eigensystem(spec)
    i = int(np.argmin(np.where(w >= -_default_tol(spec), np.abs(w), np.inf)))
    return _edge_state(v[:, i], w[i])


def fit_localisation_length(state, floor=1e-12, min_r2=0.999):
    """Least-squares decay length ``xi`` with ``|amp(site)| ~ exp(-site / xi)``.

    Only the sublattice carrying most of the weight is fitted, and components
    below ``floor`` times the largest one are dropped.  A profile that does not
    fall monotonically from one edge, or fits a line in ``log|amp|`` worse than
    ``min_r2``, raises :class:`NotExponentiallyLocalisedError`.  A state on a
    single site returns ``0.0``.
    """
    amps = np.abs(np.asarray(state.amps))
    n = amps.size
    if n < 2:
        return 0.0
    weights = [np.sum(amps[0::2] ** 2), np.sum(amps[1::2] ** 2)]
    start = int(np.argmax(weights))
    sites = np.arange(start, n, 2)
    a = amps[sites]
    if np.argmax(a) > a.size // 2:
        # localised at the right edge: measure distance from there
        sites = (n - 1) - sites[::-1]
        a = a[::-1]
    keep = a > floor * a.max()
    if np.any(np.diff(keep.astype(int)) > 0):
        raise NotExponentiallyLocalisedError("profile re-emerges after vanishing")
    sites, a = sites[keep], a[keep]
    if a.size < 2:
        return 0.0
    if np.any(np.diff(a) > 1e-9 * a.max()):
        raise NotExponentiallyLocalisedError("amplitude does not decay monotonically")
    y = np.log(a)
    slope, icpt = np.polyfit(sites, y, 1)
    resid = y - (slope * sites + icpt)
    ss_tot = np.sum((y - y.mean()) ** 2)
    r2 = 1.0 - np.sum(resid**2) / ss_tot if ss_tot > 0 else 0.0
    if slope >= 0 or r2 < min_r2:
        raise NotExponentiallyLocalisedError(f"poor exponential fit (R^2 = {r2:.4f})")
    return -1.0 / slope


def edge_envelope(k, S):
    """Asymptotic envelope ``4 / (pi S sqrt(1 - (2k/S - 1)^2))`` of the zero-mode statistics.

    Diverges at ``k = 0`` and ``k = S``.
    """
    k = np.asarray(k, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        return 4.0 / (math.pi * S * np.sqrt(1.0 - (2.0 * k / S - 1.0) ** 2))


def photonic_equivalence_check(S):
    """Largest entrywise gap between ``H_BS`` (phi = pi/2) and the generalised XY chain."""
    fock = hbs_matrix(S)
    spin = generalized_ssh_couplings(S).matrix()
    return float(np.max(np.abs(fock - spin)))
