"""
Two-mode Fock-state interference as a single-step continuous-time quantum walk.

A pair ``|l, S-l>`` (``l`` photons in mode a) is the walker at position
``Delta = S - 2l``.  The beam splitter ``U = exp(-i theta H_BS)`` with
``H_BS = (i/2)(a^dag b e^{-i phi} - a b^dag e^{i phi})`` and
``r = sin^2(theta/2)`` moves it across the ``S+1`` sites in one step.

Distributions are plain arrays indexed by the photon count ``k`` in mode a;
states are complex arrays over the basis ``|k, S-k>``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .kravchuk import bs_amplitude_matrix, kravchuk_column, _check_photons, _check_reflectivity

__all__ = [
    "TwoModeFock",
    "BeamSplitter",
    "theta_of_r",
    "r_of_theta",
    "hbs_matrix",
    "basis_state",
    "evolve",
    "evolve_theta",
    "walk_distribution",
    "distribution_variance",
    "ballistic_prefactor",
    "variance_exact",
    "variance_approx",
    "mirror",
    "perfect_state_transfer_fidelity",
]

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class TwoModeFock:
    """Input pair ``|l, S-l>``; ``delta`` is the walker position ``S - 2l``."""

    S: int
    l: int

    def __post_init__(self):
        _check_photons(self.S)
        if int(self.l) != self.l or not 0 <= self.l <= self.S:
            raise ValueError(f"l={self.l!r} outside 0..{self.S}")

    @property
    def delta(self):
        return self.S - 2 * self.l

    @classmethod
    def from_delta(cls, S, delta):
        if (S - delta) % 2:
            raise ValueError(f"position {delta} has the wrong parity for S={S}")
        return cls(S, (S - delta) // 2)

    def state(self):
        return basis_state(self.S, self.l)


@dataclass(frozen=True)
class BeamSplitter:
    r: float
    phi: float = HALF_PI

    def __post_init__(self):
        _check_reflectivity(self.r)

    @property
    def theta(self):
        return theta_of_r(self.r)

    @classmethod
    def from_theta(cls, theta, phi=HALF_PI):
        """Beam splitter for a mixing angle in ``[0, pi]``."""
        return cls(r_of_theta(theta), phi)


def theta_of_r(r):
    """Mixing angle ``theta = 2 arcsin(sqrt r)`` in ``[0, pi]``."""
    _check_reflectivity(r)
    return 2.0 * math.asin(math.sqrt(r))


def r_of_theta(theta):
    """Reflectivity ``sin^2(theta/2)``; inverse of :func:`theta_of_r` on ``[0, pi]``."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    return math.sin(0.5 * theta) ** 2


def hbs_matrix(S, phi=HALF_PI):
    """Matrix of ``H_BS`` in the basis ``|l, S-l>``, ``l = 0..S``.

    Built from the ladder elements ``a^dag b |l, S-l> = sqrt((l+1)(S-l)) |l+1, S-l-1>``.
    Real symmetric for ``phi = pi/2``; Hermitian with phases ``+-i e^{-+i phi}/2``
    on the off-diagonals otherwise.
    """
    _check_photons(S)
    l = np.arange(S)
    ladder = 0.5 * np.sqrt((l + 1.0) * (S - l))
    if phi == HALF_PI:
        h = np.zeros((S + 1, S + 1))
        h[l + 1, l] = ladder
        h[l, l + 1] = ladder
        return h
    h = np.zeros((S + 1, S + 1), dtype=complex)
    h[l + 1, l] = 1j * np.exp(-1j * phi) * ladder
    h[l, l + 1] = -1j * np.exp(1j * phi) * ladder
    return h


def basis_state(S, l):
    psi = np.zeros(S + 1, dtype=complex)
    psi[l] = 1.0
    return psi


def _as_state(state):
    if isinstance(state, TwoModeFock):
        return state.state()
    psi = np.asarray(state, dtype=complex)
    if psi.ndim != 1 or psi.size == 0:
        raise ValueError(f"state must be a non-empty vector, got shape {psi.shape}")
    return psi


def _closed_form_unitary(S, r, phi):
    # strip the global exp(-i theta S/2) carried by the amplitude formula
    return np.exp(0.5j * theta_of_r(r) * S) * bs_amplitude_matrix(S, r, phi)


def evolve_theta(state, theta, phi=HALF_PI):
    """``exp(-i theta H_BS) |state>`` by eigendecomposition, for any real ``theta``."""
    psi = _as_state(state)
    S = psi.size - 1
    w, v = np.linalg.eigh(hbs_matrix(S, phi))
    return v @ (np.exp(-1j * theta * w) * (v.conj().T @ psi))


def evolve(state, bs, method="kravchuk"):
    """Apply the beam splitter ``bs`` to ``state``.

    Parameters
    ----------
    state : TwoModeFock or array_like
        Input pair or amplitude vector over ``|k, S-k>``.
    bs : BeamSplitter
    method : {"kravchuk", "spectral"}
        ``"kravchuk"`` uses the closed-form Kravchuk kernel, ``"spectral"``
        diagonalises ``H_BS``.  Both give ``exp(-i theta H_BS) |state>``.
    """
    psi = _as_state(state)
    S = psi.size - 1
    if method == "kravchuk":
        return _closed_form_unitary(S, bs.r, bs.phi) @ psi
    if method == "spectral":
        return evolve_theta(psi, bs.theta, bs.phi)
    raise ValueError(f"unknown method {method!r}")


def walk_distribution(S, l, r):
    """Output distribution ``p[k] = phi_k^{(r)}(l - S r, S)^2`` of the walk from ``|l, S-l>``."""
    return kravchuk_column(S, r, l) ** 2


def distribution_variance(probs):
    """Variance of ``S_z = (2k - S)/2`` under an output distribution over ``k``."""
    probs = np.asarray(probs, dtype=float)
    k = np.arange(probs.size)
    mean = probs @ k
    return float(probs @ (k - mean) ** 2)


def ballistic_prefactor(S, l):
    """``((S^2 - Delta^2)/2 + S) / 4`` with ``Delta = S - 2l``."""
    delta = S - 2 * l
    return 0.25 * ((S * S - delta * delta) / 2.0 + S)


def _theta(r, theta):
    if (r is None) == (theta is None):
        raise ValueError("give exactly one of r or theta")
    return theta_of_r(r) if theta is None else theta


def variance_exact(S, l, r=None, *, theta=None):
    """Exact variance of ``S_z`` after the walk: ``prefactor * sin^2(theta)``."""
    return ballistic_prefactor(S, l) * math.sin(_theta(r, theta)) ** 2


def variance_approx(S, l, r=None, *, theta=None):
    """Ballistic approximation ``prefactor * theta_eff^2``.

    ``theta_eff = min(theta, pi - theta)`` folds the walk time onto
    ``[0, pi/2]``, the same period used by the harmonic spectrum.
    """
    t = _theta(r, theta) % (2.0 * math.pi)
    t = min(t, 2.0 * math.pi - t)
    t = min(t, math.pi - t)
    return ballistic_prefactor(S, l) * t * t


def mirror(state):
    """Spatial inversion ``amps[k] -> amps[S-k]``."""
    return _as_state(state)[::-1].copy()


def perfect_state_transfer_fidelity(state, r, phi=HALF_PI):
    """Overlap ``|<mirror(state)| U(r) |state>|^2`` of the walk with the mirrored input.

    For ``phi != pi/2`` the mirror target carries the phase ``exp(i(phi - pi/2)(2l - S))``
    that a full reflection imprints on ``|l, S-l>``, so ``r = 1`` always gives unit fidelity.
    """
    psi = _as_state(state)
    norm = np.vdot(psi, psi).real
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"state is not normalised (norm^2 = {norm:.6g})")
    S = psi.size - 1
    l = np.arange(S + 1)
    target = np.zeros_like(psi)
    target[S - l] = np.exp(1j * (phi - HALF_PI) * (2 * l - S)) * psi
    out = evolve(psi, BeamSplitter(r, phi))
    return float(abs(np.vdot(target, out)) ** 2)
