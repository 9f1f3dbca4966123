"""
Kravchuk functions and the beam-splitter transition kernel.

The orthonormal Kravchuk function ``phi_k^{(r)}(l - S r, S)`` is the
``(k, l)`` entry of the real orthogonal matrix that a lossless beam splitter
of reflectivity ``r`` implements on two-mode Fock states with ``S`` photons
(up to phases).  Column ``l`` of that matrix is the eigenvector of the
Jacobi matrix of the binomial weight for eigenvalue ``l``, which gives a
three-term recurrence in ``k`` that stays accurate for hundreds of photons.
The terminating hypergeometric sum is kept only as a small-``S`` oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
import math

import mpmath
import numpy as np

__all__ = [
    "KravchukParams",
    "kravchuk_function",
    "kravchuk_column",
    "kravchuk_matrix",
    "kravchuk_hypergeometric",
    "kravchuk_exact",
    "bs_amplitude",
    "bs_amplitude_matrix",
    "fractional_qkt_order",
]

# rescale a recurrence once its magnitude passes this
_RESCALE = 1e150


@dataclass(frozen=True)
class KravchukParams:
    """Arguments of ``phi_k^{(r)}(l - S r, S)``."""

    S: int
    r: float
    k: int
    l: int

    def __post_init__(self):
        _check_photons(self.S)
        _check_reflectivity(self.r)
        _check_index(self.k, self.S, "k")
        _check_index(self.l, self.S, "l")

    @property
    def x(self):
        """Shifted argument ``l - S r`` of the Kravchuk function."""
        return self.l - self.S * self.r


def _check_photons(S):
    if int(S) != S or S < 0:
        raise ValueError(f"photon number must be a non-negative integer, got {S!r}")


def _check_reflectivity(r):
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"reflectivity must lie in [0, 1], got {r!r}")


def _check_index(i, S, name):
    if int(i) != i or not 0 <= i <= S:
        raise ValueError(f"index {name}={i!r} outside 0..{S}")


def _columns(S, r, ls):
    """Columns ``ls`` of the Kravchuk matrix for 0 < r < 1, shape (S+1, len(ls)).

    Forward recurrence from ``k = 0`` and backward recurrence from ``k = S``
    are each run in their stable direction, up to the far edge of the
    oscillatory band of the column, and spliced inside that band before
    normalising.  The forward start is positive, which fixes the sign
    convention ``phi_0 > 0``.
    """
    lam = np.asarray(ls, dtype=float)
    m = lam.size
    if S == 0:
        return np.ones((1, m))
    k = np.arange(S + 1, dtype=float)
    diag = r * (S - k) + k * (1.0 - r)
    off = np.zeros(S + 2)
    off[1:S + 1] = np.sqrt(k[1:] * (S - k[1:] + 1.0) * r * (1.0 - r))

    # oscillatory band: |lambda - b_k| <= a_k + a_{k+1}
    band = np.abs(lam[None, :] - diag[:, None]) <= (off[: S + 1] + off[1:])[:, None]
    empty = ~band.any(axis=0)
    band[:, empty] = True
    lo = band.argmax(axis=0)
    hi = S - band[::-1].argmax(axis=0)

    # one step multiplies by at most ~(S+2)/min(a_k); keep headroom below overflow
    step = (S + 2.0) / off[1:S + 1].min()
    scale = min(_RESCALE, 1e300 / step)

    fwd = np.zeros((S + 1, m))
    fwd[0] = 1.0
    for i in range(S):
        act = hi > i
        prev = fwd[i - 1, act] if i > 0 else 0.0
        fwd[i + 1, act] = ((lam[act] - diag[i]) * fwd[i, act] - off[i] * prev) / off[i + 1]
        big = np.abs(fwd[i + 1]) > scale
        if big.any():
            fwd[: i + 2, big] /= np.abs(fwd[i + 1, big])

    bwd = np.zeros((S + 1, m))
    bwd[S] = 1.0
    for i in range(S, 0, -1):
        act = lo < i
        nxt = bwd[i + 1, act] if i < S else 0.0
        bwd[i - 1, act] = ((lam[act] - diag[i]) * bwd[i, act] - off[i + 1] * nxt) / off[i]
        big = np.abs(bwd[i - 1]) > scale
        if big.any():
            bwd[i - 1:, big] /= np.abs(bwd[i - 1, big])

    out = np.empty((S + 1, m))
    for j in range(m):
        out[:, j] = _splice(fwd[:, j], bwd[:, j], band[:, j])
    return out


def _splice(fwd, bwd, band):
    f = fwd / np.abs(fwd[band]).max()
    b = bwd / np.abs(bwd[band]).max()
    score = np.where(band, np.minimum(np.abs(f), np.abs(b)), -1.0)
    km = int(np.argmax(score))
    col = f.copy()
    col[km + 1:] = b[km + 1:] * (f[km] / b[km])
    return col / np.linalg.norm(col)


def _endpoint_column(S, r, l):
    col = np.zeros(S + 1)
    if r == 0.0:
        col[l] = 1.0
    else:
        # r -> 1 limit of the hypergeometric form: (-1)^k delta_{k, S-l}
        col[S - l] = (-1.0) ** (S - l)
    return col


def kravchuk_column(S, r, l):
    """Return ``phi_k^{(r)}(l - S r, S)`` for ``k = 0..S`` as an array."""
    _check_photons(S)
    _check_reflectivity(r)
    _check_index(l, S, "l")
    if r in (0.0, 1.0):
        return _endpoint_column(S, r, l)
    return _columns(S, r, [l])[:, 0]


def kravchuk_matrix(S, r):
    """Real orthogonal matrix ``M[k, l] = phi_k^{(r)}(l - S r, S)``."""
    _check_photons(S)
    _check_reflectivity(r)
    if r == 0.0:
        return np.eye(S + 1)
    if r == 1.0:
        return np.column_stack([_endpoint_column(S, r, l) for l in range(S + 1)])
    return _columns(S, r, range(S + 1))


def kravchuk_function(S, r, k, l):
    """Orthonormal Kravchuk function ``phi_k^{(r)}(l - S r, S)``.

    Equal to ``(-1)^k sqrt(C(S,l) C(S,k) (1-r)^(S-l-k) r^(l+k))
    2F1(-k, -l; -S; 1/r)``, evaluated through the stable recurrence.

    Examples
    --------
    >>> round(kravchuk_function(1, 0.5, 0, 0), 12)
    0.707106781187
    """
    p = KravchukParams(S, r, k, l)
    return float(kravchuk_column(p.S, p.r, p.l)[p.k])


def _pochhammer_terms(S, k, l):
    """Coefficients of z^j in the terminating 2F1(-k, -l; -S; z)."""
    coeffs = [Fraction(1)]
    for j in range(min(k, l)):
        coeffs.append(coeffs[-1] * (j - k) * (j - l) / ((j - S) * (j + 1)))
    return coeffs


def kravchuk_hypergeometric(S, r, k, l):
    """Float evaluation of the terminating 2F1 form.

    Loses accuracy through cancellation for S beyond ~30; meant for cross-checks.
    """
    p = KravchukParams(S, r, k, l)
    if r == 0.0 or r == 1.0:
        return float(_endpoint_column(S, r, l)[k])
    z = 1.0 / r
    hyp = sum(float(c) * z**j for j, c in enumerate(_pochhammer_terms(S, p.k, p.l)))
    pref = math.sqrt(comb(S, l) * comb(S, k) * (1 - r) ** (S - l - k) * r ** (l + k))
    return (-1) ** k * pref * hyp


def kravchuk_exact(S, r, k, l, dps=50):
    """Exact-rational evaluation for rational ``r`` (``Fraction`` or str).

    The hypergeometric sum and the squared prefactor are formed in exact
    rational arithmetic; only the final square root is taken at ``dps``
    decimal digits.  Returns an ``mpmath.mpf``.
    """
    r = Fraction(r)
    KravchukParams(S, float(r), k, l)
    if r == 0 or r == 1:
        return mpmath.mpf(float(_endpoint_column(S, float(r), l)[k]))
    z = 1 / r
    hyp = sum((c * z**j for j, c in enumerate(_pochhammer_terms(S, k, l))), Fraction(0))
    pref_sq = comb(S, l) * comb(S, k) * (1 - r) ** (S - l - k) * r ** (l + k)
    with mpmath.workdps(dps):
        pref = mpmath.sqrt(mpmath.mpf(pref_sq.numerator) / pref_sq.denominator)
        val = pref * mpmath.mpf(hyp.numerator) / hyp.denominator
        return (-1) ** k * val


def _mixing_angle(r):
    return 2.0 * math.asin(math.sqrt(r))


def bs_amplitude(S, r, phi, k, l):
    """Amplitude ``<k, S-k| U |l, S-l>`` of a beam splitter (r, phi).

    ``exp(-i theta S/2) exp(i phi (l-k)) (-1)^(k+l) phi_k^{(r)}(l - S r, S)``
    with ``theta = 2 arcsin(sqrt(r))``.  The leading ``exp(-i theta S/2)`` is
    a global phase; it makes this kernel equal to ``exp(-i theta (H_BS + S/2))``.
    """
    p = KravchukParams(S, r, k, l)
    theta = _mixing_angle(r)
    return (
        np.exp(-0.5j * theta * S)
        * np.exp(1j * phi * (l - k))
        * (-1) ** (k + l)
        * kravchuk_column(S, r, p.l)[k]
    )


def bs_amplitude_matrix(S, r, phi):
    """Full ``(S+1) x (S+1)`` matrix of :func:`bs_amplitude` (rows k, columns l)."""
    M = kravchuk_matrix(S, r)
    idx = np.arange(S + 1)
    theta = _mixing_angle(r)
    phase = np.exp(1j * phi * (idx[None, :] - idx[:, None]))
    sign = (-1.0) ** (idx[None, :] + idx[:, None])
    return np.exp(-0.5j * theta * S) * phase * sign * M


def fractional_qkt_order(r):
    """Fractionality ``alpha = 4 arcsin(sqrt r) / pi`` of the Kravchuk-Fourier transform."""
    _check_reflectivity(r)
    return 4.0 * math.asin(math.sqrt(r)) / math.pi
