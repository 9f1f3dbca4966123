"""Symmetric tridiagonal eigensolver (implicit QL with Wilkinson shifts)."""

import math

import numpy as np

__all__ = ["tridiagonal_eigh", "ConvergenceError"]


class ConvergenceError(RuntimeError):
    pass


def tridiagonal_eigh(diag, offdiag, max_iter=60):
    """Eigenvalues and eigenvectors of a real symmetric tridiagonal matrix.

    Parameters
    ----------
    diag : array_like, shape (n,)
        Main diagonal.
    offdiag : array_like, shape (n-1,)
        First sub/super diagonal.
    max_iter : int
        QL sweeps allowed per eigenvalue before giving up.

    Returns
    -------
    w : ndarray, shape (n,)
        Eigenvalues in ascending order.
    v : ndarray, shape (n, n)
        Orthonormal eigenvectors, ``v[:, i]`` belonging to ``w[i]``.
    """
    d = np.array(diag, dtype=float)
    n = d.size
    e = np.zeros(n)
    off = np.asarray(offdiag, dtype=float)
    if off.size != max(n - 1, 0):
        raise ValueError(f"offdiag must have length {n - 1}, got {off.size}")
    e[: n - 1] = off
    # zt[i] is eigenvector column i; rows keep the rotations contiguous
    zt = np.eye(n)
    if n == 0:
        return d, zt

    anorm = float(np.max(np.abs(d) + np.abs(e) + np.abs(np.roll(e, 1))))
    eps = np.finfo(float).eps
    small = eps * anorm

    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= small or abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise ConvergenceError(f"no convergence for eigenvalue {l}")

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi = zt[i].copy()
                zt[i] = c * zi - s * zt[i + 1]
                zt[i + 1] = s * zi + c * zt[i + 1]
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    return d[order], zt[order].T.copy()
