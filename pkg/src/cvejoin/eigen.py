"""Dense symmetric eigenvalues: Householder tridiagonalisation + implicit QL.

Eigenvalues only. The reduction is vectorised with numpy; the QL sweep on
the tridiagonal runs over plain Python floats, which is fast enough for the
matrix sizes this package works with (a few hundred rows).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NoConvergenceError

MAX_SWEEPS = 60


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a symmetric matrix to tridiagonal form by Householder reflections.

    Returns ``(diagonal, offdiagonal)`` with ``len(offdiagonal) == n - 1``.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        tail = np.linalg.norm(x[1:])
        if tail == 0.0:
            continue
        norm_x = math.hypot(x[0], tail)
        alpha = -norm_x if x[0] >= 0 else norm_x
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = 2.0 * (p - (v @ p) * v)
        sub -= np.outer(v, w) + np.outer(w, v)
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
    return np.diag(a).copy(), np.diag(a, -1).copy()


def tridiagonal_eigenvalues(diagonal, offdiagonal) -> list[float]:
    """Implicit-shift QL iteration (Wilkinson shift) on a symmetric tridiagonal."""
    d = [float(x) for x in diagonal]
    n = len(d)
    e = [float(x) for x in offdiagonal] + [0.0]
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise NoConvergenceError(n, abs(e[l]))
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def sym_eigenvalues_array(a) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return a[0].copy()
    d, e = tridiagonalize(a)
    values = np.array(tridiagonal_eigenvalues(d, e))
    return np.sort(values)[::-1]
