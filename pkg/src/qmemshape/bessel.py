"""Cylindrical Bessel function J0 for the memory kernels.

Two regimes: the power series sum_m (-1)^m (x/2)^(2m) / (m!)^2 below
x = 15.5, accumulated in double-double arithmetic because the terms
grow to ~1e5 before alternating down, and the Hankel asymptotic
expansion above. Absolute error stays below ~1e-14 for x <= 1e4,
comfortably inside the 1e-12 contract.

Both a compiled scalar kernel and a vectorized NumPy path exist; see
:mod:`qmemshape._backend` for how one is selected.
"""

import numpy as np

from ._backend import HAVE_NUMBA, use_numba

SERIES_CUTOFF = 15.5
_SERIES_TERMS = 48
_HANKEL_TERMS = 11

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ta = _SPLITTER * a
    ah = ta - (ta - a)
    al = a - ah
    tb = _SPLITTER * b
    bh = tb - (tb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    e = e + (al + bl)
    t = s + e
    return t, e - (t - s)


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    s = p + e
    return s, e - (s - p)


def _dd_div_scalar(ah, al, d):
    q1 = ah / d
    p, e = _two_prod(q1, d)
    r = ((ah - p) - e) + al
    q2 = r / d
    q = q1 + q2
    return q, q2 - (q - q1)


def _hankel_coefficients(count: int) -> np.ndarray:
    a = [1.0]
    for k in range(1, count):
        a.append(a[-1] * (-((2 * k - 1) ** 2)) / (8.0 * k))
    return np.array(a)


_AK = _hankel_coefficients(2 * _HANKEL_TERMS)
# P = sum_j (-1)^j a_{2j} u^j,  Q = (sum_j (-1)^j a_{2j+1} u^j) / x,  u = x^-2
_P_COEF = np.array([(-1.0) ** j * _AK[2 * j] for j in range(_HANKEL_TERMS)])
_Q_COEF = np.array([(-1.0) ** j * _AK[2 * j + 1] for j in range(_HANKEL_TERMS)])


def _j0_series(x):
    """Compensated power series; valid for 0 <= x <= SERIES_CUTOFF."""
    uh, ul = _two_prod(x, x)
    uh, ul = 0.25 * uh, 0.25 * ul
    th, tl = np.ones_like(x), np.zeros_like(x)
    sh, sl = np.ones_like(x), np.zeros_like(x)
    for m in range(1, _SERIES_TERMS + 1):
        th, tl = _dd_mul(th, tl, uh, ul)
        th, tl = _dd_div_scalar(th, tl, float(m * m))
        th, tl = -th, -tl
        sh, sl = _dd_add(sh, sl, th, tl)
    return sh


def _j0_asymptotic(x):
    """Hankel expansion; used for x > SERIES_CUTOFF."""
    u = 1.0 / (x * x)
    p = np.full_like(x, _P_COEF[-1])
    q = np.full_like(x, _Q_COEF[-1])
    for j in range(_HANKEL_TERMS - 2, -1, -1):
        p = p * u + _P_COEF[j]
        q = q * u + _Q_COEF[j]
    c = np.cos(x)
    s = np.sin(x)
    # cos(x - pi/4) = (c + s)/sqrt2, sin(x - pi/4) = (s - c)/sqrt2
    return (p * (c + s) - (q / x) * (s - c)) / np.sqrt(np.pi * x)


def _j0_numpy(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    small = x <= SERIES_CUTOFF
    if small.any():
        out[small] = _j0_series(x[small])
    large = ~small
    if large.any():
        out[large] = _j0_asymptotic(x[large])
    return out


if HAVE_NUMBA:
    from numba import njit

    _two_sum_nb = njit(cache=True)(_two_sum)
    _two_prod_nb = njit(cache=True)(_two_prod)
    _dd_add_nb = njit(cache=True)(_dd_add)
    _dd_mul_nb = njit(cache=True)(_dd_mul)
    _dd_div_scalar_nb = njit(cache=True)(_dd_div_scalar)

    @njit(cache=True)
    def _j0_scalar_nb(x):
        if x <= SERIES_CUTOFF:
            uh, ul = _two_prod_nb(x, x)
            uh, ul = 0.25 * uh, 0.25 * ul
            th, tl = 1.0, 0.0
            sh, sl = 1.0, 0.0
            for m in range(1, _SERIES_TERMS + 1):
                th, tl = _dd_mul_nb(th, tl, uh, ul)
                th, tl = _dd_div_scalar_nb(th, tl, float(m * m))
                th, tl = -th, -tl
                sh, sl = _dd_add_nb(sh, sl, th, tl)
                if abs(th) < 1e-20 * abs(sh):
                    break
            return sh
        u = 1.0 / (x * x)
        p = _P_COEF[_HANKEL_TERMS - 1]
        q = _Q_COEF[_HANKEL_TERMS - 1]
        for j in range(_HANKEL_TERMS - 2, -1, -1):
            p = p * u + _P_COEF[j]
            q = q * u + _Q_COEF[j]
        c = np.cos(x)
        s = np.sin(x)
        return (p * (c + s) - (q / x) * (s - c)) / np.sqrt(np.pi * x)

    @njit(cache=True)
    def _j0_array_nb(flat):
        out = np.empty_like(flat)
        for i in range(flat.shape[0]):
            out[i] = _j0_scalar_nb(flat[i])
        return out


def j0_values(x: np.ndarray) -> np.ndarray:
    """J0 elementwise over a nonnegative array."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.size and (not np.all(np.isfinite(x)) or np.any(x < 0.0)):
        raise ValueError("J0 arguments must be finite and nonnegative")
    if use_numba():
        return _j0_array_nb(x.ravel()).reshape(x.shape)
    return _j0_numpy(x)


def bessel_j0(x: float) -> float:
    """J0(x) for a nonnegative scalar, |error| <= 1e-12 for x <= 1e4."""
    x = float(x)
    if not np.isfinite(x) or x < 0.0:
        raise ValueError(f"J0 argument must be finite and nonnegative, got {x}")
    if use_numba():
        return float(_j0_scalar_nb(x))
    return float(_j0_numpy(np.asarray([x]))[0])
