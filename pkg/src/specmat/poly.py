"""Dense univariate complex polynomial and truncated power-series arithmetic.

A polynomial is a 1-D complex ndarray of coefficients in ascending degree:
``p[i]`` is the coefficient of ``x**i``.  The zero polynomial is the empty
array.  All constructors trim trailing coefficients with magnitude at or
below ``TRIM_TOL``.
"""

import numpy as np

from .exceptions import SingularSeries

TRIM_TOL = 1e-12


def as_poly(coeffs) -> np.ndarray:
    """Coerce a coefficient sequence to a normalized complex array."""
    p = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
    return trim(p)


def trim(p: np.ndarray) -> np.ndarray:
    n = len(p)
    while n > 0 and abs(p[n - 1]) <= TRIM_TOL:
        n -= 1
    return p[:n]


def poly_add(a, b) -> np.ndarray:
    a, b = as_poly(a), as_poly(b)
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] += b
    return trim(out)


def poly_mul(a, b) -> np.ndarray:
    a, b = as_poly(a), as_poly(b)
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=complex)
    return trim(np.convolve(a, b))


def poly_derivative(p) -> np.ndarray:
    p = as_poly(p)
    if len(p) <= 1:
        return np.zeros(0, dtype=complex)
    return trim(p[1:] * np.arange(1, len(p)))


def poly_eval_scalar(p, z: complex) -> complex:
    """Horner evaluation at a scalar point."""
    p = as_poly(p)
    acc = 0j
    for c in p[::-1]:
        acc = acc * z + c
    return acc


def poly_eval_matrix(p, A: np.ndarray) -> np.ndarray:
    """Horner evaluation with matrix multiplies; empty polynomial gives 0."""
    A = np.asarray(A, dtype=complex)
    p = as_poly(p)
    k = A.shape[0]
    acc = np.zeros((k, k), dtype=complex)
    eye = np.eye(k, dtype=complex)
    for c in p[::-1]:
        acc = acc @ A + c * eye
    return acc


def poly_shift(p, alpha: complex) -> np.ndarray:
    """Return q with q(y) = p(y + alpha), i.e. the Taylor coefficients of p at alpha.

    Coefficient i of the result equals p^(i)(alpha) / i!.
    """
    p = as_poly(p)
    b = p.copy()
    n = len(b)
    # repeated synthetic division by (x - alpha)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            b[j] += alpha * b[j + 1]
    return trim(b)


def poly_from_roots(roots) -> np.ndarray:
    """Monic polynomial with the given (root, multiplicity) pairs; empty gives 1."""
    p = np.ones(1, dtype=complex)
    for alpha, mult in roots:
        factor = np.array([-alpha, 1.0], dtype=complex)
        for _ in range(mult):
            p = np.convolve(p, factor)
    return trim(p)


def series_reciprocal(p, order: int) -> np.ndarray:
    """Truncated power-series inverse: q with p*q = 1 (mod x**order), len(q) = order."""
    p = as_poly(p)
    if len(p) == 0 or abs(p[0]) <= TRIM_TOL:
        raise SingularSeries("series has (near-)zero constant term")
    q = np.zeros(order, dtype=complex)
    q[0] = 1.0 / p[0]
    for i in range(1, order):
        s = 0j
        for l in range(1, min(i, len(p) - 1) + 1):
            s += p[l] * q[i - l]
        q[i] = -s / p[0]
    return q
