"""Confluent Vandermonde matrix and its explicit inverse.

Column block k holds, for eigenvalue alpha_k of multiplicity m_k, the
derivative columns j = 0..m_k-1 with entries C(i-1, j-1) alpha**(i-j)
(1-based i >= j, zero above), using the convention 0**0 = 1.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import ConditioningWarning
from .hermite import Spectrum, hermite_basis

GUARDRAIL_ORDER = 12
GUARDRAIL_SCALE = 10.0


@dataclass(frozen=True)
class ConfluentVandermonde:
    spec: Spectrum
    matrix: np.ndarray


def _pow(alpha: complex, e: int) -> complex:
    # 0**0 == 1 so the top entry of every block is 1 even for alpha = 0
    if e == 0:
        return 1.0 + 0j
    return alpha**e


def build_confluent(spec: Spectrum) -> ConfluentVandermonde:
    n = spec.total_degree
    v = np.zeros((n, n), dtype=complex)
    col = 0
    for alpha, m in spec.entries:
        for j in range(1, m + 1):
            for i in range(j, n + 1):
                v[i - 1, col] = math.comb(i - 1, j - 1) * _pow(alpha, i - j)
            col += 1
    return ConfluentVandermonde(spec=spec, matrix=v)


def inverse_confluent(spec: Spectrum) -> np.ndarray:
    """Explicit inverse: row i of block r is the coefficient list of basis slot (r, i)."""
    n = spec.total_degree
    conditioning_check(spec, n)
    basis = hermite_basis(spec)
    inv = np.zeros((n, n), dtype=complex)
    row = 0
    for j, (_, m) in enumerate(spec.entries):
        for k in range(m):
            coeffs = basis[(j, k)]
            inv[row, : len(coeffs)] = coeffs
            row += 1
    return inv


def conditioning_check(spec: Spectrum, n: int):
    """Warn (never error) at scales where explicit inversion loses digits."""
    scale = max((abs(a) for a in spec.alphas), default=0.0)
    if n > GUARDRAIL_ORDER or scale > GUARDRAIL_SCALE:
        warnings.warn(
            f"explicit Vandermonde inverse at order {n}, max |alpha| {scale:.3g}: "
            "expect loss of accuracy",
            ConditioningWarning,
            stacklevel=3,
        )
