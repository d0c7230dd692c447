"""User-facing matrix functions built as finite combinations of component
matrices: exponential, canonical ODE basis, integer powers, Drazin inverse
powers, and logarithms with per-eigenvalue branch choice.

All sums truncate at the eigenvalue index r_j rather than the multiplicity,
which drops theoretically-zero component matrices instead of adding their
numerical noise.
"""

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import NonPrincipalWarning, SingularMatrix
from .hermite import Spectrum, hermite_basis
from .spectral import ComponentSystem

ZERO_EIG_TOL = 1e-9
AXIS_TOL = 1e-9


@dataclass(frozen=True)
class BranchSelection:
    """Per-eigenvalue branch offsets b_j for the logarithm.

    The chosen logarithm of alpha_j is ln|alpha_j| + i (Arg(alpha_j) + 2 pi b_j)
    with Arg in (-pi, pi]; all-zero offsets give the principal choice.
    """

    offsets: tuple
    principal: bool = True

    def beta(self, alpha: complex, j: int) -> complex:
        if alpha == 0:
            raise SingularMatrix("logarithm branch undefined for eigenvalue 0")
        return cmath.log(alpha) + 2j * math.pi * self.offsets[j]


def log_branch_principal(spec: Spectrum) -> BranchSelection:
    """All-zero offsets, flagging whether the principal logarithm exists."""
    scale = max(1.0, max((abs(a) for a in spec.alphas), default=0.0))
    principal = all(
        not (abs(a.imag) <= AXIS_TOL * scale and a.real <= AXIS_TOL * scale)
        for a in spec.alphas
    )
    return BranchSelection(offsets=(0,) * len(spec.entries), principal=principal)


def canonical_basis_functions(spec: Spectrum, t: float) -> np.ndarray:
    """Values y_0(t)..y_{n-1}(t) of the canonical ODE basis attached to the
    monic polynomial with this spectrum: y_i has i-th derivative 1 at t=0
    and all other derivatives up to order n-1 zero."""
    basis = hermite_basis(spec)
    n = spec.total_degree
    y = np.zeros(n, dtype=complex)
    for p, (alpha, m) in enumerate(spec.entries):
        weight = cmath.exp(alpha * t)
        t_pow = 1.0
        for r in range(m):
            if r > 0:
                t_pow *= t / r
            coeffs = basis[(p, r)]
            y[: len(coeffs)] += weight * t_pow * coeffs
    return y


def matrix_exponential(cs: ComponentSystem, t: float) -> np.ndarray:
    out = np.zeros((cs.order, cs.order), dtype=complex)
    for j, (alpha, _) in enumerate(cs.spec.entries):
        weight = cmath.exp(alpha * t)
        t_pow = 1.0
        for k in range(cs.index[j]):
            if k > 0:
                t_pow *= t / k
            out += weight * t_pow * cs.component(j, k)
    return out


def _is_zero_eigenvalue(alpha: complex, spec: Spectrum) -> bool:
    scale = max(1.0, max(abs(a) for a in spec.alphas))
    return abs(alpha) <= ZERO_EIG_TOL * scale


def _binom(n: int, k: int) -> float:
    # generalized binomial via falling factorial; exact for integer n of any sign
    num = 1.0
    for i in range(k):
        num *= n - i
    return num / math.factorial(k)


def matrix_power(cs: ComponentSystem, n: int) -> np.ndarray:
    """A**n for n >= 0; the zero-eigenvalue block contributes the single
    Kronecker-delta term when n is below its multiplicity."""
    if n < 0:
        raise ValueError("n must be nonnegative; use drazin_power for inverses")
    out = np.zeros((cs.order, cs.order), dtype=complex)
    for j, (alpha, m) in enumerate(cs.spec.entries):
        if _is_zero_eigenvalue(alpha, cs.spec):
            if n < min(m, cs.index[j]):
                out += cs.component(j, n)
            continue
        for k in range(cs.index[j]):
            if k > n:
                continue
            out += _binom(n, k) * alpha ** (n - k) * cs.component(j, k)
    return out


def drazin_power(cs: ComponentSystem, n: int) -> np.ndarray:
    """n-th power of the Drazin inverse; zero-eigenvalue blocks drop out."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = np.zeros((cs.order, cs.order), dtype=complex)
    for j, (alpha, _) in enumerate(cs.spec.entries):
        if _is_zero_eigenvalue(alpha, cs.spec):
            continue
        for k in range(cs.index[j]):
            out += _binom(-n, k) * alpha ** (-n - k) * cs.component(j, k)
    return out


def matrix_log(cs: ComponentSystem, branch: BranchSelection = None) -> np.ndarray:
    """A logarithm of the (nonsingular) matrix for the chosen branch.

    With all-zero offsets and no eigenvalue on the closed negative real
    axis this is the principal logarithm.
    """
    spec = cs.spec
    if branch is None:
        branch = log_branch_principal(spec)
    scale = max(1.0, max(abs(a) for a in spec.alphas))
    if any(abs(a) <= ZERO_EIG_TOL * scale for a in spec.alphas):
        raise SingularMatrix("matrix has a (near-)zero eigenvalue; no logarithm")
    if all(b == 0 for b in branch.offsets) and not log_branch_principal(spec).principal:
        warnings.warn(
            "eigenvalue on the closed negative real axis: result is a logarithm "
            "but not the principal one",
            NonPrincipalWarning,
            stacklevel=2,
        )
    out = np.zeros((cs.order, cs.order), dtype=complex)
    for j, (alpha, _) in enumerate(spec.entries):
        out += branch.beta(alpha, j) * cs.component(j, 0)
        for k in range(1, cs.index[j]):
            out += ((-1) ** (k - 1) / (k * alpha**k)) * cs.component(j, k)
    return out
