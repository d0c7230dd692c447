"""Recover a spectrum (eigenvalues with multiplicities) from a raw matrix.

Pipeline: Faddeev-LeVerrier characteristic polynomial, Aberth-Ehrlich
simultaneous root iteration, multiple-root refinement, single-linkage
clustering, and a Cayley-Hamilton residual check.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import poly
from .exceptions import NoConvergence, SpectrumMismatch
from .hermite import Spectrum


@dataclass
class SpectrumOptions:
    cluster_tol: float = 1e-6
    max_root_iters: int = 200
    root_tol: float = 1e-12
    user_spectrum: Optional[Spectrum] = field(default=None)

    def __post_init__(self):
        if self.cluster_tol < self.root_tol:
            raise ValueError("cluster_tol must be >= root_tol")


def characteristic_polynomial(A: np.ndarray) -> np.ndarray:
    """Monic det(xI - A) by the Faddeev-LeVerrier trace recurrence."""
    A = np.asarray(A, dtype=complex)
    k = A.shape[0]
    coeffs = np.zeros(k + 1, dtype=complex)
    coeffs[k] = 1.0
    m = np.eye(k, dtype=complex)
    for i in range(1, k + 1):
        am = A @ m
        c = -np.trace(am) / i
        coeffs[k - i] = c
        m = am + c * np.eye(k, dtype=complex)
    return coeffs


def find_roots(p, opts: SpectrumOptions = None):
    """All roots of a monic polynomial by Aberth-Ehrlich iteration.

    Starts from a perturbed circle (radius 1 + max coefficient magnitude,
    fixed angular offset) so runs are reproducible.  Multiple roots are
    post-refined by Newton on the appropriate derivative, since the plain
    iteration can only locate an m-fold root to within ~eps**(1/m).
    """
    opts = opts or SpectrumOptions()
    p = poly.as_poly(p)
    d = len(p) - 1
    if d < 1:
        return []
    coeff_scale = max(1.0, np.max(np.abs(p)))
    target = opts.root_tol * coeff_scale * d
    dp = poly.poly_derivative(p)

    radius = 1.0 + float(np.max(np.abs(p[:-1]))) if d >= 1 else 1.0
    angles = 2.0 * np.pi * np.arange(d) / d + 0.4
    z = radius * np.exp(1j * angles)

    for _ in range(opts.max_root_iters):
        vals = np.array([poly.poly_eval_scalar(p, zi) for zi in z])
        if np.all(np.abs(vals) <= target):
            break
        dvals = np.array([poly.poly_eval_scalar(dp, zi) for zi in z])
        new_z = z.copy()
        for i in range(d):
            if abs(vals[i]) <= target:
                continue
            if dvals[i] == 0:
                new_z[i] = z[i] + target + 1e-8
                continue
            ratio = vals[i] / dvals[i]
            rep = sum(1.0 / (z[i] - z[j]) for j in range(d) if j != i)
            denom = 1.0 - ratio * rep
            if denom == 0:
                new_z[i] = z[i] - ratio
            else:
                new_z[i] = z[i] - ratio / denom
        z = new_z
    else:
        raise NoConvergence(
            f"Aberth-Ehrlich did not converge in {opts.max_root_iters} iterations"
        )

    return [_refine_multiple(p, zi) for zi in z]


def _estimate_multiplicity(p, z) -> int:
    # Schroeder's ratio: p'(z)^2 / (p'(z)^2 - p(z) p''(z)) -> multiplicity
    dp = poly.poly_derivative(p)
    ddp = poly.poly_derivative(dp)
    pv = poly.poly_eval_scalar(p, z)
    dv = poly.poly_eval_scalar(dp, z)
    ddv = poly.poly_eval_scalar(ddp, z)
    denom = dv * dv - pv * ddv
    if denom == 0:
        return 1
    est = (dv * dv / denom).real
    m = int(round(est))
    return max(1, min(m, len(poly.as_poly(p)) - 1))


def _refine_multiple(p, z):
    """Newton on p^(m-1) recovers an m-fold root to full precision."""
    m = _estimate_multiplicity(p, z)
    if m <= 1:
        return complex(z)
    q = poly.as_poly(p)
    for _ in range(m - 1):
        q = poly.poly_derivative(q)
    dq = poly.poly_derivative(q)
    w = complex(z)
    for _ in range(50):
        dv = poly.poly_eval_scalar(dq, w)
        if dv == 0:
            break
        step = poly.poly_eval_scalar(q, w) / dv
        w -= step
        if abs(step) <= 1e-15 * max(1.0, abs(w)):
            break
    # reject a refinement that wandered off (wrong multiplicity estimate)
    if abs(w - z) > 1e-2 * max(1.0, abs(z)):
        return complex(z)
    return w


def cluster_roots(roots, opts: SpectrumOptions = None) -> Spectrum:
    """Single-linkage clustering of a root list into a spectrum.

    Representative is the cluster mean (keeps conjugate symmetry for real
    inputs); entries are sorted by (real, imag) for determinism.
    """
    opts = opts or SpectrumOptions()
    roots = [complex(r) for r in roots]
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= opts.cluster_tol:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    entries = [(np.mean(g), len(g)) for g in groups.values()]
    entries.sort(key=lambda e: (e[0].real, e[0].imag))
    return Spectrum(entries=tuple(entries))


def validate_spectrum(A: np.ndarray, spec: Spectrum) -> float:
    """Scaled Cayley-Hamilton residual of the annihilating product."""
    A = np.asarray(A, dtype=complex)
    k = A.shape[0]
    prod = np.eye(k, dtype=complex)
    for alpha, m in spec.entries:
        shifted = A - alpha * np.eye(k, dtype=complex)
        for _ in range(m):
            prod = prod @ shifted
    norm_a = np.linalg.norm(A)
    return float(np.linalg.norm(prod) / max(1.0, norm_a**k))


def spectrum_of(A: np.ndarray, opts: SpectrumOptions = None,
                validation_tol: float = 1e-6) -> Spectrum:
    """Resolve the spectrum of a matrix, honoring a user override when given."""
    opts = opts or SpectrumOptions()
    A = np.asarray(A, dtype=complex)
    if opts.user_spectrum is not None:
        spec = opts.user_spectrum
        if spec.total_degree != A.shape[0]:
            raise SpectrumMismatch(
                f"spectrum degree {spec.total_degree} != matrix order {A.shape[0]}"
            )
        residual = validate_spectrum(A, spec)
        if residual > validation_tol:
            raise SpectrumMismatch(
                f"user spectrum residual {residual:.3e} exceeds {validation_tol:.1e}"
            )
        return spec
    chi = characteristic_polynomial(A)
    roots = find_roots(chi, opts)
    return cluster_roots(roots, opts)
