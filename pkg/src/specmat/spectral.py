"""Component matrices of a square matrix and what follows directly from them:
spectral projections, the Jordan-Chevalley split, eigenvalue indices, and the
diagonalizability test.

The component matrix of slot (j, k) is the Hermite basis polynomial of that
slot evaluated at the matrix.  Slot (j, 0) is the spectral projection onto
the generalized eigenspace of alpha_j; the index r_j of alpha_j is the
greatest r with slot (j, r-1) nonzero.
"""

from dataclasses import dataclass, field

import numpy as np

from . import poly
from .exceptions import SpectrumMismatch
from .hermite import Spectrum, hermite_basis
from .spectrum import validate_spectrum

VALIDATION_TOL = 1e-6
ZERO_TOL = 1e-7


@dataclass(frozen=True)
class ComponentSystem:
    matrix: np.ndarray = field(compare=False)
    spec: Spectrum
    components: dict = field(compare=False)  # (j, k) -> matrix
    index: tuple  # per-eigenvalue index r_j
    validation_residual: float

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    def component(self, j: int, k: int) -> np.ndarray:
        return self.components[(j, k)]


def component_matrices(A: np.ndarray, spec: Spectrum) -> ComponentSystem:
    """Evaluate every basis slot at A and record per-eigenvalue indices."""
    A = np.asarray(A, dtype=complex)
    residual = validate_spectrum(A, spec)
    if residual > VALIDATION_TOL:
        raise SpectrumMismatch(
            f"spectrum residual {residual:.3e} exceeds {VALIDATION_TOL:.1e}"
        )
    basis = hermite_basis(spec)
    norm_a = float(np.linalg.norm(A))
    components = {}
    index = []
    for j, (_, m) in enumerate(spec.entries):
        r = 1
        for k in range(m):
            b = poly.poly_eval_matrix(basis[(j, k)], A)
            components[(j, k)] = b
            # slot k scales like |A|^k, so the zero test is power-relative
            if k >= 1 and np.linalg.norm(b) > ZERO_TOL * max(1.0, norm_a**k):
                r = k + 1
        index.append(r)
    return ComponentSystem(
        matrix=A,
        spec=spec,
        components=components,
        index=tuple(index),
        validation_residual=residual,
    )


def spectral_projections(cs: ComponentSystem):
    """The idempotents onto each generalized eigenspace, in spectrum order."""
    return [cs.component(j, 0) for j in range(len(cs.spec.entries))]


def jordan_chevalley(cs: ComponentSystem):
    """A = D + N with D diagonalizable, N nilpotent, DN = ND."""
    k = cs.order
    d = np.zeros((k, k), dtype=complex)
    n = np.zeros((k, k), dtype=complex)
    for j, (alpha, m) in enumerate(cs.spec.entries):
        d += alpha * cs.component(j, 0)
        if m >= 2 and cs.index[j] >= 2:
            n += cs.component(j, 1)
    return d, n


def eigenvalue_index(cs: ComponentSystem, j: int) -> int:
    return cs.index[j]


def is_diagonalizable(cs: ComponentSystem) -> bool:
    return all(r == 1 for r in cs.index)


def projector_sum_residual(cs: ComponentSystem) -> float:
    """Frobenius distance of the projection sum from the identity."""
    total = sum(spectral_projections(cs))
    return float(np.linalg.norm(total - np.eye(cs.order)))
