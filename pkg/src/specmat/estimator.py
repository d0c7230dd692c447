"""Estimator-style front door: fit once on a matrix, then evaluate any of
the supported matrix functions off the cached component system."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from . import matfun, spectral
from .hermite import Spectrum
from .matfun import BranchSelection
from .spectrum import SpectrumOptions, spectrum_of


def check_square_matrix(X) -> np.ndarray:
    """Validate and coerce input to a dense complex square matrix."""
    A = np.asarray(X, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A.view(float))):
        raise ValueError("matrix entries must be finite")
    return A


class SpectralMatrixFunctions(BaseEstimator):
    """Matrix functions through the spectral component decomposition.

    Parameters
    ----------
    cluster_tol : float
        Threshold for merging nearby roots into one eigenvalue.
    root_tol : float
        Residual target for the polynomial root finder.
    max_root_iters : int
        Iteration budget for the root finder.
    spectrum : Spectrum or sequence of (alpha, mult), optional
        Exact eigenvalues with multiplicities; skips root finding.
    validation_tol : float
        Acceptance threshold on the Cayley-Hamilton residual.
    """

    def __init__(self, cluster_tol=1e-6, root_tol=1e-12, max_root_iters=200,
                 spectrum=None, validation_tol=1e-6):
        self.cluster_tol = cluster_tol
        self.root_tol = root_tol
        self.max_root_iters = max_root_iters
        self.spectrum = spectrum
        self.validation_tol = validation_tol

    def fit(self, X, y=None):
        A = check_square_matrix(X)
        user = self.spectrum
        if user is not None and not isinstance(user, Spectrum):
            user = Spectrum(entries=tuple(user))
        opts = SpectrumOptions(
            cluster_tol=self.cluster_tol,
            root_tol=self.root_tol,
            max_root_iters=self.max_root_iters,
            user_spectrum=user,
        )
        self.matrix_ = A
        self.spectrum_ = spectrum_of(A, opts, validation_tol=self.validation_tol)
        self.components_ = spectral.component_matrices(A, self.spectrum_)
        return self

    def _fitted(self) -> spectral.ComponentSystem:
        if not hasattr(self, "components_"):
            raise NotFittedError("call fit(A) first")
        return self.components_

    def exponential(self, t=1.0) -> np.ndarray:
        return matfun.matrix_exponential(self._fitted(), t)

    def power(self, n) -> np.ndarray:
        return matfun.matrix_power(self._fitted(), n)

    def drazin(self, n=1) -> np.ndarray:
        return matfun.drazin_power(self._fitted(), n)

    def logarithm(self, offsets=None) -> np.ndarray:
        cs = self._fitted()
        if offsets is None:
            branch = matfun.log_branch_principal(cs.spec)
        else:
            branch = BranchSelection(offsets=tuple(int(b) for b in offsets))
        return matfun.matrix_log(cs, branch)

    def decompose(self) -> dict:
        cs = self._fitted()
        d, n = spectral.jordan_chevalley(cs)
        return {
            "diagonalizable_part": d,
            "nilpotent_part": n,
            "projections": spectral.spectral_projections(cs),
            "indices": list(cs.index),
            "diagonalizable": spectral.is_diagonalizable(cs),
        }
