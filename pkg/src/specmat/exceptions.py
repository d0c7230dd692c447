"""Exception and warning types shared across the package."""


class SpecmatError(Exception):
    """Base class for all specmat errors."""


class SingularSeries(SpecmatError):
    """Power-series reciprocal requested for a series with (near-)zero constant term."""


class DegenerateSpectrum(SpecmatError):
    """Two eigenvalues are closer than the separation tolerance."""


class MissingValue(SpecmatError):
    """Hermite interpolation data does not cover every (eigenvalue, order) slot."""


class NoConvergence(SpecmatError):
    """Root finder failed to converge within the iteration budget."""


class SpectrumMismatch(SpecmatError):
    """Supplied spectrum fails the Cayley-Hamilton residual check against the matrix."""


class SingularMatrix(SpecmatError):
    """Operation requires a nonsingular matrix but a (near-)zero eigenvalue is present."""


class ConditioningWarning(UserWarning):
    """Problem scale where explicit Vandermonde inversion starts losing digits."""


class NonPrincipalWarning(UserWarning):
    """Principal branch requested but an eigenvalue lies on the closed negative real axis."""
