"""Hermite basis polynomials for a spectrum with multiplicities.

For distinct nodes alpha_j with multiplicities m_j summing to n, the basis
polynomial of slot (j, k) has degree <= n-1 and satisfies the duality
conditions (1/l!) * d^l/dx^l at alpha_i equal to 1 exactly when
(i, l) == (j, k) and l < m_i, else 0.
"""

from dataclasses import dataclass, field

import numpy as np

from . import poly
from .exceptions import DegenerateSpectrum, MissingValue

SEPARATION_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Ordered distinct eigenvalues with algebraic multiplicities."""

    entries: tuple  # of (complex alpha, int mult)

    def __post_init__(self):
        entries = tuple((complex(a), int(m)) for a, m in self.entries)
        if any(m < 1 for _, m in entries):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "entries", entries)

    @property
    def total_degree(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def alphas(self):
        return [a for a, _ in self.entries]

    @property
    def mults(self):
        return [m for _, m in self.entries]

    def min_separation(self) -> float:
        alphas = self.alphas
        if len(alphas) < 2:
            return float("inf")
        return min(
            abs(alphas[i] - alphas[j])
            for i in range(len(alphas))
            for j in range(i + 1, len(alphas))
        )

    def check_separation(self, tol=SEPARATION_TOL):
        if self.min_separation() <= tol:
            raise DegenerateSpectrum(
                f"eigenvalue separation {self.min_separation():.3e} below {tol:.1e}; "
                "merge close eigenvalues upstream"
            )


@dataclass(frozen=True)
class HermiteBasis:
    spectrum: Spectrum
    polys: dict = field(compare=False)  # (j, k) -> coefficient array

    def __getitem__(self, jk):
        return self.polys[jk]


def hermite_basis(spec: Spectrum) -> HermiteBasis:
    """Construct all basis polynomials for the spectrum.

    For each entry j: P_j is the monic product over the other entries,
    G holds the Taylor coefficients of 1/P_j at alpha_j (via the truncated
    series reciprocal of the re-centered P_j), and slot (j, k) is
    P_j * (x - alpha_j)**k * sum_i G[i] (x - alpha_j)**i with the sum cut
    at m_j - 1 - k.
    """
    spec.check_separation()
    polys = {}
    entries = spec.entries
    for j, (alpha, m) in enumerate(entries):
        others = [entries[i] for i in range(len(entries)) if i != j]
        p_j = poly.poly_from_roots(others)
        g = poly.series_reciprocal(poly.poly_shift(p_j, alpha), m)
        linear = np.array([-alpha, 1.0], dtype=complex)
        for k in range(m):
            # tail of the Taylor series of 1/P_j, expressed back in x
            tail_y = g[: m - k]
            tail_x = poly.poly_shift(tail_y, -alpha)
            lk = poly.poly_mul(p_j, tail_x)
            for _ in range(k):
                lk = poly.poly_mul(lk, linear)
            polys[(j, k)] = lk
    return HermiteBasis(spectrum=spec, polys=polys)


def hermite_interpolate(spec: Spectrum, values: dict) -> np.ndarray:
    """Interpolant matching values[(j, k)] as the k-th derivative at alpha_j."""
    basis = hermite_basis(spec)
    out = np.zeros(0, dtype=complex)
    fact = 1.0
    for j, (_, m) in enumerate(spec.entries):
        fact = 1.0
        for k in range(m):
            if k > 0:
                fact *= k
            if (j, k) not in values:
                raise MissingValue(f"no value for eigenvalue {j}, order {k}")
            out = poly.poly_add(out, (values[(j, k)] / fact) * basis[(j, k)])
    return out


def coefficients_as_derivatives_at_zero(lk) -> np.ndarray:
    """Read (1/l!) L^(l)(0) for l = 0..deg, which is exactly the coefficient list."""
    return poly.as_poly(lk)
