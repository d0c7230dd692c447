"""Shared fixtures, random generators, and independent oracles."""

import numpy as np
import pytest

from specmat.hermite import Spectrum


def expm_taylor(A, terms=30):
    """Scaling-and-squaring Taylor oracle for the matrix exponential.

    Scales A below norm 0.5, sums the Taylor series, squares back up.
    Independent of the spectral-decomposition path.
    """
    A = np.asarray(A, dtype=complex)
    norm = np.linalg.norm(A)
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
    B = A / (2.0**squarings)
    k = A.shape[0]
    out = np.eye(k, dtype=complex)
    term = np.eye(k, dtype=complex)
    for i in range(1, terms):
        term = term @ B / i
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def power_by_multiplication(A, n):
    A = np.asarray(A, dtype=complex)
    out = np.eye(A.shape[0], dtype=complex)
    for _ in range(n):
        out = out @ A
    return out


def poly_remainder(num, den):
    """Remainder of polynomial division (ascending-coefficient arrays)."""
    num = np.array(num, dtype=complex)
    den = np.array(den, dtype=complex)
    r = num.copy()
    dd = len(den) - 1
    while len(r) - 1 >= dd and len(r) > 0:
        lead = r[-1] / den[-1]
        shift = len(r) - 1 - dd
        sub = np.zeros(len(r), dtype=complex)
        sub[shift:] = lead * den
        r = (r - sub)[:-1]
    return r


def random_spectrum(rng, max_entries=4, max_mult=3, separation=0.5, radius=3.0,
                    include_zero=False, zero_mult=None):
    """Random spectrum with pairwise separation and bounded eigenvalues."""
    while True:
        s = rng.integers(1, max_entries + 1)
        alphas = []
        for _ in range(200):
            if len(alphas) == s:
                break
            cand = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
            if all(abs(cand - a) >= separation for a in alphas):
                alphas.append(cand)
        if len(alphas) < s:
            continue
        mults = [int(rng.integers(1, max_mult + 1)) for _ in range(s)]
        entries = list(zip(alphas, mults))
        if include_zero:
            entries = [(a, m) for a, m in entries if abs(a) >= separation]
            if not entries:
                continue
            entries.append((0.0 + 0.0j, zero_mult or int(rng.integers(1, max_mult + 1))))
        entries.sort(key=lambda e: (e[0].real, e[0].imag))
        return Spectrum(entries=tuple(entries))


def plant_matrix(rng, spec, index=None, max_cond=100.0):
    """Similarity-transform a Jordan-structured triangular seed with the
    given spectrum.  index, when given, maps entry position -> largest
    Jordan block size for that eigenvalue (defaults to the multiplicity)."""
    n = spec.total_degree
    blocks = []
    for j, (alpha, m) in enumerate(spec.entries):
        largest = m if index is None else index[j]
        left = m
        first = True
        while left > 0:
            size = min(largest if first else 1, left)
            first = False
            block = np.eye(size, dtype=complex) * alpha
            for i in range(size - 1):
                block[i, i + 1] = 1.0
            blocks.append(block)
            left -= size
    T = np.zeros((n, n), dtype=complex)
    pos = 0
    for b in blocks:
        k = b.shape[0]
        T[pos:pos + k, pos:pos + k] = b
        pos += k
    while True:
        S = rng.uniform(-1, 1, size=(n, n)) + 1j * rng.uniform(-1, 1, size=(n, n))
        if np.linalg.cond(S) <= max_cond:
            break
    return S @ T @ np.linalg.inv(S)


def rel_err(got, want):
    want = np.asarray(want)
    return np.linalg.norm(np.asarray(got) - want) / max(1e-300, np.linalg.norm(want))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


# one line per acceptance criterion, echoed after the test summary
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
