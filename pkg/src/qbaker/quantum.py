"""The single quantum baker map on the half-integer (antiperiodic) grid.

Position and momentum grids are ``q_n = (n + 1/2)/D`` and ``p_m = (m + 1/2)/D``.
Matrices are in the position representation unless the name says "mixed"
(momentum rows, position columns).
"""

import numpy as np

from .linalg import kron

X2 = np.array([[0, 1], [1, 0]], dtype=complex)
I2 = np.eye(2, dtype=complex)

STACKINGS = ("normal", "primed")


def _check_even(d, what="D"):
    if int(d) != d or d < 2 or d % 2:
        raise ValueError(f"{what} must be an even integer >= 2, got {d}")
    return int(d)


def grid(d):
    """Half-integer grid points (k + 1/2)/d, k = 0..d-1."""
    return (np.arange(d) + 0.5) / d


def fourier_g(d):
    """Antiperiodic Fourier matrix G[m, n] = exp(-2 pi i D p_m q_n) / sqrt(D)."""
    if int(d) != d or d < 1:
        raise ValueError(f"Fourier dimension must be a positive integer, got {d}")
    d = int(d)
    k = 2 * np.arange(d, dtype=np.int64) + 1
    # D p_m q_n = (2m+1)(2n+1) / (4D); reduce the integer numerator mod 4D
    # so the phase stays accurate at large D
    num = np.outer(k, k) % (4 * d)
    return np.exp(-2j * np.pi * num / (4 * d)) / np.sqrt(d)


def principal_gate(stacking):
    """2x2 action on the principal qubit: identity (normal) or X (primed)."""
    if stacking == "normal":
        return I2
    if stacking == "primed":
        return X2
    raise ValueError(f"stacking must be one of {STACKINGS}, got {stacking!r}")


def mixed_propagator(d, stacking="normal"):
    """<p_m| B |q_n>: blockdiag(G, G) for normal stacking, antidiag for primed."""
    d = _check_even(d)
    return kron(principal_gate(stacking), fourier_g(d // 2))


def baker_unitary(d, stacking="normal"):
    """Position-representation baker B = G_D^{-1} . mixed propagator."""
    d = _check_even(d)
    return fourier_g(d).conj().T @ mixed_propagator(d, stacking)


def generating_exponent(p, q, eps):
    """Piecewise bilinear generating function W_eps(p, q) = 2pq - eps p - eps q."""
    return 2 * p * q - eps * p - eps * q


def domain(p, q):
    """Classically allowed domain index: 0 for R_0, 1 for R_1, None outside both."""
    bp, bq = int(2 * p >= 1), int(2 * q >= 1)
    return bp if bp == bq else None


def vanvleck_propagator(d):
    """Mixed propagator assembled entrywise from the generating function.

    Entries are sqrt(2/D) exp(-2 pi i D W_eps(p_m, q_n)) where [2 p_m] = [2 q_n] = eps
    and exactly 0 elsewhere.
    """
    d = _check_even(d)
    p = grid(d)[:, None]
    q = grid(d)[None, :]
    bp = (2 * p >= 1).astype(int)
    bq = (2 * q >= 1).astype(int)
    allowed = bp == bq
    w = generating_exponent(p, q, bq)
    out = np.sqrt(2 / d) * np.exp(-2j * np.pi * d * w)
    return np.where(allowed, out, 0)


def vanvleck_check(d):
    """Max |entry| deviation between the block propagator and its Van Vleck form."""
    return float(np.max(np.abs(mixed_propagator(d) - vanvleck_propagator(d))))


def reflection_r(d):
    """Parity R|q_m> = |1 - q_m> = |q_{D-1-m}>, an index-reversal permutation."""
    if int(d) != d or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d}")
    return np.eye(int(d), dtype=complex)[::-1].copy()
