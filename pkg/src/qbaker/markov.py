"""Markovian stacking-average channel on the target baker.

rho -> (B rho B^dagger + B' rho B'^dagger) / 2, with B, B' the two stackings.
Superoperators use column-stacking vectorization, vec(A rho C) = (C^T x A) vec(rho).
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .linalg import EigensolverError, check_density, is_unitary, linear_entropy, projector
from .quantum import baker_unitary, reflection_r


@dataclass(frozen=True)
class KrausPair:
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        if self.b.shape != self.b_prime.shape:
            raise ValueError("Kraus operators must have equal shape")
        if not (is_unitary(self.b) and is_unitary(self.b_prime)):
            raise ValueError("both stackings must be unitary")

    @classmethod
    def baker(cls, d_t):
        return cls(baker_unitary(d_t, "normal"), baker_unitary(d_t, "primed"))

    @property
    def dim(self):
        return self.b.shape[0]


def vec(rho):
    return np.asarray(rho).reshape(-1, order="F")


def unvec(v, d):
    return np.asarray(v).reshape(d, d, order="F")


def apply_channel(kraus, rho):
    rho = np.asarray(rho)
    if rho.shape != (kraus.dim, kraus.dim):
        raise ValueError(f"density of shape {rho.shape} does not match channel dim {kraus.dim}")
    b, bp = kraus.b, kraus.b_prime
    return 0.5 * (b @ rho @ b.conj().T + bp @ rho @ bp.conj().T)


def superop_matrix(kraus):
    """S = (conj(B) x B + conj(B') x B') / 2 acting on column-stacked densities."""
    b, bp = kraus.b, kraus.b_prime
    return 0.5 * (np.kron(b.conj(), b) + np.kron(bp.conj(), bp))


@dataclass
class SpectrumReport:
    eigenvalues: np.ndarray
    unit_count: int
    unit_basis: np.ndarray  # orthonormal columns spanning the lambda=1 eigenspace
    second_modulus: float  # largest |lambda| away from 1

    def span_residual(self, operators):
        """Largest distance of the normalized vec(op) from the lambda=1 eigenspace."""
        q = self.unit_basis
        worst = 0.0
        for op in operators:
            v = vec(op)
            v = v / np.linalg.norm(v)
            worst = max(worst, float(np.linalg.norm(v - q @ (q.conj().T @ v))))
        return worst


def superop_spectrum(s, cluster_tol=1e-8):
    """Eigenvalues of a superoperator plus the structure of its lambda=1 eigenspace."""
    s = np.asarray(s)
    try:
        vals, vecs = scipy.linalg.eig(s)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigensolverError(str(exc)) from exc
    if not np.all(np.isfinite(vals)):
        raise EigensolverError("superoperator spectrum contains non-finite values")
    unit = np.abs(vals - 1) < cluster_tol
    basis = scipy.linalg.orth(vecs[:, unit]) if unit.any() else np.zeros((s.shape[0], 0))
    rest = np.abs(vals[~unit])
    return SpectrumReport(vals, int(unit.sum()), basis, float(rest.max()) if rest.size else 0.0)


def fixed_projection(s, rho0, cluster_tol=1e-8):
    """Spectral projection of rho0 onto the lambda=1 eigenspace of s.

    Uses left and right eigenvectors, so it does not rely on the eigenspace being
    orthogonal to the rest of the spectrum.
    """
    vals, left, right = scipy.linalg.eig(s, left=True, right=True)
    unit = np.abs(vals - 1) < cluster_tol
    v = right[:, unit]
    w = left[:, unit]
    coeffs = np.linalg.solve(w.conj().T @ v, w.conj().T @ vec(rho0))
    return unvec(v @ coeffs, int(round(np.sqrt(s.shape[0]))))


def reflection_fixed_point(rho0):
    """Closed form of the asymptotic state: I/D + tr(R rho0) R / D."""
    d = rho0.shape[0]
    r = reflection_r(d)
    return (np.eye(d) + np.trace(r @ rho0) * r) / d


@dataclass
class MarkovTrace:
    values: np.ndarray
    final: np.ndarray

    @property
    def steps(self):
        return len(self.values) - 1


def markov_entropy_trace(kraus, psi0, steps):
    """Iterate the channel from |psi0><psi0|, recording S_L at every step."""
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (kraus.dim,):
        raise ValueError(f"state must have length {kraus.dim}")
    rho = projector(psi0)
    vals = [linear_entropy(rho)]
    for _ in range(steps):
        rho = apply_channel(kraus, rho)
        vals.append(linear_entropy(rho))
    return MarkovTrace(np.array(vals), rho)


def validate_output(kraus, rho):
    """apply_channel followed by a full density-matrix check."""
    return check_density(apply_channel(kraus, rho))
