"""Dense complex linear algebra shared by every other module.

Composite indices always put the left tensor factor slow:
``n = n_left * d_right + n_right``, which is what ``np.kron`` does.
"""

import numpy as np

UNITARY_TOL = 1e-12
DENSITY_TOL = 1e-12


class EigensolverError(RuntimeError):
    """Raised when a dense eigensolve does not converge."""


def kron(a, b):
    """Kronecker product with the left factor as the slow index."""
    return np.kron(np.atleast_2d(a), np.atleast_2d(b))


def unitarity_error(u):
    """Return max |(U^dagger U - I)_ij|."""
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def is_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return unitarity_error(u) <= tol


def normalize(psi):
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / norm


def projector(psi):
    """Density matrix |psi><psi| of a state vector."""
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def check_density(rho, tol=DENSITY_TOL, eig_tol=1e-10):
    """Validate a density matrix, raising ValueError on the first violated property."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > tol:
        raise ValueError(f"density matrix not Hermitian (deviation {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    lam_min = np.linalg.eigvalsh(rho).min()
    if lam_min < -eig_tol:
        raise ValueError(f"density matrix has negative eigenvalue {lam_min:.3e}")
    return rho


def partial_trace(rho, d_left, d_right, keep="left"):
    """Reduced density matrix of a bipartite operator.

    ``keep`` selects the factor that survives ("left" or "right").
    """
    rho = np.asarray(rho)
    if rho.shape != (d_left * d_right, d_left * d_right):
        raise ValueError(
            f"operator of shape {rho.shape} does not match dimensions {d_left}x{d_right}"
        )
    t = rho.reshape(d_left, d_right, d_left, d_right)
    if keep == "left":
        return np.einsum("ikjk->ij", t)
    if keep == "right":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must be 'left' or 'right', not {keep!r}")


def reduced_from_pure(psi, d_left, d_right, keep="right"):
    """Reduced density matrix of a pure bipartite state without forming |psi><psi|.

    ``psi`` may also be a (d_left*d_right, k) array of k states; the result is
    then the equal-weight mixture of their reductions.
    """
    psi = np.asarray(psi)
    if psi.shape[0] != d_left * d_right:
        raise ValueError(
            f"state of length {psi.shape[0]} does not match dimensions {d_left}x{d_right}"
        )
    if psi.ndim == 1:
        m = psi.reshape(d_left, d_right)
        if keep == "right":
            return m.T @ m.conj()
        return m @ m.conj().T
    k = psi.shape[1]
    m = psi.T.reshape(k, d_left, d_right)
    if keep == "right":
        return np.einsum("sij,sik->jk", m, m.conj()) / k
    return np.einsum("sij,skj->ik", m, m.conj()) / k


def purity(rho):
    """tr(rho^2) for a Hermitian rho; the imaginary residue is dropped after a check."""
    rho = np.asarray(rho)
    # tr(rho rho) = sum_ij rho_ij rho_ji = sum |rho_ij|^2 for Hermitian rho
    val = np.einsum("ij,ji->", rho, rho)
    if abs(val.imag) > 1e-12 * max(1.0, abs(val.real)):
        raise ValueError(f"purity has imaginary part {val.imag:.3e}; is rho Hermitian?")
    return float(val.real)


def linear_entropy(rho):
    return 1.0 - purity(rho)


def purity_and_linear_entropy(rho):
    p = purity(rho)
    return p, 1.0 - p


def eig_general(a):
    """All eigenvalues of a square complex matrix, in backend order."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"eigenvalues need a square matrix, got shape {a.shape}")
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(str(exc)) from exc
    if vals.shape[0] != a.shape[0] or not np.all(np.isfinite(vals)):
        raise EigensolverError("eigensolver returned an incomplete or non-finite spectrum")
    return vals
