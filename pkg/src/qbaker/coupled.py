"""Pairs of quantum bakers coupled through their principal qubits.

The composite basis has the control (left) factor slow. A 4x4 coupling gate acts
on the pair (control principal bit, target principal bit) in the basis order
00, 01, 10, 11.
"""

from dataclasses import dataclass, field

import numpy as np

from .linalg import is_unitary, kron
from .quantum import _check_even, baker_unitary, fourier_g

GATES = {
    "identity": np.eye(4, dtype=complex),
    "xx": np.array(
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=complex
    ),
    "swap": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
    "cnot": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
}


@dataclass(frozen=True)
class CouplingGate:
    kind: str
    matrix: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"coupling gate must be 4x4, got {m.shape}")
        if not is_unitary(m):
            raise ValueError("coupling gate is not unitary")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def named(cls, kind):
        if kind not in GATES:
            raise ValueError(f"unknown gate {kind!r}; choose from {sorted(GATES)}")
        return cls(kind, GATES[kind].copy())

    @classmethod
    def custom(cls, matrix):
        return cls("custom", matrix)


def as_gate(gate):
    if isinstance(gate, CouplingGate):
        return gate
    if isinstance(gate, str):
        return CouplingGate.named(gate)
    return CouplingGate.custom(gate)


@dataclass(frozen=True)
class CoupledSpec:
    d_c: int
    d_t: int
    gate: CouplingGate = field(default_factory=lambda: CouplingGate.named("cnot"))

    def __post_init__(self):
        _check_even(self.d_c, "d_c")
        _check_even(self.d_t, "d_t")
        object.__setattr__(self, "gate", as_gate(self.gate))

    @property
    def dim(self):
        return self.d_c * self.d_t


def _spec(spec_or_dc, d_t=None, gate="cnot"):
    if isinstance(spec_or_dc, CoupledSpec):
        return spec_or_dc
    return CoupledSpec(int(spec_or_dc), int(d_t), gate)


def coupled_mixed_rep(spec, d_t=None, gate="cnot"):
    """Mixed (momentum rows, position columns) matrix of the coupled baker.

    <p^c_m' p^t_m | B | q^c_n' q^t_n> =
        gate[(e(p^c), e(p^t)), (e(q^c), e(q^t))] * G_{Dc/2}[m', n'] * G_{Dt/2}[m, n]
    with e(x) = [2x] and the primed indices taken modulo the half dimension.
    """
    spec = _spec(spec, d_t, gate)
    hc, ht = spec.d_c // 2, spec.d_t // 2
    g = spec.gate.matrix.reshape(2, 2, 2, 2)
    t = np.einsum("abcd,ik,jl->aibjckdl", g, fourier_g(hc), fourier_g(ht))
    return t.reshape(spec.dim, spec.dim)


def coupled_baker_dense(spec, d_t=None, gate="cnot"):
    """Position-representation unitary as the literal product (G_Dc x G_Dt)^{-1} . mixed.

    O(N^3); kept as an independent construction for cross-checks at small size.
    """
    spec = _spec(spec, d_t, gate)
    f = kron(fourier_g(spec.d_c), fourier_g(spec.d_t))
    return f.conj().T @ coupled_mixed_rep(spec)


def _column_halves(d):
    b = baker_unitary(d, "normal")
    h = d // 2
    return np.stack([b[:, :h], b[:, h:]])


def coupled_baker(spec, d_t=None, gate="cnot"):
    """Position-representation unitary of the coupled baker.

    Uses that G_D^{-1} applied to the upper/lower momentum block of
    blockdiag(G, G) gives the two column halves of the single baker, so
    the full matrix is a gate-weighted sum of tensor products of those
    halves. Costs O(N^2) instead of a dense N^3 product.
    """
    spec = _spec(spec, d_t, gate)
    g = spec.gate.matrix.reshape(2, 2, 2, 2)
    ac = _column_halves(spec.d_c)  # (2, d_c, d_c/2): [a, x, k]
    at = _column_halves(spec.d_t)
    t = np.einsum("abcd,axk,byl->xyckdl", g, ac, at, optimize=True)
    return t.reshape(spec.dim, spec.dim)


def single_control_baker(d_t, gate="cnot"):
    """Coupled baker whose control is a bare qubit (D_c = 2).

    Built as (G_2 x G_Dt)^{-1} . (gate x G_{Dt/2}); the trivial control factor
    G_1 = [-i] is dropped, so this differs from coupled_baker(2, d_t, gate) by
    exactly that global phase.
    """
    d_t = _check_even(d_t, "d_t")
    g = as_gate(gate).matrix
    f = kron(fourier_g(2), fourier_g(d_t))
    return f.conj().T @ kron(g, fourier_g(d_t // 2))


def exchange_operator(d):
    """Permutation E|a>|b> = |b>|a> on C^d x C^d."""
    e = np.zeros((d * d, d * d), dtype=complex)
    a, b = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    e[(b * d + a).ravel(), (a * d + b).ravel()] = 1
    return e


def swap_principal_qubits(n_qubits):
    """Permutation S exchanging qubits 1 and 2 (qubit 1 = most significant bit)."""
    if n_qubits < 2:
        raise ValueError("need at least two qubits")
    dim = 2**n_qubits
    idx = np.arange(dim)
    b1 = (idx >> (n_qubits - 1)) & 1
    b2 = (idx >> (n_qubits - 2)) & 1
    swapped = idx ^ ((b1 ^ b2) * ((1 << (n_qubits - 1)) | (1 << (n_qubits - 2))))
    s = np.zeros((dim, dim), dtype=complex)
    s[swapped, idx] = 1
    return s


def schack_caves_b_n2(d_t):
    """Schack-Caves two-qubit baker B_{N,2} = [1_2 x G_{2Dt}^{-1}(1_2 x G_Dt)] S, D_t = 2^(N-2)."""
    d_t = int(d_t)
    if d_t < 2 or d_t & (d_t - 1):
        raise ValueError(f"d_t must be a power of two >= 2, got {d_t}")
    n_qubits = d_t.bit_length() - 1 + 2
    inner = fourier_g(2 * d_t).conj().T @ kron(np.eye(2), fourier_g(d_t))
    return kron(np.eye(2), inner) @ swap_principal_qubits(n_qubits)


def local_bracket(spec, d_t=None, gate="cnot"):
    """The operator before the final Fourier factor, gate x (G_{Dc/2} x G_{Dt/2}),
    in the qubit ordering (control principal, target principal, control rest, target rest)."""
    spec = _spec(spec, d_t, gate)
    return kron(spec.gate.matrix, kron(fourier_g(spec.d_c // 2), fourier_g(spec.d_t // 2)))
