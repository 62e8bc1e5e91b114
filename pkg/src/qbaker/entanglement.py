"""Entanglement growth under coupled-baker evolution.

Initial states are Haar-random product states; the observable is the linear
entropy of the reduced target (equivalently control) state.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import kron, linear_entropy, purity, reduced_from_pure


@dataclass(frozen=True)
class HaarSampler:
    """Deterministic source of Haar-random pure states.

    Each (seed, stream_id) pair owns an independent PCG64 stream, so samples in
    an ensemble can be drawn in any order or in parallel with identical results.
    """

    seed: int = 0
    stream_id: int = 0

    def rng(self):
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.PCG64(ss))

    def stream(self, stream_id):
        return HaarSampler(self.seed, stream_id)


def haar_state(dim, sampler=None, rng=None):
    """Normalized complex Gaussian vector, i.e. a Haar-random pure state."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if rng is None:
        rng = (sampler or HaarSampler()).rng()
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def haar_product_state(d_c, d_t, sampler):
    """|psi_c> x |psi_t> with both factors drawn from one sampler stream."""
    rng = sampler.rng()
    psi_c = haar_state(d_c, rng=rng)
    psi_t = haar_state(d_t, rng=rng)
    return kron(psi_c[:, None], psi_t[:, None]).ravel()


@dataclass
class EntropyTrace:
    values: np.ndarray

    @property
    def steps(self):
        return len(self.values) - 1


@dataclass
class EnsembleResult:
    traces: np.ndarray  # (n_samples, steps + 1)
    haar_reference: float

    @property
    def n_samples(self):
        return self.traces.shape[0]

    @property
    def mean(self):
        return self.traces.mean(axis=0)

    @property
    def std(self):
        return self.traces.std(axis=0)

    def window(self, start=10, stop=30):
        """Traces restricted to steps start..stop inclusive."""
        return self.traces[:, start : stop + 1]

    def window_mean(self, start=10, stop=30):
        return float(self.window(start, stop).mean())

    def window_std(self, start=10, stop=30):
        """Per-step ensemble std, averaged over the window."""
        return float(self.window(start, stop).std(axis=0).mean())

    def window_temporal_std(self, start=10, stop=30):
        """Std of each trace about its own window mean, averaged over samples."""
        return float(self.window(start, stop).std(axis=1).mean())


def lubkin_mean(d_c, d_t):
    """Haar average of the linear entropy of a D_c x D_t pure state."""
    if d_c < 1 or d_t < 1:
        raise ValueError("dimensions must be >= 1")
    return 1.0 - (d_c + d_t) / (d_c * d_t + 1)


def _check_dims(u, d_c, d_t):
    n = d_c * d_t
    if u.shape != (n, n):
        raise ValueError(f"operator of shape {u.shape} does not match {d_c}x{d_t}")


def _batch_purities(psi, d_c, d_t):
    """Purity of the reduced target for each column of psi (shape (N, k))."""
    k = psi.shape[1]
    m = psi.T.reshape(k, d_c, d_t)
    # work with the smaller Gram matrix; both reductions share their spectrum
    if d_t <= d_c:
        rho = np.einsum("sij,sik->sjk", m, m.conj())
    else:
        rho = np.einsum("sij,skj->sik", m, m.conj())
    return np.einsum("sij,sji->s", rho, rho).real


def evolve_entropy_traces(u, psi0, d_c, d_t, steps):
    """Linear entropy of the reduced target for a batch of pure states.

    ``psi0`` has shape (N,) or (N, k); returns an array of shape (k, steps + 1).
    """
    u = np.asarray(u)
    _check_dims(u, d_c, d_t)
    psi = np.asarray(psi0, dtype=complex)
    if psi.ndim == 1:
        psi = psi[:, None]
    if psi.shape[0] != d_c * d_t:
        raise ValueError(f"state of length {psi.shape[0]} does not match {d_c}x{d_t}")
    out = np.empty((psi.shape[1], steps + 1))
    out[:, 0] = 1 - _batch_purities(psi, d_c, d_t)
    for k in range(1, steps + 1):
        psi = u @ psi
        out[:, k] = 1 - _batch_purities(psi, d_c, d_t)
    return out


def evolve_entropy_trace(u, psi0, d_c, d_t, steps, check_symmetry=False):
    """Iterate psi <- U psi and record S_L of the reduced target at every step.

    With ``check_symmetry`` the control entropy is computed too and must agree
    within 1e-10.
    """
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.ndim != 1:
        raise ValueError("evolve_entropy_trace takes a single state vector")
    if not check_symmetry:
        return EntropyTrace(evolve_entropy_traces(u, psi0, d_c, d_t, steps)[0])
    u = np.asarray(u)
    _check_dims(u, d_c, d_t)
    psi = psi0
    vals = []
    for k in range(steps + 1):
        if k:
            psi = u @ psi
        s_t = linear_entropy(reduced_from_pure(psi, d_c, d_t, keep="right"))
        s_c = linear_entropy(reduced_from_pure(psi, d_c, d_t, keep="left"))
        if abs(s_t - s_c) > 1e-10:
            raise AssertionError(f"subsystem entropies differ at step {k}: {s_t} vs {s_c}")
        vals.append(s_t)
    return EntropyTrace(np.array(vals))


def entropy_ensemble(u, d_c, d_t, steps, n_samples=50, seed=0):
    """Entropy traces for n_samples Haar product states; sample i uses stream i."""
    base = HaarSampler(seed)
    psi = np.stack(
        [haar_product_state(d_c, d_t, base.stream(i)) for i in range(n_samples)], axis=1
    )
    traces = evolve_entropy_traces(u, psi, d_c, d_t, steps)
    return EnsembleResult(traces, lubkin_mean(d_c, d_t))


def evolve_mixed_control(u, psi_t, d_c, d_t, steps):
    """Target entropy for rho = (I/D_c) x |psi_t><psi_t| under rho <- U rho U^dagger.

    The maximally mixed control is the uniform mixture of its basis states, so
    the D_c pure branches |j>|psi_t> are evolved and their reduced targets averaged.
    This is exact, not a sampling approximation.
    """
    u = np.asarray(u)
    _check_dims(u, d_c, d_t)
    psi_t = np.asarray(psi_t, dtype=complex)
    if psi_t.shape != (d_t,):
        raise ValueError(f"target state must have length {d_t}")
    psi = kron(np.eye(d_c), psi_t[:, None])  # column j is |j>|psi_t>
    vals = [linear_entropy(reduced_from_pure(psi, d_c, d_t))]
    for _ in range(steps):
        psi = u @ psi
        vals.append(linear_entropy(reduced_from_pure(psi, d_c, d_t)))
    return EntropyTrace(np.array(vals))


def evolve_mixed_control_dense(u, psi_t, d_c, d_t, steps):
    """Same as evolve_mixed_control, propagating the full density matrix."""
    from .linalg import partial_trace, projector

    u = np.asarray(u)
    _check_dims(u, d_c, d_t)
    rho = kron(np.eye(d_c) / d_c, projector(psi_t))
    vals = [linear_entropy(partial_trace(rho, d_c, d_t, keep="right"))]
    for _ in range(steps):
        rho = u @ rho @ u.conj().T
        vals.append(linear_entropy(partial_trace(rho, d_c, d_t, keep="right")))
    return EntropyTrace(np.array(vals))


__all__ = [
    "EnsembleResult",
    "EntropyTrace",
    "HaarSampler",
    "entropy_ensemble",
    "evolve_entropy_trace",
    "evolve_entropy_traces",
    "evolve_mixed_control",
    "evolve_mixed_control_dense",
    "haar_product_state",
    "haar_state",
    "lubkin_mean",
    "purity",
]
