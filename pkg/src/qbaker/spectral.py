"""Eigenphase spacing statistics for unitary maps.

Eigenphases of a unitary have uniform mean density on the circle, so the only
unfolding needed is rescaling to unit mean spacing.
"""

from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from .linalg import eig_general, kron
from .quantum import reflection_r

KINDS = ("poisson", "goe", "gue")


class NotUnitaryError(ValueError):
    pass


def eigenphases(u, tol=1e-6):
    """Sorted eigenphases in [0, 2 pi)."""
    vals = eig_general(u)
    dev = np.max(np.abs(np.abs(vals) - 1))
    if dev > tol:
        raise NotUnitaryError(f"eigenvalue moduli deviate from 1 by {dev:.3e}")
    phases = np.mod(np.angle(vals), 2 * np.pi)
    # angle() of values just below the positive real axis maps to ~2 pi
    phases[phases >= 2 * np.pi] = 0.0
    return np.sort(phases)


def unit_mean_spacings(phases):
    """N circular spacings (wraparound gap included) scaled by N / 2 pi."""
    phases = np.sort(np.asarray(phases, dtype=float))
    n = len(phases)
    if n < 2:
        raise ValueError("need at least two phases")
    gaps = np.diff(np.append(phases, phases[0] + 2 * np.pi))
    return gaps * n / (2 * np.pi)


def reference_pdf(kind, s):
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise ValueError("spacings must be nonnegative")
    if kind == "poisson":
        out = np.exp(-s)
    elif kind == "goe":
        out = np.pi / 2 * s * np.exp(-np.pi * s**2 / 4)
    elif kind == "gue":
        out = 32 / np.pi**2 * s**2 * np.exp(-4 * s**2 / np.pi)
    else:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return out if out.ndim else float(out)


def reference_cdf(kind, s):
    s = np.asarray(s, dtype=float)
    if kind == "poisson":
        out = -np.expm1(-s)
    elif kind == "goe":
        out = -np.expm1(-np.pi * s**2 / 4)
    elif kind == "gue":
        out = special.erf(2 * s / np.sqrt(np.pi)) - 4 * s / np.pi * np.exp(-4 * s**2 / np.pi)
    else:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return np.where(s < 0, 0.0, out)


def ks_distance(spacings, kind):
    """Kolmogorov-Smirnov sup distance between the empirical and reference CDFs."""
    spacings = np.asarray(spacings, dtype=float)
    if spacings.size == 0:
        raise ValueError("no spacings")
    return float(stats.kstest(spacings, lambda s: reference_cdf(kind, s)).statistic)


def sample_reference(kind, n, rng):
    """Draw spacings from a reference law by inverting its CDF."""
    u = rng.random(n)
    if kind == "poisson":
        return -np.log1p(-u)
    if kind == "goe":
        return np.sqrt(-4 * np.log1p(-u) / np.pi)
    if kind == "gue":
        # no closed-form inverse; the GUE surmise is a scaled chi distribution with 3 dof
        return np.sqrt(np.pi / 8) * stats.chi.ppf(u, 3)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@dataclass
class SpacingHistogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray
    n_levels: int

    @property
    def bin_centers(self):
        return 0.5 * (self.bin_edges[1:] + self.bin_edges[:-1])

    def reference(self, kind):
        return reference_pdf(kind, self.bin_centers)


def spacing_histogram(spacings, bins=30, s_max=4.0):
    """Histogram over [0, s_max]; density is normalized over the spacings in range."""
    spacings = np.asarray(spacings, dtype=float)
    counts, edges = np.histogram(spacings, bins=bins, range=(0.0, s_max))
    width = np.diff(edges)
    total = counts.sum()
    density = counts / (total * width) if total else np.zeros_like(width)
    return SpacingHistogram(edges, counts, density, len(spacings))


def parity_symmetries(u, d_c, d_t, tol=1e-10):
    """Which of R x 1, 1 x R commute with u (names 'control', 'target')."""
    found = {}
    rc, rt = reflection_r(d_c), reflection_r(d_t)
    for name, p in (("control", kron(rc, np.eye(d_t))), ("target", kron(np.eye(d_c), rt))):
        if np.max(np.abs(p @ u - u @ p)) <= tol:
            found[name] = p
    return found


def _sector_bases(ops, dim):
    """Orthonormal bases of the joint +-1 eigenspaces of commuting real involutions."""
    bases = [np.eye(dim)]
    for p in ops:
        new = []
        for q in bases:
            block = q.T @ p @ q
            w, v = np.linalg.eigh((block + block.T) / 2)
            for sign in (1, -1):
                sel = np.abs(w - sign) < 1e-8
                if sel.any():
                    new.append(q @ v[:, sel])
        bases = new
    return bases


def sector_spacings(u, d_c, d_t):
    """Unit-mean spacings pooled over the reflection-parity sectors of u.

    Each sector is normalized separately. Raises if u has no parity symmetry.
    """
    syms = parity_symmetries(u, d_c, d_t)
    if not syms:
        raise ValueError("operator commutes with neither reflection; nothing to desymmetrize")
    pooled = []
    for q in _sector_bases([s.real for s in syms.values()], u.shape[0]):
        block = q.conj().T @ u @ q
        if block.shape[0] >= 2:
            pooled.append(unit_mean_spacings(eigenphases(block)))
    return np.concatenate(pooled), sorted(syms)


def spacing_report(u, d_c=None, d_t=None, desymmetrize=False, bins=30, s_max=4.0):
    """Spacings, histogram, and KS distances to the three reference laws."""
    if desymmetrize:
        spacings, _ = sector_spacings(u, d_c, d_t)
    else:
        spacings = unit_mean_spacings(eigenphases(u))
    hist = spacing_histogram(spacings, bins, s_max)
    ks = {kind: ks_distance(spacings, kind) for kind in KINDS}
    return spacings, hist, ks
