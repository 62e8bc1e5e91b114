import numpy as np
import pytest
from scipy.integrate import quad

from qbaker.coupled import coupled_baker
from qbaker.spectral import (
    KINDS,
    NotUnitaryError,
    eigenphases,
    ks_distance,
    parity_symmetries,
    reference_cdf,
    reference_pdf,
    sample_reference,
    sector_spacings,
    spacing_histogram,
    spacing_report,
    unit_mean_spacings,
)


def test_identity_phases():
    np.testing.assert_allclose(eigenphases(np.eye(5)), np.zeros(5), atol=1e-15)


def test_diagonal_phases():
    np.testing.assert_allclose(
        eigenphases(np.diag([1, 1j, -1, -1j])), [0, np.pi / 2, np.pi, 3 * np.pi / 2], atol=1e-15
    )


def test_phases_in_range_and_sorted():
    ph = eigenphases(coupled_baker(8, 8))
    assert np.all((ph >= 0) & (ph < 2 * np.pi))
    assert np.all(np.diff(ph) >= 0)


def test_cnot_baker_has_512_phases():
    assert len(eigenphases(coupled_baker(32, 16))) == 512


def test_non_unitary_rejected():
    with pytest.raises(NotUnitaryError):
        eigenphases(np.diag([1, 2]))


def test_picket_fence():
    n = 12
    s = unit_mean_spacings(2 * np.pi * np.arange(n) / n)
    np.testing.assert_allclose(s, np.ones(n), atol=1e-12)


def test_two_phases_wrap():
    np.testing.assert_allclose(unit_mean_spacings([0, np.pi]), [1, 1], atol=1e-15)


def test_spacings_mean_exactly_one(rng):
    s = unit_mean_spacings(np.sort(rng.random(101) * 2 * np.pi))
    assert len(s) == 101
    assert abs(s.mean() - 1) < 1e-12
    assert np.all(s >= 0)


def test_too_few_phases():
    with pytest.raises(ValueError):
        unit_mean_spacings([1.0])


def test_reference_pdf_at_zero():
    assert reference_pdf("poisson", 0) == 1
    assert reference_pdf("goe", 0) == 0
    assert reference_pdf("gue", 0) == 0


def test_reference_pdf_rejects_negative_and_unknown():
    with pytest.raises(ValueError):
        reference_pdf("goe", -0.1)
    with pytest.raises(ValueError):
        reference_pdf("gse", 1.0)


@pytest.mark.parametrize("kind", ["goe", "gue"])
def test_wigner_surmises_normalized_on_0_12(kind):
    norm, _ = quad(lambda s: reference_pdf(kind, s), 0, 12, epsabs=1e-13)
    mean, _ = quad(lambda s: s * reference_pdf(kind, s), 0, 12, epsabs=1e-13)
    assert abs(norm - 1) < 1e-6
    assert abs(mean - 1) < 1e-6


def test_poisson_normalized():
    # the exponential tail beyond 12 is e^-12 ~ 6e-6, so integrate to infinity
    norm, _ = quad(lambda s: reference_pdf("poisson", s), 0, np.inf)
    mean, _ = quad(lambda s: s * reference_pdf("poisson", s), 0, np.inf)
    assert abs(norm - 1) < 1e-6 and abs(mean - 1) < 1e-6
    part, _ = quad(lambda s: reference_pdf("poisson", s), 0, 12, epsabs=1e-13)
    assert part == pytest.approx(1 - np.exp(-12), abs=1e-10)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("s", [0.3, 1.0, 2.2])
def test_cdf_is_integral_of_pdf(kind, s):
    val, _ = quad(lambda x: reference_pdf(kind, x), 0, s, epsabs=1e-13)
    assert reference_cdf(kind, s) == pytest.approx(val, abs=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_ks_of_own_samples_is_small(kind):
    rng = np.random.default_rng(31)
    assert ks_distance(sample_reference(kind, 10_000, rng), kind) < 0.02


def test_ks_degenerate_sample():
    assert ks_distance(np.ones(50), "poisson") == pytest.approx(max(1 - np.exp(-1), np.exp(-1)))


def test_ks_empty():
    with pytest.raises(ValueError):
        ks_distance([], "goe")


def test_uniform_phases_recover_poisson():
    rng = np.random.default_rng(12)
    s = unit_mean_spacings(rng.random(10_000) * 2 * np.pi)
    assert ks_distance(s, "poisson") < 0.02
    assert ks_distance(s, "goe") > 0.1


def test_histogram_normalization(rng):
    s = unit_mean_spacings(rng.random(500) * 2 * np.pi)
    h = spacing_histogram(s)
    assert len(h.counts) == 30 and h.bin_edges[0] == 0 and h.bin_edges[-1] == 4
    assert abs(np.sum(h.density * np.diff(h.bin_edges)) - 1) < 1e-9
    assert h.n_levels == 500


def test_cnot_parity_symmetry_is_target_reflection():
    u = coupled_baker(8, 4, "cnot")
    assert sorted(parity_symmetries(u, 8, 4)) == ["target"]
    assert sorted(parity_symmetries(coupled_baker(8, 4, "identity"), 8, 4)) == ["control", "target"]


def test_sector_spacings_cover_all_levels():
    u = coupled_baker(8, 8, "cnot")
    s, syms = sector_spacings(u, 8, 8)
    assert syms == ["target"]
    assert len(s) == 64


def test_desymmetrize_without_symmetry_raises(rng):
    z = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
    q, _ = np.linalg.qr(z)
    with pytest.raises(ValueError):
        sector_spacings(q, 4, 4)


def test_cnot_report_returns_three_distances():
    _, hist, ks = spacing_report(coupled_baker(32, 16), 32, 16)
    assert set(ks) == set(KINDS)
    assert all(0 < v < 1 for v in ks.values())
    assert hist.n_levels == 512
