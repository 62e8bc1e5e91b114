"""Exit criteria for the toolkit, one test per criterion, tolerances fixed here."""

import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import record
from qbaker.classical import (
    CoupledPhasePoint,
    DyadicPoint,
    PhasePoint,
    baker_step,
    coupled_cnot_step,
    decode_symbols,
)
from qbaker.cli import DEFAULT_SEED, ExperimentConfig, run
from qbaker.cli import compare_traces
from qbaker.coupled import GATES, coupled_baker, single_control_baker
from qbaker.entanglement import entropy_ensemble
from qbaker.linalg import kron, unitarity_error
from qbaker.markov import KrausPair, superop_matrix, superop_spectrum
from qbaker.quantum import baker_unitary, fourier_g, reflection_r, vanvleck_check
from qbaker.spectral import KINDS, ks_distance, spacing_report, unit_mean_spacings

D_T = 16
ENTROPY_DCS = (4, 16, 64, 256)
COMPARE_DCS = (8, 16, 32, 64)
HAAR_256_16 = 1 - 272 / 4097


def test_c1_unitarity():
    worst = 0.0
    for d in range(2, 513, 2):
        for stacking in ("normal", "primed"):
            worst = max(worst, unitarity_error(baker_unitary(d, stacking)))
    dims = (2, 4, 8, 16, 32)
    for gate in GATES:
        for d_c in dims:
            for d_t in dims:
                worst = max(worst, unitarity_error(coupled_baker(d_c, d_t, gate)))
    assert record("C1 unitarity", worst <= 1e-12, f"max|U^+U - I| = {worst:.2e} (tol 1e-12)")


def test_c2_vanvleck():
    devs = {d: vanvleck_check(d) for d in (2, 8, 16, 64)}
    worst = max(devs.values())
    assert record("C2 Van Vleck form", worst <= 1e-12, f"max deviation {worst:.2e} over D=2,8,16,64")


def test_c3_factorization():
    ident = max(
        float(np.max(np.abs(coupled_baker(dc, dt, "identity") - kron(baker_unitary(dc), baker_unitary(dt)))))
        for dc, dt in [(2, 2), (4, 4), (8, 16), (32, 16)]
    )
    g1 = fourier_g(1)[0, 0]
    ctrl = max(
        float(np.max(np.abs(coupled_baker(2, dt, "cnot") - g1 * single_control_baker(dt))))
        for dt in (2, 4, 8, 16, 32)
    )
    ok = ident <= 1e-12 and ctrl <= 1e-12
    assert record(
        "C3 factorization",
        ok,
        f"identity gate vs B x B {ident:.2e}; D_c=2 CNOT vs single-qubit-control form {ctrl:.2e}",
    )


@pytest.fixture(scope="module")
def entropy_runs():
    return {
        d_c: entropy_ensemble(coupled_baker(d_c, D_T, "cnot"), d_c, D_T, 40, 50, DEFAULT_SEED)
        for d_c in ENTROPY_DCS
    }


def test_c4a_entropy_saturation(entropy_runs):
    res = entropy_runs[256]
    m = res.window_mean(10, 30)
    ok = abs(m - HAAR_256_16) <= 0.02
    assert record("C4a entropy saturation", ok, f"D_c=256 window mean {m:.5f} vs {HAAR_256_16:.5f} (+-0.02)")


def test_c4b_fluctuations_shrink(entropy_runs):
    stds = [entropy_runs[d].window_std(10, 30) for d in ENTROPY_DCS]
    ok = all(a > b for a, b in zip(stds, stds[1:]))
    detail = ", ".join(f"D_c={d}: {s:.5f}" for d, s in zip(ENTROPY_DCS, stds))
    assert record("C4b ensemble std strictly decreasing", ok, detail)


def test_c5_superoperator_spectrum():
    rep = superop_spectrum(superop_matrix(KrausPair.baker(D_T)))
    radius = float(np.max(np.abs(rep.eigenvalues)))
    resid = rep.span_residual([np.eye(D_T), reflection_r(D_T)])
    ok = radius <= 1 + 1e-10 and rep.unit_count == 2 and resid <= 1e-8
    detail = f"max|lambda|={radius:.15f}, #(|lambda-1|<1e-8)={rep.unit_count}, span{{I,R}} residual {resid:.1e}"
    assert record("C5 superoperator spectrum", ok, detail)


def test_c6_markov_convergence():
    markov, unitary = compare_traces(D_T, COMPARE_DCS, 25, DEFAULT_SEED)
    gaps = [float(np.max(np.abs(unitary[d] - markov))) for d in COMPARE_DCS]
    ok = all(a > b for a, b in zip(gaps, gaps[1:]))
    detail = ", ".join(f"D_c={d}: {g:.2e}" for d, g in zip(COMPARE_DCS, gaps))
    assert record("C6 Markovian convergence", ok, detail)


def test_c7_classical_exactness():
    rnd = random.Random(DEFAULT_SEED)
    shift_ok = True
    for _ in range(200):
        x = DyadicPoint(
            tuple(rnd.getrandbits(1) for _ in range(32)), tuple(rnd.getrandbits(1) for _ in range(32))
        )
        pt = decode_symbols(x)
        for _ in range(32):
            x, pt = x.shift(), baker_step(pt)
            shift_ok &= decode_symbols(x) == pt

    def dyadic():
        return Fraction(rnd.getrandbits(32), 2**32)

    indep_ok = True
    for _ in range(10_000):
        c = PhasePoint(dyadic(), dyadic())
        a = CoupledPhasePoint(c, PhasePoint(dyadic(), dyadic()))
        b = CoupledPhasePoint(c, PhasePoint(dyadic(), dyadic()))
        for _ in range(8):
            a, b, c = coupled_cnot_step(a), coupled_cnot_step(b), baker_step(c)
            indep_ok &= a.control == b.control == c
    ok = shift_ok and indep_ok
    assert record(
        "C7 classical exactness",
        ok,
        f"32-bit shift conjugacy {'exact' if shift_ok else 'BROKEN'}; "
        f"control independence over 1e4 points {'holds' if indep_ok else 'BROKEN'}",
    )


def test_c8_spectral_pipeline():
    rng = np.random.default_rng(DEFAULT_SEED)
    ks_self = ks_distance(unit_mean_spacings(rng.random(10_000) * 2 * np.pi), "poisson")
    _, _, ks = spacing_report(coupled_baker(32, 16, "cnot"), 32, 16)
    _, _, ks_sym = spacing_report(coupled_baker(32, 16, "cnot"), 32, 16, desymmetrize=True)
    report = " ".join(f"{k}={ks[k]:.4f}" for k in KINDS)
    report_sym = " ".join(f"{k}={ks_sym[k]:.4f}" for k in KINDS)
    ok = ks_self < 0.02
    assert record(
        "C8 spectral pipeline",
        ok,
        f"uniform-phase KS vs Poisson {ks_self:.4f} (<0.02); CNOT baker 32x16 [report] {report}; "
        f"parity-resolved {report_sym}",
    )


def _run_twice(tmp_path, cfg_kwargs):
    outs = []
    for tag in ("a", "b"):
        cfg = ExperimentConfig(output_path=str(tmp_path / tag), **cfg_kwargs)
        files = run(cfg)
        outs.append({f.name: f.read_bytes() for f in files if not f.name.endswith("manifest.json")})
    return outs[0] == outs[1] and len(outs[0]) > 0


def test_c9_determinism(tmp_path):
    same4 = _run_twice(tmp_path / "c4", dict(command="entropy", d_c=256, d_t=16, samples=50, steps=40))
    same6 = _run_twice(tmp_path / "c6", dict(command="compare", d_t=16, steps=25, compare_dcs=COMPARE_DCS))
    ok = same4 and same6
    assert record("C9 determinism", ok, f"entropy run identical: {same4}; compare run identical: {same6}")
