"""Command-line front end: each subcommand writes plot-ready CSV/JSON plus a run manifest.

    python -m qbaker entropy --dc 256 --dt 16 --gate cnot --samples 50 --steps 40 --seed 7

Exit codes: 0 success, 2 bad configuration or unwritable output, 3 numerical failure.
The output directory defaults to $QBAKER_OUTPUT_DIR, else ./qbaker-out.
"""

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .classical import CoupledPhasePoint, PhasePoint, coupled_cnot_step, trajectory
from .coupled import GATES, coupled_baker, schack_caves_b_n2
from .entanglement import HaarSampler, entropy_ensemble, evolve_mixed_control, haar_state
from .linalg import EigensolverError
from .markov import KrausPair, markov_entropy_trace, superop_matrix, superop_spectrum
from .quantum import baker_unitary, fourier_g, reflection_r
from .spectral import KINDS, NotUnitaryError, eigenphases, spacing_report

COMMANDS = ("classical", "matrix-dump", "spectrum", "entropy", "markov", "compare", "superop-eigs")
MATRICES = ("baker", "baker-primed", "coupled", "fourier", "reflection", "schack-caves")
DEFAULT_SEED = 7
OUTPUT_ENV = "QBAKER_OUTPUT_DIR"


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    command: str
    d_c: int = 32
    d_t: int = 16
    gate: str = "cnot"
    steps: int = 40
    samples: int = 50
    seed: int = DEFAULT_SEED
    output_path: str = ""
    format: str = "csv"
    desymmetrize: bool = False
    matrix: str = "coupled"
    compare_dcs: tuple = (8, 16, 32, 64)

    def __post_init__(self):
        self.compare_dcs = tuple(int(d) for d in self.compare_dcs)
        if not self.output_path:
            self.output_path = os.environ.get(OUTPUT_ENV, "qbaker-out")
        self.validate()

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        for name in ("d_c", "d_t"):
            v = getattr(self, name)
            if v < 2 or v % 2:
                raise ConfigError(f"{name} must be even and >= 2, got {v}")
        for d in self.compare_dcs:
            if d < 2 or d % 2:
                raise ConfigError(f"compare dimensions must be even and >= 2, got {d}")
        if self.steps < 1:
            raise ConfigError("steps must be >= 1")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.gate not in GATES:
            raise ConfigError(f"gate must be one of {sorted(GATES)}")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if self.matrix not in MATRICES:
            raise ConfigError(f"matrix must be one of {MATRICES}")

    def to_dict(self):
        d = dataclasses.asdict(self)
        d["compare_dcs"] = list(self.compare_dcs)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


class Table:
    """Named columns plus rows; rendered as CSV or a JSON list of records."""

    def __init__(self, columns, rows):
        self.columns = list(columns)
        self.rows = rows

    def render(self, fmt):
        if fmt == "json":
            records = [dict(zip(self.columns, map(_plain, r))) for r in self.rows]
            return json.dumps(records, indent=1) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_fmt(v) for v in r])
        return buf.getvalue()


def _plain(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating, Fraction)):
        return float(v)
    return v


def _fmt(v):
    v = _plain(v)
    return repr(v) if isinstance(v, float) else str(v)


def _random_dyadic(rng, bits=52):
    return Fraction(int(rng.integers(0, 2**bits)), 2**bits)


def run_classical(cfg):
    rng = HaarSampler(cfg.seed).rng()
    x = CoupledPhasePoint(
        PhasePoint(_random_dyadic(rng), _random_dyadic(rng)),
        PhasePoint(_random_dyadic(rng), _random_dyadic(rng)),
    )
    traj = trajectory(x, cfg.steps, coupled_cnot_step)
    rows = [(k, pt.control.p, pt.control.q, pt.target.p, pt.target.q) for k, pt in enumerate(traj)]
    return {"trajectory": Table(["step", "p_c", "q_c", "p_t", "q_t"], rows)}, {}


def _matrix_for(cfg):
    if cfg.matrix == "baker":
        return baker_unitary(cfg.d_t)
    if cfg.matrix == "baker-primed":
        return baker_unitary(cfg.d_t, "primed")
    if cfg.matrix == "fourier":
        return fourier_g(cfg.d_t)
    if cfg.matrix == "reflection":
        return reflection_r(cfg.d_t)
    if cfg.matrix == "schack-caves":
        if cfg.d_t & (cfg.d_t - 1):
            raise ConfigError("schack-caves needs d_t a power of two")
        return schack_caves_b_n2(cfg.d_t)
    return coupled_baker(cfg.d_c, cfg.d_t, cfg.gate)


def run_matrix_dump(cfg):
    m = _matrix_for(cfg)
    rows = [(i, j, m[i, j].real, m[i, j].imag) for i in range(m.shape[0]) for j in range(m.shape[1])]
    return {"matrix": Table(["row", "col", "re", "im"], rows)}, {"shape": list(m.shape)}


def run_spectrum(cfg):
    u = coupled_baker(cfg.d_c, cfg.d_t, cfg.gate)
    spacings, hist, ks = spacing_report(u, cfg.d_c, cfg.d_t, desymmetrize=cfg.desymmetrize)
    refs = {k: hist.reference(k) for k in KINDS}
    rows = [
        (c, d, refs["poisson"][i], refs["goe"][i], refs["gue"][i])
        for i, (c, d) in enumerate(zip(hist.bin_centers, hist.density))
    ]
    phases = eigenphases(u)
    summary = {"n_levels": int(len(phases)), "ks_poisson": ks["poisson"], "ks_goe": ks["goe"], "ks_gue": ks["gue"]}
    tables = {
        "histogram": Table(["bin_center", "density", "poisson_ref", "goe_ref", "gue_ref"], rows),
        "phases": Table(["index", "phase"], list(enumerate(phases))),
    }
    return tables, {"summary": summary}


def run_entropy(cfg):
    u = coupled_baker(cfg.d_c, cfg.d_t, cfg.gate)
    res = entropy_ensemble(u, cfg.d_c, cfg.d_t, cfg.steps, cfg.samples, cfg.seed)
    samples = [(i, k, res.traces[i, k]) for i in range(res.n_samples) for k in range(cfg.steps + 1)]
    mean, std = res.mean, res.std
    summary = [(k, mean[k], std[k], res.haar_reference) for k in range(cfg.steps + 1)]
    return {
        "samples": Table(["sample_id", "step", "s_linear"], samples),
        "ensemble": Table(["step", "mean", "std", "haar_reference"], summary),
    }, {"window_mean_10_30": res.window_mean() if cfg.steps >= 30 else None}


def run_markov(cfg):
    kraus = KrausPair.baker(cfg.d_t)
    base = HaarSampler(cfg.seed)
    rows = []
    for i in range(cfg.samples):
        trace = markov_entropy_trace(kraus, haar_state(cfg.d_t, base.stream(i)), cfg.steps)
        rows.extend((i, k, v) for k, v in enumerate(trace.values))
    return {"traces": Table(["sample_id", "step", "s_linear"], rows)}, {}


def compare_traces(d_t, d_cs, steps, seed, gate="cnot"):
    """Markov trace and mixed-control unitary traces for one Haar target state."""
    psi = haar_state(d_t, HaarSampler(seed))
    markov = markov_entropy_trace(KrausPair.baker(d_t), psi, steps).values
    unitary = {
        d_c: evolve_mixed_control(coupled_baker(d_c, d_t, gate), psi, d_c, d_t, steps).values
        for d_c in d_cs
    }
    return markov, unitary


def run_compare(cfg):
    markov, unitary = compare_traces(cfg.d_t, cfg.compare_dcs, cfg.steps, cfg.seed, cfg.gate)
    rows = [(d_c, k, tr[k], markov[k]) for d_c, tr in unitary.items() for k in range(cfg.steps + 1)]
    gaps = {str(d_c): float(np.max(np.abs(tr - markov))) for d_c, tr in unitary.items()}
    return {"compare": Table(["d_c", "step", "s_unitary", "s_markov"], rows)}, {"max_gap": gaps}


def run_superop_eigs(cfg):
    rep = superop_spectrum(superop_matrix(KrausPair.baker(cfg.d_t)))
    order = np.lexsort((rep.eigenvalues.imag, -np.abs(rep.eigenvalues)))
    rows = [(v.real, v.imag, abs(v)) for v in rep.eigenvalues[order]]
    info = {"unit_count": rep.unit_count, "second_modulus": rep.second_modulus}
    return {"eigenvalues": Table(["re", "im", "abs"], rows)}, info


RUNNERS = {
    "classical": run_classical,
    "matrix-dump": run_matrix_dump,
    "spectrum": run_spectrum,
    "entropy": run_entropy,
    "markov": run_markov,
    "compare": run_compare,
    "superop-eigs": run_superop_eigs,
}


def _write_atomic(path, text):
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


def run(cfg):
    """Execute one experiment; returns the list of files written."""
    t0 = time.perf_counter()
    tables, extra = RUNNERS[cfg.command](cfg)
    out = Path(cfg.output_path)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out}: {exc}") from exc
    stem = cfg.command.replace("-", "_")
    files = []
    # all data is computed before anything is written, so an interrupted run leaves no partial files
    try:
        for name, table in tables.items():
            path = out / f"{stem}_{name}.{cfg.format}"
            _write_atomic(path, table.render(cfg.format))
            files.append(path)
        if "summary" in extra:
            path = out / f"{stem}_summary.json"
            _write_atomic(path, json.dumps(extra["summary"], indent=1, sort_keys=True) + "\n")
            files.append(path)
        manifest = {
            "config": cfg.to_dict(),
            "seed": cfg.seed,
            "version": __version__,
            "wall_time_s": time.perf_counter() - t0,
            "files": [p.name for p in files],
            "info": {k: v for k, v in extra.items() if k != "summary"},
        }
        path = out / f"{stem}_manifest.json"
        _write_atomic(path, json.dumps(manifest, indent=1, sort_keys=True) + "\n")
        files.append(path)
    except OSError as exc:
        raise ConfigError(f"cannot write to {out}: {exc}") from exc
    return files


def build_parser():
    parser = argparse.ArgumentParser(prog="qbaker", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--dc", dest="d_c", type=int, default=32)
        p.add_argument("--dt", dest="d_t", type=int, default=16)
        p.add_argument("--gate", default="cnot", choices=sorted(GATES))
        p.add_argument("--steps", type=int, default=40)
        p.add_argument("--samples", type=int, default=50)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--output", dest="output_path", default="")
        p.add_argument("--format", default="csv", choices=("csv", "json"))
        p.add_argument("--desymmetrize", action="store_true")
        p.add_argument("--matrix", default="coupled", choices=MATRICES)
        p.add_argument("--dc-list", dest="compare_dcs", type=int, nargs="+", default=[8, 16, 32, 64])
    return parser


def _fail(code, kind, message):
    message = " ".join(str(message).split())
    print(f"qbaker-error code={code} kind={kind} message={message}", file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = ExperimentConfig(**vars(args))
        files = run(cfg)
    except ConfigError as exc:
        return _fail(2, "config", exc)
    except (EigensolverError, NotUnitaryError, np.linalg.LinAlgError) as exc:
        return _fail(3, "numerical", exc)
    except KeyboardInterrupt:
        return _fail(130, "cancelled", "interrupted; no files written")
    for f in files:
        print(f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
