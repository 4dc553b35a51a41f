"""Command-line front-end: scenario configuration and the analysis subcommands.

Scenarios come from an optional JSON config file plus flag overrides (flags
win). Angles are taken in degrees at this boundary and converted to radians
internally. All emitted JSON/CSV carries a schema_version field and full
double precision, so outputs re-parse losslessly.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .classical_optics import classical_mirror_momentum
from .ensemble import (
    expected_kick_report,
    fluctuation_analysis,
    sample_runs,
    write_records_csv,
)
from .errors import ConfigError, DegenerateSampleError, MzkickError
from .photon_modes import CHANNEL_D1, CHANNEL_D2, BeamsplitterSpec, detector_state, intra_state
from .pointer import MomentumGrid, default_grid, gaussian_pointer, overlap, shift
from .weak_measurement import (
    OpticalSetup,
    couple_with_kick,
    net_kick_d1,
    net_kick_d2,
    postselect,
    postselection_to_json,
    weak_value_PB,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_CONFIG = 2

DEFAULT_SCAN_RATIOS = (0.0, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0)


@dataclass(frozen=True)
class ScenarioConfig:
    """One reproducible experiment scenario; t^2 is always derived as 1 - r^2."""

    r_squared: float = 0.75
    omega: float = 1.0
    alpha_degrees: float = 60.0
    nbar: float = 100.0
    delta_spread: float = 10.0
    grid_points: int = 4096
    grid_halfwidth: float = 0.0  # 0 means: size the grid automatically
    seed: int = 7
    trials: int = 1000

    def validate(self) -> None:
        problems = []
        if not 0.0 < self.r_squared < 1.0:
            problems.append(f"r_squared: must lie strictly between 0 and 1 (got {self.r_squared})")
        if self.omega <= 0.0:
            problems.append(f"omega: must be positive (got {self.omega})")
        if not 0.0 < self.alpha_degrees < 90.0:
            problems.append(
                f"alpha_degrees: must lie strictly between 0 and 90 (got {self.alpha_degrees})"
            )
        if self.nbar < 0.0:
            problems.append(f"nbar: must be non-negative (got {self.nbar})")
        if self.delta_spread <= 0.0:
            problems.append(f"delta_spread: must be positive (got {self.delta_spread})")
        if self.grid_points < 16:
            problems.append(f"grid_points: must be at least 16 (got {self.grid_points})")
        if self.grid_halfwidth < 0.0:
            problems.append(f"grid_halfwidth: must be non-negative (got {self.grid_halfwidth})")
        if not 0 <= self.seed < 2**64:
            problems.append(f"seed: must fit in an unsigned 64-bit integer (got {self.seed})")
        if self.trials < 1:
            problems.append(f"trials: must be at least 1 (got {self.trials})")
        if problems:
            raise ConfigError("\n".join(problems))

    @property
    def alpha(self) -> float:
        return math.radians(self.alpha_degrees)

    def to_setup(self) -> OpticalSetup:
        return OpticalSetup(
            bs=BeamsplitterSpec.from_r_squared(self.r_squared),
            omega=self.omega,
            alpha=self.alpha,
            nbar=self.nbar,
        )

    def build_grid(self, max_shift: float) -> MomentumGrid:
        if self.grid_halfwidth > 0.0:
            return MomentumGrid(-self.grid_halfwidth, self.grid_halfwidth, self.grid_points)
        return default_grid(self.delta_spread, max_shift, self.grid_points)


def load_config(path: str | Path | None, overrides: dict) -> ScenarioConfig:
    """Merge defaults, an optional JSON config file, and CLI flag overrides."""
    values: dict = {}
    if path is not None:
        try:
            raw = json.loads(Path(path).read_text())
        except OSError as exc:
            raise ConfigError(f"config: cannot read {path} ({exc})") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: {path} is not valid JSON ({exc})") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"config: {path} must contain a JSON object")
        known = {f.name for f in fields(ScenarioConfig)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigError(f"config: unknown keys {unknown}; expected a subset of {sorted(known)}")
        values.update(raw)
    values.update({k: v for k, v in overrides.items() if v is not None})
    field_types = {f.name: f.type for f in fields(ScenarioConfig)}
    for key, value in values.items():
        want_int = field_types[key] in ("int", int)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{key}: must be a number (got {value!r})")
        if want_int and not float(value).is_integer():
            raise ConfigError(f"{key}: must be an integer (got {value!r})")
        values[key] = int(value) if want_int else float(value)
    cfg = ScenarioConfig(**values)
    cfg.validate()
    return cfg


def _setup_summary(cfg: ScenarioConfig, setup: OpticalSetup) -> dict:
    return {
        "r": setup.bs.r,
        "t": setup.bs.t,
        "omega": setup.omega,
        "alpha_radians": setup.alpha,
        "beta_radians": setup.beta,
        "hbar": setup.hbar,
        "nbar": setup.nbar,
        "delta_kick": setup.delta_kick,
        "delta_spread": cfg.delta_spread,
    }


def run_single_photon(cfg: ScenarioConfig) -> dict:
    """Weak values, exact conditional kicks, and net per-channel kicks."""
    setup = cfg.to_setup()
    psi = intra_state(setup.bs)
    phi1 = detector_state(setup.bs, CHANNEL_D1)
    phi2 = detector_state(setup.bs, CHANNEL_D2)
    kick1 = net_kick_d1(setup)
    kick2 = net_kick_d2(setup)  # raises ZeroOverlapError naming D2 at r = t
    wv1 = weak_value_PB(psi, phi1)
    wv2 = weak_value_PB(psi, phi2)

    grid = cfg.build_grid(setup.delta_kick)
    pointer = gaussian_pointer(grid, cfg.delta_spread)
    joint = couple_with_kick(psi, pointer, setup.delta_kick)
    res1 = postselect(joint, phi1)
    res2 = postselect(joint, phi2)

    ch1 = postselection_to_json(CHANNEL_D1, res1, wv1)
    ch1["net_kick"] = kick1
    ch2 = postselection_to_json(CHANNEL_D2, res2, wv2)
    ch2["net_kick"] = kick2
    return {
        "schema_version": SCHEMA_VERSION,
        "config": asdict(cfg),
        "setup": _setup_summary(cfg, setup),
        "channels": [ch1, ch2],
        "weak_value_d1": wv1.real,
        "weak_value_d2": wv2.real,
        "net_kick_d1": kick1,
        "net_kick_d2": kick2,
    }


def run_ensemble(cfg: ScenarioConfig) -> tuple[dict, list]:
    """Monte-Carlo run records plus a summary against the expected totals."""
    setup = cfg.to_setup()
    records = sample_runs(setup, cfg.trials, cfg.seed)
    report = expected_kick_report(setup)
    momenta = np.array([rec.mirror_momentum for rec in records])
    sample_mean = float(momenta.mean())
    if cfg.trials > 1:
        standard_error = float(momenta.std(ddof=1)) / math.sqrt(cfg.trials)
    else:
        standard_error = float("nan")

    def _corr(**kwargs):
        try:
            return fluctuation_analysis(records, **kwargs)
        except DegenerateSampleError:
            return None

    summary = {
        "schema_version": SCHEMA_VERSION,
        "config": asdict(cfg),
        "setup": _setup_summary(cfg, setup),
        "sample_mean": sample_mean,
        "standard_error": standard_error,
        "expected": report.grand_total,
        "classical_reference": report.classical_reference,
        "d1_total_expected": report.d1_total,
        "d2_total_expected": report.d2_total,
        "correlation_unconditional": _corr(),
        "correlation_within_total": _corr(conditional_on_total=True),
        "correlation_classical_attribution": _corr(classical_attribution=True),
    }
    return summary, records


def run_decoherence_scan(cfg: ScenarioConfig, delta_over_spread_list: list[float]) -> list[dict]:
    """Exact channel statistics as the per-photon kick sweeps through the spread.

    Each row evaluates one ratio delta/spread: mirror visibility, exact channel
    probabilities, the exact D2 conditional kick, and the weak-value prediction
    it departs from once the coupling decoheres the photon.
    """
    if not delta_over_spread_list:
        raise ConfigError("ratios: need at least one delta/spread ratio")
    setup = cfg.to_setup()
    psi = intra_state(setup.bs)
    phi1 = detector_state(setup.bs, CHANNEL_D1)
    phi2 = detector_state(setup.bs, CHANNEL_D2)
    wv2 = weak_value_PB(psi, phi2)
    spread = cfg.delta_spread
    largest = max(abs(x) for x in delta_over_spread_list) * spread
    grid = cfg.build_grid(largest)
    pointer = gaussian_pointer(grid, spread)
    rows = []
    for ratio in delta_over_spread_list:
        delta = ratio * spread
        moved = shift(pointer, delta)
        visibility = abs(overlap(pointer, moved))
        joint = couple_with_kick(psi, pointer, delta)
        res1 = postselect(joint, phi1)
        res2 = postselect(joint, phi2)
        rows.append(
            {
                "delta_over_spread": ratio,
                "visibility": visibility,
                "p_d1": res1.probability,
                "p_d2": res2.probability,
                "d2_mean_kick": res2.mean_kick,
                "d2_weak_kick": wv2.real * delta,
            }
        )
    return rows


def run_compare_classical(cfg: ScenarioConfig) -> dict:
    """Side-by-side quantum ensemble total and classical wave-optics momentum."""
    setup = cfg.to_setup()
    report = expected_kick_report(setup)
    classical = classical_mirror_momentum(
        setup.nbar * setup.hbar * setup.omega, setup.bs, setup.alpha
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "config": asdict(cfg),
        "setup": _setup_summary(cfg, setup),
        "quantum_total": report.grand_total,
        "quantum_d1_total": report.d1_total,
        "quantum_d2_total": report.d2_total,
        "classical_total": classical,
        "ratio": report.grand_total / classical,
    }


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n")


def _write_rows_csv(path: Path, header: list[str], rows: list[dict]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(row[key]) if isinstance(row[key], float) else row[key] for key in header])


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="JSON scenario file")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", dest="fmt",
        help="format for tabular outputs",
    )
    common.add_argument("--r-squared", type=float, default=None, dest="r_squared")
    common.add_argument("--omega", type=float, default=None)
    common.add_argument("--alpha-degrees", type=float, default=None, dest="alpha_degrees")
    common.add_argument("--nbar", type=float, default=None)
    common.add_argument("--delta-spread", type=float, default=None, dest="delta_spread")
    common.add_argument("--grid-points", type=int, default=None, dest="grid_points")
    common.add_argument("--grid-halfwidth", type=float, default=None, dest="grid_halfwidth")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--trials", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="mzkick",
        description="Momentum bookkeeping for a Mach-Zehnder interferometer "
        "whose mirror is struck from both sides",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "single-photon", parents=[common],
        help="weak values, channel probabilities, and per-channel kicks",
    )
    sub.add_parser(
        "ensemble", parents=[common],
        help="Monte-Carlo photon counting against the expected totals",
    )
    deco = sub.add_parser(
        "decoherence", parents=[common],
        help="channel statistics versus the kick-to-spread ratio",
    )
    deco.add_argument(
        "--ratios", type=float, nargs="+", default=list(DEFAULT_SCAN_RATIOS),
        help="delta/spread ratios to scan",
    )
    sub.add_parser(
        "compare-classical", parents=[common],
        help="quantum ensemble total versus the classical wave-optics momentum",
    )
    return parser


_CONFIG_FIELDS = (
    "r_squared", "omega", "alpha_degrees", "nbar", "delta_spread",
    "grid_points", "grid_halfwidth", "seed", "trials",
)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        overrides = {name: getattr(args, name) for name in _CONFIG_FIELDS}
        cfg = load_config(args.config, overrides)
    except ConfigError as exc:
        print(f"configuration error:\n{exc}", file=sys.stderr)
        return EXIT_CONFIG

    out_dir: Path = args.out
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.command == "single-photon":
            report = run_single_photon(cfg)
            _write_json(out_dir / "single_photon.json", report)
            print(json.dumps(report, indent=2))
        elif args.command == "ensemble":
            summary, records = run_ensemble(cfg)
            if args.fmt == "csv":
                write_records_csv(records, out_dir / "ensemble_records.csv")
            else:
                rows = [
                    {
                        "trial": i,
                        "N": rec.total_photons,
                        "n1": rec.d1_count,
                        "n2": rec.d2_count,
                        "momentum": rec.mirror_momentum,
                    }
                    for i, rec in enumerate(records)
                ]
                _write_json(
                    out_dir / "ensemble_records.json",
                    {"schema_version": SCHEMA_VERSION, "records": rows},
                )
            _write_json(out_dir / "ensemble_summary.json", summary)
            print(json.dumps(summary, indent=2))
        elif args.command == "decoherence":
            rows = run_decoherence_scan(cfg, list(args.ratios))
            header = ["delta_over_spread", "visibility", "p_d1", "p_d2", "d2_mean_kick", "d2_weak_kick"]
            if args.fmt == "csv":
                _write_rows_csv(out_dir / "decoherence_scan.csv", header, rows)
            else:
                _write_json(
                    out_dir / "decoherence_scan.json",
                    {"schema_version": SCHEMA_VERSION, "rows": rows},
                )
            print(json.dumps({"schema_version": SCHEMA_VERSION, "rows": rows}, indent=2))
        elif args.command == "compare-classical":
            report = run_compare_classical(cfg)
            _write_json(out_dir / "compare_classical.json", report)
            print(json.dumps(report, indent=2))
    except ConfigError as exc:
        print(f"configuration error:\n{exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MzkickError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())
