"""Command line entry point: ``mzbunch <subcommand> [options]``.

Exit codes: 0 success, 1 validation error, 2 runtime error, 3 delay validator failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .cascade import CascadeError, CascadeSpec, StageSpec
from .config import ConfigError, ExperimentConfig
from .correlate import cross_correlate, read_histogram_csv, write_histogram_csv
from .detect import read_timestamps
from .fit import fit_bunching, write_fit_report
from .pipeline import PipelineError, run_experiment, simulate
from .theory import TheoryParams, power_budget, predict_g2, validate_delays

EXIT_OK, EXIT_VALIDATION, EXIT_RUNTIME, EXIT_DELAYS = 0, 1, 2, 3

log = logging.getLogger("mzbunch")


def _floats(text: str) -> list:
    return [float(x) for x in text.split(",") if x.strip()]


def _overrides(args) -> dict:
    out = {}
    for item in args.set or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects section.key=value, got {item!r}")
        out[key.strip()] = value.strip()
    if args.seed is not None:
        out["run.seed"] = str(args.seed)
    if args.out_dir is not None:
        out["run.out_dir"] = args.out_dir
    if args.format is not None:
        out["run.timestamp_format"] = args.format
    return out


def _load(args, required: bool = True) -> ExperimentConfig | None:
    if args.config is None:
        if required:
            raise ConfigError("this subcommand needs --config")
        return None
    return ExperimentConfig.from_file(args.config).with_overrides(_overrides(args))


def _out_dir(args, cfg: ExperimentConfig | None) -> Path:
    if args.out_dir:
        return Path(args.out_dir)
    return Path(cfg.run.out_dir) if cfg else Path(".")


def cmd_simulate(args) -> int:
    cfg = _load(args)
    outputs = simulate(cfg, _out_dir(args, cfg))
    for det, path in outputs.timestamp_files.items():
        print(f"detector {det}: {outputs.event_counts[det]} events -> {path}")
    return EXIT_OK


def cmd_correlate(args) -> int:
    cfg = _load(args, required=False)
    c = cfg.correlate if cfg else None
    bin_w = args.bin if args.bin is not None else (c.bin_width_ns if c else 2.0)
    window = args.window if args.window is not None else (c.tau_window_ns if c else 1000.0)
    a = read_timestamps(args.a, mmap=True)
    b = read_timestamps(args.b, mmap=True)
    hist = cross_correlate(a, b, bin_w, window, args.partitions)
    out = Path(args.output) if args.output else _out_dir(args, cfg) / "g2.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    write_histogram_csv(out, hist)
    print(f"{hist.total_pairs} pairs in {len(hist)} bins -> {out}")
    return EXIT_OK


def cmd_fit(args) -> int:
    cfg = _load(args, required=False)
    hist = read_histogram_csv(args.histogram)
    exclude = args.exclude_zero_bin or (cfg.fit.exclude_zero_bin if cfg else False)
    free = args.free_baseline or (cfg.fit.free_baseline if cfg else False)
    result = fit_bunching(hist, exclude, free)
    out = Path(args.output) if args.output else Path(args.histogram).with_name("fit_report.json")
    write_fit_report(out, result)
    print(json.dumps(result.to_dict(), indent=2, sort_keys=True))
    return EXIT_OK


def _theory_inputs(args):
    cfg = _load(args, required=False)
    if args.tau_c is not None:
        tau_c = args.tau_c
    elif cfg is not None:
        tau_c = cfg.laser.coherence_time_ns
    else:
        raise ConfigError("give --tau-c or --config")
    if args.delays is not None:
        delays = _floats(args.delays)
    elif cfg is not None:
        delays = cfg.cascade.delays_ns
    else:
        delays = None
    return cfg, tau_c, delays


def cmd_theory(args) -> int:
    cfg, tau_c, delays = _theory_inputs(args)
    n = args.n if args.n is not None else (len(delays) if delays is not None else None)
    if n is None:
        raise ConfigError("give --n, --delays or --config")
    params = TheoryParams(n, tau_c, tuple(delays) if delays and len(delays) == n else ())
    taus = _floats(args.taus) if args.taus else list(np.linspace(0.0, 3.0 * tau_c, 13))
    print("tau_ns,g2")
    for t in taus:
        print(f"{t:g},{predict_g2(params, t):.6f}")
    return EXIT_OK


def cmd_validate_delays(args) -> int:
    cfg, tau_c, delays = _theory_inputs(args)
    if not delays:
        raise ConfigError("give --delays or a --config with stages")
    report = validate_delays(TheoryParams(len(delays), tau_c, tuple(delays)))
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_DELAYS


def cmd_power_budget(args) -> int:
    cfg = _load(args, required=False)
    if args.transmissions is not None:
        ts = _floats(args.transmissions)
        cascade = CascadeSpec([StageSpec(1.0 + i, t**0.5, t**0.5) for i, t in enumerate(ts)])
    elif cfg is not None:
        cascade = cfg.cascade
    else:
        raise ConfigError("give --transmissions or --config")
    print(json.dumps(power_budget(cascade).to_dict(), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_full_run(args) -> int:
    cfg = _load(args)
    outputs = run_experiment(cfg, _out_dir(args, cfg))
    f = outputs.fit
    if f.bunching_detected:
        print(f"g2(0) = {f.g2_zero:.4f} +- {f.b_err:.4f}, tau_c = {f.tau_c_ns:.2f} +- {f.tau_c_err:.2f} ns")
    else:
        print("no bunching detected")
    print(f"outputs in {outputs.out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="experiment config file, or the name of a bundled one")
    common.add_argument("--set", action="append", metavar="SECTION.KEY=VALUE", help="override a config value")
    common.add_argument("--seed", type=int, help="global seed (derives all sub-seeds)")
    common.add_argument("--out-dir", help="output directory")
    common.add_argument("--format", choices=("csv", "binary"), help="timestamp file format")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="mzbunch", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", parents=[common], help="config -> timestamp files")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("correlate", parents=[common], help="two timestamp files -> g2 histogram CSV")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--bin", type=float, help="bin width in ns")
    s.add_argument("--window", type=float, help="one-sided tau window in ns")
    s.add_argument("--partitions", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_correlate)

    s = sub.add_parser("fit", parents=[common], help="histogram CSV -> fit report")
    s.add_argument("histogram")
    s.add_argument("--exclude-zero-bin", action="store_true")
    s.add_argument("--free-baseline", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fit)

    for name, func, help_ in (
        ("theory", cmd_theory, "predicted g2(tau) table"),
        ("validate-delays", cmd_validate_delays, "check delay separation conditions"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--n", type=int)
        s.add_argument("--tau-c", type=float)
        s.add_argument("--delays", help="comma separated delays in ns")
        s.add_argument("--taus", help="comma separated tau values in ns")
        s.set_defaults(func=func)

    s = sub.add_parser("power-budget", parents=[common], help="conversion efficiency of the cascade")
    s.add_argument("--transmissions", help="comma separated balanced per-stage power transmissions")
    s.set_defaults(func=cmd_power_budget)

    s = sub.add_parser("full-run", parents=[common], help="simulate, correlate and fit")
    s.set_defaults(func=cmd_full_run)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ConfigError, CascadeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
