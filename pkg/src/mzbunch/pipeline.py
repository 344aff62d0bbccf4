"""Streaming orchestration: field -> cascade -> detectors -> correlation -> fit."""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .cascade import CascadeStream, expected_port_power
from .config import ExperimentConfig
from .correlate import CorrelationHistogram, cross_correlate, write_histogram_csv
from .detect import DetectorStream, read_timestamps
from .fieldgen import FieldGenerator, intensity
from .fit import FitError, FitResult, fit_bunching, write_fit_report
from .theory import power_budget

log = logging.getLogger(__name__)


class PipelineError(RuntimeError):
    """A module failure, tagged with the module it came from."""

    def __init__(self, module: str, exc: Exception):
        super().__init__(f"[{module}] {exc}")
        self.module = module
        self.__cause__ = exc


@dataclass
class ExperimentOutputs:
    out_dir: Path
    timestamp_files: dict
    histogram_csv: Path | None = None
    fit_report: Path | None = None
    cascade_report: Path | None = None
    manifest: Path | None = None
    histogram: CorrelationHistogram | None = None
    fit: FitResult | None = None
    event_counts: dict = field(default_factory=dict)


def _stage(module: str):
    def wrap(fn):
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except PipelineError:
                raise
            except (ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
                raise PipelineError(module, exc) from exc
        return inner
    return wrap


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def _dump(path: Path, data: dict) -> Path:
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return path


def reference_intensities(config: ExperimentConfig) -> dict:
    """Ensemble-mean intensity of each output port, used to set detector rates."""
    e0sq = config.laser.mean_amplitude**2
    jones = config.laser.jones
    return {
        port: e0sq * expected_port_power(config.cascade, config.run.dt_ns, jones, port) for port in ("A", "B")
    }


def simulate(config: ExperimentConfig, out_dir: Path | None = None) -> ExperimentOutputs:
    """Generate the field in chunks and write one timestamp file per detector.

    Memory use is bounded by the chunk size; events go to disk as they are
    produced.
    """
    run = config.run
    out = Path(out_dir or run.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    dt = run.dt_ns
    n_in = int(round(run.duration_ns / dt))

    gen = _stage("fieldgen")(FieldGenerator)(config.laser, dt, run.dt_ceiling)
    cas = _stage("cascade")(CascadeStream)(config.cascade, dt)
    n_out = n_in - cas.total_delay_samples
    refs = reference_intensities(config)

    detectors = []
    for wiring in config.detectors:
        det = _stage("detect")(DetectorStream)(wiring.params, dt, n_out, refs[wiring.port])
        path = out / f"detector{wiring.params.detector_id}.ts"
        detectors.append((wiring, det, path, open(path, "wb" if run.timestamp_format == "binary" else "w")))

    process = _stage("cascade")(cas.process)
    counts = {w.params.detector_id: 0 for w, *_ in detectors}
    try:
        for start in range(0, n_in, run.chunk_samples):
            stop = min(start + run.chunk_samples, n_in)
            field_chunk = _stage("fieldgen")(gen.samples)(start, stop)
            a, b = process(field_chunk)
            if len(a) == 0:
                continue
            ports = {"A": intensity(a), "B": intensity(b)}
            for wiring, det, _, fh in detectors:
                ev = _stage("detect")(det.process)(ports[wiring.port])
                counts[wiring.params.detector_id] += len(ev)
                _append(fh, ev, wiring.params, run.timestamp_format)
    finally:
        for *_, fh in detectors:
            fh.close()

    files = {}
    for wiring, det, path, _ in detectors:
        _write_sidecar(path, det, wiring, run.timestamp_format, counts[wiring.params.detector_id])
        files[wiring.params.detector_id] = path

    cascade_report = cas.report.to_dict()
    cascade_report["reference_intensities"] = refs
    cascade_report["power_budget"] = power_budget(config.cascade).to_dict()
    cascade_report["output_samples"] = n_out
    rep_path = _dump(out / "cascade_report.json", cascade_report)
    log.info("simulated %d samples, events %s", n_in, counts)
    return ExperimentOutputs(out, files, cascade_report=rep_path, event_counts=counts)


def _unit_ps(params) -> int:
    return 1000 if params.resolution_ps % 1000 == 0 else 1


def _append(fh, events: np.ndarray, params, fmt: str) -> None:
    ticks = (events // _unit_ps(params)).astype("<u8")
    if fmt == "binary":
        fh.write(ticks.tobytes())
    else:
        np.savetxt(fh, ticks, fmt="%d")


def _write_sidecar(path: Path, det: DetectorStream, wiring, fmt: str, count: int) -> None:
    meta = {
        "duration_ns": det.duration_ns,
        "resolution_ns": wiring.params.timestamp_resolution_ns,
        "detector_id": wiring.params.detector_id,
        "seed": wiring.params.seed,
        "unit_ns": _unit_ps(wiring.params) / 1000,
        "format": fmt,
        "count": count,
        "port": wiring.port,
    }
    _dump(Path(str(path) + ".json"), meta)


def analyze(config: ExperimentConfig, outputs: ExperimentOutputs) -> ExperimentOutputs:
    c = config.correlate
    a = read_timestamps(outputs.timestamp_files[c.detector_a], mmap=True)
    b = read_timestamps(outputs.timestamp_files[c.detector_b], mmap=True)
    hist = _stage("correlate")(cross_correlate)(a, b, c.bin_width_ns, c.tau_window_ns, c.partitions)
    outputs.histogram = hist
    outputs.histogram_csv = write_histogram_csv(outputs.out_dir / "g2.csv", hist)
    try:
        result = fit_bunching(hist, config.fit.exclude_zero_bin, config.fit.free_baseline)
    except FitError as exc:
        raise PipelineError("fit", exc) from exc
    outputs.fit = result
    outputs.fit_report = write_fit_report(outputs.out_dir / "fit_report.json", result)
    return outputs


def run_experiment(config: ExperimentConfig, out_dir: Path | str | None = None) -> ExperimentOutputs:
    """Full run; identical config and seed give byte-identical files."""
    outputs = simulate(config, Path(out_dir) if out_dir else None)
    analyze(config, outputs)
    write_manifest(config, outputs)
    return outputs


def write_manifest(config: ExperimentConfig, outputs: ExperimentOutputs) -> Path:
    files = [outputs.cascade_report, outputs.histogram_csv, outputs.fit_report]
    for p in outputs.timestamp_files.values():
        files += [p, Path(str(p) + ".json")]
    manifest = {
        "software": {"package": "mzbunch", "version": __version__},
        "config_source": config.source,
        "config": config.resolved(),
        "config_text": config.to_text(),
        "event_counts": {str(k): v for k, v in outputs.event_counts.items()},
        "files": {p.name: _sha256(p) for p in files if p is not None},
    }
    outputs.manifest = _dump(outputs.out_dir / "manifest.json", manifest)
    return outputs.manifest
