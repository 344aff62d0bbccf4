"""Experiment configuration: INI-style text with strict keys and explicit units.

Example::

    [run]
    duration_ns = 1e9
    dt_ns = 2
    seed = 7

    [laser]
    coherence_time_ns = 135

    [stage.1]
    fiber_length_m = 100
    group_index = 1.4845

    [detector.1]
    port = A
    mean_rate_hz = 1e6

    [detector.2]
    port = A
    mean_rate_hz = 1e6

Stages and detectors are numbered sections; they are ordered by number.
Unknown sections or keys are rejected.
"""
from __future__ import annotations

import configparser
import io
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .cascade import CascadeSpec, StageSpec, delay_from_fiber, polarization_rotation
from .detect import MAX_THINNING_PROBABILITY, DetectorParams
from .fieldgen import LaserParams
from .rng import derive_seed

BUNDLED_DIR = Path(__file__).parent / "configs"
DEFAULT_CHUNK_SAMPLES = 1 << 20


class ConfigError(ValueError):
    pass


def _bool(v: str) -> bool:
    s = str(v).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {v!r}")


def _int(v: str) -> int:
    f = float(v)
    if f != int(f):
        raise ConfigError(f"not an integer: {v!r}")
    return int(f)


def _port(v: str) -> str:
    s = str(v).strip().upper()
    if s not in ("A", "B"):
        raise ConfigError(f"port must be A or B, got {v!r}")
    return s


def _str(v: str) -> str:
    return str(v).strip()


SCHEMA = {
    "run": {
        "duration_ns": float,
        "dt_ns": float,
        "seed": _int,
        "out_dir": _str,
        "chunk_samples": _int,
        "dt_ceiling": float,
        "delay_tolerance_ns": float,
        "timestamp_format": _str,
    },
    "laser": {
        "mean_amplitude": float,
        "coherence_time_ns": float,
        "center_wavelength_nm": float,
        "polarization_angle_rad": float,
        "coherent": _bool,
        "seed": _int,
    },
    "cascade": {"topology": _str, "input_port_of_next_stage": _port},
    "stage": {
        "delay_ns": float,
        "fiber_length_m": float,
        "group_index": float,
        "short_arm_amplitude_transmission": float,
        "delayed_arm_amplitude_transmission": float,
        "delayed_arm_power_transmission": float,
        "balanced": _bool,
        "static_phase_rad": float,
        "polarization_rotation_rad": float,
    },
    "detector": {
        "port": _port,
        "mean_rate_hz": float,
        "dead_time_ns": float,
        "dark_rate_hz": float,
        "timestamp_resolution_ns": float,
        "seed": _int,
    },
    "correlate": {
        "detector_a": _int,
        "detector_b": _int,
        "bin_width_ns": float,
        "tau_window_ns": float,
        "partitions": _int,
    },
    "fit": {"exclude_zero_bin": _bool, "free_baseline": _bool},
}

_NUMBERED = re.compile(r"^(stage|detector)\.(\d+)$")


@dataclass
class DetectorWiring:
    params: DetectorParams
    port: str = "A"


@dataclass
class RunSettings:
    duration_ns: float = 1e7
    dt_ns: float = 2.0
    seed: int = 0
    out_dir: str = "out"
    chunk_samples: int = DEFAULT_CHUNK_SAMPLES
    dt_ceiling: float = 1.0 / 20.0
    delay_tolerance_ns: float | None = None
    timestamp_format: str = "binary"


@dataclass
class CorrelateSettings:
    detector_a: int = 1
    detector_b: int = 2
    bin_width_ns: float = 2.0
    tau_window_ns: float = 1000.0
    partitions: int = 1


@dataclass
class FitSettings:
    exclude_zero_bin: bool = False
    free_baseline: bool = False


@dataclass
class ExperimentConfig:
    laser: LaserParams
    cascade: CascadeSpec
    detectors: list
    correlate: CorrelateSettings = field(default_factory=CorrelateSettings)
    fit: FitSettings = field(default_factory=FitSettings)
    run: RunSettings = field(default_factory=RunSettings)
    raw: dict = field(default_factory=dict)
    source: str | None = None

    # --- construction -----------------------------------------------------
    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        path = resolve_config_path(path)
        return cls.from_string(path.read_text(), source=str(path))

    @classmethod
    def from_string(cls, text: str, source: str | None = None, overrides: dict | None = None) -> "ExperimentConfig":
        parser = configparser.ConfigParser(interpolation=None, default_section="__none__")
        parser.optionxform = str
        try:
            parser.read_string(text, source=source or "<string>")
        except configparser.Error as exc:
            raise ConfigError(str(exc)) from exc
        raw = {s: dict(parser.items(s)) for s in parser.sections()}
        for key, value in (overrides or {}).items():
            section, _, name = key.rpartition(".")
            if not section:
                raise ConfigError(f"override {key!r} must look like section.key=value")
            raw.setdefault(section, {})[name] = str(value)
        return cls.from_raw(raw, source)

    @classmethod
    def from_raw(cls, raw: dict, source: str | None = None) -> "ExperimentConfig":
        parsed = _parse_raw(raw)
        run = RunSettings(**parsed.get("run", {}))
        if run.timestamp_format not in ("binary", "csv"):
            raise ConfigError("run.timestamp_format must be binary or csv")

        lz = dict(parsed.get("laser", {}))
        angle = lz.pop("polarization_angle_rad", 0.0)
        lz.setdefault("seed", derive_seed(run.seed, "laser"))
        lz["polarization"] = (complex(math.cos(angle)), complex(math.sin(angle)))
        laser = _build(LaserParams, lz, "laser")

        stages = [_stage(i, parsed[f"stage.{i}"]) for i in _numbers(parsed, "stage")]
        cz = parsed.get("cascade", {})
        cascade = _build(CascadeSpec, dict(stages=stages, **cz), "cascade")

        detectors = []
        for i in _numbers(parsed, "detector"):
            dz = dict(parsed[f"detector.{i}"])
            port = dz.pop("port", "A")
            dz.setdefault("seed", derive_seed(run.seed, f"detector.{i}"))
            dz.setdefault("mean_rate_hz", 1e5)
            detectors.append(DetectorWiring(_build(DetectorParams, dict(detector_id=i, **dz), f"detector.{i}"), port))

        cfg = cls(
            laser=laser,
            cascade=cascade,
            detectors=detectors,
            correlate=CorrelateSettings(**parsed.get("correlate", {})),
            fit=FitSettings(**parsed.get("fit", {})),
            run=run,
            raw=raw,
            source=source,
        )
        cfg.validate()
        return cfg

    def with_overrides(self, overrides: dict) -> "ExperimentConfig":
        raw = {s: dict(v) for s, v in self.raw.items()}
        for key, value in overrides.items():
            section, _, name = key.rpartition(".")
            raw.setdefault(section, {})[name] = str(value)
        return ExperimentConfig.from_raw(raw, self.source)

    # --- checks -----------------------------------------------------------
    def detector(self, number: int) -> DetectorWiring:
        for d in self.detectors:
            if d.params.detector_id == number:
                return d
        raise ConfigError(f"no detector.{number} section")

    def validate(self) -> None:
        run = self.run
        if not run.duration_ns > 0 or not run.dt_ns > 0:
            raise ConfigError("run.duration_ns and run.dt_ns must be > 0")
        if run.chunk_samples < 1:
            raise ConfigError("run.chunk_samples must be >= 1")
        tol = run.delay_tolerance_ns if run.delay_tolerance_ns is not None else run.dt_ns / 2
        for i, st in enumerate(self.cascade.stages, 1):
            k, err = st.delay_samples(run.dt_ns)
            if abs(err) > tol + 1e-12:
                raise ConfigError(f"stage.{i}: delay {st.delay_ns} ns is {err:+.3g} ns off the dt grid (tolerance {tol})")
        total = sum(self.cascade.delay_samples(run.dt_ns)) * run.dt_ns
        if total >= run.duration_ns / 2:
            raise ConfigError(f"run.duration_ns must exceed twice the total delay ({total} ns)")
        if len(self.detectors) < 2:
            raise ConfigError("at least two detector sections are required")
        for d in self.detectors:
            if d.port == "B" and self.cascade.n == 0:
                raise ConfigError(f"detector.{d.params.detector_id}: port B carries no light without stages")
            if d.params.mean_rate_hz * 1e-9 * run.dt_ns >= MAX_THINNING_PROBABILITY:
                raise ConfigError(f"detector.{d.params.detector_id}: mean_rate_hz * dt is not << 1")
        self.detector(self.correlate.detector_a)
        self.detector(self.correlate.detector_b)
        if self.correlate.detector_a == self.correlate.detector_b:
            raise ConfigError("correlate needs two different detectors")

    # --- output -----------------------------------------------------------
    def resolved(self) -> dict:
        """Every effective setting, including derived seeds, as plain data."""
        return {
            "run": vars(self.run).copy(),
            "laser": {
                "mean_amplitude": self.laser.mean_amplitude,
                "coherence_time_ns": self.laser.coherence_time_ns,
                "center_wavelength_nm": self.laser.center_wavelength_nm,
                "seed": self.laser.seed,
                "polarization": [[z.real, z.imag] for z in map(complex, self.laser.polarization)],
                "coherent": self.laser.coherent,
            },
            "cascade": {
                "topology": self.cascade.topology,
                "input_port_of_next_stage": self.cascade.input_port_of_next_stage,
                "stages": [
                    {
                        "delay_ns": s.delay_ns,
                        "short_arm_amplitude_transmission": s.short_arm_amplitude_transmission,
                        "delayed_arm_amplitude_transmission": s.delayed_arm_amplitude_transmission,
                        "static_phase_rad": s.static_phase_rad,
                        "delayed_arm_polarization_rotation": [
                            [[z.real, z.imag] for z in row] for row in s.delayed_arm_polarization_rotation
                        ],
                    }
                    for s in self.cascade.stages
                ],
            },
            "detectors": [
                {"port": d.port, **{k: getattr(d.params, k) for k in (
                    "detector_id", "mean_rate_hz", "dead_time_ns", "dark_rate_hz", "timestamp_resolution_ns", "seed")}}
                for d in self.detectors
            ],
            "correlate": vars(self.correlate).copy(),
            "fit": vars(self.fit).copy(),
        }

    def to_text(self) -> str:
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        for section in sorted(self.raw, key=_section_order):
            parser[section] = self.raw[section]
        buf = io.StringIO()
        parser.write(buf)
        return buf.getvalue()


def _section_order(name: str):
    order = ["run", "laser", "cascade", "stage", "detector", "correlate", "fit"]
    m = _NUMBERED.match(name)
    if m:
        return (order.index(m.group(1)), int(m.group(2)))
    return (order.index(name) if name in order else len(order), 0)


def _numbers(parsed: dict, kind: str) -> list:
    return sorted(int(m.group(2)) for s in parsed if (m := _NUMBERED.match(s)) and m.group(1) == kind)


def _parse_raw(raw: dict) -> dict:
    parsed = {}
    for section, items in raw.items():
        m = _NUMBERED.match(section)
        kind = m.group(1) if m else section
        if kind not in SCHEMA or kind in ("stage", "detector") and not m:
            raise ConfigError(f"unknown section [{section}]")
        schema = SCHEMA[kind]
        out = {}
        for key, value in items.items():
            if key not in schema:
                raise ConfigError(f"unknown key {key!r} in [{section}]")
            try:
                out[key] = schema[key](value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"[{section}] {key} = {value!r}: {exc}") from exc
        parsed[section] = out
    return parsed


def _build(cls, kwargs: dict, section: str):
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"[{section}] {exc}") from exc


def _stage(i: int, z: dict) -> StageSpec:
    z = dict(z)
    if "delay_ns" in z and "fiber_length_m" in z:
        raise ConfigError(f"[stage.{i}] give either delay_ns or fiber_length_m, not both")
    if "fiber_length_m" in z:
        try:
            z["delay_ns"] = delay_from_fiber(z.pop("fiber_length_m"), z.pop("group_index", 1.4682))
        except ValueError as exc:
            raise ConfigError(f"[stage.{i}] {exc}") from exc
    elif "group_index" in z:
        raise ConfigError(f"[stage.{i}] group_index needs fiber_length_m")
    if "delay_ns" not in z:
        raise ConfigError(f"[stage.{i}] missing delay_ns or fiber_length_m")
    if "delayed_arm_power_transmission" in z:
        if "delayed_arm_amplitude_transmission" in z:
            raise ConfigError(f"[stage.{i}] give the delayed-arm transmission once")
        z["delayed_arm_amplitude_transmission"] = math.sqrt(z.pop("delayed_arm_power_transmission"))
    if z.pop("balanced", False):
        if "short_arm_amplitude_transmission" in z:
            raise ConfigError(f"[stage.{i}] balanced stages derive the short-arm transmission")
        z["short_arm_amplitude_transmission"] = z.get("delayed_arm_amplitude_transmission", 1.0)
    angle = z.pop("polarization_rotation_rad", 0.0)
    if angle:
        z["delayed_arm_polarization_rotation"] = polarization_rotation(angle)
    return _build(StageSpec, z, f"stage.{i}")


def resolve_config_path(path) -> Path:
    """A path on disk, or the name of a bundled config (``fig4_n1.cfg``)."""
    p = Path(path)
    if p.exists():
        return p
    bundled = BUNDLED_DIR / p.name
    if p.parent == Path(".") and bundled.exists():
        return bundled
    raise FileNotFoundError(f"config file not found: {p}")


def bundled_configs() -> list:
    return sorted(q.name for q in BUNDLED_DIR.glob("*.cfg"))
