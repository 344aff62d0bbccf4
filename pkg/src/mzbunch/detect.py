"""Semiclassical photodetection: intensity-driven thinning into timestamp streams.

Each sample of the field is a Bernoulli trial with probability
``rate(t) * dt`` where ``rate(t) = mean_rate * I(t) / I_ref``. Dark counts are
an independent homogeneous Poisson process. Event times are rounded to the
timestamp grid (ties to even) and events inside the dead time of the last
kept event are dropped.

Timestamps are stored as integer picoseconds so sub-nanosecond grids are
exact; the on-disk format defaults to 1 ns units.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numba
import numpy as np

from . import rng as _rng
from .fieldgen import FieldTrace

PS_PER_NS = 1000
MAX_THINNING_PROBABILITY = 0.1


class DetectionError(ValueError):
    pass


@dataclass(frozen=True)
class DetectorParams:
    mean_rate_hz: float
    dead_time_ns: float = 0.0
    dark_rate_hz: float = 0.0
    timestamp_resolution_ns: float = 2.0
    seed: int = 0
    detector_id: int = 0

    def __post_init__(self):
        if self.mean_rate_hz < 0 or self.dark_rate_hz < 0:
            raise DetectionError("rates must be >= 0")
        if self.dead_time_ns < 0:
            raise DetectionError("dead_time_ns must be >= 0")
        if not self.timestamp_resolution_ns > 0:
            raise DetectionError("timestamp_resolution_ns must be > 0")
        res_ps = self.timestamp_resolution_ns * PS_PER_NS
        if abs(res_ps - round(res_ps)) > 1e-6:
            raise DetectionError("timestamp_resolution_ns must be a whole number of picoseconds")

    @property
    def resolution_ps(self) -> int:
        return int(round(self.timestamp_resolution_ns * PS_PER_NS))

    @property
    def dead_time_ps(self) -> int:
        return int(round(self.dead_time_ns * PS_PER_NS))


@dataclass
class TimestampStream:
    """Sorted detection times of one detector, in integer picoseconds."""

    events_ps: np.ndarray
    duration_ns: float
    detector_id: int = 0
    resolution_ns: float = 2.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.events_ps = np.asarray(self.events_ps, dtype=np.int64)

    def __len__(self):
        return len(self.events_ps)

    @property
    def events_ns(self) -> np.ndarray:
        return self.events_ps / PS_PER_NS

    @property
    def rate_hz(self) -> float:
        return len(self) / (self.duration_ns * 1e-9)

    def is_sorted(self, strict: bool = True) -> bool:
        d = np.diff(self.events_ps)
        return bool(np.all(d > 0) if strict else np.all(d >= 0))


@numba.njit(cache=True)
def _dead_time_filter(events, dead_ps, last):
    keep = np.empty(len(events), dtype=np.bool_)
    for i in range(len(events)):
        t = events[i]
        if t > last and t - last >= dead_ps:
            keep[i] = True
            last = t
        else:
            keep[i] = False
    return keep, last


class DetectorStream:
    """Chunked detector; ``process`` takes consecutive intensity slices.

    Random draws are addressed by absolute sample index, so the events do not
    depend on the chunk boundaries.
    """

    def __init__(self, params: DetectorParams, dt_ns: float, n_samples: int, reference_intensity: float):
        if not reference_intensity > 0 and params.mean_rate_hz > 0:
            raise DetectionError("reference intensity must be > 0")
        self.params = params
        self.dt_ns = float(dt_ns)
        self.n_samples = int(n_samples)
        self.reference_intensity = float(reference_intensity)
        self._scale = params.mean_rate_hz * 1e-9 * dt_ns / reference_intensity if params.mean_rate_hz else 0.0
        self._pos = 0
        self._last = np.iinfo(np.int64).min // 2
        self._uniform_cache: tuple[int, np.ndarray] | None = None
        self._dark_cache: tuple[int, np.ndarray] | None = None
        self.n_dark = 0

    @property
    def duration_ns(self) -> float:
        return self.n_samples * self.dt_ns

    def _uniforms(self, block: int) -> np.ndarray:
        if self._uniform_cache is None or self._uniform_cache[0] != block:
            u = _rng.block_rng(self.params.seed, _rng.TAG_THINNING, block).random(_rng.BLOCK_SAMPLES)
            self._uniform_cache = (block, u)
        return self._uniform_cache[1]

    def _dark_positions(self, block: int) -> np.ndarray:
        """Dark-count positions in fractional sample units for one RNG block."""
        if self._dark_cache is None or self._dark_cache[0] != block:
            g = _rng.block_rng(self.params.seed, _rng.TAG_DARK, block)
            B = _rng.BLOCK_SAMPLES
            mean = self.params.dark_rate_hz * 1e-9 * B * self.dt_ns
            n = g.poisson(mean)
            pos = np.sort(block * B + B * g.random(n))
            self._dark_cache = (block, pos)
        return self._dark_cache[1]

    def _quantize(self, t_ns: np.ndarray) -> np.ndarray:
        res = self.params.timestamp_resolution_ns
        return np.rint(t_ns / res).astype(np.int64) * self.params.resolution_ps

    def process(self, chunk_intensity: np.ndarray) -> np.ndarray:
        start = self._pos
        stop = start + len(chunk_intensity)
        if stop > self.n_samples:
            raise DetectionError("more samples supplied than the declared trace length")
        self._pos = stop
        B = _rng.BLOCK_SAMPLES
        signal = np.empty(0, dtype=np.int64)
        if self._scale > 0 and stop > start:
            p = chunk_intensity * self._scale
            pmax = float(p.max())
            if pmax >= MAX_THINNING_PROBABILITY:
                raise DetectionError(
                    f"peak detection probability per sample {pmax:.3g} >= {MAX_THINNING_PROBABILITY}; "
                    "lower mean_rate_hz or dt_ns"
                )
            hits = []
            for b in _rng.block_span(start, stop):
                lo, hi = max(start, b * B), min(stop, (b + 1) * B)
                u = self._uniforms(b)[lo - b * B : hi - b * B]
                hits.append(lo + np.flatnonzero(u < p[lo - start : hi - start]))
            idx = np.concatenate(hits)
            signal = self._quantize(idx * self.dt_ns)
        if self.params.dark_rate_hz > 0 and stop > start:
            dark = []
            for b in _rng.block_span(start, stop):
                pos = self._dark_positions(b)
                dark.append(pos[(pos >= start) & (pos < stop) & (pos < self.n_samples)])
            dark = np.concatenate(dark)
            self.n_dark += len(dark)
            events = np.sort(np.concatenate([signal, self._quantize(dark * self.dt_ns)]), kind="stable")
        else:
            events = signal
        if len(events) == 0:
            return events
        if self.params.dead_time_ps == 0:
            prev = np.concatenate([[self._last], events[:-1]])
            events = events[events > prev]
            self._last = int(events[-1]) if len(events) else self._last
            return events
        keep, self._last = _dead_time_filter(events, self.params.dead_time_ps, self._last)
        return events[keep]

    def stream(self, events: np.ndarray) -> TimestampStream:
        return TimestampStream(
            events,
            self.duration_ns,
            self.params.detector_id,
            self.params.timestamp_resolution_ns,
            {"seed": self.params.seed},
        )


def detect(trace: FieldTrace, params: DetectorParams, reference_intensity: float | None = None) -> TimestampStream:
    """Photodetection events of one detector watching ``trace``.

    Times are measured from the first sample of the trace. The rate is
    normalized to the trace's own mean intensity unless ``reference_intensity``
    is given.
    """
    I = trace.intensity
    if reference_intensity is None:
        reference_intensity = float(I.mean())
    if params.mean_rate_hz > 0 and not reference_intensity > 0:
        raise DetectionError("trace carries no light; cannot normalize the detection rate")
    det = DetectorStream(params, trace.dt_ns, len(trace), reference_intensity or 1.0)
    return det.stream(det.process(I))


def split_detection(trace: FieldTrace, params: list, reference_intensity: float | None = None) -> list:
    """Several detectors behind an ideal splitter on the same trace (independent seeds)."""
    return [detect(trace, p, reference_intensity) for p in params]


def write_timestamps(path, stream: TimestampStream, fmt: str = "binary", unit_ns: float | None = None) -> Path:
    """Write events plus a JSON sidecar ``<path>.json``.

    ``binary``: little-endian uint64, no header, in units of ``unit_ns``
    (default 1 ns, or 1 ps when the grid is finer than a nanosecond).
    ``csv``: one integer per line in the same units.
    """
    path = Path(path)
    if unit_ns is None:
        unit_ns = 1.0 if stream.resolution_ns >= 1 and np.all(stream.events_ps % PS_PER_NS == 0) else 0.001
    unit_ps = int(round(unit_ns * PS_PER_NS))
    if np.any(stream.events_ps % unit_ps):
        raise DetectionError(f"events are not representable in units of {unit_ns} ns")
    if np.any(stream.events_ps < 0):
        raise DetectionError("negative timestamps cannot be stored as uint64")
    ticks = (stream.events_ps // unit_ps).astype("<u8")
    if fmt == "binary":
        path.write_bytes(ticks.tobytes())
    elif fmt == "csv":
        with open(path, "w") as fh:
            np.savetxt(fh, ticks, fmt="%d")
    else:
        raise DetectionError(f"unknown timestamp format {fmt!r}")
    meta = {
        "duration_ns": stream.duration_ns,
        "resolution_ns": stream.resolution_ns,
        "detector_id": stream.detector_id,
        "seed": stream.meta.get("seed"),
        "unit_ns": unit_ns,
        "format": fmt,
        "count": len(stream),
    }
    Path(str(path) + ".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return path


def read_timestamps(path, mmap: bool = False) -> TimestampStream:
    path = Path(path)
    sidecar = Path(str(path) + ".json")
    if not path.exists():
        raise FileNotFoundError(f"timestamp file not found: {path}")
    if not sidecar.exists():
        raise FileNotFoundError(f"timestamp metadata sidecar not found: {sidecar}")
    meta = json.loads(sidecar.read_text())
    unit_ps = int(round(meta.get("unit_ns", 1.0) * PS_PER_NS))
    if meta.get("format", "binary") == "csv":
        ticks = np.loadtxt(path, dtype=np.uint64, ndmin=1)
    elif mmap and path.stat().st_size:
        ticks = np.memmap(path, dtype="<u8", mode="r")
    else:
        ticks = np.fromfile(path, dtype="<u8")
    events = ticks.astype(np.int64) * unit_ps
    return TimestampStream(
        events,
        float(meta["duration_ns"]),
        int(meta.get("detector_id", 0)),
        float(meta.get("resolution_ns", 1.0)),
        {"seed": meta.get("seed")},
    )
