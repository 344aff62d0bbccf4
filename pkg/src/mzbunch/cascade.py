"""Cascaded asymmetric Mach-Zehnder interferometers acting on a FieldTrace.

Beamsplitters use the real Hadamard convention::

    out1 = (in1 + in2) / sqrt(2)
    out2 = (in1 - in2) / sqrt(2)

Between two beamsplitters the second path is delayed by an integer number of
samples, attenuated, rotated in polarization and phase shifted; the first
(short) path is only attenuated.

Two topologies are supported:

``shared``
    consecutive interferometers share a beamsplitter: both outputs of stage k
    enter the two arms of stage k+1. Tap amplitudes are ``2**(-(n+1)/2)`` and
    lossless stages conserve the total power of both output ports.
``chain``
    one output port of stage k enters a full interferometer (two
    beamsplitters) as stage k+1, with vacuum on the other input.

Both yield ``2**n`` delayed copies at every subset sum of the delays.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field

import numba
import numpy as np

from .fieldgen import SPEED_OF_LIGHT_M_PER_NS, FieldTrace, intensity

INV_SQRT2 = 1.0 / math.sqrt(2.0)
_IDENTITY = ((1.0 + 0j, 0j), (0j, 1.0 + 0j))
TOPOLOGIES = ("shared", "chain")


class CascadeError(ValueError):
    pass


def delay_from_fiber(length_m: float, group_index: float) -> float:
    """Propagation delay in ns of a fiber of ``length_m`` with ``group_index``."""
    if not length_m > 0:
        raise CascadeError(f"fiber length must be > 0, got {length_m}")
    if not group_index >= 1:
        raise CascadeError(f"group index must be >= 1, got {group_index}")
    return length_m * group_index / SPEED_OF_LIGHT_M_PER_NS


def polarization_rotation(theta_rad: float) -> tuple:
    """Real rotation of the Jones vector by ``theta_rad``."""
    c, s = math.cos(theta_rad), math.sin(theta_rad)
    return ((complex(c), complex(-s)), (complex(s), complex(c)))


@dataclass(frozen=True)
class StageSpec:
    delay_ns: float
    short_arm_amplitude_transmission: float = 1.0
    delayed_arm_amplitude_transmission: float = 1.0
    static_phase_rad: float = 0.0
    delayed_arm_polarization_rotation: tuple = _IDENTITY

    def __post_init__(self):
        if not self.delay_ns > 0:
            raise CascadeError(f"delay_ns must be > 0, got {self.delay_ns}")
        for name in ("short_arm_amplitude_transmission", "delayed_arm_amplitude_transmission"):
            t = getattr(self, name)
            if not 0.0 <= t <= 1.0:
                raise CascadeError(f"{name} must lie in [0, 1], got {t}")
        rot = np.asarray(self.delayed_arm_polarization_rotation, dtype=complex)
        if rot.shape != (2, 2):
            raise CascadeError("polarization rotation must be 2x2")
        if np.abs(rot @ rot.conj().T - np.eye(2)).max() > 1e-10:
            raise CascadeError("polarization rotation is not unitary")
        object.__setattr__(
            self, "delayed_arm_polarization_rotation", tuple(tuple(complex(x) for x in row) for row in rot)
        )

    @classmethod
    def from_fiber(cls, length_m: float, group_index: float, **kwargs) -> "StageSpec":
        return cls(delay_ns=delay_from_fiber(length_m, group_index), **kwargs)

    @property
    def rotation(self) -> np.ndarray:
        return np.asarray(self.delayed_arm_polarization_rotation, dtype=complex)

    @property
    def rotation_is_identity(self) -> bool:
        return self.delayed_arm_polarization_rotation == _IDENTITY

    def delay_samples(self, dt_ns: float) -> tuple[int, float]:
        """Delay rounded to whole samples and the rounding error in ns."""
        k = int(round(self.delay_ns / dt_ns))
        if k < 1:
            raise CascadeError(f"delay {self.delay_ns} ns is shorter than the sample spacing {dt_ns} ns")
        return k, k * dt_ns - self.delay_ns


@dataclass(frozen=True)
class CascadeSpec:
    stages: tuple = ()
    topology: str = "shared"
    input_port_of_next_stage: str = "B"

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if self.topology not in TOPOLOGIES:
            raise CascadeError(f"unknown topology {self.topology!r}; expected one of {TOPOLOGIES}")
        if self.input_port_of_next_stage not in ("A", "B"):
            raise CascadeError("input_port_of_next_stage must be 'A' or 'B'")
        delays = [s.delay_ns for s in self.stages]
        if any(b <= a for a, b in zip(delays, delays[1:])):
            warnings.warn("stage delays are not strictly increasing", stacklevel=3)

    @property
    def n(self) -> int:
        return len(self.stages)

    @property
    def delays_ns(self) -> list[float]:
        return [s.delay_ns for s in self.stages]

    def delay_samples(self, dt_ns: float) -> list[int]:
        return [s.delay_samples(dt_ns)[0] for s in self.stages]


@dataclass
class CascadeReport:
    topology: str
    dt_ns: float
    requested_delays_ns: list
    realized_delays_ns: list
    delay_samples: list
    rounding_errors_ns: list
    stage_output_powers: list = field(default_factory=list)
    input_power: float = float("nan")

    def to_dict(self) -> dict:
        return {
            "topology": self.topology,
            "dt_ns": self.dt_ns,
            "requested_delays_ns": list(self.requested_delays_ns),
            "realized_delays_ns": list(self.realized_delays_ns),
            "delay_samples": list(self.delay_samples),
            "rounding_errors_ns": list(self.rounding_errors_ns),
            "input_power": self.input_power,
            "stage_output_powers": [list(p) for p in self.stage_output_powers],
        }


def _split(a: np.ndarray, b: np.ndarray | None) -> tuple[np.ndarray, np.ndarray]:
    if b is None:
        u = a * INV_SQRT2
        return u, u
    return (a + b) * INV_SQRT2, (a - b) * INV_SQRT2


@numba.njit(cache=True)
def _recombine_kernel(short, delayed, ts, gain, rot, rotate):
    n = short.shape[0]
    out_a = np.empty((n, 2), dtype=np.complex128)
    out_b = np.empty((n, 2), dtype=np.complex128)
    for i in range(n):
        d0 = delayed[i, 0]
        d1 = delayed[i, 1]
        if rotate:
            d0, d1 = rot[0, 0] * d0 + rot[0, 1] * d1, rot[1, 0] * d0 + rot[1, 1] * d1
        d0 = d0 * gain
        d1 = d1 * gain
        s0 = short[i, 0] * ts
        s1 = short[i, 1] * ts
        out_a[i, 0] = (s0 + d0) * INV_SQRT2
        out_a[i, 1] = (s1 + d1) * INV_SQRT2
        out_b[i, 0] = (s0 - d0) * INV_SQRT2
        out_b[i, 1] = (s1 - d1) * INV_SQRT2
    return out_a, out_b


def _recombine(short: np.ndarray, delayed: np.ndarray, stage: StageSpec) -> tuple[np.ndarray, np.ndarray]:
    """Arm transforms followed by the closing beamsplitter (arrays already aligned)."""
    gain = stage.delayed_arm_amplitude_transmission * complex(
        math.cos(stage.static_phase_rad), math.sin(stage.static_phase_rad)
    )
    return _recombine_kernel(
        np.ascontiguousarray(short), np.ascontiguousarray(delayed),
        float(stage.short_arm_amplitude_transmission), gain, stage.rotation, not stage.rotation_is_identity,
    )


def _check_pair(input_A: FieldTrace, input_B: FieldTrace | None) -> None:
    if input_B is None:
        return
    if input_A.dt_ns != input_B.dt_ns:
        raise CascadeError(f"mismatched dt: {input_A.dt_ns} vs {input_B.dt_ns}")
    if len(input_A) != len(input_B) or input_A.t0_ns != input_B.t0_ns:
        raise CascadeError("input traces are not aligned")


def _interfere(u: np.ndarray, v: np.ndarray, k: int, stage: StageSpec) -> tuple[np.ndarray, np.ndarray]:
    if k >= len(u):
        raise CascadeError(f"delay of {k} samples is longer than the trace ({len(u)} samples)")
    return _recombine(u[k:], v[: len(v) - k], stage)


def apply_stage(
    input_A: FieldTrace, input_B: FieldTrace | None, stage: StageSpec
) -> tuple[FieldTrace, FieldTrace]:
    """One full interferometer: beamsplitter, delay line, beamsplitter.

    ``input_B=None`` means vacuum. Outputs cover only the samples where both
    arms are defined, so they are ``delay_samples`` shorter than the input.
    """
    _check_pair(input_A, input_B)
    k, err = stage.delay_samples(input_A.dt_ns)
    u, v = _split(input_A.samples, None if input_B is None else input_B.samples)
    a, b = _interfere(u, v, k, stage)
    t0 = input_A.t0_ns + k * input_A.dt_ns
    meta = {"delay_samples": k, "rounding_error_ns": err}
    return FieldTrace(input_A.dt_ns, a, t0, dict(meta)), FieldTrace(input_A.dt_ns, b, t0, dict(meta))


def _report(cascade: CascadeSpec, dt_ns: float) -> CascadeReport:
    ks, errs = zip(*(s.delay_samples(dt_ns) for s in cascade.stages)) if cascade.n else ((), ())
    return CascadeReport(
        topology=cascade.topology,
        dt_ns=dt_ns,
        requested_delays_ns=cascade.delays_ns,
        realized_delays_ns=[k * dt_ns for k in ks],
        delay_samples=list(ks),
        rounding_errors_ns=list(errs),
    )


def run_cascade(trace: FieldTrace, cascade: CascadeSpec) -> tuple[FieldTrace, FieldTrace, CascadeReport]:
    """Propagate ``trace`` through every stage; returns output ports A_n, B_n and a report."""
    dt = trace.dt_ns
    report = _report(cascade, dt)
    report.input_power = trace.mean_intensity()
    if cascade.n == 0:
        return trace, FieldTrace.vacuum_like(trace), report
    total = sum(report.delay_samples)
    if total * dt >= trace.duration_ns / 2:
        raise CascadeError(
            f"accumulated delay {total * dt} ns needs a trace longer than {2 * total * dt} ns"
        )

    if cascade.topology == "shared":
        u, v = _split(trace.samples, None)
        for stage, k in zip(cascade.stages, report.delay_samples):
            u, v = _interfere(u, v, k, stage)
            report.stage_output_powers.append((intensity(u).mean(), intensity(v).mean()))
        t0 = trace.t0_ns + total * dt
        return FieldTrace(dt, u, t0), FieldTrace(dt, v, t0), report

    current = trace
    for stage in cascade.stages:
        a, b = apply_stage(current, None, stage)
        report.stage_output_powers.append((a.mean_intensity(), b.mean_intensity()))
        current = b if cascade.input_port_of_next_stage == "B" else a
    return a, b, report


class CascadeStream:
    """Chunked evaluation of ``run_cascade``.

    Each stage keeps the last ``delay_samples`` of its delayed-arm input as a
    history buffer. Chunks must arrive in time order; concatenating the
    outputs reproduces ``run_cascade`` bit for bit.
    """

    def __init__(self, cascade: CascadeSpec, dt_ns: float):
        self.cascade = cascade
        self.dt_ns = dt_ns
        self.report = _report(cascade, dt_ns)
        self._ks = self.report.delay_samples
        self._hist = [np.zeros((0, 2), dtype=complex) for _ in self._ks]
        self._seen = [0 for _ in self._ks]
        self.total_delay_samples = sum(self._ks)

    def process(self, chunk: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Feed input samples; returns the newly completed (A, B) output samples."""
        if not self._ks:
            return chunk, np.zeros_like(chunk)
        if self.cascade.topology == "shared":
            u, v = _split(chunk, None)
            for i, stage in enumerate(self.cascade.stages):
                u, v = self._stage(i, u, v, stage)
            return u, v
        x = chunk
        for i, stage in enumerate(self.cascade.stages):
            u, v = _split(x, None)
            a, b = self._stage(i, u, v, stage)
            x = b if self.cascade.input_port_of_next_stage == "B" else a
        return a, b

    def _stage(self, i, u, v, stage):
        k = self._ks[i]
        g0 = self._seen[i]
        m = len(u)
        hist = self._hist[i]
        v_ext = np.concatenate([hist, v]) if len(hist) else v
        first = max(g0, k)
        count = max(0, g0 + m - first)
        pos = first - k - (g0 - len(hist))
        short = u[first - g0 : first - g0 + count]
        delayed = v_ext[pos : pos + count]
        self._hist[i] = v_ext[-k:].copy() if len(v_ext) >= k else v_ext.copy()
        self._seen[i] = g0 + m
        return _recombine(short, delayed, stage)


def impulse_response(cascade: CascadeSpec, dt_ns: float, jones=(1.0, 0.0)) -> tuple[dict, dict]:
    """Nonzero taps ``{lag_samples: Jones amplitude}`` of output ports A and B."""
    ks = cascade.delay_samples(dt_ns)
    total = sum(ks)
    n = 2 * total + 1
    samples = np.zeros((n, 2), dtype=complex)
    samples[total] = np.asarray(jones, dtype=complex)
    if cascade.n == 0:
        return {0: samples[total].copy()}, {}
    stream = CascadeStream(cascade, dt_ns)
    a, b = stream.process(samples)
    # output index j holds input sample total + j - lag, so the impulse shows at j = lag
    taps = []
    for port in (a, b):
        nz = np.flatnonzero(np.abs(port).sum(axis=1) > 1e-15)
        taps.append({int(j): port[j].copy() for j in nz})
    return taps[0], taps[1]


def subset_sums(values) -> list:
    """All 2**n subset sums, each tagged with the subset that produced it."""
    out = []
    for r in range(len(values) + 1):
        for combo in itertools.combinations(range(len(values)), r):
            out.append((sum(values[i] for i in combo), combo))
    return out


def expected_port_power(cascade: CascadeSpec, dt_ns: float, jones=(1.0, 0.0), port: str = "A") -> float:
    """Ensemble-mean output power per unit input power, assuming phase-independent copies."""
    a, b = impulse_response(cascade, dt_ns, jones)
    taps = a if port == "A" else b
    return float(sum(np.vdot(t, t).real for t in taps.values()))
