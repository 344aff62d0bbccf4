"""Phase-diffusion laser field in the baseband (carrier removed).

The optical phase performs a discrete random walk with Gaussian increments of
variance ``2 dt / tau_c``. Averaged over the ensemble this gives
``<exp(i[phi(t+tau) - phi(t)])> = exp(-|tau| / tau_c)``, i.e. a Lorentzian line
whose first-order coherence decays with the coherence time ``tau_c``.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numba
import numpy as np

from . import rng as _rng

SPEED_OF_LIGHT_M_PER_NS = 0.299792458
DEFAULT_DT_CEILING = 1.0 / 20.0
MIN_DT_CEILING = 1.0 / 100.0


class FieldError(ValueError):
    pass


class ZeroAmplitudeError(FieldError):
    """Raised when a field of zero amplitude is requested."""


class CoarseSamplingError(FieldError):
    """Raised when the sample spacing is too coarse for the coherence time."""


@dataclass(frozen=True)
class LaserParams:
    mean_amplitude: float = 1.0
    coherence_time_ns: float = 135.0
    center_wavelength_nm: float = 780.0
    seed: int = 0
    polarization: tuple[complex, complex] = (1.0, 0.0)
    # zero-diffusion limit: constant phase, infinite coherence time
    coherent: bool = False

    def __post_init__(self):
        if not self.coherence_time_ns > 0:
            raise FieldError(f"coherence_time_ns must be > 0, got {self.coherence_time_ns}")
        if self.mean_amplitude < 0:
            raise FieldError(f"mean_amplitude must be >= 0, got {self.mean_amplitude}")
        if not self.center_wavelength_nm > 0:
            raise FieldError("center_wavelength_nm must be > 0")
        if not 0 <= self.seed < 2**64:
            raise FieldError("seed must be a 64-bit unsigned integer")
        pol = np.asarray(self.polarization, dtype=complex)
        if pol.shape != (2,) or abs(np.linalg.norm(pol) - 1.0) > 1e-12:
            raise FieldError(f"polarization must be a unit 2-vector, got {self.polarization}")

    @property
    def frequency_thz(self) -> float:
        return SPEED_OF_LIGHT_M_PER_NS * 1e3 / self.center_wavelength_nm

    @property
    def jones(self) -> np.ndarray:
        return np.asarray(self.polarization, dtype=complex)


@dataclass
class FieldTrace:
    """Uniformly sampled two-component complex field; ``samples`` has shape (N, 2)."""

    dt_ns: float
    samples: np.ndarray
    t0_ns: float = 0.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=complex)
        if self.samples.ndim != 2 or self.samples.shape[1] != 2:
            raise FieldError(f"samples must have shape (N, 2), got {self.samples.shape}")
        if len(self.samples) < 1:
            raise FieldError("a trace needs at least one sample")
        if not self.dt_ns > 0:
            raise FieldError("dt_ns must be > 0")

    def __len__(self):
        return len(self.samples)

    @property
    def duration_ns(self) -> float:
        return len(self.samples) * self.dt_ns

    @property
    def times_ns(self) -> np.ndarray:
        return self.t0_ns + self.dt_ns * np.arange(len(self.samples))

    @property
    def intensity(self) -> np.ndarray:
        """Total intensity summed over both polarization components."""
        return intensity(self.samples)

    def mean_intensity(self) -> float:
        return float(self.intensity.mean())

    @classmethod
    def vacuum_like(cls, other: "FieldTrace") -> "FieldTrace":
        return cls(other.dt_ns, np.zeros_like(other.samples), other.t0_ns)


@numba.njit(cache=True)
def _intensity(samples):
    out = np.empty(samples.shape[0])
    for i in range(samples.shape[0]):
        a = samples[i, 0]
        b = samples[i, 1]
        out[i] = a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag
    return out


def intensity(samples: np.ndarray) -> np.ndarray:
    return _intensity(np.ascontiguousarray(samples, dtype=np.complex128))


@numba.njit(cache=True)
def _phasors(phi, a0, a1):
    out = np.empty((phi.shape[0], 2), dtype=np.complex128)
    for i in range(phi.shape[0]):
        z = complex(math.cos(phi[i]), math.sin(phi[i]))
        out[i, 0] = a0 * z
        out[i, 1] = a1 * z
    return out


def check_sampling(params: LaserParams, dt_ns: float, dt_ceiling: float = DEFAULT_DT_CEILING) -> None:
    if not dt_ns > 0:
        raise FieldError("dt_ns must be > 0")
    if not MIN_DT_CEILING <= dt_ceiling <= DEFAULT_DT_CEILING:
        raise FieldError(f"dt_ceiling must lie in [1/100, 1/20], got {dt_ceiling}")
    if params.mean_amplitude == 0:
        raise ZeroAmplitudeError("mean_amplitude is zero; there is no field to generate")
    if not params.coherent and dt_ns > params.coherence_time_ns * dt_ceiling * (1 + 1e-12):
        raise CoarseSamplingError(
            f"dt_ns={dt_ns} exceeds coherence_time_ns*{dt_ceiling:g}="
            f"{params.coherence_time_ns * dt_ceiling:g}; lower dt_ns"
        )


class FieldGenerator:
    """Streams the laser field in arbitrary slices ``[start, stop)`` of sample indices.

    Increments come from counter-addressed RNG blocks, and the phase is
    accumulated block by block, so every slice is bit-identical to the same
    samples of a monolithic trace whatever the slicing.
    """

    def __init__(self, params: LaserParams, dt_ns: float, dt_ceiling: float = DEFAULT_DT_CEILING):
        check_sampling(params, dt_ns, dt_ceiling)
        self.params = params
        self.dt_ns = float(dt_ns)
        self.sigma = 0.0 if params.coherent else math.sqrt(2.0 * dt_ns / params.coherence_time_ns)
        phase0 = _rng.block_rng(params.seed, _rng.TAG_PHASE0, 0).uniform(0.0, 2.0 * math.pi)
        # phase of the sample preceding block b (for b = 0: the initial phase)
        self._block_start = {0: float(phase0)}
        self._amp = params.mean_amplitude * params.jones

    def _increments(self, block: int) -> np.ndarray:
        if self.sigma == 0.0:
            inc = np.zeros(_rng.BLOCK_SAMPLES)
        else:
            inc = self.sigma * _rng.block_rng(self.params.seed, _rng.TAG_PHASE, block).standard_normal(
                _rng.BLOCK_SAMPLES
            )
        if block == 0:
            inc[0] = 0.0
        return inc

    def _start_of(self, block: int) -> float:
        if block in self._block_start:
            return self._block_start[block]
        known = max(b for b in self._block_start if b < block)
        start = self._block_start[known]
        for b in range(known, block):
            start = (start + np.cumsum(self._increments(b)))[-1]
            self._block_start[b + 1] = float(start)
        return self._block_start[block]

    def block_phase(self, block: int) -> np.ndarray:
        phase = self._start_of(block) + np.cumsum(self._increments(block))
        self._block_start.setdefault(block + 1, float(phase[-1]))
        return phase

    def phase(self, start: int, stop: int) -> np.ndarray:
        B = _rng.BLOCK_SAMPLES
        blocks = _rng.block_span(start, stop)
        if len(blocks) == 0:
            return np.empty(0)
        phase = np.concatenate([self.block_phase(b) for b in blocks])
        offset = blocks[0] * B
        return phase[start - offset : stop - offset]

    def samples(self, start: int, stop: int) -> np.ndarray:
        phi = self.phase(start, stop)
        return _phasors(phi, complex(self._amp[0]), complex(self._amp[1]))

    def trace(self, start: int, stop: int) -> FieldTrace:
        return FieldTrace(self.dt_ns, self.samples(start, stop), t0_ns=start * self.dt_ns)


def generate_field(
    params: LaserParams, duration_ns: float, dt_ns: float, dt_ceiling: float = DEFAULT_DT_CEILING
) -> FieldTrace:
    """Sample ``round(duration_ns / dt_ns)`` points of the phase-diffusing laser field."""
    if not duration_ns > 0:
        raise FieldError(f"duration_ns must be > 0, got {duration_ns}")
    if not dt_ns > 0:
        raise FieldError("dt_ns must be > 0")
    if duration_ns < 100 * dt_ns:
        raise FieldError("duration_ns must cover at least 100 samples")
    n = int(round(duration_ns / dt_ns))
    return FieldGenerator(params, dt_ns, dt_ceiling).trace(0, n)


def empirical_g1(trace: FieldTrace, max_lag: int) -> np.ndarray:
    """Normalized field autocorrelation <E*(t).E(t+k dt)> / <|E|^2> for k = 0..max_lag."""
    e = trace.samples
    n = len(e)
    if max_lag >= n:
        raise FieldError("max_lag must be shorter than the trace")
    norm = intensity(e).mean()
    out = np.empty(max_lag + 1, dtype=complex)
    for k in range(max_lag + 1):
        out[k] = np.vdot(e[: n - k].ravel(), e[k:].ravel()) / (n - k)
    return out / norm


_DUMP_MAGIC = b"MZFT"
_DUMP_HEADER = struct.Struct("<4sddQ")


def write_trace(path, trace: FieldTrace) -> None:
    """Debug dump: header (magic, dt_ns, t0_ns, count) then float32 re/im pairs per component."""
    data = np.empty((len(trace), 4), dtype="<f4")
    data[:, 0] = trace.samples[:, 0].real
    data[:, 1] = trace.samples[:, 0].imag
    data[:, 2] = trace.samples[:, 1].real
    data[:, 3] = trace.samples[:, 1].imag
    with open(path, "wb") as fh:
        fh.write(_DUMP_HEADER.pack(_DUMP_MAGIC, trace.dt_ns, trace.t0_ns, len(trace)))
        fh.write(data.tobytes())


def read_trace(path) -> FieldTrace:
    raw = Path(path).read_bytes()
    magic, dt_ns, t0_ns, count = _DUMP_HEADER.unpack_from(raw)
    if magic != _DUMP_MAGIC:
        raise FieldError(f"{path}: not a field trace dump")
    data = np.frombuffer(raw, dtype="<f4", offset=_DUMP_HEADER.size).reshape(count, 4)
    samples = np.empty((count, 2), dtype=complex)
    samples[:, 0] = data[:, 0] + 1j * data[:, 1]
    samples[:, 1] = data[:, 2] + 1j * data[:, 3]
    return FieldTrace(dt_ns, samples, t0_ns)
