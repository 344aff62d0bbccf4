"""g2(tau) estimators: two-detector timestamp histogram and intensity oracle.

Histogram bins are centred on integer multiples of the bin width ``w``; the
bin with index ``k`` holds pair differences ``t_b - t_a`` in
``[(k - 1/2) w, (k + 1/2) w)``. Cross-correlation normalization::

    g2[k] = counts[k] * (T - W) / (N_a * N_b * w)

with ``T`` the acquisition time and ``W`` the one-sided tau window (edge
correction for pairs lost at the ends of the acquisition).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numba
import numpy as np

from .detect import PS_PER_NS, TimestampStream
from .fieldgen import FieldTrace

MIN_WINDOW_BINS = 10


class CorrelationError(ValueError):
    pass


@dataclass
class CorrelationHistogram:
    bin_width_ns: float
    tau_min_ns: float
    tau_max_ns: float
    counts: np.ndarray
    g2: np.ndarray
    stderr: np.ndarray
    total_pairs: int
    rates_hz: tuple = (0.0, 0.0)
    duration_ns: float = 0.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.counts = np.asarray(self.counts)
        self.g2 = np.asarray(self.g2, dtype=float)
        self.stderr = np.asarray(self.stderr, dtype=float)

    def __len__(self):
        return len(self.g2)

    @property
    def taus_ns(self) -> np.ndarray:
        return self.tau_min_ns + self.bin_width_ns * np.arange(len(self.g2))

    @property
    def degenerate(self) -> bool:
        return bool(self.meta.get("degenerate", False))

    def scaled(self, k: float) -> "CorrelationHistogram":
        """Counts times ``k``; g2 is unchanged and its stderr shrinks by sqrt(k)."""
        return CorrelationHistogram(
            self.bin_width_ns, self.tau_min_ns, self.tau_max_ns, self.counts * k, self.g2.copy(),
            self.stderr / math.sqrt(k), int(self.total_pairs * k), self.rates_hz, self.duration_ns,
            dict(self.meta),
        )


def _bin_layout(bin_width_ns: float, tau_window_ns: float, resolution_ns: float = 0.0) -> tuple[int, int]:
    if not bin_width_ns > 0:
        raise CorrelationError("bin width must be > 0")
    if bin_width_ns + 1e-12 < resolution_ns:
        raise CorrelationError(f"bin width {bin_width_ns} ns is finer than the timestamp resolution {resolution_ns} ns")
    w_ps = bin_width_ns * PS_PER_NS
    if abs(w_ps - round(w_ps)) > 1e-6:
        raise CorrelationError("bin width must be a whole number of picoseconds")
    K = int(round(tau_window_ns / bin_width_ns))
    if K < MIN_WINDOW_BINS:
        raise CorrelationError(f"tau window must span at least {MIN_WINDOW_BINS} bins")
    return int(round(w_ps)), K


@numba.njit(cache=True)
def _sweep(a, b, w, K, counts, j0):
    """Two-pointer sweep adding every pair with bin index in [-K, K] to ``counts``."""
    nb = len(b)
    edge = (2 * K + 1) * w
    for i in range(len(a)):
        ta = a[i]
        while j0 < nb and 2 * (b[j0] - ta) < -edge:
            j0 += 1
        j = j0
        while j < nb:
            d2 = 2 * (b[j] - ta)
            if d2 >= edge:
                break
            counts[(d2 + w) // (2 * w) + K] += 1
            j += 1
    return j0


def pair_counts(a_ps: np.ndarray, b_ps: np.ndarray, w_ps: int, K: int, partitions: int = 1) -> np.ndarray:
    """Pair-difference counts for bins -K..K, optionally over time partitions of ``a``."""
    a_ps = np.ascontiguousarray(a_ps, dtype=np.int64)
    b_ps = np.ascontiguousarray(b_ps, dtype=np.int64)
    total = np.zeros(2 * K + 1, dtype=np.int64)
    if len(a_ps) == 0 or len(b_ps) == 0:
        return total
    edges = np.linspace(0, len(a_ps), max(1, partitions) + 1).astype(np.int64)
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi <= lo:
            continue
        part = np.zeros_like(total)
        _sweep(a_ps[lo:hi], b_ps, w_ps, K, part, 0)
        total += part
    return total


def _check_sorted(events: np.ndarray, name: str) -> None:
    if len(events) > 1 and np.any(np.diff(events) < 0):
        raise CorrelationError(f"stream {name} is not sorted")


def normalize_counts(
    counts: np.ndarray, bin_width_ns: float, tau_window_ns: float, n_a: int, n_b: int, duration_ns: float
) -> tuple[np.ndarray, np.ndarray, dict]:
    K = (len(counts) - 1) // 2
    t_eff = duration_ns - tau_window_ns
    meta = {"n_a": int(n_a), "n_b": int(n_b), "effective_duration_ns": t_eff, "degenerate": False}
    if n_a == 0 or n_b == 0 or t_eff <= 0:
        meta["degenerate"] = True
        zeros = np.zeros(2 * K + 1)
        return zeros, zeros.copy(), meta
    norm = t_eff / (n_a * n_b * bin_width_ns)
    g2 = counts * norm
    # empty bins get the one-count error so they keep a finite weight
    stderr = np.where(counts > 0, g2 / np.sqrt(np.maximum(counts, 1)), norm)
    meta["normalization"] = norm
    return g2, stderr, meta


def cross_correlate(
    a: TimestampStream,
    b: TimestampStream,
    bin_width_ns: float = 2.0,
    tau_window_ns: float = 1000.0,
    partitions: int = 1,
) -> CorrelationHistogram:
    """Histogram of ``t_b - t_a`` within +-tau_window, normalized to g2."""
    resolution = max(a.resolution_ns, b.resolution_ns)
    w_ps, K = _bin_layout(bin_width_ns, tau_window_ns, resolution)
    _check_sorted(a.events_ps, "a")
    _check_sorted(b.events_ps, "b")
    counts = pair_counts(a.events_ps, b.events_ps, w_ps, K, partitions)
    duration = min(a.duration_ns, b.duration_ns)
    g2, stderr, meta = normalize_counts(counts, bin_width_ns, tau_window_ns, len(a), len(b), duration)
    meta["tau_window_ns"] = tau_window_ns
    return CorrelationHistogram(
        bin_width_ns=bin_width_ns,
        tau_min_ns=-K * bin_width_ns,
        tau_max_ns=K * bin_width_ns,
        counts=counts,
        g2=g2,
        stderr=stderr,
        total_pairs=int(counts.sum()),
        rates_hz=(a.rate_hz if a.duration_ns else 0.0, b.rate_hz if b.duration_ns else 0.0),
        duration_ns=duration,
        meta=meta,
    )


def intensity_g2_oracle(
    trace: FieldTrace, max_lag_ns: float, other: FieldTrace | None = None, n_batches: int = 16
) -> CorrelationHistogram:
    """Ground-truth g2 from lagged intensity products, lags -L..L in steps of dt.

    ``g2(k dt) = <I_1(t) I_2(t + k dt)> / (<I_1> <I_2>)`` over the overlap of
    the two shifted series. With ``other=None`` the trace is correlated with
    itself. Errors come from the spread of ``n_batches`` contiguous batches.
    """
    dt = trace.dt_ns
    if max_lag_ns >= trace.duration_ns / 10:
        raise CorrelationError(f"max lag {max_lag_ns} ns must be below a tenth of the trace ({trace.duration_ns} ns)")
    if other is not None and (other.dt_ns != dt or len(other) != len(trace)):
        raise CorrelationError("oracle traces must share dt and length")
    I1 = trace.intensity
    I2 = I1 if other is None else other.intensity
    n = len(I1)
    L = int(math.floor(max_lag_ns / dt + 1e-9))
    lags = np.arange(-L, L + 1)
    g2 = np.empty(len(lags))
    err = np.empty(len(lags))
    counts = np.empty(len(lags), dtype=np.int64)
    for i, k in enumerate(lags):
        if k >= 0:
            x, y = I1[: n - k], I2[k:]
        else:
            x, y = I1[-k:], I2[: n + k]
        m = len(x)
        counts[i] = m
        g2[i] = np.dot(x, y) / m / (x.mean() * y.mean())
        nb = n_batches
        size = m // nb
        xb = x[: nb * size].reshape(nb, size)
        yb = y[: nb * size].reshape(nb, size)
        per = (xb * yb).mean(axis=1) / (xb.mean(axis=1) * yb.mean(axis=1))
        err[i] = per.std(ddof=1) / math.sqrt(nb)
    return CorrelationHistogram(
        bin_width_ns=dt,
        tau_min_ns=-L * dt,
        tau_max_ns=L * dt,
        counts=counts,
        g2=g2,
        stderr=err,
        total_pairs=int(counts.sum()),
        rates_hz=(float("nan"), float("nan")),
        duration_ns=trace.duration_ns,
        meta={"estimator": "intensity_oracle", "n_batches": n_batches},
    )


def fold(hist: CorrelationHistogram) -> CorrelationHistogram:
    """Combine bins at +tau and -tau into a one-sided histogram over |tau|."""
    K = (len(hist) - 1) // 2
    if hist.tau_min_ns != -hist.tau_max_ns or len(hist) != 2 * K + 1:
        raise CorrelationError("fold needs a histogram symmetric about tau = 0")
    c = np.asarray(hist.counts)
    counts = c[K:].copy()
    counts[1:] += c[K - 1 :: -1][: K]
    mult = np.full(K + 1, 2.0)
    mult[0] = 1.0
    norm = hist.meta.get("normalization")
    if norm is None:
        # no count normalization available (oracle): average g2 directly
        g2 = hist.g2[K:].copy()
        g2[1:] = 0.5 * (g2[1:] + hist.g2[K - 1 :: -1][:K])
        err = hist.stderr[K:].copy()
        err[1:] = 0.5 * np.hypot(err[1:], hist.stderr[K - 1 :: -1][:K])
    else:
        g2 = counts * norm / mult
        err = np.where(counts > 0, g2 / np.sqrt(np.maximum(counts, 1)), norm / mult)
    meta = dict(hist.meta, folded=True)
    return CorrelationHistogram(
        hist.bin_width_ns, 0.0, hist.tau_max_ns, counts, g2, err, hist.total_pairs, hist.rates_hz,
        hist.duration_ns, meta,
    )


_CSV_COLUMNS = "tau_ns,counts,g2,stderr"


def _fmt(x) -> str:
    return repr(float(x))


def write_histogram_csv(path, hist: CorrelationHistogram) -> Path:
    """CSV with one ``# {json}`` metadata header line, then tau_ns,counts,g2,stderr."""
    path = Path(path)
    header = {
        "bin_width_ns": hist.bin_width_ns,
        "tau_min_ns": hist.tau_min_ns,
        "tau_max_ns": hist.tau_max_ns,
        "total_pairs": int(hist.total_pairs),
        "rates_hz": [float(r) for r in hist.rates_hz],
        "duration_ns": hist.duration_ns,
        **{k: v for k, v in hist.meta.items() if isinstance(v, (int, float, str, bool))},
    }
    lines = ["# " + json.dumps(header, sort_keys=True), _CSV_COLUMNS]
    counts = np.asarray(hist.counts)
    integral = np.issubdtype(counts.dtype, np.integer)
    for tau, c, g, e in zip(hist.taus_ns, counts, hist.g2, hist.stderr):
        lines.append(f"{_fmt(tau)},{int(c) if integral else _fmt(c)},{_fmt(g)},{_fmt(e)}")
    path.write_text("\n".join(lines) + "\n")
    return path


def read_histogram_csv(path) -> CorrelationHistogram:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"histogram file not found: {path}")
    text = path.read_text().splitlines()
    if not text or not text[0].startswith("# ") or text[1] != _CSV_COLUMNS:
        raise CorrelationError(f"{path}: not a histogram CSV")
    header = json.loads(text[0][2:])
    data = np.loadtxt(text[2:], delimiter=",", ndmin=2)
    counts = data[:, 1]
    if np.all(counts == np.round(counts)):
        counts = counts.astype(np.int64)
    meta = {k: v for k, v in header.items() if k not in
            ("bin_width_ns", "tau_min_ns", "tau_max_ns", "total_pairs", "rates_hz", "duration_ns")}
    return CorrelationHistogram(
        bin_width_ns=header["bin_width_ns"],
        tau_min_ns=header["tau_min_ns"],
        tau_max_ns=header["tau_max_ns"],
        counts=counts,
        g2=data[:, 2],
        stderr=data[:, 3],
        total_pairs=header["total_pairs"],
        rates_hz=tuple(header["rates_hz"]),
        duration_ns=header["duration_ns"],
        meta=meta,
    )
