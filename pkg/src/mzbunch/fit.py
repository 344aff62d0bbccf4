"""Weighted damped Gauss-Newton (Levenberg-Marquardt) fit of the bunching peak.

Model: ``g2(tau) = c + b * exp(-2 |tau| / tau_c)`` with the baseline ``c``
fixed at 1 unless ``free_baseline`` is set.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .correlate import CorrelationHistogram

MIN_BINS = 20
XTOL = 1e-9
MAX_ITER = 200
LAMBDA0 = 1e-3
LAMBDA_FACTOR = 10.0
LAMBDA_MAX = 1e16


class FitError(ValueError):
    pass


@dataclass
class FitResult:
    b: float
    tau_c_ns: float
    b_err: float
    tau_c_err: float
    reduced_chi2: float
    converged: bool
    iterations: int
    baseline: float = 1.0
    baseline_err: float = 0.0
    bunching_detected: bool = True
    flags: list = field(default_factory=list)
    gradient_norm: float = 0.0

    @property
    def g2_zero(self) -> float:
        return self.baseline + self.b

    def to_dict(self) -> dict:
        d = asdict(self)
        d["g2_zero"] = self.g2_zero
        return d


def bunching_model(tau_ns, b: float, tau_c_ns: float, baseline: float = 1.0):
    return baseline + b * np.exp(-2.0 * np.abs(tau_ns) / tau_c_ns)


def _jacobian(tau, params, free_baseline):
    b, tc = params[0], params[1]
    e = np.exp(-2.0 * np.abs(tau) / tc)
    cols = [e, b * e * 2.0 * np.abs(tau) / tc**2]
    if free_baseline:
        cols.append(np.ones_like(tau))
    return np.column_stack(cols)


def _model(tau, params, free_baseline):
    c = params[2] if free_baseline else 1.0
    return bunching_model(tau, params[0], params[1], c)


def initial_guess(tau: np.ndarray, g2: np.ndarray) -> tuple[float, float]:
    """b0 from the peak excess; tau_c0 from where the excess first drops below b0 / e^2."""
    i = int(np.argmax(g2))
    b0 = float(g2[i] - 1.0)
    target = b0 * math.exp(-2.0)
    order = np.argsort(np.abs(tau - tau[i]))
    tc0 = None
    for j in order:
        if g2[j] - 1.0 <= target and tau[j] != tau[i]:
            tc0 = float(abs(tau[j] - tau[i]))
            break
    if not tc0:
        tc0 = float(np.ptp(tau)) / 6.0
    return b0, tc0


def fit_bunching(
    hist: CorrelationHistogram,
    exclude_zero_bin: bool = False,
    free_baseline: bool = False,
    max_iter: int = MAX_ITER,
    xtol: float = XTOL,
) -> FitResult:
    tau = hist.taus_ns
    g2 = np.asarray(hist.g2, dtype=float)
    err = np.asarray(hist.stderr, dtype=float)
    use = np.asarray(hist.counts) > 0
    if exclude_zero_bin:
        use &= np.abs(tau) > 0.5 * hist.bin_width_ns
    use &= err > 0
    if use.sum() < MIN_BINS:
        raise FitError(f"need at least {MIN_BINS} populated bins, got {int(use.sum())}")
    tau, g2, err = tau[use], g2[use], err[use]

    b0, tc0 = initial_guess(tau, g2)
    peak = int(np.argmax(g2))
    if b0 <= 3.0 * err[peak]:
        return FitResult(0.0, float("nan"), 0.0, 0.0, float(np.mean(((g2 - 1) / err) ** 2)), True, 0,
                         bunching_detected=False, flags=["no bunching detected"])

    w = 1.0 / err
    params = np.array([b0, tc0] + ([1.0] if free_baseline else []), dtype=float)
    r = (g2 - _model(tau, params, free_baseline)) * w
    cost = float(r @ r)
    lam = LAMBDA0
    converged = False
    polish = False
    flags = []
    it = 0
    for it in range(1, max_iter + 1):
        J = _jacobian(tau, params, free_baseline) * w[:, None]
        A = J.T @ J
        g = J.T @ r
        accepted = False
        while lam <= LAMBDA_MAX:
            # floor keeps the damping positive when b -> 0 flattens the tau_c column
            D = np.maximum(np.diag(A), 1e-12 * np.max(np.diag(A)))
            step = np.linalg.solve(A + lam * np.diag(D), g)
            trial = params + step
            if trial[1] <= 0:
                lam *= LAMBDA_FACTOR
                continue
            r_t = (g2 - _model(tau, trial, free_baseline)) * w
            cost_t = float(r_t @ r_t)
            # near the minimum the cost change is below roundoff; tolerate that much
            if cost_t <= cost * (1.0 + 1e-12):
                accepted = True
                break
            lam *= LAMBDA_FACTOR
        if not accepted:
            # no downhill step at any damping: at a minimum to machine precision
            converged = polish or np.linalg.norm(g) <= 1e-6 * max(1.0, cost)
            break
        rel = np.max(np.abs(step) / np.maximum(np.abs(trial), 1e-300))
        params, r, cost = trial, r_t, cost_t
        lam = max(lam / LAMBDA_FACTOR, 1e-12)
        if polish:
            break
        if rel < xtol:
            # one more step lands well below xtol, so rescaled inputs agree to ~1e-15
            converged = polish = True
    if not converged:
        flags.append("fit did not converge; returning best iterate")

    J = _jacobian(tau, params, free_baseline) * w[:, None]
    dof = max(1, len(tau) - len(params))
    red = cost / dof
    try:
        cov = np.linalg.inv(J.T @ J) * red
        perr = np.sqrt(np.clip(np.diag(cov), 0.0, None))
    except np.linalg.LinAlgError:
        perr = np.full(len(params), np.inf)
        flags.append("singular curvature matrix")
    if np.ptp(tau) / 2 < 3 * params[1] / 2:
        warnings.warn("histogram spans fewer than 3 decay times; tau_c may be biased", stacklevel=2)
        flags.append("short window")
    detected = params[0] > 3.0 * perr[0]
    if not detected:
        flags.append("no bunching detected")
    return FitResult(
        b=float(params[0]),
        tau_c_ns=float(params[1]),
        b_err=float(perr[0]),
        tau_c_err=float(perr[1]),
        reduced_chi2=float(red),
        converged=bool(converged),
        iterations=it,
        baseline=float(params[2]) if free_baseline else 1.0,
        baseline_err=float(perr[2]) if free_baseline else 0.0,
        bunching_detected=bool(detected),
        flags=flags,
        gradient_norm=float(np.linalg.norm(J.T @ r)),
    )


def model_histogram(
    b: float, tau_c_ns: float, bin_width_ns: float = 2.0, tau_window_ns: float = 1000.0,
    counts_at_baseline: float | None = None, rng: np.random.Generator | None = None,
) -> CorrelationHistogram:
    """Histogram following the bunching model exactly or, with ``counts_at_baseline``, Poisson-sampled."""
    K = int(round(tau_window_ns / bin_width_ns))
    tau = bin_width_ns * np.arange(-K, K + 1)
    g2 = bunching_model(tau, b, tau_c_ns)
    if counts_at_baseline is None:
        return CorrelationHistogram(bin_width_ns, -K * bin_width_ns, K * bin_width_ns, np.ones(2 * K + 1),
                                    g2, np.full(2 * K + 1, 1e-3), 2 * K + 1)
    rng = rng or np.random.default_rng()
    counts = rng.poisson(g2 * counts_at_baseline)
    norm = 1.0 / counts_at_baseline
    g2_hat = counts * norm
    err = np.where(counts > 0, g2_hat / np.sqrt(np.maximum(counts, 1)), norm)
    return CorrelationHistogram(bin_width_ns, -K * bin_width_ns, K * bin_width_ns, counts, g2_hat, err,
                                int(counts.sum()), meta={"normalization": norm})


def write_fit_report(path, result: FitResult, extra: dict | None = None) -> Path:
    path = Path(path)
    data = result.to_dict()
    if extra:
        data.update(extra)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return path
