"""Closed-form bunching prediction, delay-set validation and power budget."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .cascade import CascadeSpec, subset_sums

MAX_SUBSET_STAGES = 24


class TheoryError(ValueError):
    pass


@dataclass(frozen=True)
class TheoryParams:
    n_stages: int
    tau_c_ns: float
    delays_ns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "delays_ns", tuple(float(d) for d in self.delays_ns))
        if self.n_stages < 0:
            raise TheoryError("n_stages must be >= 0")
        if not self.tau_c_ns > 0:
            raise TheoryError("tau_c_ns must be > 0")
        if self.delays_ns and len(self.delays_ns) != self.n_stages:
            raise TheoryError(f"expected {self.n_stages} delays, got {len(self.delays_ns)}")


def bunching_amplitude(n_stages: int) -> float:
    """g2(0) - 1 for 2**n equal, phase-independent copies."""
    return 1.0 - 2.0 ** (-n_stages)


def predict_g2(params: TheoryParams, tau_ns):
    out = 1.0 + bunching_amplitude(params.n_stages) * np.exp(-2.0 * np.abs(tau_ns) / params.tau_c_ns)
    return float(out) if np.ndim(out) == 0 else out


@dataclass
class ValidationReport:
    tau_c_ns: float
    successive_ok: bool
    successive_margin_ns: float
    successive_violations: list
    subset_ok: bool
    min_subset_gap_ns: float
    subset_margin_ns: float
    subset_violations: list
    degenerate_pairs: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.successive_ok and self.subset_ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def validate_delays(params: TheoryParams) -> ValidationReport:
    """Check (a) consecutive delay steps >= tau_c and (b) every pair of subset sums >= tau_c apart.

    (b) is what makes all ``2**n`` delayed copies mutually phase independent;
    (a) alone does not imply it (e.g. delays 1, 2, 3 tau_c give 1 + 2 = 3).
    """
    delays = list(params.delays_ns)
    n = len(delays)
    if any(d <= 0 for d in delays):
        raise TheoryError("delays must be positive")
    if n > MAX_SUBSET_STAGES:
        raise TheoryError(f"subset enumeration is capped at {MAX_SUBSET_STAGES} stages, got {n}")
    tc = params.tau_c_ns

    steps = []
    prev = 0.0
    for i, d in enumerate(delays):
        steps.append((i, d - prev))
        prev = d
    s_viol = [{"stage": i + 1, "step_ns": step, "margin_ns": step - tc} for i, step in steps if step < tc]
    s_margin = min((step - tc for _, step in steps), default=math.inf)

    sums = sorted(subset_sums(delays), key=lambda x: x[0])
    b_viol = []
    degenerate = []
    gaps = []
    for (s1, c1), (s2, c2) in zip(sums, sums[1:]):
        gaps.append(s2 - s1)
    min_gap = min(gaps, default=math.inf)
    if n:
        # report every pair closer than tau_c, not only neighbours in sorted order
        values = np.array([s for s, _ in sums])
        for i in range(len(sums)):
            j = i + 1
            while j < len(sums) and values[j] - values[i] < tc:
                pair = {
                    "subset_a": [k + 1 for k in sums[i][1]],
                    "subset_b": [k + 1 for k in sums[j][1]],
                    "gap_ns": float(values[j] - values[i]),
                }
                b_viol.append(pair)
                if values[j] == values[i]:
                    degenerate.append(pair)
                j += 1
    return ValidationReport(
        tau_c_ns=tc,
        successive_ok=not s_viol,
        successive_margin_ns=float(s_margin),
        successive_violations=s_viol,
        subset_ok=not b_viol,
        min_subset_gap_ns=float(min_gap),
        subset_margin_ns=float(min_gap - tc),
        subset_violations=b_viol,
        degenerate_pairs=degenerate,
    )


@dataclass
class ConversionReport:
    stage_efficiency: list
    cumulative_efficiency: list
    visibility: list
    balanced: list
    total_efficiency: float
    topology: str = "shared"

    def to_dict(self) -> dict:
        return asdict(self)


def stage_visibility(t_short: float, t_delayed: float) -> float:
    """Interference visibility 2 t_s t_d / (t_s^2 + t_d^2) for amplitude transmissions."""
    denom = t_short**2 + t_delayed**2
    return 2.0 * t_short * t_delayed / denom if denom else 0.0


def power_budget(cascade: CascadeSpec) -> ConversionReport:
    """Fraction of the input power leaving both final output ports.

    A stage passes ``(t_s^2 + t_d^2) / 2`` of its power on average, which is
    ``t_d^2`` once the short arm is attenuated to match the delay fiber. In
    the ``chain`` topology every non-final stage also discards one port.
    """
    eff, cum, vis, bal = [], [], [], []
    total = 1.0
    for i, s in enumerate(cascade.stages):
        ts, td = s.short_arm_amplitude_transmission, s.delayed_arm_amplitude_transmission
        e = td * td if ts == td else 0.5 * (ts * ts + td * td)
        if cascade.topology == "chain" and i < cascade.n - 1:
            e *= 0.5
        total *= e
        eff.append(e)
        cum.append(total)
        vis.append(1.0 if ts == td else stage_visibility(ts, td))
        bal.append(ts == td)
    return ConversionReport(eff, cum, vis, bal, total, cascade.topology)
