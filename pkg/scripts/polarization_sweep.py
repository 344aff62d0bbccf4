"""Bunching versus polarization mismatch between the two arms of one interferometer.

The interfering cross term scales with the Jones overlap cos(theta), so the
ideal excess falls as 0.5 cos^2(theta). Uses the intensity oracle directly on
a generated trace; no detectors involved.
"""
import argparse

import numpy as np

from mzbunch.cascade import CascadeSpec, StageSpec, polarization_rotation, run_cascade
from mzbunch.correlate import intensity_g2_oracle
from mzbunch.fieldgen import LaserParams, generate_field


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--duration-ns", type=float, default=2e7)
    p.add_argument("--steps", type=int, default=7)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()

    trace = generate_field(LaserParams(coherence_time_ns=135.0, seed=args.seed), args.duration_ns, 2.0)
    print("theta_rad,g2_zero,stderr,ideal")
    for theta in np.linspace(0.0, np.pi / 2, args.steps):
        stage = StageSpec(495.0, delayed_arm_polarization_rotation=polarization_rotation(theta))
        a, _, _ = run_cascade(trace, CascadeSpec([stage]))
        h = intensity_g2_oracle(a, 10.0)
        k = len(h) // 2
        print(f"{theta:.4f},{h.g2[k]:.4f},{h.stderr[k]:.4f},{1 + 0.5 * np.cos(theta) ** 2:.4f}", flush=True)


if __name__ == "__main__":
    main()
