"""Dilution of the fitted bunching amplitude by detector dark counts.

Uncorrelated dark events add a flat background, so the excess should scale as
(r_signal / (r_signal + r_dark))^2. Prints fitted b against that prediction.
"""
import argparse

from mzbunch.config import ExperimentConfig
from mzbunch.pipeline import run_experiment


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--duration-ns", type=float, default=2e8)
    p.add_argument("--rate-hz", type=float, default=2e6)
    p.add_argument("--fractions", default="0,0.1,0.25,0.5,1.0", help="dark rate as a fraction of the signal rate")
    p.add_argument("--out", default="out/dark_sweep")
    args = p.parse_args()

    base = ExperimentConfig.from_file("fig4_n1.cfg")
    ref_b = None
    print("dark_over_signal,b,b_err,b_relative,predicted_relative")
    for frac in (float(x) for x in args.fractions.split(",")):
        overrides = {"run.duration_ns": args.duration_ns}
        for d in (1, 2):
            overrides[f"detector.{d}.mean_rate_hz"] = args.rate_hz
            overrides[f"detector.{d}.dark_rate_hz"] = frac * args.rate_hz
        out = run_experiment(base.with_overrides(overrides), f"{args.out}/f{frac:g}")
        b = out.fit.b
        ref_b = ref_b if ref_b is not None else b
        pred = (1.0 / (1.0 + frac)) ** 2
        print(f"{frac:g},{b:.4f},{out.fit.b_err:.4f},{b / ref_b:.4f},{pred:.4f}", flush=True)


if __name__ == "__main__":
    main()
