"""Telecom-band run: tau_c = 7.4 ns through a single low-loss interferometer."""
import argparse

from mzbunch.config import ExperimentConfig
from mzbunch.pipeline import run_experiment
from mzbunch.theory import power_budget


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default="out/fig6")
    p.add_argument("--seed", type=int)
    args = p.parse_args()
    cfg = ExperimentConfig.from_file("fig6_1550nm.cfg")
    if args.seed is not None:
        cfg = cfg.with_overrides({"run.seed": args.seed})
    out = run_experiment(cfg, args.out)
    f = out.fit
    print(f"g2(0) = {f.g2_zero:.4f} +- {f.b_err:.4f}")
    print(f"tau_c = {f.tau_c_ns:.3f} +- {f.tau_c_err:.3f} ns")
    print(f"conversion efficiency = {power_budget(cfg.cascade).total_efficiency:.3f}")
    print(f"histogram: {out.histogram_csv}")


if __name__ == "__main__":
    main()
