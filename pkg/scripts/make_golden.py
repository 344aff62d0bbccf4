"""Regenerate the golden correlator fixtures in tests/data.

The timestamp pair is synthetic (Poisson events plus a correlated subset) and
the histogram CSV is built from the exhaustive O(N^2) pair oracle with the
normalization written out by hand, so it does not pass through the package's
correlator or CSV writer.
"""
import json
import math
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))
from oracles import exhaustive_pair_counts  # noqa: E402

DATA = ROOT / "tests" / "data"
DURATION_NS = 2_000_000.0
BIN_NS, WINDOW_NS = 2.0, 1000.0


def events(rng, n, shared, jitter):
    own = rng.uniform(0, DURATION_NS, n)
    t = np.concatenate([own, shared + rng.exponential(jitter, len(shared))])
    t = t[(t >= 0) & (t < DURATION_NS)]
    return np.unique(np.rint(t / 2.0).astype(np.int64) * 2)


def write_ts(name, ticks_ns, det_id, seed):
    path = DATA / name
    path.write_bytes(ticks_ns.astype("<u8").tobytes())
    meta = {"count": len(ticks_ns), "detector_id": det_id, "duration_ns": DURATION_NS, "format": "binary",
            "resolution_ns": 2.0, "seed": seed, "unit_ns": 1.0}
    Path(str(path) + ".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(20240601)
    shared = rng.uniform(0, DURATION_NS, 300)
    a = events(rng, 3000, shared, 20.0)
    b = events(rng, 3000, shared, 20.0)
    write_ts("golden_a.ts", a, 1, 11)
    write_ts("golden_b.ts", b, 2, 12)

    K = int(round(WINDOW_NS / BIN_NS))
    counts = exhaustive_pair_counts(a * 1000, b * 1000, int(BIN_NS * 1000), K)
    t_eff = DURATION_NS - WINDOW_NS
    norm = t_eff / (len(a) * len(b) * BIN_NS)
    header = {
        "bin_width_ns": BIN_NS,
        "degenerate": False,
        "duration_ns": DURATION_NS,
        "effective_duration_ns": t_eff,
        "n_a": len(a),
        "n_b": len(b),
        "normalization": norm,
        "rates_hz": [len(a) / (DURATION_NS * 1e-9), len(b) / (DURATION_NS * 1e-9)],
        "tau_max_ns": K * BIN_NS,
        "tau_min_ns": -K * BIN_NS,
        "tau_window_ns": WINDOW_NS,
        "total_pairs": int(counts.sum()),
    }
    lines = ["# " + json.dumps(header, sort_keys=True), "tau_ns,counts,g2,stderr"]
    for k, c in zip(range(-K, K + 1), counts):
        g = float(c * norm)
        e = g / math.sqrt(c) if c else norm
        lines.append(f"{float(-K * BIN_NS + BIN_NS * (k + K))!r},{int(c)},{g!r},{float(e)!r}")
    (DATA / "golden_g2.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(a)} + {len(b)} events, {int(counts.sum())} pairs")


if __name__ == "__main__":
    main()
