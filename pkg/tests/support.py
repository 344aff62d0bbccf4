"""Shared test helpers."""
import subprocess
import sys

_PEAK_RSS = """
import resource, sys
from mzbunch.config import ExperimentConfig
from mzbunch.pipeline import simulate
cfg = ExperimentConfig.from_file(sys.argv[1]).with_overrides({"run.duration_ns": sys.argv[2]})
simulate(cfg, sys.argv[3])
try:
    # VmHWM belongs to this exec image; ru_maxrss can carry the parent's peak across fork
    with open("/proc/self/status") as fh:
        print(next(int(line.split()[1]) for line in fh if line.startswith("VmHWM:")))
except OSError:
    print(resource.getrusage(resource.RUSAGE_SELF).ru_maxrss)
"""


def peak_rss_kb(config: str, duration_ns: float, out) -> int:
    """Peak resident memory (kB) of a fresh process running ``simulate``."""
    r = subprocess.run([sys.executable, "-c", _PEAK_RSS, config, str(duration_ns), str(out)],
                       capture_output=True, text=True, check=True)
    return int(r.stdout.split()[-1])
