"""Counter-addressable random streams.

Every random draw in the simulator belongs to a fixed-size block of sample
indices. A block's generator is rebuilt from ``(seed, stream tag, block
index)`` alone, so any slice of a trace can be regenerated without touching
the rest, and the values never depend on how a caller chunks its work.
"""
from __future__ import annotations

import numpy as np

BLOCK_SAMPLES = 1 << 16

# stream tags; distinct per consumer so streams never overlap
TAG_PHASE = 1
TAG_PHASE0 = 2
TAG_THINNING = 3
TAG_DARK = 4


def block_rng(seed: int, tag: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, tag, block])))


def derive_seed(seed: int, label: str) -> int:
    """Deterministic 64-bit sub-seed for a named component."""
    key = [int(b) for b in label.encode()]
    state = np.random.SeedSequence([seed, *key]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def block_span(start: int, stop: int, block_size: int = BLOCK_SAMPLES) -> range:
    """Indices of the blocks overlapping the sample range ``[start, stop)``."""
    if stop <= start:
        return range(0)
    return range(start // block_size, (stop - 1) // block_size + 1)
