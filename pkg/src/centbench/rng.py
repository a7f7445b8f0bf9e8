"""Seeded random streams and deterministic sub-seed derivation.

All stochastic code in this package draws from numpy's PCG64 generator so
that a fixed 64-bit seed yields the same stream on every platform. Where one
logical seed has to feed several independent stages (graph generation, the
thief simulation, the k-path walks), sub-seeds are derived with a splitmix64
hash of the parent seed and a stage tag, so the stages never share a stream.
"""
from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One splitmix64 step: a 64-bit finalizing mix of the input."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, tag: str) -> int:
    """Derive an independent 64-bit sub-seed from ``seed`` and a stage tag.

    The parent seed is mixed once, then each byte of the UTF-8 encoded tag is
    folded in with a further splitmix64 step. Different tags give unrelated
    streams; the same (seed, tag) pair always gives the same sub-seed.
    """
    state = splitmix64(seed & _MASK64)
    for byte in tag.encode("utf-8"):
        state = splitmix64(state ^ byte)
    return state


def make_rng(seed: int) -> np.random.Generator:
    """Construct the package-wide PCG64 generator for a 64-bit seed."""
    return np.random.Generator(np.random.PCG64(seed & _MASK64))
