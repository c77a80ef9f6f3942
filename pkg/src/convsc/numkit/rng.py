"""Seeded, counter-based random streams.

Built on numpy's Philox generator, which is counter-based: the same 64-bit
seed yields the same draw sequence on every platform. Component sub-streams
are derived by stable hashing of (seed, name) so that adding a consumer
never shifts the draws seen by another.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, name: str) -> int:
    """Stable 64-bit sub-seed for a named component."""
    digest = hashlib.blake2b(f"{seed}:{name}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class RngStream:
    """A seeded random stream with named, independent sub-streams."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.Philox(self.seed))

    def spawn(self, name: str) -> "RngStream":
        return RngStream(derive_seed(self.seed, name))

    def normal(self, size=None, scale=1.0):
        return self._gen.normal(0.0, scale, size=size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self._gen.uniform(low, high, size=size)

    def integers(self, low, high=None, size=None):
        return self._gen.integers(low, high=high, size=size)

    def permutation(self, x):
        return self._gen.permutation(x)

    def __repr__(self):
        return f"RngStream(seed={self.seed})"
