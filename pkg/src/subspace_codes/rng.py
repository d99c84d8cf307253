"""Seeded randomness.

All sampling goes through numpy's ``Generator`` with the PCG64 bit
generator, seeded from a 64-bit integer. Independent streams for parallel
trials come from :func:`derive_seed`, which hashes a parent seed together
with integer keys through ``SeedSequence``.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError

DEFAULT_SEED = 20080101


def as_generator(rng=None) -> np.random.Generator:
    """Accept a Generator, an integer seed, or None (default seed)."""
    if rng is None:
        return np.random.Generator(np.random.PCG64(DEFAULT_SEED))
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, (int, np.integer)) and not isinstance(rng, bool):
        if not 0 <= int(rng) < 2**64:
            raise ParameterError(f"seed {rng} is not a 64-bit unsigned integer")
        return np.random.Generator(np.random.PCG64(int(rng)))
    raise ParameterError(f"cannot build a random generator from {rng!r}")


def derive_seed(seed: int, *keys: int) -> int:
    """A 64-bit child seed determined by ``seed`` and ``keys``."""
    state = np.random.SeedSequence([int(seed), *(int(k) for k in keys)]).generate_state(2, np.uint32)
    return int(state[0]) | (int(state[1]) << 32)
