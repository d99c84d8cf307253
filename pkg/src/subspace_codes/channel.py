"""The operator channel and the packet-level model it abstracts.

``apply_channel`` realizes ``U = H_{l-rho}(V) ⊕ E``: a uniform
``(l-rho)``-dim subspace of the input plus a uniform t-dim error space
meeting it trivially. ``packet_channel`` is the matrix model
``y = H p + G e`` with uniform random H, G and error packets e.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .rng import as_generator
from .subspace import Subspace, random_matrix, random_subspace_of, rank


@dataclass(frozen=True)
class ChannelConfig:
    rho: int
    t: int
    seed: int

    def __post_init__(self) -> None:
        if self.rho < 0 or self.t < 0:
            raise ParameterError("rho and t must be non-negative")


@dataclass(frozen=True)
class ChannelOutcome:
    """Received space with the erasure/error counts measured against the input."""

    received: Subspace
    rho_actual: int
    t_actual: int


@dataclass(frozen=True)
class PacketModelConfig:
    L: int
    T: int
    seed: int

    def __post_init__(self) -> None:
        if self.L < 0 or self.T < 0:
            raise ParameterError("L and T must be non-negative")


def erasure_operator(space: Subspace, k: int, rng=None) -> Subspace:
    """``H_k``: a uniform k-dim subspace of ``space`` if it is larger, else ``space``."""
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if space.dim <= k:
        return space
    return random_subspace_of(space, k, rng)


def measure(sent: Subspace, received: Subspace) -> tuple[int, int]:
    """``(rho, t)`` such that ``received = H_{dim-rho}(sent) ⊕ E`` with ``dim E = t``."""
    common = (sent & received).dim
    return sent.dim - common, received.dim - common


def apply_channel(sent: Subspace, cfg: ChannelConfig, rng=None) -> ChannelOutcome:
    """Erase ``cfg.rho`` dimensions and inject a ``cfg.t``-dim error space.

    ``rng`` defaults to a generator seeded from ``cfg.seed``. The error
    vectors are redrawn until they extend the surviving subspace by exactly
    t dimensions. The reported counts are measured on the result and can be
    smaller than the targets when the error space happens to meet ``sent``.
    """
    keep = sent.dim - cfg.rho
    if keep < 0:
        raise ParameterError(f"rho={cfg.rho} exceeds the input dimension {sent.dim}")
    if cfg.t > sent.n - keep:
        raise ParameterError(
            f"t={cfg.t} errors do not fit beside a {keep}-dim subspace of F_{sent.q}^{sent.n}"
        )
    rng = as_generator(cfg.seed if rng is None else rng)
    kept = erasure_operator(sent, keep, rng)
    rows = list(kept.basis)
    if cfg.t:
        while True:
            errors = random_matrix(rng, cfg.t, sent.n, sent.q)
            if rank(rows + errors, sent.q) == keep + cfg.t:
                break
        rows += errors
    received = Subspace.from_generators(rows, sent.q, sent.n)
    rho, t = measure(sent, received)
    return ChannelOutcome(received, rho, t)


def packet_transfer(p, h, g=None, e=None, q: int = 2) -> Subspace:
    """Row space of ``y = h @ p + g @ e`` over F_q for explicit matrices."""
    p = np.asarray(p, dtype=np.int64)
    n = p.shape[1]
    h = np.asarray(h, dtype=np.int64).reshape(-1, p.shape[0])
    y = h @ p
    if g is not None and e is not None:
        g = np.asarray(g, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        if g.size and e.size:
            y = y + g.reshape(h.shape[0], -1) @ e.reshape(-1, n)
    return Subspace.from_generators((y % q).tolist(), q, n)


def packet_channel(p_rows: Sequence[Sequence[int]], cfg: PacketModelConfig, q: int = 2, rng=None) -> Subspace:
    """Sample ``H`` (L x M), ``G`` (L x T) and T error packets uniformly; return ``rowspace(y)``."""
    if not p_rows:
        raise ParameterError("need at least one transmitted packet")
    n = len(p_rows[0])
    if any(len(r) != n for r in p_rows):
        raise ParameterError("packets must share a common length")
    rng = as_generator(cfg.seed if rng is None else rng)
    if cfg.L == 0:
        return Subspace.zero(q, n)
    h = rng.integers(0, q, size=(cfg.L, len(p_rows)))
    g = rng.integers(0, q, size=(cfg.L, cfg.T))
    e = rng.integers(0, q, size=(cfg.T, n))
    return packet_transfer(p_rows, h, g, e, q)


def correctability_check(distance: int, rho: int, t: int) -> bool:
    """Whether minimum-distance decoding is guaranteed: ``2(t + rho) < D``."""
    if min(distance, rho, t) < 0:
        raise ParameterError("arguments must be non-negative")
    return 2 * (t + rho) < distance
