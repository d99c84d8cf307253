"""Seeded Monte Carlo trials of encode -> operator channel -> decode."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import astuple, dataclass

from .channel import ChannelConfig, apply_channel
from .code import KKCode
from .errors import ParameterError
from .formats import TRIAL_LOG_COLUMNS, format_csv
from .rng import as_generator, derive_seed


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    rho_target: int
    t_target: int
    rho_actual: int
    t_actual: int
    distance: int
    decode_ok: int


@dataclass(frozen=True)
class CellSummary:
    rho: int
    t: int
    trials: int
    successes: int

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else float("nan")


def feasible(code: KKCode, rho: int, t: int) -> bool:
    return 0 <= rho <= code.l and 0 <= t <= code.n - (code.l - rho)


def grid(max_weight: int) -> list[tuple[int, int]]:
    """All ``(rho, t)`` with ``rho + t <= max_weight``, sorted."""
    if max_weight < 0:
        raise ParameterError("max weight must be >= 0")
    return [(r, t) for r in range(max_weight + 1) for t in range(max_weight + 1 - r)]


def run_trial(code: KKCode, rho: int, t: int, seed: int) -> TrialRecord:
    rng = as_generator(seed)
    msg = tuple(int(u) for u in rng.integers(0, code.field.order, size=code.k))
    sent = code.encode(msg)
    outcome = apply_channel(sent, ChannelConfig(rho, t, seed), rng)
    decoded = code.decode(outcome.received)
    return TrialRecord(
        seed, rho, t, outcome.rho_actual, outcome.t_actual,
        sent.distance(outcome.received), int(decoded == msg),
    )


def simulate(
    code: KKCode, cells: Iterable[tuple[int, int]], trials: int, seed: int
) -> tuple[list[TrialRecord], list[tuple[int, int]]]:
    """Run ``trials`` per feasible cell; returns (records, skipped cells).

    Trial i of cell (rho, t) uses ``derive_seed(seed, rho, t, i)``, so any
    subset of trials can be rerun or parallelized independently.
    """
    if trials < 0:
        raise ParameterError("trials must be >= 0")
    records, skipped = [], []
    for rho, t in sorted(set(cells)):
        if not feasible(code, rho, t):
            skipped.append((rho, t))
            continue
        for i in range(trials):
            records.append(run_trial(code, rho, t, derive_seed(seed, rho, t, i)))
    return records, skipped


def summarize(records: Sequence[TrialRecord]) -> list[CellSummary]:
    counts: dict[tuple[int, int], list[int]] = defaultdict(lambda: [0, 0])
    for r in records:
        c = counts[(r.rho_target, r.t_target)]
        c[0] += 1
        c[1] += r.decode_ok
    return [CellSummary(rho, t, n, s) for (rho, t), (n, s) in sorted(counts.items())]


def trial_log_csv(records: Iterable[TrialRecord]) -> str:
    return format_csv(TRIAL_LOG_COLUMNS, (astuple(r) for r in records))
