"""Counting and bounds for codes in the Grassmannian.

Everything except :func:`asymptotic_curves` is exact integer or rational
arithmetic; Gaussian coefficients outgrow 64 bits almost immediately.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ParameterError
from .rng import as_generator
from .subspace import Subspace, enumerate_grassmannian


def gaussian_coefficient(n: int, l: int, q: int) -> int:
    """Number of l-dimensional subspaces of F_q^n.

    The product is accumulated as ``[n, j+1] = [n, j] (q^(n-j) - 1) / (q^(j+1) - 1)``
    so every intermediate value is an integer and each division is exact.
    """
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    if not 0 <= l <= n:
        raise ParameterError(f"need 0 <= l <= n, got l={l}, n={n}")
    value = 1
    for j in range(l):
        value = value * (q ** (n - j) - 1) // (q ** (j + 1) - 1)
    return value


def sphere_size(n: int, l: int, t: int, q: int) -> int:
    """Number of l-dim subspaces within distance ``2t`` of a fixed l-dim subspace."""
    if t < 0 or t > l or l > n:
        raise ParameterError(f"need 0 <= t <= l <= N, got t={t}, l={l}, N={n}")
    # shells beyond min(l, N-l) are empty
    return sum(
        q ** (i * i) * gaussian_coefficient(l, i, q) * gaussian_coefficient(n - l, i, q)
        for i in range(min(t, n - l) + 1)
    )


@dataclass(frozen=True)
class BoundValue:
    """Exact bound plus the closed-form envelope quoted next to it."""

    exact: int
    envelope: Fraction


def packing_bound(n: int, l: int, t: int, q: int) -> BoundValue:
    """Upper bound on ``|C|`` for codes with ``D >= 2t``, using radius ``s = (t-1)//2``.

    The envelope is ``4 q^((l-s)(N-s-l))``.
    """
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    if t > l:
        raise ParameterError(f"distance 2t={2 * t} exceeds the maximum 2l={2 * l}")
    s = (t - 1) // 2
    exact = gaussian_coefficient(n, l, q) // sphere_size(n, l, s, q)
    return BoundValue(exact, Fraction(4 * q ** ((l - s) * (n - s - l))))


def covering_bound(n: int, l: int, t: int, q: int) -> BoundValue:
    """Guaranteed size of some code with ``D >= 2t``: ``ceil([N l] / |S(l, t-1)|)``.

    The envelope is ``q^((l-t+1)(N-t-l+1)) / (16 t)``.
    """
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    if t > l:
        raise ParameterError(f"distance 2t={2 * t} exceeds the maximum 2l={2 * l}")
    g = gaussian_coefficient(n, l, q)
    ball = sphere_size(n, l, t - 1, q)
    return BoundValue(-(-g // ball), Fraction(q ** ((l - t + 1) * (n - t - l + 1)), 16 * t))


def singleton_bound(n: int, l: int, distance: int, q: int) -> int:
    """``[N - (D-2)/2, max(l, N-l)]_q``."""
    if distance < 2 or distance % 2:
        raise ParameterError(f"constant-dimension distances are even and >= 2, got D={distance}")
    if not 0 <= l <= n:
        raise ParameterError(f"need 0 <= l <= N, got l={l}, N={n}")
    if distance > 2 * min(l, n - l):
        raise ParameterError(f"D={distance} exceeds 2 min(l, N-l) = {2 * min(l, n - l)}")
    top = n - (distance - 2) // 2
    return gaussian_coefficient(top, max(l, n - l), q)


@dataclass(frozen=True)
class BoundReport:
    n: int
    l: int
    q: int
    distance: int
    packing: BoundValue
    covering: BoundValue
    singleton: int

    def row(self) -> dict[str, int]:
        return {
            "N": self.n,
            "l": self.l,
            "q": self.q,
            "D": self.distance,
            "packing": self.packing.exact,
            "covering": self.covering.exact,
            "singleton": self.singleton,
        }


def bound_report(n: int, l: int, distance: int, q: int) -> BoundReport:
    """All three bounds for codes in ``P(F_q^N, l)`` with minimum distance ``D = 2t``."""
    if distance < 2 or distance % 2:
        raise ParameterError(f"constant-dimension distances are even and >= 2, got D={distance}")
    t = distance // 2
    return BoundReport(
        n, l, q, distance,
        packing_bound(n, l, t, q),
        covering_bound(n, l, t, q),
        singleton_bound(n, l, distance, q),
    )


@dataclass(frozen=True)
class CurvePoint:
    delta: float
    packing: float
    covering: float
    singleton: float


def asymptotic_curves(lam: float, deltas: Iterable[float]) -> list[CurvePoint]:
    """Rate envelopes against normalized distance for fixed ``lambda = l/N``.

    Finite-N correction terms are dropped:

    * packing   ``(1 - d/2)(1 - lam (1 + d/2))``
    * covering  ``(1 - d)(1 - lam (1 + d))``
    * Singleton ``(1 - d)(1 - lam)``
    """
    lam = float(lam)
    if not 0 < lam <= 0.5:
        raise ParameterError(f"lambda must lie in (0, 1/2], got {lam}")
    out = []
    for d in deltas:
        d = float(d)
        if not 0 <= d <= 1:
            raise ParameterError(f"delta must lie in [0, 1], got {d}")
        out.append(
            CurvePoint(
                d,
                (1 - d / 2) * (1 - lam * (1 + d / 2)),
                (1 - d) * (1 - lam * (d + 1)),
                (1 - d) * (1 - lam),
            )
        )
    return out


def delta_grid(points: int = 101) -> list[float]:
    """Evenly spaced grid on [0, 1] including both ends."""
    if points < 2:
        raise ParameterError("need at least two grid points")
    return [i / (points - 1) for i in range(points)]


def greedy_gv_code(n: int, l: int, t: int, q: int, rng=None, cap: int | None = None) -> list[Subspace]:
    """Greedy code with ``D >= 2t``: scan the Grassmannian in random order, keep what fits.

    The result is maximal, so the radius-(t-1) balls around it cover the
    Grassmannian and its size meets :func:`covering_bound`.
    """
    if t < 1:
        raise ParameterError(f"t must be >= 1, got {t}")
    spaces = enumerate_grassmannian(q, n, l, cap)
    order = as_generator(rng).permutation(len(spaces))
    code: list[Subspace] = []
    for idx in order:
        cand = spaces[idx]
        if all(cand.distance(c) >= 2 * t for c in code):
            code.append(cand)
    return code


def normalized_params(n: int, l: int, logq_size, distance: int) -> tuple:
    """``(lambda, R, delta) = (l/N, log_q|C| / (N l), D / (2 l))``.

    Exact Fractions when ``logq_size`` is rational, floats otherwise.
    """
    if l < 1 or n < l:
        raise ParameterError(f"need 1 <= l <= N, got l={l}, N={n}")
    if isinstance(logq_size, Rational):
        return Fraction(l, n), Fraction(logq_size) / (n * l), Fraction(distance, 2 * l)
    return Fraction(l, n), float(logq_size) / (n * l), Fraction(distance, 2 * l)

