"""Reed-Solomon-like constant-dimension codes built from linearized polynomials.

A message ``u = (u_0, ..., u_{k-1})`` over F_{q^m} defines
``f(x) = sum u_i x^[i]``; the codeword is the span of the vectors
``(alpha_i, f(alpha_i))`` for the evaluation set ``A = {alpha_1..alpha_l}``.
In coordinates, ``alpha`` is written by its l coordinates in basis A and
``f(alpha)`` by its m polynomial-basis coordinates, so codewords live in
F_q^(l+m).

Decoding interpolates a bivariate linearized polynomial
``Q(x, y) = Q_x(x) + Q_y(y)`` through a basis of the received space and
then right-divides ``-Q_x`` by ``Q_y``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .bounds import normalized_params
from .channel import erasure_operator
from .errors import ParameterError, PreconditionError
from .field import GF, get_field
from .linearized import BivariateLinearizedPoly, LinearizedPoly
from .rng import as_generator
from .subspace import Subspace, rank

Message = tuple[int, ...]


@dataclass(frozen=True)
class CodeParams:
    """Code type ``[N, l, log_q |C|, D]`` with normalized parameters."""

    n: int
    l: int
    logq_size: int
    distance: int
    lam: Fraction
    rate: Fraction
    delta: Fraction

    @property
    def type_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.l, self.logq_size, self.distance)


@dataclass(frozen=True)
class KKCode:
    """Code parameters: field F_{q^m}, message length k, evaluation set A."""

    field: GF
    k: int
    evaluation_set: tuple[int, ...]

    def __post_init__(self) -> None:
        F = self.field
        a = tuple(int(x) for x in self.evaluation_set)
        object.__setattr__(self, "evaluation_set", a)
        if not a:
            raise ParameterError("evaluation set must be nonempty")
        for x in a:
            if not 0 <= x < F.order:
                raise ParameterError(f"{x} is not an element of GF({F.q}^{F.m})")
        if len(a) > F.m:
            raise ParameterError(f"at most m={F.m} independent evaluation points exist")
        if rank([F.coords(x) for x in a], F.q) != len(a):
            raise ParameterError("evaluation set is not F_q-linearly independent")
        if not 1 <= self.k <= len(a):
            raise ParameterError(f"need 1 <= k <= l, got k={self.k}, l={len(a)}")

    @classmethod
    def create(cls, q: int = 2, m: int = 3, l: int = 3, k: int = 1, *, modulus=None, evaluation_set=None) -> KKCode:
        """Build a code; the default evaluation set is ``1, z, ..., z^(l-1)``."""
        field = get_field(q, m, None if modulus is None else tuple(modulus))
        if evaluation_set is None:
            if not 1 <= l <= m:
                raise ParameterError(f"need 1 <= l <= m, got l={l}, m={m}")
            evaluation_set = tuple(q**i for i in range(l))
        elif len(evaluation_set) != l:
            raise ParameterError(f"evaluation set has {len(evaluation_set)} elements, expected l={l}")
        return cls(field, k, tuple(evaluation_set))

    # -- parameters --------------------------------------------------------

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def l(self) -> int:
        return len(self.evaluation_set)

    @property
    def n(self) -> int:
        """Ambient dimension ``N = l + m``."""
        return self.l + self.m

    @property
    def min_distance(self) -> int:
        return 2 * (self.l - self.k + 1)

    @property
    def size(self) -> int:
        return self.field.order**self.k

    def params(self) -> CodeParams:
        logq = self.m * self.k
        lam, rate, delta = normalized_params(self.n, self.l, logq, self.min_distance)
        return CodeParams(self.n, self.l, logq, self.min_distance, lam, rate, delta)

    # -- encoding ----------------------------------------------------------

    def check_message(self, msg: Sequence) -> Message:
        msg = tuple(int(u) for u in msg)
        if len(msg) != self.k:
            raise ParameterError(f"message has {len(msg)} symbols, expected k={self.k}")
        for u in msg:
            if not 0 <= u < self.field.order:
                raise ParameterError(f"message symbol {u} is not in GF({self.q}^{self.m})")
        return msg

    def message_polynomial(self, msg: Sequence) -> LinearizedPoly:
        return LinearizedPoly(self.field, self.check_message(msg))

    def encode(self, msg: Sequence) -> Subspace:
        """The l-dimensional subspace spanned by ``(alpha_i, f(alpha_i))``."""
        f = self.message_polynomial(msg)
        F, l = self.field, self.l
        rows = []
        for i, alpha in enumerate(self.evaluation_set):
            rows.append(tuple(int(i == j) for j in range(l)) + F.coords(f(alpha)))
        return Subspace.from_generators(rows, self.q, self.n)

    def messages(self) -> Iterator[Message]:
        return itertools.product(range(self.field.order), repeat=self.k)

    def codewords(self) -> list[Subspace]:
        """All ``q^(mk)`` codewords in message order."""
        return [self.encode(u) for u in self.messages()]

    def split(self, v: Sequence[int]) -> tuple[int, int]:
        """Map a vector of W to the pair ``(x, y)`` in F_{q^m} x F_{q^m}."""
        F, l = self.field, self.l
        if len(v) != self.n:
            raise ParameterError(f"vector of length {len(v)}, expected N={self.n}")
        x = 0
        for c, alpha in zip(v[:l], self.evaluation_set):
            if c % F.q:
                x = F.add(x, F.scale(c, alpha))
        return x, F.from_coords(v[l:])

    # -- decoding ----------------------------------------------------------

    def decode(self, received: Subspace) -> Message | None:
        """Recover the message, or ``None`` when decoding fails.

        Success is guaranteed when ``rho + t < l - k + 1``. An answer is only
        returned if its codeword lies strictly inside that radius of
        ``received``, so the result is always the unique nearest codeword.
        """
        if (received.q, received.n) != (self.q, self.n):
            raise ParameterError(
                f"received space lives in F_{received.q}^{received.n}, expected F_{self.q}^{self.n}"
            )
        r = received.dim
        if r == 0:
            return None
        k = self.k
        tau = math.ceil((r + k) / 2)
        Q = interpolate([self.split(v) for v in received.basis], k, self.field)
        if Q.weighted_degree(k) > tau - 1:
            raise AssertionError(
                f"interpolation weighted degree {Q.weighted_degree(k)} exceeds cap tau-1={tau - 1}"
            )
        if Q.y_part.is_zero():
            return None
        f, rem = (-Q.x_part).rdiv(Q.y_part)
        if not rem.is_zero() or f.degree >= k:
            return None
        msg = f.coeffs + (0,) * (k - len(f.coeffs))
        if received.distance(self.encode(msg)) >= self.l - k + 1:
            return None
        return msg


def interpolate(points: Sequence[tuple[int, int]], k: int, field: GF) -> BivariateLinearizedPoly:
    """Minimal (1, k-1)-weighted-degree ``Q(x, y)`` vanishing on ``points``.

    ``points`` must be F_q-linearly independent as vectors of
    F_{q^m} x F_{q^m}. Runs the two-candidate update: ``f0`` keeps an
    x-leading term and ``f1`` a y-leading term; each point either zeroes one
    of them through a Frobenius step or is absorbed by a cross combination.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    F = field
    vecs = [F.coords(x) + F.coords(y) for x, y in points]
    if rank(vecs, F.q) != len(vecs):
        raise PreconditionError("interpolation points are linearly dependent")

    zero, ident = LinearizedPoly.zero(F), LinearizedPoly.identity(F)
    f0 = BivariateLinearizedPoly(ident, zero)
    f1 = BivariateLinearizedPoly(zero, ident)
    e = F.q - 1
    for x, y in points:
        d0, d1 = f0(x, y), f1(x, y)
        if d0 == 0 and d1 == 0:
            # cannot happen for independent points; keep both candidates
            continue
        if d0 == 0:
            f1 = f1.frobenius() - f1.scaled(F.pow(d1, e))
        elif d1 == 0:
            f0 = f0.frobenius() - f0.scaled(F.pow(d0, e))
        elif f0.weighted_degree(k) <= f1.weighted_degree(k):
            f0, f1 = f0.frobenius() - f0.scaled(F.pow(d0, e)), f0.scaled(d1) - f1.scaled(d0)
        else:
            f0, f1 = f0.scaled(d1) - f1.scaled(d0), f1.frobenius() - f1.scaled(F.pow(d1, e))
    return f1 if f1.weighted_degree(k) < f0.weighted_degree(k) else f0


# -- generic code utilities --------------------------------------------------


def min_distance(codewords: Sequence[Subspace]) -> int:
    """Exact minimum pairwise subspace distance."""
    if len(codewords) < 2:
        raise ParameterError("minimum distance needs at least two codewords")
    best = None
    for a, b in itertools.combinations(codewords, 2):
        d = a.distance(b)
        if best is None or d < best:
            best = d
    return best


def brute_force_md_decode(codewords: Sequence[Subspace], received: Subspace) -> Subspace:
    """A nearest codeword; ties go to the first in enumeration order."""
    if not codewords:
        raise ParameterError("empty code")
    return min(codewords, key=received.distance)


def complementary_code(codewords: Sequence[Subspace]) -> list[Subspace]:
    return [c.orthogonal_complement() for c in codewords]


def puncture(codewords: Sequence[Subspace], wprime: Subspace, rng=None) -> list[Subspace]:
    """Replace each ``V`` by an (l-1)-dim subspace of ``V ∩ W'``, written in W' coordinates.

    Coordinates in W' are read off the pivot columns of its RREF basis, so
    the output lives in F_q^(N-1). Requires a constant-dimension code with
    minimum distance above 2.
    """
    if not codewords:
        raise ParameterError("empty code")
    q, n = codewords[0].q, codewords[0].n
    if (wprime.q, wprime.n) != (q, n) or wprime.dim != n - 1:
        raise ParameterError(f"W' must be a hyperplane of F_{q}^{n}")
    dims = {c.dim for c in codewords}
    if len(dims) != 1:
        raise PreconditionError("puncturing needs a constant-dimension code")
    l = dims.pop()
    if len(codewords) > 1 and min_distance(codewords) <= 2:
        raise PreconditionError("puncturing needs minimum distance D > 2")
    rng = as_generator(rng)
    out = []
    for v in codewords:
        sub = erasure_operator(v & wprime, l - 1, rng)
        rows = [wprime.coordinates(row) for row in sub.basis]
        out.append(Subspace.from_generators(rows, q, n - 1))
    return out


def lifted_code(q: int, n: int, l: int) -> list[Subspace]:
    """Row spaces of every ``[I | A]`` with ``A`` an l x (n-l) matrix."""
    width = n - l
    out = []
    for entries in itertools.product(range(q), repeat=l * width):
        rows = [
            tuple(int(i == j) for j in range(l)) + tuple(entries[i * width:(i + 1) * width])
            for i in range(l)
        ]
        out.append(Subspace(q, n, tuple(rows)))
    return out
