"""Linearized polynomials over F_{q^m} under addition and composition.

``LinearizedPoly(F, (a_0, ..., a_d))`` is ``sum a_i x^[i]`` with
``x^[i] = x^(q^i)``. Coefficients are integer-encoded field elements and
the tuple is kept normalized (no trailing zeros; the zero polynomial has
an empty tuple). Composition is exposed as ``f @ g`` meaning ``f(g(x))``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import ParameterError
from .field import GF
from .subspace import Subspace


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class LinearizedPoly:
    field: GF
    coeffs: tuple[int, ...]

    def __init__(self, field: GF, coeffs: Iterable[int] = ()) -> None:
        coeffs = tuple(int(c) for c in coeffs)
        for c in coeffs:
            if not 0 <= c < field.order:
                raise ParameterError(f"coefficient {c} is not in GF({field.q}^{field.m})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def zero(cls, field: GF) -> LinearizedPoly:
        return cls(field, ())

    @classmethod
    def identity(cls, field: GF) -> LinearizedPoly:
        """The polynomial ``x = x^[0]``."""
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: GF, coeff: int, i: int) -> LinearizedPoly:
        """``coeff * x^[i]``."""
        return cls(field, (0,) * i + (coeff,))

    @classmethod
    def subspace_polynomial(cls, field: GF, roots: Sequence[int]) -> LinearizedPoly:
        """Monic polynomial whose root set is exactly the F_q-span of ``roots``.

        Built one root at a time: ``P <- P^[1] - P(b)^(q-1) P`` vanishes on
        the old span and on ``b``; dependent roots are skipped.
        """
        p = cls.identity(field)
        for b in roots:
            v = p(b)
            if v == 0:
                continue
            p = p.frobenius() - p.scaled(field.pow(v, field.q - 1))
        return p

    # -- shape -------------------------------------------------------------

    @property
    def degree(self) -> int:
        """q-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ParameterError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: LinearizedPoly) -> None:
        if self.field != other.field:
            raise ParameterError("linearized polynomials over different fields")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LinearizedPoly) -> LinearizedPoly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LinearizedPoly(
            F, (F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n))
        )

    def __neg__(self) -> LinearizedPoly:
        return LinearizedPoly(self.field, (self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: LinearizedPoly) -> LinearizedPoly:
        return self + (-other)

    def scaled(self, c: int) -> LinearizedPoly:
        """Left multiplication by the constant ``c``: ``c * f(x)``."""
        F = self.field
        return LinearizedPoly(F, (F.mul(c, a) for a in self.coeffs))

    def frobenius(self) -> LinearizedPoly:
        """``f(x)^q = x^[1] ⊗ f``: coefficients raised to the q-th power and shifted."""
        F = self.field
        if not self.coeffs:
            return self
        return LinearizedPoly(F, (0,) + tuple(F.frob(a, 1) for a in self.coeffs))

    def compose(self, other: LinearizedPoly) -> LinearizedPoly:
        """``self ⊗ other = self(other(x))``; ``c_k = sum_i a_i b_{k-i}^[i]``."""
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LinearizedPoly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, F.frob(bj, i)))
        return LinearizedPoly(F, out)

    def __matmul__(self, other: LinearizedPoly) -> LinearizedPoly:
        return self.compose(other)

    # -- division ----------------------------------------------------------

    def rdiv(self, divisor: LinearizedPoly) -> tuple[LinearizedPoly, LinearizedPoly]:
        """Right division: ``self = divisor ⊗ quot + rem`` with ``deg rem < deg divisor``."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero linearized polynomial")
        F = self.field
        e, be = divisor.degree, divisor.leading
        quot = [0] * max(self.degree - e + 1, 0)
        rem = self
        while rem.degree >= e:
            d = rem.degree
            c = F.frob(F.div(rem.leading, be), (F.m - e) % F.m)
            quot[d - e] = c
            rem = rem - divisor.compose(LinearizedPoly.monomial(F, c, d - e))
        return LinearizedPoly(F, quot), rem

    def ldiv(self, divisor: LinearizedPoly) -> tuple[LinearizedPoly, LinearizedPoly]:
        """Left division: ``self = quot ⊗ divisor + rem`` with ``deg rem < deg divisor``."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero linearized polynomial")
        F = self.field
        e, be = divisor.degree, divisor.leading
        quot = [0] * max(self.degree - e + 1, 0)
        rem = self
        while rem.degree >= e:
            d = rem.degree
            c = F.div(rem.leading, F.frob(be, d - e))
            quot[d - e] = c
            rem = rem - LinearizedPoly.monomial(F, c, d - e).compose(divisor)
        return LinearizedPoly(F, quot), rem

    # -- evaluation --------------------------------------------------------

    def __call__(self, beta: int) -> int:
        """``sum a_i * beta^[i]``."""
        F = self.field
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a:
                acc = F.add(acc, F.mul(a, F.frob(beta, i)))
        return acc

    def matrix(self) -> list[list[int]]:
        """Rows are the coordinates of ``f(z^j)``; the F_q-linear map in the polynomial basis."""
        F = self.field
        return [list(F.coords(self(F.from_coords([int(i == j) for i in range(F.m)])))) for j in range(F.m)]

    def kernel(self) -> Subspace:
        """Roots of ``f`` in F_{q^m} as an F_q-subspace of F_q^m (polynomial-basis coordinates)."""
        F = self.field
        # c in the kernel iff c @ M == 0, i.e. c is in the null space of M^T
        mt = [list(col) for col in zip(*self.matrix())]
        return Subspace.from_generators(mt, F.q, F.m).orthogonal_complement()

    def __repr__(self) -> str:
        return f"LinearizedPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class BivariateLinearizedPoly:
    """``Q(x, y) = Q_x(x) + Q_y(y)``."""

    x_part: LinearizedPoly
    y_part: LinearizedPoly

    @property
    def field(self) -> GF:
        return self.x_part.field

    def __call__(self, x: int, y: int) -> int:
        return self.field.add(self.x_part(x), self.y_part(y))

    def weighted_degree(self, k: int) -> int:
        """``max(d_x, k - 1 + d_y)`` over the nonzero parts; -1 for Q = 0."""
        parts = []
        if not self.x_part.is_zero():
            parts.append(self.x_part.degree)
        if not self.y_part.is_zero():
            parts.append(k - 1 + self.y_part.degree)
        return max(parts, default=-1)

    def is_zero(self) -> bool:
        return self.x_part.is_zero() and self.y_part.is_zero()

    def frobenius(self) -> BivariateLinearizedPoly:
        return BivariateLinearizedPoly(self.x_part.frobenius(), self.y_part.frobenius())

    def scaled(self, c: int) -> BivariateLinearizedPoly:
        return BivariateLinearizedPoly(self.x_part.scaled(c), self.y_part.scaled(c))

    def __sub__(self, other: BivariateLinearizedPoly) -> BivariateLinearizedPoly:
        return BivariateLinearizedPoly(self.x_part - other.x_part, self.y_part - other.y_part)
