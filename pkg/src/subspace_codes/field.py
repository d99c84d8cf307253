"""Arithmetic in a prime field F_q and its extension F_{q^m}.

Elements of F_{q^m} are handled internally as plain integers: the element
with polynomial-basis coordinates ``(c_0, ..., c_{m-1})`` is the integer
``sum(c_i * q**i)`` (little-endian base q). The same integer is the wire
format used by every file format and the CLI.

:class:`GF` owns the parameters and precomputed log/exp tables.
:class:`FieldElement` is a small value wrapper with operators for
interactive and test use; the hot paths (polynomials, decoding) work on
integers directly.

Moduli are coefficient lists, lowest degree first, monic::

    >>> F = GF(2, 3)          # z^3 + z + 1
    >>> F.modulus
    (1, 1, 0, 1)
    >>> F.mul(0b010, 0b100)   # z * z^2 = z + 1
    3
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import ParameterError

# Primitive polynomials, lowest degree first, found by exhaustive search
# (fewest nonzero terms, then smallest). Primitive means ``z`` generates the
# multiplicative group, so the log tables build by repeated shifting.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (3, 2, 1, 0, 0, 0, 0, 0, 1),
}

MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_rem(num: list[int], den: list[int], q: int) -> list[int]:
    """Remainder of ``num`` modulo monic ``den`` over F_q (coefficient lists, low first)."""
    num = list(num)
    e = len(den) - 1
    for i in range(len(num) - 1, e - 1, -1):
        c = num[i] % q
        if c:
            for j in range(e + 1):
                num[i - e + j] = (num[i - e + j] - c * den[j]) % q
    return [c % q for c in num[:e]]


def is_irreducible(coeffs: tuple[int, ...] | list[int], q: int) -> bool:
    """Exhaustive irreducibility check over F_q by trial division.

    Every monic polynomial of degree 1..m//2 is tried as a factor, which is
    cheap at the sizes this package supports.
    """
    coeffs = [c % q for c in coeffs]
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] == 0:
        return False
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for tail in itertools.product(range(q), repeat=deg):
            divisor = list(tail) + [1]
            if not any(_poly_rem(coeffs, divisor, q)):
                return False
    return True


class GF:
    """The field F_{q^m} = F_q[z] / (modulus).

    Parameters
    ----------
    q : int
        Prime characteristic.
    m : int
        Extension degree, ``q**m <= 2**20``.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree m, lowest coefficient first.
        Defaults to the built-in table entry.
    """

    def __init__(self, q: int, m: int, modulus=None) -> None:
        if not is_prime(q):
            raise ParameterError(f"q={q} is not prime")
        if m < 1:
            raise ParameterError(f"extension degree m={m} must be >= 1")
        if q**m > MAX_ORDER:
            raise ParameterError(f"q^m = {q}^{m} exceeds the supported size 2^20")
        if modulus is None:
            if (q, m) not in DEFAULT_MODULI:
                raise ParameterError(f"no default modulus for q={q}, m={m}; pass one explicitly")
            modulus = DEFAULT_MODULI[(q, m)]
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ParameterError(f"modulus {modulus} is not monic of degree {m}")
        if not is_irreducible(modulus, q):
            raise ParameterError(f"modulus {modulus} is reducible over F_{q}")

        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q**m
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _poly_mul(self, a: int, b: int) -> int:
        """Schoolbook product mod the modulus; used only while building tables."""
        q, m = self.q, self.m
        prod = [0] * (2 * m - 1)
        ac, bc = self.coords(a), self.coords(b)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    prod[i + j] += x * y
        return self.from_coords(_poly_rem(prod, list(self.modulus), q) if m > 0 else prod)

    def _times_z(self, a: int) -> int:
        q, m = self.q, self.m
        c = self.coords(a)
        top = c[-1]
        shifted = [0] + list(c[:-1])
        return self.from_coords([(shifted[i] - top * self.modulus[i]) % q for i in range(m)])

    def _build_tables(self) -> None:
        n = self.order - 1
        one = 1
        if self.m == 1:
            step = lambda a: (a * ((-self.modulus[0]) % self.q)) % self.q  # noqa: E731
        else:
            step = self._times_z
        exp = [one]
        x = step(one)
        while x != one and len(exp) < n:
            exp.append(x)
            x = step(x)
        if len(exp) != n or x != one:
            g = self._find_generator()
            exp = [one]
            x = g
            for _ in range(n - 1):
                exp.append(x)
                x = self._poly_mul(x, g)
        log = [0] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        n = self.order - 1
        factors = _prime_factors(n)

        def power(a: int, e: int) -> int:
            result, base = 1, a
            while e:
                if e & 1:
                    result = self._poly_mul(result, base)
                base = self._poly_mul(base, base)
                e >>= 1
            return result

        for g in range(2, self.order):
            if all(power(g, n // p) != 1 for p in factors):
                return g
        raise ParameterError("no generator found; modulus is not irreducible")  # pragma: no cover

    # -- encoding ----------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates, ``coords[0]`` least significant."""
        q = self.q
        out = []
        for _ in range(self.m):
            a, r = divmod(a, q)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords) -> int:
        q = self.q
        v = 0
        for c in reversed(list(coords)):
            v = v * q + (int(c) % q)
        return v

    def element(self, value: int) -> FieldElement:
        return FieldElement(self._check(value), self)

    def elements(self) -> range:
        return range(self.order)

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise ParameterError(f"{a} is not an element of GF({self.q}^{self.m})")
        return a

    # -- arithmetic on integer encodings -----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q = self.q
        v, place = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            v += ((x + y) % q) * place
            place *= q
        return v

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        q = self.q
        v, place = 0, 1
        while a:
            a, x = divmod(a, q)
            v += ((-x) % q) * place
            place *= q
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the base-field scalar ``c`` in F_q."""
        c %= self.q
        if c == 0 or a == 0:
            return 0
        if c == 1:
            return a
        # c lies in F_q, which is the constant subfield; its encoding is c itself
        return self.mul(c, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frob(self, a: int, i: int) -> int:
        """``a ** (q ** i)``; the index is reduced mod m by the Frobenius order."""
        if i < 0:
            raise ParameterError("Frobenius index must be >= 0")
        if a == 0:
            return 0
        n = self.order - 1
        return self._exp[(self._log[a] * pow(self.q, i % self.m, n)) % n] if n > 1 else a

    # -- identity ----------------------------------------------------------

    def _key(self) -> tuple:
        return (self.q, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"GF({self.q}, {self.m}, modulus={self.modulus})"


@functools.lru_cache(maxsize=64)
def get_field(q: int, m: int, modulus: tuple[int, ...] | None = None) -> GF:
    """Cached :class:`GF` constructor; table building dominates for large fields."""
    return GF(q, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of F_{q^m}; equality is coordinate-wise."""

    value: int
    field: GF

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def _other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ParameterError("field elements from different fields")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.add(self.value, b), self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.sub(self.value, b), self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.mul(self.value, b), self.field)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.div(self.value, b), self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field.neg(self.value), self.field)

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field.pow(self.value, e), self.field)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def frob(self, i: int) -> FieldElement:
        """Frobenius power ``self ** (q ** i)``."""
        return FieldElement(self.field.frob(self.value, i), self.field)

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, q={self.field.q}, m={self.field.m})"
