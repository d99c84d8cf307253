"""Subspaces of W = F_q^N in canonical reduced-row-echelon form.

A :class:`Subspace` stores its RREF basis as a tuple of row tuples, so two
subspaces are equal exactly when their bases are equal. Vectors are plain
sequences of integers in ``[0, q)``.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ResourceError
from .field import is_prime
from .rng import as_generator

DEFAULT_ENUMERATION_CAP = 10**6
ENUMERATION_CAP_ENV = "SUBSPACE_CODES_ENUM_CAP"

Row = tuple[int, ...]


def enumeration_cap() -> int:
    """Cap on ``q**(l*(N-l))`` for exhaustive routines; overridable by env var."""
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{ENUMERATION_CAP_ENV}={raw!r} is not an integer") from None


def rref(rows: Iterable[Sequence[int]], q: int, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_q.

    Zero rows are dropped. Pivot search is restricted to the first ``ncols``
    columns when given; row operations still act on the full width.

    Returns:
        (rows, pivots): the nonzero RREF rows and their pivot columns.
    """
    mat = [[int(x) % q for x in r] for r in rows]
    if not mat:
        return [], []
    width = len(mat[0])
    limit = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        if lead != 1:
            inv = pow(lead, -1, q)
            mat[r] = [(x * inv) % q for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r:
                c = mat[i][col]
                if c:
                    row = mat[i]
                    mat[i] = [(a - c * b) % q for a, b in zip(row, prow)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Iterable[Sequence[int]], q: int) -> int:
    return len(rref(rows, q)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^N held by its canonical RREF basis."""

    q: int
    n: int
    basis: tuple[Row, ...]

    def __post_init__(self) -> None:
        for row in self.basis:
            if len(row) != self.n:
                raise ParameterError(f"basis row of length {len(row)} in ambient dimension {self.n}")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]], q: int, n: int) -> Subspace:
        """Row space of ``rows`` in canonical form; an empty list gives {0}."""
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise ParameterError(f"vector of length {len(r)} in F_{q}^{n}")
        reduced, _ = rref(rows, q)
        return cls(q, n, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, q: int, n: int) -> Subspace:
        return cls(q, n, ())

    @classmethod
    def full(cls, q: int, n: int) -> Subspace:
        return cls(q, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    # -- basic properties --------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def _compatible(self, other: Subspace) -> None:
        if (self.q, self.n) != (other.q, other.n):
            raise ParameterError(
                f"ambient mismatch: F_{self.q}^{self.n} vs F_{other.q}^{other.n}"
            )

    def contains(self, v: Sequence[int]) -> bool:
        """Membership test by reduction against the RREF basis."""
        if len(v) != self.n:
            raise ParameterError("vector length does not match ambient dimension")
        w = [int(x) % self.q for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                w = [(a - c * b) % self.q for a, b in zip(w, row)]
        return not any(w)

    def is_subspace_of(self, other: Subspace) -> bool:
        self._compatible(other)
        return all(other.contains(r) for r in self.basis)

    def vectors(self) -> Iterator[Row]:
        """Every vector of the subspace (q**dim of them)."""
        q, n = self.q, self.n
        for coeffs in itertools.product(range(q), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % q for a, b in zip(v, row)]
            yield tuple(v)

    # -- lattice operations ------------------------------------------------

    def __add__(self, other: Subspace) -> Subspace:
        return self.sum(other)

    def __and__(self, other: Subspace) -> Subspace:
        return self.intersect(other)

    def sum(self, other: Subspace) -> Subspace:
        self._compatible(other)
        return Subspace.from_generators(self.basis + other.basis, self.q, self.n)

    def intersect(self, other: Subspace) -> Subspace:
        """Zassenhaus intersection: one echelon reduction of ``[[U, U], [V, 0]]``."""
        self._compatible(other)
        q, n = self.q, self.n
        block = [list(u) + list(u) for u in self.basis]
        block += [list(v) + [0] * n for v in other.basis]
        reduced, pivots = rref(block, q)
        inter = [row[n:] for row, p in zip(reduced, pivots) if p >= n]
        return Subspace.from_generators(inter, q, n)

    def distance(self, other: Subspace) -> int:
        """Subspace distance ``dim(U+V) - dim(U∩V)``.

        Computed as ``2 dim(U+V) - dim U - dim V`` (the dimension identity),
        which needs a single rank computation.
        """
        self._compatible(other)
        return 2 * rank(self.basis + other.basis, self.q) - self.dim - other.dim

    def orthogonal_complement(self) -> Subspace:
        """Null space of the basis under the standard bilinear form."""
        q, n = self.q, self.n
        pivots = self.pivots
        free = [j for j in range(n) if j not in set(pivots)]
        gens = []
        for j in free:
            v = [0] * n
            v[j] = 1
            for row, p in zip(self.basis, pivots):
                v[p] = (-row[j]) % q
            gens.append(v)
        return Subspace.from_generators(gens, q, n)

    def coordinates(self, v: Sequence[int]) -> Row:
        """Coordinates of ``v`` in this RREF basis (read off the pivot columns)."""
        if not self.contains(v):
            raise ParameterError("vector is not in the subspace")
        return tuple(int(v[p]) % self.q for p in self.pivots)

    def __repr__(self) -> str:
        rows = "; ".join("".join(str(x) for x in r) for r in self.basis)
        return f"Subspace(q={self.q}, n={self.n}, dim={self.dim}, [{rows}])"


def sum_of(spaces: Iterable[Subspace]) -> Subspace:
    spaces = list(spaces)
    if not spaces:
        raise ParameterError("need at least one subspace")
    out = spaces[0]
    for s in spaces[1:]:
        out = out + s
    return out


def random_matrix(rng: np.random.Generator, rows: int, cols: int, q: int) -> list[list[int]]:
    return rng.integers(0, q, size=(rows, cols)).tolist() if rows and cols else [[0] * cols for _ in range(rows)]


def random_full_rank(rng: np.random.Generator, rows: int, cols: int, q: int) -> list[list[int]]:
    """Uniform ``rows x cols`` matrix over F_q conditioned on full row rank (rejection)."""
    if rows > cols:
        raise ParameterError(f"no {rows}x{cols} matrix has full row rank")
    while True:
        mat = random_matrix(rng, rows, cols, q)
        if rank(mat, q) == rows:
            return mat


def random_subspace(q: int, n: int, k: int, rng=None) -> Subspace:
    """Uniformly random k-dimensional subspace of F_q^n.

    Rejection-samples k x n matrices until one has rank k; every k-subspace
    has the same number of ordered bases, so the row space is uniform.
    """
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= N, got k={k}, N={n}")
    rng = as_generator(rng)
    return Subspace.from_generators(random_full_rank(rng, k, n, q), q, n)


def random_subspace_of(space: Subspace, k: int, rng=None) -> Subspace:
    """Uniformly random k-dimensional subspace of ``space`` (k <= dim)."""
    if not 0 <= k <= space.dim:
        raise ParameterError(f"need 0 <= k <= {space.dim}, got {k}")
    rng = as_generator(rng)
    q = space.q
    coeffs = random_full_rank(rng, k, space.dim, q)
    rows = []
    for c in coeffs:
        v = [0] * space.n
        for a, row in zip(c, space.basis):
            if a:
                v = [(x + a * y) % q for x, y in zip(v, row)]
        rows.append(v)
    return Subspace.from_generators(rows, q, space.n)


def grassmannian_size_hint(q: int, n: int, l: int) -> int:
    """``q**(l*(n-l))``, the quantity compared against the enumeration cap."""
    return q ** (l * (n - l))


def check_enumerable(q: int, n: int, l: int, cap: int | None = None) -> None:
    cap = enumeration_cap() if cap is None else cap
    size = grassmannian_size_hint(q, n, l)
    if size > cap:
        raise ResourceError(
            f"enumerating P(F_{q}^{n}, {l}) needs q^(l(N-l)) = {size} > enumeration cap {cap}"
        )


def iter_grassmannian(q: int, n: int, l: int, cap: int | None = None) -> Iterator[Subspace]:
    """All l-dimensional subspaces of F_q^n, each once, in canonical form.

    Order: pivot-column sets lexicographically, then free entries by
    ``itertools.product`` order.
    """
    if not is_prime(q):
        raise ParameterError(f"q={q} is not prime")
    if not 0 <= l <= n:
        raise ParameterError(f"need 0 <= l <= N, got l={l}, N={n}")
    check_enumerable(q, n, l, cap)
    for pivots in itertools.combinations(range(n), l):
        pset = set(pivots)
        slots = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(l)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(slots, values):
                rows[i][j] = v
            yield Subspace(q, n, tuple(tuple(r) for r in rows))


def enumerate_grassmannian(q: int, n: int, l: int, cap: int | None = None) -> list[Subspace]:
    return list(iter_grassmannian(q, n, l, cap))
