"""Exact Gaussian-rational scalars and the linear-algebra kernel.

Everything downstream (spinors, Clifford operators, connections) is built on
:class:`Scalar`, a complex number with arbitrary-precision rational real and
imaginary parts, and on :class:`Subspace`, whose basis is kept in reduced
row-echelon form so that two subspaces are equal exactly when their bases are.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

__all__ = [
    "Scalar",
    "ONE",
    "ZERO",
    "I_UNIT",
    "Matrix",
    "Subspace",
    "DimensionError",
    "as_scalar",
    "rref",
    "kernel_basis",
    "subspace_sum",
    "subspace_intersection",
    "subspace_contains",
    "random_scalar",
]


class DimensionError(ValueError):
    """Raised when operands live in spaces of different dimension."""


_MPQ_ZERO = mpq(0)


class Scalar:
    """Element of Q(i): ``re + im*i`` with exact rational parts.

    Rational parts are ``gmpy2.mpq`` values, which are always reduced with a
    positive denominator, so equality and hashing are structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_MPQ_ZERO) else mpq(re)
        self.im = im if type(im) is type(_MPQ_ZERO) else mpq(im)

    @classmethod
    def _raw(cls, re, im):
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._raw(a * c, _MPQ_ZERO)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def inverse(self) -> Scalar:
        a, b = self.re, self.im
        if not b:
            return Scalar._raw(1 / a, _MPQ_ZERO)
        norm = a * a + b * b
        return Scalar._raw(a / norm, -b / norm)

    def conjugate(self) -> Scalar:
        return Scalar._raw(self.re, -self.im)

    # comparison -----------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not Scalar:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    # text -----------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re},{self.im})"

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
I_UNIT = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    """Coerce ints, fractions, mpq values and exact-integer complexes."""
    if type(x) is Scalar:
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)) or type(x) is type(_MPQ_ZERO):
        return Scalar._raw(mpq(x), _MPQ_ZERO)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise TypeError(f"refusing inexact complex {x!r}")
        return Scalar(int(x.real), int(x.imag))
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


def random_scalar(rng: random.Random, *, complex_prob: float = 0.2, zero_prob: float = 0.0) -> Scalar:
    """Small Gaussian rational drawn from ``rng``.

    Real parts are in [-3, 3] with denominator 1 or 2; an imaginary part is
    added with probability ``complex_prob``.
    """
    if zero_prob and rng.random() < zero_prob:
        return ZERO
    re = mpq(rng.randint(-3, 3), rng.choice((1, 1, 2)))
    im = mpq(rng.randint(-2, 2), rng.choice((1, 2))) if rng.random() < complex_prob else _MPQ_ZERO
    return Scalar._raw(re, im)


@dataclass(frozen=True)
class Matrix:
    """Dense ``rows x cols`` Scalar matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(as_scalar(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> Matrix:
        entries = [ZERO] * (size * size)
        for i in range(size):
            entries[i * size + i] = ONE
        return cls(size, size, tuple(entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(self.entries[i * self.cols + j]
                                                  for j in range(self.cols) for i in range(self.rows)))

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix(self.rows, self.cols, tuple(c * a if a else ZERO for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        m, n, p = self.rows, self.cols, other.cols
        b_rows = [[(j, x) for j, x in enumerate(other.row(k)) if x] for k in range(n)]
        out = []
        for i in range(m):
            acc = [ZERO] * p
            for k, a in enumerate(self.row(i)):
                if not a:
                    continue
                for j, b in b_rows[k]:
                    acc[j] = acc[j] + a * b
            out.extend(acc)
        return Matrix(m, p, tuple(out))

    def apply(self, vec: Sequence) -> list[Scalar]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match matrix columns")
        nz = [(j, x) for j, x in enumerate(vec) if x]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            acc = ZERO
            for j, x in nz:
                if r[j]:
                    acc = acc + r[j] * x
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check_same(self, other: Matrix):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix shapes differ")

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


# ---------------------------------------------------------------------------
# row reduction


def _reduce(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Return (nonzero RREF rows, pivot columns). ``rows`` is consumed."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        inv = prow[col].inverse()
        if inv != ONE:
            prow = [x * inv if x else ZERO for x in prow]
            rows[r] = prow
        nz = [(j, prow[j]) for j in range(col, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][col]
            if not f:
                continue
            row = rows[i]
            for j, x in nz:
                row[j] = row[j] - f * x
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form of ``m``, with pivot columns and rank.

    The returned matrix has the same shape as ``m`` (zero rows at the bottom).
    """
    rows, pivots = _reduce(m.to_rows(), m.cols)
    rank = len(rows)
    out = [x for row in rows for x in row]
    out.extend([ZERO] * ((m.rows - rank) * m.cols))
    return Matrix(m.rows, m.cols, tuple(out)), pivots, rank


def _kernel_vectors(rows: list[list[Scalar]], ncols: int) -> list[list[Scalar]]:
    reduced, pivots = _reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def kernel_basis(m: Matrix) -> Subspace:
    """The null space ``{x : m x = 0}`` as a canonical subspace of ``Q(i)^cols``."""
    return Subspace.span(m.cols, _kernel_vectors(m.to_rows(), m.cols))


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``Q(i)^ambient_dim`` held by its canonical RREF basis."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise DimensionError("basis width differs from ambient dimension")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = []
        for v in vectors:
            v = [as_scalar(x) for x in v]
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            if any(v):
                rows.append(v)
        reduced, _ = _reduce(rows, ambient_dim)
        return cls(ambient_dim, Matrix(len(reduced), ambient_dim, tuple(x for r in reduced for x in r)))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix(0, ambient_dim, ()))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def rank(self) -> int:
        return self.basis.rows

    dim = rank

    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.rank)]

    def pivots(self) -> list[int]:
        out = []
        for v in self.vectors():
            out.append(next(j for j, x in enumerate(v) if x))
        return out

    def contains_vector(self, v: Sequence) -> bool:
        """Reduce ``v`` against the RREF basis; membership iff it vanishes."""
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length differs from ambient dimension")
        v = [as_scalar(x) for x in v]
        for row, p in zip(self.vectors(), self.pivots()):
            f = v[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - f * row[j]
        return not any(v)

    def coordinates(self, v: Sequence) -> list[Scalar]:
        """Coefficients of ``v`` in the canonical basis (``v`` must be a member)."""
        if not self.contains_vector(v):
            raise ValueError("vector is not in the subspace")
        return [as_scalar(v[p]) for p in self.pivots()]

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)


def _check_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}")


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return Subspace.span(s1.ambient_dim, s1.vectors() + s2.vectors())


def subspace_intersection(s1: Subspace, s2: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[A, A], [B, 0]]``; rows with a zero left half span the intersection."""
    _check_ambient(s1, s2)
    d = s1.ambient_dim
    if s1.rank == 0 or s2.rank == 0:
        return Subspace.zero(d)
    zero = [ZERO] * d
    rows = [list(v) + list(v) for v in s1.vectors()] + [list(v) + zero for v in s2.vectors()]
    reduced, pivots = _reduce(rows, 2 * d)
    return Subspace.span(d, [row[d:] for row, p in zip(reduced, pivots) if p >= d])


def subspace_contains(s1: Subspace, s2: Subspace) -> bool:
    """True iff ``s2`` is a subset of ``s1``."""
    _check_ambient(s1, s2)
    if s2.rank > s1.rank:
        return False
    return all(s1.contains_vector(v) for v in s2.vectors())
