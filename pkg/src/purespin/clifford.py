"""Vectors of V⊕V*, their metric, and the Clifford action on ∧V*.

Frame indices run over ``1..2n`` with ``e_{i+n} = θ^i``.  Operators on the
spinor space are dense ``2^n x 2^n`` matrices over the blade basis ordered by
mask value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .exact_linalg import ONE, ZERO, DimensionError, Matrix, Scalar, as_scalar
from .exterior import Spinor, interior, popcount, reverse_sign, theta_wedge, wedge_sign

__all__ = [
    "PhaseVector",
    "CliffordOp",
    "frame_vector",
    "metric",
    "frame_metric",
    "inverse_frame_metric",
    "clifford_action",
    "frame_action",
    "operator_of",
    "antisym_product",
    "pseudo_scalar",
    "pseudo_scalar_action",
    "chirality_split",
    "spinor_inner",
]

_HALF = Scalar(1) / 2


@dataclass(frozen=True)
class PhaseVector:
    """``v = Σ e_i x^i + Σ θ^i y_i`` stored as (e_part, theta_part)."""

    n: int
    e_part: tuple
    theta_part: tuple

    def __post_init__(self):
        if len(self.e_part) != self.n or len(self.theta_part) != self.n:
            raise DimensionError("PhaseVector parts must have length n")
        object.__setattr__(self, "e_part", tuple(as_scalar(x) for x in self.e_part))
        object.__setattr__(self, "theta_part", tuple(as_scalar(x) for x in self.theta_part))

    @classmethod
    def from_coords(cls, n: int, coords: Sequence) -> PhaseVector:
        if len(coords) != 2 * n:
            raise DimensionError(f"need {2 * n} coordinates, got {len(coords)}")
        return cls(n, tuple(coords[:n]), tuple(coords[n:]))

    @classmethod
    def zero(cls, n: int) -> PhaseVector:
        return cls(n, (ZERO,) * n, (ZERO,) * n)

    def coords(self) -> tuple:
        """Frame components ``v^a``, a = 1..2n (e-part first)."""
        return self.e_part + self.theta_part

    def __getitem__(self, a: int) -> Scalar:
        """Component along frame index ``a`` (1-based)."""
        return self.coords()[a - 1]

    def __bool__(self):
        return any(self.e_part) or any(self.theta_part)

    def _check(self, other: PhaseVector):
        if self.n != other.n:
            raise DimensionError(f"vectors over n={self.n} and n={other.n}")

    def __add__(self, other: PhaseVector) -> PhaseVector:
        self._check(other)
        return PhaseVector.from_coords(self.n, [a + b for a, b in zip(self.coords(), other.coords())])

    def __sub__(self, other: PhaseVector) -> PhaseVector:
        self._check(other)
        return PhaseVector.from_coords(self.n, [a - b for a, b in zip(self.coords(), other.coords())])

    def __neg__(self) -> PhaseVector:
        return PhaseVector.from_coords(self.n, [-a for a in self.coords()])

    def scale(self, k) -> PhaseVector:
        k = as_scalar(k)
        return PhaseVector.from_coords(self.n, [k * a for a in self.coords()])

    def __mul__(self, k) -> PhaseVector:
        return self.scale(k)

    __rmul__ = __mul__

    def __str__(self):
        from .cli.parsing import format_phase_vector

        return format_phase_vector(self)


def frame_vector(n: int, a: int) -> PhaseVector:
    """Frame element e_a (a ≤ n) or θ^{a-n} (a > n)."""
    if not 1 <= a <= 2 * n:
        raise ValueError(f"frame index {a} out of range 1..{2 * n}")
    coords = [ZERO] * (2 * n)
    coords[a - 1] = ONE
    return PhaseVector.from_coords(n, coords)


def metric(v: PhaseVector, u: PhaseVector) -> Scalar:
    """⟨e+θ, e'+θ'⟩ = ½[θ(e') + θ'(e)]."""
    v._check(u)
    acc = ZERO
    for i in range(v.n):
        acc = acc + v.theta_part[i] * u.e_part[i] + u.theta_part[i] * v.e_part[i]
    return acc * _HALF


def frame_metric(n: int, a: int, b: int) -> Scalar:
    """g_ab in the frame {e_i, θ^i}: ½ when a and b are dual partners, else 0."""
    return _HALF if abs(a - b) == n and a != b else ZERO


def inverse_frame_metric(n: int, a: int, b: int) -> Scalar:
    """g^ab: 2 when a and b are dual partners, else 0."""
    return Scalar(2) if abs(a - b) == n and a != b else ZERO


def frame_action(n: int, a: int, s: Spinor) -> Spinor:
    """e_a · s for a single frame element."""
    if a <= n:
        return interior(a, s)
    return theta_wedge(a - n, s)


def clifford_action(v: PhaseVector, s: Spinor) -> Spinor:
    """(e+θ)·s = e⌟s + θ∧s."""
    if v.n != s.n:
        raise DimensionError(f"vector over n={v.n} acting on spinor over n={s.n}")
    out = Spinor.zero(s.n)
    for i in range(v.n):
        x = v.e_part[i]
        if x:
            out = out + interior(i + 1, s).scale(x)
        y = v.theta_part[i]
        if y:
            out = out + theta_wedge(i + 1, s).scale(y)
    return out


@dataclass(frozen=True)
class CliffordOp:
    """Linear endomorphism of ∧V*, as a dense matrix on the ascending-mask blade basis."""

    n: int
    matrix: Matrix

    def __post_init__(self):
        d = 1 << self.n
        if self.matrix.rows != d or self.matrix.cols != d:
            raise DimensionError(f"operator over n={self.n} must be {d}x{d}")

    @classmethod
    def from_action(cls, n: int, action: Callable[[Spinor], Spinor]) -> CliffordOp:
        d = 1 << n
        cols = [action(Spinor._wrap(n, {m: ONE})) for m in range(d)]
        entries = [ZERO] * (d * d)
        for j, col in enumerate(cols):
            for i, x in col.items():
                entries[i * d + j] = x
        return cls(n, Matrix(d, d, tuple(entries)))

    @classmethod
    def identity(cls, n: int) -> CliffordOp:
        return cls(n, Matrix.identity(1 << n))

    @classmethod
    def zero(cls, n: int) -> CliffordOp:
        d = 1 << n
        return cls(n, Matrix.zeros(d, d))

    def _check(self, other: CliffordOp):
        if self.n != other.n:
            raise DimensionError("operators over different n")

    def __matmul__(self, other: CliffordOp) -> CliffordOp:
        self._check(other)
        return CliffordOp(self.n, self.matrix @ other.matrix)

    def __add__(self, other: CliffordOp) -> CliffordOp:
        self._check(other)
        return CliffordOp(self.n, self.matrix + other.matrix)

    def __sub__(self, other: CliffordOp) -> CliffordOp:
        self._check(other)
        return CliffordOp(self.n, self.matrix - other.matrix)

    def __neg__(self) -> CliffordOp:
        return CliffordOp(self.n, -self.matrix)

    def scale(self, k) -> CliffordOp:
        return CliffordOp(self.n, self.matrix.scale(k))

    def __mul__(self, k) -> CliffordOp:
        return self.scale(k)

    __rmul__ = __mul__

    def apply(self, s: Spinor) -> Spinor:
        if s.n != self.n:
            raise DimensionError("spinor and operator over different n")
        return Spinor.from_vector(self.n, self.matrix.apply(s.to_vector()))

    __call__ = apply

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def operator_of(v: PhaseVector) -> CliffordOp:
    return CliffordOp.from_action(v.n, lambda s: clifford_action(v, s))


def antisym_product(vs: Sequence[PhaseVector]) -> CliffordOp:
    """(1/p!) Σ_σ sign(σ) v_σ(1) ⋯ v_σ(p), as an operator."""
    if not vs:
        raise ValueError("antisym_product needs at least one vector")
    n = vs[0].n
    for v in vs:
        if v.n != n:
            raise DimensionError("vectors over different n")
    p = len(vs)
    ops = [operator_of(v) for v in vs]
    total = CliffordOp.zero(n)
    for perm in itertools.permutations(range(p)):
        prod = ops[perm[0]]
        for k in perm[1:]:
            prod = prod @ ops[k]
        total = total + prod if _perm_sign(perm) > 0 else total - prod
    return total.scale(Scalar(1) / factorial(p))


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _pair_factor(n: int, i: int, s: Spinor) -> Spinor:
    """(e_i θ^i − θ^i e_i) · s."""
    return interior(i, theta_wedge(i, s)) - theta_wedge(i, interior(i, s))


def pseudo_scalar_action(s: Spinor) -> Spinor:
    """𝓘·s via the ordered product Π_i (e_iθ^i − θ^i e_i); factors act right to left."""
    for i in range(s.n, 0, -1):
        s = _pair_factor(s.n, i, s)
    return s


@lru_cache(maxsize=None)
def pseudo_scalar(n: int) -> CliffordOp:
    if n < 1:
        raise ValueError("pseudo_scalar needs n >= 1")
    op = CliffordOp.identity(n)
    for i in range(1, n + 1):
        e = operator_of(frame_vector(n, i))
        t = operator_of(frame_vector(n, i + n))
        op = op @ (e @ t - t @ e)
    return op


def chirality_split(s: Spinor) -> tuple[Spinor, Spinor]:
    """(½(s + 𝓘s), ½(s − 𝓘s))."""
    i_s = pseudo_scalar_action(s)
    return (s + i_s).scale(_HALF), (s - i_s).scale(_HALF)


def spinor_inner(a: Spinor, b: Spinor) -> Scalar:
    """λ with <reverse(a) ∧ b>_n = λ θ̂^{12…n}."""
    if a.n != b.n:
        raise DimensionError(f"spinors over n={a.n} and n={b.n}")
    top = (1 << a.n) - 1
    bc = b.coeffs
    acc = ZERO
    for ma, xa in a.items():
        mb = top ^ ma
        xb = bc.get(mb)
        if xb is None:
            continue
        s = wedge_sign(ma, mb) * reverse_sign(popcount(ma))
        p = xa * xb
        acc = acc + p if s > 0 else acc - p
    return acc
