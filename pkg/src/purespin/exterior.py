"""The spinor space S = ∧V* with a blade-bitmask encoding.

A blade θ^{i1}∧…∧θ^{ik} (i1 < … < ik) is the integer with bits ``i1-1, …,
ik-1`` set.  A :class:`Spinor` is a sparse map from such masks to
:class:`~purespin.exact_linalg.Scalar` with no stored zeros.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .exact_linalg import ONE, ZERO, DimensionError, Scalar, as_scalar

__all__ = [
    "Spinor",
    "blade",
    "blade_mask",
    "mask_indices",
    "wedge",
    "interior",
    "theta_wedge",
    "grade_project",
    "graded",
    "reverse",
    "wedge_sign",
    "reverse_sign",
]


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_indices(mask: int) -> list[int]:
    """1-based indices present in a blade mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def blade_mask(indices: Iterable[int]) -> tuple[int, int]:
    """Mask and orientation sign of θ^{indices} in the given (possibly unsorted) order.

    Returns sign 0 if an index repeats.
    """
    mask = 0
    sign = 1
    for i in indices:
        bit = 1 << (i - 1)
        if mask & bit:
            return 0, 0
        # moving θ^i left past every larger index already present
        if popcount(mask & ~((bit << 1) - 1)) & 1:
            sign = -sign
        mask |= bit
    return mask, sign


def wedge_sign(a: int, b: int) -> int:
    """Sign of reordering blade(a)∧blade(b) into ascending order (0 if they share an index)."""
    if a & b:
        return 0
    swaps = 0
    a >>= 1
    while a:
        swaps += popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def reverse_sign(grade: int) -> int:
    return -1 if (grade * (grade - 1) // 2) & 1 else 1


class Spinor:
    """Element of ∧V* for ``dim V = n``."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: Mapping[int, object] | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        c = {}
        if coeffs:
            top = 1 << n
            for mask, x in coeffs.items():
                if not 0 <= mask < top:
                    raise ValueError(f"blade mask {mask} out of range for n={n}")
                x = as_scalar(x)
                if x:
                    c[mask] = x
        self._c = c

    @classmethod
    def _wrap(cls, n: int, c: dict) -> Spinor:
        s = object.__new__(cls)
        s.n = n
        s._c = c
        return s

    @classmethod
    def zero(cls, n: int) -> Spinor:
        return cls._wrap(n, {})

    @classmethod
    def one(cls, n: int) -> Spinor:
        return cls._wrap(n, {0: ONE})

    @classmethod
    def from_vector(cls, n: int, vec) -> Spinor:
        """Inverse of :meth:`to_vector`: dense coordinates in ascending-mask order."""
        if len(vec) != 1 << n:
            raise DimensionError("dense spinor has wrong length")
        return cls._wrap(n, {m: as_scalar(x) for m, x in enumerate(vec) if x})

    @property
    def coeffs(self) -> dict[int, Scalar]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, mask: int) -> Scalar:
        return self._c.get(mask, ZERO)

    def to_vector(self) -> list[Scalar]:
        out = [ZERO] * (1 << self.n)
        for m, x in self._c.items():
            out[m] = x
        return out

    def grades(self) -> set[int]:
        return {popcount(m) for m in self._c}

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __hash__(self):
        return hash((self.n, frozenset(self._c.items())))

    def _check(self, other: Spinor):
        if self.n != other.n:
            raise DimensionError(f"spinors over n={self.n} and n={other.n}")

    def __add__(self, other: Spinor) -> Spinor:
        self._check(other)
        c = dict(self._c)
        for m, x in other._c.items():
            y = c.get(m)
            if y is None:
                c[m] = x
            else:
                y = y + x
                if y:
                    c[m] = y
                else:
                    del c[m]
        return Spinor._wrap(self.n, c)

    def __neg__(self) -> Spinor:
        return Spinor._wrap(self.n, {m: -x for m, x in self._c.items()})

    def __sub__(self, other: Spinor) -> Spinor:
        return self + (-other)

    def scale(self, k) -> Spinor:
        k = as_scalar(k)
        if not k:
            return Spinor.zero(self.n)
        return Spinor._wrap(self.n, {m: k * x for m, x in self._c.items()})

    def __mul__(self, k) -> Spinor:
        if isinstance(k, Spinor):
            return NotImplemented
        return self.scale(k)

    __rmul__ = __mul__

    def __repr__(self):
        from .cli.parsing import format_spinor

        return f"Spinor({self.n}, {format_spinor(self)!r})"


def blade(n: int, *indices: int, coeff=1) -> Spinor:
    """``coeff * θ̂^{indices}``; ``blade(n)`` is 1̂."""
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
    mask, sign = blade_mask(indices)
    if not sign:
        return Spinor.zero(n)
    return Spinor._wrap(n, {mask: as_scalar(coeff) * sign})


def _acc(c: dict, m: int, x: Scalar):
    y = c.get(m)
    if y is None:
        c[m] = x
    else:
        y = y + x
        if y:
            c[m] = y
        else:
            del c[m]


def wedge(a: Spinor, b: Spinor) -> Spinor:
    a._check(b)
    c: dict = {}
    for ma, xa in a._c.items():
        for mb, xb in b._c.items():
            s = wedge_sign(ma, mb)
            if s:
                p = xa * xb
                _acc(c, ma | mb, p if s > 0 else -p)
    return Spinor._wrap(a.n, c)


def theta_wedge(index: int, a: Spinor) -> Spinor:
    """θ^index ∧ a."""
    if not 1 <= index <= a.n:
        raise ValueError(f"index {index} out of range 1..{a.n}")
    bit = 1 << (index - 1)
    below = bit - 1
    c = {}
    for m, x in a._c.items():
        if m & bit:
            continue
        c[m | bit] = -x if popcount(m & below) & 1 else x
    return Spinor._wrap(a.n, c)


def interior(index: int, a: Spinor) -> Spinor:
    """e_index ⌟ a, the degree −1 derivation dual to θ^index."""
    if not 1 <= index <= a.n:
        raise ValueError(f"index {index} out of range 1..{a.n}")
    bit = 1 << (index - 1)
    below = bit - 1
    c = {}
    for m, x in a._c.items():
        if m & bit:
            c[m ^ bit] = -x if popcount(m & below) & 1 else x
    return Spinor._wrap(a.n, c)


def grade_project(a: Spinor, k: int) -> Spinor:
    return Spinor._wrap(a.n, {m: x for m, x in a._c.items() if popcount(m) == k})


def graded(a: Spinor) -> dict[int, Spinor]:
    """Homogeneous components by degree (only nonzero ones)."""
    out: dict[int, dict] = {}
    for m, x in a._c.items():
        out.setdefault(popcount(m), {})[m] = x
    return {k: Spinor._wrap(a.n, c) for k, c in sorted(out.items())}


def reverse(a: Spinor) -> Spinor:
    return Spinor._wrap(a.n, {m: (x if reverse_sign(popcount(m)) > 0 else -x) for m, x in a._c.items()})
