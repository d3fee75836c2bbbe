"""Pointwise spinorial connection in the null frame {e_i, θ^i}.

A :class:`FrameConnection` holds the frame coefficients ω_abc (all indices
down, ∇_a e_b = ω_ab^c e_c) and the gauge 1-form A_a at a point.  Spinor
fields enter as first-order jets: the value φ^β and the directional
derivatives ∂_a φ^β.  Frame indices are 1-based, ``a ≤ n`` is e_a and
``a > n`` is θ^{a-n}.

Index raising uses the constant frame metric: g_{i,i+n} = 1/2 and
g^{i,i+n} = 2, so an upper index i is the lower index i+n times 2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .clifford import (
    CliffordOp,
    PhaseVector,
    clifford_action,
    frame_action,
    frame_vector,
    inverse_frame_metric,
    operator_of,
    spinor_inner,
)
from .exact_linalg import ONE, ZERO, DimensionError, Scalar, as_scalar, random_scalar
from .exterior import Spinor, blade

__all__ = [
    "AntisymmetryError",
    "FrameConnection",
    "SpinorJet",
    "CurvatureData",
    "TwistorGauge",
    "omega_action",
    "omega_operator",
    "check_omega_relation",
    "covariant_derivative",
    "vector_covariant_derivative",
    "scaling_transform",
    "scale_jet",
    "leibniz_inner_check",
    "curvature_action",
    "dirac",
    "twistor_component",
    "twistor_closed_form",
    "twistor_gauge",
    "parallel_gauge",
    "lie_bracket",
    "integrability_check",
    "totally_geodesic_check",
    "condition_geom_check",
    "condition_geom_witness",
    "random_connection",
    "force_integrable",
    "force_totally_geodesic",
    "table1_connection",
]

_QUARTER = Scalar(1) / 4
_HALF = Scalar(1) / 2


class AntisymmetryError(ValueError):
    """ω_abc = -ω_acb fails for some entry."""

    def __init__(self, message: str, entry=None):
        super().__init__(message)
        self.entry = entry


def _partner(n: int, a: int) -> int:
    return a + n if a <= n else a - n


@dataclass(frozen=True)
class FrameConnection:
    n: int
    omega: tuple  # flat (2n)^3, ω_abc at ((a-1)*2n + b-1)*2n + c-1
    A: tuple

    def __post_init__(self):
        N = 2 * self.n
        if len(self.omega) != N ** 3:
            raise DimensionError(f"omega needs {N ** 3} entries")
        if len(self.A) != N:
            raise DimensionError(f"A needs {N} entries")
        object.__setattr__(self, "omega", tuple(as_scalar(x) for x in self.omega))
        object.__setattr__(self, "A", tuple(as_scalar(x) for x in self.A))
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                for c in range(b, N + 1):
                    x, y = self.w(a, b, c), self.w(a, c, b)
                    if x + y:
                        raise AntisymmetryError(
                            f"omega_{a}{b}{c} = {x} but omega_{a}{c}{b} = {y}", (a, b, c)
                        )

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, n: int, A: Sequence | None = None) -> FrameConnection:
        N = 2 * n
        return cls(n, (ZERO,) * N ** 3, tuple(A) if A is not None else (ZERO,) * N)

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[tuple, object], A: Sequence | None = None) -> FrameConnection:
        """Entries keyed by 1-based (a, b, c); partners must be supplied explicitly."""
        N = 2 * n
        flat = [ZERO] * N ** 3
        for (a, b, c), x in entries.items():
            for i in (a, b, c):
                if not 1 <= i <= N:
                    raise ValueError(f"frame index {i} out of range 1..{N}")
            flat[((a - 1) * N + b - 1) * N + c - 1] = as_scalar(x)
        return cls(n, tuple(flat), tuple(A) if A is not None else (ZERO,) * N)

    def with_gauge(self, A: Sequence) -> FrameConnection:
        return replace(self, A=tuple(A))

    # access ---------------------------------------------------------------
    def w(self, a: int, b: int, c: int) -> Scalar:
        """ω_abc."""
        N = 2 * self.n
        return self.omega[((a - 1) * N + b - 1) * N + c - 1]

    def w_up(self, a: int, b: int, c: int) -> Scalar:
        """ω_ab^c = ω_abd g^dc."""
        return 2 * self.w(a, b, _partner(self.n, c))

    def w_up2(self, a: int, b: int, c: int) -> Scalar:
        """ω_a^bc."""
        n = self.n
        return 4 * self.w(a, _partner(n, b), _partner(n, c))

    def nonzero_entries(self):
        N = 2 * self.n
        for a, b, c in itertools.product(range(1, N + 1), repeat=3):
            x = self.w(a, b, c)
            if x:
                yield (a, b, c), x

    def entries_dict(self) -> dict:
        return dict(self.nonzero_entries())


def _check_index(n: int, a: int):
    if not 1 <= a <= 2 * n:
        raise ValueError(f"frame index {a} out of range 1..{2 * n}")


@dataclass(frozen=True)
class SpinorJet:
    """Value and first derivatives ∂_a of a spinor field at a point."""

    value: Spinor
    derivs: tuple

    def __post_init__(self):
        n = self.value.n
        if len(self.derivs) != 2 * n:
            raise DimensionError(f"jet needs {2 * n} derivatives")
        if any(d.n != n for d in self.derivs):
            raise DimensionError("jet spinors over different n")

    @classmethod
    def constant(cls, value: Spinor) -> SpinorJet:
        return cls(value, tuple(Spinor.zero(value.n) for _ in range(2 * value.n)))

    @property
    def n(self) -> int:
        return self.value.n


# ---------------------------------------------------------------------------
# Ω_a and the covariant derivative


def omega_action(c: FrameConnection, a: int, s: Spinor) -> Spinor:
    """Ω_a·s with Ω_a = -¼ ω_a^bc e_b e_c + A_a."""
    n = c.n
    _check_index(n, a)
    N = 2 * n
    out = s.scale(c.A[a - 1]) if c.A[a - 1] else Spinor.zero(n)
    inner = [frame_action(n, d, s) for d in range(1, N + 1)]
    for b in range(1, N + 1):
        acc = Spinor.zero(n)
        for d in range(1, N + 1):
            x = c.w_up2(a, b, d)
            if x and inner[d - 1]:
                acc = acc + inner[d - 1].scale(x)
        if acc:
            out = out + frame_action(n, b, acc).scale(-_QUARTER)
    return out


def omega_operator(c: FrameConnection, a: int) -> CliffordOp:
    _check_index(c.n, a)
    return CliffordOp.from_action(c.n, lambda s: omega_action(c, a, s))


def check_omega_relation(c: FrameConnection) -> bool:
    """ω_ab^c E_c == Ω_a E_b - E_b Ω_a for all a, b, as operators."""
    n = c.n
    N = 2 * n
    E = [operator_of(frame_vector(n, b)) for b in range(1, N + 1)]
    for a in range(1, N + 1):
        Om = omega_operator(c, a)
        for b in range(1, N + 1):
            lhs = CliffordOp.zero(n)
            for cc in range(1, N + 1):
                x = c.w_up(a, b, cc)
                if x:
                    lhs = lhs + E[cc - 1].scale(x)
            if lhs != Om @ E[b - 1] - E[b - 1] @ Om:
                return False
    return True


def covariant_derivative(c: FrameConnection, j: SpinorJet, a: int) -> Spinor:
    """∇̂_a φ = (∂_a φ^β) ψ_β + φ^β Ω_a·ψ_β."""
    _check_index(c.n, a)
    if j.n != c.n:
        raise DimensionError("jet and connection over different n")
    return j.derivs[a - 1] + omega_action(c, a, j.value)


def vector_covariant_derivative(c: FrameConnection, v: PhaseVector, a: int,
                                dv: PhaseVector | None = None) -> PhaseVector:
    """∇_a v = (∂_a v^b) e_b + v^b ω_ab^c e_c; ``dv`` is ∂_a v (zero by default)."""
    n = c.n
    _check_index(n, a)
    N = 2 * n
    coords = list(dv.coords()) if dv is not None else [ZERO] * N
    vc = v.coords()
    for b in range(1, N + 1):
        if not vc[b - 1]:
            continue
        for cc in range(1, N + 1):
            x = c.w_up(a, b, cc)
            if x:
                coords[cc - 1] = coords[cc - 1] + vc[b - 1] * x
    return PhaseVector.from_coords(n, coords)


def scaling_transform(c: FrameConnection, lam_derivs: Sequence) -> FrameConnection:
    """A_a -> A_a + ∂_a λ."""
    if len(lam_derivs) != 2 * c.n:
        raise DimensionError(f"need {2 * c.n} derivatives of lambda")
    return c.with_gauge([x + as_scalar(y) for x, y in zip(c.A, lam_derivs)])


def scale_jet(j: SpinorJet, lam_derivs: Sequence) -> SpinorJet:
    """Jet of e^{-λ} φ at a point where λ = 0."""
    lam = [as_scalar(x) for x in lam_derivs]
    return SpinorJet(j.value, tuple(d - j.value.scale(l) for d, l in zip(j.derivs, lam)))


def leibniz_inner_check(c: FrameConnection, j1: SpinorJet, j2: SpinorJet) -> bool:
    """∂_a(φ, ψ) == (∇̂_a φ, ψ) + (φ, ∇̂_a ψ) for every a."""
    for a in range(1, 2 * c.n + 1):
        lhs = spinor_inner(j1.derivs[a - 1], j2.value) + spinor_inner(j1.value, j2.derivs[a - 1])
        rhs = (spinor_inner(covariant_derivative(c, j1, a), j2.value)
               + spinor_inner(j1.value, covariant_derivative(c, j2, a)))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# curvature


@dataclass(frozen=True)
class CurvatureData:
    """R_ab^cd (flat, last two indices up) and F_ab at a point."""

    n: int
    riemann: tuple
    F: tuple

    def __post_init__(self):
        N = 2 * self.n
        if len(self.riemann) != N ** 4 or len(self.F) != N * N:
            raise DimensionError("curvature arrays have the wrong size")
        object.__setattr__(self, "riemann", tuple(as_scalar(x) for x in self.riemann))
        object.__setattr__(self, "F", tuple(as_scalar(x) for x in self.F))
        for a in range(1, N + 1):
            for b in range(a, N + 1):
                if self.f(a, b) + self.f(b, a):
                    raise AntisymmetryError(f"F_{a}{b} != -F_{b}{a}", (a, b))
                for cc in range(1, N + 1):
                    for d in range(1, N + 1):
                        if self.r(a, b, cc, d) + self.r(b, a, cc, d):
                            raise AntisymmetryError(f"R_{a}{b}^{cc}{d} not antisymmetric in (a,b)", (a, b, cc, d))

    def r(self, a, b, c, d) -> Scalar:
        N = 2 * self.n
        return self.riemann[(((a - 1) * N + b - 1) * N + c - 1) * N + d - 1]

    def f(self, a, b) -> Scalar:
        return self.F[(a - 1) * 2 * self.n + b - 1]


def curvature_action(cd: CurvatureData, a: int, b: int, s: Spinor) -> Spinor:
    """R̂_ab s = -¼ R_ab^cd (e_c e_d)·s + F_ab s."""
    n = cd.n
    _check_index(n, a)
    _check_index(n, b)
    N = 2 * n
    out = s.scale(cd.f(a, b))
    E = [operator_of(frame_vector(n, i)) for i in range(1, N + 1)]
    for c in range(1, N + 1):
        for d in range(1, N + 1):
            x = cd.r(a, b, c, d)
            if x:
                out = out + (E[c - 1] @ E[d - 1]).apply(s).scale(-_QUARTER * x)
    return out


# ---------------------------------------------------------------------------
# Dirac and twistor operators


def dirac(c: FrameConnection, j: SpinorJet) -> Spinor:
    """D̂φ = g^ab e_a·∇̂_b φ."""
    n = c.n
    N = 2 * n
    out = Spinor.zero(n)
    nabla = [covariant_derivative(c, j, b) for b in range(1, N + 1)]
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            g = inverse_frame_metric(n, a, b)
            if g:
                out = out + frame_action(n, a, nabla[b - 1]).scale(g)
    return out


def twistor_component(c: FrameConnection, j: SpinorJet, a: int) -> Spinor:
    """T̂_a φ = ∇̂_a φ - (1/2n) e_a·D̂φ."""
    _check_index(c.n, a)
    n = c.n
    corr = frame_action(n, a, dirac(c, j)).scale(Scalar(1) / (2 * n))
    return covariant_derivative(c, j, a) - corr


def _theta(n: int, *idx: int) -> Spinor:
    if len(set(idx)) < len(idx):
        return Spinor.zero(n)
    return blade(n, *idx)


def twistor_closed_form(c: FrameConnection, j: int) -> tuple[Spinor, Spinor]:
    """(T̂_j 1̂, T̂_{j+n} 1̂) from the component formulas, for j in 1..n.

    Latin indices run over 1..n; a lower index i is the frame leg e_i and an
    upper index i is raised with g^{i,i+n} = 2.
    """
    n = c.n
    if not 1 <= j <= n:
        raise ValueError(f"j must be in 1..{n}")
    r = range(1, n + 1)
    w = c.w
    inv_n = Scalar(1) / n

    def w_up_lo_lo(i, b, d):  # ω^i_{bd}
        return 2 * w(i + n, b, d)

    A = c.A
    X = {l: sum((2 * w(l, i, i + n) for i in r), ZERO) for l in r}  # ω_{li}^i
    Y = {k: sum((w_up_lo_lo(i, i, k) for i in r), ZERO) for k in r}  # ω^i_{ik}

    # T̂_j 1̂
    s_coef = inv_n * ((n - 1) * (A[j - 1] + _HALF * X[j]) + Y[j])
    Tj = Spinor.one(n).scale(s_coef)
    for k in r:
        for l in r:
            if k == l:
                continue
            antisym = _HALF * (w(l, k, j) - w(k, l, j))
            x = inv_n * ((n - 1) * w(j, k, l) + 2 * antisym)
            if x:
                Tj = Tj + _theta(n, l, k).scale(x)

    # T̂_{j+n} 1̂
    w_ji_i = sum((4 * w(j + n, i + n, i) for i in r), ZERO)  # ω^{ji}_i
    T = Spinor.one(n).scale(_HALF * (2 * A[j + n - 1] - _HALF * w_ji_i))
    for i, k, l in itertools.product(r, repeat=3):
        if len({j, i, k, l}) < 4:
            continue
        x = inv_n * _antisym3(w, i, k, l)
        if x:
            T = T + _theta(n, j, i, k, l).scale(x)
    delta = lambda p, q: ONE if p == q else ZERO  # noqa: E731
    for k in r:
        for l in r:
            if k == l:
                continue
            x = (_HALF * w_up_lo_lo(j, k, l)
                 + inv_n * _HALF * (delta(j, k) * A[l - 1] - delta(j, l) * A[k - 1])
                 + inv_n * _QUARTER * (delta(j, k) * X[l] - delta(j, l) * X[k])
                 + inv_n * _HALF * (Y[k] * delta(j, l) - Y[l] * delta(j, k)))
            if x:
                T = T + _theta(n, l, k).scale(x)
    return Tj, T


def _antisym3(w, i, k, l) -> Scalar:
    """ω_[ikl] (weight 1/6)."""
    s = (w(i, k, l) + w(k, l, i) + w(l, i, k) - w(k, i, l) - w(i, l, k) - w(l, k, i))
    return s / 6


@dataclass
class TwistorGauge:
    gauge: tuple
    satisfiable: bool
    row: str
    violations: list

    def to_dict(self) -> dict:
        return {
            "row": self.row,
            "gauge": [str(x) for x in self.gauge],
            "satisfiable": self.satisfiable,
            "violations": list(self.violations),
        }


def twistor_gauge(c: FrameConnection) -> TwistorGauge:
    """Gauge A making 1̂ a twistor, and the ω-constraints that must hold for it to work.

    A_j = ω^i_{ji}/(n-1) - ½ ω_{jk}^k and A_{j+n} = ¼ ω^{ji}_i.  Constraints:
    ω_ijk = 0 (totally antisymmetric ω_ijk allowed when 2n = 6), and for
    2n ≥ 6 also ω^i_{jk} = 0 for i ∉ {j,k} and ω^i_{ik} = ω^j_{jk} for
    i ≠ k ≠ j (no sum).
    """
    n = c.n
    if n < 2:
        raise ValueError("twistor gauge analysis needs 2n >= 4")
    r = range(1, n + 1)
    w = c.w
    gauge = [ZERO] * (2 * n)
    for j in r:
        t1 = sum((2 * w(i + n, j, i) for i in r), ZERO) / (n - 1)
        t2 = sum((2 * w(j, k, k + n) for k in r), ZERO)
        gauge[j - 1] = t1 - _HALF * t2
        gauge[j + n - 1] = _QUARTER * sum((4 * w(j + n, i + n, i) for i in r), ZERO)

    violations = []
    if n == 3:
        row = "2n=6"
        for i, j, k in itertools.product(r, repeat=3):
            if w(i, j, k) != _antisym3(w, i, j, k):
                violations.append(f"omega_{i}{j}{k} != omega_[{i}{j}{k}]")
    else:
        row = "2n=4" if n == 2 else "2n>=8"
        for i, j, k in itertools.product(r, repeat=3):
            if w(i, j, k):
                violations.append(f"omega_{i}{j}{k} != 0")
    if n >= 3:
        for i, j, k in itertools.product(r, repeat=3):
            if i != j and i != k and j < k and w(i + n, j, k):
                violations.append(f"omega^{i}_{j}{k} != 0")
        for k in r:
            others = [i for i in r if i != k]
            base = others[0]
            for i in others[1:]:
                if w(i + n, i, k) != w(base + n, base, k):
                    violations.append(f"omega^{i}_{i}{k} != omega^{base}_{base}{k}")
    return TwistorGauge(tuple(gauge), not violations, row, violations)


def parallel_gauge(c: FrameConnection):
    """Values A_1..A_n making ∇̂_i 1̂ = 0 for every i ≤ n, or None if impossible.

    Possible exactly when ω_ikl = 0 for i, k, l ≤ n (span{e_i} integrable).
    """
    n = c.n
    r = range(1, n + 1)
    if any(c.w(i, k, l) for i in r for k in r for l in r):
        return None
    return tuple(-_HALF * sum((2 * c.w(a, k, k + n) for k in r), ZERO) for a in r)


# ---------------------------------------------------------------------------
# brackets, integrability and geodesy


def lie_bracket(c: FrameConnection, a: int, b: int) -> PhaseVector:
    """[e_a, e_b] = (ω_ab^c - ω_ba^c) e_c for the torsion-free connection."""
    n = c.n
    _check_index(n, a)
    _check_index(n, b)
    return PhaseVector.from_coords(n, [c.w_up(a, b, cc) - c.w_up(b, a, cc) for cc in range(1, 2 * n + 1)])


def _check_k(n: int, k: int):
    if not 1 <= k <= n:
        raise ValueError(f"distribution rank k must be in 1..{n}")


def _canonical_L(n: int, k: int):
    from .pure import coordinate_isotropic, pure_subspace

    return pure_subspace(coordinate_isotropic(n, e=range(1, k + 1)))


def _outside(vec_coords, k: int) -> bool:
    return any(x for idx, x in enumerate(vec_coords) if idx >= k)


def integrability_check(c: FrameConnection, k: int) -> tuple[bool, bool]:
    """(span{e_1..e_k} closed under brackets, e_α·∇̂_β φ == e_β·∇̂_α φ on L)."""
    n = c.n
    _check_k(n, k)
    frob = not any(_outside(lie_bracket(c, a, b).coords(), k)
                   for a in range(1, k + 1) for b in range(a + 1, k + 1))
    spin = True
    for phi in _canonical_L(n, k).spinors():
        jet = SpinorJet.constant(phi)
        nab = [covariant_derivative(c, jet, a) for a in range(1, k + 1)]
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                if frame_action(n, a, nab[b - 1]) != frame_action(n, b, nab[a - 1]):
                    spin = False
                    break
            if not spin:
                break
        if not spin:
            break
    return frob, spin


def totally_geodesic_check(c: FrameConnection, k: int) -> tuple[bool, bool]:
    """(∇_α e_β in span{e_1..e_k} for α, β ≤ k, ∇̂_α φ in L for φ in L)."""
    n = c.n
    _check_k(n, k)
    geo = not any(c.w_up(a, b, cc)
                  for a in range(1, k + 1) for b in range(1, k + 1) for cc in range(k + 1, 2 * n + 1))
    L = _canonical_L(n, k)
    spin = all(L.contains(covariant_derivative(c, SpinorJet.constant(phi), a))
               for phi in L.spinors() for a in range(1, k + 1))
    return geo, spin


def condition_geom_witness(c: FrameConnection, trials: int = 100, seed: int = 0):
    """Search for X, Y, (i, j, k) with g(X,e_i) = g(Y,e_j), g(X,e_k) = g(Y,e_k) = 0
    but g(∇_X e_i - ∇_Y e_j, e_k) != 0.  Returns a witness dict or None.
    """
    n = c.n
    if n < 2:
        raise ValueError("needs n >= 2")
    rng = random.Random(seed)
    N = 2 * n
    r = range(1, n + 1)
    for _ in range(trials):
        i, j, k = rng.choice(r), rng.choice(r), rng.choice(r)
        X = [random_scalar(rng, zero_prob=0.3) for _ in range(N)]
        Y = [random_scalar(rng, zero_prob=0.3) for _ in range(N)]
        # g(X, e_m) = ½ X^{m+n}
        t = ZERO if k in (i, j) else random_scalar(rng)
        X[i + n - 1] = t
        Y[j + n - 1] = t
        X[k + n - 1] = ZERO
        Y[k + n - 1] = ZERO
        val = ZERO
        for a in range(1, N + 1):
            if X[a - 1]:
                val = val + X[a - 1] * c.w(a, i, k)
            if Y[a - 1]:
                val = val - Y[a - 1] * c.w(a, j, k)
        if val:
            return {"ijk": [i, j, k], "X": [str(x) for x in X], "Y": [str(y) for y in Y], "value": str(val)}
    return None


def condition_geom_check(c: FrameConnection, trials: int = 100, seed: int = 0) -> bool:
    return condition_geom_witness(c, trials, seed) is None


# ---------------------------------------------------------------------------
# generators


def _set(flat: list, N: int, a: int, b: int, c: int, x):
    flat[((a - 1) * N + b - 1) * N + c - 1] = x
    flat[((a - 1) * N + c - 1) * N + b - 1] = -x


def random_connection(n: int, seed: int, *, gauge: bool = True, zero_prob: float = 0.3,
                      complex_prob: float = 0.2) -> FrameConnection:
    rng = random.Random(seed)
    N = 2 * n
    flat = [ZERO] * N ** 3
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            for cc in range(b + 1, N + 1):
                _set(flat, N, a, b, cc, random_scalar(rng, zero_prob=zero_prob, complex_prob=complex_prob))
    A = [random_scalar(rng, zero_prob=zero_prob, complex_prob=complex_prob) if gauge else ZERO for _ in range(N)]
    return FrameConnection(n, tuple(flat), tuple(A))


def _outside_legs(n: int, k: int) -> list[int]:
    """Lower indices d with ω_αβd g^{dc} pointing outside span{e_1..e_k}."""
    return list(range(1, n + 1)) + [g + n for g in range(k + 1, n + 1)]


def force_totally_geodesic(c: FrameConnection, k: int) -> FrameConnection:
    """Zero every ω_αβd (α, β ≤ k) that moves e_β out of span{e_1..e_k}."""
    n, N = c.n, 2 * c.n
    flat = list(c.omega)
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            for d in _outside_legs(n, k):
                _set(flat, N, a, b, d, ZERO)
    return FrameConnection(n, tuple(flat), c.A)


def force_integrable(c: FrameConnection, k: int) -> FrameConnection:
    """Make ω_αβd symmetric in α, β ≤ k for outside legs d, so brackets stay in span{e_1..e_k}."""
    n, N = c.n, 2 * c.n
    flat = list(c.omega)
    for d in _outside_legs(n, k):
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                if d <= k:
                    # symmetric in (a, b) and antisymmetric in (b, d) forces zero
                    _set(flat, N, a, b, d, ZERO)
                elif a < b:
                    x = flat[((a - 1) * N + b - 1) * N + d - 1]
                    _set(flat, N, b, a, d, x)
    return FrameConnection(n, tuple(flat), c.A)


def table1_connection(n: int, seed: int, *, integrable: bool = True, conditions3: bool = True,
                      antisym_ijk: bool = False) -> FrameConnection:
    """Random connection whose ω obeys (or deliberately breaks) the twistor constraints.

    ``integrable``: ω_ijk = 0 for all e-legs.  ``antisym_ijk``: instead set
    ω_ijk to a nonzero totally antisymmetric tensor.  ``conditions3``:
    ω^i_jk = 0 for i ∉ {j,k} and ω^i_ik independent of i.  A violation is
    forced explicitly when a flag is False.
    """
    rng = random.Random(seed)
    base = random_connection(n, rng.randrange(1 << 30), gauge=False, zero_prob=0.2)
    N = 2 * n
    flat = list(base.omega)
    r = range(1, n + 1)
    if integrable or antisym_ijk:
        for i in r:
            for j in r:
                for k in range(j + 1, n + 1):
                    _set(flat, N, i, j, k, ZERO)
        if antisym_ijk:
            t = Scalar(rng.choice((1, 2, -1, 3)))
            for i, j, k in itertools.permutations(r, 3):
                if j < k:
                    sign = _perm_parity((i, j, k))
                    _set(flat, N, i, j, k, t * sign)
    else:
        _set(flat, N, 1, 1, 2, Scalar(rng.choice((1, 2, -1))))
    if conditions3:
        for i in r:
            for j in r:
                for k in range(j + 1, n + 1):
                    if i != j and i != k:
                        _set(flat, N, i + n, j, k, ZERO)
        for k in r:
            common = random_scalar(rng)
            for i in r:
                if i != k:
                    _set(flat, N, i + n, i, k, common)
    elif n >= 3:
        _set(flat, N, 3 + n, 1, 2, flat[((3 + n - 1) * N + 0) * N + 1] + 1)
    return FrameConnection(n, tuple(flat), tuple([ZERO] * N))


def _perm_parity(p) -> int:
    inv = sum(1 for x in range(len(p)) for y in range(x + 1, len(p)) if p[x] > p[y])
    return -1 if inv & 1 else 1
