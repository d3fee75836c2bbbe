"""Isotropic subspaces of V⊕V*, annihilators, and pure spinor subspaces.

For an isotropic ``I`` the pure subspace ``L_I`` is the joint kernel of the
Clifford actions of the vectors of ``I``.  :func:`theorem1_report` evaluates
every algebraic identity relating ``I`` and ``L_I`` on a concrete pair and
reports pass / fail / skip per item.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .clifford import PhaseVector, clifford_action, frame_action, metric, spinor_inner
from .exact_linalg import (
    ONE,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    _kernel_vectors,
    random_scalar,
    subspace_contains,
    subspace_intersection,
    subspace_sum,
)
from .exterior import Spinor, popcount, wedge

__all__ = [
    "NotIsotropicError",
    "IsotropicSubspace",
    "SpinorSubspace",
    "CheckResult",
    "Report",
    "is_isotropic",
    "annihilator",
    "common_annihilator",
    "pure_subspace",
    "is_pure",
    "chiral_parts",
    "pure_obstructions",
    "theorem1_report",
    "corollary_parity_check",
    "wedge_closure_check",
    "random_orthogonal_map",
    "random_isotropic",
    "random_isotropic_pair",
    "coordinate_isotropic",
]


class NotIsotropicError(ValueError):
    """A vector subspace that was required to be totally null is not."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


def _vec(n: int, row: Sequence) -> PhaseVector:
    return PhaseVector.from_coords(n, list(row))


def _find_non_null_pair(n: int, space: Subspace):
    vs = [_vec(n, r) for r in space.vectors()]
    for i, v in enumerate(vs):
        for u in vs[i:]:
            if metric(v, u):
                return v, u
    return None


def is_isotropic(n: int, space: Subspace) -> bool:
    if space.ambient_dim != 2 * n:
        raise DimensionError(f"ambient dimension {space.ambient_dim} is not 2n = {2 * n}")
    return _find_non_null_pair(n, space) is None


@dataclass(frozen=True)
class IsotropicSubspace:
    """Totally null subspace of V⊕V*; coordinates are e-components then θ-components."""

    n: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != 2 * self.n:
            raise DimensionError(f"ambient dimension {self.space.ambient_dim} is not 2n = {2 * self.n}")
        bad = _find_non_null_pair(self.n, self.space)
        if bad is not None:
            v, u = bad
            raise NotIsotropicError(f"<{v}, {u}> = {metric(v, u)} != 0", bad)
        if self.space.rank > self.n:
            raise NotIsotropicError(f"dimension {self.space.rank} exceeds n = {self.n}")

    @classmethod
    def span(cls, n: int, vectors: Iterable[PhaseVector]) -> IsotropicSubspace:
        rows = []
        for v in vectors:
            if v.n != n:
                raise DimensionError("generator over a different n")
            rows.append(v.coords())
        return cls(n, Subspace.span(2 * n, rows))

    @classmethod
    def zero(cls, n: int) -> IsotropicSubspace:
        return cls(n, Subspace.zero(2 * n))

    @property
    def dim(self) -> int:
        return self.space.rank

    @property
    def is_maximal(self) -> bool:
        return self.dim == self.n

    def vectors(self) -> list[PhaseVector]:
        return [_vec(self.n, r) for r in self.space.vectors()]

    def contains(self, v: PhaseVector) -> bool:
        return self.space.contains_vector(v.coords())


@dataclass(frozen=True)
class SpinorSubspace:
    """Subspace of ∧V* in coordinates indexed by blade mask."""

    n: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != 1 << self.n:
            raise DimensionError("spinor subspace ambient dimension must be 2^n")

    @classmethod
    def span(cls, n: int, spinors: Iterable[Spinor]) -> SpinorSubspace:
        return cls(n, Subspace.span(1 << n, [s.to_vector() for s in spinors]))

    @property
    def dim(self) -> int:
        return self.space.rank

    def spinors(self) -> list[Spinor]:
        return [Spinor.from_vector(self.n, r) for r in self.space.vectors()]

    def contains(self, s: Spinor) -> bool:
        return self.space.contains_vector(s.to_vector())

    def __and__(self, other: SpinorSubspace) -> SpinorSubspace:
        return SpinorSubspace(self.n, subspace_intersection(self.space, other.space))

    def __add__(self, other: SpinorSubspace) -> SpinorSubspace:
        return SpinorSubspace(self.n, subspace_sum(self.space, other.space))

    def __le__(self, other: SpinorSubspace) -> bool:
        return subspace_contains(other.space, self.space)


# ---------------------------------------------------------------------------
# kernels


def _restrict(basis: list[Spinor], f: Callable[[Spinor], Spinor], n: int) -> list[Spinor]:
    """Basis of {x in span(basis) : f(x) = 0}, ``f`` linear."""
    if not basis:
        return []
    images = [f(b) for b in basis]
    masks = sorted({m for im in images for m, _ in im.items()})
    if not masks:
        return basis
    rows = [[im[m] for im in images] for m in masks]
    out = []
    for coeffs in _kernel_vectors(rows, len(basis)):
        acc = Spinor.zero(n)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def pure_subspace(I: IsotropicSubspace) -> SpinorSubspace:
    """L_I: spinors killed by every vector of ``I``."""
    n = I.n
    basis = [Spinor._wrap(n, {m: ONE}) for m in range(1 << n)]
    for v in I.vectors():
        basis = _restrict(basis, lambda s, v=v: clifford_action(v, s), n)
    return SpinorSubspace.span(n, basis)


def common_annihilator(n: int, spinors: Iterable[Spinor]) -> Subspace:
    """{v in V⊕V* : v·φ = 0 for every given φ}, as a subspace of Q(i)^{2n}."""
    basis = [[ONE if a == b else ZERO for b in range(2 * n)] for a in range(2 * n)]
    for phi in spinors:
        if not basis:
            break
        acts = [frame_action(n, a + 1, phi) for a in range(2 * n)]
        images = []
        for v in basis:
            img = Spinor.zero(n)
            for x, act in zip(v, acts):
                if x:
                    img = img + act.scale(x)
            images.append(img)
        masks = sorted({m for im in images for m, _ in im.items()})
        if not masks:
            continue
        rows = [[im[m] for im in images] for m in masks]
        new = []
        for coeffs in _kernel_vectors(rows, len(basis)):
            w = [ZERO] * (2 * n)
            for c, v in zip(coeffs, basis):
                if c:
                    w = [a + c * b for a, b in zip(w, v)]
            new.append(w)
        basis = new
    return Subspace.span(2 * n, basis)


def annihilator(a: Spinor) -> IsotropicSubspace:
    """N_a = {v : v·a = 0}; construction re-checks isotropy."""
    if not a:
        raise ValueError("annihilator of the zero spinor is all of V⊕V*")
    return IsotropicSubspace(a.n, common_annihilator(a.n, [a]))


def is_pure(a: Spinor) -> bool:
    return annihilator(a).dim == a.n


# ---------------------------------------------------------------------------
# chirality and the necessary conditions for a subspace to be pure


def _parity_space(n: int, parity: int) -> Subspace:
    d = 1 << n
    rows = []
    for m in range(d):
        if popcount(m) % 2 == parity:
            r = [ZERO] * d
            r[m] = ONE
            rows.append(r)
    return Subspace.span(d, rows)


def chiral_parts(L: SpinorSubspace) -> tuple[SpinorSubspace, SpinorSubspace]:
    """(L ∩ S+, L ∩ S-) with S± the even / odd spinors."""
    plus = subspace_intersection(L.space, _parity_space(L.n, 0))
    minus = subspace_intersection(L.space, _parity_space(L.n, 1))
    return SpinorSubspace(L.n, plus), SpinorSubspace(L.n, minus)


def _first_nonzero_inner(spinors: Sequence[Spinor]):
    for p in spinors:
        for q in spinors:
            x = spinor_inner(p, q)
            if x:
                return p, q, x
    return None


def pure_obstructions(L: SpinorSubspace) -> list[str]:
    """Which necessary conditions for a proper subspace to equal some L_I fail.

    Labels: ``"dimension"`` (not a power 2^s, s < n), ``"inner"`` (a nonzero
    pairing inside L), ``"weyl-line"`` (a line not spanned by a Weyl spinor),
    ``"chiral-split"`` (no basis split half / half by chirality).  An empty
    list does not certify purity.
    """
    n, d = L.n, L.dim
    out = []
    if d not in {1 << s for s in range(n)}:
        out.append("dimension")
    if _first_nonzero_inner(L.spinors()) is not None:
        out.append("inner")
    if d == 1:
        s = L.spinors()[0]
        if len({popcount(m) % 2 for m, _ in s.items()}) > 1:
            out.append("weyl-line")
    else:
        plus, minus = chiral_parts(L)
        if plus.dim + minus.dim != d or plus.dim != minus.dim:
            out.append("chiral-split")
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: dict = field(default_factory=dict)
    witness: object = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


@dataclass
class Report:
    n: int
    items: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.items)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.items:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"n": self.n, "items": [c.to_dict() for c in self.items]}


def _fmt_vecs(vs) -> list[str]:
    return [str(v) for v in vs]


def _fmt_spinors(ss) -> list[str]:
    from .cli.parsing import format_spinor

    return [format_spinor(s) for s in ss]


def theorem1_report(I: IsotropicSubspace, I2: IsotropicSubspace) -> Report:
    """Evaluate items (1)-(9) of the algebraic theorem on a concrete pair."""
    if I.n != I2.n:
        raise DimensionError("isotropic subspaces over different n")
    n = I.n
    L1, L2 = pure_subspace(I), pure_subspace(I2)
    items: list[CheckResult] = []

    # (1) dimension law
    d1, d2 = 1 << (n - I.dim), 1 << (n - I2.dim)
    ok = L1.dim == d1 and L2.dim == d2
    items.append(CheckResult("item1", _status(ok), {"dim_L": [L1.dim, L2.dim], "expected": [d1, d2]}))

    # (5) the annihilator of L_I is I itself
    back1 = common_annihilator(n, L1.spinors())
    back2 = common_annihilator(n, L2.spinors())
    rt = back1 == I.space and back2 == I2.space
    items_5 = CheckResult("item5", _status(rt), {"dim_I": [I.dim, I2.dim], "dim_annihilator": [back1.rank, back2.rank]})
    if not rt:
        items_5.witness = {"annihilator": _fmt_vecs(_vec(n, r) for r in (back1 if back1 != I.space else back2).vectors())}

    # (2) L_I = L_I' iff I = I'
    same_L = L1.space == L2.space
    same_I = I.space == I2.space
    ok = same_L == same_I and rt
    items.append(CheckResult("item2", _status(ok), {"L_equal": same_L, "I_equal": same_I, "roundtrip": rt}))

    # (3) L_I + L_I' ⊂ L_{I∩I'}
    meet = IsotropicSubspace(n, subspace_intersection(I.space, I2.space))
    L_meet = pure_subspace(meet)
    ok = (L1 + L2) <= L_meet
    items.append(CheckResult("item3", _status(ok), {"dim_sum": (L1 + L2).dim, "dim_L_meet": L_meet.dim}))

    # (4) and (8) depend on whether I + I' is isotropic
    joint = subspace_sum(I.space, I2.space)
    joint_iso = joint.rank <= n and is_isotropic(n, joint)
    L_cap = L1 & L2
    if joint_iso:
        L_join = pure_subspace(IsotropicSubspace(n, joint))
        ok = L_join.space == L_cap.space
        items.append(CheckResult("item4", _status(ok), {"dim_L_join": L_join.dim, "dim_cap": L_cap.dim}))
    else:
        items.append(CheckResult("item4", "skip", {"reason": "I + I' not isotropic"}))

    items.append(items_5)

    # (6) containment reversal, both directions
    c21 = subspace_contains(I.space, I2.space)
    c12 = subspace_contains(I2.space, I.space)
    ok = c21 == (L1 <= L2) and c12 == (L2 <= L1)
    items.append(CheckResult("item6", _status(ok), {"I2_in_I": c21, "I_in_I2": c12}))

    # (7) L_I is totally null for the spinor pairing when I != 0
    tested, bad = [], None
    for sub, L in ((I, L1), (I2, L2)):
        if sub.dim == 0:
            continue
        tested.append(sub.dim)
        hit = _first_nonzero_inner(L.spinors())
        if hit is not None and bad is None:
            bad = hit
    if not tested:
        items.append(CheckResult("item7", "skip", {"reason": "I = I' = {0}"}))
    else:
        r = CheckResult("item7", _status(bad is None), {"checked_dims": tested})
        if bad is not None:
            r.witness = {"pair": _fmt_spinors(bad[:2]), "value": str(bad[2])}
        items.append(r)

    # (8) I + I' isotropic iff L_I ∩ L_I' != 0
    ok = joint_iso == (L_cap.dim > 0)
    items.append(CheckResult("item8", _status(ok), {"sum_isotropic": joint_iso, "dim_cap": L_cap.dim}))

    # (9) chirality split of L_I for non-maximal I
    dims, ok = [], True
    for sub, L in ((I, L1), (I2, L2)):
        if sub.is_maximal:
            continue
        plus, minus = chiral_parts(L)
        dims.append([plus.dim, minus.dim])
        ok = ok and plus.dim + minus.dim == L.dim and plus.dim == minus.dim
    if dims:
        items.append(CheckResult("item9", _status(ok), {"chiral_dims": dims}))
    else:
        items.append(CheckResult("item9", "skip", {"reason": "both subspaces maximal"}))

    # necessary conditions for a pure subspace, applied to proper L_I
    obs = []
    for sub, L in ((I, L1), (I2, L2)):
        if sub.dim > 0:
            obs.extend(pure_obstructions(L))
    if I.dim == 0 and I2.dim == 0:
        items.append(CheckResult("necessary_conditions", "skip", {"reason": "L_I = S is not proper"}))
    else:
        r = CheckResult("necessary_conditions", _status(not obs))
        if obs:
            r.witness = {"violated": obs}
        items.append(r)

    order = ["item1", "item2", "item3", "item4", "item5", "item6", "item7", "item8", "item9", "necessary_conditions"]
    items.sort(key=lambda c: order.index(c.name))
    return Report(n, items)


def corollary_parity_check(I: IsotropicSubspace, I2: IsotropicSubspace) -> bool:
    """Odd dim(L_I ∩ L_I') forces dimension 1 and a maximal isotropic I + I'."""
    n = I.n
    d = (pure_subspace(I) & pure_subspace(I2)).dim
    if d % 2 == 0:
        return True
    joint = subspace_sum(I.space, I2.space)
    return d == 1 and joint.rank == n and is_isotropic(n, joint)


def _random_member(rng: random.Random, vectors: Sequence, zero):
    acc = zero
    for v in vectors:
        c = random_scalar(rng, zero_prob=0.2)
        if c:
            acc = acc + v.scale(c)
    return acc


def wedge_closure_check(n: int, seed: int = 0, trials: int = 10) -> bool:
    """Wedge behaviour of pure subspaces.

    For v = e + θ in a random isotropic I and φ1, φ2 in L_I, checks
    (e + 2θ)·(φ1∧φ2) = 0.  For I spanned by coordinate vectors e_i, checks
    that wedges of members of L_I stay in L_I.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    for t in range(trials):
        k = rng.randint(1, n)
        I = random_isotropic(n, k, rng.randrange(1 << 30))
        L = pure_subspace(I).spinors()
        v = _random_member(rng, I.vectors(), PhaseVector.zero(n))
        v2 = PhaseVector(n, v.e_part, tuple(2 * x for x in v.theta_part))
        p1 = _random_member(rng, L, Spinor.zero(n))
        p2 = _random_member(rng, L, Spinor.zero(n))
        if clifford_action(v2, wedge(p1, p2)):
            return False

        subset = rng.sample(range(1, n + 1), rng.randint(1, n))
        Ie = coordinate_isotropic(n, e=subset)
        Le = pure_subspace(Ie)
        basis = Le.spinors()
        q1 = _random_member(rng, basis, Spinor.zero(n))
        q2 = _random_member(rng, basis, Spinor.zero(n))
        if not Le.contains(wedge(q1, q2)):
            return False
    return True


# ---------------------------------------------------------------------------
# random generation


def coordinate_isotropic(n: int, e: Iterable[int] = (), theta: Iterable[int] = ()) -> IsotropicSubspace:
    """span{e_i : i in e} + span{θ^j : j in theta} (index sets must be disjoint)."""
    from .clifford import frame_vector

    vs = [frame_vector(n, i) for i in e] + [frame_vector(n, j + n) for j in theta]
    return IsotropicSubspace.span(n, vs)


def _apply_step(step, x: list, n: int):
    kind = step[0]
    if kind == "shear":  # e_i -> e_i + c e_j, θ^j -> θ^j - c θ^i
        _, i, j, c = step
        x[j] = x[j] + c * x[i]
        x[n + i] = x[n + i] - c * x[n + j]
    elif kind == "B":  # e_i -> e_i + b θ^j, e_j -> e_j - b θ^i
        _, i, j, b = step
        x[n + j] = x[n + j] + b * x[i]
        x[n + i] = x[n + i] - b * x[j]
    elif kind == "beta":  # θ^i -> θ^i + b e_j, θ^j -> θ^j - b e_i
        _, i, j, b = step
        x[j] = x[j] + b * x[n + i]
        x[i] = x[i] - b * x[n + j]
    elif kind == "swap":  # e_i <-> θ^i
        _, i = step
        x[i], x[n + i] = x[n + i], x[i]
    elif kind == "scale":  # e_i -> c e_i, θ^i -> θ^i / c
        _, i, c = step
        x[i] = x[i] * c
        x[n + i] = x[n + i] / c
    else:
        raise ValueError(kind)


def _nonzero_scalar(rng: random.Random) -> Scalar:
    while True:
        c = random_scalar(rng)
        if c:
            return c


def _random_steps(n: int, rng: random.Random, count: int, kinds: Sequence[str]) -> list:
    steps = []
    for _ in range(count):
        kind = rng.choice(kinds)
        if kind == "swap":
            steps.append(("swap", rng.randrange(n)))
        elif kind == "scale":
            steps.append(("scale", rng.randrange(n), rng.choice((Scalar(2), Scalar(-1), Scalar(1, 1), Scalar(1) / 2))))
        elif n >= 2:
            i, j = rng.sample(range(n), 2)
            steps.append((kind, i, j, _nonzero_scalar(rng)))
    return steps


def _apply_steps(steps, n: int, vec: Sequence) -> list:
    x = list(vec)
    for st in steps:
        _apply_step(st, x, n)
    return x


_ALL_KINDS = ("shear", "B", "beta", "swap", "scale", "shear", "B", "beta")


def random_orthogonal_map(n: int, seed: int, steps: int | None = None) -> Matrix:
    """Random metric-preserving map of V⊕V*, as the 2n x 2n matrix of its action on coordinates.

    Column ``a`` is the image of frame vector ``a``.  Built from elementary
    shears, B- and β-transforms, e_i ↔ θ^i swaps and scalings.
    """
    rng = random.Random(seed)
    seq = _random_steps(n, rng, steps if steps is not None else 3 * n, _ALL_KINDS)
    cols = []
    for a in range(2 * n):
        unit = [ONE if b == a else ZERO for b in range(2 * n)]
        cols.append(_apply_steps(seq, n, unit))
    return Matrix.from_rows([[cols[j][i] for j in range(2 * n)] for i in range(2 * n)])


def _unit_e(n: int, i: int) -> list:
    x = [ZERO] * (2 * n)
    x[i] = ONE
    return x


def random_isotropic(n: int, k: int, seed: int) -> IsotropicSubspace:
    """g(span{e_1..e_k}) for a seeded random metric-preserving g."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    steps = _random_steps(n, rng, 3 * n, _ALL_KINDS)
    rows = [_apply_steps(steps, n, _unit_e(n, i)) for i in range(k)]
    return IsotropicSubspace(n, Subspace.span(2 * n, rows))


def random_isotropic_pair(n: int, k1: int, k2: int, seed: int, mode: str = "independent"):
    """Two isotropic subspaces of dimensions ``k1``, ``k2``.

    ``mode``: ``"independent"`` draws two unrelated subspaces; ``"common"``
    places both inside one maximal isotropic subspace (so the sum is
    isotropic); ``"nested"`` makes the smaller one a subspace of the larger.
    """
    rng = random.Random(seed)
    if mode == "independent":
        return random_isotropic(n, k1, rng.randrange(1 << 30)), random_isotropic(n, k2, rng.randrange(1 << 30))
    g = _random_steps(n, rng, 3 * n, _ALL_KINDS)
    first = [_apply_steps(g, n, _unit_e(n, i)) for i in range(k1)]
    if mode == "nested":
        second = first[:k2] if k2 <= k1 else first + [_apply_steps(g, n, _unit_e(n, i)) for i in range(k1, k2)]
    elif mode == "common":
        # h preserves span{e_1..e_n}, so g∘h(e_i) stay inside g(span{e})
        h = _random_steps(n, rng, 2 * n, ("shear", "scale"))
        second = [_apply_steps(g, n, _apply_steps(h, n, _unit_e(n, i))) for i in range(k2)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return (IsotropicSubspace(n, Subspace.span(2 * n, first)),
            IsotropicSubspace(n, Subspace.span(2 * n, second)))
