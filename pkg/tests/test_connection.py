import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purespin.clifford import CliffordOp, clifford_action, frame_action, inverse_frame_metric
from purespin.connection import (
    AntisymmetryError,
    CurvatureData,
    FrameConnection,
    SpinorJet,
    check_omega_relation,
    condition_geom_check,
    condition_geom_witness,
    covariant_derivative,
    curvature_action,
    dirac,
    force_integrable,
    force_totally_geodesic,
    integrability_check,
    leibniz_inner_check,
    lie_bracket,
    omega_operator,
    parallel_gauge,
    random_connection,
    scale_jet,
    scaling_transform,
    table1_connection,
    totally_geodesic_check,
    twistor_closed_form,
    twistor_component,
    twistor_gauge,
    vector_covariant_derivative,
)
from purespin.exact_linalg import ONE, ZERO, DimensionError, Scalar, random_scalar
from purespin.exterior import Spinor, blade

from helpers import random_spinor, random_vector


def random_jet(rng, n):
    return SpinorJet(random_spinor(rng, n), tuple(random_spinor(rng, n, 0.6) for _ in range(2 * n)))


def one_jet(n):
    return SpinorJet.constant(blade(n))


def random_gauge(rng, n):
    return [random_scalar(rng, zero_prob=0.2) for _ in range(2 * n)]


# -- Ω_a ------------------------------------------------------------------


def test_zero_connection_gives_zero_operator():
    c = FrameConnection.zero(2)
    for a in range(1, 5):
        assert omega_operator(c, a) == CliffordOp.zero(2)


def test_pure_gauge_is_scalar():
    rng = random.Random(1)
    A = random_gauge(rng, 3)
    c = FrameConnection.zero(3, A)
    for a in range(1, 7):
        assert omega_operator(c, a) == CliffordOp.identity(3).scale(A[a - 1])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.booleans())
def test_omega_relation(seed, n, gauge):
    assert check_omega_relation(random_connection(n, seed, gauge=gauge))


def test_omega_relation_at_zero():
    assert check_omega_relation(FrameConnection.zero(2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_derivative_of_one_matches_display(n):
    """With A = 0:  ∇̂_a 1̂ = (½ ω_aj^j) 1̂ + ω_aij θ̂^{ji}, latin sums over 1..n."""
    c = random_connection(n, 10 + n, gauge=False)
    r = range(1, n + 1)
    for a in range(1, 2 * n + 1):
        trace = sum((c.w_up(a, j, j) for j in r), ZERO)
        expected = blade(n).scale(trace / 2)
        for i, j in itertools.permutations(r, 2):
            expected = expected + blade(n, j, i).scale(c.w(a, i, j))
        assert covariant_derivative(c, one_jet(n), a) == expected


def test_constant_jet_zero_connection():
    c = FrameConnection.zero(2)
    j = SpinorJet.constant(blade(2, 1) + blade(2))
    assert all(not covariant_derivative(c, j, a) for a in range(1, 5))


# -- scaling and Leibniz rules --------------------------------------------


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_scaling_identity(seed, n):
    rng = random.Random(seed)
    c = random_connection(n, seed)
    j = random_jet(rng, n)
    lam = random_gauge(rng, n)
    c2 = scaling_transform(c, lam)
    j2 = scale_jet(j, lam)
    for a in range(1, 2 * n + 1):
        assert covariant_derivative(c2, j2, a) == covariant_derivative(c, j, a)
    assert scaling_transform(c2, [-x for x in lam]) == c
    assert scaling_transform(c, [0] * (2 * n)) == c


def test_scaling_length_checked():
    with pytest.raises(DimensionError):
        scaling_transform(FrameConnection.zero(2), [1, 2])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_leibniz_clifford(seed, n):
    """∇̂_a(v·φ) = (∇_a v)·φ + v·∇̂_a φ for a field v with constant frame components."""
    rng = random.Random(seed)
    c = random_connection(n, seed)
    v = random_vector(rng, n)
    j = random_jet(rng, n)
    vj = SpinorJet(clifford_action(v, j.value), tuple(clifford_action(v, d) for d in j.derivs))
    for a in range(1, 2 * n + 1):
        lhs = covariant_derivative(c, vj, a)
        rhs = clifford_action(vector_covariant_derivative(c, v, a), j.value) + clifford_action(
            v, covariant_derivative(c, j, a))
        assert lhs == rhs


def test_vector_derivative_reads_omega():
    c = random_connection(2, 3)
    from purespin.clifford import frame_vector

    for a, b in itertools.product(range(1, 5), repeat=2):
        got = vector_covariant_derivative(c, frame_vector(2, b), a).coords()
        assert list(got) == [c.w_up(a, b, d) for d in range(1, 5)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_leibniz_inner_holds_without_gauge(seed, n):
    rng = random.Random(seed)
    c = random_connection(n, seed, gauge=False)
    assert leibniz_inner_check(c, random_jet(rng, n), random_jet(rng, n))


def test_leibniz_inner_fails_with_gauge():
    n = 2
    j1, j2 = one_jet(n), SpinorJet.constant(blade(n, 1, 2))
    c = random_connection(n, 4, gauge=False)
    assert leibniz_inner_check(c, j1, j2)
    A = [ZERO] * 4
    A[2] = Scalar(3)
    assert not leibniz_inner_check(c.with_gauge(A), j1, j2)
    # a nonzero A is invisible when the pairing vanishes
    assert leibniz_inner_check(c.with_gauge(A), j1, SpinorJet.constant(blade(n, 1)))


def test_leibniz_inner_trivial():
    c = FrameConnection.zero(3)
    assert leibniz_inner_check(c, one_jet(3), SpinorJet.constant(blade(3, 1, 2, 3)))


# -- curvature --------------------------------------------------------------


def _flat(N, rank, fn):
    return tuple(fn(*idx) for idx in itertools.product(range(1, N + 1), repeat=rank))


def test_curvature_trivial_cases():
    n, N = 2, 4
    rng = random.Random(0)
    s = random_spinor(rng, n)
    zero = CurvatureData(n, (ZERO,) * N ** 4, (ZERO,) * N * N)
    assert not curvature_action(zero, 1, 2, s)
    f = Scalar(5, 1)
    F = _flat(N, 2, lambda a, b: f if (a, b) == (1, 3) else (-f if (a, b) == (3, 1) else ZERO))
    cd = CurvatureData(n, (ZERO,) * N ** 4, F)
    assert curvature_action(cd, 1, 3, s) == s.scale(f)
    assert curvature_action(cd, 3, 1, s) == s.scale(-f)
    assert not curvature_action(cd, 1, 2, s)


def test_curvature_antisymmetry_enforced():
    n, N = 1, 2
    F = (ZERO, ONE, ONE, ZERO)
    with pytest.raises(AntisymmetryError):
        CurvatureData(n, (ZERO,) * N ** 4, F)
    R = [ZERO] * N ** 4
    R[(0 * N + 1) * N * N] = Scalar(1)  # R_12^11 without the R_21^11 partner
    with pytest.raises(AntisymmetryError):
        CurvatureData(n, tuple(R), (ZERO,) * 4)
    with pytest.raises(DimensionError):
        CurvatureData(n, (ZERO,), (ZERO,) * 4)


@pytest.mark.parametrize("n,seed", [(1, 0), (2, 1), (2, 2), (3, 3)])
def test_curvature_matches_commutator_model(n, seed):
    """Constant frame coefficients: [Ω_a, Ω_b] - C_ab^c Ω_c equals R̂_ab, with
    C_ab^c = ω_ab^c - ω_ba^c the bracket constants, R built from ω and F_ab = -C_ab^c A_c.
    """
    c = random_connection(n, seed, zero_prob=0.5)
    N = 2 * n
    idx = range(1, N + 1)
    partner = lambda a: a + n if a <= n else a - n  # noqa: E731

    def C(a, b, d):
        return c.w_up(a, b, d) - c.w_up(b, a, d)

    def R_low_up(a, b, cc, f):  # R_{ab cc}^f
        s = ZERO
        for d in idx:
            s += c.w_up(b, cc, d) * c.w_up(a, d, f) - c.w_up(a, cc, d) * c.w_up(b, d, f) - C(a, b, d) * c.w_up(d, cc, f)
        return s

    riemann = _flat(N, 4, lambda a, b, cc, d: 2 * R_low_up(a, b, partner(cc), d))
    F = _flat(N, 2, lambda a, b: -sum((C(a, b, d) * c.A[d - 1] for d in idx), ZERO))
    cd = CurvatureData(n, riemann, F)
    Om = [omega_operator(c, a) for a in idx]
    rng = random.Random(seed)
    for a, b in itertools.combinations(idx, 2):
        op = Om[a - 1] @ Om[b - 1] - Om[b - 1] @ Om[a - 1]
        for d in idx:
            if C(a, b, d):
                op = op - Om[d - 1].scale(C(a, b, d))
        s = random_spinor(rng, n)
        assert op.apply(s) == curvature_action(cd, a, b, s)


# -- Dirac and twistor operators ------------------------------------------


def test_dirac_hand_contraction():
    n = 2
    c = FrameConnection.zero(n)
    t1 = blade(n, 1)

    def jet_with(idx):
        derivs = [Spinor.zero(n)] * 4
        derivs[idx - 1] = t1
        return SpinorJet(Spinor.zero(n), tuple(derivs))

    assert not dirac(c, jet_with(1))
    assert dirac(c, jet_with(2)) == blade(n, 1, 2).scale(-2)
    assert dirac(c, jet_with(3)) == blade(n).scale(2)
    assert not dirac(c, jet_with(4))
    assert not dirac(c, one_jet(n))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_twistor_decomposition_and_trace(seed, n):
    rng = random.Random(seed)
    c = random_connection(n, seed)
    j = random_jet(rng, n)
    D = dirac(c, j)
    trace = Spinor.zero(n)
    for a in range(1, 2 * n + 1):
        T = twistor_component(c, j, a)
        assert T + frame_action(n, a, D).scale(Scalar(1) / (2 * n)) == covariant_derivative(c, j, a)
        for b in range(1, 2 * n + 1):
            g = inverse_frame_metric(n, a, b)
            if g:
                trace = trace + frame_action(n, a, twistor_component(c, j, b)).scale(g)
    assert not trace


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_form_matches_definition(n):
    for seed in range(8):
        c = random_connection(n, seed)
        for j in range(1, n + 1):
            Tj, Tjn = twistor_closed_form(c, j)
            assert Tj == twistor_component(c, one_jet(n), j)
            assert Tjn == twistor_component(c, one_jet(n), j + n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_form_pure_gauge(n):
    alpha = Scalar(3, -1)
    for j in range(1, n + 1):
        A = [ZERO] * (2 * n)
        A[j - 1] = alpha
        c = FrameConnection.zero(n, A)
        Tj, _ = twistor_closed_form(c, j)
        assert Tj == blade(n).scale(alpha * (n - 1) / n)
        for jp in range(1, n + 1):
            _, T = twistor_closed_form(c, jp)
            expected = Spinor.zero(n) if jp == j else blade(n, j, jp).scale(alpha / n)
            assert T == expected
    zero = FrameConnection.zero(n)
    assert all(not x for j in range(1, n + 1) for x in twistor_closed_form(zero, j))
    with pytest.raises(ValueError):
        twistor_closed_form(zero, n + 1)


def _twistor_vanishes(c):
    return all(not twistor_component(c, one_jet(c.n), a) for a in range(1, 2 * c.n + 1))


def test_twistor_gauge_zero_connection():
    for n in (2, 3, 4):
        tg = twistor_gauge(FrameConnection.zero(n))
        assert tg.satisfiable and not any(tg.gauge) and tg.violations == []
        assert _twistor_vanishes(FrameConnection.zero(n, tg.gauge))


def test_twistor_gauge_rows():
    assert twistor_gauge(FrameConnection.zero(2)).row == "2n=4"
    assert twistor_gauge(FrameConnection.zero(3)).row == "2n=6"
    assert twistor_gauge(FrameConnection.zero(5)).row == "2n>=8"
    with pytest.raises(ValueError):
        twistor_gauge(FrameConnection.zero(1))


@pytest.mark.parametrize("seed", range(4))
def test_dimension_four_always_has_gauge(seed):
    c = table1_connection(2, seed)
    tg = twistor_gauge(c)
    assert tg.satisfiable
    assert _twistor_vanishes(c.with_gauge(tg.gauge))


def test_dimension_four_nonintegrable():
    c = table1_connection(2, 0, integrable=False)
    tg = twistor_gauge(c)
    assert not tg.satisfiable and "omega_112 != 0" in tg.violations
    assert not _twistor_vanishes(c.with_gauge(tg.gauge))


def test_dimension_six_both_directions():
    # twistor with non-integrable distribution
    c = table1_connection(3, 1, integrable=False, antisym_ijk=True)
    tg = twistor_gauge(c)
    assert tg.satisfiable and c.w(1, 2, 3)
    assert not integrability_check(c, 3)[0]
    assert _twistor_vanishes(c.with_gauge(tg.gauge))
    # integrable but no gauge works
    c = table1_connection(3, 2, integrable=True, conditions3=False)
    tg = twistor_gauge(c)
    assert not tg.satisfiable and "omega^3_12 != 0" in tg.violations
    assert not _twistor_vanishes(c.with_gauge(tg.gauge))


def test_dimension_eight_conditions():
    c = table1_connection(4, 3)
    tg = twistor_gauge(c)
    assert tg.satisfiable and _twistor_vanishes(c.with_gauge(tg.gauge))
    c = table1_connection(4, 3, conditions3=False)
    tg = twistor_gauge(c)
    assert not tg.satisfiable
    assert not _twistor_vanishes(c.with_gauge(tg.gauge))
    d = tg.to_dict()
    assert d["row"] == "2n>=8" and d["satisfiable"] is False and d["violations"]


def test_parallel_gauge():
    n = 3
    assert parallel_gauge(FrameConnection.zero(n)) == (ZERO,) * n
    assert parallel_gauge(table1_connection(n, 0, integrable=False)) is None
    c = table1_connection(n, 5)
    A = list(parallel_gauge(c)) + [ZERO] * n
    cg = c.with_gauge(A)
    assert all(not covariant_derivative(cg, one_jet(n), i) for i in range(1, n + 1))


# -- brackets, integrability, geodesy -------------------------------------


def test_lie_bracket_read_off():
    c = random_connection(3, 7)
    for a, b in itertools.product(range(1, 7), repeat=2):
        br = lie_bracket(c, a, b).coords()
        assert list(br) == [c.w_up(a, b, d) - c.w_up(b, a, d) for d in range(1, 7)]
        if a == b:
            assert not any(br)
    assert not any(lie_bracket(FrameConnection.zero(2), 1, 3).coords())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zero_connection_distributions(n):
    c = FrameConnection.zero(n)
    for k in range(1, n + 1):
        assert integrability_check(c, k) == (True, True)
        assert totally_geodesic_check(c, k) == (True, True)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 3))
def test_integrability_and_geodesy_equivalence(seed, n):
    rng = random.Random(seed)
    k = rng.randint(1, n)
    c = random_connection(n, seed, zero_prob=0.6)
    frob, spin = integrability_check(c, k)
    assert frob == spin
    geo, spin = totally_geodesic_check(c, k)
    assert geo == spin


@pytest.mark.parametrize("seed", range(6))
def test_forced_generators(seed):
    n = 2 + seed % 2
    k = 1 + seed % n
    c = random_connection(n, seed)
    assert integrability_check(force_integrable(c, k), k) == (True, True)
    assert totally_geodesic_check(force_totally_geodesic(c, k), k) == (True, True)


def test_maximal_integrable_is_geodesic():
    for seed in range(10):
        n = 2 + seed % 3
        c = force_integrable(random_connection(n, seed), n)
        assert integrability_check(c, n)[0]
        assert totally_geodesic_check(c, n) == (True, True)


def test_k_out_of_range():
    c = FrameConnection.zero(2)
    for k in (0, 3):
        with pytest.raises(ValueError):
            integrability_check(c, k)
        with pytest.raises(ValueError):
            totally_geodesic_check(c, k)


@pytest.mark.parametrize("n", [3, 4])
def test_condition_geom(n):
    assert condition_geom_check(FrameConnection.zero(n))
    for seed in range(3):
        assert condition_geom_check(table1_connection(n, seed), trials=100, seed=seed)
    w = condition_geom_witness(table1_connection(n, 0, conditions3=False), trials=200)
    assert w is not None and w["value"] != "0"
    assert not condition_geom_check(table1_connection(n, 0, integrable=False), trials=200)
    with pytest.raises(ValueError):
        condition_geom_check(FrameConnection.zero(1))


# -- construction errors ----------------------------------------------------


def test_antisymmetry_error_reports_entry():
    with pytest.raises(AntisymmetryError) as info:
        FrameConnection.from_entries(2, {(1, 1, 2): 1})
    assert info.value.entry == (1, 1, 2)
    c = FrameConnection.from_entries(2, {(1, 1, 2): 1, (1, 2, 1): -1})
    assert c.entries_dict() == {(1, 1, 2): 1, (1, 2, 1): -1}
    with pytest.raises(AntisymmetryError):
        FrameConnection.from_entries(1, {(1, 1, 1): 2})


def test_index_errors():
    with pytest.raises(ValueError):
        FrameConnection.from_entries(2, {(1, 1, 5): 1, (1, 5, 1): -1})
    c = FrameConnection.zero(2)
    for fn in (lambda: omega_operator(c, 0), lambda: covariant_derivative(c, one_jet(2), 5),
               lambda: lie_bracket(c, 1, 9), lambda: twistor_component(c, one_jet(2), 0)):
        with pytest.raises(ValueError):
            fn()
    with pytest.raises(DimensionError):
        FrameConnection(2, (ZERO,), (ZERO,) * 4)
    with pytest.raises(DimensionError):
        SpinorJet(blade(2), (blade(2),))
