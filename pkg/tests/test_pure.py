import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purespin.clifford import PhaseVector, chirality_split, clifford_action, frame_vector, spinor_inner
from purespin.exact_linalg import Subspace
from purespin.exterior import Spinor, blade, popcount, wedge
from purespin.pure import (
    IsotropicSubspace,
    NotIsotropicError,
    SpinorSubspace,
    annihilator,
    common_annihilator,
    coordinate_isotropic,
    corollary_parity_check,
    is_isotropic,
    is_pure,
    pure_obstructions,
    pure_subspace,
    random_isotropic,
    random_isotropic_pair,
    random_orthogonal_map,
    theorem1_report,
    wedge_closure_check,
)

from helpers import random_spinor


def span(n, *spinors):
    return SpinorSubspace.span(n, spinors)


def _brute_pure_subspace(I: IsotropicSubspace) -> SpinorSubspace:
    """Joint kernel from the dense stacked action matrix, independent of the restriction code."""
    from purespin.exact_linalg import Matrix, kernel_basis

    n = I.n
    d = 1 << n
    rows = []
    for v in I.vectors():
        cols = [clifford_action(v, Spinor(n, {m: 1})).to_vector() for m in range(d)]
        rows += [[cols[j][i] for j in range(d)] for i in range(d)]
    if not rows:
        return SpinorSubspace(n, Subspace.full(d))
    return SpinorSubspace(n, kernel_basis(Matrix.from_rows(rows, cols=d)))


def test_n3_pure_subspace_bases():
    n = 3
    I1 = IsotropicSubspace.span(n, [frame_vector(n, 1)])
    I2 = IsotropicSubspace.span(n, [frame_vector(n, 1), frame_vector(n, 5)])
    I3 = IsotropicSubspace.span(n, [frame_vector(n, 1), frame_vector(n, 5), frame_vector(n, 6)])
    assert pure_subspace(I1).space == span(n, blade(n), blade(n, 2), blade(n, 3), blade(n, 2, 3)).space
    assert pure_subspace(I2).space == span(n, blade(n, 2), blade(n, 2, 3)).space
    assert pure_subspace(I3).space == span(n, blade(n, 2, 3)).space


def test_annihilator_examples():
    for n in (1, 2, 3, 4):
        assert annihilator(blade(n)).space == coordinate_isotropic(n, e=range(1, n + 1)).space
        top = blade(n, *range(1, n + 1))
        assert annihilator(top).space == coordinate_isotropic(n, theta=range(1, n + 1)).space
    assert annihilator(blade(4) + blade(4, 1, 2, 3, 4)).dim == 0
    with pytest.raises(ValueError):
        annihilator(Spinor.zero(2))


def test_is_pure_examples():
    assert is_pure(blade(3))
    assert is_pure(blade(3, 1))
    assert annihilator(blade(3, 1)).space == coordinate_isotropic(3, e=[2, 3], theta=[1]).space
    assert not is_pure(blade(4) + blade(4, 1, 2, 3, 4))


def test_not_isotropic_rejected():
    with pytest.raises(NotIsotropicError) as info:
        IsotropicSubspace.span(2, [frame_vector(2, 1), frame_vector(2, 3)])
    assert info.value.pair is not None
    assert not is_isotropic(2, Subspace.span(4, [[1, 0, 1, 0]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_pure_subspace_matches_dense_kernel(seed, n):
    rng = random.Random(seed)
    I = random_isotropic(n, rng.randint(0, n), seed)
    assert pure_subspace(I).space == _brute_pure_subspace(I).space


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_roundtrip_all_ranks(n):
    """The common annihilator of L_I is I, for every rank."""
    for k in range(n + 1):
        for seed in range(6):
            I = random_isotropic(n, k, seed)
            L = pure_subspace(I)
            assert L.dim == 1 << (n - k)
            assert common_annihilator(n, L.spinors()) == I.space


def test_random_isotropic_generation():
    assert random_isotropic(3, 0, 1).dim == 0
    for seed in range(10):
        I = random_isotropic(4, 4, seed)
        assert I.is_maximal and is_isotropic(4, I.space)
    assert random_isotropic(3, 2, 9) == random_isotropic(3, 2, 9)
    with pytest.raises(ValueError):
        random_isotropic(2, 3, 0)


def test_random_orthogonal_map_preserves_metric():
    from purespin.clifford import metric

    n = 3
    M = random_orthogonal_map(n, 4)
    cols = [PhaseVector.from_coords(n, M.column(j)) for j in range(2 * n)]
    for a, b in itertools.product(range(2 * n), repeat=2):
        assert metric(cols[a], cols[b]) == metric(frame_vector(n, a + 1), frame_vector(n, b + 1))


def test_random_pair_modes():
    n = 4
    I, J = random_isotropic_pair(n, 2, 3, 5, "common")
    assert is_isotropic(n, Subspace.span(2 * n, I.space.vectors() + J.space.vectors()))
    I, J = random_isotropic_pair(n, 3, 2, 5, "nested")
    assert all(I.space.contains_vector(v) for v in J.space.vectors())
    with pytest.raises(ValueError):
        random_isotropic_pair(n, 1, 1, 0, "bogus")


def test_lattice_report_same_subspace():
    n = 3
    I = coordinate_isotropic(n, e=[1])
    rep = theorem1_report(I, I)
    assert rep.ok
    assert rep["item1"].detail["dim_L"] == [4, 4]
    assert rep["item2"].detail["L_equal"] and rep["item2"].detail["I_equal"]


def test_lattice_report_non_isotropic_sum():
    n = 2
    rep = theorem1_report(coordinate_isotropic(n, e=[1]), coordinate_isotropic(n, theta=[1]))
    assert rep.ok
    assert rep["item8"].detail == {"sum_isotropic": False, "dim_cap": 0}
    assert rep["item4"].status == "skip"


def test_lattice_report_zero_subspace():
    n = 3
    Z = IsotropicSubspace.zero(n)
    rep = theorem1_report(Z, Z)
    assert rep["item7"].status == "skip"
    assert rep["item1"].detail["dim_L"] == [8, 8]
    assert rep.ok


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4), st.sampled_from(["independent", "common", "nested"]))
def test_lattice_report_property(seed, n, mode):
    rng = random.Random(seed)
    I, J = random_isotropic_pair(n, rng.randint(0, n), rng.randint(0, n), seed, mode)
    rep = theorem1_report(I, J)
    assert rep.ok, [c.to_dict() for c in rep.items if c.status == "fail"]


def test_odd_intersection_examples():
    n = 3
    I, J = coordinate_isotropic(n, e=[1, 2]), coordinate_isotropic(n, e=[2, 3])
    assert (pure_subspace(I) & pure_subspace(J)).dim == 1
    assert corollary_parity_check(I, J)
    M = coordinate_isotropic(n, e=[1, 2, 3])
    assert corollary_parity_check(M, M)


def test_odd_intersection_property():
    for seed in range(200):
        n = 2 + seed % 4
        rng = random.Random(seed)
        I, J = random_isotropic_pair(n, rng.randint(0, n), rng.randint(0, n), seed,
                                     ("independent", "common")[seed % 2])
        assert corollary_parity_check(I, J)


def test_wedge_closure_for_e_type():
    n = 3
    I = coordinate_isotropic(n, e=[1])
    assert not clifford_action(frame_vector(n, 1), wedge(blade(n, 2), blade(n, 3)))
    phi = blade(n, 2) + blade(n, 3)
    assert not wedge(phi, phi)
    assert pure_subspace(I).contains(wedge(blade(n, 2), blade(n, 3)))
    for m in (1, 2, 3, 4):
        assert wedge_closure_check(m, seed=m, trials=10)


def test_wedge_closure_fails_for_mixed_generators():
    """Closure under wedge is special to e-type I: span{e1 + θ^2} at n = 2 breaks it."""
    n = 2
    v = PhaseVector(n, (1, 0), (0, 1))
    I = IsotropicSubspace.span(n, [v])
    L = pure_subspace(I)
    phi = blade(n) - blade(n, 1, 2)
    assert L.contains(phi) and L.contains(blade(n, 2))
    sq = wedge(phi, phi)
    assert sq == blade(n) - 2 * blade(n, 1, 2)
    assert not L.contains(sq)
    # the weaker statement still holds: (e + 2θ) kills the wedge
    assert not clifford_action(PhaseVector(n, (1, 0), (0, 2)), sq)


def test_pure_spinor_invariants():
    rng = random.Random(0)
    found = 0
    for t in range(300):
        n = 1 + t % 4
        s = random_spinor(rng, n, 0.7)
        if not s:
            continue
        N = annihilator(s)
        assert is_isotropic(n, N.space)
        if N.is_maximal:
            found += 1
            plus, minus = chirality_split(s)
            assert not plus or not minus
            assert not spinor_inner(s, s)
            assert pure_subspace(N).space == span(n, s).space
    assert found > 20


def test_pure_spinors_of_random_maximal_subspaces():
    for seed in range(30):
        n = 2 + seed % 4
        I = random_isotropic(n, n, seed)
        basis = pure_subspace(I).spinors()
        assert len(basis) == 1
        assert is_pure(basis[0]) and annihilator(basis[0]).space == I.space


@pytest.mark.parametrize("n", [2, 3])
def test_low_dimension_weyl_spinors_are_pure(n):
    rng = random.Random(n)
    for _ in range(150):
        parity = rng.randrange(2)
        masks = [m for m in range(1 << n) if popcount(m) % 2 == parity]
        s = Spinor(n, {m: rng.randint(-3, 3) for m in masks})
        if s:
            assert is_pure(s)


def test_pure_obstructions():
    n = 3
    assert pure_obstructions(span(n, blade(n) + blade(n, 1))) == ["weyl-line"]
    assert "dimension" in pure_obstructions(span(n, blade(n), blade(n, 1), blade(n, 2)))
    assert "chiral-split" in pure_obstructions(span(n, blade(n), blade(n, 1, 2)))
    assert "inner" in pure_obstructions(span(n, blade(n), blade(n, 1, 2, 3)))
    assert pure_obstructions(pure_subspace(coordinate_isotropic(n, e=[1]))) == []


def test_spinor_subspace_lattice():
    n = 3
    A = span(n, blade(n), blade(n, 1))
    B = span(n, blade(n, 1), blade(n, 2))
    assert (A & B).space == span(n, blade(n, 1)).space
    assert (A + B).dim == 3
    assert (A & B) <= A and not (A <= B)
