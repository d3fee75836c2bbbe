import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purespin.exact_linalg import (
    I_UNIT,
    ONE,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    as_scalar,
    kernel_basis,
    random_scalar,
    rref,
    subspace_contains,
    subspace_intersection,
    subspace_sum,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw):
    return Scalar(draw(fractions), draw(fractions))


def _as_pair(x: Scalar):
    return Fraction(int(x.re.numerator), int(x.re.denominator)), Fraction(int(x.im.numerator), int(x.im.denominator))


# Gaussian rationals as Fraction pairs: an independent oracle for the arithmetic
def _mul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


@given(scalars(), scalars())
def test_arithmetic_matches_fraction_pairs(a, b):
    pa, pb = _as_pair(a), _as_pair(b)
    assert _as_pair(a + b) == (pa[0] + pb[0], pa[1] + pb[1])
    assert _as_pair(a - b) == (pa[0] - pb[0], pa[1] - pb[1])
    assert _as_pair(a * b) == _mul(pa, pb)
    if b:
        assert (a / b) * b == a


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + ZERO == a and a * ONE == a
    if a:
        assert a * a.inverse() == ONE


def test_canonical_representation():
    x = Scalar(Fraction(4, -6))
    assert x.re.denominator == 3 and x.re.numerator == -2
    assert Scalar(2, 0) == 2
    assert hash(Scalar(3, 0)) == hash(Scalar(Fraction(6, 2)))
    assert I_UNIT * I_UNIT == -1
    assert str(Scalar(Fraction(3, 2))) == "3/2"
    assert str(Scalar(1, -2)) == "(1,-2)"
    assert Scalar(1, 2).conjugate() == Scalar(1, -2)


def test_as_scalar_rejects_inexact():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)
    assert as_scalar(complex(2, -1)) == Scalar(2, -1)


def test_rref_examples():
    m, piv, r = rref(Matrix.identity(2))
    assert m == Matrix.identity(2) and piv == [0, 1] and r == 2
    m, piv, r = rref(Matrix.zeros(2, 2))
    assert m.is_zero() and piv == [] and r == 0
    m, piv, r = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert m == Matrix.from_rows([[1, 2], [0, 0]]) and piv == [0] and r == 1


def _random_matrix(rng, rows, cols, zero_prob=0.4):
    return Matrix.from_rows([[random_scalar(rng, zero_prob=zero_prob) for _ in range(cols)] for _ in range(rows)])


@pytest.mark.parametrize("seed", range(20))
def test_rref_idempotent_and_kernel(seed):
    rng = random.Random(seed)
    m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 7))
    r1, piv, rank = rref(m)
    assert rref(r1)[0] == r1
    assert piv == sorted(piv) and rank == len(piv)
    K = kernel_basis(m)
    assert K.rank == m.cols - rank
    for v in K.vectors():
        assert not any(m.apply(v))


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).rank == 0
    assert kernel_basis(Matrix.zeros(3, 3)) == Subspace.full(3)
    m = Matrix.from_rows([[1, 1, 0]])
    K = kernel_basis(m)
    assert K.rank == 2
    assert all(not any(m.apply(v)) for v in K.vectors())


def _unit(d, i):
    return [1 if j == i else 0 for j in range(d)]


def test_lattice_examples():
    S = Subspace.span(4, [[1, 2, 0, 0], [0, 1, 1, 0]])
    Z = Subspace.zero(4)
    assert subspace_sum(S, S) == S and subspace_sum(S, Z) == S
    assert subspace_intersection(S, S) == S and subspace_intersection(S, Z) == Z
    s12 = Subspace.span(4, [_unit(4, 0), _unit(4, 1)])
    s23 = Subspace.span(4, [_unit(4, 1), _unit(4, 2)])
    assert subspace_intersection(s12, s23) == Subspace.span(4, [_unit(4, 1)])
    both = subspace_sum(Subspace.span(4, [_unit(4, 0)]), Subspace.span(4, [_unit(4, 1)]))
    assert both.rank == 2 and _unit(4, 0) in both and _unit(4, 1) in both
    assert subspace_contains(S, S)
    assert not subspace_contains(Z, S)
    assert subspace_contains(s12, Subspace.span(4, [[1, 1, 0, 0]]))
    with pytest.raises(DimensionError):
        subspace_sum(S, Subspace.zero(3))


def _brute_intersection(s1, s2):
    """Kernel of [B1^T | -B2^T]: coefficient pairs (x, y) with x B1 = y B2."""
    d = s1.ambient_dim
    b1, b2 = s1.vectors(), s2.vectors()
    cols = [list(v) for v in b1] + [[-x for x in v] for v in b2]
    m = Matrix.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(d)], cols=len(cols))
    vecs = []
    for coeffs in kernel_basis(m).vectors():
        v = [ZERO] * d
        for c, row in zip(coeffs[: len(b1)], b1):
            v = [a + c * b for a, b in zip(v, row)]
        vecs.append(v)
    return Subspace.span(d, vecs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 10))
def test_dimension_formula_and_intersection_oracle(seed, d):
    rng = random.Random(seed)
    s1 = Subspace.span(d, _random_matrix(rng, rng.randint(0, d), d, 0.6).to_rows())
    s2 = Subspace.span(d, _random_matrix(rng, rng.randint(0, d), d, 0.6).to_rows())
    meet = subspace_intersection(s1, s2)
    assert subspace_sum(s1, s2).rank + meet.rank == s1.rank + s2.rank
    if s1.rank and s2.rank:
        assert meet == _brute_intersection(s1, s2)
    same = subspace_contains(s1, s2) and subspace_contains(s2, s1)
    assert same == (s1 == s2)


def test_span_canonical_regardless_of_generators():
    a = Subspace.span(3, [[1, 2, 3], [0, 1, 1]])
    b = Subspace.span(3, [[1, 3, 4], [2, 5, 7], [0, 0, 0]])
    assert a == b
    # canonical basis is [[1, 0, 1], [0, 1, 1]]
    assert a.coordinates([1, 3, 4]) == [1, 3]
