"""Random generators shared by the test modules."""

from purespin.clifford import PhaseVector
from purespin.exact_linalg import random_scalar
from purespin.exterior import Spinor


def random_spinor(rng, n, zero_prob=0.4, grade=None):
    masks = [m for m in range(1 << n) if grade is None or bin(m).count("1") == grade]
    return Spinor(n, {m: random_scalar(rng, zero_prob=zero_prob) for m in masks})


def random_vector(rng, n, zero_prob=0.2):
    return PhaseVector.from_coords(n, [random_scalar(rng, zero_prob=zero_prob) for _ in range(2 * n)])


# filled in by test_acceptance, printed by the terminal summary hook in conftest
ACCEPTANCE_LINES: list = []
