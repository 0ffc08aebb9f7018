from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rbac_sev import (
    EmptyGroupError,
    PairwiseMatrix,
    build_matrix,
    check_consistency,
    weights_closed_form,
    weights_via_matrix,
)

count_vectors = st.lists(st.integers(1, 10**6), min_size=1, max_size=12)


class TestBuildMatrix:
    def test_golden_group(self):
        m = build_matrix([2, 4, 4])
        assert m.entries[0] == (1, Fraction(1, 2), Fraction(1, 2))
        assert all(m.entries[i][i] == 1 for i in range(3))

    def test_singleton(self):
        assert build_matrix([5]).entries == ((1,),)

    def test_ratio_entries(self):
        m = build_matrix([1, 3, 2])
        assert m.entries[1][0] == 3
        assert m.entries[2][1] == Fraction(2, 3)

    def test_empty_group(self):
        with pytest.raises(EmptyGroupError):
            build_matrix([])

    def test_zero_count_rejected(self):
        with pytest.raises(ValueError):
            build_matrix([1, 0])


class TestWeights:
    def test_matrix_route_golden(self):
        assert weights_via_matrix(build_matrix([2, 4, 4])) == \
            [Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)]

    def test_matrix_route_singleton(self):
        assert weights_via_matrix(build_matrix([7])) == [1]

    def test_closed_form_golden(self):
        assert weights_closed_form([3, 2]) == [Fraction(3, 5), Fraction(2, 5)]
        assert weights_closed_form([1, 3, 2]) == \
            [Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]

    def test_closed_form_singleton(self):
        assert weights_closed_form([42]) == [1]

    def test_closed_form_empty(self):
        with pytest.raises(EmptyGroupError):
            weights_closed_form([])


class TestConsistency:
    def test_built_matrices_consistent(self):
        assert check_consistency(build_matrix([2, 4, 4]))

    def test_identity_consistent(self):
        dim = 4
        identity = PairwiseMatrix(tuple(
            tuple(Fraction(1) for _ in range(dim)) for _ in range(dim)
        ))
        assert check_consistency(identity)

    def test_corrupted_reciprocity_fails(self):
        broken = PairwiseMatrix((
            (Fraction(1), Fraction(2)),
            (Fraction(1, 3), Fraction(1)),
        ))
        assert not check_consistency(broken)


# The central simplification: column-normalized row means of the ratio
# matrix coincide with count/total, exactly, for every count vector.
@given(counts=count_vectors)
def test_equivalence_of_weight_routes(counts):
    matrix = build_matrix(counts)
    assert weights_via_matrix(matrix) == weights_closed_form(counts)
    assert check_consistency(matrix)


@given(counts=count_vectors)
def test_weights_form_a_distribution(counts):
    weights = weights_closed_form(counts)
    assert sum(weights) == 1
    assert all(0 < w <= 1 for w in weights)


@given(counts=count_vectors, factor=st.integers(1, 1000))
def test_scale_invariance(counts, factor):
    scaled = [factor * c for c in counts]
    assert weights_closed_form(scaled) == weights_closed_form(counts)


@given(counts=count_vectors, data=st.data())
def test_permutation_equivariance(counts, data):
    perm = data.draw(st.permutations(range(len(counts))))
    shuffled = [counts[i] for i in perm]
    base = weights_closed_form(counts)
    assert weights_closed_form(shuffled) == [base[i] for i in perm]
