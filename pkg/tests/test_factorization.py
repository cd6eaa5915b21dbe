import pytest

from nclag import compositions as comps, factorization as fz


def test_canonical_permutation_cycles():
    w = fz.canonical_permutation((2, 1))
    assert w == [2, 3, 1, 5, 4]
    assert fz.ordered_cycle_type(w) == (3, 2)
    assert fz.reduced_ordered_cycle_type(w) == (2, 1)


def test_reduced_type_drops_fixed_points():
    assert fz.reduced_ordered_cycle_type([1, 3, 2, 4]) == (1,)


def test_compose_and_inverse_conventions():
    a = [2, 3, 1]
    b = [2, 1, 3]
    # (a*b)(1) = a(b(1)) = a(2) = 3
    assert fz.compose(a, b) == [3, 2, 1]
    assert fz.compose(a, fz.inverse(a)) == [1, 2, 3]


def test_transposition_length_is_additive_on_minimal_pairs():
    sigma = fz.canonical_permutation((3,))
    for alpha, beta in fz.minimal_factorizations(sigma, (2,), (1,)):
        assert fz.compose(alpha, beta) == sigma
        assert (
            fz.transposition_length(alpha) + fz.transposition_length(beta)
            == fz.transposition_length(sigma)
        )


def test_permutations_of_reduced_type_counts():
    # 3 transpositions in S_3, 8 three-cycles plus... in S_4 of type (2,)
    assert len(list(fz.permutations_of_reduced_type(3, (1,)))) == 3
    assert len(list(fz.permutations_of_reduced_type(4, (2,)))) == 8
    assert len(list(fz.permutations_of_reduced_type(4, (1, 1)))) == 3


def test_worked_counts():
    assert fz.count_minimal_factorizations((2,), (1,), (1,)) == 3
    assert fz.count_minimal_factorizations((5,), (1, 2), (1, 1)) == 7
    assert fz.count_minimal_factorizations((5,), (2, 1), (1, 1)) == 11


def test_counts_match_coproduct_coefficients():
    for n in range(1, 6):
        for i in comps.all_compositions(n):
            if n + len(i) <= 7:
                assert fz.verify_coproduct_match(i)


def test_representative_independence():
    assert fz.representative_independence_check((2,), [3, 1, 2])
    assert fz.representative_independence_check((2, 1), [4, 1, 5, 2, 3])


def test_wrong_cycle_type_rejected():
    with pytest.raises(ValueError):
        fz.representative_independence_check((2,), [2, 1, 3])


def test_oversized_ambient_group_rejected():
    with pytest.raises(ValueError):
        fz.count_minimal_factorizations((9, 1), (1,), (9,))
