import os
import subprocess
import sys

import pytest

from nclag import compositions as comps, lagrange
from nclag.algebra import NSymElement


def test_cubic_component_on_s():
    g3 = lagrange.g_component(3)
    assert g3.terms == {(3,): 1, (2, 1): 2, (1, 2): 1, (1, 1, 1): 1}


def test_component_coefficients_count_parking_types():
    for n in range(8):
        assert lagrange.g_expansion_check(n)


def test_degree_zero_is_one():
    assert lagrange.g_component(0) == NSymElement.one("S")


def test_transition_matrices_degree_three():
    assert lagrange.g_to_s_matrix(3) == [
        [1, 0, 0, 0],
        [2, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 1, 1, 1],
    ]
    assert lagrange.s_to_g_matrix(3) == [
        [1, 0, 0, 0],
        [-2, 1, 0, 0],
        [-1, 0, 1, 0],
        [2, -1, -1, 1],
    ]


def test_transition_matrices_are_inverse():
    for n in range(1, 6):
        a = lagrange.g_to_s_matrix(n)
        b = lagrange.s_to_g_matrix(n)
        size = len(a)
        for i in range(size):
            for j in range(size):
                dot = sum(a[i][k] * b[k][j] for k in range(size))
                assert dot == (1 if i == j else 0)


def test_generator_on_g_matches_recipe_route():
    for n in range(1, 8):
        assert lagrange.s_generator_on_g(n) == lagrange.s_to_g_via_recipe(n)


def test_k_analogue_three_routes_agree():
    for k in (2, 3):
        for n in range(7):
            a = lagrange.gk_component(k, n)
            assert a == lagrange.gk_component_iterative(k, n)
            assert a == lagrange.gk_component_via_phi(k, n)


def test_k_analogue_cubic_display():
    h3 = lagrange.gk_component(2, 3)
    assert h3.terms == {(3,): 1, (2, 1): 4, (1, 2): 2, (1, 1, 1): 5}


def test_k_analogue_counts_k_parking_types():
    for k in (2, 3):
        for n in range(6):
            assert lagrange.k_parking_check(n, k)


def test_series_inverse_is_two_sided():
    g = lagrange.g_table(6)
    inv = lagrange.series_inverse(g)
    for d in range(7):
        prod = lagrange.series_product_component(g, inv, d)
        want = NSymElement.one("S") if d == 0 else NSymElement.zero("S")
        assert prod == want
        assert lagrange.series_product_component(inv, g, d) == want


def test_free_cumulant_functional_equation():
    assert lagrange.free_cumulant_check(6)


def test_cumulant_reciprocity():
    for n in range(1, 7):
        assert lagrange.cumulant_reciprocity_check(n)


def test_negated_alphabet_inverse_identity():
    assert lagrange.gamma_check(6)


def test_negated_alphabet_four_routes_agree():
    for n in range(7):
        a = lagrange.g_neg(n)
        assert a == lagrange.g_neg_via_pairing(n)
        assert a == lagrange.g_neg_via_counting(n)
        assert a == lagrange.g_neg_via_doubling(n)


def test_negated_alphabet_quartic_display():
    g4n = lagrange.g_neg(4)
    assert g4n.terms == {
        (4,): -1,
        (3, 1): 7,
        (2, 2): 5,
        (1, 3): 3,
        (2, 1, 1): -25,
        (1, 2, 1): -18,
        (1, 1, 2): -12,
        (1, 1, 1, 1): 55,
    }


def test_negated_alphabet_absolute_sums():
    sums = [
        sum(abs(c) for c in lagrange.g_neg(n).terms.values()) for n in range(1, 5)
    ]
    assert sums == [1, 4, 21, 126]


def test_negated_alphabet_s_coefficients():
    for n in range(1, 6):
        assert lagrange.g_neg_s_coefficient_check(n)


def test_doubled_pairing_identity():
    for n in range(1, 6):
        for i in comps.all_compositions(n):
            assert lagrange.doubled_pairing_identity_check(i)


def test_antipode_three_routes_agree():
    for n in range(7):
        a = lagrange.antipode_g(n)
        assert a == lagrange.antipode_g_four_step(n)
        assert a == lagrange.antipode_g_formula(n)


def test_antipode_cubic_display():
    a = lagrange.antipode_g(3)
    assert a.terms == {(3,): -1, (2, 1): 4, (1, 2): 4, (1, 1, 1): -12}


def test_pairing_values_degree_three():
    assert lagrange.v_pairing((2, 1), (3,)) == -3
    assert lagrange.v_pairing((2, 1), (2, 1)) == -1
    assert lagrange.v_pairing((1, 2), (3,)) == -2
    assert lagrange.v_pairing((1, 2), (1, 2)) == -1
    assert lagrange.v_pairing((1, 2), (2, 1)) == 0


def test_f_change_of_basis_two_routes():
    for n in range(1, 7):
        assert lagrange.f_basis_table(n) == lagrange.f_basis_table_via_breakpoints(n)


def test_f_change_of_basis_degree_three():
    assert lagrange.f_basis_table(3) == [
        [1, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]


def test_dual_transitions_invert():
    from nclag.algebra import QSymElement, qsym_convert

    for n in range(5):
        for i in comps.all_compositions(n):
            x = QSymElement.monomial("C", i)
            assert qsym_convert(qsym_convert(x, "M"), "C") == x


def test_table_bound_is_enforced():
    bound = lagrange.max_degree()
    with pytest.raises(ValueError):
        lagrange.s_generator_on_g(bound + 1)


def test_table_bound_respects_environment():
    code = (
        "from nclag import lagrange\n"
        "assert lagrange.max_degree() == 4\n"
        "try:\n"
        "    lagrange.s_generator_on_g(5)\n"
        "except ValueError:\n"
        "    print('ok')\n"
    )
    env = dict(os.environ, NCLAG_MAX_DEGREE="4")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "ok"
