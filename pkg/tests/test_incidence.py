import itertools
import math
from fractions import Fraction

import pytest

from nclag import factorization as fz, incidence as inc, noncrossing as nc


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_zeta_values_are_all_ones():
    assert inc.g_values(inc.zeta(8)) == [Fraction(1)] * 9


def test_mobius_values_are_signed_catalan():
    vals = inc.g_values(inc.mobius(8))
    assert vals == [Fraction((-1) ** n * catalan(n)) for n in range(9)]


def test_mobius_inverts_zeta():
    assert inc.convolve(inc.zeta(8), inc.mobius(8)) == inc.identity_character(8)
    assert inc.convolve(inc.mobius(8), inc.zeta(8)) == inc.identity_character(8)


def test_hat_series_round_trip():
    phi = inc.zeta_power(3, 6)
    assert inc.from_g_values(inc.g_values(phi)) == phi


def test_zeta_powers_match_closed_form():
    for k in range(1, 5):
        vals = inc.g_values(inc.zeta_power(k, 7))
        for n in range(8):
            assert vals[n] == inc.zeta_power_value(k, n)


def test_ternary_tree_values():
    assert [inc.zeta_power_value(3, n) for n in range(4)] == [1, 3, 12, 55]


def test_multichain_counts_match_oracle():
    assert inc.multichain_count(1, 2) == 3
    for n in range(1, 5):
        lat = inc.lattice_oracle(n + 1)
        for k in (1, 2, 3):
            assert lat.count_multichains(k) == inc.multichain_count(n, k)


def test_single_chains_are_catalan():
    for n in range(1, 6):
        assert inc.multichain_count(n, 1) == catalan(n + 1)


def test_chain_count_worked_value():
    assert inc.chain_count(4, (1, 1, 1)) == 16


def test_chain_counts_match_oracle():
    for m in range(2, 7):
        lat = inc.lattice_oracle(m)
        for r in range(1, m):
            for s in itertools.product(range(1, m), repeat=r):
                if sum(s) == m - 1:
                    assert lat.count_chains(s) == inc.chain_count(m, s)


def test_lattice_mobius_numbers():
    lat = inc.lattice_oracle(4)
    assert lat.mobius(lat.bottom, lat.top) == -5
    for n in range(2, 7):
        lat = inc.lattice_oracle(n)
        want = (-1) ** (n - 1) * catalan(n - 1)
        assert lat.mobius(lat.bottom, lat.top) == want


def test_lower_interval_sizes_factor_over_blocks():
    lat = inc.lattice_oracle(6)
    for p in lat.elements:
        want = 1
        for b in p.blocks:
            want *= catalan(len(b))
        assert lat.interval_size(lat.bottom, p) == want


def test_upper_interval_matches_complement():
    lat = inc.lattice_oracle(6)
    for p in lat.elements:
        k = nc.kreweras(p)
        assert lat.interval_size(p, lat.top) == lat.interval_size(lat.bottom, k)


def _brute_cycle_factorizations(n, orders):
    """Count minimal factorizations of the long cycle into cycles of the
    given orders, left to right."""
    sigma = list(range(2, n + 1)) + [1]
    total = 0

    def rec(cur, remaining):
        nonlocal total
        if not remaining:
            if cur == sigma:
                total += 1
            return
        need = sum(a - 1 for a in remaining)
        if fz.transposition_length(cur) + need != n - 1:
            return
        a = remaining[0]
        for alpha in fz.permutations_of_reduced_type(n, (a - 1,)):
            nxt = fz.compose(alpha, cur)
            if (
                fz.transposition_length(nxt)
                == fz.transposition_length(cur) + a - 1
            ):
                rec(nxt, remaining[1:])

    rec(list(range(1, n + 1)), list(orders))
    return total


def test_cycle_factorization_counts():
    assert inc.biane_count(3, (2, 2)) == 3
    assert inc.biane_count(4, (2, 2, 2)) == 16
    assert inc.biane_count(4, (3, 2)) == 4
    assert inc.biane_count(5, (2, 2, 2)) == 0


def test_cycle_factorization_counts_match_brute_force():
    cases = [
        (3, (2, 2)),
        (4, (2, 2, 2)),
        (4, (3, 2)),
        (5, (3, 3)),
        (5, (4, 2)),
        (5, (2, 2, 2)),
        (6, (3, 2, 2)),
        (7, (4, 2, 2)),
        (7, (3, 3, 2)),
    ]
    for n, orders in cases:
        assert inc.biane_count(n, orders) == _brute_cycle_factorizations(
            n, orders
        )


def test_chain_count_validates_jumps():
    with pytest.raises(ValueError):
        inc.chain_count(4, (1, 1))
    with pytest.raises(ValueError):
        inc.chain_count(4, (0, 3))


def test_lattice_cap():
    with pytest.raises(ValueError):
        inc.NCLattice(8)
