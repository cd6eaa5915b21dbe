import pytest

from nclag import compositions as comps


def test_all_compositions_order_n3():
    assert comps.all_compositions(3) == [(3,), (2, 1), (1, 2), (1, 1, 1)]


def test_all_compositions_counts():
    assert len(comps.all_compositions(0)) == 1
    for n in range(1, 9):
        assert len(comps.all_compositions(n)) == 2 ** (n - 1)


def test_descents_round_trip():
    for n in range(7):
        for c in comps.all_compositions(n):
            d = comps.descent_set(c)
            assert comps.composition_from_descents(d, n) == c


def test_refines_is_a_partial_order():
    cs = comps.all_compositions(5)
    for a in cs:
        assert comps.refines(a, a)
        for b in cs:
            if comps.refines(a, b) and comps.refines(b, a):
                assert a == b


def test_coarsenings_and_refinements_agree():
    for c in comps.all_compositions(5):
        assert all(comps.refines(c, d) for d in comps.coarsenings(c))
        assert all(comps.refines(d, c) for d in comps.refinements(c))
        # coarsening/refinement counts multiply out to the full fan
        assert len(comps.coarsenings(c)) == 2 ** (len(c) - 1)


def test_symmetries_are_involutions():
    for n in range(1, 7):
        for c in comps.all_compositions(n):
            assert comps.mirror(comps.mirror(c)) == c
            assert comps.mirror_conjugate(comps.mirror_conjugate(c)) == c
            assert comps.conjugate(comps.conjugate(c)) == c


def test_conjugate_is_mirror_of_mirror_conjugate():
    for c in comps.all_compositions(6):
        assert comps.conjugate(c) == comps.mirror(comps.mirror_conjugate(c))


def test_mirror_conjugate_value():
    assert comps.mirror_conjugate((3, 2, 1)) == (1, 1, 2, 2)


def test_double_and_plus_ones():
    assert comps.double((2, 1)) == (4, 2)
    assert comps.plus_ones((2, 1)) == (3, 2)


def test_reduce_parts_drops_ones_after_shift():
    assert comps.reduce_parts((3, 1, 2)) == (2, 1)
    assert comps.reduce_parts((1, 1)) == ()


def test_text_round_trip():
    assert comps.from_text("2,1") == (2, 1)
    assert comps.from_text("211") == (2, 1, 1)
    assert comps.to_text((1, 2, 1)) == "121"
    assert comps.to_text((11, 2)) == "11,2"
    assert comps.from_text(comps.to_text((11, 2))) == (11, 2)


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        comps.from_text("2,0")
