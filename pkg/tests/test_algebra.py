import pytest

from nclag import compositions as comps
from nclag.algebra import (
    BasisMismatch,
    NSymElement,
    QSymElement,
    TensorElement,
    antipode,
    convert,
    coproduct,
    counit,
    element_from_json_dict,
    mirror_invariance_check,
    neg_alphabet,
    pair,
    phi_k,
    psi_k,
    qsym_convert,
    tilde,
)


def s_mono(index, c=1):
    return NSymElement.monomial("S", tuple(index), c)


def test_concatenative_product_on_s():
    x = s_mono((2,)) * s_mono((1, 1))
    assert x == s_mono((2, 1, 1))


def test_ribbon_product_rule():
    # R_a * R_b = R_{a.b} + R_{a glued b}
    x = NSymElement.monomial("R", (2,)) * NSymElement.monomial("R", (1, 1))
    assert x.coeff((2, 1, 1)) == 1
    assert x.coeff((3, 1)) == 1
    assert len(x.terms) == 2


def test_mixed_basis_product_rejected():
    with pytest.raises(BasisMismatch):
        NSymElement.monomial("S", (1,)) * NSymElement.monomial("R", (1,))


def test_nsym_round_trips():
    for n in range(5):
        for basis in ("L", "R", "G", "F"):
            for i in comps.all_compositions(n):
                x = NSymElement.monomial(basis, i)
                assert convert(convert(x, "S"), basis) == x


def test_qsym_round_trips():
    for n in range(5):
        for basis in ("E", "V", "C"):
            for i in comps.all_compositions(n):
                x = QSymElement.monomial(basis, i)
                assert qsym_convert(qsym_convert(x, "M"), basis) == x


def test_pairing_is_dual_on_defining_bases():
    for i in comps.all_compositions(4):
        for j in comps.all_compositions(4):
            want = 1 if i == j else 0
            assert pair(QSymElement.monomial("M", i), s_mono(j)) == want
            assert (
                pair(
                    QSymElement.monomial("C", i),
                    convert(NSymElement.monomial("G", j), "S"),
                )
                == want
            )


def test_essential_basis_is_coarsening_sum():
    e = qsym_convert(QSymElement.monomial("E", (1, 2)), "M")
    assert e.coeff((1, 2)) == 1
    assert e.coeff((3,)) == 1
    assert len(e.terms) == 2


def test_coproduct_splits_generators():
    t = coproduct(s_mono((2,)))
    assert t.coeff((2,), ()) == 1
    assert t.coeff((1,), (1,)) == 1
    assert t.coeff((), (2,)) == 1


def test_coproduct_is_an_algebra_map():
    x = s_mono((2, 1))
    y = s_mono((1, 1))
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


def test_counit_picks_constant_term():
    assert counit(NSymElement.one("S")) == 1
    assert counit(s_mono((3,))) == 0


def test_antipode_convolution_gives_counit():
    for n in range(5):
        for i in comps.all_compositions(n):
            t = coproduct(s_mono(i))
            acc = NSymElement.zero("S")
            for (a, b), c in t.terms.items():
                acc = acc + (convert(antipode(s_mono(a)), "S") * s_mono(b)).scale(c)
            want = NSymElement.one("S") if n == 0 else NSymElement.zero("S")
            assert acc == want


def test_neg_alphabet_is_an_involution():
    for i in comps.all_compositions(4):
        x = s_mono(i)
        assert neg_alphabet(neg_alphabet(x)) == x


def test_tilde_is_an_involution_on_g():
    g = NSymElement.monomial("G", (2, 1)) - NSymElement.monomial("G", (3,), 2)
    assert tilde(tilde(g)) == g


def test_phi_psi_are_adjoint():
    k = 2
    for i in comps.all_compositions(4):
        for j in comps.all_compositions(8):
            lhs = pair(psi_k(QSymElement.monomial("M", i), k), s_mono(j))
            rhs = pair(QSymElement.monomial("M", i), phi_k(s_mono(j), k))
            assert lhs == rhs


def test_series_symmetry_only_under_descent_complement():
    assert mirror_invariance_check(3, "conjugate")
    assert not mirror_invariance_check(3, "mirror")
    assert not mirror_invariance_check(3, "mirror_conjugate")


def test_json_round_trip():
    x = s_mono((2, 1), 5) - s_mono((3,), 2)
    assert element_from_json_dict(x.to_json_dict()) == x
    t = TensorElement.monomial(("G", "G"), (1,), (2,), 3)
    assert element_from_json_dict(t.to_json_dict()) == t


def test_tensor_swap_and_product():
    t = TensorElement.monomial(("S", "S"), (1,), (2,))
    assert t.swap() == TensorElement.monomial(("S", "S"), (2,), (1,))
    sq = t * t
    assert sq.coeff((1, 1), (2, 2)) == 1
