"""Coproduct of the Lagrange series components on the G(x)G basis,
computed by three independent routes, plus the word-level coproduct that
justifies the biprofile route and the commutative two-alphabet check.
"""

from __future__ import annotations

import itertools
from collections import Counter

from . import lagrange, noncrossing, parking
from .algebra import TensorElement, coproduct as s_coproduct


def delta_g_algebraic(n) -> TensorElement:
    """Coproduct of g_n: expand on S, split the generators, convert each
    tensor leg back to the G basis."""
    t = s_coproduct(lagrange.g_component(n))
    return t.map_legs(lagrange.s_monomial_on_g, lagrange.s_monomial_on_g)


def delta_g_biprofiles(n) -> TensorElement:
    """Coproduct tallied over parking biprofiles: each contributes the
    monomial indexed by its two length tuples."""
    out = TensorElement.zero(("G", "G"))
    for left, right in parking.enumerate_parking_biprofiles(n):
        out = out + TensorElement.monomial(("G", "G"), left[1], right[1])
    return out


def delta_g_noncrossing(n) -> TensorElement:
    """Coproduct tallied over noncrossing partitions of a set one larger:
    reduced ordered type on the left leg, reduced ordered type of the
    Kreweras complement on the right."""
    out = TensorElement.zero(("G", "G"))
    for p in noncrossing.enumerate_nc(n + 1):
        k = noncrossing.kreweras(p)
        out = out + TensorElement.monomial(
            ("G", "G"), p.reduced_ordered_type(), k.reduced_ordered_type()
        )
    return out


def coproduct_witnesses(n, i_comp, j_comp):
    """The noncrossing partitions realizing one tensor coefficient."""
    out = []
    for p in noncrossing.enumerate_nc(n + 1):
        if (
            p.reduced_ordered_type() == tuple(i_comp)
            and noncrossing.kreweras(p).reduced_ordered_type() == tuple(j_comp)
        ):
            out.append(p)
    return out


def delta_g_monomial(index) -> TensorElement:
    """Coproduct of a G-basis monomial (multiplicative extension)."""
    out = TensorElement.one(("G", "G"))
    for p in index:
        out = out * delta_g_algebraic(p)
    return out


# ---------------------------------------------------------------------------
# Word-level coproduct of the P basis


def _submultisets(letters):
    """All distinct sub-multisets of a letter multiset, as sorted tuples."""
    counts = sorted(Counter(letters).items())
    out = [()]
    for letter, mult in counts:
        out = [u + (letter,) * k for u in out for k in range(mult + 1)]
    return out


def unparkized_terms(pi):
    """Multiplicity-free splits: all (u, v) with u a sub-multiset of pi and
    v its complement, both sorted."""
    pi = tuple(pi)
    if not (parking.is_nondecreasing(pi) and parking.is_parking(pi)):
        raise ValueError("index word must be a nondecreasing parking function")
    counts = Counter(pi)
    out = []
    for u in _submultisets(pi):
        rest = counts - Counter(u)
        v = tuple(sorted(rest.elements()))
        out.append((u, v))
    return out


def coproduct_P(pi):
    """The parkized coproduct: tally of (parkize(u), parkize(v)) over all
    splits, with multiplicities."""
    tally = Counter()
    for u, v in unparkized_terms(pi):
        tally[(parking.parkize(u), parking.parkize(v))] += 1
    return dict(tally)


def biprofile_regrouping_check(n) -> bool:
    """Collecting the multiplicity-free splits of every index word by
    biprofile must yield each parking biprofile exactly once per class
    representative count, and the class set matches the enumeration."""
    seen = set()
    for pi in parking.enumerate_ndpf(n):
        for u, v in unparkized_terms(pi):
            seen.add((parking.profile(u), parking.profile(v)))
    return seen == set(parking.enumerate_parking_biprofiles(n))


# ---------------------------------------------------------------------------
# Commutative two-alphabet route (generating series of trees by branch
# edge counts)

# monomials are pairs (sorted u-subscripts, sorted v-subscripts), both
# weakly decreasing tuples of positive integers; coefficients are ints


def _poly_mul(a, b):
    out = {}
    for (ua, va), ca in a.items():
        for (ub, vb), cb in b.items():
            key = (
                tuple(sorted(ua + ub, reverse=True)),
                tuple(sorted(va + vb, reverse=True)),
            )
            out[key] = out.get(key, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _poly_add(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _poly_scale_marker(poly, side, m):
    out = {}
    for (u, v), c in poly.items():
        if side == "u":
            key = (tuple(sorted(u + (m,), reverse=True)), v)
        else:
            key = (u, tuple(sorted(v + (m,), reverse=True)))
        out[key] = out.get(key, 0) + c
    return out


def tree_series(N):
    """Degreewise solution of the coupled branch series: one series for
    trees with no right subtree at the root, one for no left subtree, and
    their product counting all trees by branch edge multisets."""
    one = {((), ()): 1}
    U = [one]
    V = [one]

    def power_component(series, p, d):
        # small degrees only, no memo needed
        if p == 0:
            return one if d == 0 else {}
        out = {}
        for e in range(d + 1):
            if e >= len(series):
                continue
            sub = power_component(series, p - 1, d - e)
            out = _poly_add(out, _poly_mul(series[e], sub))
        return out

    for d in range(1, N + 1):
        ud = {}
        vd = {}
        for m in range(1, d + 1):
            ud = _poly_add(
                ud, _poly_scale_marker(power_component(V, m, d - m), "u", m)
            )
            vd = _poly_add(
                vd, _poly_scale_marker(power_component(U, m, d - m), "v", m)
            )
        U.append(ud)
        V.append(vd)
    W = []
    for d in range(N + 1):
        wd = {}
        for e in range(d + 1):
            wd = _poly_add(wd, _poly_mul(U[e], V[d - e]))
        W.append(wd)
    return W


def delta_g_commutative(n):
    """Partition-level coproduct tally: sort both tensor indices of the
    noncrossing route."""
    tally = {}
    t = delta_g_noncrossing(n)
    for (i, j), c in t.terms.items():
        key = (
            tuple(sorted(i, reverse=True)),
            tuple(sorted(j, reverse=True)),
        )
        tally[key] = tally.get(key, 0) + c
    return tally


def delta_g_commutative_via_trees(n):
    """Same tally from the degree-n component of the tree series."""
    return tree_series(n)[n]


def tree_weight(t):
    """The branch-edge monomial of a single tree, as a (u, v) subscript
    pair (zero-edge branches are dropped)."""
    pl, pr = noncrossing.tree_phi(t)
    u = tuple(sorted((len(b) - 1 for b in pl.blocks if len(b) > 1), reverse=True))
    v = tuple(sorted((len(b) - 1 for b in pr.blocks if len(b) > 1), reverse=True))
    return u, v


# ---------------------------------------------------------------------------
# Structural checks


def cocommutativity_check(n) -> bool:
    t = delta_g_algebraic(n)
    return t.swap() == t


def coassociativity_check(n) -> bool:
    """(Delta x id) Delta = (id x Delta) Delta on g_n, compared on the
    S-basis three-fold tensor (as nested dictionaries)."""
    t = s_coproduct(lagrange.g_component(n))
    left = {}
    right = {}
    for (i, j), c in t.terms.items():
        for (a, b), d in s_coproduct(_s_monomial(i)).terms.items():
            key = (a, b, j)
            left[key] = left.get(key, 0) + c * d
        for (a, b), d in s_coproduct(_s_monomial(j)).terms.items():
            key = (i, a, b)
            right[key] = right.get(key, 0) + c * d
    left = {k: v for k, v in left.items() if v}
    right = {k: v for k, v in right.items() if v}
    return left == right


def _s_monomial(index):
    from .algebra import NSymElement

    return NSymElement.monomial("S", index)
