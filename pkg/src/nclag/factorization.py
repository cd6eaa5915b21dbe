"""Minimal factorizations of canonical permutations and their match with
the tensor coefficients of the coproduct on the G basis.

Permutations are one-line lists over 1..m.  Transposition length is
m minus the number of cycles; a factorization sigma = alpha * beta is
minimal when the transposition lengths add up.
"""

from __future__ import annotations

import itertools

from . import compositions as comps, hopf


def canonical_permutation(i_comp):
    """The permutation of 1..(|I|+l(I)) whose cycles are consecutive runs
    of lengths i_t + 1."""
    if not i_comp or not comps.is_composition(i_comp):
        raise ValueError("index must be a nonempty composition")
    m = comps.weight(i_comp) + len(i_comp)
    w = list(range(1, m + 1))
    start = 1
    for p in i_comp:
        stop = start + p  # cycle start..stop inclusive
        for e in range(start, stop):
            w[e - 1] = e + 1
        w[stop - 1] = start
        start = stop + 1
    return w


def cycles_of(w):
    """Cycles listed by increasing minima, each starting at its minimum."""
    n = len(w)
    seen = set()
    out = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        e = w[start - 1]
        while e != start:
            cyc.append(e)
            seen.add(e)
            e = w[e - 1]
        out.append(cyc)
    return out


def ordered_cycle_type(w):
    return tuple(len(c) for c in cycles_of(w))


def reduced_ordered_cycle_type(w):
    """Cycle lengths by increasing minima, each reduced by one, fixed
    points dropped (stable under adding fixed points)."""
    return comps.reduce_parts(ordered_cycle_type(w))


def transposition_length(w) -> int:
    return len(w) - len(cycles_of(w))


def compose(a, b):
    """(a * b)(x) = a(b(x))."""
    return [a[b[x] - 1] for x in range(len(a))]


def inverse(w):
    out = [0] * len(w)
    for x in range(1, len(w) + 1):
        out[w[x - 1] - 1] = x
    return out


def permutations_of_reduced_type(m, j_comp):
    """All permutations of 1..m with the given reduced ordered cycle type,
    built by choosing nontrivial cycle supports with increasing minima."""

    def blocks(rest, prev_min, parts):
        if not parts:
            yield []
            return
        size = parts[0] + 1
        candidates = sorted(x for x in rest if x > prev_min)
        for mn in candidates:
            others = [x for x in rest if x > mn]
            for chosen in itertools.combinations(others, size - 1):
                nxt = rest - {mn, *chosen}
                for tail in blocks(nxt, mn, parts[1:]):
                    yield [(mn,) + chosen] + tail

    for supp in blocks(set(range(1, m + 1)), 0, list(j_comp)):
        # all cyclic arrangements of each block, minimum first
        arrangements = [
            [(b[0],) + perm for perm in itertools.permutations(b[1:])]
            for b in supp
        ]
        for combo in itertools.product(*arrangements):
            w = list(range(1, m + 1))
            for cyc in combo:
                for k, e in enumerate(cyc):
                    w[e - 1] = cyc[(k + 1) % len(cyc)]
            yield w


def minimal_factorizations(sigma, j_comp, k_comp):
    """All (alpha, beta) with alpha*beta = sigma, reduced ordered cycle
    types J and K, and additive transposition lengths."""
    m = len(sigma)
    lt = transposition_length(sigma)
    if comps.weight(j_comp) + comps.weight(k_comp) != lt:
        return []
    out = []
    for alpha in permutations_of_reduced_type(m, j_comp):
        beta = compose(inverse(alpha), sigma)
        if transposition_length(beta) != comps.weight(k_comp):
            continue
        if reduced_ordered_cycle_type(beta) == tuple(k_comp):
            out.append((alpha, beta))
    return out


def count_minimal_factorizations(i_comp, j_comp, k_comp) -> int:
    """Number of minimal factorizations of the canonical permutation of
    reduced type I into factors of reduced types J and K."""
    sigma = canonical_permutation(i_comp)
    if len(sigma) > 10:
        raise ValueError("ambient symmetric group too large (size > 10)")
    return len(minimal_factorizations(sigma, j_comp, k_comp))


def verify_coproduct_match(i_comp) -> bool:
    """Factorization counts of the canonical permutation must equal the
    tensor coefficients of the coproduct of the matching G-basis monomial."""
    i_comp = tuple(i_comp)
    sigma = canonical_permutation(i_comp)
    if len(sigma) > 10:
        raise ValueError("ambient symmetric group too large (size > 10)")
    delta = hopf.delta_g_monomial(i_comp)
    n = comps.weight(i_comp)
    for a in range(n + 1):
        for j in comps.all_compositions(a):
            for k in comps.all_compositions(n - a):
                if len(minimal_factorizations(sigma, j, k)) != delta.coeff(j, k):
                    return False
    return True


def partition_tally(sigma):
    """Factorization counts of sigma grouped by unordered (partition)
    reduced cycle types of the two factors."""
    m = len(sigma)
    lt = transposition_length(sigma)
    tally = {}
    for alpha in itertools.permutations(range(1, m + 1)):
        alpha = list(alpha)
        la = transposition_length(alpha)
        if la > lt:
            continue
        beta = compose(inverse(alpha), sigma)
        if la + transposition_length(beta) != lt:
            continue
        key = (
            tuple(sorted(reduced_ordered_cycle_type(alpha), reverse=True)),
            tuple(sorted(reduced_ordered_cycle_type(beta), reverse=True)),
        )
        tally[key] = tally.get(key, 0) + 1
    return tally


def representative_independence_check(i_comp, other_sigma) -> bool:
    """Partition-level tallies must not depend on which permutation of the
    given cycle type is factorized."""
    sigma = canonical_permutation(i_comp)
    want = tuple(sorted(ordered_cycle_type(sigma)))
    got = tuple(
        sorted(
            sorted(len(c) for c in cycles_of(other_sigma))
            + [1] * (len(sigma) - len(other_sigma))
        )
    )
    if want != got:
        raise ValueError("representative has a different cycle type")
    base = partition_tally(sigma)
    pad = len(sigma) - len(other_sigma)
    other = partition_tally(list(other_sigma) + [len(other_sigma) + 1 + k for k in range(pad)])
    return base == other
