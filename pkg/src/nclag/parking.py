"""Nondecreasing (k-)parking functions, profiles, biprofiles and the
composition codecs that parametrize the coproduct combinatorics.

Words are tuples of positive integers.  A profile is a pair
(starts, lengths) of equal-length tuples with starts strictly increasing
and starts[i+1] > starts[i] + lengths[i]; the empty profile ((), ())
belongs to the empty word.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import compositions as comps


def is_nondecreasing(w) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


def is_k_parking(w, k=1) -> bool:
    """Parking test: the sorted word satisfies a_i <= k(i-1)+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = sorted(w)
    return all(v >= 1 for v in a) and all(
        a[i] <= k * i + 1 for i in range(len(a))
    )


def is_parking(w) -> bool:
    return is_k_parking(w, 1)


def enumerate_k_ndpf(n, k=1):
    """All nondecreasing k-parking functions of length n, lexicographically."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, k * i + 2):
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


def enumerate_ndpf(n):
    return enumerate_k_ndpf(n, 1)


def type_of(w):
    """Packed evaluation: letter multiplicities with the zeros removed."""
    if not is_nondecreasing(w):
        raise ValueError("word must be nondecreasing")
    return tuple(len(list(g)) for _, g in itertools.groupby(w))


def k_evaluation(w, k=1):
    """Occurrences of each letter 1..kn+1 (a generalized Lukasiewicz word)."""
    n = len(w)
    ev = [0] * (k * n + 1)
    for v in w:
        ev[v - 1] += 1
    return tuple(ev)


@lru_cache(maxsize=None)
def ndpf_count_of_type(comp) -> int:
    """Number of nondecreasing parking functions with packed evaluation comp.

    Counts strictly increasing support values v_1 < ... < v_r with
    v_i <= 1 + (partial sum of earlier parts); agrees with the coefficient
    of S^comp in the Lagrange series component of matching degree.
    """
    comp = tuple(comp)
    if not comps.is_composition(comp):
        raise ValueError("type must be a composition")
    bounds = [1 + s for s in ([0] + list(itertools.accumulate(comp))[:-1])]

    def count(i, prev):
        if i == len(bounds):
            return 1
        return sum(count(i + 1, v) for v in range(prev + 1, bounds[i] + 1))

    return count(0, 0)


def parkize(w):
    """The parking function canonically below a nondecreasing word.

    Repeatedly find the smallest k whose prefix bound fails (fewer than k
    letters are <= k) and shift every letter above k down by one.  The
    uniform shift preserves equalities between letters; parking functions
    are fixed points.
    """
    if not is_nondecreasing(w):
        raise ValueError("word must be nondecreasing")
    out = list(w)
    n = len(out)
    while True:
        k = next(
            (k for k in range(1, n + 1) if sum(1 for v in out if v <= k) < k),
            None,
        )
        if k is None:
            return tuple(out)
        out = [v - 1 if v > k else v for v in out]


def _max_parking_prefix(w):
    # longest prefix that, shifted down by w[0]-1, is a parking function
    shift = w[0] - 1
    c = 0
    for j, v in enumerate(w):
        if v - shift > j + 1:
            break
        c = j + 1
    return c


def profile(w):
    """Greedy maximal factorization into shifted parking functions."""
    if not is_nondecreasing(w):
        raise ValueError("word must be nondecreasing")
    starts, lengths = [], []
    pos = 0
    while pos < len(w):
        rest = w[pos:]
        c = _max_parking_prefix(rest)
        starts.append(rest[0])
        lengths.append(c)
        pos += c
    return tuple(starts), tuple(lengths)


def factor_words(w):
    """The actual factors of the profile factorization of w."""
    s, c = profile(w)
    out = []
    pos = 0
    for ci in c:
        out.append(w[pos : pos + ci])
        pos += ci
    return out


def is_profile(p) -> bool:
    s, c = p
    if len(s) != len(c):
        return False
    if not all(x >= 1 for x in s) or not all(x >= 1 for x in c):
        return False
    return all(s[i + 1] > s[i] + c[i] for i in range(len(s) - 1))


def min_word(p):
    """The lexicographically smallest word with the given profile."""
    if not is_profile(p):
        raise ValueError("not a profile")
    s, c = p
    out = []
    for si, ci in zip(s, c):
        out.extend([si] * ci)
    return tuple(out)


def joint_profile(left, right):
    """Merge two profiles by start, left biletters winning ties."""
    s, c = left
    t, d = right
    biletters = [(x, 0, y) for x, y in zip(s, c)] + [(x, 1, y) for x, y in zip(t, d)]
    biletters.sort(key=lambda b: (b[0], b[1]))
    return tuple(b[0] for b in biletters), tuple(b[2] for b in biletters)


def is_parking_biprofile(left, right) -> bool:
    """Whether representatives u, v of the two profiles concatenate to a
    parking function: in the joint profile, x_m <= y_1+...+y_{m-1}+1."""
    xs, ys = joint_profile(left, right)
    acc = 0
    for x, y in zip(xs, ys):
        if x > acc + 1:
            return False
        acc += y
    return True


def _profiles_of_length(total, max_start):
    """All profiles with lengths summing to `total` and starts <= max_start."""
    out = []

    def rec(starts, lengths, min_start, remaining):
        if remaining == 0:
            out.append((tuple(starts), tuple(lengths)))
            return
        for s in range(min_start, max_start + 1):
            for c in range(1, remaining + 1):
                starts.append(s)
                lengths.append(c)
                rec(starts, lengths, s + c + 1, remaining - c)
                starts.pop()
                lengths.pop()

    rec([], [], 1, total)
    return out


def enumerate_parking_biprofiles(n):
    """All parking biprofiles of size n (lengths on both sides sum to n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for m in range(n + 1):
        for left in _profiles_of_length(m, max(n, 1)):
            for right in _profiles_of_length(n - m, max(n, 1)):
                if is_parking_biprofile(left, right):
                    out.append((left, right))
    return out


def c_map(p, n):
    """Encode a profile as a composition of n (the map C of the coproduct
    combinatorics), padding with trailing ones."""
    s, c = p
    if not is_profile(p):
        raise ValueError("not a profile")
    if s and n < s[-1] + c[-1]:
        raise ValueError("n too small for this profile")
    parts = []
    s, c = list(s), list(c)
    while s:
        if s[0] == 1:
            parts.append(1 + c[0])
            shift = c[0] + 1
            s, c = [x - shift for x in s[1:]], c[1:]
        else:
            parts.append(1)
            s = [x - 1 for x in s]
    parts.extend([1] * (n - sum(parts)))
    return tuple(parts)


def c_inverse(comp):
    """Decode a composition into a profile (the map C')."""
    starts, lengths = [], []
    acc = 0
    for p in comp:
        if p - 1 > 0:
            starts.append(1 + acc)
            lengths.append(p - 1)
        acc += p
    return tuple(starts), tuple(lengths)


def biprofile_to_compositions(left, right):
    """Image of a parking biprofile under C: two compositions of
    n = 1 + total length."""
    n = 1 + sum(left[1]) + sum(right[1])
    return c_map(left, n), c_map(right, n)


def is_compatible(i_comp, j_comp) -> bool:
    """Whether (I, J) is the image of a parking biprofile: equal weights n,
    n+1 parts in total, and the sorted merged descent word z has z_l >= l."""
    n = comps.weight(i_comp)
    if comps.weight(j_comp) != n:
        return False
    if len(i_comp) + len(j_comp) != n + 1:
        return False
    z = sorted(comps.descent_set(i_comp) + comps.descent_set(j_comp))
    return all(v >= idx + 1 for idx, v in enumerate(z))


def enumerate_compatible_pairs(n):
    """All compatible pairs of compositions of weight n."""
    out = []
    for i in comps.all_compositions(n):
        for j in comps.all_compositions(n):
            if len(i) + len(j) == n + 1 and is_compatible(i, j):
                out.append((i, j))
    return out


def compatible_with(i_comp):
    """All J compatible with I, generated by the local move from the top
    element mirror_conjugate(I): add 1 to a part and subtract 1 from the
    part to its right (when that part exceeds 1)."""
    top = comps.mirror_conjugate(i_comp)
    seen = {top}
    frontier = [top]
    while frontier:
        cur = frontier.pop()
        for i in range(1, len(cur)):
            if cur[i] > 1:
                nxt = cur[:i - 1] + (cur[i - 1] + 1, cur[i] - 1) + cur[i + 1:]
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return sorted(seen, key=lambda c: (len(c), c))


def compatible_bottom(i_comp):
    top = comps.mirror_conjugate(i_comp)
    k = len(top)
    if k == 0:
        return ()
    return (comps.weight(i_comp) - k + 1,) + (1,) * (k - 1)


def dumb_bijection(i_comp, j_comp):
    """The direct map from a compatible pair of weight n to a nondecreasing
    parking function of length n."""
    if not is_compatible(i_comp, j_comp):
        raise ValueError("pair is not compatible")
    n = comps.weight(i_comp)
    w = sorted(
        [2 * d - 1 for d in comps.descent_set(i_comp)]
        + [2 * d for d in comps.descent_set(j_comp)]
        + [2 * n - 1]
    )
    out = [0] * n
    for i, v in enumerate(w, start=1):
        out[n - i] = n + i - v
    return tuple(out)


def dumb_bijection_inverse(word):
    """Recover the compatible pair from its image word."""
    n = len(word)
    w = [n + i - word[n - i] for i in range(1, n + 1)]
    w.sort()
    w.remove(2 * n - 1)
    des_i = sorted((v + 1) // 2 for v in w if v % 2 == 1)
    des_j = sorted(v // 2 for v in w if v % 2 == 0)
    pair = (
        comps.composition_from_descents(des_i, n),
        comps.composition_from_descents(des_j, n),
    )
    if not is_compatible(*pair):
        raise ValueError("word is not the image of a compatible pair")
    return pair


def breakpoints(w):
    """Positions p where w splits into a parking prefix over 1..p and a
    parking suffix shifted by p (the cut positions of the profile map used
    by the f-basis matrix)."""
    n = len(w)
    out = []
    for p in range(1, n):
        pre, suf = w[:p], [v - p for v in w[p:]]
        if max(pre) <= p and is_parking(pre) and min(suf) >= 1 and is_parking(suf):
            out.append(p)
    return out
