"""Integer compositions and the involutions acting on them.

Compositions are plain tuples of positive integers; the empty tuple is the
(unique) composition of 0.  They serve as the index set for every basis in
the package, so everything here is deliberately tiny and allocation-cheap.
"""

from __future__ import annotations

import itertools


def is_composition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts)


def weight(comp) -> int:
    return sum(comp)


def length(comp) -> int:
    return len(comp)


def all_compositions(n):
    """All compositions of n in reverse lexicographic order.

    For n=3 the order is (3), (2,1), (1,2), (1,1,1): counting descent sets
    in binary with the descent at position 1 as the most significant bit
    produces exactly this order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        descents = {j + 1 for j in range(n - 1) if mask & (1 << (n - 2 - j))}
        out.append(composition_from_descents(descents, n))
    return out


def descent_set(comp):
    """Partial sums of the parts, excluding the total weight."""
    sums = list(itertools.accumulate(comp))
    return sums[:-1]


def composition_from_descents(descents, n):
    """The unique composition of n whose descent set is `descents`."""
    ds = sorted(set(descents))
    if any(d <= 0 or d >= n for d in ds):
        raise ValueError("descents must lie strictly between 0 and n")
    parts = []
    prev = 0
    for d in ds:
        parts.append(d - prev)
        prev = d
    if n > 0:
        parts.append(n - prev)
    return tuple(parts)


def refines(j, i) -> bool:
    """True iff j is finer than i (same weight, Des(i) a subset of Des(j))."""
    if weight(j) != weight(i):
        return False
    return set(descent_set(i)) <= set(descent_set(j))


def coarsenings(comp):
    """All compositions coarser than (or equal to) `comp`."""
    n = weight(comp)
    ds = descent_set(comp)
    out = []
    for r in range(len(ds) + 1):
        for sub in itertools.combinations(ds, r):
            out.append(composition_from_descents(sub, n))
    return out


def refinements(comp):
    """All compositions finer than (or equal to) `comp`."""
    n = weight(comp)
    fixed = set(descent_set(comp))
    free = [d for d in range(1, n) if d not in fixed]
    out = []
    for r in range(len(free) + 1):
        for sub in itertools.combinations(free, r):
            out.append(composition_from_descents(fixed.union(sub), n))
    return out


def mirror(comp):
    return tuple(reversed(comp))


def mirror_conjugate(comp):
    """The composition whose descent set is the complement of Des(comp)."""
    n = weight(comp)
    if n == 0:
        return ()
    ds = set(descent_set(comp))
    return composition_from_descents([d for d in range(1, n) if d not in ds], n)


def conjugate(comp):
    return mirror(mirror_conjugate(comp))


def double(comp):
    return tuple(2 * p for p in comp)


def plus_ones(comp):
    return tuple(p + 1 for p in comp)


def reduce_parts(parts):
    """Subtract 1 from every entry and drop the zeros.

    Accepts weak compositions (entries >= 0): ordered types of partitions
    with singleton blocks reduce through zero entries.
    """
    return tuple(p - 1 for p in parts if p > 1)


def to_text(comp) -> str:
    """Digit string when all parts are single digits, comma list otherwise."""
    if not comp:
        return ""
    if all(p <= 9 for p in comp):
        return "".join(str(p) for p in comp)
    return ",".join(str(p) for p in comp)


def from_text(text) -> tuple:
    """Inverse of to_text; also accepts comma lists of multi-digit parts."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = tuple(int(p) for p in text.split(","))
    else:
        parts = tuple(int(ch) for ch in text)
    if not is_composition(parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts
