"""The commutative reduced incidence Hopf algebra of noncrossing-partition
lattices: multiplicative functions as hat series, convolution, Moebius and
zeta powers, chain and multichain counts, and a brute-force lattice oracle.

A multiplicative function is determined by its hat coefficients (its values
on the complete generators); convolution is the plain product of hat
series, and values on the Lagrange generators come from the scalar
functional equation Phi = sum alpha_n t^n Phi^n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import noncrossing


class MultiplicativeFunction:
    """A character of the incidence Hopf algebra, stored by its hat series
    (exact rationals, constant term 1)."""

    __slots__ = ("hat",)

    def __init__(self, hat):
        hat = [Fraction(x) for x in hat]
        if not hat or hat[0] != 1:
            raise ValueError("hat series must start with 1")
        self.hat = hat

    @property
    def max_degree(self):
        return len(self.hat) - 1

    def __eq__(self, other):
        return (
            isinstance(other, MultiplicativeFunction) and other.hat == self.hat
        )

    def __repr__(self):
        return f"MultiplicativeFunction({[str(x) for x in self.hat]})"


def zeta(N) -> MultiplicativeFunction:
    return MultiplicativeFunction([1, 1] + [0] * (N - 1))


def identity_character(N) -> MultiplicativeFunction:
    return MultiplicativeFunction([1] + [0] * N)


def mobius(N) -> MultiplicativeFunction:
    # truncated expansion of 1/(1+t)
    return MultiplicativeFunction([(-1) ** n for n in range(N + 1)])


def convolve(phi, psi) -> MultiplicativeFunction:
    if phi.max_degree != psi.max_degree:
        raise ValueError("operands must share the degree bound")
    N = phi.max_degree
    hat = [
        sum(phi.hat[k] * psi.hat[d - k] for k in range(d + 1))
        for d in range(N + 1)
    ]
    return MultiplicativeFunction(hat)


def zeta_power(k, N) -> MultiplicativeFunction:
    out = identity_character(N)
    z = zeta(N)
    for _ in range(k):
        out = convolve(out, z)
    return out


def g_values(phi):
    """Values on the Lagrange generators, solving the scalar functional
    equation degree by degree."""
    N = phi.max_degree
    a = [Fraction(1)]
    powers = {}

    def power(p, d):
        if p == 0:
            return Fraction(1) if d == 0 else Fraction(0)
        key = (p, d)
        if key not in powers:
            powers[key] = sum(
                (a[e] * power(p - 1, d - e) for e in range(d + 1)),
                Fraction(0),
            )
        return powers[key]

    for d in range(1, N + 1):
        a.append(
            sum(
                (phi.hat[n] * power(n, d - n) for n in range(1, d + 1)),
                Fraction(0),
            )
        )
    return a


def from_g_values(a) -> MultiplicativeFunction:
    """Recover the hat series from the generator values (inverse solve)."""
    a = [Fraction(x) for x in a]
    if not a or a[0] != 1:
        raise ValueError("generator values must start with 1")
    N = len(a) - 1
    powers = {}

    def power(p, d):
        if p == 0:
            return Fraction(1) if d == 0 else Fraction(0)
        key = (p, d)
        if key not in powers:
            powers[key] = sum(
                (a[e] * power(p - 1, d - e) for e in range(d + 1)),
                Fraction(0),
            )
        return powers[key]

    hat = [Fraction(1)]
    for d in range(1, N + 1):
        rest = sum(
            (hat[n] * power(n, d - n) for n in range(1, d)), Fraction(0)
        )
        hat.append(a[d] - rest)
    return MultiplicativeFunction(hat)


def zeta_power_value(k, n) -> int:
    """Closed form for the generator values of the k-th zeta power."""
    return comb(k * n + k, n) // (n + 1)


def multichain_count(n, k) -> int:
    """Weakly increasing k-tuples in the lattice one size larger; one more
    convolution factor than free elements."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v = g_values(zeta_power(k + 1, n))[n]
    assert v.denominator == 1
    return int(v)


def chain_count(n_plus_1, s) -> int:
    """Strict chains from bottom to top with prescribed rank jumps."""
    n = n_plus_1 - 1
    s = tuple(s)
    if any(x < 1 for x in s) or sum(s) != n:
        raise ValueError("rank jumps must be positive and sum to the rank")
    v = Fraction(1, n + 1)
    for x in s:
        v *= comb(n + 1, x)
    assert v.denominator == 1
    return int(v)


def biane_count(n, orders) -> int:
    """Minimal factorizations of a full cycle into cycles of the given
    orders: a power of n when the lengths are minimal, zero otherwise."""
    orders = tuple(orders)
    if any(a < 2 for a in orders):
        raise ValueError("cycle orders must be at least 2")
    if sum(a - 1 for a in orders) != n - 1:
        return 0
    return n ** (len(orders) - 1)


# ---------------------------------------------------------------------------
# Brute-force lattice oracle


class NCLattice:
    """The refinement order on noncrossing partitions of 1..n, computed by
    definition; ground truth for the series formulas above."""

    def __init__(self, n):
        if n > 7:
            raise ValueError("lattice oracle capped at n = 7")
        self.n = n
        self.elements = noncrossing.enumerate_nc(n)
        self.bottom = noncrossing.NoncrossingPartition.singletons(n)
        self.top = noncrossing.NoncrossingPartition.one_block(n)
        self._mob = {}

    def leq(self, p, q) -> bool:
        qmap = {}
        for k, b in enumerate(q.blocks):
            for e in b:
                qmap[e] = k
        return all(len({qmap[e] for e in b}) == 1 for b in p.blocks)

    def rank(self, p) -> int:
        return self.n - len(p.blocks)

    def interval(self, p, q):
        return [r for r in self.elements if self.leq(p, r) and self.leq(r, q)]

    def mobius(self, p, q) -> int:
        if not self.leq(p, q):
            return 0
        key = (p, q)
        if key not in self._mob:
            if p == q:
                self._mob[key] = 1
            else:
                self._mob[key] = -sum(
                    self.mobius(p, r) for r in self.interval(p, q) if r != q
                )
        return self._mob[key]

    def count_chains(self, s) -> int:
        """Strict chains bottom < p_1 < ... < p_r < top with rank jumps s
        (the last jump reaches the top)."""
        s = tuple(s)
        if sum(s) != self.n - 1:
            raise ValueError("rank jumps must sum to the lattice rank")

        def rec(cur, jumps):
            if len(jumps) == 1:
                return 1 if self.leq(cur, self.top) else 0
            target = self.rank(cur) + jumps[0]
            return sum(
                rec(q, jumps[1:])
                for q in self.elements
                if self.rank(q) == target and self.leq(cur, q) and q != cur
            )

        return rec(self.bottom, list(s))

    def count_multichains(self, k) -> int:
        """Weakly increasing k-tuples."""

        def rec(cur, left):
            if left == 0:
                return 1
            return sum(
                rec(q, left - 1) for q in self.elements if self.leq(cur, q)
            )

        return sum(rec(p, k - 1) for p in self.elements)

    def interval_size(self, p, q) -> int:
        return len(self.interval(p, q))


@lru_cache(maxsize=None)
def _lattice(n):
    return NCLattice(n)


def lattice_oracle(n) -> NCLattice:
    return _lattice(n)
