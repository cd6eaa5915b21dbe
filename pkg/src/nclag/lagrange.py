"""Degreewise solvers for the noncommutative Lagrange functional equation
and the transition tables between the S and G bases.

The central object is the series g = 1 + sum_n S_n g^n, computed degree by
degree with exact integer coefficients.  Everything else here is derived
from it: the k-analogue series, free cumulants, the inverse series, the
negated-alphabet expansion and the antipode on the G basis, each with the
independent computation routes used for cross-checking.
"""

from __future__ import annotations

import os
import threading
from functools import lru_cache

from . import algebra, compositions as comps, parking
from .algebra import NSymElement


def max_degree() -> int:
    """Bound on basis-transition tables (override with NCLAG_MAX_DEGREE)."""
    return int(os.environ.get("NCLAG_MAX_DEGREE", "10"))


def _check_bound(n):
    if n > max_degree():
        raise ValueError(
            f"degree {n} exceeds the table bound {max_degree()} "
            "(raise NCLAG_MAX_DEGREE to extend)"
        )


class GradedSeries:
    """A graded series stored as a list of homogeneous S-basis components."""

    __slots__ = ("components", "_pw")

    def __init__(self, components):
        self.components = list(components)
        for d, c in enumerate(self.components):
            if not c.is_homogeneous(d) and not c.is_zero():
                raise ValueError(f"component {d} is not homogeneous of degree {d}")
        self._pw = {}

    @property
    def max_degree(self):
        return len(self.components) - 1

    def component(self, d):
        if d < 0:
            raise ValueError("degree must be nonnegative")
        if d >= len(self.components):
            raise ValueError(f"series only computed up to degree {self.max_degree}")
        return self.components[d]

    def power_component(self, p, d):
        """Degree-d component of the p-th power (memoized)."""
        if p == 0:
            return NSymElement.one("S") if d == 0 else NSymElement.zero("S")
        key = (p, d)
        if key in self._pw:
            return self._pw[key]
        out = NSymElement.zero("S")
        for e in range(d + 1):
            c = self.component(e)
            if c.is_zero():
                continue
            sub = self.power_component(p - 1, d - e)
            if not sub.is_zero():
                out = out + c * sub
        self._pw[key] = out
        return out

    def truncate(self, N):
        return GradedSeries(self.components[: N + 1])

    def __eq__(self, other):
        return (
            isinstance(other, GradedSeries)
            and other.components == self.components
        )

    def __repr__(self):
        lines = [f"[{d}] {c!r}" for d, c in enumerate(self.components)]
        return "\n".join(lines)


def _extend_solution(series, coeffs, power_rule, N):
    # degree-d right-hand side only involves components < d of the unknown
    for d in range(len(series.components), N + 1):
        total = NSymElement.zero("S")
        for n in range(1, d + 1):
            c = coeffs(n)
            if c.is_zero():
                continue
            sub = series.power_component(power_rule(n), d - n)
            if not sub.is_zero():
                total = total + c * sub
        series.components.append(total)


def solve_functional_equation(coeffs, power_rule, N) -> GradedSeries:
    """Solve X = sum_n coeffs(n) X^power_rule(n) degree by degree up to N.

    `coeffs(n)` must be homogeneous of degree n; the constant term of the
    solution is the unit.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    series = GradedSeries([NSymElement.one("S")])
    _extend_solution(series, coeffs, power_rule, N)
    return series


def _s_generator(n):
    return NSymElement.monomial("S", (n,))


# ---------------------------------------------------------------------------
# The g series and its k-analogues (shared caches, exclusive extension)

_cache_lock = threading.Lock()
_g_series = GradedSeries([NSymElement.one("S")])
_gk_series = {}


def g_component(n) -> NSymElement:
    """Degree-n component of g on the S basis."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    with _cache_lock:
        if n > _g_series.max_degree:
            _extend_solution(_g_series, _s_generator, lambda m: m, n)
        return _g_series.components[n]


def g_table(N) -> GradedSeries:
    g_component(N)
    with _cache_lock:
        return _g_series.truncate(N)


def g_expansion_check(n) -> bool:
    """Recompute g_n as a tally over nondecreasing parking functions."""
    tally = NSymElement.zero("S")
    for w in parking.enumerate_ndpf(n):
        tally = tally + NSymElement.monomial("S", parking.type_of(w))
    return tally == g_component(n)


def gk_component(k, n) -> NSymElement:
    """Degree-n component of the k-analogue series (k=1 recovers g)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return g_component(n)
    with _cache_lock:
        series = _gk_series.setdefault(k, GradedSeries([NSymElement.one("S")]))
        if n > series.max_degree:
            _extend_solution(series, _s_generator, lambda m: k * m, n)
        return series.components[n]


def gk_table(k, N) -> GradedSeries:
    gk_component(k, N)
    with _cache_lock:
        return _gk_series[k].truncate(N) if k != 1 else g_table(N)


def gk_component_iterative(k, n) -> NSymElement:
    """Same component via iteration: feed the (k-1)-series in as coefficients."""
    if k == 1:
        return g_component(n)
    series = solve_functional_equation(
        lambda m: gk_component(k - 1, m), lambda m: m, n
    )
    return series.component(n)


def gk_component_via_phi(k, n) -> NSymElement:
    """Same component as the divisible-part projection of g in degree kn."""
    return algebra.phi_k(g_component(k * n), k)


def k_parking_check(n, k) -> bool:
    """Compare the k-analogue component against the k-NDPF type tally."""
    tally = NSymElement.zero("S")
    for w in parking.enumerate_k_ndpf(n, k):
        tally = tally + NSymElement.monomial("S", parking.type_of(w))
    return tally == gk_component(k, n)


# ---------------------------------------------------------------------------
# Inverse series and free cumulants


def series_inverse(s: GradedSeries) -> GradedSeries:
    """The multiplicative inverse, degree by degree."""
    if s.component(0) != NSymElement.one("S"):
        raise ValueError("constant term must be the unit")
    inv = [NSymElement.one("S")]
    for d in range(1, s.max_degree + 1):
        total = NSymElement.zero("S")
        for e in range(1, d + 1):
            c = s.component(e)
            if not c.is_zero():
                total = total + c * inv[d - e]
        inv.append(total.scale(-1))
    return GradedSeries(inv)


def series_product_component(a: GradedSeries, b: GradedSeries, d) -> NSymElement:
    out = NSymElement.zero("S")
    for e in range(d + 1):
        out = out + a.component(e) * b.component(d - e)
    return out


def sigma_series(N) -> GradedSeries:
    """The full sum of complete generators, 1 + S_1 + S_2 + ..."""
    return GradedSeries(
        [NSymElement.one("S")] + [_s_generator(n) for n in range(1, N + 1)]
    )


def free_cumulants(N) -> GradedSeries:
    """The cumulant components solving sigma = sum_n K_n sigma^n."""
    sigma = sigma_series(N)
    ks = [NSymElement.one("S")]
    for d in range(1, N + 1):
        total = _s_generator(d)
        for n in range(1, d):
            total = total - _multiply_homogeneous(ks[n], sigma.power_component(n, d - n))
        ks.append(total)
    return GradedSeries(ks)


def _multiply_homogeneous(a, b):
    return a * b


def free_cumulant_check(N) -> bool:
    """The cumulant series must invert the negated-alphabet g series."""
    neg = GradedSeries(
        [algebra.neg_alphabet(g_component(d)) for d in range(N + 1)]
    )
    return series_inverse(neg).components == free_cumulants(N).components


def cumulant_reciprocity_check(n) -> bool:
    """K_n on S carries the same coefficients as S_n on the G basis."""
    kn = free_cumulants(n).component(n)
    sn = s_generator_on_g(n)
    return kn.terms == sn.terms


def gamma_check(N) -> bool:
    """inverse(g(-A)) = sum_n S_n g(-A)^n, degree by degree."""
    neg = GradedSeries(
        [algebra.neg_alphabet(g_component(d)) for d in range(N + 1)]
    )
    left = series_inverse(neg)
    for d in range(N + 1):
        right = NSymElement.one("S") if d == 0 else NSymElement.zero("S")
        for n in range(1, d + 1):
            right = right + _s_generator(n) * neg.power_component(n, d - n)
        if d == 0:
            right = NSymElement.one("S")
        if left.component(d) != right:
            return False
    return True


# ---------------------------------------------------------------------------
# S <-> G transitions


@lru_cache(maxsize=None)
def g_monomial_on_s(index) -> NSymElement:
    """Expansion of a G-basis monomial on the S basis."""
    index = tuple(index)
    out = NSymElement.one("S")
    for p in index:
        out = out * g_component(p)
    return out


@lru_cache(maxsize=None)
def s_generator_on_g(n) -> NSymElement:
    """Expansion of S_n on the G basis, by peeling the leading term of g_n."""
    _check_bound(n)
    if n == 0:
        return NSymElement.one("G")
    out = NSymElement.monomial("G", (n,))
    for j, c in g_component(n).terms.items():
        if j == (n,):
            continue
        prod = NSymElement.one("G")
        for p in j:
            prod = prod * s_generator_on_g(p)
        out = out - prod.scale(c)
    return out


@lru_cache(maxsize=None)
def s_monomial_on_g(index) -> NSymElement:
    index = tuple(index)
    out = NSymElement.one("G")
    for p in index:
        out = out * s_generator_on_g(p)
    return out


def g_to_s_matrix(n):
    """Matrix with entry [i][j] = coefficient of S^{comps[i]} in g^{comps[j]}
    (compositions in reverse lexicographic order)."""
    order = comps.all_compositions(n)
    return [
        [g_monomial_on_s(cj).coeff(ci) for cj in order] for ci in order
    ]


def s_to_g_matrix(n):
    """Inverse transition: entry [i][j] = coefficient of g^{comps[i]} in
    S^{comps[j]}."""
    _check_bound(n)
    order = comps.all_compositions(n)
    return [
        [s_monomial_on_g(cj).coeff(ci) for cj in order] for ci in order
    ]


def s_to_g_via_recipe(n) -> NSymElement:
    """S_n on the G basis by substitution into the elementary expansion of
    the previous component: each L-monomial with first part a becomes the
    difference of the monomials (a+1, rest) and (1, a, rest), with an
    overall sign fixing the parity (the substitution alone flips odd
    degrees)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return NSymElement.monomial("G", (1,))
    gl = algebra.convert(g_component(n - 1), "L")
    out = NSymElement.zero("G")
    for i, c in gl.terms.items():
        raised = NSymElement.monomial("G", (i[0] + 1,) + i[1:])
        lowered = NSymElement.monomial("G", (1,) + i)
        out = out + (raised - lowered).scale(c)
    return out.scale((-1) ** n)


# ---------------------------------------------------------------------------
# M <-> C transitions (duality with the G basis)


@lru_cache(maxsize=None)
def m_monomial_on_c(index):
    """M_I on the dual-of-G basis: coefficients read off the g-on-S table."""
    from .algebra import QSymElement

    index = tuple(index)
    _check_bound(sum(index))
    n = sum(index)
    terms = {}
    for j in comps.all_compositions(n):
        c = g_monomial_on_s(j).coeff(index)
        if c:
            terms[j] = c
    return QSymElement("C", terms)


@lru_cache(maxsize=None)
def c_monomial_on_m(index):
    """A dual-of-G monomial on the M basis, via the S-on-G table."""
    from .algebra import QSymElement

    index = tuple(index)
    _check_bound(sum(index))
    n = sum(index)
    terms = {}
    for i in comps.all_compositions(n):
        c = s_monomial_on_g(i).coeff(index)
        if c:
            terms[i] = c
    return QSymElement("M", terms)


# ---------------------------------------------------------------------------
# The negated alphabet on the G basis (four routes)


def g_neg(n) -> NSymElement:
    """g_n at the negated alphabet, expanded on the G basis."""
    _check_bound(n)
    return algebra.convert(algebra.neg_alphabet(g_component(n)), "G")


def g_neg_via_pairing(n) -> NSymElement:
    """Coefficient route: up to sign, the coefficient of a G-monomial is the
    doubled-index essential pairing with the degree-2n component of g."""
    terms = {}
    for i in comps.all_compositions(n):
        a = sum(
            parking.ndpf_count_of_type(j)
            for j in comps.coarsenings(comps.double(i))
        )
        terms[i] = (-1) ** len(i) * a
    return NSymElement("G", terms)


def g_neg_via_counting(n) -> NSymElement:
    """Counting route: the unsigned coefficient counts nondecreasing parking
    functions whose type doubles each part and adds one."""
    terms = {}
    for i in comps.all_compositions(n):
        a = parking.ndpf_count_of_type(tuple(2 * p + 1 for p in i))
        terms[i] = (-1) ** len(i) * a
    return NSymElement("G", terms)


def g_neg_via_doubling(n) -> NSymElement:
    """Involution route: (-1)^n times the tilde image of the k=2 component."""
    return algebra.tilde(gk_component(2, n)).scale((-1) ** n)


def doubled_pairing_identity_check(i_comp) -> bool:
    """Mechanical check that the two unsigned coefficient formulas agree."""
    lhs = sum(
        parking.ndpf_count_of_type(j)
        for j in comps.coarsenings(comps.double(i_comp))
    )
    rhs = parking.ndpf_count_of_type(tuple(2 * p + 1 for p in i_comp))
    return lhs == rhs


def g_neg_s_coefficient_check(n) -> bool:
    """On the S basis, the negated coefficients come from shifting every part
    up by one: lambda_I = (-1)^{l(I)} delta_{I + 1^r}."""
    neg = algebra.neg_alphabet(g_component(n))
    for i in comps.all_compositions(n):
        expected = (-1) ** len(i) * parking.ndpf_count_of_type(comps.plus_ones(i))
        if neg.coeff(i) != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# The antipode of g on the G basis (three routes)


def antipode_g(n) -> NSymElement:
    """Antipode of g_n expanded on the G basis (generic Hopf route)."""
    _check_bound(n)
    return algebra.convert(algebra.antipode(g_component(n)), "G")


def antipode_g_four_step(n) -> NSymElement:
    """Four-step route: k=2 component on G, reverse the indices and attach
    the sign, expand on L, retag through the tilde involution."""
    x = algebra.convert(gk_component(2, n), "G")
    x = algebra.chi(x).scale((-1) ** n)
    return algebra.tilde(x)


def v_pairing(i_comp, j_comp) -> int:
    """Pairing of the signed essential V_I with a G-basis monomial g^J.

    Nonzero only when I splits at part boundaries into consecutive blocks
    of weights j_1, ..., j_r; the value then factors over the blocks.
    """
    if sum(i_comp) != sum(j_comp):
        return 0
    blocks = []
    it = iter(i_comp)
    for target in j_comp:
        block, acc = [], 0
        while acc < target:
            try:
                p = next(it)
            except StopIteration:
                return 0
            block.append(p)
            acc += p
        if acc != target:
            return 0
        blocks.append(tuple(block))
    value = 1
    for block, m in zip(blocks, j_comp):
        e = sum(
            parking.ndpf_count_of_type(j) for j in comps.coarsenings(block)
        )
        value *= (-1) ** (m - len(block)) * e
    return value


def antipode_g_formula(n) -> NSymElement:
    """Cancellation-free route: tally v_pairing against mirrored word counts."""
    terms = {}
    for i in comps.all_compositions(n):
        total = 0
        for j in comps.all_compositions(n):
            vp = v_pairing(i, j)
            if vp:
                total += vp * parking.ndpf_count_of_type(comps.mirror(j))
        terms[i] = (-1) ** n * total
    return NSymElement("G", terms)


# ---------------------------------------------------------------------------
# The inclusion-exclusion companion basis


def f_basis_table(n):
    """Transition matrix of the F basis onto S: entry [i][j] is the
    coefficient of S^{comps[i]} in f^{comps[j]} (reverse lexicographic
    order); entries are nonnegative NDPF counts."""
    _check_bound(n)
    order = comps.all_compositions(n)
    columns = []
    for i in order:
        f = NSymElement.zero("S")
        for j in comps.refinements(i):
            f = f + g_monomial_on_s(j).scale((-1) ** (len(i) - len(j)))
        columns.append(f)
    return [[columns[j].coeff(order[i]) for j in range(len(order))] for i in range(len(order))]


def f_basis_table_via_breakpoints(n):
    """Same matrix tallied combinatorially: each nondecreasing parking
    function adds one unit at (its type, its breakpoint set)."""
    order = comps.all_compositions(n)
    pos = {tuple(sorted(comps.descent_set(c))): k for k, c in enumerate(order)}
    typerow = {c: k for k, c in enumerate(order)}
    mat = [[0] * len(order) for _ in order]
    for w in parking.enumerate_ndpf(n):
        r = typerow[parking.type_of(w)]
        c = pos[tuple(parking.breakpoints(w))]
        mat[r][c] += 1
    return mat
