"""Exact-coefficient linear combinations over composition-indexed bases.

NSym side: S (complete), L (elementary), R (ribbon), G (Lagrange), F
(the inclusion-exclusion companion of G).  QSym side: M (monomial), E
(essential), V (signed essential, dual to L), C (dual to G).  All
coefficients are Python ints, so arbitrary precision comes for free.

Conversions route through S (NSym) and M (QSym); the S<->G and M<->C
transitions are backed by the cached tables of the `lagrange` module.
"""

from __future__ import annotations

import json

from . import compositions as comps

NSYM_BASES = ("S", "L", "R", "G", "F")
QSYM_BASES = ("M", "E", "V", "C")

# Bases whose product is plain concatenation of indices.
_MULTIPLICATIVE = {"S", "L", "G"}


class BasisMismatch(ValueError):
    pass


def _clean(terms):
    return {i: c for i, c in terms.items() if c != 0}


class _Element:
    """Shared machinery of NSym and QSym elements (immutable by convention)."""

    __slots__ = ("basis", "terms")
    _bases: tuple = ()

    def __init__(self, basis, terms=None):
        if basis not in self._bases:
            raise BasisMismatch(f"unknown basis {basis!r} for {type(self).__name__}")
        self.basis = basis
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def monomial(cls, basis, index, coeff=1):
        return cls(basis, {tuple(index): coeff})

    @classmethod
    def zero(cls, basis):
        return cls(basis, {})

    @classmethod
    def one(cls, basis):
        return cls(basis, {(): 1})

    def _check(self, other):
        if type(other) is not type(self) or other.basis != self.basis:
            raise BasisMismatch(
                f"operands must share a basis ({self.basis!r} vs "
                f"{getattr(other, 'basis', type(other).__name__)!r})"
            )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = terms.get(i, 0) + c
        return type(self)(self.basis, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return type(self)(self.basis, {i: c * v for i, v in self.terms.items()})

    def coeff(self, index) -> int:
        return self.terms.get(tuple(index), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return sorted({sum(i) for i in self.terms})

    def homogeneous_component(self, d):
        return type(self)(self.basis, {i: c for i, c in self.terms.items() if sum(i) == d})

    def is_homogeneous(self, d=None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return degs == [d] if d is not None else len(degs) == 1

    def map_indices(self, fn):
        """Linear extension of an index map (must stay within the basis)."""
        terms = {}
        for i, c in self.terms.items():
            j = tuple(fn(i))
            terms[j] = terms.get(j, 0) + c
        return type(self)(self.basis, terms)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.basis == self.basis
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), _revlex_key(t[0])))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for i, c in self._sorted_terms():
            mono = "1" if not i else f"{self.basis}[{','.join(map(str, i))}]"
            if c == 1 and i:
                bits.append(mono)
            elif c == -1 and i:
                bits.append(f"-{mono}")
            elif not i:
                bits.append(str(c))
            else:
                bits.append(f"{c}*{mono}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    def to_json_dict(self):
        side = "nsym" if isinstance(self, NSymElement) else "qsym"
        return {
            "side": side,
            "basis": self.basis,
            "terms": [
                {"index": list(i), "coeff": str(c)} for i, c in self._sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _revlex_key(comp):
    # reverse-lex position among compositions of the same weight
    n = sum(comp)
    ds = set(comps.descent_set(comp))
    return tuple(1 if d in ds else 0 for d in range(1, n))


class NSymElement(_Element):
    _bases = NSYM_BASES

    def __mul__(self, other):
        self._check(other)
        if self.basis in _MULTIPLICATIVE:
            terms = {}
            for i, a in self.terms.items():
                for j, b in other.terms.items():
                    k = i + j
                    terms[k] = terms.get(k, 0) + a * b
            return NSymElement(self.basis, terms)
        if self.basis == "R":
            return _ribbon_product(self, other)
        raise BasisMismatch(f"product not defined on the {self.basis} basis")


class QSymElement(_Element):
    _bases = QSYM_BASES


def _ribbon_product(x, y):
    # R_I R_J = R_{I.J} + R_{I|>J}  (last part of I fused with first of J)
    terms = {}
    for i, a in x.terms.items():
        for j, b in y.terms.items():
            c = a * b
            if not i or not j:
                k = i + j
                terms[k] = terms.get(k, 0) + c
                continue
            cat = i + j
            fused = i[:-1] + (i[-1] + j[0],) + j[1:]
            terms[cat] = terms.get(cat, 0) + c
            terms[fused] = terms.get(fused, 0) + c
    return NSymElement("R", terms)


class TensorElement:
    """A finite combination of basis-pair tensors with integer coefficients.

    Both legs are kept in a single declared basis pair; mixing bases inside
    one tensor is rejected so pairings cannot silently go wrong.
    """

    __slots__ = ("bases", "terms")

    def __init__(self, bases, terms=None):
        self.bases = tuple(bases)
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def monomial(cls, bases, left, right, coeff=1):
        return cls(bases, {(tuple(left), tuple(right)): coeff})

    @classmethod
    def zero(cls, bases):
        return cls(bases, {})

    @classmethod
    def one(cls, bases):
        return cls(bases, {((), ()): 1})

    def _check(self, other):
        if not isinstance(other, TensorElement) or other.bases != self.bases:
            raise BasisMismatch("tensor operands must share the basis pair")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TensorElement(self.bases, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorElement(self.bases, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        if not all(b in _MULTIPLICATIVE for b in self.bases):
            raise BasisMismatch("tensor product needs multiplicative bases on both legs")
        terms = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                terms[k] = terms.get(k, 0) + a * b
        return TensorElement(self.bases, terms)

    def coeff(self, left, right) -> int:
        return self.terms.get((tuple(left), tuple(right)), 0)

    def swap(self):
        return TensorElement(
            (self.bases[1], self.bases[0]),
            {(j, i): c for (i, j), c in self.terms.items()},
        )

    def map_legs(self, fn_left, fn_right):
        """Bilinear extension of per-leg maps returning NSymElements."""
        out_terms = {}
        bases = None
        for (i, j), c in self.terms.items():
            xl = fn_left(i)
            xr = fn_right(j)
            if bases is None:
                bases = (xl.basis, xr.basis)
            for il, cl in xl.terms.items():
                for ir, cr in xr.terms.items():
                    k = (il, ir)
                    out_terms[k] = out_terms.get(k, 0) + c * cl * cr
        return TensorElement(bases or self.bases, out_terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and other.bases == self.bases
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.bases, frozenset(self.terms.items())))

    def _sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0][0]) + sum(t[0][1]), _revlex_key(t[0][0]), _revlex_key(t[0][1])),
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bl, br = self.bases
        bits = []
        for (i, j), c in self._sorted_terms():
            li = "1" if not i else f"{bl}[{','.join(map(str, i))}]"
            rj = "1" if not j else f"{br}[{','.join(map(str, j))}]"
            mono = f"{li}(x){rj}"
            bits.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json_dict(self):
        return {
            "side": "tensor",
            "basis": list(self.bases),
            "terms": [
                {"index": [list(i), list(j)], "coeff": str(c)}
                for (i, j), c in self._sorted_terms()
            ],
        }


# ---------------------------------------------------------------------------
# NSym basis conversions


def _generator_sign_expansion(n, basis):
    """S_n on L (or L_n on S): sum over compositions with sign (-1)^(n-l)."""
    return NSymElement(
        basis, {i: (-1) ** (n - len(i)) for i in comps.all_compositions(n)}
    )


def _nsym_to_s(x):
    if x.basis == "S":
        return x
    out = NSymElement.zero("S")
    if x.basis == "L":
        for i, c in x.terms.items():
            prod = NSymElement.one("S")
            for p in i:
                prod = prod * _generator_sign_expansion(p, "S")
            out = out + prod.scale(c)
        return out
    if x.basis == "R":
        terms = {}
        for i, c in x.terms.items():
            for j in comps.coarsenings(i):
                terms[j] = terms.get(j, 0) + c * (-1) ** (len(i) - len(j))
        return NSymElement("S", terms)
    if x.basis == "G":
        from . import lagrange

        out = NSymElement.zero("S")
        for i, c in x.terms.items():
            out = out + lagrange.g_monomial_on_s(i).scale(c)
        return out
    if x.basis == "F":
        return _nsym_to_s(_f_to_g(x))
    raise BasisMismatch(x.basis)


def _f_to_g(x):
    terms = {}
    for i, c in x.terms.items():
        for j in comps.refinements(i):
            terms[j] = terms.get(j, 0) + c * (-1) ** (len(i) - len(j))
    return NSymElement("G", terms)


def _g_to_f(x):
    terms = {}
    for i, c in x.terms.items():
        for j in comps.refinements(i):
            terms[j] = terms.get(j, 0) + c
    return NSymElement("F", terms)


def _s_to_target(x, target):
    if target == "S":
        return x
    if target == "L":
        out = NSymElement.zero("L")
        for i, c in x.terms.items():
            prod = NSymElement.one("L")
            for p in i:
                prod = prod * _generator_sign_expansion(p, "L")
            out = out + prod.scale(c)
        return out
    if target == "R":
        # S^I = sum of R_J over J coarser than I
        terms = {}
        for i, c in x.terms.items():
            for j in comps.coarsenings(i):
                terms[j] = terms.get(j, 0) + c
        return NSymElement("R", terms)
    if target == "G":
        from . import lagrange

        out = NSymElement.zero("G")
        for i, c in x.terms.items():
            prod = NSymElement.one("G")
            for p in i:
                prod = prod * lagrange.s_generator_on_g(p)
            out = out + prod.scale(c)
        return out
    if target == "F":
        return _g_to_f(_s_to_target(x, "G"))
    raise BasisMismatch(target)


def convert(x: NSymElement, target: str) -> NSymElement:
    """Re-express an NSym element in another basis (exact, round-trippable)."""
    if x.basis == target:
        return x
    if x.basis == "G" and target == "F":
        return _g_to_f(x)
    if x.basis == "F" and target == "G":
        return _f_to_g(x)
    return _s_to_target(_nsym_to_s(x), target)


# ---------------------------------------------------------------------------
# QSym basis conversions


def _qsym_to_m(x):
    if x.basis == "M":
        return x
    terms = {}
    if x.basis in ("E", "V"):
        for i, c in x.terms.items():
            if x.basis == "V":
                c = c * (-1) ** (sum(i) - len(i))
            for j in comps.coarsenings(i):
                terms[j] = terms.get(j, 0) + c
        return QSymElement("M", terms)
    if x.basis == "C":
        from . import lagrange

        out = QSymElement.zero("M")
        for i, c in x.terms.items():
            out = out + lagrange.c_monomial_on_m(i).scale(c)
        return out
    raise BasisMismatch(x.basis)


def _m_to_target(x, target):
    if target == "M":
        return x
    if target in ("E", "V"):
        # M_I = sum over J coarser than I of (-1)^(l(I)-l(J)) E_J
        terms = {}
        for i, c in x.terms.items():
            for j in comps.coarsenings(i):
                v = c * (-1) ** (len(i) - len(j))
                if target == "V":
                    v = v * (-1) ** (sum(j) - len(j))
                terms[j] = terms.get(j, 0) + v
        return QSymElement(target, terms)
    if target == "C":
        from . import lagrange

        out = QSymElement.zero("C")
        for i, c in x.terms.items():
            out = out + lagrange.m_monomial_on_c(i).scale(c)
        return out
    raise BasisMismatch(target)


def qsym_convert(x: QSymElement, target: str) -> QSymElement:
    if x.basis == target:
        return x
    return _m_to_target(_qsym_to_m(x), target)


# ---------------------------------------------------------------------------
# Pairing, coproduct, antipode, involutions


def pair(q: QSymElement, f: NSymElement) -> int:
    """The duality pairing, normalized by <M_I, S^J> = delta_IJ."""
    qm = _qsym_to_m(q)
    fs = _nsym_to_s(f)
    return sum(c * fs.terms.get(i, 0) for i, c in qm.terms.items())


def coproduct(x: NSymElement) -> TensorElement:
    """Coproduct into S(x)S, from Delta S_n = sum_{i+j=n} S_i (x) S_j."""
    xs = _nsym_to_s(x)
    out = TensorElement.zero(("S", "S"))
    for i, c in xs.terms.items():
        t = TensorElement.one(("S", "S"))
        for p in i:
            gen = TensorElement(
                ("S", "S"),
                {(((a,) if a else ()), ((p - a,) if p - a else ())): 1 for a in range(p + 1)},
            )
            t = t * gen
        out = out + t.scale(c)
    return out


def antipode(x: NSymElement) -> NSymElement:
    """The NSym antipode (anti-automorphism with S_n -> (-1)^n L_n)."""
    xs = _nsym_to_s(x)
    terms = {}
    for i, c in xs.terms.items():
        terms[comps.mirror(i)] = terms.get(comps.mirror(i), 0) + c * (-1) ** sum(i)
    return _nsym_to_s(NSymElement("L", terms))


def counit(x: NSymElement) -> int:
    return _nsym_to_s(x).terms.get((), 0)


def neg_alphabet(x: NSymElement) -> NSymElement:
    """The algebra automorphism A -> -A, i.e. S_n -> (-1)^n L_n."""
    xs = _nsym_to_s(x)
    terms = {i: c * (-1) ** sum(i) for i, c in xs.terms.items()}
    return _nsym_to_s(NSymElement("L", terms))


def tilde(x: NSymElement) -> NSymElement:
    """The involutive automorphism L_n -> g_n; result in the G basis."""
    xl = convert(x, "L")
    return NSymElement("G", xl.terms)


def chi(x: NSymElement) -> NSymElement:
    """The involution g^I -> g^(reversed I) on the G basis."""
    if x.basis != "G":
        raise BasisMismatch("chi acts on the G basis")
    return x.map_indices(comps.mirror)


def psi_k(x: QSymElement, k: int) -> QSymElement:
    """The power-sum plethysm M_I -> M_{kI} on the monomial basis."""
    if x.basis != "M":
        raise BasisMismatch("psi_k acts on the M basis")
    if k < 1:
        raise ValueError("k must be >= 1")
    return x.map_indices(lambda i: tuple(k * p for p in i))


def phi_k(x: NSymElement, k: int) -> NSymElement:
    """Adjoint of psi_k: keep S^J with all parts divisible by k, divide by k."""
    if x.basis != "S":
        raise BasisMismatch("phi_k acts on the S basis")
    if k < 1:
        raise ValueError("k must be >= 1")
    terms = {}
    for i, c in x.terms.items():
        if all(p % k == 0 for p in i):
            j = tuple(p // k for p in i)
            terms[j] = terms.get(j, 0) + c
    return NSymElement("S", terms)


def mirror_invariance_check(n: int, reading: str = "conjugate") -> bool:
    """Whether the S-expansion of g_n is invariant under an index involution.

    The invariance claimed for g holds for the conjugate reading (checked
    mechanically here); `reading` also accepts "mirror" and
    "mirror_conjugate" so the other candidate interpretations can be probed.
    """
    from . import lagrange

    fn = {
        "mirror": comps.mirror,
        "conjugate": comps.conjugate,
        "mirror_conjugate": comps.mirror_conjugate,
    }[reading]
    gn = lagrange.g_component(n)
    return gn == gn.map_indices(fn)


def element_from_json_dict(data):
    if data["side"] == "tensor":
        tt = {
            (tuple(t["index"][0]), tuple(t["index"][1])): int(t["coeff"])
            for t in data["terms"]
        }
        return TensorElement(tuple(data["basis"]), tt)
    terms = {tuple(t["index"]): int(t["coeff"]) for t in data["terms"]}
    if data["side"] == "nsym":
        return NSymElement(data["basis"], terms)
    if data["side"] == "qsym":
        return QSymElement(data["basis"], terms)
    raise ValueError(f"unknown side {data['side']!r}")
