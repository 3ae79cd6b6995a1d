"""Buchberger Groebner bases, elimination, and Hilbert-series dimension/degree.

The engine works on an internal term representation (monic, terms sorted
by a negated order key so :mod:`heapq` pops the leading term first) and
converts back to :class:`~artifact.poly.Polynomial` at the boundary.

Pair handling follows the Gebauer-Moeller installation of Buchberger's
two criteria; pairs are selected by the normal strategy (smallest lcm
first, degree before order).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from operator import add, sub
from typing import Callable, Sequence

from .poly import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    elim,
    mono_divides,
    mono_lcm,
)

# ----------------------------------------------------------------------------
# internal representation
# ----------------------------------------------------------------------------


def _neg_key_function(order: MonomialOrder) -> Callable[[Monomial], tuple]:
    """Key whose ascending order is the descending monomial order."""
    if order.kind == "grevlex":
        return lambda m: (-sum(m),) + m[::-1]
    if order.kind == "lex":
        return lambda m: tuple(-e for e in m)
    k = order.k

    def key(m):
        a, b = m[:k], m[k:]
        return (-sum(a),) + a[::-1] + (-sum(b),) + b[::-1]

    return key


def _mask(m: Monomial) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


class _Elt:
    """Monic basis element: leading monomial plus tail terms (descending)."""

    __slots__ = ("lm", "tail", "mask", "deg")

    def __init__(self, terms: list):
        self.lm = terms[0][0]
        self.tail = terms[1:]
        self.mask = _mask(self.lm)
        self.deg = sum(self.lm)

    def terms(self, one) -> list:
        return [(self.lm, one)] + self.tail


class _Engine:
    def __init__(self, order: MonomialOrder, field):
        self.order = order
        self.field = field
        self.p = field.characteristic
        self.nkey = _neg_key_function(order)

    # -- helpers --------------------------------------------------------
    def norm(self, c):
        return c % self.p if self.p else c

    def inv(self, c):
        return self.field.inv(c)

    def sort_terms(self, d: dict) -> list:
        nkey = self.nkey
        return sorted(d.items(), key=lambda t: nkey(t[0]))

    def make_monic(self, terms: list) -> list:
        c0 = terms[0][1]
        if c0 == 1:
            return terms
        ic = self.inv(c0)
        p = self.p
        if p:
            return [(m, c * ic % p) for m, c in terms]
        return [(m, c * ic) for m, c in terms]

    @staticmethod
    def find_divisor(m: Monomial, basis: Sequence[_Elt]):
        mm = _mask(m)
        for g in basis:
            if g.mask & ~mm == 0 and all(x <= y for x, y in zip(g.lm, m)):
                return g
        return None

    def reduce(self, f: dict, basis: Sequence[_Elt], full: bool = True) -> list:
        """Normal form of the term dict ``f`` (consumed) modulo ``basis``.

        Returns the sorted remainder term list.  With ``full=False`` only the
        leading term is reduced until irreducible.
        """
        p = self.p
        nkey = self.nkey
        heap = [(nkey(m), m) for m in f]
        heapq.heapify(heap)
        push, pop = heapq.heappush, heapq.heappop
        rem = []
        while heap:
            _, m = pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            g = self.find_divisor(m, basis)
            if g is None:
                rem.append((m, c))
                if not full:
                    rem.extend(self.sort_terms(f))
                    return rem
                continue
            q = tuple(map(sub, m, g.lm))
            for e, b in g.tail:
                mm = tuple(map(add, e, q))
                v = f.get(mm)
                if v is None:
                    f[mm] = (-c * b) % p if p else -c * b
                    push(heap, (nkey(mm), mm))
                else:
                    v = (v - c * b) % p if p else v - c * b
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
        return rem

    def spoly(self, a: _Elt, b: _Elt) -> dict:
        lcm = mono_lcm(a.lm, b.lm)
        qa = tuple(map(sub, lcm, a.lm))
        qb = tuple(map(sub, lcm, b.lm))
        p = self.p
        f = {tuple(map(add, e, qa)): c for e, c in a.tail}
        for e, c in b.tail:
            mm = tuple(map(add, e, qb))
            v = f.get(mm)
            if v is None:
                f[mm] = (-c) % p if p else -c
            else:
                v = (v - c) % p if p else v - c
                if v:
                    f[mm] = v
                else:
                    del f[mm]
        return f

    # -- Buchberger -------------------------------------------------------
    def groebner(self, polys: list[dict]) -> list[list]:
        one = self.field.one
        everything: list[_Elt] = []
        active: list[int] = []
        pairs: list[tuple] = []
        key = self.order.key_function()

        def pair_entry(i: int, j: int) -> tuple:
            lcm = mono_lcm(everything[i].lm, everything[j].lm)
            return (sum(lcm), key(lcm), i, j)

        def update(h_idx: int) -> None:
            nonlocal active, pairs
            h = everything[h_idx]
            hlm = h.lm
            cands = [(g, mono_lcm(hlm, everything[g].lm)) for g in active]
            kept = []
            for pos, (g1, l1) in enumerate(cands):
                coprime = all(not (x and y) for x, y in zip(hlm, everything[g1].lm))
                if coprime:
                    kept.append((g1, l1, True))
                    continue
                dominated = any(mono_divides(l2, l1) for _, l2 in cands[pos + 1:]) or any(
                    mono_divides(l2, l1) for _, l2, _ in kept
                )
                if not dominated:
                    kept.append((g1, l1, False))
            new_pairs = [(g1, h_idx) for g1, _, coprime in kept if not coprime]
            filtered = []
            for entry in pairs:
                _, _, i, j = entry
                lij = mono_lcm(everything[i].lm, everything[j].lm)
                if (
                    not mono_divides(hlm, lij)
                    or mono_lcm(everything[i].lm, hlm) == lij
                    or mono_lcm(hlm, everything[j].lm) == lij
                ):
                    filtered.append(entry)
            filtered.extend(pair_entry(i, j) for i, j in new_pairs)
            heapq.heapify(filtered)
            pairs = filtered
            active = [g for g in active if not mono_divides(hlm, everything[g].lm)]
            active.append(h_idx)

        def basis() -> list[_Elt]:
            return [everything[i] for i in active]

        inputs = [self.sort_terms(f) for f in polys if f]
        inputs.sort(key=lambda t: self.nkey(t[0][0]), reverse=True)
        for terms in inputs:
            rem = self.reduce(dict(terms), basis())
            if not rem:
                continue
            everything.append(_Elt(self.make_monic(rem)))
            update(len(everything) - 1)
            if not any(everything[-1].lm):
                return [[((0,) * len(everything[-1].lm), one)]]

        while pairs:
            _, _, i, j = heapq.heappop(pairs)
            s = self.spoly(everything[i], everything[j])
            if not s:
                continue
            rem = self.reduce(s, basis())
            if not rem:
                continue
            everything.append(_Elt(self.make_monic(rem)))
            if not any(everything[-1].lm):
                return [[((0,) * len(everything[-1].lm), one)]]
            update(len(everything) - 1)

        return self.interreduce(basis())

    def interreduce(self, elts: list[_Elt]) -> list[list]:
        one = self.field.one
        elts = sorted(elts, key=lambda g: self.nkey(g.lm))
        # drop elements whose leading monomial is divisible by another's
        minimal = []
        for g in elts:
            if not any(mono_divides(h.lm, g.lm) for h in elts if h is not g and h.lm != g.lm):
                if not any(h.lm == g.lm for h in minimal):
                    minimal.append(g)
        out = []
        for g in minimal:
            others = [h for h in minimal if h is not g]
            tail = self.reduce(dict(g.tail), others) if g.tail else []
            out.append([(g.lm, one)] + tail)
        out.sort(key=lambda t: self.nkey(t[0][0]))
        return out


# ----------------------------------------------------------------------------
# public API
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by decreasing leading monomial."""

    ring: PolynomialRing
    elements: tuple[Polynomial, ...]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring.compatible(other.ring)
            and self.ring.order == other.ring.order
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash(self.elements)


def _resolve_ring(gens: Sequence[Polynomial], ring: PolynomialRing | None) -> PolynomialRing:
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if not ring.compatible(g.ring):
            raise ValueError(f"ring mismatch: {g.ring} vs {ring}")
    return ring


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    ring: PolynomialRing | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``order`` defaults to the ring's active order.  The unit ideal gives
    ``{1}``; the zero ideal gives an empty basis.
    """
    ring = _resolve_ring(gens, ring)
    if order is not None:
        ring = ring.with_order(order)
    engine = _Engine(ring.order, ring.field)
    raw = engine.groebner([g.as_dict() for g in gens])
    elements = tuple(Polynomial._from_sorted(ring, tuple(t)) for t in raw)
    return GroebnerBasis(ring, elements)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if not f.ring.compatible(G.ring):
        raise ValueError(f"ring mismatch: {f.ring} vs {G.ring}")
    engine = _Engine(G.ring.order, G.ring.field)
    basis = [_Elt(list(g.terms)) for g in G.elements]
    rem = engine.reduce(f.as_dict(), basis)
    return Polynomial._from_sorted(G.ring, tuple(rem))


def eliminate(
    gens: Sequence[Polynomial], k: int, ring: PolynomialRing | None = None
) -> list[Polynomial]:
    """Generators of the ideal intersected with the subring of the last ``n - k`` variables.

    The result is the reduced grevlex Groebner basis of the elimination
    ideal, expressed in a ring over the remaining variable names.
    """
    ring = _resolve_ring(gens, ring)
    n = ring.nvars
    if not 0 <= k < n:
        raise ValueError(f"cannot eliminate {k} of {n} variables")
    sub_ring = PolynomialRing(ring.names[k:], ring.field, GREVLEX)
    if k == 0:
        return list(buchberger(gens, GREVLEX, ring=ring).elements)
    G = buchberger(gens, elim(k), ring=ring)
    out = []
    for g in G.elements:
        if any(any(m[:k]) for m, _ in g.terms):
            continue
        out.append(Polynomial._from_sorted(sub_ring, tuple((m[k:], c) for m, c in g.terms)))
    return out


def ideal_equal(
    I: Sequence[Polynomial],
    J: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    ring: PolynomialRing | None = None,
) -> bool:
    ring = _resolve_ring(list(I) + list(J), ring)
    return buchberger(I, order, ring=ring).elements == buchberger(J, order, ring=ring).elements


# ----------------------------------------------------------------------------
# Hilbert series
# ----------------------------------------------------------------------------

IntPoly = list  # coefficient list, index = power of t


def _padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a: IntPoly, d: int) -> IntPoly:
    return [0] * d + a if any(a) else []


def _trim(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _hn(gens: list[Monomial]) -> IntPoly:
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return []
    if len(gens) == 1:
        return _padd([1], _shift([-1], sum(gens[0])))
    # pairwise coprime generators: product of (1 - t^deg)
    support_union = 0
    coprime = True
    for g in gens:
        m = _mask(g)
        if m & support_union:
            coprime = False
            break
        support_union |= m
    if coprime:
        out = [1]
        for g in gens:
            out = _pmul(out, _padd([1], _shift([-1], sum(g))))
        return out
    nv = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(nv)]
    i = max(range(nv), key=lambda v: counts[v])
    e = min(g[i] for g in gens if g[i])
    pivot = tuple(e if v == i else 0 for v in range(nv))
    plus = _minimalize(gens + [pivot])
    colon = _minimalize([tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens])
    return _padd(_hn(plus), _shift(_hn(colon), e))


def hilbert_numerator(monomial_gens: Sequence[Monomial], nvars: int | None = None) -> IntPoly:
    """Numerator ``N(t)`` of the Hilbert series ``N(t)/(1-t)^n`` of ``k[x]/I``.

    ``I`` is generated by the given exponent tuples.  Computed by pivot
    recursion ``N(I) = N(I + <p>) + t^deg(p) N(I : p)``.  The unit ideal has
    numerator ``[]`` (the zero polynomial).
    """
    gens = [tuple(g) for g in monomial_gens]
    if nvars is not None and any(len(g) != nvars for g in gens):
        raise ValueError("monomial length does not match nvars")
    return _hn(_minimalize(gens))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple[int, ...]
    dimension: int
    degree: int


def _dim_degree(numerator: IntPoly, nvars: int) -> tuple[int, int]:
    """Krull dimension and multiplicity from ``N(t)/(1-t)^nvars``."""
    q = list(numerator)
    if not any(q):
        return -1, 0
    k = 0
    while sum(q) == 0:
        # synthetic division by (1 - t): q = (1 - t) * r  =>  r_i = sum_{j<=i} q_j
        r, acc = [], 0
        for c in q[:-1]:
            acc += c
            r.append(acc)
        q = _trim(r)
        k += 1
    return nvars - k, sum(q)


def hilbert_data(
    gens: Sequence[Polynomial], projective: bool = False, ring: PolynomialRing | None = None
) -> HilbertData:
    """Dimension and degree of the variety cut out by ``gens``.

    Affine: Krull dimension and the degree of the projective closure, both
    read off the grevlex leading-term ideal.  Projective: the generators
    must be homogeneous; dimension is cone dimension minus one and a cone
    of dimension <= 0 is reported empty (dimension -1, degree 0).
    """
    ring = _resolve_ring(gens, ring)
    if projective and not all(g.is_homogeneous() for g in gens):
        raise ValueError("projective dimension/degree needs homogeneous generators")
    G = buchberger(gens, GREVLEX, ring=ring)
    num = hilbert_numerator([g.lm for g in G.elements], ring.nvars)
    d, deg = _dim_degree(num, ring.nvars)
    if projective:
        if d <= 0:
            return HilbertData(tuple(num), -1, 0)
        return HilbertData(tuple(num), d - 1, deg)
    return HilbertData(tuple(num), d, deg)


def dimension(gens: Sequence[Polynomial], projective: bool = False, ring=None) -> int:
    return hilbert_data(gens, projective, ring=ring).dimension


def degree(gens: Sequence[Polynomial], projective: bool = False, ring=None) -> int:
    return hilbert_data(gens, projective, ring=ring).degree
