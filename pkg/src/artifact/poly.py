"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples.  A :class:`PolynomialRing` fixes the
variable names, coefficient field and active :class:`MonomialOrder`;
:class:`Polynomial` values are immutable and keep their terms strictly
decreasing in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add
from typing import Callable, Iterable, Mapping, Sequence

from .arith import QQ, Field, Raw, Scalar

Monomial = tuple  # tuple[int, ...]


def total_degree(m: Monomial) -> int:
    return sum(m)


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """Term order.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"elim"``.  ``elim`` with block
    size ``k`` compares the first ``k`` exponents by grevlex and breaks ties
    by grevlex on the remaining ones.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 1:
            raise ValueError("elimination order needs a block size k >= 1")

    def key(self, m: Monomial) -> tuple:
        """Sort key; larger key means larger monomial."""
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return tuple(m)
        k = self.k
        return _grevlex_key(m[:k]) + _grevlex_key(m[k:])

    def key_function(self) -> Callable[[Monomial], tuple]:
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "lex":
            return tuple
        return self.key

    def compare(self, a: Monomial, b: Monomial) -> int:
        return compare(self, a, b)

    def __str__(self) -> str:
        return f"elim({self.k})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elim(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def var_names(prefix: str, start: int, stop: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(start, stop + 1))


@dataclass(frozen=True)
class PolynomialRing:
    names: tuple[str, ...]
    field: Field = QQ
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order: MonomialOrder) -> PolynomialRing:
        return PolynomialRing(self.names, self.field, order)

    def with_field(self, field: Field) -> PolynomialRing:
        return PolynomialRing(self.names, field, self.order)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field.normalize(c.value if isinstance(c, Scalar) else c)
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i: int | str) -> Polynomial:
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): self.field.normalize(coeff)})

    def compatible(self, other: PolynomialRing) -> bool:
        return self.names == other.names and self.field == other.field

    def __str__(self) -> str:
        return f"{self.field!r}[{', '.join(self.names)}] ({self.order})"


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` is a tuple of ``(monomial, coefficient)`` pairs, strictly
    decreasing in the ring's order, with no zero coefficients.
    """

    __slots__ = ("ring", "terms", "_dict", "_hash")

    def __init__(self, ring: PolynomialRing, data: Mapping[Monomial, Raw] | Iterable = ()):
        self.ring = ring
        norm = ring.field.normalize
        d: dict[Monomial, Raw] = {}
        items = data.items() if isinstance(data, Mapping) else data
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} has wrong length for {ring.nvars} variables")
            if m in d:
                c = d[m] + c
            c = norm(c)
            if c:
                d[m] = c
            else:
                d.pop(m, None)
        key = ring.order.key_function()
        self.terms = tuple(sorted(d.items(), key=lambda t: key(t[0]), reverse=True))
        self._dict = d
        self._hash = None

    @classmethod
    def _from_sorted(cls, ring: PolynomialRing, terms: tuple) -> Polynomial:
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._dict = dict(terms)
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------
    def as_dict(self) -> dict[Monomial, Raw]:
        return dict(self._dict)

    def coefficient(self, m: Monomial) -> Raw:
        return self._dict.get(tuple(m), self.ring.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m, _ in self.terms)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> Raw:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def support(self) -> set[int]:
        return {i for m, _ in self.terms for i, e in enumerate(m) if e}

    def validate(self) -> None:
        """Check the term-list invariants; raises ``AssertionError``."""
        key = self.ring.order.key_function()
        keys = [key(m) for m, _ in self.terms]
        assert all(a > b for a, b in zip(keys, keys[1:])), "terms not strictly decreasing"
        assert all(c != 0 for _, c in self.terms), "zero coefficient stored"
        assert all(len(m) == self.ring.nvars for m, _ in self.terms), "bad monomial length"

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.ring.compatible(other.ring):
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Scalar)) or hasattr(other, "numerator"):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._dict)
        for m, c in other.terms:
            d[m] = d[m] + c if m in d else c
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial._from_sorted(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = self.ring.field.normalize(c.value if isinstance(c, Scalar) else c)
        return Polynomial(self.ring, {m: v * c for m, v in self.terms})

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring.compatible(other.ring) and self._dict == other._dict
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self._dict.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- conversions --------------------------------------------------------
    def with_ring(self, ring: PolynomialRing) -> Polynomial:
        """Reinterpret in a ring with the same variables (e.g. another order)."""
        if ring.names != self.ring.names:
            raise ValueError("with_ring needs identical variable names")
        if ring.field == self.ring.field:
            return Polynomial(ring, self._dict)
        return Polynomial(ring, {m: _convert_coeff(c, self.ring.field, ring.field)
                                 for m, c in self.terms})

    def embed(self, ring: PolynomialRing, index_map: Sequence[int]) -> Polynomial:
        """Map variable ``i`` to variable ``index_map[i]`` of ``ring``."""
        if len(index_map) != self.ring.nvars:
            raise ValueError("index map arity mismatch")
        out = {}
        for m, c in self.terms:
            e = [0] * ring.nvars
            for i, k in enumerate(m):
                if k:
                    e[index_map[i]] += k
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        return substitute(self, images)

    def evaluate(self, point: Sequence) -> Raw:
        f = self.ring.field
        pt = [f.normalize(v.value if isinstance(v, Scalar) else v) for v in point]
        total = f.zero
        for m, c in self.terms:
            t = c
            for v, e in zip(pt, m):
                if e:
                    t = t * v ** e
            total = f.normalize(total + t)
        return total

    def homogenize(self, var_index: int) -> Polynomial:
        return homogenize(self, var_index)

    def dehomogenize(self, var_index: int) -> Polynomial:
        return dehomogenize(self, var_index)

    def to_text(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def _convert_coeff(c: Raw, src: Field, dst: Field) -> Raw:
    if dst.is_prime:
        return dst.normalize(c)
    if src.is_prime:
        return dst.normalize(src.signed(c))
    return c


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f.ring.compatible(g.ring):
        raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")
    d: dict[Monomial, Raw] = {}
    for m1, c1 in f.terms:
        for m2, c2 in g.terms:
            m = tuple(map(add, m1, m2))
            v = c1 * c2
            d[m] = d[m] + v if m in d else v
    return Polynomial(f.ring, d)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Simultaneously replace variable ``i`` of ``f`` by ``images[i]``.

    The images may live in any common ring; the result lives there.
    """
    if len(images) != f.ring.nvars:
        raise ValueError(f"expected {f.ring.nvars} images, got {len(images)}")
    if not images:
        return f
    target = images[0].ring
    for g in images:
        if not target.compatible(g.ring):
            raise ValueError("substitution images live in different rings")
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] if e == 1 else power(i, e - 1) * images[i]
        return powers[(i, e)]

    acc: dict[Monomial, Raw] = {}
    for m, c in f.terms:
        t = target.constant(_convert_coeff(c, f.ring.field, target.field))
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
        for mm, cc in t.terms:
            acc[mm] = acc[mm] + cc if mm in acc else cc
    return Polynomial(target, acc)


def homogenize(f: Polynomial, var_index: int) -> Polynomial:
    """Homogenize with respect to a variable of ``f``'s ring that ``f`` does not use."""
    if not 0 <= var_index < f.ring.nvars:
        raise ValueError(f"variable index {var_index} out of range")
    if any(m[var_index] for m, _ in f.terms):
        raise ValueError("homogenizing variable already occurs in the polynomial")
    d = f.total_degree()
    out = {}
    for m, c in f.terms:
        e = list(m)
        e[var_index] = d - sum(m)
        out[tuple(e)] = c
    return Polynomial(f.ring, out)


def dehomogenize(f: Polynomial, var_index: int) -> Polynomial:
    """Set variable ``var_index`` to 1."""
    if not 0 <= var_index < f.ring.nvars:
        raise ValueError(f"variable index {var_index} out of range")
    if not f.is_homogeneous():
        raise ValueError("dehomogenize expects a homogeneous polynomial")
    out = {}
    for m, c in f.terms:
        e = list(m)
        e[var_index] = 0
        e = tuple(e)
        out[e] = out[e] + c if e in out else c
    return Polynomial(f.ring, out)


def render(f: Polynomial) -> str:
    """Canonical text: terms in decreasing order, ``*`` between factors, ``^`` for powers."""
    if not f.terms:
        return "0"
    field = f.ring.field
    names = f.ring.names
    parts: list[str] = []
    for m, c in f.terms:
        v = field.signed(c)
        neg = v < 0
        if neg:
            v = -v
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        if not mono:
            body = str(v)
        elif v == 1:
            body = mono
        else:
            body = f"{v}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
