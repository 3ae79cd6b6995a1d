"""Constructions on varieties presented by ideals.

Images of maps are computed as elimination ideals of graph ideals: the
generators of both inputs, in disjoint copies of the coordinates, plus
``t_i - (a_i + b_i)`` (Minkowski sum, join) or ``t_i - a_i * b_i``
(Hadamard product), with both copies eliminated.  Projective inputs are
handled on their affine cones; the homogeneous result describes the
projective image, and emptiness shows up as a cone of dimension <= 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import groebner
from .arith import QQ, Field, Scalar
from .parsing import parse_polynomial, render_ideal_file
from .poly import GREVLEX, Polynomial, PolynomialRing, var_names

GENERIC_SCALAR_RANGE = (2, 10**6)


@dataclass(frozen=True)
class VarietyIdeal:
    """Ideal with ambient metadata.

    Affine varieties in ``A^n`` use variables ``x1..xn``; projective ones in
    ``P^n`` use ``x0..xn`` and homogeneous generators.
    """

    ring: PolynomialRing
    generators: tuple[Polynomial, ...]
    projective: bool = False

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if not self.ring.compatible(g.ring):
                raise ValueError(f"generator ring {g.ring} does not match {self.ring}")
            if self.projective and not g.is_homogeneous():
                raise ValueError(f"projective ideal with non-homogeneous generator {g}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_text(
        cls,
        gens: Sequence[str] | str,
        n: int,
        projective: bool = False,
        field: Field = QQ,
        names: Sequence[str] | None = None,
    ) -> VarietyIdeal:
        if isinstance(gens, str):
            gens = [g for g in gens.split(";") if g.strip()]
        if names is None:
            names = var_names("x", 0, n) if projective else var_names("x", 1, n)
        ring = PolynomialRing(tuple(names), field)
        return cls(ring, tuple(parse_polynomial(g, ring) for g in gens), projective)

    @property
    def n(self) -> int:
        return self.ring.nvars - 1 if self.projective else self.ring.nvars

    @property
    def field(self) -> Field:
        return self.ring.field

    def groebner_basis(self, order=GREVLEX) -> groebner.GroebnerBasis:
        return groebner.buchberger(self.generators, order, ring=self.ring)

    def hilbert(self) -> groebner.HilbertData:
        return groebner.hilbert_data(self.generators, self.projective, ring=self.ring)

    def dimension(self) -> int:
        return self.hilbert().dimension

    def degree(self) -> int:
        return self.hilbert().degree

    def is_empty(self) -> bool:
        return self.dimension() < 0

    def equals(self, other: VarietyIdeal) -> bool:
        """Equality of the ideals (reduced grevlex bases), not of their radicals."""
        _check_same(self, other)
        return groebner.ideal_equal(self.generators, other.generators, GREVLEX, ring=self.ring)

    def with_field(self, field: Field) -> VarietyIdeal:
        ring = self.ring.with_field(field)
        return VarietyIdeal(ring, tuple(g.with_ring(ring) for g in self.generators), self.projective)

    def to_text(self) -> str:
        return render_ideal_file(self.ring, self.generators, self.projective)

    def __str__(self) -> str:
        return self.to_text()


def _check_same(a: VarietyIdeal, b: VarietyIdeal) -> None:
    if a.projective != b.projective:
        raise ValueError("cannot combine an affine and a projective variety")
    if a.n != b.n:
        raise ValueError(f"ambient dimensions differ: {a.n} vs {b.n}")
    if a.field != b.field:
        raise ValueError(f"coefficient fields differ: {a.field!r} vs {b.field!r}")


def _graph_image(X: VarietyIdeal, Y: VarietyIdeal, op: str) -> VarietyIdeal:
    """Closure of the image of ``X x Y`` under coordinatewise ``+`` or ``*``."""
    _check_same(X, Y)
    k = X.ring.nvars
    target = X.ring.names
    names = tuple(f"_a{i}" for i in range(k)) + tuple(f"_b{i}" for i in range(k)) + target
    big = PolynomialRing(names, X.field)
    gens = [g.embed(big, range(k)) for g in X.generators]
    gens += [g.embed(big, range(k, 2 * k)) for g in Y.generators]
    for i in range(k):
        a, b, t = big.var(i), big.var(k + i), big.var(2 * k + i)
        gens.append(t - a - b if op == "+" else t - a * b)
    elim = groebner.eliminate(gens, 2 * k, ring=big)
    ring = X.ring.with_order(GREVLEX)
    return VarietyIdeal(ring, tuple(Polynomial(ring, g.as_dict()) for g in elim), X.projective)


def minkowski_sum(X: VarietyIdeal, Y: VarietyIdeal) -> VarietyIdeal:
    """Ideal of the Zariski closure of ``X + Y`` for affine ``X``, ``Y``."""
    if X.projective or Y.projective:
        raise ValueError("Minkowski sum is only defined for affine varieties; use join()")
    return _graph_image(X, Y, "+")


def hadamard_affine(X: VarietyIdeal, Y: VarietyIdeal) -> VarietyIdeal:
    if X.projective or Y.projective:
        raise ValueError("hadamard_affine expects affine varieties")
    return _graph_image(X, Y, "*")


def hadamard_projective(X: VarietyIdeal, Y: VarietyIdeal) -> VarietyIdeal:
    """Homogeneous ideal of ``X * Y`` in ``P^n``; empty when the cone is trivial."""
    if not (X.projective and Y.projective):
        raise ValueError("hadamard_projective expects projective varieties")
    return _graph_image(X, Y, "*")


def join(X: VarietyIdeal, Y: VarietyIdeal) -> VarietyIdeal:
    """Join of projective varieties: the Minkowski sum of their affine cones."""
    if not (X.projective and Y.projective):
        raise ValueError("join expects projective varieties")
    return _graph_image(X, Y, "+")


def ones_point(n: int, field: Field = QQ) -> VarietyIdeal:
    ring = PolynomialRing(var_names("x", 0, n), field)
    x0 = ring.var(0)
    return VarietyIdeal(ring, tuple(ring.var(i) - x0 for i in range(1, n + 1)), True)


def hadamard_power(X: VarietyIdeal, s: int) -> VarietyIdeal:
    """``s``-th Hadamard power; ``s = 0`` gives the point ``[1:...:1]``."""
    if not X.projective:
        raise ValueError("Hadamard powers are taken of projective varieties")
    if s < 0:
        raise ValueError("power must be nonnegative")
    if s == 0:
        return ones_point(X.n, X.field)
    result = X
    for _ in range(s - 1):
        result = hadamard_projective(result, X)
    return result


def projective_closure(X: VarietyIdeal) -> VarietyIdeal:
    """Homogenize a grevlex reduced basis with a new leading variable ``x0``."""
    if X.projective:
        raise ValueError("projective_closure expects an affine variety")
    if "x0" in X.ring.names:
        raise ValueError("affine ring already uses the name x0")
    ring = PolynomialRing(("x0",) + X.ring.names, X.field)
    gb = X.groebner_basis(GREVLEX)
    gens = [g.embed(ring, range(1, ring.nvars)).homogenize(0) for g in gb.elements]
    return VarietyIdeal(ring, tuple(gens), True)


def disjoint_at_infinity(X: VarietyIdeal, Y: VarietyIdeal) -> bool:
    """Whether the projective closures share no point on the hyperplane ``x0 = 0``."""
    _check_same(X, Y)
    if X.projective:
        raise ValueError("disjoint_at_infinity expects affine varieties")
    cx, cy = projective_closure(X), projective_closure(Y)
    gens = cx.generators + cy.generators + (cx.ring.var(0),)
    return VarietyIdeal(cx.ring, gens, True).is_empty()


def _raw(field: Field, a) -> object:
    return field.normalize(a.value if isinstance(a, Scalar) else a)


def dilate(X: VarietyIdeal, alpha) -> VarietyIdeal:
    """Ideal of ``alpha * X`` (substitute ``x_i -> x_i / alpha``)."""
    if X.projective:
        raise ValueError("dilate expects an affine variety")
    a = _raw(X.field, alpha)
    if a == 0:
        raise ValueError("dilation factor must be nonzero")
    inv = X.field.inv(a)
    images = [X.ring.var(i).scale(inv) for i in range(X.ring.nvars)]
    return VarietyIdeal(X.ring, tuple(g.substitute(images) for g in X.generators), False)


def generic_scalar(seed: int, field: Field = QQ) -> Scalar:
    """Seeded 'generic' scalar from {2, ..., 10^6} (never 0 or -1)."""
    rng = random.Random(seed)
    while True:
        v = field.normalize(rng.randint(*GENERIC_SCALAR_RANGE))
        if v != 0 and field.normalize(v + 1) != 0:
            return Scalar(field, v)


def random_matrix(n: int, seed: int, field: Field):
    """Seeded invertible ``n x n`` matrix (rows of raw field values)."""
    from .matham import Matrix

    rng = random.Random(seed)
    while True:
        if field.is_prime:
            rows = [[rng.randrange(field.characteristic) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        M = Matrix.from_rows(rows, field)
        if M.rank() == n:
            return M


def random_linear_transform(X: VarietyIdeal, seed: int) -> VarietyIdeal:
    """Ideal of ``g X`` for a seeded random ``g`` in ``GL_n``, via ``f(g^{-1} x)``."""
    if X.projective:
        raise ValueError("random_linear_transform expects an affine variety")
    n = X.ring.nvars
    g = random_matrix(n, seed, X.field)
    ginv = g.inverse()
    xs = X.ring.gens()
    images = []
    for i in range(n):
        img = X.ring.zero()
        for j in range(n):
            c = ginv.entry(i, j)
            if c:
                img = img + xs[j].scale(c)
        images.append(img)
    return VarietyIdeal(X.ring, tuple(f.substitute(images) for f in X.generators), False)


def cayley_lift(
    X: VarietyIdeal, Y: VarietyIdeal, z0=0, z1=1
) -> tuple[VarietyIdeal, VarietyIdeal]:
    """Projective closures of ``X x {z0}`` and ``Y x {z1}`` in ``P^{n+1}``.

    The lifted coordinate is ``x{n+1}``; the hyperplane at infinity is
    ``x0 = 0``.
    """
    _check_same(X, Y)
    if X.projective:
        raise ValueError("cayley_lift expects affine varieties")
    a, b = _raw(X.field, z0), _raw(X.field, z1)
    if a == b:
        raise ValueError("the two levels z0 and z1 must differ")
    n = X.n
    lifted = PolynomialRing(var_names("x", 1, n + 1), X.field)
    z = lifted.var(n)

    def lift(V: VarietyIdeal, level) -> VarietyIdeal:
        gens = tuple(g.embed(lifted, range(n)) for g in V.generators) + (z - lifted.constant(level),)
        return projective_closure(VarietyIdeal(lifted, gens, False))

    return lift(X, a), lift(Y, b)


def cayley_degrees(X: VarietyIdeal, Y: VarietyIdeal, seed: int = 0) -> dict:
    """Degree of the join of the Cayley lifts and of ``alpha X + Y`` for a seeded generic alpha."""
    Xt, Yt = cayley_lift(X, Y)
    J = join(Xt, Yt)
    alpha = generic_scalar(seed, X.field)
    S = minkowski_sum(dilate(X, alpha), Y)
    return {
        "alpha": alpha,
        "join_dimension": J.dimension(),
        "join_degree": J.degree(),
        "sum_dimension": S.dimension(),
        "sum_degree": S.degree(),
    }
