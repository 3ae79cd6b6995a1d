import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.arith import GF, QQ
from artifact.groebner import (
    buchberger,
    degree,
    dimension,
    eliminate,
    hilbert_data,
    hilbert_numerator,
    ideal_equal,
    normal_form,
)
from artifact.parsing import parse_polynomial
from artifact.poly import GREVLEX, LEX, Polynomial, PolynomialRing, var_names

from conftest import ring


def polys(texts, R):
    return [parse_polynomial(t, R) for t in texts]


def test_normal_form_examples():
    R = ring("x y")
    G = buchberger(polys(["x"], R))
    assert normal_form(parse_polynomial("x^2", R), G).is_zero()
    assert normal_form(parse_polynomial("y", R), G) == parse_polynomial("y", R)
    G1 = buchberger(polys(["x - 1"], R))
    assert normal_form(parse_polynomial("x^2 + y^2 - 1", R), G1) == parse_polynomial("y^2", R)


def test_normal_form_ring_mismatch():
    G = buchberger(polys(["x"], ring("x y")))
    with pytest.raises(ValueError):
        normal_form(parse_polynomial("x", ring("x z")), G)


def test_buchberger_examples():
    R = ring("x y", order=LEX)
    G = buchberger(polys(["x^2 + y^2 - 1", "x"], R))
    assert [str(g) for g in G] == ["x", "y^2 - 1"]
    G1 = buchberger(polys(["1", "x^3 - y"], R))
    assert G1.is_unit() and [str(g) for g in G1] == ["1"]
    assert buchberger(list(G.elements), LEX) == G


def test_buchberger_textbook_example():
    # x^3 - 2xy, x^2 y - 2y^2 + x under grevlex (Cox-Little-O'Shea 2.7)
    R = ring("x y")
    G = buchberger(polys(["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"], R))
    assert [str(g) for g in G] == ["x^2", "x*y", "y^2 - 1/2*x"]


def test_gb_is_reduced():
    R = ring("x y z", GF(32003))
    G = buchberger(polys(["x^2 + y*z - 2", "y^2 - x*z + 1", "z^3 - x*y"], R))
    lms = G.leading_monomials()
    for g in G:
        assert g.lc == 1
        g.validate()
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j:
                assert not all(x <= y for x, y in zip(a, b))
    for g in G:
        for m, _ in g.terms[1:]:
            assert not any(all(x <= y for x, y in zip(lm, m)) for lm in lms)


def test_eliminate_examples():
    R = ring("x y z")
    out = eliminate(polys(["z - x - y", "x", "y"], R), 2)
    assert [str(g) for g in out] == ["z"]
    assert out[0].ring.names == ("z",)
    R2 = ring("x y")
    assert eliminate(polys(["x^2 - y"], R2), 1) == []
    with pytest.raises(ValueError):
        eliminate(polys(["x"], R2), 2)


def test_eliminate_twisted_cubic_implicitization():
    R = ring("t x y z")
    out = eliminate(polys(["x - t", "y - t^2", "z - t^3"], R), 1)
    sub = out[0].ring
    expected = polys(["x^2 - y", "x*y - z", "y^2 - x*z"], sub)
    assert ideal_equal(out, expected)


def test_ideal_equal_examples():
    R = ring("x y")
    assert ideal_equal(polys(["x", "y"], R), polys(["y", "x + y"], R))
    assert not ideal_equal(polys(["x"], R), polys(["x^2"], R))


def test_dimension_examples(field):
    R = ring("x y", field)
    assert dimension(polys(["x^2 + y^2 - 1"], R)) == 1
    assert dimension(polys(["1"], R)) == -1
    assert degree(polys(["1"], R)) == 0
    with pytest.raises(ValueError):
        dimension(polys(["x^2 + y - 1"], R), projective=True)


def test_degree_hyperplane():
    R = PolynomialRing(var_names("x", 1, 3), QQ)
    assert degree(polys(["x1"], R)) == 1


def _cubic_plane_intersections(seed: int) -> int:
    """Distinct roots of a0 + a1 t + a2 t^2 + a3 t^3 = 0 (plane meets (t, t^2, t^3))."""
    rng = np.random.default_rng(seed)
    a = rng.integers(1, 20, size=4) * rng.choice([-1, 1], size=4)
    roots = np.roots(a[::-1].astype(float))
    distinct = {(round(r.real, 6), round(r.imag, 6)) for r in roots}
    return len(distinct)


def test_twisted_cubic_degree_matches_plane_count(field):
    oracle = {_cubic_plane_intersections(s) for s in range(5)}
    assert oracle == {3}
    R = ring("x y z", field)
    assert degree(polys(["y - x^2", "z - x^3"], R)) == 3
    assert dimension(polys(["y - x^2", "z - x^3"], R)) == 1


def test_hilbert_numerator_examples():
    assert hilbert_numerator([], 2) == [1]
    assert hilbert_numerator([(1, 0)], 2) == [1, -1]
    assert hilbert_numerator([(1, 1)], 2) == [1, 0, -1]


def _staircase_counts(gens, nvars, top):
    counts = []
    for d in range(top + 1):
        c = 0
        for m in itertools.product(range(d + 1), repeat=nvars):
            if sum(m) == d and not any(all(x <= y for x, y in zip(g, m)) for g in gens):
                c += 1
        counts.append(c)
    return counts


def _series_from_numerator(num, nvars, top):
    return [
        sum(c * comb(d - i + nvars - 1, nvars - 1) for i, c in enumerate(num) if i <= d)
        for d in range(top + 1)
    ]


def test_staircase_oracle_small_case():
    # {x1 x2} in two variables: 1, 2, 2, 2, ...
    assert _staircase_counts([(1, 1)], 2, 6) == [1, 2, 2, 2, 2, 2, 2]
    assert _series_from_numerator([1, 0, -1], 2, 6) == [1, 2, 2, 2, 2, 2, 2]


@st.composite
def monomial_ideals(draw):
    nvars = draw(st.integers(1, 4))
    gens = draw(st.lists(st.tuples(*[st.integers(0, 3)] * nvars), max_size=5))
    return nvars, gens


@settings(max_examples=80, deadline=None)
@given(monomial_ideals())
def test_hilbert_numerator_matches_staircase(case):
    nvars, gens = case
    num = hilbert_numerator(gens, nvars)
    assert _series_from_numerator(num, nvars, 8) == _staircase_counts(gens, nvars, 8)


# -- property tests on random ideals ----------------------------------------------

R3 = PolynomialRing(("x", "y", "z"), GF(32003))


@st.composite
def small_polys(draw, R=R3, max_terms=3):
    d = draw(st.dictionaries(st.tuples(*[st.integers(0, 2)] * R.nvars), st.integers(-3, 3),
                             min_size=1, max_size=max_terms))
    return Polynomial(R, d)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_polys(), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_gb_permutation_and_scaling_invariant(gens, rnd):
    G = buchberger(gens, GREVLEX)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    scaled = [g.scale(rnd.randint(1, 32002)) for g in shuffled]
    assert buchberger(scaled, GREVLEX) == G
    assert buchberger(list(G.elements), GREVLEX, ring=R3) == G


@settings(max_examples=25, deadline=None)
@given(st.lists(small_polys(), min_size=1, max_size=3), st.lists(small_polys(), min_size=3, max_size=3),
       small_polys())
def test_membership_of_combinations(gens, multipliers, extra):
    G = buchberger(gens, GREVLEX)
    combo = R3.zero()
    for g, h in zip(gens, multipliers):
        combo = combo + g * h
    assert normal_form(combo, G).is_zero()
    # f - NF(f) lies in the ideal, and NF(f) = 0 iff f is in the ideal
    r = normal_form(extra, G)
    assert normal_form(extra - r, G).is_zero()
    assert r.is_zero() == G.contains(extra)
    lms = G.leading_monomials()
    for m, _ in r.terms:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)


def test_lex_and_grevlex_generate_same_ideal():
    R = PolynomialRing(("x", "y", "z"), GF(32003))
    gens = polys(["x^2 + y*z - 2", "y^2 - x*z + 1", "x*y - z"], R)
    L = buchberger(gens, LEX)
    for g in gens:
        assert L.contains(g.with_ring(L.ring))
    for g in L:
        assert buchberger(gens, GREVLEX).contains(g.with_ring(R))


def test_projective_dimension_and_emptiness():
    R = PolynomialRing(var_names("x", 0, 2), QQ)
    assert hilbert_data(polys(["x0*x1 - x2^2"], R), projective=True).dimension == 1
    assert hilbert_data(polys(["x0*x1 - x2^2"], R), projective=True).degree == 2
    empty = hilbert_data(polys(["x0", "x1^2", "x2^3"], R), projective=True)
    assert (empty.dimension, empty.degree) == (-1, 0)
