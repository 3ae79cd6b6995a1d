import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.arith import GF, QQ
from artifact.parsing import parse_polynomial
from artifact.poly import GREVLEX, LEX, PolynomialRing, compare, elim, var_names

from conftest import ring


def P(text, R):
    return parse_polynomial(text, R)


def test_compare_examples():
    assert compare(LEX, (1, 0), (0, 1)) == 1
    # x1*x3 vs x2^2 under grevlex: equal degree, last variable decides
    assert compare(GREVLEX, (1, 0, 1), (0, 2, 0)) == -1
    for order in (LEX, GREVLEX, elim(1)):
        assert compare(order, (2, 1, 3), (2, 1, 3)) == 0
    with pytest.raises(ValueError):
        compare(GREVLEX, (1, 0), (1, 0, 0))


def test_elimination_order_prefers_block():
    order = elim(1)
    # anything involving x beats any pure (y, z) monomial
    assert compare(order, (1, 0, 0), (0, 5, 5)) == 1
    # within the block, grevlex; ties broken by grevlex on the rest
    assert compare(order, (1, 1, 0), (1, 0, 1)) == 1


monos = st.tuples(*[st.integers(0, 4)] * 3)


@given(monos, monos, monos)
def test_orders_are_multiplicative(a, b, m):
    for order in (LEX, GREVLEX, elim(1), elim(2)):
        c = compare(order, a, b)
        am = tuple(x + y for x, y in zip(a, m))
        bm = tuple(x + y for x, y in zip(b, m))
        assert compare(order, am, bm) == c
        assert compare(order, a, (0, 0, 0)) >= 0


def test_multiply_examples():
    R = ring("x y")
    assert P("(x+y)*(x-y)", R) == P("x^2 - y^2", R)
    f = P("x^2 + 3*y - 1", R)
    assert (f * R.zero()).is_zero()
    assert f * R.one() == f


def test_ring_mismatch():
    with pytest.raises(ValueError):
        P("x", ring("x y")) * P("x", ring("x z"))
    with pytest.raises(ValueError):
        P("x", ring("x y", QQ)) + P("x", ring("x y", GF(5)))


def test_substitute_examples():
    R = ring("x y")
    x, y = R.gens()
    f = P("x^2 + y^2", R)
    assert f.substitute([x.scale(QQ.inv(2)), y]) == P("1/4*x^2 + y^2", R)
    assert f.substitute([x, y]) == f
    assert P("x*y - 1", R).substitute([x.scale(2), y]) == P("2*x*y - 1", R)
    with pytest.raises(ValueError):
        f.substitute([x])


def test_homogenize_examples():
    R = PolynomialRing(("x0", "x", "y"), QQ)
    f = P("x^2 + y - 1", R)
    h = f.homogenize(0)
    assert h == P("x^2 + y*x0 - x0^2", R)
    assert h.is_homogeneous()
    assert h.dehomogenize(0) == f
    assert R.constant(5).homogenize(0) == R.constant(5)


def test_render_is_canonical():
    R = PolynomialRing(var_names("x", 1, 2), QQ)
    f = P("-1 + x2*3 + x1^2 - 1/2 x1 x2", R)
    assert f.to_text() == "x1^2 - 1/2*x1*x2 + 3*x2 - 1"
    assert P(f.to_text(), R) == f
    F = PolynomialRing(var_names("x", 1, 2), GF(7))
    assert P("x1 - 1", F).to_text() == "x1 - 1"


coeffs = st.integers(-5, 5)
terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), coeffs, max_size=5)


def _poly(R, d):
    from artifact.poly import Polynomial

    return Polynomial(R, d)


@settings(max_examples=60, deadline=None)
@given(terms)
def test_homogenize_round_trip(d):
    R = PolynomialRing(("x0", "x", "y", "z"), QQ)
    f = _poly(R, {(0,) + m: c for m, c in d.items()})
    h = f.homogenize(0)
    assert h.is_homogeneous()
    assert h.dehomogenize(0) == f
    h.validate()


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), coeffs, max_size=3)


@settings(max_examples=40, deadline=None)
@given(small, small, small, small)
def test_substitute_is_homomorphism(a, b, i1, i2):
    R = PolynomialRing(("x", "y", "z"), QQ)
    f, g = _poly(R, a), _poly(R, b)
    images = [_poly(R, i1), _poly(R, i2), R.var(0) + 1]
    assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)
    assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)


@settings(max_examples=40, deadline=None)
@given(terms, terms, st.sampled_from([LEX, GREVLEX, elim(1), elim(2)]))
def test_terms_stay_sorted(a, b, order):
    R = PolynomialRing(("x", "y", "z"), GF(11), order)
    f, g = _poly(R, a), _poly(R, b)
    for h in (f + g, f - g, f * g, -f, f**2, f.monic()):
        h.validate()
