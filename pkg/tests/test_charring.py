"""Group-algebra elements and factored fractions."""

from hypothesis import given, settings, strategies as st

from chevmc.params import Scalar
from chevmc.charring import GA, Frac


weights = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
scalars = st.dictionaries(
    st.integers(-4, 4), st.integers(-5, 5), max_size=3
).map(Scalar)
gas = st.dictionaries(weights, scalars, max_size=4).map(GA)


def test_basics():
    g = GA.term((1, 0)) + GA.term((0, 1), Scalar.y(1))
    assert g.c[(1, 0)] == Scalar.one()
    assert bool(g)
    assert g - g == GA()
    assert GA.const(3, 2).c == {(0, 0): Scalar.int(3)}


@given(gas, gas, gas)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(gas)
def test_dualities(g):
    assert g.dual_vee().dual_vee() == g
    assert g.star().star() == g
    assert g.y_inverse().y_inverse() == g
    # star and y_inverse commute and compose to dual_vee
    assert g.star().y_inverse() == g.dual_vee()


@given(gas, gas)
@settings(max_examples=60)
def test_exact_div_of_product(a, b):
    if not b:
        return
    q = (a * b).exact_div(b)
    assert q is not None and q == a


def test_exact_div_indivisible():
    one = GA.const(1, 2)
    a1 = GA.term((2, -1))
    # 1 - e^alpha does not divide 1 + e^alpha
    assert (one + a1).exact_div(one - a1) is None
    # and does not divide a bare constant
    assert one.exact_div(one - a1) is None


def test_exact_div_laurent_box():
    # denominators with constant lex-leading term used to recurse forever
    one = GA.const(1, 2)
    d = one - GA.term((-2, 1))
    n = one - GA.term((-4, 2))
    q = n.exact_div(d)
    assert q == one + GA.term((-2, 1))


def test_frac_reduction():
    one = GA.const(1, 2)
    a = GA.term((2, -1))
    f = Frac(one - a * a, (one - a,))
    g = f.as_ga()
    assert g == one + a


@given(gas, gas)
@settings(max_examples=40)
def test_frac_field_ops(a, b):
    one = GA.const(1, 2)
    den = one - GA.term((2, -1))
    fa = Frac(a, (den,))
    fb = Frac(b, (den, den))
    s = fa + fb
    # (a*den + b) / den^2
    assert s * Frac(den) * Frac(den) == Frac(a * den + b)
    assert fa - fa == Frac(GA())


def test_frac_inverse():
    one = GA.const(1, 2)
    den = one - GA.term((2, -1))
    f = Frac(one + GA.term((0, 1)), (den,))
    assert f * f.inverse() == Frac(one)


def test_monomial_unit_absorbed():
    one = GA.const(1, 2)
    f = Frac(GA.term((2, 2)), (GA.term((2, 0), Scalar.v(3)),))
    g = f.as_ga()
    assert g == GA.term((0, 2), Scalar.v(-3))


@given(gas)
def test_json_round_trip(g):
    assert GA.from_json(g.to_json()) == g
