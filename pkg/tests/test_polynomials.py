from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedhecke.polynomials import Polynomial, divide_by_linear
from gradedhecke.presets import build_preset

NV = 3  # x1, x2, r

coeffs = st.fractions(min_value=-4, max_value=4).filter(lambda c: c != 0)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
polys = st.dictionaries(exponents, coeffs, min_size=0, max_size=4).map(
    lambda t: Polynomial(NV, t))


def x(i, n=NV):
    return Polynomial.variable(n, i)


def test_add_identity():
    p = x(0)
    assert p + Polynomial.zero(NV) == p


def test_difference_of_squares():
    # (x + r)(x - r) = x^2 - r^2
    p = (x(0) + x(2)) * (x(0) - x(2))
    assert p == x(0) * x(0) - x(2) * x(2)


def test_degree_doubles_total_exponent():
    assert (x(0) * x(2)).degree() == 4
    assert (x(0) + x(2)).is_homogeneous()
    assert Polynomial.zero(NV).degree() == -1


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_laws(p, q, s):
    assert (p + q) * s == p * s + q * s
    assert (p * q) * s == p * (q * s)
    assert p * q == q * p


def test_division_exact_and_failing():
    num = x(0) ** 3 - x(1) ** 3
    alpha = x(0) - x(1)
    q = divide_by_linear(num, alpha)
    assert q * alpha == num
    with pytest.raises(ValueError):
        divide_by_linear(x(0) * x(0) + Polynomial.constant(NV, Fraction(1)), x(0))


# --- group action and divided differences over A2 ---------------------------

A2 = build_preset("A2")


def test_reflection_on_own_root():
    s1 = A2.group.simple(0)
    alpha = A2.rs.root_polynomial((1, 0))
    assert A2.group.act_polynomial(s1, alpha) == -alpha


def test_reflection_on_adjacent_root():
    # <beta, alpha^vee> = -1, so s_alpha(beta) = beta + alpha
    assert A2.rs.pairing((0, 1), 0) == -1
    s1 = A2.group.simple(0)
    beta = A2.rs.root_polynomial((0, 1))
    alpha = A2.rs.root_polynomial((1, 0))
    assert A2.group.act_polynomial(s1, beta) == beta + alpha


def test_identity_acts_trivially():
    p = x(0, A2.nvars) * x(1, A2.nvars) + Polynomial.variable(A2.nvars, 2)
    assert A2.group.act_polynomial(A2.group.identity, p) == p


def test_demazure_values():
    alpha = (1, 0)
    # (alpha - (-alpha)) / alpha = 2
    assert A2.demazure(alpha, A2.rs.root_polynomial(alpha)) == \
        Polynomial.constant(A2.nvars, Fraction(2))
    # constants are invariant
    assert A2.demazure(alpha, Polynomial.constant(A2.nvars, Fraction(7))).is_zero()
    # (beta - (beta + alpha)) / alpha = -1
    beta = A2.rs.root_polynomial((0, 1))
    assert A2.demazure(alpha, beta) == Polynomial.constant(A2.nvars, Fraction(-1))


a2_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)),
    coeffs, min_size=0, max_size=3).map(lambda t: Polynomial(A2.nvars, t))


@settings(max_examples=40, deadline=None)
@given(a2_polys, a2_polys)
def test_twisted_leibniz(p, q):
    s = A2.group.simple(0)
    lhs = A2.demazure((1, 0), p * q)
    rhs = A2.demazure((1, 0), p) * q + \
        A2.group.act_polynomial(s, p) * A2.demazure((1, 0), q)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(a2_polys)
def test_demazure_kills_exactly_invariants(p):
    s = A2.group.simple(0)
    sym = p + A2.group.act_polynomial(s, p)
    assert A2.demazure((1, 0), sym).is_zero()
    if A2.group.act_polynomial(s, p) != p:
        assert not A2.demazure((1, 0), p).is_zero()


@settings(max_examples=30, deadline=None)
@given(a2_polys, a2_polys)
def test_action_is_ring_automorphism(p, q):
    for w in (A2.group.simple(0), A2.group.word_element((0, 1))):
        assert A2.group.act_polynomial(w, p * q) == \
            A2.group.act_polynomial(w, p) * A2.group.act_polynomial(w, q)


def test_canonical_string():
    p = 2 * x(0) - x(2) + Polynomial.constant(NV, Fraction(1, 2))
    assert p.to_string(["x1", "x2", "r"]) == "2*x1 - r + 1/2"
