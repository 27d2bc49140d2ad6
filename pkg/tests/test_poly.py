"""Sparse polynomial engine: canonical form, ring laws, substitution, evaluation."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkseq.poly import (
    ParameterAssignment,
    SparsePolynomial,
    W,
    Z,
    monomial,
    poly,
    x_var,
    y_var,
)

VARS = [Z, W, y_var(1), y_var(2), x_var(1, 2)]

powers = st.dictionaries(st.sampled_from(VARS), st.integers(1, 2), max_size=3)
polys = st.builds(
    SparsePolynomial.from_terms,
    st.lists(st.tuples(powers, st.integers(-4, 4)), max_size=4),
)

POINT = {Z: 3, W: -2, y_var(1): 5, y_var(2): -7, x_var(1, 2): 11}


def test_variable_total_order():
    assert Z < W < y_var(1) < y_var(2) < y_var(10) < x_var(1, 2) < x_var(1, 3) < x_var(2, 3)


def test_variable_constructors_validate_indices():
    with pytest.raises(ValueError):
        y_var(0)
    with pytest.raises(ValueError):
        x_var(2, 2)
    with pytest.raises(ValueError):
        x_var(0, 1)


def test_variable_rendering():
    assert str(Z) == "z"
    assert str(W) == "w"
    assert str(y_var(3)) == "y3"
    assert str(x_var(1, 12)) == "x1_12"


def test_monomial_canonicalization():
    assert monomial({Z: 0}) == ()
    assert monomial([(Z, 1), (Z, 2)]) == ((Z, 3),)
    assert monomial({y_var(2): 1, Z: 2}) == ((Z, 2), (y_var(2), 1))
    with pytest.raises(ValueError):
        monomial({Z: -1})


def test_zero_coefficients_never_stored():
    p = SparsePolynomial.from_terms([({Z: 1}, 2), ({Z: 1}, -2)])
    assert p.is_zero()
    assert p.terms == {}
    assert (poly(Z) - poly(Z)).is_zero()


def test_additive_and_multiplicative_identities():
    p = (poly(Z) + 2) * poly(y_var(1))
    assert p + 0 == p
    assert 0 + p == p
    assert p * 1 == p
    assert 1 * p == p
    assert (p * 0).is_zero()


def test_two_factor_expansion_matches_hand_computation():
    product = (poly(Z) + y_var(1)) * (poly(Z) + y_var(2))
    expected = SparsePolynomial.from_terms(
        [
            ({Z: 2}, 1),
            ({Z: 1, y_var(1): 1}, 1),
            ({Z: 1, y_var(2): 1}, 1),
            ({y_var(1): 1, y_var(2): 1}, 1),
        ]
    )
    assert product == expected
    assert str(product) == "z*y1 + z*y2 + z^2 + y1*y2"


def test_sum_builtin_works():
    total = sum(poly(y_var(j)) for j in (1, 2, 3))
    assert total == poly(y_var(1)) + poly(y_var(2)) + poly(y_var(3))


def test_integer_comparison_and_coercion():
    assert poly(5) == 5
    assert poly(0) == 0
    assert poly(Z) != 1
    with pytest.raises(TypeError):
        poly("z")


def test_pow():
    p = poly(Z) + 1
    assert p**0 == 1
    assert p**3 == p * p * p
    with pytest.raises(ValueError):
        p ** (-1)


def test_degree():
    assert poly(0).degree() == -1
    assert poly(7).degree() == 0
    q = (poly(Z) + y_var(1)) * (poly(Z) + y_var(1)) * poly(W)
    assert q.degree() == 3
    assert q.degree(Z) == 2
    assert q.degree(W) == 1
    assert q.degree(y_var(2)) == 0


def test_variables_listing():
    q = poly(Z) * poly(x_var(2, 5)) + poly(y_var(1))
    assert q.variables() == {Z, x_var(2, 5), y_var(1)}


def test_substitute_square_shift():
    sq = poly(Z) * poly(Z)
    shifted = sq.substitute({Z: poly(Z) + poly(W)})
    expected = SparsePolynomial.from_terms([({Z: 2}, 1), ({Z: 1, W: 1}, 2), ({W: 2}, 1)])
    assert shifted == expected


def test_substitute_is_simultaneous():
    p = poly(y_var(1)) * poly(y_var(2))
    renamed = p.substitute({y_var(1): y_var(2), y_var(2): y_var(3)})
    assert renamed == poly(y_var(2)) * poly(y_var(3))


def test_substitute_empty_rules_is_identity():
    p = (poly(Z) + 3) * poly(y_var(1))
    assert p.substitute({}) == p


def test_substitute_accepts_ints_and_variables():
    p = poly(Z) + poly(y_var(1))
    assert p.substitute({y_var(1): 4}) == poly(Z) + 4
    assert p.substitute({y_var(1): W}) == poly(Z) + poly(W)


def test_evaluate_with_mapping():
    p = (poly(Z) + y_var(1)) * (poly(Z) - 2)
    assert p.evaluate(POINT) == (3 + 5) * (3 - 2)
    with pytest.raises(ValueError):
        p.evaluate({Z: 3})


def test_evaluate_with_assignment():
    assignment = ParameterAssignment(z_val=3, w_val=-2, y_vals={1: 5}, x_vals={(1, 2): 11})
    p = poly(Z) * poly(W) + poly(x_var(1, 2)) - poly(y_var(1))
    assert p.evaluate(assignment) == 3 * (-2) + 11 - 5
    with pytest.raises(ValueError):
        poly(y_var(9)).evaluate(assignment)


@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(polys, polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
def test_associativity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@given(polys, polys, polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_operations_commute_with_evaluation(a, b):
    assert (a + b).evaluate(POINT) == a.evaluate(POINT) + b.evaluate(POINT)
    assert (a * b).evaluate(POINT) == a.evaluate(POINT) * b.evaluate(POINT)
    assert (a - b).evaluate(POINT) == a.evaluate(POINT) - b.evaluate(POINT)


@given(polys)
def test_substitution_then_evaluation_agrees(p):
    rules = {Z: poly(W) + 2, y_var(1): poly(x_var(1, 2))}
    image_point = dict(POINT)
    image_point[Z] = POINT[W] + 2
    image_point[y_var(1)] = POINT[x_var(1, 2)]
    assert p.substitute(rules).evaluate(POINT) == p.evaluate(image_point)


@given(polys, polys)
def test_equal_polynomials_hash_equal(a, b):
    if a == b:
        assert hash(a) == hash(b)
    assert hash(a) == hash(SparsePolynomial(a.terms))


def test_random_assignment_is_seed_deterministic():
    first = ParameterAssignment.random_for((1, 3, 4), random.Random(5))
    second = ParameterAssignment.random_for((1, 3, 4), random.Random(5))
    assert first == second
    assert set(first.y_vals) == {1, 3, 4}
    assert set(first.x_vals) == {(1, 3), (1, 4), (3, 4)}
    for value in (first.z_val, first.w_val, *first.y_vals.values(), *first.x_vals.values()):
        assert -(10**6) <= value <= 10**6
