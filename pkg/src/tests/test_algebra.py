import random
from fractions import Fraction

import pytest

from src.algebra import (
    COEFFICIENT_VARIABLES,
    LaurentPoly,
    LinForm,
    MultiPoly,
    RationalExpr,
    clear_denominators,
    eval_numeric,
    lambda_values,
    monomial_inverse,
    ratexpr_add,
    ratexpr_mul,
    ratexpr_substitute,
    reduce_to_laurent,
    reexpand,
    universe,
)
from src.errors import NotLaurent, VariableMismatch, ZeroDenominator


def qh(terms):
    return MultiPoly.from_dict(COEFFICIENT_VARIABLES, terms)


def test_render_is_canonical():
    """Terms are sorted by exponent and rationals print as p/q."""
    poly = qh({(2, 0): Fraction(3, 2), (0, 0): Fraction(1, 8)})
    assert poly.render() == "1/8 + 3/2 Q^2"
    assert qh({(1, -1): 2}).render() == "2 Q hbar^-1"
    assert qh({}).render() == "0"


def test_negative_coefficients_render_with_minus():
    """Signs are carried into the separator."""
    poly = qh({(0, 0): -1, (1, 0): Fraction(-1, 3)})
    assert poly.render() == "-1 - 1/3 Q"


def test_zero_terms_are_dropped():
    """A polynomial never stores a zero coefficient."""
    a = qh({(1, 0): 1})
    assert (a - a).is_zero()
    assert not (a - a)


def test_variable_mismatch():
    """Adding polynomials over different variables fails."""
    with pytest.raises(VariableMismatch):
        qh({(0, 0): 1}) + MultiPoly.constant(universe(1), 1)


def test_partial_fractions_cancel_to_laurent():
    """1/(l1(l1+l2)) + 1/(l2(l1+l2)) = 1/(l1 l2)."""
    pair = LinForm.pair(1, 2)
    expr = RationalExpr.from_terms(2, [(1, [LinForm.single(1), pair]), (1, [LinForm.single(2), pair])])
    assert reduce_to_laurent(expr) == monomial_inverse(2, (1, 1))


def test_pair_of_equal_colors_is_twice_the_variable():
    """The form l1 + l1 reduces to 2 l1."""
    expr = RationalExpr.from_terms(1, [(1, [LinForm.pair(1, 1)])])
    assert reduce_to_laurent(expr) == monomial_inverse(1, (1,), Fraction(1, 2))


def test_not_laurent_carries_numerator():
    """1/(l1 + l2) has no Laurent form."""
    expr = RationalExpr.from_terms(2, [(1, [LinForm.pair(1, 2)])])
    with pytest.raises(NotLaurent) as info:
        reduce_to_laurent(expr)
    assert info.value.numerator is not None


def test_reexpand_recovers_cleared_numerator():
    """Multiplying the Laurent form back by the denominator gives the numerator."""
    pair = LinForm.pair(1, 2)
    expr = RationalExpr.from_terms(2, [(1, [LinForm.single(1), pair]), (1, [LinForm.single(2), pair])])
    cleared = clear_denominators(expr)
    assert reexpand(reduce_to_laurent(expr), cleared) == cleared.numerator_poly()


def test_evaluation_agrees_before_and_after_reduction():
    """Reduction does not change the value at a generic point."""
    pair = LinForm.pair(1, 2)
    expr = RationalExpr.from_terms(2, [(3, [LinForm.single(1), pair]), (3, [LinForm.single(2), pair])])
    point = lambda_values(2, 5)
    assert eval_numeric(expr, point) == eval_numeric(reduce_to_laurent(expr), point) == Fraction(3, 10)


def test_zero_denominator():
    """Evaluating at a pole raises."""
    expr = RationalExpr.from_terms(1, [(1, [LinForm.single(1)])])
    with pytest.raises(ZeroDenominator):
        expr.evaluate(lambda_values(0))


def test_substitute_merges_pair_into_double():
    """Sending l1 and l2 to one color turns l1 + l2 into 2 l1."""
    expr = RationalExpr.from_terms(2, [(1, [LinForm.pair(1, 2)])])
    merged = ratexpr_substitute(expr, (1, 1), 1)
    assert merged.summands[0][0] == (LinForm.pair(1, 1),)
    assert reduce_to_laurent(merged) == monomial_inverse(1, (1,), Fraction(1, 2))


def test_laurent_symmetry_and_homogeneity():
    """l1^-2 l2^-1 + l1^-1 l2^-2 is symmetric of degree 3."""
    laurent = LaurentPoly.from_dict(2, {(2, 1): 1, (1, 2): 1})
    assert laurent.is_symmetric()
    assert laurent.is_homogeneous(3)
    assert not LaurentPoly.from_dict(2, {(2, 1): 1}).is_symmetric()


def random_expr(rng, n=3, summands=3):
    forms = [LinForm.single(i) for i in range(1, n + 1)] + [
        LinForm.pair(i, j) for i in range(1, n + 1) for j in range(i, n + 1)
    ]
    terms = []
    for _ in range(summands):
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        terms.append((coeff, [rng.choice(forms) for _ in range(rng.randint(0, 3))]))
    return RationalExpr.from_terms(n, terms)


def test_addition_is_associative():
    """(a + b) + c and a + (b + c) are the same stored expression."""
    rng = random.Random(11)
    for _ in range(50):
        a, b, c = (random_expr(rng) for _ in range(3))
        assert ratexpr_add(ratexpr_add(a, b), c) == ratexpr_add(a, ratexpr_add(b, c))
        assert ratexpr_add(a, RationalExpr.zero(3)) == a


def test_three_summands_reduce_to_two_monomials():
    """2/(l1 l2 (l1+l2)) + 1/(l1^2 (l1+l2)) + 1/(l2^2 (l1+l2)) = l1^-1 l2^-2 + l1^-2 l2^-1."""
    l1, l2, pair = LinForm.single(1), LinForm.single(2), LinForm.pair(1, 2)
    expr = RationalExpr.from_terms(2, [(2, [l1, l2, pair]), (1, [l1, l1, pair]), (1, [l2, l2, pair])])
    laurent = reduce_to_laurent(expr)
    assert laurent == LaurentPoly.from_dict(2, {(1, 2): 1, (2, 1): 1})
    assert eval_numeric(expr, lambda_values(1, 2)) == Fraction(3, 4)


def test_laurent_evaluation_needs_every_variable():
    """A missing face variable is a variable mismatch, not a KeyError."""
    laurent = LaurentPoly.from_dict(2, {(1, 2): 1})
    with pytest.raises(VariableMismatch):
        laurent.evaluate({"l1": Fraction(1), "Q": Fraction(1), "hbar": Fraction(1)})


def test_product_concatenates_denominators():
    """1/l1 times 1/(l1 + l2) is 1/(l1 (l1 + l2))."""
    a = RationalExpr.from_terms(2, [(1, [LinForm.single(1)])])
    b = RationalExpr.from_terms(2, [(1, [LinForm.pair(1, 2)])])
    assert ratexpr_mul(a, b) == RationalExpr.from_terms(2, [(1, [LinForm.single(1), LinForm.pair(1, 2)])])
