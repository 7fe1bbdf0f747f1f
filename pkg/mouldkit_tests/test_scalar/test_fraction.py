# -*- coding: utf-8 -*-

"""

  fraction tests
  ~~~~~~~~~~~~~~

  tests for formal fractions of polynomials.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
from fractions import Fraction

# mouldkit
from mouldkit import test
from mouldkit import exceptions
from mouldkit.scalar import MultiPoly
from mouldkit.scalar import FormalFraction
from mouldkit.scalar import fraction_sum_is_zero


class FormalFractionTests(test.FrameworkTest):

  """ Tests for `FormalFraction` """

  def setUp(self):
    super(FormalFractionTests, self).setUp()
    self.u1, self.u2 = MultiPoly.variables(2)

  def test_equality_clears_denominators(self):

    """ Test `1/u1 + 1/u2 == (u1 + u2) / (u1 u2)` """

    left = FormalFraction(1, self.u1) + FormalFraction(1, self.u2)
    right = FormalFraction(self.u1 + self.u2, (self.u1, self.u2))
    assert left == right
    assert left != FormalFraction(1, self.u1)

  def test_monic_factors(self):

    """ Test that factor leading coefficients move into the numerator """

    half = FormalFraction(MultiPoly.one(2), self.u1 * 2)
    assert half.factors == (self.u1,)
    assert half == FormalFraction(MultiPoly.constant(Fraction(1, 2), 2),
                                  self.u1)

  def test_reduce(self):

    """ Test cancellation of dividing factors """

    value = FormalFraction(self.u1 * self.u1 - self.u2 * self.u2,
                           (self.u1 - self.u2, self.u1))
    reduced = value.reduce()
    assert reduced.factors == (self.u1,)
    assert not value.is_polynomial()
    assert FormalFraction(self.u1 * self.u2, self.u1).to_poly() == self.u2

  def test_not_polynomial(self):

    """ Test that `to_poly` refuses a true fraction """

    with self.assertRaises(exceptions.NotPolynomial):
      FormalFraction(self.u2, self.u1).to_poly(2)

  def test_zero_denominator(self):

    """ Test zero factors, zero scalars and vanishing evaluations """

    with self.assertRaises(exceptions.ZeroDenominator):
      FormalFraction(self.u1, MultiPoly.zero(2))
    with self.assertRaises(exceptions.ZeroDenominator):
      FormalFraction(self.u1) / 0
    with self.assertRaises(exceptions.ZeroDenominator):
      FormalFraction(1, self.u1 - self.u2).evaluate((2, 2))

  def test_evaluate(self):

    """ Test exact evaluation """

    value = FormalFraction(self.u1 + 1, (self.u1, self.u2))
    assert value.evaluate((2, 3)) == Fraction(1, 2)

  def test_substitute(self):

    """ Test substitution into numerator and factors """

    value = FormalFraction(MultiPoly.one(2), self.u1)
    swapped = value.substitute((self.u2, self.u1))
    assert swapped == FormalFraction(MultiPoly.one(2), self.u2)
    with self.assertRaises(exceptions.ZeroDenominator):
      value.substitute((MultiPoly.zero(2), self.u1))

  def test_render(self):

    """ Test the text form """

    assert str(FormalFraction(self.u2)) == 'u2'
    assert str(FormalFraction(self.u2, self.u1)) == '(u2)/((u1))'


class FractionSumTests(test.FrameworkTest):

  """ Tests for `scalar.fraction_sum_is_zero` """

  def test_partial_fractions(self):

    """ Test `1/(u1 u2) + 1/(u2 u0) + 1/(u0 u1) = 0` with
        `u0 = -u1 - u2` """

    u1, u2 = MultiPoly.variables(2)
    u0 = -u1 - u2
    terms = [FormalFraction(1, (u1, u2)), FormalFraction(1, (u2, u0)),
             FormalFraction(1, (u0, u1))]
    assert fraction_sum_is_zero(terms)
    assert not fraction_sum_is_zero(terms[:2])

  def test_polynomials(self):

    """ Test plain polynomial summands and constants """

    u1, u2 = MultiPoly.variables(2)
    assert fraction_sum_is_zero([u1, -u1, MultiPoly.zero(2)])
    assert fraction_sum_is_zero([])
    assert not fraction_sum_is_zero([u1, u2])

  def test_arity_mismatch(self):

    """ Test that summands in different variable counts are refused """

    with self.assertRaises(exceptions.ArityMismatch):
      fraction_sum_is_zero([MultiPoly.variable(1, 1),
                            MultiPoly.variable(1, 2)])
