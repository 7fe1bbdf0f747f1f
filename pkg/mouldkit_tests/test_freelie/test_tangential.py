# -*- coding: utf-8 -*-

"""

  tangential element tests
  ~~~~~~~~~~~~~~~~~~~~~~~~

  tests for the Bernoulli operator and the tangential elements.

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
from mouldkit import freelie
from mouldkit import exceptions
from mouldkit.freelie import NCPoly


class BernoulliOperatorTests(test.FrameworkTest):

  """ Tests for `freelie.ber_apply` """

  def test_low_weight(self):

    """ Test `Ber_b(a) = a + [a, b] / 2` through weight 2 """

    a, b = NCPoly.letter('a', 2), NCPoly.letter('b', 2)
    expected = a + freelie.lie_bracket(a, b) * Fraction(1, 2)
    assert freelie.ber_apply(b, a) == expected

  def test_weight_three(self):

    """ Test the `B_2 / 2` term """

    a, b = NCPoly.letter('a', 3), NCPoly.letter('b', 3)
    value = freelie.ber_apply(b, a)
    term = freelie.ad_pow(b, 2, a) * Fraction(1, 12)
    assert value.homogeneous(3) == term

  def test_needs_cap(self):

    """ Test that an uncapped call is refused """

    with self.assertRaises(exceptions.DomainError):
      freelie.ber_apply(NCPoly.letter('b'), NCPoly.letter('a'))


class TElementTests(test.FrameworkTest):

  """ Tests for `freelie.t_elements` """

  def test_sum_vanishes(self):

    """ Test `t01 + t02 + t12 = 0` through weight 10 """

    t = freelie.t_elements(10)
    assert (t.t01 + t.t02 + t.t12).is_zero

  def test_shapes(self):

    """ Test the leading terms, Lie-ness and the primed element """

    t = freelie.t_elements(6)
    assert t.t12 == NCPoly.parse('ab-ba')
    assert t.t01.homogeneous(1) == NCPoly.parse('-a')
    assert t.t02.homogeneous(1) == NCPoly.parse('a')
    assert t.t01prime == t.t01 + t.t12 * Fraction(1, 2)
    assert all(freelie.is_lie(x) for x in t)

  def test_generates_a(self):

    """ Test that `a` is recovered from `t01` """

    assert freelie.t01_generates_a(7)

  def test_small_cap(self):

    """ Test that a cap below 2 is refused """

    with self.assertRaises(exceptions.DomainError):
      freelie.t_elements(1)
