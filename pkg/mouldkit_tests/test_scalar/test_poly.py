# -*- coding: utf-8 -*-

"""

  polynomial tests
  ~~~~~~~~~~~~~~~~

  tests for exact commutative polynomials.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
from fractions import Fraction

# hypothesis
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

# mouldkit
from mouldkit import test
from mouldkit import exceptions
from mouldkit.scalar import MultiPoly
from mouldkit.scalar import poly_substitute


## Globals
polys = st.dictionaries(
  st.tuples(st.integers(0, 3), st.integers(0, 3)),
  st.integers(-5, 5), max_size=4).map(lambda terms: MultiPoly(2, terms))


class PolyRingTests(test.FrameworkTest):

  """ Ring laws for `MultiPoly` """

  @settings(max_examples=50, deadline=None)
  @given(polys, polys, polys)
  def test_associative(self, p, q, r):

    """ Test associativity of sum and product """

    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)

  @settings(max_examples=50, deadline=None)
  @given(polys, polys, polys)
  def test_distributive(self, p, q, r):

    """ Test distributivity of product over sum """

    assert p * (q + r) == p * q + p * r

  @settings(max_examples=50, deadline=None)
  @given(polys, polys)
  def test_commutative(self, p, q):

    """ Test commutativity and additive inverses """

    assert p * q == q * p
    assert (p - q) + q == p
    assert (p - p).is_zero

  @settings(max_examples=30, deadline=None)
  @given(polys, polys)
  def test_exact_division(self, p, q):

    """ Test that `divide_exact` recovers a factor of a product """

    if q:
      assert (p * q).divide_exact(q) == p


class PolyTests(test.FrameworkTest):

  """ Tests for `MultiPoly` structure """

  def test_parse_and_render(self):

    """ Test that the canonical text form round-trips """

    text = '2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3'
    p = MultiPoly.parse(text)
    assert p.nvars == 2
    assert str(p) == text
    assert str(MultiPoly.parse('u2-1/2*u1+1', 2)) == '-1/2*u1+u2+1'

  def test_parse_errors(self):

    """ Test rejection of malformed literals """

    for text in ('', 'u0', 'x1', 'u1+', '2**u1', 'u1/0'):
      with self.assertRaises(exceptions.ParseError):
        MultiPoly.parse(text)
    with self.assertRaises(exceptions.ParseError):
      MultiPoly.parse('u3', 2)

  def test_zero_and_constants(self):

    """ Test the zero polynomial and constants """

    assert str(MultiPoly.zero(3)) == '0'
    assert MultiPoly.constant(5, 2).is_constant
    assert MultiPoly.constant(5, 2).constant_term() == 5
    assert not MultiPoly.zero(1)

  def test_primitive(self):

    """ Test content and primitive part """

    p = MultiPoly.parse('1/2*u1+1/3*u2')
    assert p.content() == Fraction(1, 6)
    assert p.primitive() == MultiPoly.parse('3*u1+2*u2')
    assert (-p).primitive() == MultiPoly.parse('-3*u1-2*u2')

  def test_divide_exact(self):

    """ Test exact division and its failure """

    num = MultiPoly.parse('u1^2-u2^2')
    assert num.divide_exact(MultiPoly.parse('u1-u2')) == (
      MultiPoly.parse('u1+u2'))
    assert MultiPoly.parse('u1^2+u2^2').divide_exact(
      MultiPoly.parse('u1-u2')) is None
    with self.assertRaises(exceptions.ZeroDenominator):
      num.divide_exact(MultiPoly.zero(2))

  def test_substitute(self):

    """ Test composition, including a variable-count change """

    p = MultiPoly.parse('u1^2+u2')
    images = [MultiPoly.parse('u2', 2), MultiPoly.parse('-u1-u2', 2)]
    assert p.substitute(images) == MultiPoly.parse('u2^2-u1-u2')
    single = [MultiPoly.parse('u1'), MultiPoly.parse('2*u1')]
    assert p.substitute(single) == MultiPoly.parse('u1^2+2*u1')
    with self.assertRaises(exceptions.ArityMismatch):
      p.substitute(images[:1])

  def test_embed(self):

    """ Test variable renaming into more variables """

    p = MultiPoly.parse('u1*u2^2')
    assert p.embed(4, 1) == MultiPoly.parse('u2*u3^2', 4)
    with self.assertRaises(exceptions.ArityMismatch):
      p.embed(2, 1)

  def test_evaluate(self):

    """ Test exact evaluation """

    p = MultiPoly.parse('u1^2-1/2*u2')
    assert p.evaluate((3, 4)) == 7
    assert p.evaluate(('1/2', 1)) == Fraction(-1, 4)
    with self.assertRaises(exceptions.ArityMismatch):
      p.evaluate((1,))

  def test_homogeneity(self):

    """ Test homogeneous parts and degree """

    p = MultiPoly.parse('u1^3+u1*u2+u2')
    assert p.degree == 3
    assert not p.is_homogeneous()
    assert p.homogeneous_part(2) == MultiPoly.parse('u1*u2')
    assert p.homogeneous_part(3).is_homogeneous()

  def test_poly_substitute(self):

    """ Test composition through the function form """

    u1, u2 = MultiPoly.variables(2)
    p = MultiPoly.parse('u1^2-u2', 2)
    assert poly_substitute(p, [u2, u1]) == MultiPoly.parse('u2^2-u1', 2)
    assert poly_substitute(p, [u1 + u2, u2]) == MultiPoly.parse(
      'u1^2+2*u1*u2+u2^2-u2', 2)
