# -*- coding: utf-8 -*-

"""

  noncommutative polynomial tests
  ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

  tests for words in ``a, b`` and in the ``c``-letters.

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
from mouldkit.freelie import CPoly
from mouldkit.freelie import NCPoly
from mouldkit.freelie import min_cap
from mouldkit.freelie import substitute


class NCPolyTests(test.FrameworkTest):

  """ Tests for `freelie.NCPoly` """

  def test_parse_and_render(self):

    """ Test the text form in both directions """

    p = NCPoly.parse('2*aab+1/2*b')
    assert p.coefficient('aab') == 2
    assert p.coefficient('b') == Fraction(1, 2)
    assert str(p) == '1/2*b+2*aab'
    assert str(NCPoly.parse('1-ab')) == '1-ab'
    assert str(NCPoly.zero()) == '0'

  def test_parse_errors(self):

    """ Test that malformed literals are refused """

    for text in ('', 'abc', 'a+', '2**a', 'a/0'):
      with self.assertRaises(exceptions.ParseError):
        NCPoly.parse(text)

  def test_cap_truncation(self):

    """ Test that products drop words beyond the cap """

    a, b = NCPoly.letter('a', 3), NCPoly.letter('b', 3)
    assert (a * b * a).coefficient('aba') == 1
    assert (a * b * a * b).is_zero
    assert (a * b).truncate(1).is_zero
    assert min_cap(None, 4, 2) == 2
    assert min_cap(None, None) is None

  def test_products(self):

    """ Test noncommutativity and scalar multiples """

    a, b = NCPoly.letter('a'), NCPoly.letter('b')
    assert a * b != b * a
    assert (a * b) * 3 == 3 * (a * b)
    assert (a + b) * (a + b) == NCPoly.parse('aa+ab+ba+bb')
    assert a - a == 0

  def test_structure(self):

    """ Test weights, depths and graded parts """

    p = NCPoly.parse('a+abb-bab+aab')
    assert p.weights() == [1, 3]
    assert p.depths() == [0, 1, 2]
    assert p.homogeneous(3) == NCPoly.parse('abb-bab+aab')
    assert p.depth_part(2) == NCPoly.parse('abb-bab')
    assert p.max_weight == 3
    assert p.min_weight == 1

  def test_substitute(self):

    """ Test the letter-swapping morphism """

    p = NCPoly.parse('ab-ba')
    images = {'a': NCPoly.letter('b'), 'b': NCPoly.letter('a')}
    assert substitute(p, images) == -p


class CPolyTests(test.FrameworkTest):

  """ Tests for `freelie.CPoly` """

  def test_parse_and_render(self):

    """ Test the text form in both directions """

    p = CPoly.parse('c2*c1-c1*c2')
    assert p.coefficient((2, 1)) == 1
    assert str(p) == 'c2*c1-c1*c2'
    assert p.weights() == [3]
    assert p.depths() == [2]

  def test_parse_errors(self):

    """ Test rejection of bad letters """

    for text in ('c0', 'd1', 'c1**c2'):
      with self.assertRaises(exceptions.ParseError):
        CPoly.parse(text)
    with self.assertRaises(exceptions.DomainError):
      CPoly({(0, 1): 1})

  def test_products_and_cap(self):

    """ Test concatenation products under a weight cap """

    c1, c3 = CPoly.monomial((1,), cap=4), CPoly.monomial((3,), cap=4)
    assert (c1 * c3).coefficient((1, 3)) == 1
    assert (c3 * c3).is_zero
    assert (c1 * c3).homogeneous(4).depth_part(2) == c1 * c3
