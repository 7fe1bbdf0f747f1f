# -*- coding: utf-8 -*-

"""

  coordinate tests
  ~~~~~~~~~~~~~~~~

  tests for c-coordinates, ``ad(a)`` on them and the push on words.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# mouldkit
from mouldkit import test
from mouldkit import freelie
from mouldkit import exceptions
from mouldkit.freelie import CPoly
from mouldkit.freelie import NCPoly


class CoordinateTests(test.FrameworkTest):

  """ Tests for `expand_c` and `to_c_coordinates` """

  def random_cpoly(self, terms=4, depth=3, index=4):

    """ A random c-polynomial with small indices. """

    return CPoly({tuple(self.rng.randint(1, index) for _ in range(
      self.rng.randint(1, depth))): self.rng.randint(-3, 3)
      for _ in range(terms)})

  def test_expand_letters(self):

    """ Test `c_k = ad(a)^(k-1) (b)` """

    assert freelie.expand_c(CPoly.parse('c1')) == NCPoly.parse('b')
    assert freelie.expand_c(CPoly.parse('c2')) == NCPoly.parse('ab-ba')
    assert freelie.expand_c(CPoly.parse('c3')) == (
      NCPoly.parse('aab-2*aba+baa'))

  def test_coordinates_invert_expansion(self):

    """ Test that `to_c_coordinates` undoes `expand_c` """

    for _ in range(20):
      m = self.random_cpoly()
      assert freelie.to_c_coordinates(freelie.expand_c(m)) == m

  def test_not_representable(self):

    """ Test polynomials outside the c-span """

    for text in ('a', '1+b', 'ab', 'ba'):
      with self.assertRaises(exceptions.NotRepresentable):
        freelie.to_c_coordinates(NCPoly.parse(text))

  def test_ad_a(self):

    """ Test `ad(a)` as the derivation raising every index """

    m = CPoly.parse('c1*c2')
    assert freelie.ad_a_on_c(m) == CPoly.parse('c2*c2+c1*c3')
    a = NCPoly.letter('a')
    for _ in range(10):
      m = self.random_cpoly()
      word = freelie.expand_c(m)
      assert freelie.expand_c(freelie.ad_a_on_c(m)) == a * word - word * a

  def test_solve_ad_a(self):

    """ Test the inverse of `ad(a)` on its image """

    assert freelie.solve_ad_a(CPoly.parse('c3')) == CPoly.parse('c2')
    for _ in range(10):
      m = self.random_cpoly()
      assert freelie.solve_ad_a(freelie.ad_a_on_c(m)) == m
    with self.assertRaises(exceptions.NotInImage):
      freelie.solve_ad_a(CPoly.parse('c1*c2'))


class PushWordTests(test.FrameworkTest):

  """ Tests for the push on words """

  def test_rotation(self):

    """ Test the rotation of a-blocks """

    assert freelie.push_word(NCPoly.parse('ab')) == NCPoly.parse('ba')
    assert freelie.push_word(NCPoly.parse('abb')) == NCPoly.parse('bab')
    assert freelie.push_word(NCPoly.parse('aabab'), 2) == (
      NCPoly.parse('abbaa'))

  def test_order(self):

    """ Test that `r + 1` rotations fix a depth-`r` word """

    for word in ('ab', 'abab', 'aabbab', 'bbb'):
      p = NCPoly.parse(word)
      assert freelie.push_word(p, word.count('b') + 1) == p

  def test_invariance(self):

    """ Test push-invariance on `b` and its failure on `[a, b]` """

    assert freelie.is_push_invariant_series(NCPoly.parse('b'))
    assert not freelie.is_push_invariant_series(NCPoly.parse('ab-ba'))
    assert freelie.push_series is freelie.push_word

  def test_neutrality(self):

    """ Test push-neutrality of differences and failure on a single word """

    p = NCPoly.parse('abb+2*aabab')
    assert not freelie.is_push_neutral_series(p)
    assert freelie.is_push_neutral_series(p - freelie.push_word(p))
    assert freelie.is_push_neutral_series(CPoly.parse('c2'))
