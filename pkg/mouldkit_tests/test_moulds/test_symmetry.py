# -*- coding: utf-8 -*-

"""

  symmetry tests
  ~~~~~~~~~~~~~~

  tests for alternality, bialternality and the push symmetries of moulds.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# mouldkit
from mouldkit import test
from mouldkit import moulds
from mouldkit.scalar import MultiPoly
from mouldkit.scalar import FormalFraction
from mouldkit.freelie import CPoly
from mouldkit.freelie import NCPoly
from mouldkit.freelie import is_lie
from mouldkit.freelie import lie_bracket
from mouldkit.freelie import to_c_coordinates


class AlternalityTests(test.FrameworkTest):

  """ Tests for `moulds.is_alternal` """

  def test_shuffle_orders(self):

    """ Test that the `(i, r - i)` shuffles number `C(r, i)` """

    assert len(moulds.shuffle_orders(1, 2)) == 2
    assert len(moulds.shuffle_orders(1, 3)) == 3
    assert len(moulds.shuffle_orders(2, 4)) == 6

  def test_non_lie_product(self):

    """ Test that `ma(c1 c2)` fails alternality at depth 2, split 1 """

    P = moulds.ma(CPoly.parse('c1*c2'))
    assert not moulds.is_alternal(P)
    assert moulds.alternality_defect(P) == (2, 1)

  def test_bracket_alternal(self):

    """ Test that `ma([c1, c2])` is alternal """

    assert moulds.is_alternal(moulds.ma(CPoly.parse('c1*c2-c2*c1')))

  def test_depth_one_unconstrained(self):

    """ Test that depth 1 imposes nothing """

    assert moulds.is_alternal(moulds.PolyMould.parse({1: 'u1^2+3'}))

  def test_rational_values(self):

    """ Test alternality on a rational depth-2 value """

    u1, u2 = MultiPoly.variables(2)
    odd = FormalFraction(u1 - u2, u1 * u2)
    even = FormalFraction(u1 + u2, u1 * u2)
    assert moulds.is_alternal(moulds.mould({2: odd}, 2))
    assert not moulds.is_alternal(moulds.mould({2: even}, 2))

  def test_alternal_iff_lie(self):

    """ Test that `ma(p)` is alternal exactly when `p` is Lie """

    a, b = NCPoly.letter('a', 6), NCPoly.letter('b', 6)
    letters = [a, b, lie_bracket(a, b)]
    for _ in range(15):
      x = self.rng.choice(letters)
      y = lie_bracket(self.rng.choice(letters), b)
      element = lie_bracket(x, y) * self.rng.randint(1, 3)
      if self.rng.random() < 0.5:
        element = element + b * lie_bracket(a, b) * self.rng.choice((-1, 1))
      if not element or element.coefficient('a'):
        continue
      lie = is_lie(element)
      alternal = moulds.is_alternal(moulds.ma(to_c_coordinates(element)))
      assert lie == alternal, (
        "Lie test and alternality disagree on %s" % element)

  def test_shuffle_terms(self):

    """ Test the two summands of the depth-2 shuffle of `u1 - u2` """

    u1, u2 = MultiPoly.variables(2)
    terms = moulds.shuffle_terms(FormalFraction(u1 - u2), 2, 1)
    assert len(terms) == 2
    assert sum(terms[1:], terms[0]) == 0


class BialternalityTests(test.FrameworkTest):

  """ Tests for `moulds.is_bialternal` and its delta variant """

  def test_alternal_but_not_bialternal(self):

    """ Test that `u1 - u2` is alternal with a non-alternal swap """

    P = moulds.PolyMould.parse({2: 'u1-u2'})
    assert moulds.is_alternal(P)
    assert moulds.bialternality_constants(P) is None
    assert not moulds.is_bialternal(P)

  def test_depth_one_bialternal(self):

    """ Test that a depth-1 mould is bialternal with no constants needed """

    P = moulds.PolyMould.parse({1: 'u1^4'})
    assert moulds.is_bialternal(P)
    assert moulds.bialternality_constants(P) == {}

  def test_delta_needs_zero_constant(self):

    """ Test that a nonzero empty-sequence value is never delta-bialternal """

    assert not moulds.is_delta_bialternal(moulds.unit_mould(2))

  def test_lie_bracket_of_cs(self):

    """ Test that `ma([c1, c2])` is alternal but not delta-bialternal """

    P = moulds.ma(CPoly.parse('c1*c2-c2*c1'))
    assert moulds.is_alternal(P)
    assert not moulds.is_delta_bialternal(P)


class PushTests(test.FrameworkTest):

  """ Tests for push-invariance and push-neutrality """

  def test_not_push_neutral(self):

    """ Test a depth-2 value whose push orbit does not cancel """

    P = moulds.PolyMould.parse({2: 'u1^2'})
    assert not moulds.is_push_neutral(P)
    assert moulds.push_neutrality_defect(P) == 2

  def test_depth_one_ignored(self):

    """ Test that push-neutrality is only checked from depth 2 """

    assert moulds.is_push_neutral(moulds.PolyMould.parse({1: 'u1^2'}))

  def test_difference_is_neutral(self):

    """ Test that `Q - push(Q)` is push-neutral """

    for _ in range(10):
      assert moulds.is_push_neutral(self.random_push_neutral(4, degree=3))

  def test_orbit_is_invariant(self):

    """ Test that the push orbit sum is push-invariant """

    for _ in range(5):
      Q = self.random_mould(4, degree=3)
      orbit = moulds.push_orbit(Q)
      assert moulds.is_push_invariant(orbit)
      assert moulds.push(orbit) == orbit

  def test_dar_inverse_of_invariant_is_neutral(self):

    """ Test that `dar^-1` of a push-invariant mould is push-neutral """

    for _ in range(5):
      A = self.random_dar_push_invariant(4)
      assert moulds.is_push_neutral(A)
