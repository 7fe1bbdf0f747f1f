# -*- coding: utf-8 -*-

"""

  flexion tests
  ~~~~~~~~~~~~~

  tests for ``arit``, ``arat`` and ``Darit``, the sign convention tying them
  to derivations, and the push-neutrality they preserve.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# mouldkit
from mouldkit import test
from mouldkit import moulds
from mouldkit import exceptions
from mouldkit.freelie import CPoly
from mouldkit.freelie import NCPoly
from mouldkit.freelie import expand_c
from mouldkit.freelie import lie_bracket
from mouldkit.freelie import lie_basis_matrix
from mouldkit.relations import f_mould
from mouldkit.derivations import epsilon
from mouldkit.derivations import epsilon_tilde


class AritTests(test.FrameworkTest):

  """ Tests for `moulds.arit` """

  def test_depth_two_by_hand(self):

    """ Test `arit` of depth-1 moulds into depth 2 """

    P = moulds.PolyMould.parse({1: 'u1'}, cap=2)
    A = moulds.PolyMould.parse({1: 'u1^2'}, cap=2)

    # A(u1 + u2) P(u1) - A(u1 + u2) P(u2)
    expected = moulds.PolyMould.parse({2: 'u1^3+u1^2*u2-u1*u2^2-u2^3'})
    assert moulds.arit(P, A) == expected

  def test_zero_argument(self):

    """ Test that `arit` vanishes on a zero mould """

    P = self.random_mould(3)
    assert moulds.arit(P, moulds.zero_mould(3)).is_zero
    assert moulds.arit(moulds.zero_mould(3), P).is_zero

  def test_derivation_of_mu(self):

    """ Test that `arit(P)` is a derivation of `mu` """

    for _ in range(5):
      P, A, B = (self.random_mould(4) for _ in range(3))
      left = moulds.arit(P, moulds.mu(A, B))
      right = moulds.mu(moulds.arit(P, A), B) + moulds.mu(
        A, moulds.arit(P, B))
      assert left == right

  def test_derivation_of_lu(self):

    """ Test that `arit(P)` is a derivation of `lu` """

    for _ in range(100):
      P, A, B = (self.random_mould(4) for _ in range(3))
      left = moulds.arit(P, moulds.lu(A, B))
      right = moulds.lu(moulds.arit(P, A), B) + moulds.lu(
        A, moulds.arit(P, B))
      assert left == right


class AratTests(test.FrameworkTest):

  """ Tests for `moulds.arat` and its sign variants """

  def test_direct_form(self):

    """ Test `lu - arit` against the sum over all decompositions """

    for _ in range(10):
      P, A = self.random_mould(4, degree=3), self.random_mould(4, degree=3)
      assert moulds.arat(P, A) == moulds.arat_direct(P, A)

  def test_conventions(self):

    """ Test that the four sign conventions are distinct combinations """

    assert len(set(moulds.CONVENTIONS)) == 4
    assert moulds.MADER == moulds.Convention(-1, 1)
    P, A = self.random_mould(3), self.random_mould(3)
    assert moulds.arat_with(P, A) == moulds.arat(P, A)
    assert moulds.arat_with(P, A, moulds.Convention(1, -1)) == (
      -moulds.arat(P, A))


class DaritTests(test.FrameworkTest):

  """ Tests for `moulds.darit` """

  def test_requires_zero_constant(self):

    """ Test that `Darit(P)` needs `P(empty) = 0` """

    with self.assertRaises(exceptions.DomainError):
      moulds.darit(moulds.unit_mould(2), self.random_mould(2))

  def test_demand_polynomial(self):

    """ Test that a rational result is refused on demand """

    P = moulds.PolyMould.parse({1: 'u1'}, cap=2)
    A = moulds.PolyMould.parse({1: '1'}, cap=2)
    result = moulds.darit(P, A)
    assert isinstance(result, moulds.RatMould)
    with self.assertRaises(exceptions.NotPolynomial):
      moulds.darit(P, A, demand_polynomial=True)

  def test_mader_convention(self):

    """ Test that exactly one convention makes `ma` intertwine derivations
        with `Darit` """

    cap = 12
    elements = [NCPoly.letter('b', cap)]
    for weight in range(2, 7):
      elements.extend(f.truncate(cap) for f in lie_basis_matrix(weight)[1])
    assert len(elements) == 22
    derivations = (epsilon_tilde(0, cap), epsilon(4, cap), epsilon(6, cap))
    cases = [(D, f) for D in derivations for f in elements]
    assert moulds.mader_convention(cases) == moulds.MADER

  def test_mader_convention_small(self):

    """ Test the convention fit on a few hand-built brackets """

    cap = 10
    a, b = NCPoly.letter('a', cap), NCPoly.letter('b', cap)
    c2 = lie_bracket(a, b)
    elements = (b, c2, lie_bracket(b, c2))
    cases = [(epsilon(twok, cap), f) for twok in (4, 6) for f in elements]
    assert moulds.mader_convention(cases) == moulds.MADER

  def test_mader_convention_not_lie(self):

    """ Test that a non-Lie input to the convention fit is refused """

    cap = 8
    a, b = NCPoly.letter('a', cap), NCPoly.letter('b', cap)
    with self.assertRaises(exceptions.NotLieLike):
      moulds.mader_convention([(epsilon(4, cap), a * b)])
    with self.assertRaises(exceptions.NotLieLike):
      moulds.mader_convention([(epsilon(4, cap), b + NCPoly.one(cap))])

  def test_derivation_identity(self):

    """ Test the intertwining identity directly for `eps_4` on `c3` """

    cap = 9
    D, f = epsilon(4, cap), expand_c(CPoly.parse('c3', cap))
    left = moulds.ma(D(f), 2)
    right = moulds.darit(moulds.ma(D.val_a, 2), moulds.ma(f, 2))
    assert left == right


class PushNeutralityPreservationTests(test.FrameworkTest):

  """ Tests that `arat` and `Darit` preserve push-neutrality """

  def test_arat_polynomial(self):

    """ Test `arat(P) A` push-neutral for polynomial push-neutral `A` at
        depth 5, drawn alternately from `f_2`, `f_4` and `Q - push(Q)` """

    family = (f_mould(2).with_cap(5), f_mould(4).with_cap(5))
    for i in range(100):
      P = self.random_mould(5, degree=2)
      if i % 2:
        A = self.random_push_neutral(5, degree=3)
      else:
        A = family[(i // 2) % 2]
      assert moulds.is_push_neutral(A)
      assert moulds.is_push_neutral(moulds.arat(P, A))

  def test_arat_rational(self):

    """ Test `arat(P) A` push-neutral for `A` the `dar^-1` of a
        push-invariant mould """

    for _ in range(50):
      P = self.random_mould(4, degree=2)
      A = self.random_dar_push_invariant(4, degree=2)
      assert moulds.is_push_neutral(A)
      assert moulds.is_push_neutral(moulds.arat(P, A))

  def test_other_conventions_break(self):

    """ Test that flipping the sign of `lu` loses push-neutrality """

    P = moulds.PolyMould.parse({1: 'u1^2'}, cap=2)
    Q = moulds.PolyMould.parse({1: 'u1^3'}, cap=2)
    A = Q - moulds.push(Q)
    flipped = moulds.arat_with(P, A, moulds.Convention(-1, -1))
    assert moulds.is_push_neutral(moulds.arat(P, A))
    assert not moulds.is_push_neutral(flipped)

  def test_darit(self):

    """ Test `dar^-1 Darit(P) A` push-neutral when `dar^-1 A` is, with `A`
        alternately `dar(f_4)` and a push orbit """

    even = moulds.dar(f_mould(4))
    for i in range(100):
      P = self.random_mould(4, degree=2)
      if i % 2:
        A = moulds.push_orbit(self.random_mould(4, degree=2))
      else:
        A = even
      assert moulds.is_push_neutral(moulds.dar_inv(A))
      image = moulds.darit(P, A)
      assert moulds.is_push_neutral(moulds.dar_inv(image))
