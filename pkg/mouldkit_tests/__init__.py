# -*- coding: utf-8 -*-

"""

  mouldkit: tests
  ~~~~~~~~~~~~~~~

  class structure and testsuite to put mouldkit functionality through
  unit and property-level testing.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

if __debug__:

  # stdlib
  from fractions import Fraction

  # test tools
  from mouldkit import test


  class SanityTest(test.FrameworkTest):

    """ Run some basic sanity tests. """

    def test_fraction_sanity(self):

      """ Test that exact arithmetic stays exact """

      assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)
      assert Fraction(1, 10) * 10 == 1

    def test_assert_sanity(self):

      """ Test `assert` behavior """

      try:
        assert 1 == 2
      except AssertionError:
        pass
      else:  # pragma: no cover
        raise RuntimeError('Assertions are disabled. Something is wrong, '
                           ' as `__debug__` is truthy.')
