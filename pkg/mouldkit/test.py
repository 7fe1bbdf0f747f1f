# -*- coding: utf-8 -*-

"""

  tests
  ~~~~~

  utilities for providing unittest functionality: a base test class that
  forces testing mode and carries a seeded random source, plus builders
  for random polynomials and moulds used by the property tests.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  # stdlib
  import os
  import sys
  import random
  import unittest

  # local
  from . import moulds
  from .util import config


  class FrameworkTest(unittest.TestCase):

    """ Base class for mouldkit's tests. Forces ``MOULDKIT_TESTING`` for the
        duration of the class and hands each test a ``random.Random`` seeded
        from ``MOULDKIT_SEED`` or ``__seed__``; the seed is printed so a
        failing randomized run can be replayed. """

    __seed__ = 0  # class-level default seed
    __orig_testing__ = None  # original MOULDKIT_TESTING flag from environ

    rng = None  # seeded random source, reset per test

    @classmethod
    def setUpClass(cls):  # pragma: no cover

      """ Force ``MOULDKIT_TESTING`` on. """

      cls.__orig_testing__ = 'MOULDKIT_TESTING' in os.environ
      if not cls.__orig_testing__:
        os.environ['MOULDKIT_TESTING'] = 'on'
      super(FrameworkTest, cls).setUpClass()

    @classmethod
    def tearDownClass(cls):  # pragma: no cover

      """ Drop ``MOULDKIT_TESTING`` again if we set it. """

      if not cls.__orig_testing__:
        os.environ.pop('MOULDKIT_TESTING', None)
      super(FrameworkTest, cls).tearDownClass()

    def setUp(self):

      """ Seed a fresh random source for this test. """

      seed = config.Config(random={'seed': self.__seed__}).seed()
      sys.stderr.write('[%s] seed %d\n' % (self.id(), seed))
      self.rng = random.Random(seed)

    ## == Random data == ##
    def random_poly(self, nvars, degree, terms=3, bound=3):

      """ See :py:func:`mouldkit.moulds.random_poly`. """

      return moulds.random_poly(self.rng, nvars, degree, terms, bound)

    def random_mould(self, cap, degree=2, terms=3, constant=False):

      """ See :py:func:`mouldkit.moulds.random_mould`. """

      return moulds.random_mould(self.rng, cap, degree, terms, constant)

    def random_push_neutral(self, cap, degree=2, terms=3):

      """ ``Q - push(Q)`` for a random ``Q``: push-neutral, zero at the
          empty sequence. """

      return moulds.random_push_neutral(self.rng, cap, degree, terms)

    def random_dar_push_invariant(self, cap, degree=2, terms=3):

      """ ``dar^-1`` of a random push-invariant mould built with a factor
          ``u1...ur(-u1-...-ur)``; its ``dar`` is push-invariant. """

      Q = moulds.push_orbit(self.random_mould(cap, degree, terms))
      return moulds.dar_inv(Q)


  __all__ = ('FrameworkTest',)
