# -*- coding: utf-8 -*-

"""

  derivations tests
  ~~~~~~~~~~~~~~~~~

  tests for derivations killing [a, b] and the special derivations.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  __all__ = ('test_derivation',
             'test_exponential')
