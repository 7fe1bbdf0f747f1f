# -*- coding: utf-8 -*-

"""

  freelie tests
  ~~~~~~~~~~~~~

  tests for noncommutative polynomials, Lie tests, c-coordinates and push.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  __all__ = ('test_ncpoly',
             'test_lie',
             'test_coordinates',
             'test_tangential')
