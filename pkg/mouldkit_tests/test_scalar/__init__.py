# -*- coding: utf-8 -*-

"""

  scalar tests
  ~~~~~~~~~~~~

  tests for exact scalars, polynomials, formal fractions and q-series.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  __all__ = ('test_rational',
             'test_poly',
             'test_fraction',
             'test_qseries')
