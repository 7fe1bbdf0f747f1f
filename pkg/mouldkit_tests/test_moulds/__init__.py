# -*- coding: utf-8 -*-

"""

  moulds tests
  ~~~~~~~~~~~~

  tests for moulds, ma, substitution operators, symmetries and flexions.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  __all__ = ('test_mould',
             'test_symmetry',
             'test_flexions')
