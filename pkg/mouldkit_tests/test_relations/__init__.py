# -*- coding: utf-8 -*-

"""

  relations tests
  ~~~~~~~~~~~~~~~

  tests for the depth-2 relation spaces and the regression report.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

if __debug__:

  __all__ = ('test_spaces',
             'test_brackets',
             'test_report')
