# -*- coding: utf-8 -*-

"""

  util tests
  ~~~~~~~~~~

  tests for mouldkit's utilities and command-line front end.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

if __debug__:

  __all__ = ('test_config',
             'test_debug',
             'test_cli')
