# -*- coding: utf-8 -*-

"""

  test runner
  ~~~~~~~~~~~

  discovers mouldkit's tests, then runs them.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:  # pragma: no cover

  # stdlib
  import os
  import sys


  if __name__ == '__main__':  # pragma: no cover
    os.environ.setdefault('MOULDKIT_TESTING', 'on')
    import pytest
    sys.exit(int(pytest.main([os.path.dirname(os.path.abspath(__file__))] +
                             sys.argv[1:])))
