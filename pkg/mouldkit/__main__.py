# -*- coding: utf-8 -*-

"""

  runscript
  ~~~~~~~~~

  accepts calls to ``mouldkit`` as a module, via ``python -m mouldkit``.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import sys

# local
from .cli import main


sys.exit(main())
