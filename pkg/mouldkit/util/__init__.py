# -*- coding: utf-8 -*-

"""

  util
  ~~~~

  low-level utilities and miscellaneous tools that don't really
  belong anywhere special.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import sys

# submodules
from .cli import *
from .debug import *
from .config import *


def say(*args, **kwargs):

  """ Write the positional arguments, space-joined, as one line on stdout.

      :param args: Values to stringify and print.
      :param kwargs: ``stream`` overrides the target stream.

      :returns: ``None``. """

  stream = kwargs.get('stream') or sys.stdout
  stream.write(' '.join(str(x) for x in args) + '\n')
