# -*- coding: utf-8 -*-

"""

  mouldkit: setup
  ~~~~~~~~~~~~~~~

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__ and __name__ == '__main__':
  from mouldkit import setup; setup.prepare()()  # execute setup routine
