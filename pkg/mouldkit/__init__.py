# -*- coding: utf-8 -*-

"""

  mouldkit
  ~~~~~~~~

  exact arithmetic for mould calculus, the free Lie algebra on two
  generators with its special derivations, and regularized iterated
  Eisenstein integrals.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

__version__ = (0, 1, 0)


# submodules
from . import util
from . import codec
from . import exceptions
from . import scalar
from . import freelie
from . import derivations
from . import moulds
from . import eisenstein
from . import relations

# kernel types
from .scalar import Rational, MultiPoly, FormalFraction, QSeriesL
from .freelie import NCPoly, CPoly
from .derivations import Derivation
from .moulds import Mould, PolyMould, RatMould, ConstantMould
from .relations import RationalMatrix, DimensionReport


__all__ = (
  'util',
  'codec',
  'exceptions',
  'scalar',
  'freelie',
  'derivations',
  'moulds',
  'eisenstein',
  'relations',
  'Rational',
  'MultiPoly',
  'FormalFraction',
  'QSeriesL',
  'NCPoly',
  'CPoly',
  'Derivation',
  'Mould',
  'PolyMould',
  'RatMould',
  'ConstantMould',
  'RationalMatrix',
  'DimensionReport')
