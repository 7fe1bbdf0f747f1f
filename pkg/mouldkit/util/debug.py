# -*- coding: utf-8 -*-

"""

  debug utils
  ~~~~~~~~~~~

  named loggers for mouldkit's modules. diagnostics always go to
  stderr, so stdout stays clean for CLI results.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import sys

# 3rd party / stdlib
try:
  # noinspection PyPackageRequirements
  import logbook as logging
  _LOGBOOK = True
except ImportError:  # pragma: no cover
  import logging
  logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                      format='%(message)s')
  _LOGBOOK = False

# local
from .config import Config


def level():

  """ Resolve the active log level from config.

      :returns: ``DEBUG`` if debug mode is switched on, ``WARNING``
        otherwise. """

  return logging.DEBUG if Config().debug() else logging.WARNING


def Logger(name):

  """ Build a named logger, preferring :py:mod:`logbook`.

      :param name: Dotted logger name, usually the module's ``__name__``.

      :returns: A logger exposing ``debug``, ``info``, ``warning`` and
        ``error``. """

  if _LOGBOOK:
    return logging.Logger(name, level=level())
  logger = logging.getLogger(name)  # pragma: no cover
  logger.setLevel(level())  # pragma: no cover
  return logger  # pragma: no cover


__all__ = ('Logger', 'level')
