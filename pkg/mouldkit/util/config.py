# -*- coding: utf-8 -*-

"""

  config utils
  ~~~~~~~~~~~~

  truncation caps, table bounds and seeds, with environment overrides.
  CLI flags win over environment, environment wins over defaults.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import os
import copy


## Globals
_TRUTHY = ('1', 'yes', 'on', 'true')

DEFAULTS = {
  'caps': {
    'weight': 12,  # free Lie algebra / derivation weight cap
    'depth': 5,  # mould depth cap
    'q_order': 30},  # q-expansion order N

  'tables': {
    'max_weight': 31},  # dimension tables run over odd n <= this

  'random': {
    'seed': 0,
    'trials': 100}}


class Config(object):

  """ Holds named configuration blocks (``caps``, ``tables``, ``random``),
      falling back to :py:data:`DEFAULTS` block by block. """

  __dev__ = None  # debug mode, forced

  blocks = None  # wrapped config blocks

  ## -- Internals -- ##
  def __init__(self, **blocks):

    """ Initialize a config, overlaying ``blocks`` onto the defaults.

        :param blocks: Keyword blocks, each a ``dict`` of settings. Settings
          in a given block replace only the keys they name. """

    self.blocks = copy.deepcopy(DEFAULTS)
    for name, block in blocks.items():
      self.blocks.setdefault(name, {}).update(block)

  ### === Public Attributes === ###

  # block shortcuts
  caps = property(lambda self: self.blocks['caps'])
  tables = property(lambda self: self.blocks['tables'])
  random = property(lambda self: self.blocks['random'])

  debug = lambda self: (
    any((self.__dev__,
         os.environ.get('MOULDKIT_DEBUG', '').lower() in _TRUTHY,
         self.blocks.get('debug', False))))

  testing = lambda self: (
    os.environ.get('MOULDKIT_TESTING', '').lower() in _TRUTHY)

  ### === Public Methods === ###
  def seed(self, override=None):

    """ Resolve the seed for randomized checks.

        :param override: Explicit seed (from ``--seed``), used when not
          ``None``.

        :returns: ``int`` seed: the override, else ``MOULDKIT_SEED`` from the
          environment, else the configured default. """

    if override is not None:
      return int(override)
    if os.environ.get('MOULDKIT_SEED'):
      return int(os.environ['MOULDKIT_SEED'])
    return int(self.random['seed'])

  def get(self, key, default=None):

    """ Look up a setting by dotted path, like ``caps.weight``.

        :param key: Block name, or ``block.setting``.
        :param default: Value returned when the path is missing.

        :returns: The setting, or ``default``. """

    block, _, name = key.partition('.')
    value = self.blocks.get(block, None)
    if name:
      return value.get(name, default) if isinstance(value, dict) else default
    return default if value is None else value


__all__ = ('Config', 'DEFAULTS')
