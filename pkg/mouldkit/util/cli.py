# -*- coding: utf-8 -*-

"""

  CLI utils
  ~~~~~~~~~

  toolset for making command-line based tools: nested :py:class:`Tool`
  classes become :py:mod:`argparse` subcommands.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


# stdlib
import sys
import argparse
import textwrap


## Globals
_root_tool = None


class ToolMeta(type):

  """ Utility metaclass that rewrites embedded command classes on-the-fly,
      into :py:mod:`argparse`-provided objects. """

  parsers = {}  # all encountered parsers

  def __new__(mcs, name, bases, properties):

    """ Check to see if we're initializing a new subcommand class, and if we
        are, record its arguments and subtools for later parser assembly.

        :param name: Target class name.
        :param bases: Target class bases.
        :param properties: Class dict properties.

        :returns: Initialized class, registered in :py:attr:`parsers`. """

    _subtools, _arguments = [], []
    for key, value in list(properties.items()):

      # is it a list of arguments?
      if key == 'arguments' and isinstance(value, (list, tuple)):
        for bundle in value:
          flags, config = bundle[0:-1], bundle[-1]
          _arguments.append((flags, config))

      # is it a subtool?
      elif isinstance(value, ToolMeta):
        _subtools.append(value)

      elif not key.startswith('__'):
        if callable(value) and not isinstance(value, (
              classmethod, staticmethod, type)):
          properties[key] = staticmethod(value)

    klass = super(ToolMeta, mcs).__new__(mcs, name, bases, properties)

    mcs.parsers[klass] = {
      'name': (properties.get('name') or name).lower(),
      'help': textwrap.dedent(properties.get('__doc__') or '').strip(),
      'subtools': _subtools,
      'arguments': _arguments}
    return klass


class Tool(object, metaclass=ToolMeta):

  """ Parent class for command-line tools. Subclasses declare ``arguments``
      as ``(flag..., config)`` bundles and nest further ``Tool`` classes as
      subcommands. """

  name = None  # command name, defaults to the lowercased class name
  parser = None  # local parser for this tool
  arguments = None  # arguments for this tool

  def __init__(self, parser=None):

    """ Build the :py:mod:`argparse` tree from this tool downward.

        :param parser: Existing ``argparse.ArgumentParser`` to populate, or
          ``None`` to create a root parser for this tool. """

    global _root_tool

    config = ToolMeta.parsers[self.__class__]

    if parser is None:
      parser = argparse.ArgumentParser(prog=config['name'], **{
        'description': config['help'] if sys.flags.optimize < 2 else ''})
      _root_tool = parser

    self.parser = parser
    for flags, _config in config['arguments']:
      parser.add_argument(*flags, **_config)

    if config['subtools']:
      commands = parser.add_subparsers(dest='subcommand', title='commands')
      commands.required = True
      for impl in config['subtools']:
        sub_config = ToolMeta.parsers[impl]
        subparser = commands.add_parser(sub_config['name'], **{
          'conflict_handler': 'resolve',
          'help': sub_config['help'].splitlines()[0] if (
            sub_config['help']) else None,
          'description': sub_config['help']})
        subparser.set_defaults(func=impl.execute)
        setattr(self, sub_config['name'].replace('-', '_'), impl(subparser))

  @classmethod
  def execute(cls, arguments):

    """ Execute the local ``Tool`` subclass against parsed ``arguments``.

        :param arguments: :py:class:`argparse.Namespace` from ``parse_args``.

        :raises NotImplementedError: Always, unless overridden.

        :return: Must return a truthy value to indicate success, or a falsy
          value otherwise. Failure values produce a Unix exit code of ``1``,
          versus ``0`` for success. """

    raise NotImplementedError('Command line tool "%s"'
                              ' is not implemented.' % repr(cls))

  def __call__(self, argv=None):

    """ Parse ``argv`` and dispatch to the selected tool.

        :param argv: Argument list, defaulting to ``sys.argv[1:]``.

        :returns: Unix return code, suitable for passing to ``sys.exit()``. """

    arguments = self.parser.parse_args(argv)
    handler = getattr(arguments, 'func', None) or self.execute
    return 0 if handler(arguments) else 1


__all__ = ('Tool', 'ToolMeta')
