# -*- coding: utf-8 -*-

"""

  mouldkit CLI
  ~~~~~~~~~~~~

  command-line front end: one verb per capability, results on stdout
  (JSON with ``--json``, tab-separated tables otherwise), diagnostics on
  stderr. exit status is ``0`` on success or a passing check, ``1`` on a
  failing check or computation error, ``2`` on a usage error.

  Example:

    $ mouldkit dims eds2 --max-weight 31
    $ mouldkit check alternal --mould-file m.json
    $ mouldkit verify paper --json

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import os
import sys
import json
import random
from concurrent import futures

# local
from . import codec
from . import moulds
from . import relations
from . import eisenstein
from .util import say
from .util import Tool
from .util import debug
from .util import config
from .freelie import CPoly
from .freelie import NCPoly
from .freelie import is_lie
from .exceptions import Error
from .exceptions import UsageError
from .exceptions import ParseError


## Globals
logging = debug.Logger('mouldkit.cli')

COMMON = (
  ('--json', {'action': 'store_true', 'help': 'emit JSON on stdout'}),
  ('--max-weight', {'type': int, 'default': None, 'help': 'weight cap'}),
  ('--max-depth', {'type': int, 'default': None, 'help': 'depth cap'}),
  ('--q-order', {'type': int, 'default': None, 'help': 'q-expansion order'}),
  ('--seed', {'type': int, 'default': None, 'help': 'seed for random data'}),
  ('--jobs', {'type': int, 'default': 1, 'help': 'worker processes'}))

MOULD_INPUT = (
  ('--mould-file', {'default': None, 'help': 'mould JSON file'}),
  ('--mould', {'default': None, 'help': 'inline mould JSON'}))


## == Helpers == ##
def _emit(arguments, payload, lines):

  """ Write ``payload`` as JSON, or ``lines`` as text. """

  if arguments.json:
    say(codec.dumps(payload))
  else:
    for line in lines:
      say(line)


def _setup(arguments):

  """ Resolve the seed and log the run's caps. """

  seed = config.Config().seed(arguments.seed)
  logging.debug('seed %d, weight cap %s, depth cap %s, q-order %s.' % (
    seed, arguments.max_weight, arguments.max_depth, arguments.q_order))
  return seed


def load_mould(source, max_depth=None):

  """ Read a mould from a JSON file path or inline JSON text.

      :raises ParseError: If ``source`` is neither. """

  if source is None:
    raise UsageError('a mould is required (--mould-file or --mould)')
  if os.path.isfile(source):
    with open(source, 'r') as handle:
      source = handle.read()
  P = codec.loads(source, 'mould')
  return P if max_depth is None else P.with_cap(max_depth)


def _load_element(source):
  if os.path.isfile(source):
    with open(source, 'r') as handle:
      return codec.loads(handle.read(), 'ncpoly')
  try:
    return NCPoly.parse(source)
  except ParseError:
    return codec.loads(source, 'ncpoly')


def parse_index(text):

  """ ``"0,2"`` to ``(0, 2)``; the empty string is the empty index. """

  try:
    return tuple(int(k) for k in text.split(',') if k.strip())
  except ValueError:
    raise ParseError('index', repr(text))


def _table(function, weights, jobs):

  """ ``function`` over ``weights``, in order, on ``jobs`` processes. """

  if jobs and jobs > 1:
    with futures.ProcessPoolExecutor(max_workers=jobs) as pool:
      return list(pool.map(function, weights))
  return [function(n) for n in weights]


def _odd_weights(arguments, default):
  top = arguments.max_weight or default
  return list(range(5, top + 1, 2))


def _rank_row(n):
  return relations.eps_bracket_rank_table(n, n_min=n)[0]


def _mould_check(name, predicate, detail=None):

  """ Build the ``execute`` of a mould-predicate check verb. """

  def execute(arguments):
    _setup(arguments)
    P = load_mould(arguments.mould_file or arguments.mould,
                   arguments.max_depth)
    passed = bool(predicate(P))
    payload = {'check': name, 'pass': passed}
    if detail is not None:
      payload['detail'] = detail(P)
    _emit(arguments, payload, ['%s\t%s' % (name, 'pass' if passed else (
      'fail'))])
    return passed
  return execute


def _op(function, arity):

  """ Build the ``execute`` of a mould operation verb. """

  def execute(arguments):
    _setup(arguments)
    inputs = [load_mould(source, arguments.max_depth)
              for source in arguments.moulds]
    if len(inputs) != arity:
      raise UsageError('expected %d moulds, got %d' % (arity, len(inputs)))
    result = function(arguments, *inputs)
    _emit(arguments, result, [str(result)])
    return True
  return execute


class Mouldkit(Tool):

  """ Exact mould calculus, special derivations and iterated Eisenstein
      integrals. """

  name = 'mouldkit'

  class MA(Tool):

    """ Mould of a c-polynomial, e.g. ``c2*c1-c1*c2``. """

    name = 'ma'

    arguments = COMMON + (
      ('element', {'help': 'c-polynomial literal'}),)

    def execute(arguments):
      _setup(arguments)
      P = moulds.ma(CPoly.parse(arguments.element), arguments.max_depth)
      _emit(arguments, P, [str(P)])
      return True

  class BracketEps(Tool):

    """ Depth-2 mould of ``[eps_2j, eps_2k](a)``. """

    name = 'bracket-eps'

    arguments = COMMON + (
      ('twoj', {'type': int, 'help': 'even index 2j'}),
      ('twok', {'type': int, 'help': 'even index 2k'}))

    def execute(arguments):
      _setup(arguments)
      pair = (arguments.twoj, arguments.twok)
      P = relations.eps_bracket_mould(*pair, cap=arguments.max_weight)
      _emit(arguments, {'pair': list(pair),
                        'weight': relations.bracket_weight(*pair),
                        'mould': P}, [str(P.poly(2))])
      return True

  class Check(Tool):

    """ Symmetry and Lie checks; exit status is the check result. """

    class Alternal(Tool):

      """ All shuffle sums vanish. """

      arguments = COMMON + MOULD_INPUT

      execute = _mould_check('alternal', moulds.is_alternal,
                             moulds.alternality_defect)

    class Bialternal(Tool):

      """ Alternal with alternal swap up to a constant mould. """

      arguments = COMMON + MOULD_INPUT

      execute = _mould_check('bialternal', moulds.is_bialternal,
                             moulds.bialternality_constants)

    class DeltaBialternal(Tool):

      """ Bialternal after the inverse of Delta. """

      name = 'delta-bialternal'
      arguments = COMMON + MOULD_INPUT

      execute = _mould_check('delta-bialternal', moulds.is_delta_bialternal)

    class PushInvariant(Tool):

      """ Fixed by push. """

      name = 'push-invariant'
      arguments = COMMON + MOULD_INPUT

      execute = _mould_check('push-invariant', moulds.is_push_invariant)

    class PushNeutral(Tool):

      """ Push orbits sum to zero in every depth. """

      name = 'push-neutral'
      arguments = COMMON + MOULD_INPUT

      execute = _mould_check('push-neutral', moulds.is_push_neutral)

    class AratNeutral(Tool):

      """ ``arat(P) A`` stays push-neutral on seeded random pairs, ``A``
          alternately an even ``f_n`` and ``Q - push(Q)``. """

      name = 'arat-neutral'
      arguments = COMMON + (
        ('--samples', {'type': int, 'default': 20,
                       'help': 'random pairs to draw'}),)

      def execute(arguments):
        seed = _setup(arguments)
        rng, depth = random.Random(seed), arguments.max_depth or 4
        family = [relations.f_mould(n).with_cap(depth)
                  for n in range(2, depth + 1, 2)]
        failures = []
        for i in range(arguments.samples):
          P = moulds.random_mould(rng, depth)
          if family and not i % 2:
            A = family[(i // 2) % len(family)]
          else:
            A = moulds.random_push_neutral(rng, depth, degree=3)
          if not moulds.is_push_neutral(moulds.arat(P, A)):
            logging.warning('sample %d (seed %d) loses push-neutrality.' % (
              i, seed))
            failures.append(i)
        passed = not failures
        _emit(arguments, {'check': 'arat-neutral', 'pass': passed,
                          'seed': seed, 'depth': depth,
                          'samples': arguments.samples,
                          'failures': failures},
              ['arat-neutral\t%s\tseed %d' % (
                'pass' if passed else 'fail', seed)])
        return passed

    class Lie(Tool):

      """ A noncommutative polynomial is a Lie element. """

      arguments = COMMON + (
        ('element', {'help': 'polynomial literal, JSON, or JSON file'}),)

      def execute(arguments):
        _setup(arguments)
        passed = is_lie(_load_element(arguments.element))
        _emit(arguments, {'check': 'lie', 'pass': passed},
              ['lie\t%s' % ('pass' if passed else 'fail')])
        return passed

  class Dims(Tool):

    """ Dimension and rank tables of the depth-2 relation systems. """

    class Eds2(Tool):

      """ Antisymmetric push-invariant depth-2 solutions per weight. """

      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        return _dimension_table(arguments, relations.eds2_space)

    class Fs2(Tool):

      """ Depth-2 Fay-shuffle solutions per weight. """

      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        return _dimension_table(arguments, relations.fs2_space)

    class RankTable(Tool):

      """ Brackets, rank and relations of the eps-bracket moulds. """

      name = 'rank-table'
      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        rows = _table(_rank_row, _odd_weights(arguments, 21), arguments.jobs)
        passed = all(row.matches for row in rows)
        _emit(arguments, {'pass': passed, 'rows': rows}, [
          'n\tbrackets\trank\trelations\tmatches'] + [
          '\t'.join(str(x) for x in row) for row in rows])
        return passed

  class Eisenstein(Tool):

    """ Iterated Eisenstein integrals. """

    class Gseries(Tool):

      """ Every iterated integral of index weight up to ``--max-weight``. """

      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        indices = eisenstein.index_family(arguments.max_weight or 6)
        expansions = [(index, eisenstein.eisenstein_integral(
          index, arguments.q_order)) for index in indices]
        _emit(arguments, [{'index': list(index), 'expansion': series}
                          for index, series in expansions],
              _csv(expansions))
        return True

    class Iter(Tool):

      """ One iterated integral, index written ``0,2``. """

      arguments = COMMON + (
        ('index', {'help': 'comma-separated index'}),)

      def execute(arguments):
        _setup(arguments)
        index = parse_index(arguments.index)
        series = eisenstein.eisenstein_integral(index, arguments.q_order)
        _emit(arguments, {'index': list(index), 'expansion': series},
              _csv([(index, series)]))
        return True

    class Rank(Tool):

      """ Rank of the iterated integrals of weight up to ``--max-weight``. """

      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        indices = eisenstein.index_family(arguments.max_weight or 6)
        found = eisenstein.rank_check(indices, arguments.q_order)
        passed = found == len(indices)
        _emit(arguments, {'pass': passed, 'rank': found,
                          'count': len(indices)},
              ['rank\t%d\tof\t%d' % (found, len(indices))])
        return passed

  class Verify(Tool):

    """ Regression reports. """

    class Paper(Tool):

      """ Recompute every displayed value; exit 0 if all pass. """

      arguments = COMMON

      def execute(arguments):
        _setup(arguments)
        report = relations.verify_paper_examples(arguments.max_weight)
        _emit(arguments, report, ['sigma\t%s' % report['sigma']] + [
          '%s\t%s\t%s' % (r['item'], r['expected_source'],
                          'pass' if r['pass'] else 'FAIL')
          for r in report['items']])
        return report['pass']

  class Op(Tool):

    """ Mould operations on JSON moulds. """

    class Mu(Tool):

      """ ``mu(P, Q)``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P, Q: moulds.mu(P, Q), 2)

    class Lu(Tool):

      """ ``lu(P, Q)``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P, Q: moulds.lu(P, Q), 2)

    class Push(Tool):

      """ ``push(P)``, ``--times`` fold. """

      arguments = COMMON + (
        ('moulds', {'nargs': '+'}),
        ('--times', {'type': int, 'default': 1}))
      execute = _op(lambda arguments, P: moulds.push(P, arguments.times), 1)

    class Swap(Tool):

      """ ``swap(P)``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P: moulds.swap(P), 1)

    class Dar(Tool):

      """ ``dar(P)``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P: moulds.dar(P), 1)

    class Delta(Tool):

      """ ``Delta(P)``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P: moulds.delta(P), 1)

    class Arit(Tool):

      """ ``arit(P) A``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P, A: moulds.arit(P, A), 2)

    class Arat(Tool):

      """ ``arat(P) A``. """

      arguments = COMMON + (('moulds', {'nargs': '+'}),)
      execute = _op(lambda arguments, P, A: moulds.arat(P, A), 2)

    class Darit(Tool):

      """ ``Darit(P) A``, under convention ``--convention`` (0 to 3). """

      arguments = COMMON + (
        ('moulds', {'nargs': '+'}),
        ('--convention', {'type': int, 'default': 0, 'choices': range(4)}))
      execute = _op(lambda arguments, P, A: moulds.darit(
        P, A, moulds.CONVENTIONS[arguments.convention]), 2)


def _dimension_table(arguments, space):

  """ Emit one :py:class:`DimensionReport` row per odd weight. """

  top = config.Config().tables['max_weight']
  reports = _table(space, _odd_weights(arguments, top), arguments.jobs)
  passed = all(report.matches for report in reports)
  payload = {'pass': passed, 'rows': [
    {'weight': r.weight, 'computed': r.computed, 'formula': r.formula,
     'matches': r.matches, 'basis': [str(p) for p in r.basis]}
    for r in reports]}
  _emit(arguments, payload, ['n\tcomputed\tformula\tmatches'] + [
    '%d\t%d\t%d\t%s' % (r.weight, r.computed, r.formula, r.matches)
    for r in reports])
  return passed


def _csv(expansions):

  """ ``index,n,m,coefficient`` lines. """

  lines = ['index,n,m,coefficient']
  for index, series in expansions:
    label = '"%s"' % ','.join(str(k) for k in index)
    lines.extend('%s,%d,%d,%s' % (label, n, m, c) for (n, m), c in (
      series.items()))
  return lines


def main(argv=None):

  """ Console entry point.

      :param argv: Arguments, defaulting to ``sys.argv[1:]``.

      :returns: Unix exit code. """

  try:
    return Mouldkit()(argv)
  except UsageError as exc:
    say('mouldkit: %s' % exc, stream=sys.stderr)
    return 2
  except (Error, json.JSONDecodeError) as exc:
    say('mouldkit: %s' % exc, stream=sys.stderr)
    return 1
  except SystemExit as exc:
    return exc.code if isinstance(exc.code, int) else 2


__all__ = ('Mouldkit', 'main', 'load_mould', 'parse_index')
