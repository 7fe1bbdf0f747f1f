# -*- coding: utf-8 -*-

"""

  cli tests
  ~~~~~~~~~

  tests for the tool classes and the ``mouldkit`` command line.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import io
import json
import contextlib
from unittest import mock

# mouldkit
from mouldkit import test
from mouldkit import cli
from mouldkit import codec
from mouldkit import moulds
from mouldkit.util import cli as tools
from mouldkit.exceptions import ParseError


class CLIToolsTests(test.FrameworkTest):

  """ Tests for `tools.Tool` """

  def test_construct(self):

    """ Test construction of a simple CLI tool """

    class Sample(tools.Tool):

      """ sample CLI tool """

      def execute(arguments):

          """ execution flow """

          return True

    assert isinstance(Sample.__dict__['execute'], staticmethod), (
      "by default tool execution methods should be static")
    return Sample

  def test_construct_subtool(self):

    """ Test construction of a CLI tool with subtools """

    class Sample(tools.Tool):

      """ sample CLI tool """

      class Subsample(tools.Tool):

        """ sub-sample CLI tool """

        arguments = (
          ('--fail', '-f', {'action': 'store_true'}),)

        @classmethod
        def execute(cls, arguments):

            """ sample """

            return not arguments.fail

    assert isinstance(Sample.Subsample.__dict__['execute'], classmethod), (
      "classmethods should be allowed as tool execution flows, instead got"
      " '%s'" % repr(Sample.Subsample.execute))
    return Sample

  def test_run(self):

    """ Test that a truthy result maps to exit code 0 """

    assert self.test_construct()()([]) == 0

  def test_run_subtool(self):

    """ Test dispatch to a subtool and its exit codes """

    tool = self.test_construct_subtool()()
    assert tool(['subsample']) == 0
    assert tool(['subsample', '-f']) == 1

  def test_not_implemented(self):

    """ Test that a tool without `execute` refuses to run """

    class Bare(tools.Tool):

      """ bare CLI tool """

    with self.assertRaises(NotImplementedError):
      Bare()([])


class MouldkitCommandTests(test.FrameworkTest):

  """ Tests for `cli.main` """

  def run_main(self, *argv):

    """ Run the command line, capturing stdout and stderr. """

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
      code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()

  def test_ma(self):

    """ Test the mould of a c-polynomial on stdout """

    code, out, _ = self.run_main('ma', 'c3')
    assert code == 0
    assert out.strip() == '{1: u1^2}'

  def test_ma_json(self):

    """ Test the JSON form of a mould on stdout """

    code, out, _ = self.run_main('ma', '--json', 'c1*c2')
    assert code == 0
    data = json.loads(out)
    assert codec.decode(data, 'mould') == moulds.ma(
      codec.decode('c1*c2', 'cpoly'))

  def test_check_exit_codes(self):

    """ Test that a check's exit status is its result """

    code, out, _ = self.run_main(
      'check', 'alternal', '--mould', '{"values": {"2": "u1-u2"}}')
    assert code == 0
    assert out.strip() == 'alternal\tpass'
    code, out, _ = self.run_main(
      'check', 'alternal', '--mould', '{"values": {"2": "u1+u2"}}')
    assert code == 1
    assert out.strip() == 'alternal\tfail'

  def test_arat_neutral_seed(self):

    """ Test that the seeded property check consumes and reports its seed """

    argv = ('check', 'arat-neutral', '--json', '--samples', '6',
            '--max-depth', '3')
    code, out, _ = self.run_main(*(argv + ('--seed', '7')))
    assert code == 0
    data = json.loads(out)
    assert data['pass'] and data['seed'] == 7
    assert data['samples'] == 6 and data['failures'] == []
    assert self.run_main(*(argv + ('--seed', '7')))[1] == out
    with mock.patch.dict('os.environ', {'MOULDKIT_SEED': '11'}):
      code, out, _ = self.run_main(*argv)
    assert code == 0
    assert json.loads(out)['seed'] == 11

  def test_check_lie(self):

    """ Test the Lie check on a literal """

    assert self.run_main('check', 'lie', 'ab-ba')[0] == 0
    assert self.run_main('check', 'lie', 'ab')[0] == 1

  def test_usage_errors(self):

    """ Test that malformed input exits with code 2 """

    code, _, err = self.run_main('check', 'alternal')
    assert code == 2
    assert 'mould is required' in err
    assert self.run_main('check', 'alternal', '--mould', '{')[0] == 2
    assert self.run_main('eisenstein', 'iter', 'x,1')[0] == 2
    assert self.run_main('no-such-verb')[0] == 2

  def test_computation_error(self):

    """ Test that a domain error exits with code 1 """

    code, _, err = self.run_main(
      'op', 'darit', '{"values": {"0": "1"}}', '{"values": {"1": "1"}}')
    assert code == 1
    assert 'delta_inv' in err

  def test_op_push(self):

    """ Test a mould operation against the library call """

    source = '{"values": {"2": "u1^2+u2"}}'
    code, out, _ = self.run_main('op', 'push', '--json', source)
    assert code == 0
    P = codec.loads(source, 'mould')
    assert codec.loads(out, 'mould') == moulds.push(P)

  def test_op_arity(self):

    """ Test that the wrong mould count is a usage error """

    source = '{"values": {"1": "u1"}}'
    assert self.run_main('op', 'mu', source)[0] == 2

  def test_dims(self):

    """ Test a small dimension table """

    code, out, _ = self.run_main('dims', 'eds2', '--max-weight', '11')
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == 'n\tcomputed\tformula\tmatches'
    assert lines[-1] == '11\t2\t2\tTrue'

  def test_eisenstein_iter(self):

    """ Test the CSV form of one iterated integral """

    code, out, _ = self.run_main('eisenstein', 'iter', '0', '--q-order', '4')
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == 'index,n,m,coefficient'
    assert all(line.startswith('"0",') for line in lines[1:])

  def test_parse_index(self):

    """ Test index literals """

    assert cli.parse_index('0,2') == (0, 2)
    assert cli.parse_index('') == ()
    with self.assertRaises(ParseError):
      cli.parse_index('a,b')
