# -*- coding: utf-8 -*-

"""

  codec
  ~~~~~

  JSON forms for every exact object in the package. Encoders register
  against the type they serialize and are found along the MRO; decoders
  register under a short ``kind`` name. ``dumps`` sorts keys, so equal
  objects always serialize to identical text.

  Example:

    from mouldkit import codec
    from mouldkit.scalar import MultiPoly

    text = codec.dumps(MultiPoly.parse('u1^2-u2', 2))
    assert codec.loads(text, 'poly') == MultiPoly.parse('u1^2-u2', 2)

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import json
from fractions import Fraction

# local
from .util import debug
from .scalar import MultiPoly
from .scalar import FormalFraction
from .scalar import QSeriesL
from .freelie import NCPoly
from .freelie import CPoly
from .derivations import Derivation
from .moulds import Mould
from .moulds import mould
from .exceptions import ParseError


## Globals
logging = debug.Logger('mouldkit.codec')
_encoders, _decoders = {}, {}


def encoder(*types):

  """ Register the decorated function as the JSON encoder for ``types``. """

  def register(function):
    for kind in types:
      _encoders[kind] = function
    return function
  return register


def decoder(kind):

  """ Register the decorated function as the decoder for ``kind``. """

  def register(function):
    _decoders[kind] = function
    return function
  return register


def to_json(obj):

  """ JSON-ready form of ``obj``: registered types by their encoder,
      containers recursively, named tuples as objects.

      :raises TypeError: If nothing knows how to encode ``obj``. """

  if obj is None or isinstance(obj, (bool, int, str)):
    return obj
  for kind in type(obj).__mro__:
    if kind in _encoders:
      return _encoders[kind](obj)
  if hasattr(obj, '_asdict'):
    return {k: to_json(v) for k, v in obj._asdict().items()}
  if isinstance(obj, dict):
    return {str(k): to_json(v) for k, v in obj.items()}
  if isinstance(obj, (list, tuple, set, frozenset)):
    return [to_json(v) for v in obj]
  raise TypeError('cannot encode %s' % type(obj).__name__)


def dumps(obj, indent=None):

  """ Deterministic JSON text for ``obj``. """

  return json.dumps(to_json(obj), sort_keys=True, indent=indent)


def decode(data, kind):

  """ Rebuild an object of ``kind`` from its JSON form.

      :raises ParseError: On an unknown kind or malformed data. """

  if kind not in _decoders:
    raise ParseError('codec kind', kind)
  try:
    return _decoders[kind](data)
  except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
    logging.debug('decode of %s failed: %s' % (kind, exc))
    raise ParseError(kind, json.dumps(data, sort_keys=True)[:80])


def loads(text, kind):

  """ Parse JSON text and decode it as ``kind``. """

  try:
    data = json.loads(text)
  except ValueError:
    raise ParseError('json', text[:80])
  return decode(data, kind)


## == Scalars == ##
@encoder(Fraction)
def _encode_fraction(value):
  return str(value)


def _coefficient(record):
  return Fraction(int(record['num']), int(record.get('den', 1)))


def _scalar_record(value, **extra):
  value = Fraction(value)
  extra.update(num=str(value.numerator), den=str(value.denominator))
  return extra


@encoder(MultiPoly)
def encode_poly(p):

  """ ``[{exps, num, den}, ...]`` in canonical monomial order. """

  return [_scalar_record(c, exps=list(e)) for e, c in p.items()]


@decoder('poly')
def decode_poly(data, nvars=None):

  """ Inverse of :py:func:`encode_poly`; also accepts the canonical text
      form. """

  if isinstance(data, str):
    return MultiPoly.parse(data, nvars)
  terms = [(tuple(int(x) for x in r['exps']), _coefficient(r)) for r in data]
  if nvars is None:
    nvars = len(terms[0][0]) if terms else 0
  return MultiPoly(nvars, terms)


@encoder(FormalFraction)
def encode_fraction(f):

  """ ``{num, den}`` with the denominator as its list of factors. """

  return {'num': encode_poly(f.num),
          'den': [encode_poly(g) for g in f.factors]}


@decoder('fraction')
def decode_fraction(data, nvars=None):

  """ Inverse of :py:func:`encode_fraction`; a bare polynomial form is read
      as a fraction with no denominator. """

  if isinstance(data, (str, list)):
    return FormalFraction(decode_poly(data, nvars))
  num = decode_poly(data['num'], nvars)
  factors = [decode_poly(g, nvars or num.nvars or None) for g in data.get(
    'den', ())]
  return FormalFraction(num, factors or None)


@encoder(QSeriesL)
def encode_qseries(f):

  """ ``{N, M, coeffs: [{n, m, num, den}, ...]}``. """

  return {'N': f.N, 'M': f.M,
          'coeffs': [_scalar_record(c, n=n, m=m) for (n, m), c in f.items()]}


@decoder('qseries')
def decode_qseries(data):
  return QSeriesL({(int(r['n']), int(r['m'])): _coefficient(r)
                   for r in data['coeffs']}, int(data['N']), int(data['M']))


## == Moulds == ##
@encoder(Mould)
def encode_mould(P):

  """ ``{cap, alphabet, values: {depth: poly-or-fraction}}``. """

  values = {}
  for depth in P.depths():
    value = P[depth]
    values[str(depth)] = encode_poly(value.num) if not value.factors else (
      encode_fraction(value))
  return {'cap': P.cap, 'alphabet': P.alphabet, 'values': values}


@decoder('mould')
def decode_mould(data):

  """ Inverse of :py:func:`encode_mould`. Values may also be canonical
      text, and ``cap`` defaults to the largest depth given. """

  values = {int(r): decode_fraction(v, int(r)) for r, v in data[
    'values'].items()}
  cap = int(data.get('cap', max(values, default=0)))
  return mould(values, cap, data.get('alphabet', 'u'))


## == Noncommutative polynomials == ##
def _nc_terms(p, key, render):
  out = []
  for item, c in p.items():
    if isinstance(c, QSeriesL):
      out.append({key: render(item), 'series': encode_qseries(c)})
    else:
      out.append(_scalar_record(c, **{key: render(item)}))
  return out


def _nc_coefficient(record):
  if 'series' in record:
    return decode_qseries(record['series'])
  return _coefficient(record)


@encoder(NCPoly)
def encode_ncpoly(p):

  """ ``{cap, text, terms: [{word, num, den}, ...]}``; series coefficients
      appear as ``{word, series}``. """

  return {'cap': p.cap, 'text': str(p),
          'terms': _nc_terms(p, 'word', lambda w: w)}


@decoder('ncpoly')
def decode_ncpoly(data):

  """ Inverse of :py:func:`encode_ncpoly`, preferring the term list; a bare
      string is parsed as text. """

  if isinstance(data, str):
    return NCPoly.parse(data)
  if 'terms' in data:
    return NCPoly([(r['word'], _nc_coefficient(r)) for r in data['terms']],
                  data.get('cap'))
  return NCPoly.parse(data['text'], data.get('cap'))


@encoder(CPoly)
def encode_cpoly(p):

  """ ``{cap, text, terms: [{indices, num, den}, ...]}``. """

  return {'cap': p.cap, 'text': str(p),
          'terms': _nc_terms(p, 'indices', list)}


@decoder('cpoly')
def decode_cpoly(data):
  if isinstance(data, str):
    return CPoly.parse(data)
  if 'terms' in data:
    return CPoly([(tuple(int(k) for k in r['indices']), _nc_coefficient(r))
                  for r in data['terms']], data.get('cap'))
  return CPoly.parse(data['text'], data.get('cap'))


@encoder(Derivation)
def encode_derivation(D):

  """ ``{val_a, val_b, cap}``. """

  return {'val_a': encode_ncpoly(D.val_a), 'val_b': encode_ncpoly(D.val_b),
          'cap': D.cap}


@decoder('derivation')
def decode_derivation(data):
  return Derivation(decode_ncpoly(data['val_a']),
                    decode_ncpoly(data['val_b']), data.get('cap'))


__all__ = (
  'encoder',
  'decoder',
  'to_json',
  'dumps',
  'decode',
  'loads',
  'encode_poly',
  'decode_poly',
  'encode_fraction',
  'decode_fraction',
  'encode_qseries',
  'decode_qseries',
  'encode_mould',
  'decode_mould',
  'encode_ncpoly',
  'decode_ncpoly',
  'encode_cpoly',
  'decode_cpoly',
  'encode_derivation',
  'decode_derivation')
