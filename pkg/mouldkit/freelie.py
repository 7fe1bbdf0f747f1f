# -*- coding: utf-8 -*-

"""

  free Lie algebra
  ~~~~~~~~~~~~~~~~

  noncommutative polynomials in the letters ``a`` and ``b``, truncated
  by weight, and their Lie elements: brackets, ``ad``-powers, the
  Dynkin test for Lie-likeness, shuffles, coordinates in the
  alphabet ``c_i = ad(a)^(i-1)(b)``, ``push`` on a-blocks, the
  Bernoulli operator and the tangential elements ``t01, t02, t12``.

  coefficients are usually :py:class:`fractions.Fraction`, but any
  ring element supporting ``+``, ``*`` by integers and ``bool`` works
  (:py:class:`mouldkit.scalar.QSeriesL` in particular).

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import re
import math
import functools
import itertools
import collections
from fractions import Fraction

# local
from .util import debug
from .scalar import QSeriesL
from .scalar import bernoulli
from .linalg import RationalMatrix
from .exceptions import DomainError
from .exceptions import NotInImage
from .exceptions import NotRepresentable
from .exceptions import ParseError


## Globals
LETTERS = ('a', 'b')
logging = debug.Logger('mouldkit.freelie')
_TERM = re.compile(r'([+-]?)([^+-]+)')
_NUM = re.compile(r'^(\d+)(?:/(\d+))?$')
_WORD = re.compile(r'^[ab]+$')
_CLETTER = re.compile(r'^c(\d+)$')
_COEFFICIENTS = (int, Fraction, QSeriesL)

TElements = collections.namedtuple('TElements', (
  't01', 't02', 't12', 't01prime'))


def min_cap(*caps):

  """ Smallest of the given caps, ``None`` standing for "no cap". """

  caps = [c for c in caps if c is not None]
  return min(caps) if caps else None


def _normalize(value):
  return Fraction(value) if isinstance(value, int) else value


def _parse_terms(text, kind, factor):

  """ Split a ``+``/``-`` separated literal into ``(coefficient, parts)``.

      :param text: Literal to parse.
      :param kind: Literal name, for error messages.
      :param factor: Callable mapping one ``*``-separated factor to a tuple
        of parts, or ``None`` if it is not a valid factor.

      :raises ParseError: On any malformed input. """

  source = ''.join(str(text).split())
  if not source:
    raise ParseError(kind, repr(text))
  terms, consumed = [], 0
  for match in _TERM.finditer(source):
    if match.start() != consumed:
      raise ParseError(kind, repr(text))
    consumed = match.end()
    sign, body = match.groups()
    coeff, parts = Fraction(-1 if sign == '-' else 1), ()
    for item in body.split('*'):
      number = _NUM.match(item)
      if number:
        denominator = int(number.group(2) or 1)
        if not denominator:
          raise ParseError(kind, repr(text))
        coeff *= Fraction(int(number.group(1)), denominator)
        continue
      parsed = factor(item)
      if parsed is None:
        raise ParseError(kind, repr(text))
      parts += parsed
    terms.append((coeff, parts))
  if consumed != len(source):
    raise ParseError(kind, repr(text))
  return terms


def _format_terms(items, render):

  """ Render ``(key, coefficient)`` pairs as a signed sum. """

  if not items:
    return '0'
  text = []
  for key, coeff in items:
    body = render(key)
    if not isinstance(coeff, Fraction):
      text.append('+(%s)%s' % (coeff, ('*' + body) if body else ''))
      continue
    mag = abs(coeff)
    if not body:
      chunk = str(mag)
    elif mag == 1:
      chunk = body
    else:
      chunk = '%s*%s' % (mag, body)
    text.append(('-' if coeff < 0 else '+') + chunk)
  joined = ''.join(text)
  return joined[1:] if joined.startswith('+') else joined


class NCPoly(object):

  """ Noncommutative polynomial: a map from words (strings of letters) to
      nonzero coefficients, truncated at weight ``cap`` (``None`` for no
      truncation). Immutable. """

  __slots__ = ('cap', '_terms')

  def __init__(self, terms=None, cap=None):

    """ Initialize a noncommutative polynomial.

        :param terms: Mapping or iterable of ``(word, coefficient)`` pairs.
          Repeated words accumulate; words longer than ``cap`` are dropped.
        :param cap: Weight cap, or ``None``. """

    clean = {}
    items = terms.items() if isinstance(terms, dict) else (terms or ())
    for word, coeff in items:
      if cap is not None and len(word) > cap:
        continue
      clean[word] = clean[word] + coeff if word in clean else (
        _normalize(coeff))
    self.cap = cap
    self._terms = {w: c for w, c in clean.items() if c}

  ## == Constructors == ##
  @classmethod
  def zero(cls, cap=None):

    """ The zero polynomial. """

    return cls(None, cap)

  @classmethod
  def one(cls, cap=None):

    """ The empty word. """

    return cls({'': 1}, cap)

  @classmethod
  def letter(cls, letter, cap=None):

    """ A single letter, as a polynomial. """

    return cls({letter: 1}, cap)

  @classmethod
  def word(cls, word, coefficient=1, cap=None):

    """ A single word with a coefficient. """

    return cls({word: coefficient}, cap)

  @classmethod
  def parse(cls, text, cap=None):

    """ Parse the text form, e.g. ``"ab-ba"`` or ``"2*aab+1/2*b"``; the
        literal ``1`` is the empty word.

        :raises ParseError: If ``text`` is not a polynomial in ``a, b``. """

    terms = _parse_terms(text, 'NCPoly', lambda item: (
      (item,) if _WORD.match(item) else None))
    return cls([(''.join(parts), coeff) for coeff, parts in terms], cap)

  ### === Public Attributes === ###

  terms = property(lambda self: dict(self._terms))

  is_zero = property(lambda self: not self._terms)

  # largest word length present
  max_weight = property(lambda self: max(
    (len(w) for w in self._terms), default=-1))

  # smallest word length present
  min_weight = property(lambda self: min(
    (len(w) for w in self._terms), default=-1))

  __bool__ = lambda self: bool(self._terms)

  def items(self):

    """ ``(word, coefficient)`` pairs ordered by length, then word. """

    return [(w, self._terms[w]) for w in sorted(
      self._terms, key=lambda w: (len(w), w))]

  def coefficient(self, word):

    """ Coefficient of ``word`` (``0`` if absent). """

    return self._terms.get(word, Fraction(0))

  def weights(self):

    """ Sorted list of the weights present. """

    return sorted({len(w) for w in self._terms})

  def homogeneous(self, weight):

    """ The weight-``weight`` part. """

    return NCPoly({w: c for w, c in self._terms.items()
                   if len(w) == weight}, self.cap)

  def depth_part(self, depth, letter='b'):

    """ The part whose words contain ``letter`` exactly ``depth`` times. """

    return NCPoly({w: c for w, c in self._terms.items()
                   if w.count(letter) == depth}, self.cap)

  def depths(self, letter='b'):

    """ Sorted list of the ``letter``-counts present. """

    return sorted({w.count(letter) for w in self._terms})

  def truncate(self, cap):

    """ Re-truncate at the smaller of ``cap`` and the current cap. """

    return NCPoly(self._terms, min_cap(cap, self.cap))

  def map_coefficients(self, function):

    """ Apply ``function`` to every coefficient. """

    return NCPoly({w: function(c) for w, c in self._terms.items()}, self.cap)

  ## == Ring operations == ##
  def __add__(self, other):
    if isinstance(other, _COEFFICIENTS):
      other = NCPoly({'': other})
    if not isinstance(other, NCPoly):
      return NotImplemented
    terms = dict(self._terms)
    for w, c in other._terms.items():
      terms[w] = terms[w] + c if w in terms else c
    return NCPoly(terms, min_cap(self.cap, other.cap))

  __radd__ = __add__

  def __neg__(self):
    return NCPoly({w: -c for w, c in self._terms.items()}, self.cap)

  def __sub__(self, other):
    if isinstance(other, _COEFFICIENTS):
      other = NCPoly({'': other})
    if not isinstance(other, NCPoly):
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    if isinstance(other, _COEFFICIENTS):
      return NCPoly({w: c * other for w, c in self._terms.items()}, self.cap)
    if not isinstance(other, NCPoly):
      return NotImplemented
    cap = min_cap(self.cap, other.cap)
    terms = {}
    for (w1, c1), (w2, c2) in itertools.product(
          self._terms.items(), other._terms.items()):
      if cap is not None and len(w1) + len(w2) > cap:
        continue
      word, value = w1 + w2, c1 * c2
      terms[word] = terms[word] + value if word in terms else value
    return NCPoly(terms, cap)

  def __rmul__(self, other):
    if isinstance(other, _COEFFICIENTS):
      return NCPoly({w: other * c for w, c in self._terms.items()}, self.cap)
    return NotImplemented

  def __eq__(self, other):
    if isinstance(other, _COEFFICIENTS):
      other = NCPoly({'': other})
    if not isinstance(other, NCPoly):
      return NotImplemented
    return (self - other).is_zero

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  __str__ = lambda self: _format_terms(self.items(), lambda w: w)

  __repr__ = lambda self: 'NCPoly(%s, cap=%s)' % (str(self), self.cap)


class CPoly(object):

  """ Noncommutative polynomial in the letters ``c_1, c_2, ...``, keyed by
      index tuples ``(k_1, ..., k_r)`` for ``c_{k_1}...c_{k_r}``. Weight of a
      monomial is ``sum(k)``, its depth ``r``. Immutable. """

  __slots__ = ('cap', '_terms')

  def __init__(self, terms=None, cap=None):

    """ Initialize a c-polynomial.

        :param terms: Mapping or iterable of ``(indices, coefficient)``.
        :param cap: Weight cap, or ``None``.

        :raises DomainError: If an index is smaller than ``1``. """

    clean = {}
    items = terms.items() if isinstance(terms, dict) else (terms or ())
    for key, coeff in items:
      key = tuple(key)
      if any(k < 1 for k in key):
        raise DomainError(key, 'CPoly')
      if cap is not None and sum(key) > cap:
        continue
      clean[key] = clean[key] + coeff if key in clean else _normalize(coeff)
    self.cap = cap
    self._terms = {k: c for k, c in clean.items() if c}

  @classmethod
  def monomial(cls, indices, coefficient=1, cap=None):

    """ The single monomial ``coefficient * c_{k_1}...c_{k_r}``. """

    return cls({tuple(indices): coefficient}, cap)

  @classmethod
  def parse(cls, text, cap=None):

    """ Parse the text form, e.g. ``"c2*c1-c1*c2"`` or ``"2*c1*c4"``.

        :raises ParseError: If ``text`` is not a c-polynomial. """

    def factor(item):
      match = _CLETTER.match(item)
      if not match or int(match.group(1)) < 1:
        return None
      return (int(match.group(1)),)

    return cls([(parts, coeff) for coeff, parts in _parse_terms(
      text, 'CPoly', factor)], cap)

  ### === Public Attributes === ###

  terms = property(lambda self: dict(self._terms))

  is_zero = property(lambda self: not self._terms)

  __bool__ = lambda self: bool(self._terms)

  def items(self):

    """ Pairs ordered by weight, then depth, then descending indices. """

    return [(k, self._terms[k]) for k in sorted(
      self._terms, key=lambda k: (sum(k), len(k), tuple(-x for x in k)))]

  def coefficient(self, indices):

    """ Coefficient of ``c_{indices}`` (``0`` if absent). """

    return self._terms.get(tuple(indices), Fraction(0))

  def weights(self):

    """ Sorted list of weights present. """

    return sorted({sum(k) for k in self._terms})

  def depths(self):

    """ Sorted list of depths present. """

    return sorted({len(k) for k in self._terms})

  def homogeneous(self, weight):

    """ The weight-``weight`` part. """

    return CPoly({k: c for k, c in self._terms.items()
                  if sum(k) == weight}, self.cap)

  def depth_part(self, depth):

    """ The depth-``depth`` part. """

    return CPoly({k: c for k, c in self._terms.items()
                  if len(k) == depth}, self.cap)

  ## == Ring operations == ##
  def __add__(self, other):
    if not isinstance(other, CPoly):
      return NotImplemented
    terms = dict(self._terms)
    for k, c in other._terms.items():
      terms[k] = terms[k] + c if k in terms else c
    return CPoly(terms, min_cap(self.cap, other.cap))

  def __neg__(self):
    return CPoly({k: -c for k, c in self._terms.items()}, self.cap)

  def __sub__(self, other):
    if not isinstance(other, CPoly):
      return NotImplemented
    return self + (-other)

  def __mul__(self, other):
    if isinstance(other, _COEFFICIENTS):
      return CPoly({k: c * other for k, c in self._terms.items()}, self.cap)
    if not isinstance(other, CPoly):
      return NotImplemented
    cap, terms = min_cap(self.cap, other.cap), {}
    for (k1, c1), (k2, c2) in itertools.product(
          self._terms.items(), other._terms.items()):
      key, value = k1 + k2, c1 * c2
      terms[key] = terms[key] + value if key in terms else value
    return CPoly(terms, cap)

  def __rmul__(self, other):
    if isinstance(other, _COEFFICIENTS):
      return CPoly({k: other * c for k, c in self._terms.items()}, self.cap)
    return NotImplemented

  def __eq__(self, other):
    if not isinstance(other, CPoly):
      return NotImplemented
    return (self - other).is_zero

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  __str__ = lambda self: _format_terms(self.items(), lambda k: '*'.join(
    'c%d' % i for i in k))

  __repr__ = lambda self: 'CPoly(%s, cap=%s)' % (str(self), self.cap)


## == Brackets == ##
def lie_bracket(p, q):

  """ The commutator ``pq - qp``, truncated at the smaller cap. """

  return p * q - q * p


def ad_pow(x, n, y):

  """ ``ad(x)^n (y)``.

      :raises DomainError: For negative ``n``. """

  if n < 0:
    raise DomainError(n, 'ad_pow')
  for _ in range(n):
    y = lie_bracket(x, y)
  return y


@functools.lru_cache(maxsize=None)
def _dynkin_word(word):

  """ Left-normed bracketing of ``word``, as an integer-coefficient dict.
      Callers must not mutate the result. """

  if len(word) <= 1:
    return {word: 1}
  last, out = word[-1], collections.defaultdict(int)
  for w, c in _dynkin_word(word[:-1]).items():
    out[w + last] += c
    out[last + w] -= c
  return {w: c for w, c in out.items() if c}


def dynkin(p):

  """ The Dynkin operator, linearly extended: each word becomes its
      left-normed bracket. """

  terms = {}
  for word, coeff in p.terms.items():
    for w, c in _dynkin_word(word).items():
      value = coeff * c
      terms[w] = terms[w] + value if w in terms else value
  return NCPoly(terms, p.cap)


def lie_failure_weight(p):

  """ First weight at which ``p`` fails the Dynkin-Specht-Wever test, ``0``
      for a constant term, ``None`` if ``p`` is Lie-like. """

  if p.coefficient(''):
    return 0
  for weight in p.weights():
    part = p.homogeneous(weight)
    if dynkin(part) != part * weight:
      logging.debug('Lie test fails at weight %d.' % weight)
      return weight
  return None


def is_lie(p):

  """ Dynkin-Specht-Wever test: ``p`` is Lie-like iff it has no constant
      term and each weight-``n`` part ``p_n`` satisfies
      ``dynkin(p_n) == n * p_n``. """

  return lie_failure_weight(p) is None


## == Shuffles == ##
@functools.lru_cache(maxsize=None)
def _shuffle(w1, w2):
  if not w1 or not w2:
    return {w1 + w2: 1}
  out = collections.defaultdict(int)
  for w, c in _shuffle(w1[:-1], w2).items():
    out[w + w1[-1]] += c
  for w, c in _shuffle(w1, w2[:-1]).items():
    out[w + w2[-1]] += c
  return dict(out)


def shuffle_product(w1, w2, cap=None):

  """ Sum over all shuffles of the words ``w1`` and ``w2``.

      :returns: :py:class:`NCPoly` with integer multiplicities. """

  return NCPoly(_shuffle(w1, w2), cap)


def shuffle(p, q):

  """ Bilinear extension of :py:func:`shuffle_product` to polynomials. """

  cap, terms = min_cap(p.cap, q.cap), {}
  for (w1, c1), (w2, c2) in itertools.product(
        p.terms.items(), q.terms.items()):
    if cap is not None and len(w1) + len(w2) > cap:
      continue
    for w, c in _shuffle(w1, w2).items():
      value = c1 * c2 * c
      terms[w] = terms[w] + value if w in terms else value
  return NCPoly(terms, cap)


## == c-alphabet == ##
@functools.lru_cache(maxsize=None)
def _expand_letter(k):

  """ ``c_k = ad(a)^(k-1)(b)`` as a word dict. """

  return {'a' * (k - 1 - j) + 'b' + 'a' * j: (-1) ** j * math.comb(k - 1, j)
          for j in range(k)}


@functools.lru_cache(maxsize=None)
def _expand_monomial(indices):
  if not indices:
    return {'': 1}
  head = _expand_monomial(indices[:-1])
  out = collections.defaultdict(int)
  for (w1, c1), (w2, c2) in itertools.product(
        head.items(), _expand_letter(indices[-1]).items()):
    out[w1 + w2] += c1 * c2
  return {w: c for w, c in out.items() if c}


def _block_key(word):

  """ c-indices of a word ``a^(k1-1) b ... a^(kr-1) b`` ending in ``b``. """

  return tuple(len(block) + 1 for block in word.split('b')[:-1])


def expand_c(m):

  """ Expand a :py:class:`CPoly` into words in ``a, b``. """

  terms = {}
  for key, coeff in m.terms.items():
    for w, c in _expand_monomial(key).items():
      value = coeff * c
      terms[w] = terms[w] + value if w in terms else value
  return NCPoly(terms, m.cap)


def to_c_coordinates(p):

  """ Coordinates of ``p`` in the c-monomials.

      Unitriangular elimination: the expansion of ``c_K`` contains the word
      ``a^(k1-1) b ... a^(kr-1) b`` with coefficient ``1``, and every other
      word of it ending in ``b`` has a lexicographically smaller c-index. So
      the residual word ending in ``b`` with the largest index fixes one
      coordinate at a time.

      :param p: :py:class:`NCPoly` in the span of the c-monomials.

      :raises NotRepresentable: If ``p`` has a constant or weight-1 ``a``
        term, or any residual remains.

      :returns: :py:class:`CPoly` with the same cap. """

  residual = dict(p.terms)
  if '' in residual or 'a' in residual:
    raise NotRepresentable('with a constant or linear a-term')

  coords = {}
  while residual:
    keyed = [w for w in residual if w.endswith('b')]
    if not keyed:
      raise NotRepresentable(str(NCPoly(residual)))
    word = max(keyed, key=lambda w: (len(w), w.count('b'), _block_key(w)))
    key, coeff = _block_key(word), residual[word]
    coords[key] = coeff
    for w, c in _expand_monomial(key).items():
      value = residual[w] - coeff * c if w in residual else -(coeff * c)
      if value:
        residual[w] = value
      else:
        residual.pop(w, None)

  logging.debug('c-coordinates: %d monomials from %d words.' % (
    len(coords), len(p.terms)))
  return CPoly(coords, p.cap)


def ad_a_on_c(m):

  """ ``ad(a)`` on c-polynomials: the derivation ``c_i -> c_(i+1)``. """

  terms = {}
  for key, coeff in m.terms.items():
    for i in range(len(key)):
      raised = key[:i] + (key[i] + 1,) + key[i + 1:]
      terms[raised] = terms[raised] + coeff if raised in terms else coeff
  return CPoly(terms, m.cap)


def solve_ad_a(y):

  """ The unique ``x`` with ``ad(a) x = y``.

      ``ad(a)`` sends the lexicographically largest monomial
      ``(k1, ..., kr)`` of ``x`` to the largest monomial ``(k1 + 1, ...)`` of
      the image, so the solve is a greedy elimination.

      :param y: :py:class:`CPoly` without constant term.

      :raises NotInImage: If the largest residual monomial starts with
        ``c_1``.

      :returns: :py:class:`CPoly` solution. """

  residual, solution = dict(y.terms), {}
  while residual:
    key = max(residual, key=lambda k: (sum(k), len(k), k))
    if not key or key[0] == 1:
      raise NotInImage(sum(key))
    coeff, lowered = residual[key], (key[0] - 1,) + key[1:]
    solution[lowered] = solution[lowered] + coeff if (
      lowered in solution) else coeff
    for k, c in ad_a_on_c(CPoly({lowered: coeff})).terms.items():
      value = residual[k] - c if k in residual else -c
      if value:
        residual[k] = value
      else:
        residual.pop(k, None)
  return CPoly(solution, y.cap)


## == Push == ##
def _push(word):
  blocks = word.split('b')
  return 'b'.join([blocks[-1]] + blocks[:-1])


def push_word(p, times=1):

  """ Cyclic permutation of a-blocks,
      ``a^k0 b a^k1 ... b a^kr -> a^kr b a^k0 ... b a^k(r-1)``.

      :param p: :py:class:`NCPoly`, or :py:class:`CPoly` (expanded first).
      :param times: Number of rotations.

      :returns: :py:class:`NCPoly`; depth (``b``-count) is preserved. """

  if isinstance(p, CPoly):
    p = expand_c(p)
  terms = {}
  for word, coeff in p.terms.items():
    for _ in range(times % (word.count('b') + 1)):
      word = _push(word)
    terms[word] = terms[word] + coeff if word in terms else coeff
  return NCPoly(terms, p.cap)


def is_push_invariant_series(p):

  """ ``True`` if ``push_word(p) == p``. """

  return push_word(p) == p


def is_push_neutral_series(p):

  """ ``True`` if, in every depth ``r >= 2``, the ``r + 1`` rotations of the
      depth-``r`` part sum to zero. """

  if isinstance(p, CPoly):
    p = expand_c(p)
  for depth in p.depths():
    if depth < 2:
      continue
    part = p.depth_part(depth)
    total = NCPoly.zero(p.cap)
    for i in range(depth + 1):
      total = total + push_word(part, i)
    if total:
      logging.debug('push-neutrality fails in depth %d.' % depth)
      return False
  return True


## == Bernoulli operator and tangential elements == ##
def ber_apply(x, y, cap=None):

  """ ``Ber_x(y) = sum B_m / m! ad(x)^m (y)``, with ``B_1 = -1/2``.

      :param x: Element without constant term.
      :param y: Argument.
      :param cap: Weight cap, defaulting to the smaller cap of ``x, y``.

      :returns: :py:class:`NCPoly` truncated at ``cap``. """

  cap = min_cap(cap, x.cap, y.cap)
  if cap is None:
    raise DomainError('None', 'ber_apply')
  total, term, m = NCPoly.zero(cap), y.truncate(cap), 0
  while term:
    number = bernoulli(m)
    if number:
      total = total + term * (number / math.factorial(m))
    m += 1
    term = lie_bracket(x, term).truncate(cap)
  return total


def t_elements(cap):

  """ The tangential elements ``t01 = Ber_b(-a)``, ``t02 = Ber_(-b)(a)``,
      ``t12 = [a, b]`` and ``t01' = t01 + t12 / 2``.

      :raises DomainError: If ``cap < 2``.

      :returns: :py:class:`TElements`. """

  if cap < 2:
    raise DomainError(cap, 't_elements')
  a, b = NCPoly.letter('a', cap), NCPoly.letter('b', cap)
  t01, t02 = ber_apply(b, -a, cap), ber_apply(-b, a, cap)
  t12 = lie_bracket(a, b)
  return TElements(t01, t02, t12, t01 + t12 * Fraction(1, 2))


def t01_generates_a(cap):

  """ Check that ``a = -sum_m ad(b)^m (t01) / (m+1)!`` through ``cap``. """

  a, b = NCPoly.letter('a', cap), NCPoly.letter('b', cap)
  term, total, m = t_elements(cap).t01, NCPoly.zero(cap), 0
  while term:
    total = total + term * Fraction(1, math.factorial(m + 1))
    term, m = lie_bracket(b, term), m + 1
  return -total == a


def substitute(p, images, cap=None):

  """ Algebra morphism sending each letter ``x`` to ``images[x]``.

      :param p: :py:class:`NCPoly`.
      :param images: Mapping from letter to :py:class:`NCPoly`; letters not
        listed are fixed.
      :param cap: Weight cap of the result.

      :returns: :py:class:`NCPoly`. """

  cap = min_cap(cap, p.cap)
  result = NCPoly.zero(cap)
  for word, coeff in p.terms.items():
    image = NCPoly.one(cap)
    for letter in word:
      image = image * images.get(letter, NCPoly.letter(letter, cap))
      if not image:
        break
    result = result + image * coeff
  return result


def lie_basis_matrix(weight, letters=LETTERS):

  """ Row-reduced spanning set of the weight-``weight`` Lie elements.

      :returns: Pair ``(words, rows)``: the column words and a list of
        :py:class:`NCPoly` forming a basis. """

  words = [''.join(w) for w in itertools.product(letters, repeat=weight)]
  index = {w: i for i, w in enumerate(words)}
  rows = []
  for word in words:
    row = [0] * len(words)
    for w, c in _dynkin_word(word).items():
      row[index[w]] = c
    rows.append(row)
  reduced, pivots = RationalMatrix(rows, len(words)).rref()
  basis = [NCPoly({words[j]: x for j, x in enumerate(row) if x})
           for row in reduced.rows[:len(pivots)]]
  return words, basis


def centralizer_dimensions(letter, cap):

  """ Per weight ``n <= cap``, the dimension of the centralizer of ``letter``
      among the weight-``n`` Lie elements.

      :returns: ``dict`` from weight to kernel dimension of ``ad(letter)``. """

  x, dims = NCPoly.letter(letter), {}
  for weight in range(1, cap + 1):
    _, basis = lie_basis_matrix(weight)
    images = [lie_bracket(x, element) for element in basis]
    columns = sorted({w for image in images for w in image.terms})
    index = {w: i for i, w in enumerate(columns)}
    rows = []
    for image in images:
      row = [0] * len(columns)
      for w, c in image.terms.items():
        row[index[w]] = c
      rows.append(row)
    rank = RationalMatrix(rows, len(columns)).rank() if rows else 0
    dims[weight] = len(basis) - rank
  return dims


def centralizer_check(letter, cap):

  """ ``True`` if the centralizer of ``letter`` is spanned by ``letter``
      itself in weight 1 and vanishes in every weight ``2..cap``. """

  dims = centralizer_dimensions(letter, cap)
  return all(d == (1 if n == 1 else 0) for n, d in dims.items())


# series-level push, under its own name
push_series = push_word


__all__ = (
  'LETTERS',
  'NCPoly',
  'CPoly',
  'TElements',
  'lie_bracket',
  'ad_pow',
  'dynkin',
  'lie_failure_weight',
  'is_lie',
  'shuffle_product',
  'shuffle',
  'expand_c',
  'to_c_coordinates',
  'ad_a_on_c',
  'solve_ad_a',
  'push_word',
  'push_series',
  'is_push_invariant_series',
  'is_push_neutral_series',
  'ber_apply',
  't_elements',
  't01_generates_a',
  'substitute',
  'lie_basis_matrix',
  'centralizer_dimensions',
  'centralizer_check')
