# -*- coding: utf-8 -*-

"""

  eisenstein
  ~~~~~~~~~~

  Hecke-normalized Eisenstein series, their regularized iterated
  integrals and the formal series ``g`` acting on ``a``.

  integrals are taken in the coordinate ``L = log q``, so ``d/dL`` acts on
  ``q^n`` as multiplication by ``n`` and every coefficient stays rational.
  ``G_0 = -1``, and the weight of an index ``(k1, ..., kn)`` is
  ``sum(2 k_i + 1)``.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import math
import functools
import itertools
import collections
from fractions import Fraction

# local
from .util import debug
from .util import config
from .scalar import QSeriesL
from .scalar import bernoulli
from .scalar import sigma
from .scalar import primitive_dlog
from .linalg import RationalMatrix
from .freelie import NCPoly
from .freelie import is_lie
from .derivations import apply
from .derivations import epsilon_tilde
from .exceptions import DomainError


## Globals
SYMBOLS = '0123456789'
logging = debug.Logger('mouldkit.eisenstein')


def _default_order():
  return config.Config().caps['q_order']


class EisensteinSeries(object):

  """ The truncated expansion of ``G_2k``: constant term ``-B_2k / 4k``
      (``-1`` for ``k = 0``) plus ``sum sigma_(2k-1)(n) q^n``. """

  __slots__ = ('k', 'expansion')

  def __init__(self, k, expansion):
    self.k, self.expansion = k, expansion

  # ``G^infinity``: the constant term
  infinity = property(lambda self: self.expansion.coefficient(0, 0))

  # ``G^0``: the part vanishing at ``q = 0``
  finite = property(lambda self: self.expansion - self.infinity)

  N = property(lambda self: self.expansion.N)

  __eq__ = lambda self, other: (
    isinstance(other, EisensteinSeries) and self.k == other.k and (
      self.expansion == other.expansion))

  __hash__ = None

  __repr__ = lambda self: 'EisensteinSeries(k=%d, %s)' % (
    self.k, self.expansion)


@functools.lru_cache(maxsize=None)
def eisenstein_q(k, N=None):

  """ ``G_2k`` truncated at ``q^N``.

      :param k: Half-weight ``k >= 0``.
      :param N: ``q``-order, defaulting to the configured cap.

      :raises DomainError: If ``k`` or ``N`` is negative.

      :returns: :py:class:`EisensteinSeries`. """

  N = _default_order() if N is None else N
  if k < 0 or N < 0:
    raise DomainError(k if k < 0 else N, 'eisenstein_q')
  if not k:
    return EisensteinSeries(0, QSeriesL.constant(-1, N))
  coeffs = {(0, 0): -bernoulli(2 * k) / (4 * k)}
  for n in range(1, N + 1):
    coeffs[(n, 0)] = sigma(2 * k - 1, n)
  return EisensteinSeries(k, QSeriesL(coeffs, N, 0))


def index_weight(index):

  """ ``sum(2 k_i + 1)``. """

  return sum(2 * k + 1 for k in index)


def index_family(max_weight):

  """ Every index of weight at most ``max_weight``, the empty one included,
      ordered by weight, then length, then lexicographically. """

  family, frontier = [()], [()]
  while frontier:
    grown = []
    for index in frontier:
      for k in range((max_weight - index_weight(index) - 1) // 2 + 1):
        grown.append(index + (k,))
    family.extend(grown)
    frontier = grown
  return sorted(family, key=lambda i: (index_weight(i), len(i), i))


## == Iterated integrals == ##
def iter_integral(fs, N=None):

  """ ``I(f1, ..., fn) = -P(f1 I(f2, ..., fn))`` with ``I() = 1``, ``P``
      the primitive in ``L`` with zero integration constant.

      :param fs: :py:class:`QSeriesL` integrands without ``L``.
      :param N: ``q``-order, needed only for the empty list.

      :returns: :py:class:`QSeriesL` with ``L``-degree cap ``len(fs)``. """

  fs = list(fs)
  if not fs:
    return QSeriesL.constant(1, _default_order() if N is None else N)
  inner = iter_integral(fs[1:], N)
  return -primitive_dlog(fs[0].lift(len(fs) - 1) * inner, len(fs))


@functools.lru_cache(maxsize=None)
def eisenstein_integral(index, N=None):

  """ ``G_k = I(G_2k1, ..., G_2kn)``, memoized by ``(index, N)``.

      :param index: Tuple ``(k1, ..., kn)``.

      :returns: :py:class:`QSeriesL` with ``L``-degree cap ``n``. """

  N = _default_order() if N is None else N
  index = tuple(index)
  if not index:
    return QSeriesL.constant(1, N)
  inner = eisenstein_integral(index[1:], N)
  head = eisenstein_q(index[0], N).expansion.lift(len(index) - 1)
  return -primitive_dlog(head * inner, len(index))


def _shuffle_tuples(w1, w2):

  """ Shuffle product of two tuples, as a ``Counter`` of tuples. """

  out, total = collections.Counter(), len(w1) + len(w2)
  for chosen in itertools.combinations(range(total), len(w1)):
    left, right = iter(w1), iter(w2)
    out[tuple(next(left) if slot in chosen else next(right)
              for slot in range(total))] += 1
  return out


def iter_integral_oracle(fs, N=None):

  """ The regularized iterated integral, straight from its construction:
      ``I = sum_i J(R[f1|...|fi]) C(f(i+1)^inf, ..., fn^inf)`` where

        - ``R[f1|...|fn] = sum_i (-1)^(n-i) [f1|...|fi] sh
          [fn^inf|...|f(i+1)^inf]``,
        - ``J(g1|...|gm) = -P(g1 J(g2|...|gm))`` integrates towards ``q = 0``,
        - ``C(c1, ..., cm) = (-L)^m / m! c1...cm`` integrates constants
          towards ``tau = 0``.

      :returns: :py:class:`QSeriesL`, equal to :py:func:`iter_integral`. """

  fs = list(fs)
  n = len(fs)
  N = min([f.N for f in fs]) if fs else (
    _default_order() if N is None else N)
  constants = [f.coefficient(0, 0) for f in fs]
  letters = {('f', i): fs[i].truncate(N) for i in range(n)}
  letters.update({('c', i): QSeriesL.constant(constants[i], N)
                  for i in range(n)})

  @functools.lru_cache(maxsize=None)
  def J(word):
    if not word:
      return QSeriesL.constant(1, N)
    tail = J(word[1:])
    return -primitive_dlog(letters[word[0]].lift(len(word) - 1) * tail,
                           len(word))

  def R(length):
    terms = collections.Counter()
    for i in range(length + 1):
      head = tuple(('f', j) for j in range(i))
      tail = tuple(('c', j) for j in reversed(range(i, length)))
      for word, count in _shuffle_tuples(head, tail).items():
        terms[word] += (-1) ** (length - i) * count
    return terms

  L = QSeriesL.L(N, n)
  total = QSeriesL(None, N, n)
  for i in range(n + 1):
    convergent = QSeriesL(None, N, n)
    for word, count in R(i).items():
      if count:
        convergent = convergent + J(word).lift(n) * count
    tail = constants[i:]
    scale = functools.reduce(lambda x, y: x * y, tail, Fraction(1)) * (
      Fraction((-1) ** len(tail), math.factorial(len(tail))))
    power = QSeriesL.constant(1, N, n)
    for _ in tail:
      power = power * L
    total = total + convergent * (power * scale)
  return total


def q0_profile(fs, N=None):

  """ The expected ``q^0`` part ``(-L)^n / n! * prod f_i^inf``. """

  fs = list(fs)
  N = min([f.N for f in fs]) if fs else (
    _default_order() if N is None else N)
  coefficient = functools.reduce(
    lambda x, y: x * y, (f.coefficient(0, 0) for f in fs), Fraction(1))
  n = len(fs)
  return QSeriesL({(0, n): coefficient * Fraction(
    (-1) ** n, math.factorial(n))}, N, n)


def regularization_check(index, N=None):

  """ ``True`` if the ``q^0`` part of ``G_index`` is the expected profile. """

  series = [eisenstein_q(k, N).expansion for k in index]
  return eisenstein_integral(tuple(index), N).q0_part() == q0_profile(
    series, N)


def differential_check(index, N=None):

  """ ``True`` if ``d/dL G_(k1..kn) = -G_2k1 G_(k2..kn)``. """

  index = tuple(index)
  if not index:
    return not eisenstein_integral((), N).d_dL()
  head = eisenstein_q(index[0], N).expansion.lift(len(index))
  return eisenstein_integral(index, N).d_dL() == -(
    head * eisenstein_integral(index[1:], N).lift(len(index)))


def shuffle_check(left, right, N=None):

  """ ``True`` if ``G_left G_right`` is the sum of ``G`` over the shuffles of
      the two indices. """

  left, right = tuple(left), tuple(right)
  M = len(left) + len(right)
  product = eisenstein_integral(left, N).lift(M) * (
    eisenstein_integral(right, N).lift(M))
  total = None
  for word, count in _shuffle_tuples(left, right).items():
    term = eisenstein_integral(word, N).lift(M) * count
    total = term if total is None else total + term
  return product == total


def g_coefficient_identity_check(k, primes, N=None):

  """ ``True`` if for every prime ``p`` the ``q^p`` coefficient of the
      primitive of ``G^0_2k`` is ``(p^(2k-1) + 1) / p``.

      :raises DomainError: If ``k < 1``, some ``p`` is not prime, or
        exceeds ``N``. """

  N = _default_order() if N is None else N
  if k < 1:
    raise DomainError(k, 'g_coefficient_identity_check')
  primitive = primitive_dlog(eisenstein_q(k, N).finite)
  for p in primes:
    if p < 2 or p > N or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
      raise DomainError(p, 'g_coefficient_identity_check')
    if primitive.coefficient(p, 0) != Fraction(p ** (2 * k - 1) + 1, p):
      return False
  return True


def rank_check(indices, N=None, M=None):

  """ Exact rank of the coefficient vectors of ``G_index`` over the slots
      ``q^n L^m``, ``n <= N``, ``m <= M``.

      :param indices: Iterable of index tuples.
      :param M: ``L``-degree cap, defaulting to the longest index.

      :returns: ``int`` rank. """

  N = _default_order() if N is None else N
  indices = [tuple(i) for i in indices]
  M = max((len(i) for i in indices), default=0) if M is None else M
  slots = (N + 1) * (M + 1)
  if slots < len(indices):
    logging.warning('truncation N=%d, M=%d has %d slots for %d indices; '
                    'rank cannot be full.' % (N, M, slots, len(indices)))
  columns = [(n, m) for n in range(N + 1) for m in range(M + 1)]
  rows = []
  for index in indices:
    series = eisenstein_integral(index, N).truncate(N, M)
    rows.append([series.coefficient(n, m) for n, m in columns])
  rank = RationalMatrix(rows, len(columns)).rank() if rows else 0
  logging.debug('rank %d for %d iterated integrals.' % (rank, len(indices)))
  return rank


## == The series g acting on a == ##
def _composites(cap):

  """ ``(index, eps~_index(a))`` for every index with a nonzero image
      through weight ``cap``, found breadth-first. """

  found, frontier = [((), NCPoly.letter('a', cap))], [
    ((), NCPoly.letter('a', cap))]
  ks = range((cap - 1) // 2 + 1)
  while frontier:
    grown = []
    for index, element in frontier:
      for k in ks:
        image = apply(epsilon_tilde(2 * k, cap), element, cap)
        if image:
          grown.append(((k,) + index, image))
    found.extend(grown)
    frontier = grown
  logging.debug('%d eps~-composites through weight %d.' % (len(found), cap))
  return found


def g_action_on_a(cap, N=None):

  """ ``g a = sum_index G_index eps~_index(a)`` through weight ``cap``, with
      ``eps~_(k1..kn) = eps~_2k1 o ... o eps~_2kn``.

      :returns: :py:class:`NCPoly` with :py:class:`QSeriesL` coefficients, all
        sharing one ``L``-degree cap. """

  N = _default_order() if N is None else N
  composites = _composites(cap)
  M = max(len(index) for index, _ in composites)
  total = NCPoly.zero(cap)
  for index, element in composites:
    series = eisenstein_integral(index, N).lift(M)
    total = total + element.map_coefficients(lambda c: series * c)
  return total


def g_action_residual(cap, N=None):

  """ ``d/dL (g a) + (sum_k G_2k eps~_2k)(g a)``, zero when the differential
      equation holds. """

  N = _default_order() if N is None else N
  image = g_action_on_a(cap, N)
  M = max((c.M for c in image.terms.values()), default=0)
  residual = image.map_coefficients(lambda c: c.d_dL().lift(M))
  for k in range((cap - 1) // 2 + 1):
    eisenstein = eisenstein_q(k, N).expansion.lift(M)
    step = apply(epsilon_tilde(2 * k, cap), image, cap)
    residual = residual + step.map_coefficients(lambda c: c * eisenstein)
  return residual


## == Generating series over index symbols == ##
def symbol_weight(word):

  """ Weight of a symbol word, each digit ``k`` counting ``2k + 1``. """

  return sum(2 * SYMBOLS.index(ch) + 1 for ch in word)


def symbol_series(indices, N=None):

  """ ``sum G_index w_index`` over the given indices, ``w_index`` spelling
      each ``k`` by the digit ``k``.

      :raises DomainError: If some ``k`` has no symbol.

      :returns: :py:class:`NCPoly` with :py:class:`QSeriesL` coefficients,
        capped at the longest index. """

  N = _default_order() if N is None else N
  indices = [tuple(i) for i in indices]
  length = max((len(i) for i in indices), default=0)
  terms = {}
  for index in indices:
    if any(k >= len(SYMBOLS) for k in index):
      raise DomainError(index, 'symbol_series')
    terms[''.join(SYMBOLS[k] for k in index)] = eisenstein_integral(
      index, N).lift(length)
  return NCPoly(terms, length)


def eisenstein_generating_series(max_weight, N=None):

  """ ``sum G_index w_index`` over every index of weight ``<= max_weight``. """

  return symbol_series(index_family(max_weight), N)


def _within(series, max_weight):
  if max_weight is None:
    return series
  return NCPoly({w: c for w, c in series.terms.items()
                 if symbol_weight(w) <= max_weight}, series.cap)


def group_log(series, max_weight=None):

  """ ``log S = sum_(m>=1) (-1)^(m+1) / m (S - 1)^m``, truncated at the cap
      of ``S`` and, for symbol series, at symbol weight ``max_weight``.

      :raises DomainError: If ``S`` has no cap or constant term other than
        ``1``. """

  if series.cap is None or series.coefficient('') != 1:
    raise DomainError('series', 'group_log')
  shifted = _within(series - NCPoly({'': series.coefficient('')}),
                    max_weight)
  total, power, m = NCPoly.zero(series.cap), shifted, 1
  while power:
    total = total + power * Fraction((-1) ** (m + 1), m)
    power, m = _within(power * shifted, max_weight), m + 1
  return total


def generating_series_is_grouplike(max_weight, N=None):

  """ ``True`` if the log of the generating series is Lie-like through
      symbol weight ``max_weight``. """

  series = eisenstein_generating_series(max_weight, N)
  return is_lie(group_log(series, max_weight))


__all__ = (
  'SYMBOLS',
  'EisensteinSeries',
  'eisenstein_q',
  'index_weight',
  'index_family',
  'iter_integral',
  'eisenstein_integral',
  'iter_integral_oracle',
  'q0_profile',
  'regularization_check',
  'differential_check',
  'shuffle_check',
  'g_coefficient_identity_check',
  'rank_check',
  'g_action_on_a',
  'g_action_residual',
  'symbol_weight',
  'symbol_series',
  'eisenstein_generating_series',
  'group_log',
  'generating_series_is_grouplike')
