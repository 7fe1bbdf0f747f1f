# -*- coding: utf-8 -*-

"""

  moulds
  ~~~~~~

  rational-function valued moulds ``{P(u1..ur) | 0 <= r <= cap}``, the map
  ``ma`` from c-polynomials, the operator suite (``mu``, ``lu``, ``push``,
  ``swap``, ``dar``, ``delta`` and inverses), symmetry checks and the
  flexion operators ``arit``, ``arat`` and ``Darit``.

  every depth-``r`` value is held as a
  :py:class:`mouldkit.scalar.FormalFraction` in exactly ``r`` variables;
  :py:func:`mould` picks the narrowest class (constant, polynomial,
  rational) for a set of values.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import math
import operator
import functools
import itertools
import collections
from fractions import Fraction

# local
from .util import debug
from .scalar import MultiPoly
from .scalar import FormalFraction
from .scalar import fraction_sum_is_zero
from .freelie import NCPoly
from .freelie import CPoly
from .freelie import to_c_coordinates
from .freelie import lie_failure_weight
from .exceptions import DomainError
from .exceptions import ArityMismatch
from .exceptions import NotPolynomial
from .exceptions import NotLieLike


## Globals
ALPHABETS = ('u', 'v')
logging = debug.Logger('mouldkit.moulds')

# signs in front of ``arit`` and ``lu`` inside ``arat``
Convention = collections.namedtuple('Convention', ('arit', 'ad'))

CONVENTIONS = (
  Convention(-1, 1),
  Convention(-1, -1),
  Convention(1, 1),
  Convention(1, -1))

MADER = CONVENTIONS[0]


def _coerce_value(value, depth):

  """ A depth-``depth`` value as a fraction in ``depth`` variables.

      :raises ArityMismatch: If a nonconstant value has another arity. """

  value = FormalFraction.coerce(value)
  if value.nvars == depth:
    return value
  if value.num.is_constant and not value.factors:
    return FormalFraction(MultiPoly.constant(value.num.constant_term(), depth))
  raise ArityMismatch(depth, value.nvars)


def _zero(depth):
  return FormalFraction(MultiPoly.zero(depth))


def _total(terms, depth):
  return functools.reduce(operator.add, terms, _zero(depth))


class Mould(object):

  """ A mould truncated at depth ``cap``: a map from depth to value, zero
      where absent. Immutable; the ``alphabet`` (``u`` or ``v``) records
      whether the mould is on the swapped side. """

  __slots__ = ('cap', 'alphabet', '_values')

  def __init__(self, values=None, cap=0, alphabet='u'):

    """ Initialize a mould.

        :param values: Mapping or iterable of ``(depth, value)`` pairs, each
          value a :py:class:`FormalFraction`, :py:class:`MultiPoly` or
          scalar. Values above ``cap`` are dropped.
        :param cap: Depth cap ``R >= 0``.
        :param alphabet: ``'u'``, or ``'v'`` for a swapped mould.

        :raises DomainError: On a negative depth or cap, or an unknown
          alphabet.
        :raises ArityMismatch: If a depth-``r`` value is not in ``r``
          variables. """

    if cap < 0:
      raise DomainError(cap, self.__class__.__name__)
    if alphabet not in ALPHABETS:
      raise DomainError(alphabet, self.__class__.__name__)
    clean = {}
    items = values.items() if isinstance(values, dict) else (values or ())
    for depth, value in items:
      if depth < 0:
        raise DomainError(depth, self.__class__.__name__)
      if depth > cap:
        continue
      value = _coerce_value(value, depth)
      clean[depth] = clean[depth] + value if depth in clean else value
    self.cap, self.alphabet = cap, alphabet
    self._values = {d: v for d, v in clean.items() if v}
    self._validate()

  def _validate(self):
    pass

  ### === Public Attributes === ###

  values = property(lambda self: dict(self._values))

  is_zero = property(lambda self: not self._values)

  __bool__ = lambda self: bool(self._values)

  __hash__ = None

  def __getitem__(self, depth):

    """ The depth-``depth`` value (zero where absent). """

    return self._values.get(depth) or _zero(depth)

  def depths(self):

    """ Sorted depths carrying a nonzero value. """

    return sorted(self._values)

  def constant_term(self):

    """ ``P(empty)``, as a :py:class:`fractions.Fraction`. """

    return self[0].num.constant_term()

  def poly(self, depth):

    """ The depth-``depth`` value as a :py:class:`MultiPoly`.

        :raises NotPolynomial: If that value is not polynomial. """

    return self[depth].to_poly(depth)

  def evaluate(self, depth, point):

    """ Exact value at depth ``len(point)`` of the given rational point. """

    if len(point) != depth:
      raise ArityMismatch(depth, len(point))
    return self[depth].evaluate(point)

  def with_cap(self, cap):

    """ The same values re-truncated (or zero-padded) at depth ``cap``. """

    return mould(self._values, cap, self.alphabet)

  def depth_part(self, depth):

    """ The mould concentrated in depth ``depth``. """

    return mould({depth: self[depth]}, self.cap, self.alphabet)

  def map(self, function, alphabet=None, cap=None):

    """ Apply ``function(value, depth)`` at every depth ``0..cap``.

        :returns: A new mould, classified by :py:func:`mould`. """

    cap = self.cap if cap is None else cap
    return mould({r: function(self[r], r) for r in range(cap + 1)}, cap,
                 alphabet or self.alphabet)

  ## == Linear structure == ##
  def __add__(self, other):
    if not isinstance(other, Mould):
      return NotImplemented
    cap = min(self.cap, other.cap)
    return mould({r: self[r] + other[r] for r in range(cap + 1)}, cap,
                 self.alphabet)

  def __neg__(self):
    return mould({r: -v for r, v in self._values.items()}, self.cap,
                 self.alphabet)

  def __sub__(self, other):
    if not isinstance(other, Mould):
      return NotImplemented
    return self + (-other)

  def __mul__(self, factor):
    if isinstance(factor, Mould):
      return NotImplemented
    return mould({r: v * factor for r, v in self._values.items()}, self.cap,
                 self.alphabet)

  __rmul__ = __mul__

  def __eq__(self, other):
    if not isinstance(other, Mould):
      return NotImplemented
    if self.alphabet != other.alphabet:
      return False
    return all(self[r] == other[r] for r in set(self._values) | set(
      other._values))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __str__(self):
    return '{%s}' % ', '.join('%d: %s' % (r, self._values[r]) for r in (
      self.depths()))

  __repr__ = lambda self: '%s(cap=%d, %s%s)' % (
    self.__class__.__name__, self.cap, str(self),
    '' if self.alphabet == 'u' else ", alphabet='v'")


class RatMould(Mould):

  """ Mould with rational-function values. """

  __slots__ = ()


class PolyMould(Mould):

  """ Mould whose every value is a polynomial. """

  __slots__ = ()

  def _validate(self):
    for depth, value in list(self._values.items()):
      self._values[depth] = FormalFraction(value.to_poly(depth))

  @classmethod
  def parse(cls, texts, cap=None, alphabet='u'):

    """ Build from canonical text values, one per depth.

        :param texts: Mapping from depth to polynomial literal.
        :param cap: Depth cap, defaulting to the largest depth given.

        :raises ParseError: On a malformed literal. """

    texts = {int(r): t for r, t in texts.items()}
    cap = max(texts, default=0) if cap is None else cap
    return mould({r: MultiPoly.parse(t, r) for r, t in texts.items()}, cap,
                 alphabet)


class ConstantMould(PolyMould):

  """ Mould whose value at every depth is a constant. """

  __slots__ = ()

  def _validate(self):
    super(ConstantMould, self)._validate()
    for depth, value in self._values.items():
      if not value.num.is_constant:
        raise DomainError(str(value), 'ConstantMould')

  def constant(self, depth):

    """ The depth-``depth`` constant, as a :py:class:`fractions.Fraction`. """

    return self[depth].num.constant_term()


def mould(values=None, cap=0, alphabet='u'):

  """ Build a mould of the narrowest fitting class: reduce every value, then
      pick :py:class:`ConstantMould`, :py:class:`PolyMould` or
      :py:class:`RatMould`. """

  generic = Mould(values, cap, alphabet)
  reduced = {r: v.reduce() if v.factors else v for r, v in (
    generic._values.items())}
  if any(v.factors for v in reduced.values()):
    return RatMould(reduced, cap, alphabet)
  if all(v.num.is_constant for v in reduced.values()):
    return ConstantMould(reduced, cap, alphabet)
  return PolyMould(reduced, cap, alphabet)


def zero_mould(cap=0):

  """ The zero mould. """

  return ConstantMould(None, cap)


def unit_mould(cap=0):

  """ The unit of ``mu``: ``1`` in depth 0, zero elsewhere. """

  return ConstantMould({0: 1}, cap)


## == ma == ##
def ma_sign(indices):

  """ Sign of ``c_k1...c_kr`` under ``ma``: ``(-1)^(k1+...+kr-r)``. """

  return -1 if (sum(indices) - len(indices)) % 2 else 1


def ma(p, depth=None):

  """ ``ma(c_k1...c_kr) = (-1)^(k1+...+kr-r) u1^(k1-1)...ur^(kr-1)``,
      extended linearly.

      :param p: :py:class:`CPoly`, or :py:class:`NCPoly` in the span of the
        c-monomials (converted first).
      :param depth: Depth cap of the result, defaulting to the largest
        depth present.

      :returns: :py:class:`PolyMould`. """

  if isinstance(p, NCPoly):
    p = to_c_coordinates(p)
  blocks = collections.defaultdict(dict)
  for indices, coeff in p.terms.items():
    exps, block = tuple(k - 1 for k in indices), blocks[len(indices)]
    value = ma_sign(indices) * coeff
    block[exps] = block[exps] + value if exps in block else value
  cap = max(blocks, default=0) if depth is None else depth
  return mould({r: MultiPoly(r, terms) for r, terms in blocks.items()}, cap)


def ma_inverse(P):

  """ The c-polynomial with ``ma`` equal to the polynomial mould ``P``.

      :raises NotPolynomial: If some value of ``P`` is not polynomial. """

  terms = {}
  for depth in P.depths():
    for exps, coeff in P.poly(depth).terms.items():
      indices = tuple(e + 1 for e in exps)
      terms[indices] = ma_sign(indices) * coeff
  return CPoly(terms)


## == Products == ##
def mu(P, Q):

  """ ``mu(P, Q)(u1..ur) = sum_i P(u1..ui) Q(u(i+1)..ur)``. """

  cap, values = min(P.cap, Q.cap), collections.defaultdict(list)
  for i, j in itertools.product(P.depths(), Q.depths()):
    r = i + j
    if r <= cap:
      values[r].append(P[i].embed(r, 0) * Q[j].embed(r, i))
  return mould({r: _total(terms, r) for r, terms in values.items()}, cap,
               P.alphabet)


def lu(P, Q):

  """ ``lu(P, Q) = mu(P, Q) - mu(Q, P)``. """

  return mu(P, Q) - mu(Q, P)


## == Substitution operators == ##
@functools.lru_cache(maxsize=None)
def _push_images(depth):
  return tuple(MultiPoly.variable(i, depth) for i in range(2, depth + 1)) + (
    MultiPoly.linear([-1] * depth),)


@functools.lru_cache(maxsize=None)
def _swap_images(depth, alphabet):

  """ ``u -> v``: ``(v_r, v_(r-1) - v_r, ..., v_1 - v_2)``; ``v -> u`` is its
      inverse, ``(u_1 + ... + u_r, ..., u_1 + u_2, u_1)``. """

  if alphabet == 'u':
    images = [MultiPoly.variable(depth, depth)]
    for j in range(2, depth + 1):
      images.append(MultiPoly.variable(depth - j + 1, depth) - (
        MultiPoly.variable(depth - j + 2, depth)))
    return tuple(images)
  return tuple(MultiPoly.linear([1] * (depth + 1 - j) + [0] * (j - 1))
               for j in range(1, depth + 1))


def _push_value(value, depth, times=1):
  for _ in range(times % (depth + 1) if depth else 0):
    value = value.substitute(_push_images(depth), depth)
  return value


def push(P, times=1):

  """ ``push(P)(u1..ur) = P(u2, ..., ur, -u1-...-ur)``, ``times`` times. """

  return P.map(lambda value, r: _push_value(value, r, times))


def swap(P):

  """ ``swap(A)(v1..vr) = A(vr, v(r-1)-vr, ..., v1-v2)`` on a ``u``-mould;
      on a ``v``-mould the inverse substitution, so ``swap`` is an
      involution. """

  target = 'v' if P.alphabet == 'u' else 'u'
  return P.map(lambda value, r: value.substitute(
    _swap_images(r, P.alphabet), r) if r else value, alphabet=target)


def _product(depth):
  return MultiPoly(depth, {(1,) * depth: 1})


def dar(P):

  """ ``dar(P) = u1...ur P``. """

  return P.map(lambda value, r: value * _product(r))


def dar_inv(P):

  """ ``dar^-1(P) = P / (u1...ur)``. """

  return P.map(lambda value, r: FormalFraction(
    value.num, value.factors + tuple(MultiPoly.variables(r))))


def delta(P):

  """ ``delta(P) = u1...ur (u1+...+ur) P``; zero in depth 0. """

  return P.map(lambda value, r: value * _product(r) * MultiPoly.linear(
    [1] * r) if r else _zero(0))


def delta_inv(P):

  """ ``delta^-1(P) = P / (u1...ur (u1+...+ur))``.

      :raises DomainError: If ``P(empty) != 0``. """

  if P[0]:
    raise DomainError(P.constant_term(), 'delta_inv')
  return P.map(lambda value, r: FormalFraction(
    value.num, value.factors + tuple(MultiPoly.variables(r)) + (
      MultiPoly.linear([1] * r),)) if r else value)


def mul_by_minus_sum(P):

  """ Multiply the depth-``r`` value by ``-(u1+...+ur)``; ``ad(a)`` on the
      c-side. """

  return P.map(lambda value, r: value * MultiPoly.linear([-1] * r) if r
               else _zero(0))


## == Symmetries == ##
def _relabel(value, order):

  """ ``value(u_order[0], ..., u_order[r-1])`` for a permutation ``order``
      of ``1..r``. """

  depth = len(order)

  def move(p):
    if p.nvars != depth:
      return MultiPoly.constant(p.constant_term(), depth)
    terms = {}
    for exps, coeff in p.terms.items():
      target = [0] * depth
      for slot, e in enumerate(exps):
        target[order[slot] - 1] += e
      terms[tuple(target)] = coeff
    return MultiPoly(depth, terms)

  return FormalFraction(move(value.num), tuple(
    move(f) for f in value.factors))


@functools.lru_cache(maxsize=None)
def shuffle_orders(i, depth):

  """ The shuffles of ``(u1..ui)`` with ``(u(i+1)..ur)``, as index tuples. """

  orders = []
  for chosen in itertools.combinations(range(depth), i):
    left, right = iter(range(1, i + 1)), iter(range(i + 1, depth + 1))
    orders.append(tuple(next(left) if slot in chosen else next(right)
                        for slot in range(depth)))
  return tuple(orders)


def shuffle_terms(value, depth, i):

  """ The summands of the ``(i, depth - i)`` shuffle sum of ``value``. """

  return [_relabel(value, order) for order in shuffle_orders(i, depth)]


def alternality_defect(P):

  """ The first ``(r, i)`` whose shuffle sum does not vanish.

      :returns: Pair ``(depth, split)``, or ``None`` if ``P`` is alternal. """

  for depth in P.depths():
    for i in range(1, depth // 2 + 1):
      if not fraction_sum_is_zero(shuffle_terms(P[depth], depth, i)):
        logging.debug('alternality fails at depth %d, split %d.' % (
          depth, i))
        return depth, i
  return None


def is_alternal(P):

  """ ``True`` if every shuffle sum vanishes, ``2 <= r <= cap``,
      ``1 <= i <= r // 2``. """

  return alternality_defect(P) is None


def bialternality_constants(P):

  """ Per depth ``r >= 2``, the constant ``kappa_r`` that makes
      ``swap(P) + kappa`` alternal, if one exists.

      A constant ``K`` in depth ``r`` adds ``C(r, i) K`` to the ``(i, r-i)``
      shuffle sum, so each sum must equal ``C(r, i) c_r`` for a single
      ``c_r``, and then ``kappa_r = -c_r``.

      :returns: ``dict`` from depth to :py:class:`fractions.Fraction`, or
        ``None``. """

  swapped, constants = swap(P), {}
  for depth in range(2, P.cap + 1):
    level, value = None, swapped[depth]
    for i in range(1, depth // 2 + 1):
      total = _total(shuffle_terms(value, depth, i), depth).reduce()
      if total.factors or not total.num.is_constant:
        logging.debug('swap shuffle sum at depth %d, split %d is not '
                      'constant.' % (depth, i))
        return None
      scaled = total.num.constant_term() / math.comb(depth, i)
      if level is not None and scaled != level:
        return None
      level = scaled
    constants[depth] = -level if level else Fraction(0)
  return constants


def is_bialternal(P):

  """ Alternal, with swap alternal up to a constant-valued mould. """

  return is_alternal(P) and bialternality_constants(P) is not None


def is_delta_bialternal(P):

  """ ``True`` if ``delta^-1(P)`` is bialternal (``False`` when
      ``P(empty) != 0``). """

  if P[0]:
    return False
  return is_bialternal(delta_inv(P))


def is_push_invariant(P):

  """ ``push(P) == P`` at every depth. """

  return all(_push_value(P[r], r) == P[r] for r in P.depths())


def push_neutrality_defect(P):

  """ The first depth ``r >= 2`` whose ``r + 1`` push-images do not sum to
      zero, or ``None``. """

  for depth in P.depths():
    if depth < 2:
      continue
    terms = [_push_value(P[depth], depth, j) for j in range(depth + 1)]
    if not fraction_sum_is_zero(terms):
      logging.debug('push-neutrality fails at depth %d.' % depth)
      return depth
  return None


def is_push_neutral(P):

  """ ``sum_(j=0..r) push^j(P) = 0`` at every depth ``2 <= r <= cap``. """

  return push_neutrality_defect(P) is None


def push_orbit(P):

  """ ``sum_(j=0..r) push^j(P)`` per depth: a push-invariant mould. """

  return P.map(lambda value, r: _total(
    [_push_value(value, r, j) for j in range(r + 1)], r))


## == Flexions == ##
def _span(low, high, depth):

  """ ``u_low + ... + u_high`` among ``depth`` variables. """

  return MultiPoly.linear([1 if low <= k <= high else 0
                           for k in range(1, depth + 1)])


@functools.lru_cache(maxsize=None)
def _upper_images(depth, i, j):

  """ Variables of ``a ⌈c`` for ``w = abc``, ``|a| = i``, ``|b| = j``,
      ``c`` nonempty: the first letter of ``c`` absorbs ``b``. """

  return tuple(
    [MultiPoly.variable(k, depth) for k in range(1, i + 1)] +
    [_span(i + 1, i + j + 1, depth)] +
    [MultiPoly.variable(k, depth) for k in range(i + j + 2, depth + 1)])


@functools.lru_cache(maxsize=None)
def _lower_images(depth, i, j):

  """ Variables of ``a⌉ c``, ``a`` nonempty: its last letter absorbs
      ``b``. """

  return tuple(
    [MultiPoly.variable(k, depth) for k in range(1, i)] +
    [_span(i, i + j, depth)] +
    [MultiPoly.variable(k, depth) for k in range(i + j + 1, depth + 1)])


def _decompositions(P, A, depth):

  """ ``(i, j, s)`` for ``w = abc`` with ``|a| = i``, ``|b| = j >= 1`` and
      ``|a| + |c| = s``, where ``P`` and ``A`` do not vanish. """

  for j in P.depths():
    s = depth - j
    if j < 1 or s < 0 or not A[s]:
      continue
    for i in range(s + 1):
      yield i, j, s


def arit(P, A):

  """ ``(arit(P) A)(w) = sum_(w=abc, c nonempty) A(a⌈c) P(b)
      - sum_(w=abc, a nonempty) A(a⌉c) P(b)``. """

  cap, values = min(P.cap, A.cap), {}
  for depth in range(1, cap + 1):
    terms = []
    for i, j, s in _decompositions(P, A, depth):
      inner = P[j].embed(depth, i)
      if s - i:
        terms.append(A[s].substitute(_upper_images(depth, i, j), depth) *
                     inner)
      if i:
        terms.append(-(A[s].substitute(_lower_images(depth, i, j), depth) *
                       inner))
    values[depth] = _total(terms, depth)
  return mould(values, cap, A.alphabet)


def arat(P, A):

  """ ``arat(P) A = -arit(P) A + lu(P, A)``. """

  return lu(P, A) - arit(P, A)


def arat_direct(P, A):

  """ ``arat(P) A`` over all decompositions ``w = abc``:
      ``sum (A(a⌉c) - A(a⌈c)) P(b)`` with ``∅⌉c = c`` and ``a⌈∅ = a``. """

  cap, values = min(P.cap, A.cap), {}
  for depth in range(1, cap + 1):
    terms = []
    for i, j, s in _decompositions(P, A, depth):
      value = A[s]
      lower = value.embed(depth, j) if not i else value.substitute(
        _lower_images(depth, i, j), depth)
      upper = value.embed(depth, 0) if i == s else value.substitute(
        _upper_images(depth, i, j), depth)
      terms.append((lower - upper) * P[j].embed(depth, i))
    values[depth] = _total(terms, depth)
  return mould(values, cap, A.alphabet)


def arat_with(P, A, convention=MADER):

  """ ``convention.arit * arit(P) A + convention.ad * lu(P, A)``. """

  return arit(P, A) * convention.arit + lu(P, A) * convention.ad


def darit(P, A, convention=MADER, demand_polynomial=False):

  """ ``Darit(P) A = dar(arat(delta^-1 P) dar^-1 A)``.

      :param P: Mould with ``P(empty) = 0``.
      :param A: Mould.
      :param convention: Signs of ``arit`` and ``lu`` inside ``arat``.
      :param demand_polynomial: Require a polynomial result.

      :raises DomainError: If ``P(empty) != 0``.
      :raises NotPolynomial: If a polynomial result was demanded and some
        depth is not polynomial.

      :returns: Mould; polynomial results come back as
        :py:class:`PolyMould`. """

  result = dar(arat_with(delta_inv(P), dar_inv(A), convention))
  if demand_polynomial and isinstance(result, RatMould):
    for depth in result.depths():
      if result[depth].factors:
        raise NotPolynomial(depth)
  return result


def mader_convention(cases):

  """ The convention under which ``ma(D(f)) = Darit(ma(D(a))) ma(f)`` holds
      for every ``(D, f)`` in ``cases``.

      :param cases: Iterable of ``(Derivation, NCPoly)`` pairs, each ``f``
        Lie-like without a linear ``a``-term.

      :raises NotLieLike: If some ``f`` is not Lie-like.

      :returns: The unique fitting :py:class:`Convention`, or ``None`` if
        none or several fit. """

  prepared = []
  for D, f in cases:
    weight = lie_failure_weight(f)
    if weight is not None:
      raise NotLieLike(weight)
    images = [to_c_coordinates(x) for x in (D(f), D.val_a, f)]
    depth = max(max(x.depths(), default=0) for x in images)
    prepared.append([ma(x, depth) for x in images])
  fits = [convention for convention in CONVENTIONS if all(
    darit(P, A, convention) == left for left, P, A in prepared)]
  logging.info('conventions satisfying the derivation identity: %s' % (
    ', '.join(str(tuple(c)) for c in fits) or 'none'))
  return fits[0] if len(fits) == 1 else None


## == Random data == ##
def random_poly(rng, nvars, degree, terms=3, bound=3):

  """ A random polynomial in ``nvars`` variables of total degree at most
      ``degree`` with at most ``terms`` monomials and integer coefficients in
      ``[-bound, bound]``, drawn from the ``random.Random`` ``rng``. """

  out = MultiPoly.zero(nvars)
  for _ in range(terms):
    exps = [0] * nvars
    for _ in range(rng.randint(0, degree)):
      exps[rng.randrange(nvars)] += 1
    out = out + MultiPoly(nvars, {tuple(exps): rng.randint(-bound, bound)})
  return out


def random_mould(rng, cap, degree=2, terms=3, constant=False):

  """ A random polynomial mould with depth cap ``cap``; ``P(empty)`` is zero
      unless ``constant`` is set. """

  values = {r: random_poly(rng, r, degree, terms) for r in range(1, cap + 1)}
  if constant:
    values[0] = rng.randint(-3, 3)
  return mould(values, cap)


def random_push_neutral(rng, cap, degree=2, terms=3):

  """ ``Q - push(Q)`` for a random ``Q``. """

  Q = random_mould(rng, cap, degree, terms)
  return Q - push(Q)


__all__ = (
  'Convention',
  'CONVENTIONS',
  'MADER',
  'Mould',
  'RatMould',
  'PolyMould',
  'ConstantMould',
  'mould',
  'zero_mould',
  'unit_mould',
  'ma_sign',
  'ma',
  'ma_inverse',
  'mu',
  'lu',
  'push',
  'swap',
  'dar',
  'dar_inv',
  'delta',
  'delta_inv',
  'mul_by_minus_sum',
  'shuffle_orders',
  'shuffle_terms',
  'alternality_defect',
  'is_alternal',
  'bialternality_constants',
  'is_bialternal',
  'is_delta_bialternal',
  'is_push_invariant',
  'push_neutrality_defect',
  'is_push_neutral',
  'push_orbit',
  'arit',
  'arat',
  'arat_direct',
  'arat_with',
  'darit',
  'mader_convention',
  'random_poly',
  'random_mould',
  'random_push_neutral')
