# -*- coding: utf-8 -*-

"""

  scalar kernel
  ~~~~~~~~~~~~~

  exact rational arithmetic, arithmetic functions, commutative
  multivariate polynomials in ``u1..ur``, formal fractions of them,
  and truncated series in ``q`` with polynomial dependence on ``L``.

  the Bernoulli convention is the one of ``z/(e^z - 1)``, so
  ``B_1 = -1/2``. the Bernoulli operator of :py:mod:`mouldkit.freelie`
  depends on it.

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
from .exceptions import DomainError
from .exceptions import ArityMismatch
from .exceptions import ZeroDenominator
from .exceptions import NotPolynomial
from .exceptions import ParseError


## Globals
Rational = Fraction
_SCALARS = (int, Fraction)
_POLY_TERM = re.compile(r'([+-]?)([^+-]+)')
_POLY_VAR = re.compile(r'^u(\d+)(?:\^(\d+))?$')
_POLY_NUM = re.compile(r'^(\d+)(?:/(\d+))?$')


def rational(value):

  """ Coerce an ``int``, ``Fraction`` or ``"p/q"`` string to a
      :py:class:`Rational`.

      :param value: Value to coerce.

      :raises ParseError: If ``value`` is a string that is not a rational
        literal.

      :returns: Exact :py:class:`Rational`. """

  if isinstance(value, Fraction):
    return value
  if isinstance(value, int):
    return Fraction(value)
  try:
    return Fraction(str(value).strip())
  except (ValueError, ZeroDivisionError):
    raise ParseError('rational', repr(value))


## == Arithmetic functions == ##
@functools.lru_cache(maxsize=None)
def bernoulli(n):

  """ Bernoulli number ``B_n`` with ``B_1 = -1/2``.

      :param n: Index, ``n >= 0``.

      :raises DomainError: For negative ``n``.

      :returns: :py:class:`Rational` ``B_n``. """

  if n < 0:
    raise DomainError(n, 'bernoulli')
  if n == 0:
    return Fraction(1)
  if n > 1 and n % 2:
    return Fraction(0)
  total = sum((math.comb(n + 1, j) * bernoulli(j) for j in range(n)),
              Fraction(0))
  return -total / (n + 1)


def sigma(ell, n):

  """ Divisor function ``sigma_ell(n)``, the sum of ``d ** ell`` over the
      positive divisors ``d`` of ``n``.

      :param ell: Exponent, ``ell >= 0``.
      :param n: Argument, ``n >= 1``.

      :raises DomainError: If ``n <= 0`` or ``ell < 0``.

      :returns: ``int`` divisor sum. """

  if n <= 0:
    raise DomainError(n, 'sigma')
  if ell < 0:
    raise DomainError(ell, 'sigma')
  total = 0
  for d in range(1, math.isqrt(n) + 1):
    if n % d == 0:
      total += d ** ell
      if d * d != n:
        total += (n // d) ** ell
  return total


class MultiPoly(object):

  """ Commutative polynomial in ``nvars`` variables ``u1..ur`` with
      :py:class:`Rational` coefficients, stored as a map from exponent
      tuples to nonzero coefficients. Immutable. """

  __slots__ = ('nvars', '_terms', '_hash')

  def __init__(self, nvars, terms=None):

    """ Initialize a polynomial.

        :param nvars: Variable count ``r >= 0``.
        :param terms: Mapping or iterable of ``(exps, coefficient)`` pairs.
          Repeated exponents accumulate; zero coefficients are dropped.

        :raises ArityMismatch: If an exponent tuple has the wrong length. """

    clean = {}
    items = terms.items() if isinstance(terms, dict) else (terms or ())
    for exps, coeff in items:
      exps = tuple(exps)
      if len(exps) != nvars:
        raise ArityMismatch(nvars, len(exps))
      clean[exps] = clean.get(exps, 0) + coeff
    self.nvars = nvars
    self._terms = {e: Fraction(c) for e, c in clean.items() if c}
    self._hash = None

  ## == Constructors == ##
  @classmethod
  def zero(cls, nvars=0):

    """ The zero polynomial. """

    return cls(nvars)

  @classmethod
  def constant(cls, value, nvars=0):

    """ Constant polynomial ``value`` in ``nvars`` variables. """

    return cls(nvars, {(0,) * nvars: rational(value)})

  @classmethod
  def one(cls, nvars=0):

    """ The unit polynomial. """

    return cls.constant(1, nvars)

  @classmethod
  def variable(cls, index, nvars):

    """ The variable ``u<index>``, counting from 1.

        :param index: Variable index, ``1 <= index <= nvars``.
        :param nvars: Variable count.

        :raises DomainError: If ``index`` is out of range.

        :returns: Degree-1 monomial polynomial. """

    if not 1 <= index <= nvars:
      raise DomainError(index, 'MultiPoly.variable')
    exps = [0] * nvars
    exps[index - 1] = 1
    return cls(nvars, {tuple(exps): 1})

  @classmethod
  def variables(cls, nvars):

    """ All of ``u1..u<nvars>``, as a list. """

    return [cls.variable(i, nvars) for i in range(1, nvars + 1)]

  @classmethod
  def linear(cls, coeffs):

    """ The linear form ``sum(c_i * u_i)`` in ``len(coeffs)`` variables. """

    nvars = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
      if c:
        exps = [0] * nvars
        exps[i] = 1
        terms[tuple(exps)] = c
    return cls(nvars, terms)

  @classmethod
  def parse(cls, text, nvars=None):

    """ Parse the canonical text form, e.g. ``"2*u1^3-1/2*u1*u2+1"``.

        :param text: Polynomial literal. Whitespace is ignored.
        :param nvars: Variable count; defaults to the largest index used.

        :raises ParseError: If ``text`` is not a polynomial literal, or uses a
          variable beyond ``nvars``.

        :returns: Parsed :py:class:`MultiPoly`. """

    source = ''.join(str(text).split())
    if not source:
      raise ParseError('polynomial', repr(text))

    parsed, consumed = [], 0
    for match in _POLY_TERM.finditer(source):
      if match.start() != consumed:
        raise ParseError('polynomial', repr(text))
      consumed = match.end()
      sign, body = match.groups()
      coeff, powers = Fraction(-1 if sign == '-' else 1), {}
      for factor in body.split('*'):
        var, num = _POLY_VAR.match(factor), _POLY_NUM.match(factor)
        if var:
          index, power = int(var.group(1)), int(var.group(2) or 1)
          if index < 1:
            raise ParseError('polynomial', repr(text))
          powers[index] = powers.get(index, 0) + power
        elif num:
          denominator = int(num.group(2) or 1)
          if not denominator:
            raise ParseError('polynomial', repr(text))
          coeff *= Fraction(int(num.group(1)), denominator)
        else:
          raise ParseError('polynomial', repr(text))
      parsed.append((coeff, powers))
    if consumed != len(source):
      raise ParseError('polynomial', repr(text))

    width = max([max(p) for _, p in parsed if p] or [0])
    if nvars is None:
      nvars = width
    elif width > nvars:
      raise ParseError('polynomial', repr(text))

    terms = []
    for coeff, powers in parsed:
      terms.append((tuple(powers.get(i, 0) for i in range(1, nvars + 1)),
                    coeff))
    return cls(nvars, terms)

  ### === Public Attributes === ###

  # read-only term view
  terms = property(lambda self: dict(self._terms))

  # zero-ness
  is_zero = property(lambda self: not self._terms)

  # total degree (-1 for the zero polynomial)
  degree = property(lambda self: max(
    (sum(e) for e in self._terms), default=-1))

  # constant-ness
  is_constant = property(lambda self: all(
    not any(e) for e in self._terms))

  def items(self):

    """ Terms in canonical (graded-lex, descending) order. """

    order = sorted(self._terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
    return [(e, self._terms[e]) for e in order]

  def coefficient(self, exps):

    """ Coefficient of the monomial with exponents ``exps`` (or ``0``). """

    return self._terms.get(tuple(exps), Fraction(0))

  def constant_term(self):

    """ Coefficient of the unit monomial. """

    return self.coefficient((0,) * self.nvars)

  def is_homogeneous(self):

    """ ``True`` if every term has the same total degree. """

    return len({sum(e) for e in self._terms}) <= 1

  def homogeneous_part(self, degree):

    """ The degree-``degree`` part of this polynomial. """

    return MultiPoly(self.nvars, {
      e: c for e, c in self._terms.items() if sum(e) == degree})

  def leading_term(self):

    """ Lexicographically largest ``(exps, coefficient)`` pair.

        :raises DomainError: On the zero polynomial. """

    if not self._terms:
      raise DomainError('0', 'MultiPoly.leading_term')
    exps = max(self._terms)
    return exps, self._terms[exps]

  ## == Ring operations == ##
  def _coerce(self, other):
    if isinstance(other, MultiPoly):
      if other.nvars != self.nvars:
        if other.is_constant:
          return MultiPoly.constant(other.constant_term(), self.nvars)
        if self.is_constant:
          return other
        raise ArityMismatch(self.nvars, other.nvars)
      return other
    if isinstance(other, _SCALARS):
      return MultiPoly.constant(other, self.nvars)
    return None

  def __add__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    left = self
    if other.nvars != self.nvars:  # self is a constant here
      left = MultiPoly.constant(self.constant_term(), other.nvars)
    terms = dict(left._terms)
    for e, c in other._terms.items():
      terms[e] = terms.get(e, 0) + c
    return MultiPoly(other.nvars, terms)

  __radd__ = __add__

  def __neg__(self):
    return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

  def __sub__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    if isinstance(other, _SCALARS):
      if not other:
        return MultiPoly(self.nvars)
      return MultiPoly(self.nvars, {
        e: c * other for e, c in self._terms.items()})
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    if self.is_constant and other.nvars != self.nvars:
      return other * self.constant_term()
    terms = collections.defaultdict(Fraction)
    for (e1, c1), (e2, c2) in itertools.product(
          self._terms.items(), other._terms.items()):
      terms[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return MultiPoly(self.nvars, terms)

  __rmul__ = __mul__

  def __truediv__(self, other):

    """ Division by a nonzero scalar only; see :py:meth:`divide_exact`. """

    if isinstance(other, _SCALARS):
      if not other:
        raise ZeroDenominator(str(self))
      return self * (Fraction(1) / Fraction(other))
    return NotImplemented

  def __pow__(self, exponent):
    if not isinstance(exponent, int) or exponent < 0:
      raise DomainError(exponent, 'MultiPoly.__pow__')
    result, base = MultiPoly.one(self.nvars), self
    while exponent:
      if exponent & 1:
        result = result * base
      exponent >>= 1
      if exponent:
        base = base * base
    return result

  def __eq__(self, other):
    if isinstance(other, _SCALARS):
      return self.is_constant and self.constant_term() == other
    if not isinstance(other, MultiPoly):
      return NotImplemented
    if self.nvars != other.nvars and not (
          self.is_constant and other.is_constant):
      return False
    return self._terms == other._terms or (
      self.is_constant and other.is_constant and (
        self.constant_term() == other.constant_term()))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    if self._hash is None:
      self._hash = hash(self.constant_term()) if self.is_constant else (
        hash((self.nvars, frozenset(self._terms.items()))))
    return self._hash

  __bool__ = lambda self: bool(self._terms)

  def __str__(self):
    if not self._terms:
      return '0'
    text = []
    for exps, coeff in self.items():
      mono = '*'.join(
        ('u%d' % (i + 1)) + ('^%d' % e if e > 1 else '')
        for i, e in enumerate(exps) if e)
      mag = abs(coeff)
      if not mono:
        body = str(mag)
      elif mag == 1:
        body = mono
      else:
        body = '%s*%s' % (mag, mono)
      text.append(('-' if coeff < 0 else '+') + body)
    joined = ''.join(text)
    return joined[1:] if joined.startswith('+') else joined

  __repr__ = lambda self: 'MultiPoly(%d, %s)' % (self.nvars, str(self))

  ## == Structure == ##
  def substitute(self, images, nvars=None):

    """ Compose with ``u_i -> images[i-1]``.

        :param images: One :py:class:`MultiPoly` per variable, all sharing a
          single target variable count.
        :param nvars: Target variable count, needed only when ``images`` is
          empty.

        :raises ArityMismatch: On a wrong image count or mixed targets.

        :returns: The composed :py:class:`MultiPoly`. """

    images = list(images)
    if len(images) != self.nvars:
      raise ArityMismatch(self.nvars, len(images))
    targets = {g.nvars for g in images if not g.is_constant}
    if len(targets) > 1:
      raise ArityMismatch(min(targets), max(targets))
    target = targets.pop() if targets else (
      nvars if nvars is not None else (
        images[0].nvars if images else 0))

    powers = [[MultiPoly.one(target)] for _ in images]
    result = MultiPoly(target)
    for exps, coeff in self._terms.items():
      term = MultiPoly.constant(coeff, target)
      for i, e in enumerate(exps):
        if e:
          cache = powers[i]
          while len(cache) <= e:
            cache.append(cache[-1] * images[i])
          term = term * cache[e]
      result = result + term
    return result

  def embed(self, nvars, offset=0):

    """ Reinterpret as a polynomial in ``nvars`` variables, with ``u_i``
        renamed to ``u_{i+offset}``.

        :raises ArityMismatch: If the shifted variables do not fit. """

    if offset < 0 or offset + self.nvars > nvars:
      raise ArityMismatch(nvars, offset + self.nvars)
    pad_left, pad_right = (0,) * offset, (0,) * (nvars - offset - self.nvars)
    return MultiPoly(nvars, {
      pad_left + e + pad_right: c for e, c in self._terms.items()})

  def evaluate(self, point):

    """ Evaluate at a point of :py:class:`Rational` coordinates.

        :raises ArityMismatch: If ``point`` has the wrong length. """

    point = [rational(x) for x in point]
    if len(point) != self.nvars:
      raise ArityMismatch(self.nvars, len(point))
    total = Fraction(0)
    for exps, coeff in self._terms.items():
      value = coeff
      for x, e in zip(point, exps):
        if e:
          value *= x ** e
      total += value
    return total

  def content(self):

    """ Positive rational content: gcd of numerators over lcm of
        denominators, so that ``self / content`` has coprime integer
        coefficients. ``0`` for the zero polynomial. """

    if not self._terms:
      return Fraction(0)
    num, den = 0, 1
    for c in self._terms.values():
      num = math.gcd(num, c.numerator)
      den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)

  def primitive(self):

    """ ``self`` divided by its positive content (sign preserved). """

    content = self.content()
    return self if not content else self / content

  def divide_exact(self, divisor):

    """ Exact division by ``divisor``, by lexicographic leading terms.

        :param divisor: Nonzero :py:class:`MultiPoly`.

        :raises ZeroDenominator: If ``divisor`` is zero.

        :returns: The quotient, or ``None`` when ``divisor`` does not divide
          this polynomial. """

    divisor = self._coerce(divisor)
    if divisor is None or divisor.is_zero:
      raise ZeroDenominator(str(self))
    lead_exps, lead_coeff = divisor.leading_term()
    remainder, quotient = self, {}
    while remainder:
      exps, coeff = remainder.leading_term()
      shift = tuple(x - y for x, y in zip(exps, lead_exps))
      if any(s < 0 for s in shift):
        return None
      factor = coeff / lead_coeff
      quotient[shift] = factor
      remainder = remainder - divisor * MultiPoly(self.nvars, {shift: factor})
    return MultiPoly(self.nvars, quotient)

  def monic(self):

    """ Scale so the lexicographic leading coefficient is ``1``.

        :returns: Pair ``(scale, monic)`` with ``self == scale * monic``. """

    _, lead = self.leading_term()
    return lead, self / lead


class FormalFraction(object):

  """ Quotient ``num / (f_1 * ... * f_k)`` of :py:class:`MultiPoly` values.

      The denominator is kept as a tuple of nonconstant monic factors, so sums
      use the least common multiple of factor multisets. No gcd normalization
      is performed; equality is decided by clearing denominators. """

  __slots__ = ('num', 'factors')

  def __init__(self, num, den=None):

    """ Initialize a formal fraction.

        :param num: Numerator :py:class:`MultiPoly` (or scalar).
        :param den: Denominator: ``None``, a :py:class:`MultiPoly`, or a
          sequence of factor polynomials.

        :raises ZeroDenominator: If any denominator factor is zero. """

    if isinstance(den, MultiPoly) or isinstance(den, _SCALARS):
      den = (den,)
    nvars = num.nvars if isinstance(num, MultiPoly) else None
    scale, factors = Fraction(1), []
    for factor in den or ():
      if isinstance(factor, _SCALARS):
        factor = MultiPoly.constant(factor, nvars or 0)
      if factor.is_zero:
        raise ZeroDenominator(str(num))
      if factor.is_constant:
        scale *= factor.constant_term()
        continue
      lead, factor = factor.monic()
      scale *= lead
      factors.append(factor)
    width = factors[0].nvars if factors else None
    if not isinstance(num, MultiPoly):
      num = MultiPoly.constant(num, width or 0)
    elif width is not None and num.nvars != width and num.is_constant:
      num = MultiPoly.constant(num.constant_term(), width)
    self.num = num / scale if scale != 1 else num
    self.factors = tuple(sorted(factors, key=str))

  @classmethod
  def coerce(cls, value):

    """ Promote a :py:class:`MultiPoly` or scalar to a fraction. """

    if isinstance(value, FormalFraction):
      return value
    return cls(value)

  ### === Public Attributes === ###

  nvars = property(lambda self: max(
    [self.num.nvars] + [f.nvars for f in self.factors]))

  # expanded denominator
  den = property(lambda self: functools.reduce(
    lambda x, y: x * y, self.factors, MultiPoly.one(self.nvars)))

  is_zero = property(lambda self: self.num.is_zero)

  __bool__ = lambda self: not self.num.is_zero

  ## == Field operations == ##
  @staticmethod
  def _lcm(*counters):
    total = collections.Counter()
    for counter in counters:
      for factor, count in counter.items():
        total[factor] = max(total[factor], count)
    return total

  def _scaled_to(self, common):

    """ Numerator of ``self`` over the factor multiset ``common``. """

    missing = common - collections.Counter(self.factors)
    num = self.num
    for factor, count in missing.items():
      num = num * factor ** count
    return num

  def __add__(self, other):
    if isinstance(other, (MultiPoly,) + _SCALARS):
      other = FormalFraction(other)
    if not isinstance(other, FormalFraction):
      return NotImplemented
    if not other.factors:
      return FormalFraction(self.num + other.num * self.den, self.factors)
    if not self.factors:
      return FormalFraction(self.num * other.den + other.num, other.factors)
    common = self._lcm(collections.Counter(self.factors),
                       collections.Counter(other.factors))
    return FormalFraction(
      self._scaled_to(common) + other._scaled_to(common),
      tuple(common.elements()))

  __radd__ = __add__

  def __neg__(self):
    return FormalFraction(-self.num, self.factors)

  def __sub__(self, other):
    if isinstance(other, (MultiPoly,) + _SCALARS):
      other = FormalFraction(other)
    if not isinstance(other, FormalFraction):
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    if isinstance(other, _SCALARS):
      return FormalFraction(self.num * other, self.factors)
    if isinstance(other, MultiPoly):
      return FormalFraction(self.num * other, self.factors)
    if not isinstance(other, FormalFraction):
      return NotImplemented
    return FormalFraction(self.num * other.num, self.factors + other.factors)

  __rmul__ = __mul__

  def __truediv__(self, other):
    if isinstance(other, _SCALARS):
      if not other:
        raise ZeroDenominator(str(self))
      return FormalFraction(self.num / other, self.factors)
    if isinstance(other, MultiPoly):
      return FormalFraction(self.num, self.factors + (other,))
    return NotImplemented

  def __eq__(self, other):
    if isinstance(other, (MultiPoly,) + _SCALARS):
      other = FormalFraction(other)
    if not isinstance(other, FormalFraction):
      return NotImplemented
    return (self - other).is_zero

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  def __str__(self):
    if not self.factors:
      return str(self.num)
    return '(%s)/(%s)' % (self.num, '*'.join(
      '(%s)' % f for f in self.factors))

  __repr__ = lambda self: 'FormalFraction(%s)' % str(self)

  ## == Structure == ##
  def reduce(self):

    """ Cancel every denominator factor that divides the numerator exactly.

        :returns: Equal :py:class:`FormalFraction` with fewer factors. """

    num, kept = self.num, []
    for factor in self.factors:
      quotient = num.divide_exact(factor) if num else num
      if quotient is None:
        kept.append(factor)
      else:
        num = quotient
    return FormalFraction(num, tuple(kept))

  def is_polynomial(self):

    """ ``True`` if the value reduces to a polynomial. """

    return not self.reduce().factors

  def to_poly(self, depth=None):

    """ The polynomial this fraction equals.

        :param depth: Depth label used in the error message.

        :raises NotPolynomial: If some denominator factor survives.

        :returns: :py:class:`MultiPoly`. """

    reduced = self.reduce()
    if reduced.factors:
      raise NotPolynomial(depth if depth is not None else self.nvars)
    return reduced.num

  def substitute(self, images, nvars=None):

    """ Compose numerator and every factor with the same images.

        :raises ZeroDenominator: If a factor maps to zero. """

    images = list(images)
    factors = []
    for factor in self.factors:
      image = factor.substitute(images, nvars)
      if image.is_zero:
        raise ZeroDenominator(str(self))
      factors.append(image)
    return FormalFraction(self.num.substitute(images, nvars), tuple(factors))

  def embed(self, nvars, offset=0):

    """ Variable renaming ``u_i -> u_{i+offset}`` into ``nvars`` variables. """

    return FormalFraction(self.num.embed(nvars, offset), tuple(
      f.embed(nvars, offset) for f in self.factors))

  def evaluate(self, point):

    """ Evaluate at a rational point.

        :raises ZeroDenominator: If the denominator vanishes there. """

    den = Fraction(1)
    for factor in self.factors:
      value = factor.evaluate(point)
      if not value:
        raise ZeroDenominator(str(self))
      den *= value
    return self.num.evaluate(point) / den


def poly_substitute(p, images, nvars=None):

  """ Exact composition ``p(images)``; see :py:meth:`MultiPoly.substitute`. """

  return p.substitute(images, nvars)


def fraction_sum_is_zero(fs):

  """ Decide whether a list of formal fractions sums to zero.

      :param fs: :py:class:`FormalFraction` (or polynomial) summands sharing
        one variable count.

      :raises ArityMismatch: If the summands use different variable counts.

      :returns: ``True`` iff the numerator of the sum over the common
        denominator is the zero polynomial. """

  fs = [FormalFraction.coerce(f) for f in fs]
  counts = {f.nvars for f in fs if not (f.num.is_constant and not f.factors)}
  if len(counts) > 1:
    raise ArityMismatch(min(counts), max(counts))
  total = FormalFraction(MultiPoly.zero(counts.pop() if counts else 0))
  for f in fs:
    total = total + f
  return total.is_zero


class QSeriesL(object):

  """ Truncated series ``sum c[n, m] q^n L^m`` with :py:class:`Rational`
      coefficients, kept for ``n <= N`` and ``m <= M``. ``L`` stands for
      ``log q``. Immutable. """

  __slots__ = ('N', 'M', '_coeffs')

  def __init__(self, coeffs=None, N=30, M=0):

    """ Initialize a series.

        :param coeffs: Mapping ``(n, m) -> coefficient``. Entries outside the
          caps or equal to zero are dropped.
        :param N: ``q``-order cap.
        :param M: ``L``-degree cap. """

    if N < 0 or M < 0:
      raise DomainError((N, M), 'QSeriesL')
    self.N, self.M = N, M
    self._coeffs = {
      (n, m): Fraction(c) for (n, m), c in (coeffs or {}).items()
      if c and 0 <= n <= N and 0 <= m <= M}

  @classmethod
  def constant(cls, value, N=30, M=0):

    """ The constant series ``value``. """

    return cls({(0, 0): rational(value)}, N, M)

  @classmethod
  def from_q(cls, coefficients, N=None):

    """ A pure ``q``-series from the list of its coefficients. """

    coefficients = list(coefficients)
    N = len(coefficients) - 1 if N is None else N
    return cls({(n, 0): c for n, c in enumerate(coefficients)}, N, 0)

  @classmethod
  def L(cls, N=30, M=1):

    """ The series ``L`` itself. """

    return cls({(0, 1): 1}, N, M)

  ### === Public Attributes === ###

  coeffs = property(lambda self: dict(self._coeffs))

  # highest L-power present
  degree_L = property(lambda self: max(
    (m for _, m in self._coeffs), default=0))

  __bool__ = lambda self: bool(self._coeffs)

  def coefficient(self, n, m=0):

    """ The coefficient of ``q^n L^m``. """

    return self._coeffs.get((n, m), Fraction(0))

  def items(self):

    """ ``((n, m), coefficient)`` pairs, ordered by ``(n, m)``. """

    return sorted(self._coeffs.items())

  def truncate(self, N=None, M=None):

    """ Drop terms beyond the new caps (which may only shrink). """

    N = self.N if N is None else min(N, self.N)
    M = self.M if M is None else min(M, self.M)
    return QSeriesL(self._coeffs, N, M)

  def lift(self, M):

    """ Raise the ``L``-degree cap to ``M``.

        Valid only for series known exactly in ``L`` (every series built from
        pure ``q``-expansions by the operations here is). """

    return QSeriesL(self._coeffs, self.N, max(M, self.M))

  def q0_part(self):

    """ The ``q^0`` slice, a polynomial in ``L``. """

    return QSeriesL({k: c for k, c in self._coeffs.items() if not k[0]},
                    self.N, self.M)

  def d_dL(self):

    """ Total derivative in ``L`` with ``q = exp(L)``: ``q^n L^m`` goes to
        ``n q^n L^m + m q^n L^(m-1)``. Inverse of :py:func:`primitive_dlog`
        up to the ``q^0 L^0`` constant. """

    coeffs = collections.defaultdict(Fraction)
    for (n, m), c in self._coeffs.items():
      if n:
        coeffs[(n, m)] += n * c
      if m:
        coeffs[(n, m - 1)] += m * c
    return QSeriesL(coeffs, self.N, self.M)

  ## == Ring operations == ##
  def _coerce(self, other):
    if isinstance(other, QSeriesL):
      return other
    if isinstance(other, _SCALARS):
      return QSeriesL.constant(other, self.N, self.M)
    return None

  def __add__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    N, M = min(self.N, other.N), min(self.M, other.M)
    coeffs = collections.defaultdict(Fraction, self._coeffs)
    for k, c in other._coeffs.items():
      coeffs[k] += c
    return QSeriesL(coeffs, N, M)

  __radd__ = __add__

  def __neg__(self):
    return QSeriesL({k: -c for k, c in self._coeffs.items()}, self.N, self.M)

  def __sub__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    if isinstance(other, _SCALARS):
      return self.scale(other)
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    N, M = min(self.N, other.N), min(self.M, other.M)
    coeffs = collections.defaultdict(Fraction)
    for (n1, m1), c1 in self._coeffs.items():
      for (n2, m2), c2 in other._coeffs.items():
        if n1 + n2 <= N and m1 + m2 <= M:
          coeffs[(n1 + n2, m1 + m2)] += c1 * c2
    return QSeriesL(coeffs, N, M)

  __rmul__ = __mul__

  def scale(self, factor):

    """ Multiply every coefficient by the scalar ``factor``. """

    factor = rational(factor)
    return QSeriesL({k: c * factor for k, c in self._coeffs.items()},
                    self.N, self.M)

  def __eq__(self, other):
    if isinstance(other, _SCALARS):
      other = QSeriesL.constant(other, self.N, self.M)
    if not isinstance(other, QSeriesL):
      return NotImplemented
    return self._coeffs == other._coeffs

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  def __str__(self):
    if not self._coeffs:
      return '0'
    text = []
    for (n, m), c in self.items():
      parts = [p for p in (
        ('q^%d' % n if n > 1 else 'q') if n else '',
        ('L^%d' % m if m > 1 else 'L') if m else '') if p]
      mag = abs(c)
      if not parts:
        body = str(mag)
      elif mag == 1:
        body = '*'.join(parts)
      else:
        body = '*'.join([str(mag)] + parts)
      text.append(('-' if c < 0 else '+') + body)
    joined = ''.join(text)
    return joined[1:] if joined.startswith('+') else joined

  __repr__ = lambda self: 'QSeriesL(N=%d, M=%d, %s)' % (
    self.N, self.M, str(self))


def qseries_add(f, g):

  """ Sum, truncated at the smaller caps. """

  return f + g


def qseries_mul(f, g):

  """ Product, truncated at the smaller caps. """

  return f * g


def qseries_scale(f, factor):

  """ Scalar multiple. """

  return f.scale(factor)


def primitive_dlog(f, M=None):

  """ The primitive ``F`` of ``f`` with ``dF/dL = f``, where ``d/dL`` acts on
      ``q^n`` as multiplication by ``n`` and on ``L`` by differentiation.

      Term-wise, ``q^n L^m`` maps to
      ``q^n * sum_j (-1)^j m! / ((m-j)! n^(j+1)) L^(m-j)`` for ``n >= 1`` and
      ``q^0 L^m`` maps to ``L^(m+1) / (m+1)``. The ``q^0 L^0`` slot of the
      result (the integration constant) is zero.

      :param f: :py:class:`QSeriesL` integrand.
      :param M: ``L``-degree cap of the result, defaulting to ``f.M + 1``.

      :returns: :py:class:`QSeriesL` primitive. """

  M = f.M + 1 if M is None else M
  coeffs = collections.defaultdict(Fraction)
  for (n, m), c in f.items():
    if not n:
      coeffs[(0, m + 1)] += c / (m + 1)
      continue
    falling = Fraction(1)
    for j in range(m + 1):
      coeffs[(n, m - j)] += (-1) ** j * falling * c / Fraction(n) ** (j + 1)
      falling *= m - j
  return QSeriesL(coeffs, f.N, M)


__all__ = (
  'Rational',
  'rational',
  'bernoulli',
  'sigma',
  'MultiPoly',
  'FormalFraction',
  'QSeriesL',
  'poly_substitute',
  'fraction_sum_is_zero',
  'qseries_add',
  'qseries_mul',
  'qseries_scale',
  'primitive_dlog')
