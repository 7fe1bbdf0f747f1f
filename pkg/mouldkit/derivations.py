# -*- coding: utf-8 -*-

"""

  derivations
  ~~~~~~~~~~~

  derivations of the free Lie algebra on ``a, b`` that kill ``[a, b]``,
  stored by their values on both generators: the special derivations
  ``eps_2k``, their Eisenstein rescalings, brackets, evaluation at
  ``a``, reconstruction from the value at ``a``, exponentials and the
  bracket transported to Lie series.

  labeling: ``eps_2k(a) = ad(a)^2k (b) = c_(2k+1)`` and ``eps_0`` sends
  ``a`` to ``b``, ``b`` to ``0``. values on ``b`` carry no linear
  ``a``-term.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import math
import functools
from fractions import Fraction

# local
from .util import debug
from .freelie import NCPoly
from .freelie import CPoly
from .freelie import expand_c
from .freelie import lie_bracket
from .freelie import solve_ad_a
from .freelie import substitute
from .freelie import to_c_coordinates
from .freelie import min_cap
from .exceptions import DomainError
from .exceptions import Der0Violation
from .exceptions import NotWeightRaising


## Globals
logging = debug.Logger('mouldkit.derivations')


class Derivation(object):

  """ A derivation ``D`` with ``D([a, b]) = 0``, given by ``val_a = D(a)``
      and ``val_b = D(b)``, truncated at weight ``cap``. The defining
      condition and the normalization are asserted on construction. """

  __slots__ = ('val_a', 'val_b', 'cap', 'shift')

  def __init__(self, val_a, val_b, cap=None, check=True):

    """ Initialize a derivation.

        :param val_a: :py:class:`NCPoly` value on ``a``.
        :param val_b: :py:class:`NCPoly` value on ``b``.
        :param cap: Weight cap; defaults to the smaller cap of the values.
        :param check: Verify the defining condition and normalization.

        :raises Der0Violation: If ``D([a, b]) != 0`` at some weight, or
          ``val_b`` has a linear ``a``-term. """

    cap = min_cap(cap, val_a.cap, val_b.cap)
    self.val_a = NCPoly(val_a.terms, cap)
    self.val_b = NCPoly(val_b.terms, cap)
    self.cap = cap

    # weight shift (None for the zero derivation)
    lows = [v.min_weight - 1 for v in (self.val_a, self.val_b) if v]
    self.shift = min(lows) if lows else None

    if check:
      self.check()

  def check(self):

    """ Assert ``[D(a), b] + [a, D(b)] = 0`` and the normalization.

        :raises Der0Violation: Naming the lowest failing weight. """

    if self.val_b.coefficient('a'):
      raise Der0Violation(1)
    a, b = NCPoly.letter('a', self.cap), NCPoly.letter('b', self.cap)
    defect = lie_bracket(self.val_a, b) + lie_bracket(a, self.val_b)
    if defect:
      raise Der0Violation(defect.min_weight)
    return True

  ## == Linear structure == ##
  def __add__(self, other):
    if not isinstance(other, Derivation):
      return NotImplemented
    return Derivation(self.val_a + other.val_a, self.val_b + other.val_b,
                      check=False)

  def __neg__(self):
    return Derivation(-self.val_a, -self.val_b, self.cap, check=False)

  def __sub__(self, other):
    if not isinstance(other, Derivation):
      return NotImplemented
    return self + (-other)

  def __mul__(self, factor):
    return Derivation(self.val_a * factor, self.val_b * factor, self.cap,
                      check=False)

  __rmul__ = __mul__

  __eq__ = lambda self, other: (
    isinstance(other, Derivation) and self.val_a == other.val_a and (
      self.val_b == other.val_b))

  __hash__ = None

  __bool__ = lambda self: bool(self.val_a) or bool(self.val_b)

  __repr__ = lambda self: 'Derivation(a -> %s, b -> %s, cap=%s)' % (
    self.val_a, self.val_b, self.cap)

  def __call__(self, p, cap=None):

    """ Apply this derivation; see :py:func:`apply`. """

    return apply(self, p, cap)

  def truncate(self, cap):

    """ Same derivation, truncated at ``cap``. """

    return Derivation(self.val_a, self.val_b, cap, check=False)


def apply(D, p, cap=None):

  """ Leibniz extension of ``D`` to words: ``D(x1...xn)`` is the sum of
      ``x1...D(xi)...xn``. Letters other than ``a, b`` are constants.

      :param D: :py:class:`Derivation`.
      :param p: :py:class:`NCPoly` (any coefficient ring).
      :param cap: Weight cap; defaults to the smaller of the two caps.

      :returns: :py:class:`NCPoly`. """

  cap = min_cap(cap, D.cap, p.cap)
  images = {'a': D.val_a.terms, 'b': D.val_b.terms}
  out = {}
  for word, coeff in p.terms.items():
    for i, letter in enumerate(word):
      for image, c in images.get(letter, {}).items():
        if cap is not None and len(word) - 1 + len(image) > cap:
          continue
        target, value = word[:i] + image + word[i + 1:], coeff * c
        out[target] = out[target] + value if target in out else value
  return NCPoly(out, cap)


def bracket_der(D, E):

  """ The commutator ``D E - E D``, by its values on ``a`` and ``b``. """

  cap = min_cap(D.cap, E.cap)
  return Derivation(
    apply(D, E.val_a, cap) - apply(E, D.val_a, cap),
    apply(D, E.val_b, cap) - apply(E, D.val_b, cap), cap)


def v_a(D):

  """ Evaluation at ``a``. """

  return D.val_a


def derivation_from_a(f, cap=None):

  """ The derivation ``D`` with ``D(a) = f`` and ``D([a, b]) = 0``.

      ``D(b)`` solves ``[a, D(b)] = [b, f]``, done in c-coordinates where
      ``ad(a)`` is the derivation ``c_i -> c_(i+1)``.

      :param f: Lie element whose homogeneous parts all have weight ``>= 2``
        (a weight-1 multiple of ``b`` is also accepted).
      :param cap: Weight cap, defaulting to ``f.cap``.

      :raises NotRepresentable: If ``f`` has a constant or linear ``a``-term.
      :raises NotInImage: If ``[b, f]`` is not in the image of ``ad(a)``.

      :returns: :py:class:`Derivation`. """

  cap = min_cap(cap, f.cap)
  coords = CPoly(to_c_coordinates(f).terms)
  b = CPoly.monomial((1,))
  solution = solve_ad_a(b * coords - coords * b)
  logging.debug('reconstructed D(b) with %d c-monomials.' % len(
    solution.terms))
  return Derivation(f, expand_c(CPoly(solution.terms, cap)), cap)


@functools.lru_cache(maxsize=None)
def epsilon(twok, cap):

  """ The special derivation ``eps_2k``.

      :param twok: Even integer ``2k >= 0``.
      :param cap: Weight cap.

      :raises DomainError: If ``twok`` is odd or negative.

      :returns: :py:class:`Derivation`. """

  if twok < 0 or twok % 2:
    raise DomainError(twok, 'epsilon')
  if not twok:
    return Derivation(NCPoly.letter('b', cap), NCPoly.zero(cap), cap)
  return derivation_from_a(
    expand_c(CPoly.monomial((twok + 1,), cap=cap)), cap)


def epsilon_tilde(twok, cap):

  """ ``-eps_0`` for ``2k = 0``, else ``2 / (2k-2)! * eps_2k``. """

  if not twok:
    return -epsilon(0, cap)
  return epsilon(twok, cap) * Fraction(2, math.factorial(twok - 2))


def exp_action(D, p, cap=None):

  """ ``exp(D) p = sum D^n (p) / n!``, truncated.

      :raises NotWeightRaising: If ``D`` does not raise weight.

      :returns: :py:class:`NCPoly`. """

  if D.shift is not None and D.shift < 1:
    raise NotWeightRaising(D.shift)
  cap = min_cap(cap, D.cap, p.cap)
  total, term, n = p.truncate(cap), p.truncate(cap), 0
  while term:
    n += 1
    term = apply(D, term, cap) * Fraction(1, n)
    total = total + term
  return total


def exp_a(f, cap=None):

  """ ``exp_a(f) = 1 + sum_(n>=1) D^n (a) / n!`` for ``D`` with ``D(a) = f``.

      :raises NotWeightRaising: If ``f`` has a weight-1 part.

      :returns: :py:class:`NCPoly`. """

  cap = min_cap(cap, f.cap)
  if not f:
    return NCPoly.one(cap)
  D = derivation_from_a(f, cap)
  a = NCPoly.letter('a', cap)
  return exp_action(D, a, cap) - a + NCPoly.one(cap)


def transported_bracket(f, g, cap=None):

  """ ``<f, g> = [D_f, D_g](a)`` for the derivations with those values on
      ``a``. """

  cap = min_cap(cap, f.cap, g.cap)
  return v_a(bracket_der(derivation_from_a(f, cap),
                         derivation_from_a(g, cap)))


def automorphism_log(D1, D2, cap=None):

  """ ``log(exp(D1) exp(D2))``, from the automorphism ``phi`` it defines:
      ``sum (-1)^(m+1) / m (phi - id)^m`` on each generator.

      :returns: :py:class:`Derivation`. """

  cap = min_cap(cap, D1.cap, D2.cap)
  images = {x: exp_action(D1, exp_action(D2, NCPoly.letter(x, cap), cap),
                          cap) for x in ('a', 'b')}

  def log_on(letter):
    base = NCPoly.letter(letter, cap)
    total, power, m = NCPoly.zero(cap), base, 0
    while True:
      m += 1
      power = substitute(power, images, cap) - power
      if not power:
        return total
      total = total + power * Fraction((-1) ** (m + 1), m)

  return Derivation(log_on('a'), log_on('b'), cap)


def automorphism_log_on_a(D1, D2, cap=None):

  """ ``v_a(log(exp(D1) exp(D2)))``. """

  return v_a(automorphism_log(D1, D2, cap))


def transported_ch(f, g, cap=None):

  """ Campbell-Hausdorff product of Lie series for the transported bracket:
      ``v_a(log(exp(D_f) exp(D_g)))``. """

  cap = min_cap(cap, f.cap, g.cap)
  return automorphism_log_on_a(derivation_from_a(f, cap),
                               derivation_from_a(g, cap), cap)


def chmult_check(D, f, cap=None):

  """ Check ``exp_a(D(a) * f) = 1 - a + exp(D)(exp(D_f)(a))`` exactly, with
      ``*`` the transported Campbell-Hausdorff product.

      :returns: ``bool``. """

  cap = min_cap(cap, D.cap, f.cap)
  a = NCPoly.letter('a', cap)
  left = exp_a(transported_ch(v_a(D), f, cap), cap)
  right = NCPoly.one(cap) - a + exp_action(
    D, exp_action(derivation_from_a(f, cap), a, cap), cap)
  return left == right


__all__ = (
  'Derivation',
  'apply',
  'bracket_der',
  'v_a',
  'derivation_from_a',
  'epsilon',
  'epsilon_tilde',
  'exp_action',
  'exp_a',
  'transported_bracket',
  'automorphism_log',
  'automorphism_log_on_a',
  'transported_ch',
  'chmult_check')
