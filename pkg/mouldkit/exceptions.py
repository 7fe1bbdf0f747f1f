# -*- coding: utf-8 -*-

"""

  exceptions
  ~~~~~~~~~~

  contains exceptions exported by :py:mod:`mouldkit`. each carries a
  class-level ``message`` template, filled from its positional args.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


class Error(Exception):

  """ Top-level error for all of :py:mod:`mouldkit`. """

  message = "%s"

  def __init__(self, *args, **kwargs):

    """ Initialize a ``mouldkit`` exception.

        :param args: Positional values interpolated into ``message``.
        :param kwargs: Keyword values interpolated into ``message``, used in
          place of ``args`` when given. """

    super(Error, self).__init__(*args)
    self.fmt_args, self.fmt_kwargs = args, kwargs

  def __str__(self):

    """ Render ``message`` against the stored format arguments.

        :returns: Human-readable error string. """

    try:
      return self.message % (self.fmt_kwargs or self.fmt_args)
    except TypeError:  # wrong arg count for the template
      return '%s %r' % (self.message, self.fmt_args)

  __repr__ = lambda self: '%s(%s)' % (self.__class__.__name__, str(self))


## == Arithmetic == ##
class DomainError(Error, ValueError):

  """ An arithmetic function was called outside its domain. """

  message = "argument %s is outside the domain of `%s`."


class ArityMismatch(Error, ValueError):

  """ A substitution or combination received the wrong variable count. """

  message = "expected %s variables, got %s."


class ZeroDenominator(Error, ZeroDivisionError):

  """ A formal fraction acquired the zero polynomial as a denominator. """

  message = "zero denominator in formal fraction %s."


class NotPolynomial(Error, ArithmeticError):

  """ A rational value was required to be polynomial and is not. """

  message = "value at depth %s is not a polynomial."


## == Free Lie algebra == ##
class NotRepresentable(Error, ValueError):

  """ An element does not lie in the span of the c-monomials. """

  message = "element is not in the span of c-monomials (residual %s)."


class NotLieLike(Error, ValueError):

  """ An element expected to be Lie-like fails the Dynkin criterion. """

  message = "element fails the Lie criterion at weight %s."


class NotInImage(Error, ValueError):

  """ A value is not in the image of ``ad(a)``, so no Der0 derivation takes
      it as its value on ``a``. """

  message = "not in image of ad(a) at weight %s."


class NotWeightRaising(Error, ValueError):

  """ An exponential was requested of a derivation that does not raise
      weight. """

  message = "derivation of weight shift %s does not raise weight."


class Der0Violation(Error, ArithmeticError):

  """ A derivation fails to annihilate the generator bracket. """

  message = "derivation does not annihilate [a,b] at weight %s."


## == Usage == ##
class UsageError(Error):

  """ Malformed input from a caller (usually the CLI). """

  message = "usage error: %s"


class ParseError(UsageError, ValueError):

  """ A polynomial, series or mould literal could not be parsed. """

  message = "could not parse %s literal %s."


class InsufficientCap(UsageError):

  """ A truncation cap is too low to decide the requested computation. """

  message = "insufficient cap: %s needs %s, got %s."
