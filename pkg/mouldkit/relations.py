# -*- coding: utf-8 -*-

"""

  relations
  ~~~~~~~~~

  exact linear algebra over the depth-2 relation systems: the space
  cut out by antisymmetry and push-invariance, the Fay-shuffle space, the
  rank table of depth-2 brackets of the special derivations, and the
  regression report over every displayed value this package reproduces.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
import math
import collections
from fractions import Fraction

# local
from .util import debug
from .util import config
from .scalar import MultiPoly
from .linalg import RationalMatrix
from .freelie import NCPoly
from .freelie import CPoly
from .freelie import ad_pow
from .freelie import lie_bracket
from .freelie import t_elements
from .freelie import to_c_coordinates
from .freelie import is_push_invariant_series
from .derivations import apply
from .derivations import epsilon
from .moulds import ma
from .moulds import is_push_invariant
from .moulds import is_push_neutral
from .moulds import is_delta_bialternal
from .eisenstein import eisenstein_q
from .eisenstein import g_coefficient_identity_check
from .exceptions import Error
from .exceptions import InsufficientCap


## Globals
logging = debug.Logger('mouldkit.relations')


class DimensionReport(collections.namedtuple('DimensionReport', (
      'weight', 'computed', 'formula', 'basis'))):

  """ Computed dimension of a relation space against its closed form. """

  __slots__ = ()

  matches = property(lambda self: self.computed == self.formula)


RankRow = collections.namedtuple('RankRow', (
  'weight', 'brackets', 'rank', 'relations', 'matches'))


## == Displayed values == ##
# depth-2 moulds of [eps_2j, eps_2k](a), in primitive normalization
DISPLAYED_BRACKETS = {
  (0, 4): '2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3',
  (0, 6): '2*u1^5+5*u1^4*u2+2*u1^3*u2^2-2*u1^2*u2^3-5*u1*u2^4-2*u2^5',
  (0, 8): ('2*u1^7+7*u1^6*u2+9*u1^5*u2^2+5*u1^4*u2^3-5*u1^3*u2^4'
           '-9*u1^2*u2^5-7*u1*u2^6-2*u2^7'),
  (4, 6): ('-2*u1^7*u2^2-7*u1^6*u2^3-5*u1^5*u2^4+5*u1^4*u2^5+7*u1^3*u2^6'
           '+2*u1^2*u2^7')}

# checked against their own relations; the printed (0, 10) value disagrees
SELF_CHECKED_BRACKETS = ((0, 8), (0, 10))

# sign every signed item must come out with
EXPECTED_SIGMA = 1

# Fay-shuffle bases by weight; the first weight-11 entry carries the
# antisymmetric coefficient -3 on u1^4*u2^5
DISPLAYED_FS_BASES = {
  5: ('u1^2*u2-u1*u2^2', 'u1^3-u2^3'),
  7: ('u1^4*u2-u1*u2^4', 'u1^5+u1^3*u2^2-u1^2*u2^3-u2^5'),
  9: ('u1^7-2*u1^4*u2^3+2*u1^3*u2^4-u2^7',
      'u1^6*u2-u1*u2^6',
      'u1^5*u2^2+u1^4*u2^3-u1^3*u2^4-u1^2*u2^5'),
  11: ('u1^9+3*u1^5*u2^4-3*u1^4*u2^5-u2^9',
       'u1^8*u2-u1*u2^8',
       'u1^7*u2^2-u1^5*u2^4+u1^4*u2^5-u1^2*u2^7',
       'u1^6*u2^3+u1^5*u2^4-u1^4*u2^5-u1^3*u2^6')}


## == Matrix wrappers == ##
def rref(matrix):

  """ Reduced row echelon form and pivot columns. """

  return matrix.rref()


def rank(matrix):

  """ Exact rank. """

  return matrix.rank()


def nullspace(matrix):

  """ Right-kernel basis. """

  return matrix.nullspace()


def _coefficient_matrix(polys):

  """ Rows of coefficients of ``polys`` over their joint monomials. """

  columns = sorted({e for p in polys for e in p.terms}, reverse=True)
  index = {e: i for i, e in enumerate(columns)}
  rows = []
  for p in polys:
    row = [0] * len(columns)
    for e, c in p.terms.items():
      row[index[e]] = c
    rows.append(row)
  return RationalMatrix(rows, len(columns))


def span_rank(polys):

  """ Dimension of the span of a list of polynomials. """

  polys = list(polys)
  return _coefficient_matrix(polys).rank() if polys else 0


def span_equal(ps, qs):

  """ ``True`` if ``ps`` and ``qs`` span the same space (double inclusion by
      stacked rank). """

  ps, qs = list(ps), list(qs)
  joint = span_rank(ps + qs)
  return span_rank(ps) == joint == span_rank(qs)


def span_contains(ps, p):

  """ ``True`` if ``p`` lies in the span of ``ps``. """

  ps = list(ps)
  return span_rank(ps + [p]) == span_rank(ps)


## == Depth-2 relation spaces == ##
def _monomials(degree):
  return [MultiPoly(2, {(i, degree - i): 1}) for i in range(degree, -1, -1)]


def _u(index):
  return MultiPoly.variable(index, 2)


def antisymmetry(p):

  """ ``p(u1, u2) + p(u2, u1)``. """

  return p + p.substitute([_u(2), _u(1)])


def push_defect(p):

  """ ``p(u1, u2) - p(u2, -u1 - u2)``. """

  return p - p.substitute([_u(2), -_u(1) - _u(2)])


def fay_defect(p):

  """ ``u0 p(u1, u2) + u1 p(u2, u0) + u2 p(u0, u1)`` with
      ``u0 = -u1 - u2``. """

  u0, u1, u2 = -_u(1) - _u(2), _u(1), _u(2)
  return (u0 * p + u1 * p.substitute([u2, u0]) +
          u2 * p.substitute([u0, u1]))


def reflection_defect(p):

  """ ``p(u1, u2) - p(-u2, -u1)``. """

  return p - p.substitute([-_u(2), -_u(1)])


def solve_depth2(degree, conditions):

  """ Homogeneous degree-``degree`` polynomials in ``u1, u2`` killed by
      every linear map in ``conditions``.

      :returns: List of primitive :py:class:`MultiPoly` spanning the
        kernel. """

  monomials = _monomials(degree)
  images = [[condition(m) for condition in conditions] for m in monomials]
  keys = sorted({(i, e) for column in images
                 for i, image in enumerate(column) for e in image.terms})
  index = {key: r for r, key in enumerate(keys)}
  rows = [[0] * len(monomials) for _ in keys]
  for col, column in enumerate(images):
    for i, image in enumerate(column):
      for e, c in image.terms.items():
        rows[index[(i, e)]][col] = c
  kernel = RationalMatrix(rows, len(monomials)).nullspace()
  logging.debug('degree %d: %d conditions, kernel of dimension %d.' % (
    degree, len(keys), len(kernel)))
  return [sum((m * x for m, x in zip(monomials, vector) if x),
              MultiPoly.zero(2)).primitive() for vector in kernel]


def eds2_dimension(n):

  """ ``floor((n - 5) / 6) + 1``. """

  return (n - 5) // 6 + 1


def fs2_dimension(n):

  """ ``floor((n - 2) / 3) + 1``. """

  return (n - 2) // 3 + 1


def eds2_space(n):

  """ Depth-2 solutions of weight ``n``: degree ``n - 2`` polynomials that
      are antisymmetric and push-invariant.

      :returns: :py:class:`DimensionReport`. """

  basis = solve_depth2(n - 2, (antisymmetry, push_defect))
  return DimensionReport(n, len(basis), eds2_dimension(n), basis)


def fs2_space(n):

  """ Depth-2 Fay-shuffle solutions of weight ``n``: antisymmetric degree
      ``n - 2`` polynomials killed by the cleared Fay relation.

      :returns: :py:class:`DimensionReport`. """

  basis = solve_depth2(n - 2, (antisymmetry, fay_defect))
  return DimensionReport(n, len(basis), fs2_dimension(n), basis)


## == Brackets of special derivations == ##
def bracket_weight(twoj, twok):

  """ Weight of ``[eps_2j, eps_2k](a)``. """

  return twoj + twok + 1


def eps_bracket_element(twoj, twok, cap=None):

  """ ``v_a([eps_2j, eps_2k]) = eps_2j(eps_2k(a)) - eps_2k(eps_2j(a))``.

      :param cap: Weight cap, defaulting to the bracket's weight.

      :raises InsufficientCap: If ``cap`` is below the bracket's weight. """

  weight = bracket_weight(twoj, twok)
  cap = weight if cap is None else cap
  if cap < weight:
    raise InsufficientCap('[eps_%d, eps_%d]' % (twoj, twok), weight, cap)
  D, E = epsilon(twoj, cap), epsilon(twok, cap)
  return apply(D, E.val_a, cap) - apply(E, D.val_a, cap)


def eps_bracket_mould(twoj, twok, cap=None):

  """ The depth-2 part of ``ma([eps_2j, eps_2k](a))``, a polynomial mould
      with depth cap 2. """

  return ma(eps_bracket_element(twoj, twok, cap), 2).depth_part(2)


def admissible_brackets(n):

  """ Pairs ``(2j, 2k)``, ``j < k``, ``j, k != 1``, of weight ``n``. """

  return [(2 * j, 2 * (half - j)) for half in [(n - 1) // 2]
          for j in range(half // 2 + 1)
          if j < half - j and 1 not in (j, half - j)]


def bracket_count_formula(n):

  """ ``floor((n - 3) / 4)``. """

  return (n - 3) // 4


def relation_count_formula(n):

  """ ``floor((n - 7) / 4) - floor((n - 5) / 6)``. """

  return (n - 7) // 4 - (n - 5) // 6


def eps_bracket_rank_table(n_max, n_min=5):

  """ For each odd weight ``n_min <= n <= n_max``, the number of admissible
      brackets, the rank of their depth-2 moulds and the relation count.

      Below weight 7 the bracket ``[eps_0, eps_4]`` exists while both
      counting formulas read one lower; only their difference is compared
      there.

      :returns: List of :py:class:`RankRow`. """

  table = []
  for n in range(n_min | 1, n_max + 1, 2):
    pairs = admissible_brackets(n)
    polys = [eps_bracket_mould(j, k).poly(2) for j, k in pairs]
    found = span_rank(polys)
    relations = len(pairs) - found
    expected = (bracket_count_formula(n), eds2_dimension(n),
                relation_count_formula(n))
    if n >= 7:
      matches = (len(pairs), found, relations) == expected
    else:
      matches = found == expected[1] and (
        len(pairs) - relations == expected[0] - expected[2])
    table.append(RankRow(n, len(pairs), found, relations, matches))
  return table


def series_push_correspondence(cases=((0, 4), (0, 6), (4, 6), (0, 8))):

  """ For each bracket, whether series-level and mould-level push-invariance
      agree.

      :returns: List of ``dict`` records ``{case, series, mould, agree}``. """

  records = []
  for twoj, twok in cases:
    element = eps_bracket_element(twoj, twok)
    series = is_push_invariant_series(element)
    mould = is_push_invariant(ma(element))
    records.append({'case': [twoj, twok], 'series': series, 'mould': mould,
                    'agree': series == mould})
  return records


## == Tangential element == ##
def ad_b_closed_form(n):

  """ ``sum_k (-1)^(n-k) C(n-1, k-1) u_k``, the depth-``n`` value of
      ``ma(ad(b)^n (a))``. """

  return MultiPoly.linear([(-1) ** (n - k) * math.comb(n - 1, k - 1)
                           for k in range(1, n + 1)])


def f_mould(n):

  """ ``ma([ad(b)^n (a), a])``, concentrated in depth ``n``. """

  cap = n + 2
  a, b = NCPoly.letter('a', cap), NCPoly.letter('b', cap)
  return ma(lie_bracket(ad_pow(b, n, a), a), n)


def f_push_neutrality(n_max):

  """ ``{n: is_push_neutral(f_n)}`` for ``2 <= n <= n_max``. The linear
      factor of ``f_n`` has antisymmetric coefficients only for even ``n``,
      so odd ``n >= 3`` come back ``False``. """

  return {n: is_push_neutral(f_mould(n)) for n in range(2, n_max + 1)}


def prop_t01_check(n_max):

  """ ``True`` if every ``f_n = ma([ad(b)^n (a), a])`` with even
      ``2 <= n <= n_max`` is concentrated in depth ``n`` and push-neutral,
      and so is the mould of ``[t01', a]`` through weight ``n_max + 2``.
      Odd ``n >= 3`` carry ``B_n = 0`` and do not enter ``[t01', a]``. """

  for n in range(2, n_max + 1, 2):
    f = f_mould(n)
    if f.depths() != [n] or not is_push_neutral(f):
      logging.debug('f_%d fails the push-neutrality check.' % n)
      return False
  cap = n_max + 2
  t01prime = t_elements(cap).t01prime
  element = lie_bracket(t01prime, NCPoly.letter('a', cap))
  assembled = ma(to_c_coordinates(element))
  return is_push_neutral(assembled)


def closed_form_sign(n):

  """ The sign ``s`` with ``ma(ad(b)^n (a)) = s * ad_b_closed_form(n)``, or
      ``None`` if neither sign fits. """

  a, b = NCPoly.letter('a', n + 1), NCPoly.letter('b', n + 1)
  value = ma(ad_pow(b, n, a), n).poly(n)
  form = ad_b_closed_form(n)
  if value == form:
    return 1
  return -1 if value == -form else None


## == Regression report == ##
def _signed_match(computed, displayed):

  """ ``+1`` or ``-1`` if the primitive parts agree up to that sign. """

  computed, displayed = computed.primitive(), displayed.primitive()
  if computed == displayed:
    return 1
  return -1 if computed == -displayed else None


def _bracket_self_check(p):
  eds = eds2_space(p.degree + 2).basis
  return (span_contains(eds, p) and not antisymmetry(p) and (
    not push_defect(p)) and not reflection_defect(p))


def _items(weight_cap):

  """ ``(name, source, needed weight, check)`` for every report item; a
      signed check returns a sign or ``None``, the others a ``bool``. """

  def bracket(pair):
    return lambda: _signed_match(eps_bracket_mould(
      *pair, cap=weight_cap).poly(2), MultiPoly.parse(
        DISPLAYED_BRACKETS[pair], 2))

  items = []
  for pair in sorted(DISPLAYED_BRACKETS):
    items.append(('eps-bracket %d,%d' % pair, 'display',
                  bracket_weight(*pair), 'signed', bracket(pair)))
  for pair in SELF_CHECKED_BRACKETS:
    items.append(('eps-bracket %d,%d relations' % pair, 'self-oracle',
                  bracket_weight(*pair), 'plain',
                  lambda pair=pair: _bracket_self_check(eps_bracket_mould(
                    *pair, cap=weight_cap).poly(2))))
  items.append(('eds2 line at weight 7', 'display', 7, 'plain', lambda: (
    span_equal(eds2_space(7).basis, [eps_bracket_mould(
      0, 6, cap=weight_cap).poly(2)]))))
  for n, dimension in ((5, 1), (7, 1), (11, 2)):
    items.append(('eds2 dimension %d' % n, 'dimension formula', 0, 'plain',
                  lambda n=n, d=dimension: eds2_space(n).computed == d))
  for n, dimension in ((5, 2), (9, 3), (11, 4)):
    items.append(('fs2 dimension %d' % n, 'dimension formula', 0, 'plain',
                  lambda n=n, d=dimension: fs2_space(n).computed == d))
  for n in sorted(DISPLAYED_FS_BASES):
    items.append(('fs2 basis %d' % n, 'display', 0, 'plain',
                  lambda n=n: span_equal(fs2_space(n).basis, [
                    MultiPoly.parse(t, 2) for t in DISPLAYED_FS_BASES[n]])))
  for text, expected in (('c3', '{1: u1^2}'), ('c1*c2', '{2: -u2}'),
                         ('c2*c1', '{2: -u1}')):
    items.append(('ma %s' % text, 'display', 0, 'plain',
                  lambda t=text, e=expected: str(ma(CPoly.parse(t))) == e))
  items.append(('ad(b)^n(a) closed form', 'closed form', 6, 'plain',
                lambda: all(closed_form_sign(n) == 1 for n in range(1, 6))))
  items.append(('G4 expansion', 'display', 0, 'plain', lambda: (
    eisenstein_q(2, 2).expansion.coefficient(0) == Fraction(1, 240) and (
      eisenstein_q(2, 2).expansion.coefficient(2) == 9))))
  items.append(('G4 primitive at q^2', 'display', 0, 'plain',
                lambda: g_coefficient_identity_check(2, [2], 2)))
  items.append(('t01 + t02 + t12 = 0', 'identity', 10, 'plain', lambda: (
    not sum(t_elements(10)[:3], NCPoly.zero(10)))))
  items.append(('f_n push-neutral, even n', 'display', 6, 'plain',
                lambda: prop_t01_check(4)))
  items.append(('delta-bialternal brackets', 'identity', 11, 'plain',
                lambda: all(is_delta_bialternal(eps_bracket_mould(
                  *pair, cap=weight_cap)) for pair in sorted(
                    DISPLAYED_BRACKETS))))
  return items


def verify_paper_examples(weight_cap=None):

  """ Recompute every displayed value and report pass/fail per item, with
      one global sign ``sigma`` fitted across the signed items. A signed
      item passes only with sign ``EXPECTED_SIGMA``.

      :param weight_cap: Weight cap for derivation computations, defaulting
        to the configured cap. Items needing more fail with an explicit
        insufficient-cap error instead of a wrong value.

      :returns: ``dict`` with keys ``sigma``, ``pass`` and ``items``, each
        item a ``dict`` ``{item, expected_source, pass, sigma}``. """

  weight_cap = config.Config().caps['weight'] if (
    weight_cap is None) else weight_cap
  records, signs = [], []
  for name, source, needed, kind, check in _items(weight_cap):
    record = {'item': name, 'expected_source': source, 'sigma': None}
    if needed > weight_cap:
      record['pass'] = False
      record['error'] = str(InsufficientCap(name, needed, weight_cap))
    else:
      try:
        outcome = check()
      except Error as exc:
        record['pass'], record['error'] = False, str(exc)
      else:
        if kind == 'signed':
          record['sigma'], record['pass'] = outcome, outcome is not None
          signs.append(outcome)
        else:
          record['pass'] = bool(outcome)
    records.append(record)

  tally = collections.Counter(s for s in signs if s is not None)
  sigma = max(tally, key=lambda s: (tally[s], s)) if tally else None
  for record in records:
    if record['sigma'] is not None and record['sigma'] != EXPECTED_SIGMA:
      record['pass'] = False
  if sigma is not None and sigma != EXPECTED_SIGMA:
    logging.warning('fitted sign %s, expected %s.' % (sigma, EXPECTED_SIGMA))
  logging.info('global sign %s, %d of %d items pass.' % (
    sigma, sum(r['pass'] for r in records), len(records)))
  return {'sigma': sigma, 'pass': all(r['pass'] for r in records),
          'items': records}


__all__ = (
  'RationalMatrix',
  'DimensionReport',
  'RankRow',
  'DISPLAYED_BRACKETS',
  'SELF_CHECKED_BRACKETS',
  'EXPECTED_SIGMA',
  'DISPLAYED_FS_BASES',
  'rref',
  'rank',
  'nullspace',
  'span_rank',
  'span_equal',
  'span_contains',
  'antisymmetry',
  'push_defect',
  'fay_defect',
  'reflection_defect',
  'solve_depth2',
  'eds2_dimension',
  'fs2_dimension',
  'eds2_space',
  'fs2_space',
  'bracket_weight',
  'eps_bracket_element',
  'eps_bracket_mould',
  'admissible_brackets',
  'bracket_count_formula',
  'relation_count_formula',
  'eps_bracket_rank_table',
  'series_push_correspondence',
  'ad_b_closed_form',
  'f_mould',
  'f_push_neutrality',
  'prop_t01_check',
  'closed_form_sign',
  'verify_paper_examples')
