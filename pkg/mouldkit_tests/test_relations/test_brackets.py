# -*- coding: utf-8 -*-

"""

  bracket tests
  ~~~~~~~~~~~~~

  tests for the depth-2 moulds of brackets of special derivations, and
  for the tangential element checks.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# mouldkit
from mouldkit import test
from mouldkit import moulds
from mouldkit import relations
from mouldkit.scalar import MultiPoly
from mouldkit.exceptions import InsufficientCap


class BracketMouldTests(test.FrameworkTest):

  """ Tests for `relations.eps_bracket_mould` """

  def test_weight(self):

    """ Test the weight of a bracket """

    assert relations.bracket_weight(0, 4) == 5
    assert relations.bracket_weight(4, 6) == 11

  def test_displayed_values(self):

    """ Test the primitive depth-2 values against the listed brackets """

    for pair in ((0, 4), (0, 6), (4, 6)):
      computed = relations.eps_bracket_mould(*pair).poly(2).primitive()
      listed = MultiPoly.parse(relations.DISPLAYED_BRACKETS[pair], 2)
      assert computed == listed.primitive(), "bracket %s" % (pair,)

  def test_insufficient_cap(self):

    """ Test that a cap below the bracket's weight is refused """

    with self.assertRaises(InsufficientCap):
      relations.eps_bracket_element(0, 4, cap=4)

  def test_only_depth_two(self):

    """ Test that the bracket mould has depth cap 2 and one depth """

    P = relations.eps_bracket_mould(0, 4)
    assert P.cap == 2
    assert P.depths() == [2]

  def test_delta_bialternal(self):

    """ Test that every admissible bracket mould through weight 13 is
        delta-bialternal """

    for n in range(5, 14, 2):
      for pair in relations.admissible_brackets(n):
        P = relations.eps_bracket_mould(*pair)
        assert moulds.is_delta_bialternal(P), "bracket %s" % (pair,)

  def test_not_delta_bialternal(self):

    """ Test that random antisymmetric depth-2 moulds off the push-invariant
        space are not delta-bialternal """

    checked = 0
    while checked < 20:
      degree = self.rng.choice((3, 5, 7))
      q = MultiPoly(2, {(i, degree - i): self.rng.randint(-3, 3)
                        for i in range(degree + 1)})
      p = q - q.substitute([MultiPoly.variable(2, 2),
                            MultiPoly.variable(1, 2)])
      if relations.push_defect(p).is_zero:
        continue
      checked += 1
      assert not relations.antisymmetry(p)
      P = moulds.mould({2: p}, 2)
      assert not moulds.is_delta_bialternal(P), "value %s" % p

  def test_relations_of_brackets(self):

    """ Test that the (0, 8) bracket is antisymmetric, push-invariant and
        reflection-invariant """

    p = relations.eps_bracket_mould(0, 8).poly(2)
    assert not relations.antisymmetry(p)
    assert not relations.push_defect(p)
    assert not relations.reflection_defect(p)
    assert relations.span_contains(relations.eds2_space(9).basis, p)

  def test_weight_seven_line(self):

    """ Test that the (0, 6) bracket spans the weight-7 solution line """

    assert relations.span_equal(relations.eds2_space(7).basis, [
      relations.eps_bracket_mould(0, 6).poly(2)])


class RankTableTests(test.FrameworkTest):

  """ Tests for `relations.eps_bracket_rank_table` """

  def test_admissible(self):

    """ Test the admissible pairs by weight """

    expected = {
      5: [(0, 4)],
      7: [(0, 6)],
      9: [(0, 8)],
      11: [(0, 10), (4, 6)],
      13: [(0, 12), (4, 8)],
      15: [(0, 14), (4, 10), (6, 8)]}
    for n, pairs in expected.items():
      assert relations.admissible_brackets(n) == pairs, "weight %d" % n

  def test_counting_formulas(self):

    """ Test the counting formulas against the admissible pairs """

    for n in range(7, 30, 2):
      assert relations.bracket_count_formula(n) == len(
        relations.admissible_brackets(n))
    assert relations.relation_count_formula(15) == 1
    assert relations.relation_count_formula(13) == 0

  def test_table(self):

    """ Test that every row through weight 21 matches its formulas """

    table = relations.eps_bracket_rank_table(21)
    assert [row.weight for row in table] == list(range(5, 22, 2))
    for row in table:
      assert row.matches, "weight %d: rank %d of %d" % (
        row.weight, row.rank, row.brackets)
    relations_by_weight = {row.weight: row.relations for row in table}
    assert relations_by_weight[15] == 1
    assert relations_by_weight[17] == 0
    assert relations_by_weight[21] == 1

  def test_series_correspondence(self):

    """ Test the record layout of the push correspondence check """

    records = relations.series_push_correspondence(((0, 4),))
    assert len(records) == 1
    record = records[0]
    assert record['case'] == [0, 4]
    assert record['agree'] == (record['series'] == record['mould'])


class TangentialTests(test.FrameworkTest):

  """ Tests for the `ad(b)^n (a)` closed form and the `f_n` moulds """

  def test_closed_form(self):

    """ Test the closed form at depth 3 by hand """

    assert relations.ad_b_closed_form(3) == MultiPoly.parse(
      'u1-2*u2+u3', 3)

  def test_closed_form_sign(self):

    """ Test that the closed form holds with sign +1 """

    for n in range(1, 6):
      assert relations.closed_form_sign(n) == 1

  def test_f_depth(self):

    """ Test that `f_n` is concentrated in depth `n` """

    for n in range(2, 6):
      assert relations.f_mould(n).depths() == [n]

  def test_f_neutrality(self):

    """ Test that `f_n` is push-neutral exactly for even `n` """

    neutrality = relations.f_push_neutrality(10)
    assert sorted(neutrality) == list(range(2, 11))
    for n, neutral in neutrality.items():
      assert neutral == (n % 2 == 0), "f_%d" % n

  def test_t01_check(self):

    """ Test the assembled `[t01', a]` check """

    assert relations.prop_t01_check(12)
