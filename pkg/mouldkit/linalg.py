# -*- coding: utf-8 -*-

"""

  linalg
  ~~~~~~

  dense exact-rational matrices: row echelon forms, rank and kernels.

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""

# stdlib
from fractions import Fraction

# local
from .exceptions import ArityMismatch


class RationalMatrix(object):

  """ Dense matrix of :py:class:`fractions.Fraction` entries. Instances are
      treated as immutable: every operation returns a new matrix. """

  __slots__ = ('rows', 'ncols')

  def __init__(self, rows, ncols=None):

    """ Initialize a matrix from a list of rows.

        :param rows: Iterable of row iterables.
        :param ncols: Column count, required only for a matrix with no rows.

        :raises ArityMismatch: On ragged rows. """

    self.rows = [[Fraction(x) for x in row] for row in rows]
    width = len(self.rows[0]) if self.rows else (ncols or 0)
    for row in self.rows:
      if len(row) != width:
        raise ArityMismatch(width, len(row))
    self.ncols = width

  @classmethod
  def zeros(cls, nrows, ncols):

    """ The ``nrows x ncols`` zero matrix. """

    return cls([[0] * ncols for _ in range(nrows)], ncols)

  @classmethod
  def identity(cls, n):

    """ The ``n x n`` identity matrix. """

    return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

  nrows = property(lambda self: len(self.rows))

  shape = property(lambda self: (len(self.rows), self.ncols))

  __eq__ = lambda self, other: (
    isinstance(other, RationalMatrix) and self.shape == other.shape and (
      self.rows == other.rows))

  __hash__ = None

  __repr__ = lambda self: 'RationalMatrix(%r)' % (
    [[str(x) for x in row] for row in self.rows])

  def transpose(self):

    """ The transposed matrix. """

    return RationalMatrix(
      [list(col) for col in zip(*self.rows)] if self.rows else [],
      self.nrows)

  def stack(self, other):

    """ Rows of ``self`` followed by rows of ``other``. """

    if self.ncols != other.ncols and self.rows and other.rows:
      raise ArityMismatch(self.ncols, other.ncols)
    return RationalMatrix(self.rows + other.rows, self.ncols or other.ncols)

  def rref(self):

    """ Reduced row echelon form.

        :returns: Pair ``(matrix, pivots)``, ``pivots`` being the pivot column
          of each nonzero row, in order. """

    m = [list(row) for row in self.rows]
    n_rows, pivots, piv_r = len(m), [], 0
    for piv_c in range(self.ncols):
      if piv_r == n_rows:
        break
      for i_row in range(piv_r, n_rows):
        if m[i_row][piv_c] != 0:
          break
      else:
        continue
      if i_row != piv_r:
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
      fp = m[piv_r][piv_c]
      if fp != 1:
        m[piv_r] = [x / fp for x in m[piv_r]]
      for r in range(n_rows):
        fr = m[r][piv_c]
        if r == piv_r or fr == 0:
          continue
        m[r] = [x - y * fr for x, y in zip(m[r], m[piv_r])]
      pivots.append(piv_c)
      piv_r += 1
    return RationalMatrix(m, self.ncols), pivots

  def rank(self):

    """ Exact rank. """

    return len(self.rref()[1])

  def nullspace(self):

    """ Basis of the right kernel ``{x : self * x = 0}``.

        :returns: List of column vectors (lists of ``Fraction``), one per
          free column, each with a ``1`` in its free slot. """

    reduced, pivots = self.rref()
    free = [c for c in range(self.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
      vector = [Fraction(0)] * self.ncols
      vector[f] = Fraction(1)
      for row, p in zip(reduced.rows, pivots):
        vector[p] = -row[f]
      basis.append(vector)
    return basis

  def apply(self, vector):

    """ Matrix-vector product. """

    if len(vector) != self.ncols:
      raise ArityMismatch(self.ncols, len(vector))
    return [sum((x * y for x, y in zip(row, vector)), Fraction(0))
            for row in self.rows]


__all__ = ('RationalMatrix',)
