# -*- coding: utf-8 -*-
"""
Exact Linear Algebra
====================
Row reduction over ℚ and the subspace helpers every other module builds on.

  - Scalars are sympy QQ elements (always lowest terms, positive denominator)
  - Matrices are sympy DomainMatrix objects over QQ
  - Subspace is an immutable RREF record, so equal spans compare equal
  - Vectors are plain tuples of QQ elements in the even-before-odd layout
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import ParseError, SubspaceNotContained
from ..models.graded import GradedDim, Parity

_logger = logging.getLogger(__name__)

ZERO = QQ(0)
ONE = QQ(1)


# ── Scalars ───────────────────────────────────────────────────────────────────


def to_scalar(value):
    """Coerce int, Fraction, QQ element or "p/q" text to a QQ element."""
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Not a rational number: {value!r}") from e
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def scalar_text(x):
    """Serialize as p/q with q > 0 in lowest terms."""
    return f"{int(QQ.numer(x))}/{int(QQ.denom(x))}"


# ── Matrices and vectors ──────────────────────────────────────────────────────


def matrix(rows, ncols=None):
    """Dense rows (any scalar-like entries) → DomainMatrix over QQ."""
    rows = [[to_scalar(v) for v in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def sparse_matrix(row_dicts, ncols):
    """Rows given as {column: scalar} dicts → sparse DomainMatrix."""
    data = {}
    for i, row in enumerate(row_dicts):
        cleaned = {j: c for j, c in row.items() if c != 0}
        if cleaned:
            data[i] = cleaned
    return DomainMatrix(data, (len(row_dicts), ncols), QQ)


def zero_vector(n):
    return (ZERO,) * n


def unit_vector(n, i):
    return tuple(ONE if k == i else ZERO for k in range(n))


def add_scaled(u, v, c):
    """u + c·v."""
    if c == 0:
        return u
    return tuple(a + c * b for a, b in zip(u, v))


def is_zero_vector(v):
    return all(x == 0 for x in v)


def rref(m):
    """
    Reduced row echelon form of a DomainMatrix.

    Returns (rows, pivots): the nonzero rows as tuples of QQ elements and the
    strictly increasing pivot columns.
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return (), ()
    reduced, pivots = m.rref()
    dense = reduced.to_list()
    rows = tuple(tuple(dense[k]) for k in range(len(pivots)))
    return rows, tuple(pivots)


def rank(m):
    return len(rref(m)[1])


# ── Subspace ──────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple = ()
    pivot_cols: tuple = ()

    @property
    def rank(self):
        return len(self.pivot_cols)

    def is_zero(self):
        return not self.pivot_cols

    def graded_dim(self, parities):
        """Pivot count per parity; valid because graded subspaces have homogeneous RREF rows."""
        odd = sum(1 for c in self.pivot_cols if parities[c] == Parity.ODD)
        return GradedDim(self.rank - odd, odd)

    def reduce(self, v):
        """Residual of v after eliminating every pivot column."""
        for row, p in zip(self.basis, self.pivot_cols):
            c = v[p]
            if c != 0:
                v = add_scaled(v, row, -c)
        return v

    def coordinates(self, v):
        """Coefficients of v ∈ self in the RREF basis (read off the pivots)."""
        return tuple(v[p] for p in self.pivot_cols)

    def non_pivot_cols(self):
        pivots = set(self.pivot_cols)
        return tuple(c for c in range(self.ambient_dim) if c not in pivots)


def span(vectors, ambient_dim):
    rows = [tuple(to_scalar(x) for x in v) for v in vectors]
    rows = [r for r in rows if not is_zero_vector(r)]
    if not rows:
        return Subspace(ambient_dim)
    for r in rows:
        if len(r) != ambient_dim:
            raise ValueError(f"Vector of length {len(r)} in ambient dimension {ambient_dim}")
    basis, pivots = rref(DomainMatrix([list(r) for r in rows], (len(rows), ambient_dim), QQ))
    return Subspace(ambient_dim, basis, pivots)


def span_sparse(row_dicts, ambient_dim):
    """Same as span() for rows given as {column: QQ} dicts."""
    m = sparse_matrix(row_dicts, ambient_dim)
    basis, pivots = rref(m)
    return Subspace(ambient_dim, basis, pivots)


def whole_space(n):
    return Subspace(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))


def contains(s, v):
    return is_zero_vector(s.reduce(tuple(v)))


def is_subspace(small, big):
    return all(contains(big, row) for row in small.basis)


def quotient_dim(big, small):
    if not is_subspace(small, big):
        raise SubspaceNotContained("Subspace is not contained in the ambient span")
    return big.rank - small.rank


def sum_spaces(a, b):
    return span(a.basis + b.basis, a.ambient_dim)


def kernel(m):
    """Null space {x : m·x = 0} as a Subspace of dimension cols − rank."""
    ncols = m.shape[1]
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        vectors.append(v)
    return span(vectors, ncols)


def extend_to_basis(space, candidates):
    """
    Greedily add candidate vectors independent of `space` (in order).

    Returns the chosen candidates; the parity layout is untouched, so
    homogeneous candidates give homogeneous complements.
    """
    chosen = []
    current = space
    for v in candidates:
        if not contains(current, v):
            chosen.append(tuple(v))
            current = span(current.basis + (tuple(v),), space.ambient_dim)
    return chosen


def inverse(m):
    return m.inv()


def vector_times(v, m_rows):
    """Row vector v times the dense matrix m_rows (list of rows)."""
    ncols = len(m_rows[0]) if m_rows else 0
    out = [ZERO] * ncols
    for c, row in zip(v, m_rows):
        if c == 0:
            continue
        for j, x in enumerate(row):
            if x != 0:
                out[j] += c * x
    return tuple(out)
