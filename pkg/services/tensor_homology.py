# -*- coding: utf-8 -*-
"""
Tensor and Homology Service
===========================
Presented quotient spaces built from the defining relations of the
non-abelian tensor square of a class-≤2 Lie superalgebra.

  - tensor_square        → L⊗L on symbols e_i⊗e_j
  - square_submodule     → L□L inside L⊗L
  - exterior_square      → L∧L = L⊗L / L□L
  - gamma_space          → Γ on (p|q) generators
  - exterior_center      → Z^∧(L), capability
  - schur_multiplier_class2, triple_tensor_class2, bound_check
  - pair_exterior_abelian → A∧I for a coordinate ideal I of A(m|n)
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional

from ..exceptions import AbelianInput, ClassTooHigh, InvalidParams
from ..models.graded import GradedDim, Parity, sign
from ..models.superalgebra import (
    IdealSubspace,
    center,
    derived_subalgebra,
    nilpotency_class,
)
from . import exact_linalg as la

_logger = logging.getLogger(__name__)


# ── Presented spaces ──────────────────────────────────────────────────────────


@dataclass(frozen=True)
class TensorSymbol:
    left: int
    right: int
    parity: Parity


@dataclass(frozen=True)
class PresentedSpace:
    """Free graded span on `labels` modulo the `relations` subspace."""

    labels: tuple
    parities: tuple
    relations: la.Subspace
    symbols: tuple = ()

    @property
    def size(self):
        return len(self.labels)

    @property
    def quotient_basis(self):
        """Coset representatives: symbols in non-pivot columns."""
        return self.relations.non_pivot_cols()

    @property
    def quotient_dim(self):
        reps = self.quotient_basis
        odd = sum(1 for c in reps if self.parities[c] == Parity.ODD)
        return GradedDim(len(reps) - odd, odd)

    @property
    def quotient_parities(self):
        return tuple(self.parities[c] for c in self.quotient_basis)

    def representative_labels(self):
        return tuple(self.labels[c] for c in self.quotient_basis)

    def reduce(self, vector):
        """Quotient coordinates of a symbol-space vector (in quotient_basis order)."""
        residual = self.relations.reduce(tuple(vector))
        return tuple(residual[c] for c in self.quotient_basis)


def _pair_label(L, i, j):
    return f"{L.names[i]}⊗{L.names[j]}"


def _require_class_two(L):
    cls = nilpotency_class(L)
    if cls is None or cls > 2:
        shown = "not nilpotent" if cls is None else f"class {cls}"
        raise ClassTooHigh(
            f"Constructive tensor products need nilpotency class ≤ 2; input is {shown}"
        )
    return cls


class _SymbolSpace:
    """Coordinates for the d² symbols e_i⊗e_j in lexicographic order."""

    def __init__(self, L):
        self.L = L
        self.d = L.dim_total

    def index(self, i, j):
        return i * self.d + j

    def parity(self, i, j):
        return self.L.parities[i] + self.L.parities[j]

    def left_expand(self, combo, k, row, scale):
        """row += scale · (Σ c_a e_a) ⊗ e_k."""
        for a, c in combo.items():
            col = self.index(a, k)
            row[col] = row.get(col, la.ZERO) + scale * c

    def right_expand(self, k, combo, row, scale):
        """row += scale · e_k ⊗ (Σ c_a e_a)."""
        for a, c in combo.items():
            col = self.index(k, a)
            row[col] = row.get(col, la.ZERO) + scale * c

    def add(self, row, i, j, scale):
        col = self.index(i, j)
        row[col] = row.get(col, la.ZERO) + scale


def _check_homogeneous(space, row):
    parities = {space.parity(c // space.d, c % space.d) for c, x in row.items() if x != 0}
    if len(parities) > 1:
        raise AssertionError(f"Relation row mixes parities: {row}")


def _tensor_relation_rows(L, order=None):
    """
    Basis instances of the two action relations:

      [m,m']⊗n = m⊗[m',n] − (−1)^{|m||m'|} m'⊗[m,n]
      m⊗[n,n'] = (−1)^{|n'|(|m|+|n|)} [n',m]⊗n − (−1)^{|m||n|} [n,m]⊗n'
    """
    space = _SymbolSpace(L)
    p = L.parities
    d = space.d
    triples = order if order is not None else product(range(d), repeat=3)
    rows = []
    for i, j, k in triples:
        # [e_i,e_j]⊗e_k − e_i⊗[e_j,e_k] + (−1)^{|i||j|} e_j⊗[e_i,e_k]
        row = {}
        space.left_expand(L.bracket(i, j), k, row, la.ONE)
        space.right_expand(i, L.bracket(j, k), row, -la.ONE)
        space.right_expand(j, L.bracket(i, k), row, la.QQ(sign(p[i], p[j])))
        row = {c: x for c, x in row.items() if x != 0}
        if row:
            _check_homogeneous(space, row)
            rows.append(row)

        # e_i⊗[e_j,e_k] − (−1)^{|k|(|i|+|j|)} [e_k,e_i]⊗e_j + (−1)^{|i||j|} [e_j,e_i]⊗e_k
        row = {}
        space.right_expand(i, L.bracket(j, k), row, la.ONE)
        s = -1 if (p[k] == Parity.ODD and (p[i] + p[j]) == Parity.ODD) else 1
        space.left_expand(L.bracket(k, i), j, row, la.QQ(-s))
        space.left_expand(L.bracket(j, i), k, row, la.QQ(sign(p[i], p[j])))
        row = {c: x for c, x in row.items() if x != 0}
        if row:
            _check_homogeneous(space, row)
            rows.append(row)
    return rows


def _square_generators(L):
    """e_i⊗e_j + (−1)^{|i||j|} e_j⊗e_i (i ≤ j) and e_i⊗e_i for even i, as symbol dicts."""
    space = _SymbolSpace(L)
    p = L.parities
    gens = []
    for i in range(space.d):
        for j in range(i, space.d):
            row = {}
            space.add(row, i, j, la.ONE)
            space.add(row, j, i, la.QQ(sign(p[i], p[j])))
            row = {c: x for c, x in row.items() if x != 0}
            if row:
                gens.append(row)
        if p[i] == Parity.EVEN:
            gens.append({space.index(i, i): la.ONE})
    return gens


def _symbol_metadata(L):
    d = L.dim_total
    labels, parities, symbols = [], [], []
    for i in range(d):
        for j in range(d):
            par = L.parities[i] + L.parities[j]
            labels.append(_pair_label(L, i, j))
            parities.append(par)
            symbols.append(TensorSymbol(i, j, par))
    return tuple(labels), tuple(parities), tuple(symbols)


def _dict_to_vector(row, n):
    out = [la.ZERO] * n
    for c, x in row.items():
        out[c] = x
    return tuple(out)


# ── Tensor, square and exterior squares ───────────────────────────────────────


def tensor_square(L, order=None):
    """
    L⊗L for nilpotency class ≤ 2. `order` optionally fixes the sequence of
    basis triples used to emit relations; the quotient never depends on it.
    """
    _require_class_two(L)
    labels, parities, symbols = _symbol_metadata(L)
    rows = _tensor_relation_rows(L, order)
    relations = la.span_sparse(rows, len(labels))
    _logger.debug(f"tensor_square: {len(labels)} symbols, {len(rows)} relation rows, rank {relations.rank}")
    return PresentedSpace(labels, parities, relations, symbols)


def square_submodule(L, tensor=None):
    """L□L as a Subspace of the quotient coordinates of `tensor` (= L⊗L)."""
    tensor = tensor or tensor_square(L)
    n = tensor.size
    images = [tensor.reduce(_dict_to_vector(g, n)) for g in _square_generators(L)]
    return la.span(images, len(tensor.quotient_basis))


def square_dim(L, tensor=None):
    tensor = tensor or tensor_square(L)
    return square_submodule(L, tensor).graded_dim(tensor.quotient_parities)


def exterior_square(L):
    _require_class_two(L)
    labels, parities, symbols = _symbol_metadata(L)
    rows = _tensor_relation_rows(L) + _square_generators(L)
    relations = la.span_sparse(rows, len(labels))
    return PresentedSpace(labels, parities, relations, symbols)


# ── Γ functor ─────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class GammaSpace:
    p: int
    q: int
    presentation: PresentedSpace

    @property
    def dim(self):
        return self.presentation.quotient_dim


def gamma_space(p, q):
    """
    Generators γ(e_i) (even i) and e_i⊗e_j over a (p|q)-dimensional space.
    Basis instances of the four defining relations are enough once γ is
    extended quadratically:

      2γ(e_i) = e_i⊗e_i                       (i even)
      e_i⊗e_j = (−1)^{|i||j|} e_j⊗e_i
      e_i⊗e_i = 0                             (i odd)
    """
    if p < 0 or q < 0:
        raise InvalidParams("gamma_space needs p, q ≥ 0")
    d = p + q
    par = [Parity.EVEN] * p + [Parity.ODD] * q
    labels = [f"γ(e{i + 1})" for i in range(p)]
    parities = [Parity.EVEN] * p
    offset = p
    for i in range(d):
        for j in range(d):
            labels.append(f"e{i + 1}⊗e{j + 1}")
            parities.append(par[i] + par[j])

    def sym(i, j):
        return offset + i * d + j

    rows = []
    for i in range(p):
        rows.append({sym(i, i): la.ONE, i: la.QQ(-2)})
    for i in range(d):
        for j in range(i + 1, d):
            rows.append({sym(i, j): la.ONE, sym(j, i): la.QQ(-sign(par[i], par[j]))})
    for i in range(p, d):
        rows.append({sym(i, i): la.ONE})
    relations = la.span_sparse(rows, len(labels))
    return GammaSpace(p, q, PresentedSpace(tuple(labels), tuple(parities), relations))


def gamma_dim(p, q):
    return gamma_space(p, q).dim


# ── Decomposition, exterior center, capability ────────────────────────────────


def decomposition_check(L, tensor=None, exterior=None):
    """⊗² = ∧² ⊕ □: dims add up and □ meets the ∧²-complement trivially."""
    tensor = tensor or tensor_square(L)
    exterior = exterior or exterior_square(L)
    square = square_submodule(L, tensor)
    t_dim = tensor.quotient_dim
    e_dim = exterior.quotient_dim
    s_dim = square.graded_dim(tensor.quotient_parities)
    if t_dim != e_dim + s_dim:
        return False
    complement = la.span(
        [tensor.reduce(la.unit_vector(tensor.size, c)) for c in exterior.quotient_basis],
        len(tensor.quotient_basis),
    )
    if complement.rank != e_dim.total:
        return False
    combined = la.sum_spaces(square, complement)
    return combined.rank == len(tensor.quotient_basis)


def exterior_center(L, exterior=None):
    """Kernel of x ↦ (x∧e_j)_j inside ∧²L; always inside Z(L)."""
    exterior = exterior or exterior_square(L)
    d = L.dim_total
    if d == 0:
        return IdealSubspace(L, la.Subspace(0))
    reps = exterior.quotient_basis
    rows = []  # one row per (j, representative); columns i
    images = {}
    for i in range(d):
        for j in range(d):
            images[(i, j)] = exterior.reduce(la.unit_vector(exterior.size, i * d + j))
    for j in range(d):
        for q in range(len(reps)):
            rows.append({i: images[(i, j)][q] for i in range(d)})
    zw = IdealSubspace(L, la.kernel(la.sparse_matrix(rows, d)))
    if not la.is_subspace(zw.space, center(L).space):
        raise AssertionError("Exterior center escaped the center")
    return zw


def is_capable(L):
    return exterior_center(L).is_zero()


# ── Multiplier, triple tensor, bound ──────────────────────────────────────────


def schur_multiplier_class2(L, exterior=None):
    exterior = exterior or exterior_square(L)
    return exterior.quotient_dim - derived_subalgebra(L).dim


def abelianization_dim(L):
    return L.dim - derived_subalgebra(L).dim


def triple_tensor_class2(L, tensor=None):
    tensor = tensor or tensor_square(L)
    return tensor.quotient_dim * abelianization_dim(L)


@dataclass(frozen=True)
class BoundReport:
    lhs: int
    rhs: int
    dim: GradedDim
    derived: GradedDim
    equality: bool
    # True/False inside the derived-dim-(1|0) family, None outside it
    expected_equality: Optional[bool]

    @property
    def satisfied(self):
        return self.lhs <= self.rhs

    @property
    def consistent(self):
        if not self.satisfied:
            return False
        if self.expected_equality is None:
            return True
        return self.equality == self.expected_equality


def tensor_bound_rhs(dim, derived):
    n = dim.total
    return n * (n - derived.total) ** 2


def bound_check(L, tensor=None):
    derived = derived_subalgebra(L).dim
    if derived.is_zero():
        raise AbelianInput("The ⊗³ bound is stated for non-abelian algebras")
    lhs = triple_tensor_class2(L, tensor).total
    rhs = tensor_bound_rhs(L.dim, derived)
    expected = None
    if derived == GradedDim(1, 0):
        from .recognizer import recognize_derived_dim_one

        shape = recognize_derived_dim_one(L)
        expected = (shape.m, shape.n) == (1, 0) and shape.abelian.is_zero()
    return BoundReport(lhs, rhs, L.dim, derived, lhs == rhs, expected)


# ── Abelian pairs ─────────────────────────────────────────────────────────────


def pair_exterior_abelian(m, n, k, h):
    """
    A∧I for A = A(m|n) and I spanned by its first k even and first h odd basis
    vectors: symbols a⊗i modulo the square generators with both entries in I.
    """
    if not (0 <= k <= m and 0 <= h <= n):
        raise InvalidParams(f"Ideal (k|h)=({k}|{h}) does not fit in A({m}|{n})")
    par = [Parity.EVEN] * m + [Parity.ODD] * n
    ideal = list(range(k)) + list(range(m, m + h))
    width = len(ideal)
    position = {a: t for t, a in enumerate(ideal)}
    labels, parities = [], []
    for a in range(m + n):
        for b in ideal:
            labels.append(f"e{a + 1}⊗e{b + 1}")
            parities.append(par[a] + par[b])

    def sym(a, b):
        return a * width + position[b]

    rows = []
    for s, a in enumerate(ideal):
        for b in ideal[s:]:
            row = {sym(a, b): la.ONE}
            row[sym(b, a)] = row.get(sym(b, a), la.ZERO) + la.QQ(sign(par[a], par[b]))
            row = {c: x for c, x in row.items() if x != 0}
            if row:
                rows.append(row)
        if par[a] == Parity.EVEN:
            rows.append({sym(a, a): la.ONE})
    relations = la.span_sparse(rows, len(labels))
    return PresentedSpace(tuple(labels), tuple(parities), relations)
