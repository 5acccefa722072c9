# -*- coding: utf-8 -*-
"""
Lie Superalgebra Model
======================
Finite-dimensional Lie superalgebras over ℚ given by structure constants.

  - LieSuperAlgebra  → graded basis (even first) + sparse bracket table (i ≤ j)
  - IdealSubspace    → graded ideal of a parent algebra
  - ValidationReport → every violated grading / skew / Jacobi instance
  - Structural invariants: derived subalgebra, center, lower central series,
    nilpotency class, quotient, direct sum, generalized Heisenberg rank,
    change of basis
"""

import logging
from dataclasses import dataclass, field

from ..exceptions import InvalidAlgebra, NotAnIdeal
from ..services import exact_linalg as la
from .graded import GradedDim, Parity, sign

_logger = logging.getLogger(__name__)


# ── Validation report ─────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Violation:
    kind: str  # grading | skew | jacobi
    indices: tuple
    names: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at ({', '.join(self.names)}): {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return {v.kind for v in self.violations}

    def summary(self):
        if self.ok:
            return "no violations"
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        return shown + (f"; … {more} more" if more > 0 else "")


# ── Algebra ───────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class LieSuperAlgebra:
    """
    names/parities describe the ordered basis; structure maps (i, j) with i ≤ j
    to a tuple of (k, coeff) pairs with nonzero QQ coefficients.
    """

    names: tuple
    parities: tuple
    structure: tuple = ()
    _table: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise InvalidAlgebra("Basis names and parities differ in length")
        if len(set(self.names)) != len(self.names):
            raise InvalidAlgebra("Basis names must be unique")
        seen_odd = False
        for p in self.parities:
            if p == Parity.ODD:
                seen_odd = True
            elif seen_odd:
                raise InvalidAlgebra("Even basis elements must precede odd ones")
        table = {}
        for i, j, terms in self.structure:
            if not 0 <= i <= j < self.dim_total:
                raise InvalidAlgebra(f"Bracket index ({i},{j}) out of range")
            table[(i, j)] = dict(terms)
        object.__setattr__(self, "_table", table)

    # ── Construction ──────────────────────────────────────────────────────────

    @classmethod
    def build(cls, basis, brackets=None):
        """
        basis: sequence of (name, Parity); brackets: {(i, j): {k: scalar}} for
        any index order. Pairs with i > j are folded onto (j, i) by graded
        skew-symmetry.
        """
        names = tuple(n for n, _ in basis)
        parities = tuple(Parity(p) for _, p in basis)
        folded = {}
        for (i, j), value in (brackets or {}).items():
            terms = {k: la.to_scalar(c) for k, c in value.items()}
            if i > j:
                s = -sign(parities[i], parities[j])
                i, j = j, i
                terms = {k: s * c for k, c in terms.items()}
            slot = folded.setdefault((i, j), {})
            for k, c in terms.items():
                slot[k] = slot.get(k, la.ZERO) + c
        structure = tuple(
            (i, j, tuple(sorted((k, c) for k, c in terms.items() if c != 0)))
            for (i, j), terms in sorted(folded.items())
            if any(c != 0 for c in terms.values())
        )
        return cls(names, parities, structure)

    # ── Basic data ────────────────────────────────────────────────────────────

    @property
    def dim_total(self):
        return len(self.names)

    @property
    def dim(self):
        odd = sum(1 for p in self.parities if p == Parity.ODD)
        return GradedDim(len(self.parities) - odd, odd)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidAlgebra(f"Unknown basis element {name!r}") from None

    def bracket(self, i, j):
        """[e_i, e_j] as a {k: coeff} dict."""
        if i <= j:
            return dict(self._table.get((i, j), {}))
        s = -sign(self.parities[i], self.parities[j])
        return {k: s * c for k, c in self._table.get((j, i), {}).items()}

    def bracket_vector(self, i, j):
        out = [la.ZERO] * self.dim_total
        for k, c in self.bracket(i, j).items():
            out[k] = c
        return tuple(out)

    def bracket_vectors(self, u, v):
        """Bilinear extension of the bracket to coordinate vectors."""
        out = [la.ZERO] * self.dim_total
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, c in self.bracket(i, j).items():
                    out[k] += a * b * c
        return tuple(out)

    def is_abelian(self):
        return not self.structure

    def parity_of_vector(self, v):
        """Parity of a homogeneous nonzero vector, None for 0 or mixed vectors."""
        found = {self.parities[k] for k, x in enumerate(v) if x != 0}
        return found.pop() if len(found) == 1 else None

    def structure_table(self):
        """Index-only view of the brackets, used to compare algebras up to names."""
        return {(i, j): dict(terms) for i, j, terms in self.structure}


# ── Ideals ────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class IdealSubspace:
    parent: LieSuperAlgebra
    space: la.Subspace

    @property
    def dim(self):
        return self.space.graded_dim(self.parent.parities)

    def is_zero(self):
        return self.space.is_zero()

    def __eq__(self, other):
        return isinstance(other, IdealSubspace) and self.space == other.space

    def __hash__(self):
        return hash(self.space)


def _ideal(L, vectors):
    return IdealSubspace(L, la.span(vectors, L.dim_total))


# ── Axioms ────────────────────────────────────────────────────────────────────


def check_axioms(L):
    violations = []
    n = L.dim_total
    par = L.parities
    for (i, j), terms in sorted(L._table.items()):
        expected = par[i] + par[j]
        for k, c in terms.items():
            if c != 0 and par[k] != expected:
                violations.append(Violation(
                    "grading", (i, j), (L.names[i], L.names[j]),
                    f"component {L.names[k]} has parity {par[k].label}, expected {expected.label}",
                ))
                break
        if i == j and par[i] == Parity.EVEN and any(c != 0 for c in terms.values()):
            violations.append(Violation(
                "skew", (i, i), (L.names[i], L.names[i]), "[x,x] must vanish for even x",
            ))

    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                residual = _jacobi(L, i, j, k)
                if not la.is_zero_vector(residual):
                    violations.append(Violation(
                        "jacobi", (i, j, k), (L.names[i], L.names[j], L.names[k]),
                        "graded Jacobi sum is nonzero",
                    ))
    if violations:
        _logger.debug(f"check_axioms: {len(violations)} violations")
    return ValidationReport(tuple(violations))


def _jacobi(L, i, j, k):
    """(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]]."""
    n = L.dim_total
    p = L.parities
    total = la.zero_vector(n)
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = L.bracket_vector(b, c)
        outer = L.bracket_vectors(la.unit_vector(n, a), inner)
        total = la.add_scaled(total, outer, sign(p[a], p[c]))
    return total


# ── Structural invariants ─────────────────────────────────────────────────────


def derived_subalgebra(L):
    n = L.dim_total
    vectors = [L.bracket_vector(i, j) for i in range(n) for j in range(i, n)]
    return _ideal(L, vectors)


def center(L):
    """Kernel of x ↦ ([x,e_1], …, [x,e_d])."""
    n = L.dim_total
    if n == 0:
        return _ideal(L, [])
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append({i: L.bracket(i, j).get(k, la.ZERO) for i in range(n)})
    return IdealSubspace(L, la.kernel(la.sparse_matrix(rows, n)))


def bracket_with_algebra(L, space):
    """span{[v, e_j] : v ∈ basis(space), all j}."""
    n = L.dim_total
    vectors = []
    for v in space.basis:
        for j in range(n):
            vectors.append(L.bracket_vectors(v, la.unit_vector(n, j)))
    return la.span(vectors, n)


def lower_central_series(L):
    terms = [IdealSubspace(L, la.whole_space(L.dim_total))]
    while not terms[-1].is_zero():
        nxt = IdealSubspace(L, bracket_with_algebra(L, terms[-1].space))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def nilpotency_class(L):
    """Class k with L^{k+1} = 0, or None when the series stalls at a nonzero term."""
    if L.dim_total == 0:
        return 1
    series = lower_central_series(L)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def is_ideal(L, space):
    return la.is_subspace(bracket_with_algebra(L, space), space)


def quotient(L, ideal):
    space = ideal.space if isinstance(ideal, IdealSubspace) else ideal
    if not is_ideal(L, space):
        raise NotAnIdeal("Subspace is not closed under bracketing with the algebra")
    reps = space.non_pivot_cols()
    position = {c: q for q, c in enumerate(reps)}
    basis = [(L.names[c], L.parities[c]) for c in reps]
    brackets = {}
    for a, ca in enumerate(reps):
        for b in range(a, len(reps)):
            residual = space.reduce(L.bracket_vector(ca, reps[b]))
            terms = {position[c]: x for c, x in enumerate(residual) if x != 0}
            if terms:
                brackets[(a, b)] = terms
    return LieSuperAlgebra.build(basis, brackets)


def _fresh_name(name, taken):
    while name in taken:
        name += "'"
    return name


def direct_sum(L, K):
    """Basis order: L even, K even, L odd, K odd; colliding K names get primes."""
    taken = set(L.names)
    k_names = []
    for name in K.names:
        fresh = _fresh_name(name, taken)
        taken.add(fresh)
        k_names.append(fresh)

    order = []  # (source, old index)
    for parity in (Parity.EVEN, Parity.ODD):
        order += [("L", i) for i, p in enumerate(L.parities) if p == parity]
        order += [("K", i) for i, p in enumerate(K.parities) if p == parity]
    new_index = {key: pos for pos, key in enumerate(order)}

    basis = []
    for src, i in order:
        if src == "L":
            basis.append((L.names[i], L.parities[i]))
        else:
            basis.append((k_names[i], K.parities[i]))

    brackets = {}
    for src, alg in (("L", L), ("K", K)):
        for i, j, terms in alg.structure:
            brackets[(new_index[(src, i)], new_index[(src, j)])] = {
                new_index[(src, k)]: c for k, c in terms
            }
    return LieSuperAlgebra.build(basis, brackets)


def generalized_heisenberg_rank(L):
    """dim Z(L) when L′ = Z(L), else None."""
    derived = derived_subalgebra(L)
    if derived != center(L):
        return None
    return derived.dim


def change_basis(L, rows, names=None):
    """
    Rewrite L in the basis whose vectors (old coordinates) are `rows`.

    Rows must be parity-homogeneous, invertible, and list even vectors first.
    """
    n = L.dim_total
    rows = [tuple(la.to_scalar(x) for x in r) for r in rows]
    if len(rows) != n:
        raise InvalidAlgebra(f"Basis change needs {n} vectors, got {len(rows)}")
    parities = []
    for r in rows:
        p = L.parity_of_vector(r)
        if p is None:
            raise InvalidAlgebra("Basis change vectors must be nonzero and parity-homogeneous")
        parities.append(p)
    if la.span(rows, n).rank != n:
        raise InvalidAlgebra("Basis change vectors are linearly dependent")
    inv_rows = la.inverse(la.matrix(rows, n)).to_list()
    names = tuple(names) if names else tuple(f"f{k + 1}" for k in range(n))
    brackets = {}
    for a in range(n):
        for b in range(a, n):
            image = L.bracket_vectors(rows[a], rows[b])
            if la.is_zero_vector(image):
                continue
            coords = la.vector_times(image, inv_rows)
            brackets[(a, b)] = {k: c for k, c in enumerate(coords) if c != 0}
    return LieSuperAlgebra.build(list(zip(names, parities)), brackets)
