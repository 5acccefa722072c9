# -*- coding: utf-8 -*-
"""
Derived-Dimension-One Recognizer
================================
Nilpotent superalgebras with one-dimensional derived subalgebra are
H(m,n) ⊕ A(k−2m−1 | l−n) (even derived) or H_m ⊕ A(k−m | l−m−1) (odd
derived). This service reads (m, n) off the bracket forms and, when it can
over ℚ, emits a basis realizing the isomorphism.

Emitted basis order matches direct_sum(H, A) from the catalog, so
change_basis(L, report.vectors()) reproduces its structure constants.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from sympy import QQ

from ..exceptions import DerivedDimNotOne, NotNilpotent
from ..models.graded import GradedDim, Parity
from ..models.superalgebra import center, derived_subalgebra, nilpotency_class
from . import exact_linalg as la

_logger = logging.getLogger(__name__)

IRRATIONAL_SCALING = "irrational_scaling"


@dataclass(frozen=True)
class DecompositionReport:
    center_parity: Parity
    m: int
    n: int
    abelian: GradedDim
    basis: Optional[tuple] = None  # ((name, vector), …)
    basis_omitted: Optional[str] = None

    @property
    def heisenberg_label(self):
        if self.center_parity == Parity.EVEN:
            return f"H({self.m},{self.n})"
        return f"Hodd({self.m})"

    @property
    def capable(self):
        """Capable iff H(1,0) ⊕ A or H_1 ⊕ A."""
        if self.center_parity == Parity.EVEN:
            return (self.m, self.n) == (1, 0)
        return self.m == 1

    def vectors(self):
        return [v for _, v in self.basis] if self.basis else None

    def names(self):
        return [name for name, _ in self.basis] if self.basis else None


# ── Helpers ───────────────────────────────────────────────────────────────────


def _form(L, z_pivot):
    """B(u, v) = coefficient of z in [u, v]; z is the RREF row with pivot 1."""
    def B(u, v):
        return L.bracket_vectors(u, v)[z_pivot]
    return B


def _gram(B, us, vs):
    return [[B(u, v) for v in vs] for u in us]


def _gram_rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return la.rank(la.matrix(rows, ncols))


def _block_units(L, parity):
    n = L.dim_total
    return [la.unit_vector(n, i) for i, p in enumerate(L.parities) if p == parity]


def _complement(L, space, parity):
    """Unit vectors of the given parity completing `space` (homogeneous RREF rows)."""
    return la.extend_to_basis(space, _block_units(L, parity))


def _scale(v, c):
    return tuple(c * x for x in v)


def _rational_sqrt(x):
    if x <= 0:
        return None
    p, q = int(QQ.numer(x)), int(QQ.denom(x))
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return QQ(rp, rq)
    return None


def _symplectic_basis(B, vectors):
    """Pairs (u_i, v_i) with B(u_i, v_i) = 1, all other pairings 0."""
    work = list(vectors)
    us, vs = [], []
    while work:
        u = work.pop(0)
        partner = next((w for w in work if B(u, w) != 0), None)
        if partner is None:
            continue  # radical direction, lies in the center
        work.remove(partner)
        v = _scale(partner, 1 / B(u, partner))
        us.append(u)
        vs.append(v)
        # w ← w − B(w,v)·u + B(w,u)·v
        work = [la.add_scaled(la.add_scaled(w, u, -B(w, v)), v, B(w, u)) for w in work]
    return us, vs


def _orthogonal_basis(B, vectors):
    """Congruence diagonalisation of a symmetric form: (vector, B(w,w)) pairs."""
    work = list(vectors)
    out = []
    while work:
        pivot = next((w for w in work if B(w, w) != 0), None)
        if pivot is None:
            # all diagonal values vanish: B(a+b, a+b) = 2B(a,b)
            pair = next(
                ((a, b) for s, a in enumerate(work) for b in work[s + 1:] if B(a, b) != 0),
                None,
            )
            if pair is None:
                break
            work.remove(pair[0])
            pivot = la.add_scaled(pair[0], pair[1], la.ONE)
        else:
            work.remove(pivot)
        d = B(pivot, pivot)
        out.append((pivot, d))
        work = [la.add_scaled(w, pivot, -B(w, pivot) / d) for w in work]
        work = [w for w in work if not la.is_zero_vector(w)]
    return out


# ── Recognizer ────────────────────────────────────────────────────────────────


def recognize_derived_dim_one(L):
    if nilpotency_class(L) is None:
        raise NotNilpotent("Recognizer needs a nilpotent superalgebra")
    derived = derived_subalgebra(L)
    if derived.dim.total != 1:
        raise DerivedDimNotOne(f"Derived subalgebra has dimension {derived.dim}, expected 1")
    z = derived.space.basis[0]
    z_pivot = derived.space.pivot_cols[0]
    B = _form(L, z_pivot)
    Z = center(L).space
    k, l = L.dim.even, L.dim.odd
    evens, odds = _block_units(L, Parity.EVEN), _block_units(L, Parity.ODD)

    if derived.dim.even == 1:
        two_m = _gram_rank(_gram(B, evens, evens), len(evens))
        n = _gram_rank(_gram(B, odds, odds), len(odds))
        report = dict(center_parity=Parity.EVEN, m=two_m // 2, n=n,
                      abelian=GradedDim(k - two_m - 1, l - n))
        basis, omitted = _even_basis(L, B, z, Z, two_m // 2)
    else:
        m = _gram_rank(_gram(B, evens, odds), len(odds))
        report = dict(center_parity=Parity.ODD, m=m, n=0, abelian=GradedDim(k - m, l - m - 1))
        basis, omitted = _odd_basis(L, B, z, Z)
    _logger.debug(f"recognize_derived_dim_one: {report}")
    return DecompositionReport(basis=basis, basis_omitted=omitted, **report)


def _abelian_part(L, z, Z, parity):
    """Complement of span{z} inside Z(L), one parity block."""
    base = la.span([z], L.dim_total)
    rows = [r for r in Z.basis if L.parity_of_vector(r) == parity]
    return la.extend_to_basis(base, rows)


def _even_basis(L, B, z, Z, m):
    W0 = _complement(L, Z, Parity.EVEN)
    W1 = _complement(L, Z, Parity.ODD)
    us, vs = _symplectic_basis(B, W0)
    diag = _orthogonal_basis(B, W1)
    scale = diag[0][1] if diag else la.ONE
    ys = []
    for w, d in diag:
        root = _rational_sqrt(d / scale)
        if root is None:
            _logger.info("Recognizer: odd form needs irrational scaling, basis omitted")
            return None, IRRATIONAL_SCALING
        ys.append(_scale(w, 1 / root))
    # [u_i, v_i] = z = z'/scale, so v_i absorbs the scale
    vs = [_scale(v, scale) for v in vs]
    z_new = _scale(z, scale)
    basis = [(f"x{i + 1}", u) for i, u in enumerate(us)]
    basis += [(f"x{m + i + 1}", v) for i, v in enumerate(vs)]
    basis += [("z", z_new)]
    basis += [(f"a{i + 1}", a) for i, a in enumerate(_abelian_part(L, z, Z, Parity.EVEN))]
    basis += [(f"y{j + 1}", y) for j, y in enumerate(ys)]
    basis += [(f"b{j + 1}", b) for j, b in enumerate(_abelian_part(L, z, Z, Parity.ODD))]
    return tuple(basis), None


def _odd_basis(L, B, z, Z):
    W0 = _complement(L, Z, Parity.EVEN)
    W1 = _complement(L, Z, Parity.ODD)
    m = len(W0)
    ys = []
    if m:
        gram = la.matrix(_gram(B, W0, W1), m)
        inv = la.inverse(gram).to_list()
        # y_j = Σ_k w1_k · inv[k][j]  ⇒  B(x_i, y_j) = δ_ij
        for j in range(m):
            y = la.zero_vector(L.dim_total)
            for kk in range(m):
                y = la.add_scaled(y, W1[kk], inv[kk][j])
            ys.append(y)
    basis = [(f"x{i + 1}", x) for i, x in enumerate(W0)]
    basis += [(f"a{i + 1}", a) for i, a in enumerate(_abelian_part(L, z, Z, Parity.EVEN))]
    basis += [(f"y{j + 1}", y) for j, y in enumerate(ys)]
    basis += [("z", z)]
    basis += [(f"b{j + 1}", b) for j, b in enumerate(_abelian_part(L, z, Z, Parity.ODD))]
    return tuple(basis), None
