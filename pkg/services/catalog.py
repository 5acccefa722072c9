# -*- coding: utf-8 -*-
"""
Algebra Catalog
===============
Constructors for the named families and the auxiliary test families.

  - abelian(m, n)             → A(m|n)
  - heisenberg_even(m, n)     → H(m,n), even center z
  - heisenberg_odd(m)         → H_m, odd center z
  - gh_rank2(kind, params)    → direct sums of two Heisenbergs (rank 2)
  - free_nilpotent2_quotient  → seeded quotients of the free class-2 superalgebra
  - specimens(max_total_dim)  → the CatalogKey sweep used by verification
"""

import logging
from itertools import combinations, combinations_with_replacement

import numpy as np

from ..exceptions import EmptyHeisenberg, InvalidParams
from ..models.catalog_key import CatalogKey
from ..models.graded import GradedDim, Parity
from ..models.superalgebra import LieSuperAlgebra, direct_sum
from . import exact_linalg as la

_logger = logging.getLogger(__name__)

# ── Configuration ─────────────────────────────────────────────────────────────

F2_MAX_DRAWS = 64
F2_ENTRY_RANGE = (-3, 4)  # numpy integers(low, high) → entries in [-3, 3]

GH_RANK2_ARITY = {"even": 4, "mixed": 3, "odd": 2}

E, O = Parity.EVEN, Parity.ODD


def _check_counts(*values):
    for v in values:
        if not isinstance(v, (int, np.integer)) or v < 0:
            raise InvalidParams(f"Parameters must be non-negative integers, got {values}")


# ── Named families ────────────────────────────────────────────────────────────


def abelian(m, n):
    _check_counts(m, n)
    basis = [(f"a{i + 1}", E) for i in range(m)] + [(f"b{j + 1}", O) for j in range(n)]
    return LieSuperAlgebra.build(basis)


def heisenberg_even(m, n):
    """[x_i, x_{m+i}] = z, [y_j, y_j] = z; basis x1..x2m, z, y1..yn."""
    _check_counts(m, n)
    if m + n == 0:
        raise EmptyHeisenberg("H(0,0) is not a Heisenberg superalgebra")
    basis = [(f"x{i + 1}", E) for i in range(2 * m)] + [("z", E)]
    basis += [(f"y{j + 1}", O) for j in range(n)]
    z = 2 * m
    brackets = {(i, m + i): {z: 1} for i in range(m)}
    brackets.update({(z + 1 + j, z + 1 + j): {z: 1} for j in range(n)})
    return LieSuperAlgebra.build(basis, brackets)


def heisenberg_odd(m):
    """[x_j, y_j] = z with z odd; basis x1..xm, y1..ym, z."""
    _check_counts(m)
    if m < 1:
        raise InvalidParams("Hodd(m) needs m ≥ 1")
    basis = [(f"x{j + 1}", E) for j in range(m)] + [(f"y{j + 1}", O) for j in range(m)]
    basis += [("z", O)]
    z = 2 * m
    return LieSuperAlgebra.build(basis, {(j, m + j): {z: 1} for j in range(m)})


def gh_rank2(kind, params):
    """even: H(a,b)⊕H(c,d); mixed: H(a,b)⊕H_c; odd: H_a⊕H_b."""
    params = list(params)
    if kind not in GH_RANK2_ARITY:
        raise InvalidParams(f"Unknown rank-2 kind {kind!r}")
    if len(params) != GH_RANK2_ARITY[kind]:
        raise InvalidParams(f"gh_rank2({kind}) takes {GH_RANK2_ARITY[kind]} parameters")
    _check_counts(*params)
    try:
        if kind == "even":
            a, b, c, d = params
            return direct_sum(heisenberg_even(a, b), heisenberg_even(c, d))
        if kind == "mixed":
            a, b, c = params
            return direct_sum(heisenberg_even(a, b), heisenberg_odd(c))
        a, b = params
        return direct_sum(heisenberg_odd(a), heisenberg_odd(b))
    except EmptyHeisenberg as e:
        raise InvalidParams(str(e)) from e


# ── Free class-2 quotients ────────────────────────────────────────────────────


def free_center_dims(p, q):
    """Degree-2 part of the free class-2 superalgebra on (p|q) generators."""
    return GradedDim(p * (p - 1) // 2 + q * (q + 1) // 2, p * q)


def _free_pairs(p, q):
    """Index pairs (i ≤ j) of generators spanning the even and odd degree-2 parts."""
    even = list(combinations(range(p), 2))
    even += list(combinations_with_replacement(range(p, p + q), 2))
    odd = [(i, j) for i in range(p) for j in range(p, p + q)]
    return even, odd


def _draw_projection(rng, rows, cols):
    """Random integer matrix of full row rank (rows ≤ cols)."""
    if rows == 0:
        return np.zeros((0, cols), dtype=np.int64)
    for attempt in range(F2_MAX_DRAWS):
        draw = rng.integers(*F2_ENTRY_RANGE, size=(rows, cols))
        if la.rank(la.matrix(draw.tolist(), cols)) == rows:
            return draw
        _logger.debug(f"F2 projection draw {attempt} rank-deficient, redrawing")
    raise InvalidParams(f"Could not draw a rank-{rows} projection in {F2_MAX_DRAWS} attempts")


def free_nilpotent2_quotient(p, q, kept, seed):
    """
    Free 2-step nilpotent superalgebra on x1..xp (even), y1..yq (odd) with its
    degree-2 part projected onto `kept` central directions z1.. (even) and
    u1.. (odd). The projection is a pure function of (p, q, kept, seed).
    """
    _check_counts(p, q, kept.even, kept.odd, seed)
    if p + q == 0:
        raise InvalidParams("F2 needs at least one generator")
    available = free_center_dims(p, q)
    if not kept <= available:
        raise InvalidParams(f"Cannot keep {kept} central directions out of {available}")

    rng = np.random.default_rng([p, q, kept.even, kept.odd, seed])
    even_pairs, odd_pairs = _free_pairs(p, q)
    r_even = _draw_projection(rng, kept.even, len(even_pairs))
    r_odd = _draw_projection(rng, kept.odd, len(odd_pairs))

    # basis: x.., z.. (even) then y.., u.. (odd)
    x_idx = list(range(p))
    z_idx = list(range(p, p + kept.even))
    y_idx = list(range(p + kept.even, p + kept.even + q))
    u_idx = list(range(p + kept.even + q, p + kept.even + q + kept.odd))
    basis = [(f"x{i + 1}", E) for i in range(p)] + [(f"z{k + 1}", E) for k in range(kept.even)]
    basis += [(f"y{j + 1}", O) for j in range(q)] + [(f"u{k + 1}", O) for k in range(kept.odd)]

    def generator(g):
        return x_idx[g] if g < p else y_idx[g - p]

    brackets = {}
    for col, (i, j) in enumerate(even_pairs):
        terms = {z_idx[k]: int(r_even[k, col]) for k in range(kept.even) if r_even[k, col]}
        if terms:
            brackets[(generator(i), generator(j))] = terms
    for col, (i, j) in enumerate(odd_pairs):
        terms = {u_idx[k]: int(r_odd[k, col]) for k in range(kept.odd) if r_odd[k, col]}
        if terms:
            brackets[(generator(i), generator(j))] = terms
    return LieSuperAlgebra.build(basis, brackets)


# ── Verification sweep ────────────────────────────────────────────────────────


def _abelian_pairs(total):
    """(k, l) with k + l = total."""
    return [(k, total - k) for k in range(total, -1, -1)]


def specimens(max_total_dim, seed):
    """
    Every catalog specimen with total dimension ≤ max_total_dim:
    abelians, rank-1 Heisenbergs, Heisenberg ⊕ abelian, rank-2 direct sums and
    F2 quotients keeping a 2-dimensional center.
    """
    keys = []
    N = max_total_dim
    for total in range(1, N + 1):
        keys += [CatalogKey.abelian(k, l) for k, l in _abelian_pairs(total)]

    rank_one = []
    for m in range(0, N):
        for n in range(0, N):
            if m + n >= 1 and 2 * m + 1 + n <= N:
                rank_one.append((CatalogKey.heisenberg_even(m, n), 2 * m + 1 + n))
    for m in range(1, N):
        if 2 * m + 1 <= N:
            rank_one.append((CatalogKey.heisenberg_odd(m), 2 * m + 1))

    for key, size in rank_one:
        keys.append(key)
        for total in range(1, N - size + 1):
            for k, l in _abelian_pairs(total):
                keys.append(CatalogKey.sum(key, CatalogKey.abelian(k, l)))

    for a, (left, lsize) in enumerate(rank_one):
        for right, rsize in rank_one[a:]:
            if lsize + rsize <= N:
                keys.append(CatalogKey.sum(left, right))

    for p in range(0, N + 1):
        for q in range(0, N + 1 - p):
            if p + q < 2:
                continue
            available = free_center_dims(p, q)
            for r, s in ((2, 0), (1, 1), (0, 2)):
                if p + q + r + s <= N and GradedDim(r, s) <= available:
                    keys.append(CatalogKey.free_quotient(p, q, GradedDim(r, s), seed))
    _logger.info(f"Catalog sweep up to total dim {N}: {len(keys)} specimens")
    return keys
