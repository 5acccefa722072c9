# -*- coding: utf-8 -*-
"""
Verification Service
====================
Sweeps catalog specimens, runs every constructive product and compares it
with every closed form that applies.

  - internal consistency (⊗² = ∧² ⊕ □, □ = Γ(L/L²), ∧² = M ⊕ L², ⊗³ = ⊗² ⊗ L/L²)
  - family closed forms (abelian, H(m,n), H_m, abelian pairs)
  - normal-form checks for one-dimensional derived subalgebras
  - direct-sum formulas
  - rank-2 generalized Heisenberg theorems, case chosen by the constructive Z^∧
  - the ⊗³ bound

Per-specimen work runs in a process pool unless supertensor.no_parallel is set.
Records come back sorted by (algebra, quantity, source).
"""

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..config import get_param
from ..exceptions import CaseUndefined, InvalidParams, SuperTensorError
from ..models.graded import GradedDim, Parity
from ..models.superalgebra import (
    derived_subalgebra,
    center,
    generalized_heisenberg_rank,
    nilpotency_class,
)
from ..models.verification_record import VerificationRecord, bound_as_dim, compare
from . import catalog, formulas
from .formulas import Rank2Case
from .recognizer import recognize_derived_dim_one
from .tensor_homology import (
    bound_check,
    decomposition_check,
    exterior_center,
    exterior_square,
    gamma_dim,
    pair_exterior_abelian,
    square_dim,
    tensor_square,
)

_logger = logging.getLogger(__name__)


# ── Constructive side ─────────────────────────────────────────────────────────


@dataclass
class Constructive:
    """Every constructive quantity of one class-≤2 algebra, computed once."""

    algebra: object
    tensor: object
    exterior: object
    tensor2: GradedDim
    ext2: GradedDim
    square: GradedDim
    derived: GradedDim
    abelianization: GradedDim
    gamma: GradedDim
    tensor3: GradedDim
    multiplier: GradedDim
    extcenter: object

    @classmethod
    def of(cls, L):
        tensor = tensor_square(L)
        exterior = exterior_square(L)
        derived = derived_subalgebra(L).dim
        ab = L.dim - derived
        t2 = tensor.quotient_dim
        e2 = exterior.quotient_dim
        return cls(
            algebra=L,
            tensor=tensor,
            exterior=exterior,
            tensor2=t2,
            ext2=e2,
            square=square_dim(L, tensor),
            derived=derived,
            abelianization=ab,
            gamma=gamma_dim(ab.even, ab.odd),
            tensor3=t2 * ab,
            multiplier=e2 - derived,
            extcenter=exterior_center(L, exterior),
        )


def _safe(func, *args):
    """Closed form value, or None where the formula is undefined."""
    try:
        return func(*args)
    except CaseUndefined:
        return None


def _printed_and_reduction(name, quantity, constructive, printed, reduction, detail=""):
    """
    Printed closed form vs constructive; a disagreement explained by the
    reduction form is an erratum, not a mismatch.
    """
    status = compare(constructive, printed)
    note = detail
    if status == "mismatch" and reduction is not None and constructive == reduction:
        status = "erratum"
        note = f"{detail}; reduction form gives {reduction}".lstrip("; ")
        _logger.info(f"{name} {quantity}: printed {printed} vs constructive {constructive} (erratum)")
    records = [VerificationRecord(name, quantity, "printed", constructive, printed, status, "eq", note)]
    if reduction is not None:
        records.append(VerificationRecord.compared(name, quantity, constructive, reduction,
                                                   source="reduction", detail=detail))
    return records


# ── Record groups ─────────────────────────────────────────────────────────────


def _internal_records(name, c):
    decomposed = decomposition_check(c.algebra, c.tensor, c.exterior)
    t2_split = VerificationRecord.compared(
        name, "tensor2=ext2+square", c.tensor2, c.ext2 + c.square, source="internal",
    )
    if not decomposed and t2_split.status == "match":
        t2_split = VerificationRecord(name, t2_split.quantity, "internal", c.tensor2, c.ext2 + c.square,
                                      "mismatch", "eq", "square submodule meets the ∧² complement")
    return [
        t2_split,
        VerificationRecord.compared(name, "square=gamma(L/L2)", c.square, c.gamma, source="internal"),
        VerificationRecord.compared(name, "ext2=multiplier+derived", c.ext2, c.multiplier + c.derived,
                                    source="internal"),
        VerificationRecord.compared(name, "tensor3=tensor2*ab", c.tensor3,
                                    formulas.triple_tensor_from_square(c.tensor2, c.abelianization),
                                    source="internal"),
        VerificationRecord.compared(name, "gamma", c.gamma,
                                    formulas.gamma_dim_formula(*c.abelianization.as_tuple())),
    ]


def _abelian_records(name, c, p, q):
    records = [
        VerificationRecord.compared(name, "tensor2", c.tensor2, formulas.tensor2_abelian(p, q)),
        VerificationRecord.compared(name, "ext2", c.ext2, formulas.multiplier_abelian(p, q)),
        VerificationRecord.compared(name, "multiplier", c.multiplier, formulas.multiplier_abelian(p, q)),
        VerificationRecord.compared(name, "square", c.square, formulas.gamma_dim_formula(p, q)),
    ]
    for k in range(p + 1):
        for h in range(q + 1):
            constructive = pair_exterior_abelian(p, q, k, h).quotient_dim
            records.append(VerificationRecord.compared(
                name, f"pair_multiplier({k}|{h})", constructive,
                formulas.multiplier_pair_abelian(p, q, k, h),
            ))
    return records


def _heisenberg_even_records(name, c, m, n):
    hab = GradedDim(2 * m, n)
    records = [
        VerificationRecord.compared(name, "tensor2", c.tensor2, formulas.tensor2_heisenberg_even(m, n)),
        VerificationRecord.compared(name, "ext2", c.ext2, formulas.ext2_heisenberg_even(m, n)),
        VerificationRecord.compared(name, "multiplier", c.multiplier, formulas.multiplier_heisenberg_even(m, n)),
    ]
    records += _printed_and_reduction(
        name, "tensor3", c.tensor3, formulas.triple_tensor_heisenberg_even(m, n),
        formulas.triple_tensor_from_square(formulas.tensor2_heisenberg_even(m, n), hab),
    )
    records.append(_ext3_record(name, formulas.triple_ext_heisenberg_even, m, n))
    return records


def _heisenberg_odd_records(name, c, m):
    records = [
        VerificationRecord.compared(name, "tensor2", c.tensor2, formulas.tensor2_heisenberg_odd(m)),
        VerificationRecord.compared(name, "ext2", c.ext2, formulas.ext2_heisenberg_odd(m)),
        VerificationRecord.compared(name, "multiplier", c.multiplier, formulas.multiplier_heisenberg_odd(m)),
    ]
    records += _printed_and_reduction(
        name, "tensor3", c.tensor3, formulas.triple_tensor_heisenberg_odd(m),
        formulas.triple_tensor_from_square(formulas.tensor2_heisenberg_odd(m), GradedDim(m, m)),
    )
    records.append(_ext3_record(name, formulas.triple_ext_heisenberg_odd, m))
    return records


def _ext3_record(name, func, *params):
    value = _safe(func, *params)
    if value is None:
        return VerificationRecord(name, "ext3", "printed", None, None, "untested_case", "eq",
                                  "closed form negative or undefined here")
    return VerificationRecord.compared(name, "ext3", None, value)


def _normal_form_records(name, c):
    """Closed forms evaluated on the recognized H ⊕ A decomposition."""
    shape = recognize_derived_dim_one(c.algebra)
    ab = shape.abelian
    if shape.center_parity == Parity.EVEN:
        m, n = shape.m, shape.n
        hab = GradedDim(2 * m, n)
        mh = formulas.multiplier_heisenberg_even(m, n)
        th = formulas.tensor2_heisenberg_even(m, n)
    else:
        m = shape.m
        hab = GradedDim(m, m)
        mh = formulas.multiplier_heisenberg_odd(m)
        th = formulas.tensor2_heisenberg_odd(m)
    predicted_zw = GradedDim(0, 0) if shape.capable else c.derived
    detail = f"{shape.heisenberg_label} + A{ab}"
    return [
        VerificationRecord.compared(name, "extcenter[normal_form]", c.extcenter.dim, predicted_zw, detail=detail),
        VerificationRecord.compared(
            name, "multiplier[normal_form]", c.multiplier,
            formulas.multiplier_direct_sum(mh, formulas.multiplier_abelian(ab.even, ab.odd), hab, ab),
            detail=detail,
        ),
        VerificationRecord.compared(
            name, "tensor2[normal_form]", c.tensor2,
            formulas.tensor2_direct_sum(th, formulas.tensor2_abelian(ab.even, ab.odd), hab, ab),
            detail=detail,
        ),
    ]


def _direct_sum_records(name, c, key):
    if key.family != "direct_sum_expr" or len(key.summands) != 2:
        return []
    parts = [Constructive.of(s.build()) for s in key.summands]
    left, right = parts
    return [
        VerificationRecord.compared(
            name, "multiplier[direct_sum]", c.multiplier,
            formulas.multiplier_direct_sum(left.multiplier, right.multiplier,
                                           left.abelianization, right.abelianization),
        ),
        VerificationRecord.compared(
            name, "tensor2[direct_sum]", c.tensor2,
            formulas.tensor2_direct_sum(left.tensor2, right.tensor2,
                                        left.abelianization, right.abelianization),
            source="reduction",
        ),
    ]


def rank2_case(L, extcenter):
    """Theorem case from the constructive Z^∧, or None when no printed case applies."""
    derived = derived_subalgebra(L)
    if extcenter.is_zero():
        return None
    if extcenter.space == derived.space:
        return Rank2Case.Z_EQ_H2
    if extcenter.dim == GradedDim(1, 0):
        return Rank2Case.K_EVEN
    if extcenter.dim == GradedDim(0, 1):
        return Rank2Case.K_ODD
    return None


def _rank2_records(name, c, rank):
    L = c.algebra
    case = rank2_case(L, c.extcenter)
    if case is None:
        reason = "capable" if c.extcenter.is_zero() else f"Z^∧ = {c.extcenter.dim}"
        return [VerificationRecord(name, "rank2_case", "printed", None, None, "untested_case", "eq",
                                   f"theorem inapplicable: {reason}")]
    m, n = L.dim.as_tuple()
    detail = f"case {case.value}, H² = {rank}"
    reduction = _safe(formulas.rank2_reduction, case, rank, m, n)
    records = []
    for quantity, printed_fn, constructive in (
        ("multiplier[rank2]", formulas.multiplier_gh_rank2, c.multiplier),
        ("ext2[rank2]", formulas.ext2_gh_rank2, c.ext2),
        ("tensor2[rank2]", formulas.tensor2_gh_rank2, c.tensor2),
        ("tensor3[rank2]", formulas.tensor3_gh_rank2, c.tensor3),
    ):
        printed = _safe(printed_fn, case, rank, m, n)
        attr = quantity.split("[")[0]
        reduced = getattr(reduction, attr) if reduction is not None else None
        if printed is None and reduced is None:
            records.append(VerificationRecord(name, quantity, "printed", constructive, None,
                                              "constructive_only", "eq", f"{detail}; outside the printed domain"))
            continue
        records += _printed_and_reduction(name, quantity, constructive, printed, reduced, detail)
    ext3 = _safe(formulas.ext3_gh_rank2, case, rank, m, n)
    records.append(VerificationRecord(name, "ext3[rank2]", "printed", None, ext3,
                                      "formula_only" if ext3 is not None else "untested_case", "eq", detail))
    return records


def _bound_record(name, c):
    report = bound_check(c.algebra, c.tensor)
    if report.expected_equality is True:
        relation = "eq"
    elif report.expected_equality is False:
        relation = "total_lt"
    else:
        relation = "total_le"
    return VerificationRecord.compared(
        name, "bound", bound_as_dim(report.lhs), bound_as_dim(report.rhs), source="internal",
        relation=relation, detail=f"lhs={report.lhs} rhs={report.rhs} equality={report.equality}",
    )


# ── Driver ────────────────────────────────────────────────────────────────────


def verify_specimen(key):
    name = str(key)
    try:
        L = key.build()
        cls = nilpotency_class(L)
        if cls is None or cls > 2:
            return [VerificationRecord(name, "class", "internal", None, None, "untested_case", "eq",
                                       "constructive products need class ≤ 2")]
        c = Constructive.of(L)
        records = _internal_records(name, c)
        family, params = key.family, key.params
        if family == "abelian":
            records += _abelian_records(name, c, *params)
        elif family == "heisenberg_even":
            records += _heisenberg_even_records(name, c, *params)
        elif family == "heisenberg_odd":
            records += _heisenberg_odd_records(name, c, *params)
        if c.derived.total == 1:
            records += _normal_form_records(name, c)
        records += _direct_sum_records(name, c, key)
        rank = generalized_heisenberg_rank(L)
        if rank is not None and rank.total == 2:
            records += _rank2_records(name, c, rank)
        elif family == "free_nilpotent2_quotient":
            records.append(VerificationRecord(name, "rank2_case", "internal", None, None, "untested_case", "eq",
                                              f"rejected: not generalized Heisenberg (center {center(L).dim})"))
        if not c.derived.is_zero():
            records.append(_bound_record(name, c))
    except SuperTensorError as e:
        _logger.error(f"Verification of {name} failed: {e}")
        return [VerificationRecord(name, "error", "internal", None, None, "mismatch", "eq", str(e))]
    return records


def _worker_count():
    workers = int(get_param("supertensor.workers") or 0)
    return workers if workers > 0 else (os.cpu_count() or 1)


def verify_specimens(keys):
    keys = list(keys)
    workers = _worker_count()
    if get_param("supertensor.no_parallel") or workers == 1 or len(keys) < 2:
        results = [verify_specimen(k) for k in keys]
    else:
        _logger.info(f"Verifying {len(keys)} specimens on {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(verify_specimen, keys, chunksize=4))
    records = [r for batch in results for r in batch]
    records.sort(key=lambda r: r.sort_key)
    counts = status_counts(records)
    if counts.get("mismatch"):
        _logger.warning(f"Verification found {counts['mismatch']} mismatch records")
    return records


def verify_paper(max_total_dim, seed=None):
    if max_total_dim < 2:
        raise InvalidParams("verify needs max_total_dim ≥ 2")
    if seed is None:
        seed = int(get_param("supertensor.seed"))
    return verify_specimens(catalog.specimens(max_total_dim, seed))


def status_counts(records):
    return Counter(r.status for r in records)


def passed(records):
    return not any(r.status == "mismatch" for r in records)
