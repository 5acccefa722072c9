# -*- coding: utf-8 -*-
"""
Verification Records
====================
One row of a verification sweep: a constructive value next to a closed form.
"""

from dataclasses import dataclass
from typing import Optional

from .graded import GradedDim

STATUS_LABELS = {
    "match": "Match",
    "mismatch": "Mismatch",
    "erratum": "Printed value differs, reduction form matches",
    "formula_only": "Closed form only",
    "constructive_only": "Constructive only",
    "untested_case": "Untested case",
}

SOURCES = ("printed", "reduction", "internal")
RELATIONS = ("eq", "total_le", "total_lt")


def compare(constructive, closed_form, relation="eq"):
    """Status for a pair of optional graded dims."""
    if constructive is None and closed_form is None:
        return "untested_case"
    if closed_form is None:
        return "constructive_only"
    if constructive is None:
        return "formula_only"
    if relation == "total_le":
        ok = constructive.total <= closed_form.total
    elif relation == "total_lt":
        ok = constructive.total < closed_form.total
    else:
        ok = constructive == closed_form
    return "match" if ok else "mismatch"


@dataclass(frozen=True)
class VerificationRecord:
    algebra: str
    quantity: str
    source: str = "printed"
    constructive: Optional[GradedDim] = None
    closed_form: Optional[GradedDim] = None
    status: str = "untested_case"
    relation: str = "eq"
    detail: str = ""

    @classmethod
    def compared(cls, algebra, quantity, constructive, closed_form, source="printed",
                 relation="eq", detail=""):
        return cls(algebra, quantity, source, constructive, closed_form,
                   compare(constructive, closed_form, relation), relation, detail)

    @property
    def sort_key(self):
        return (self.algebra, self.quantity, self.source)

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "quantity": self.quantity,
            "source": self.source,
            "constructive": str(self.constructive) if self.constructive is not None else "n/a",
            "closed_form": str(self.closed_form) if self.closed_form is not None else "untested",
            "status": self.status,
            "relation": self.relation,
            "detail": self.detail,
        }


def bound_as_dim(value):
    return GradedDim(value, 0)
