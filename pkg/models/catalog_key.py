# -*- coding: utf-8 -*-
"""
Catalog Keys
============
Hashable, picklable names for catalog algebras with a canonical text form:

    A(3|1)   H(1,0)   Hodd(2)   F2(3,0;2|0;seed=7)   H(1,0)+Hodd(1)

Rank-2 keys built by gh_rank2() print as the underlying direct sum.
"""

from dataclasses import dataclass

from ..exceptions import InvalidParams

FAMILIES = (
    "abelian",
    "heisenberg_even",
    "heisenberg_odd",
    "gh_rank2_even",
    "gh_rank2_mixed",
    "gh_rank2_odd",
    "free_nilpotent2_quotient",
    "direct_sum_expr",
)

FAMILY_ARITY = {
    "abelian": 2,
    "heisenberg_even": 2,
    "heisenberg_odd": 1,
    "gh_rank2_even": 4,
    "gh_rank2_mixed": 3,
    "gh_rank2_odd": 2,
    "free_nilpotent2_quotient": 5,  # p, q, r, s, seed
}


@dataclass(frozen=True)
class CatalogKey:
    family: str
    params: tuple = ()
    summands: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams(f"Unknown catalog family {self.family!r}")
        if self.family == "direct_sum_expr":
            if len(self.summands) < 2:
                raise InvalidParams("A direct sum needs at least two summands")
        elif len(self.params) != FAMILY_ARITY[self.family]:
            raise InvalidParams(
                f"{self.family} takes {FAMILY_ARITY[self.family]} parameters, got {len(self.params)}"
            )

    # ── Shorthand constructors ────────────────────────────────────────────────

    @classmethod
    def abelian(cls, m, n):
        return cls("abelian", (m, n))

    @classmethod
    def heisenberg_even(cls, m, n):
        return cls("heisenberg_even", (m, n))

    @classmethod
    def heisenberg_odd(cls, m):
        return cls("heisenberg_odd", (m,))

    @classmethod
    def free_quotient(cls, p, q, kept, seed):
        return cls("free_nilpotent2_quotient", (p, q, kept.even, kept.odd, seed))

    @classmethod
    def sum(cls, left, right):
        """Left-associative: (A + B) + C keeps a flat summand list."""
        parts = left.summands if left.family == "direct_sum_expr" else (left,)
        return cls("direct_sum_expr", (), parts + (right,))

    # ── Queries ───────────────────────────────────────────────────────────────

    def terms(self):
        """Flat list of non-sum keys; gh_rank2 keys expand into their Heisenbergs."""
        if self.family == "direct_sum_expr":
            out = []
            for s in self.summands:
                out += s.terms()
            return out
        p = self.params
        if self.family == "gh_rank2_even":
            return [CatalogKey.heisenberg_even(p[0], p[1]), CatalogKey.heisenberg_even(p[2], p[3])]
        if self.family == "gh_rank2_mixed":
            return [CatalogKey.heisenberg_even(p[0], p[1]), CatalogKey.heisenberg_odd(p[2])]
        if self.family == "gh_rank2_odd":
            return [CatalogKey.heisenberg_odd(p[0]), CatalogKey.heisenberg_odd(p[1])]
        return [self]

    def build(self):
        from ..services import catalog
        from ..models.graded import GradedDim
        from .superalgebra import direct_sum

        p = self.params
        if self.family == "abelian":
            return catalog.abelian(*p)
        if self.family == "heisenberg_even":
            return catalog.heisenberg_even(*p)
        if self.family == "heisenberg_odd":
            return catalog.heisenberg_odd(*p)
        if self.family.startswith("gh_rank2_"):
            return catalog.gh_rank2(self.family[len("gh_rank2_"):], p)
        if self.family == "free_nilpotent2_quotient":
            return catalog.free_nilpotent2_quotient(p[0], p[1], GradedDim(p[2], p[3]), p[4])
        algebra = self.summands[0].build()
        for s in self.summands[1:]:
            algebra = direct_sum(algebra, s.build())
        return algebra

    def __str__(self):
        p = self.params
        if self.family == "abelian":
            return f"A({p[0]}|{p[1]})"
        if self.family == "heisenberg_even":
            return f"H({p[0]},{p[1]})"
        if self.family == "heisenberg_odd":
            return f"Hodd({p[0]})"
        if self.family == "free_nilpotent2_quotient":
            return f"F2({p[0]},{p[1]};{p[2]}|{p[3]};seed={p[4]})"
        if self.family == "direct_sum_expr":
            return "+".join(str(s) for s in self.summands)
        return "+".join(str(t) for t in self.terms())
