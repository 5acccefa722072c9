# -*- coding: utf-8 -*-
"""
Supertensor Exceptions
======================
Every error raised on purpose by the library derives from SuperTensorError,
so callers (the CLI in particular) can catch one type and report it.

  - UserError      → bad input supplied by the caller (parse errors, params)
  - ValidationError → a structure failed a mathematical precondition
"""


class SuperTensorError(Exception):
    """Base class for all library errors."""


class UserError(SuperTensorError):
    """The caller supplied something the library cannot work with."""


class ValidationError(SuperTensorError):
    """A structure does not satisfy a required precondition."""


# ── Input errors ──────────────────────────────────────────────────────────────


class ParseError(UserError):
    pass


class InvalidParams(UserError):
    pass


class EmptyHeisenberg(InvalidParams):
    pass


class CaseUndefined(UserError):
    """No closed form exists for the requested parameters."""


# ── Structural errors ─────────────────────────────────────────────────────────


class InvalidAlgebra(ValidationError):
    pass


class AxiomViolation(ValidationError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"Axioms violated: {report.summary()}")


class NotAnIdeal(ValidationError):
    pass


class SubspaceNotContained(ValidationError):
    pass


class ClassTooHigh(ValidationError):
    pass


class NotNilpotent(ValidationError):
    pass


class DerivedDimNotOne(ValidationError):
    pass


class AbelianInput(ValidationError):
    pass


class NegativeDim(ValidationError):
    """Internal inconsistency: a graded dimension went below zero."""
