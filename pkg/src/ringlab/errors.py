"""Error types shared across the package.

Every error carries a stable machine-readable ``code`` plus optional
structured details (axiom name, witness, source position) so the service
and CLI can surface them uniformly.
"""

from __future__ import annotations


class RinglabError(Exception):
    code = "ERROR"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def payload(self) -> dict:
        out = {"code": self.code, "message": self.message}
        for key in sorted(self.details):
            out[key] = self.details[key]
        return out


class InvalidModulus(RinglabError):
    code = "INVALID_MODULUS"


class EmptyProduct(RinglabError):
    code = "EMPTY_PRODUCT"


class NonMonicPoly(RinglabError):
    code = "NON_MONIC_POLY"


class DegeneratePoly(RinglabError):
    code = "DEGENERATE_POLY"


class QuotientBase(RinglabError):
    code = "QUOTIENT_BASE"


class AxiomViolation(RinglabError):
    code = "AXIOM_VIOLATION"

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message, axiom=axiom, witness=list(witness))
        self.axiom = axiom
        self.witness = tuple(witness)


class TrivialRing(RinglabError):
    code = "TRIVIAL_RING"


class MixedRings(RinglabError):
    code = "MIXED_RINGS"


class IdealLimitExceeded(RinglabError):
    code = "IDEAL_LIMIT_EXCEEDED"


class FamilyMismatch(RinglabError):
    code = "FAMILY_MISMATCH"


class NotAPartialOrder(RinglabError):
    code = "NOT_A_PARTIAL_ORDER"


class LatticeIncomplete(RinglabError):
    code = "LATTICE_INCOMPLETE"


class NotDistributive(RinglabError):
    code = "NOT_DISTRIBUTIVE"


class NTooLarge(RinglabError):
    code = "N_TOO_LARGE"


class UnknownClaim(RinglabError):
    code = "UNKNOWN_CLAIM"


class DslSyntaxError(RinglabError):
    code = "SYNTAX_ERROR"

    def __init__(self, line: int, column: int, expected: str, message: str | None = None):
        super().__init__(
            message or f"line {line}, column {column}: expected {expected}",
            line=line,
            column=column,
            expected=expected,
        )
        self.line = line
        self.column = column
        self.expected = expected


class UndefinedName(RinglabError):
    code = "UNDEFINED_NAME"


class DuplicateName(RinglabError):
    code = "DUPLICATE_NAME"
