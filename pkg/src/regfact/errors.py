"""Exception taxonomy for the whole package.

Every error type carries a short ``hint`` explaining which mathematical
requirement was violated; the CLI prints it next to the error name.
"""

from __future__ import annotations


class RegfactError(Exception):
    hint = ""


class EncodingError(RegfactError):
    """An element value is not in the canonical form of its group family."""

    hint = "elements must be passed in the canonical form of their group family"


class IndexOutOfRange(RegfactError):
    hint = "enumeration indices must be smaller than the group order"


class ParseError(RegfactError):
    """Rejected spec-language input, with the offending position."""

    hint = "see the mini-language grammar in the README"

    def __init__(self, text: str, position: int, message: str):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class SymmetryViolation(RegfactError):
    hint = "connection sets must be symmetric: x is a member iff -x is"


class InvolutionInU(RegfactError):
    """An involution turned up in a difference pool that must not contain any."""

    hint = "the base-factor construction needs an involution-free difference pool"

    def __init__(self, witness, encoded: str):
        super().__init__(f"involution {encoded} found in the difference pool")
        self.witness = witness


class GroupFinite(RegfactError):
    hint = "this construction is only available over infinite groups"


class SearchBudgetExceeded(RegfactError):
    hint = (
        "raise the scan budget (flag --budget or env REGFACT_BUDGET), or check that "
        "the difference pool really has the full cardinality of the group"
    )

    def __init__(self, limit: int, phase: str, detail: str = ""):
        msg = f"no candidate found within {limit} scanned elements ({phase})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.limit = limit
        self.phase = phase


class NotInU(RegfactError):
    hint = "only members of the involution-free difference pool can be demanded"


class DifferenceAbsent(RegfactError):
    hint = "call ensure_difference before edge_with_difference"


class NotAnEdge(RegfactError):
    hint = "two vertices are adjacent iff their difference lies in the connection set"


class InvalidFactorId(RegfactError):
    hint = "factor labels are involutions of S, translate elements, or lifted inner labels"


class UnsupportedByTheorem(RegfactError):
    hint = (
        "the non-involution part of the connection set must be empty or have the "
        "full cardinality of the group; anything in between is not constructible here"
    )


class ShapeMismatch(RegfactError):
    hint = "the inner factorization's group must match the expected product component"


class DivisibilityViolation(RegfactError):
    hint = (
        "inner part parameters must divide the outer ones "
        "(finite target: exact divisor; infinite target: at most countable)"
    )


class FinitenessViolation(RegfactError):
    hint = "the target complete equipartite graph must be infinite (m*n infinite)"


#: Errors that mean "the hypotheses of the construction are not met", as opposed
#: to malformed input or exhausted budgets. The CLI maps these to exit code 3.
THEOREM_VIOLATIONS = (
    UnsupportedByTheorem,
    DivisibilityViolation,
    InvolutionInU,
    FinitenessViolation,
    GroupFinite,
)
