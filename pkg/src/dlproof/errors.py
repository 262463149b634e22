"""Exception types shared across the package."""


class DlProofError(Exception):
    """Base class for all package errors."""


class ParseError(DlProofError):
    """Raised on malformed ontology text. Carries 1-based line/column."""

    def __init__(self, message, line, col, expected=None):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected or []


class DuplicateAxiomError(DlProofError):
    def __init__(self, axiom, line=None, col=None):
        loc = f" at {line}:{col}" if line is not None else ""
        super().__init__(f"duplicate axiom{loc}: {axiom}")
        self.axiom = axiom
        self.line = line
        self.col = col


class FragmentError(DlProofError):
    """Input ontology lies outside the fragment an operation supports."""


class NotEntailedError(DlProofError):
    """The requested goal does not follow from the ontology."""


class NotDerivableError(DlProofError):
    """Goal axiom is not reachable in the derivation structure."""


class ResourceExhaustedError(DlProofError):
    """Tableau node budget exceeded; distinct from a truth value."""


class BudgetExceededError(DlProofError):
    """Overall wall-clock budget for a proof search elapsed."""


class NoProofWithinBoundError(DlProofError):
    """Size-bounded proof search failed on every branch."""
