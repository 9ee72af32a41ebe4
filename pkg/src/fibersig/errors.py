"""Exception types shared across the package."""


class FibersigError(Exception):
    """Base class for all package errors."""


class ParseError(FibersigError):
    """A text input could not be parsed.

    Carries the offending line number (1-based) when known.
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)


class ValidationError(FibersigError):
    """A structural invariant is violated.

    ``violations`` is a list of human-readable strings, one per violated
    constraint.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnknownFiberError(FibersigError):
    """A connected singular component matches no catalog graph.

    ``canonical_form`` holds the component's canonical form so the caller
    can inspect or report what was seen.
    """

    def __init__(self, message, canonical_form=None):
        self.canonical_form = canonical_form
        super().__init__(message)


class InconsistencyError(FibersigError):
    """An arithmetic identity that must hold for coherent input fails."""
