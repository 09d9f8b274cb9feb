"""Exception types shared across the package."""


class FacultasError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FacultasError):
    """Raised when an external record cannot be turned into a domain object.

    Carries the full list of problems so callers can show them all at once.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(str(p) for p in self.problems))


class SchemaMismatch(FacultasError):
    """Raised when a dataset was parsed against a different faculty schema."""
