"""Exception hierarchy for severi-degrees.

The CLI maps these to exit codes (see ``severi.main.run``).
"""


class SeveriError(Exception):
    """Base class for every error raised by the package."""


class SurfaceMismatchError(SeveriError, ValueError):
    """Classes from different surfaces were combined, or a class is malformed."""


class ExcludedClassError(SeveriError, ValueError):
    """A class barred from the recursions (the negative curve E) was requested."""

    def __init__(self, divisor):
        self.divisor = divisor
        super().__init__(
            f"{divisor} is the exceptional curve class; it never carries a Severi degree "
            "and is barred from every decomposition sum"
        )


class MissingDegreeError(SeveriError, LookupError):
    """An N or N_i value is needed but cannot be resolved."""

    def __init__(self, divisor, i=1, reason=None):
        self.divisor = divisor
        self.i = i
        msg = f"no value for N_{i}({divisor})"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class IncompleteRecursionError(MissingDegreeError):
    """No complete recursion is known for the class and no value was supplied."""


class ConsistencyError(SeveriError, ArithmeticError):
    """An exactness guard failed (inexact division, non-integral value, negative count)."""


class TableConflictError(SeveriError, ValueError):
    """Two entries for the same key disagree."""

    def __init__(self, key, old, new):
        self.key = key
        super().__init__(f"conflicting values for {key}: {old} != {new}")


class MalformedRecordError(SeveriError, ValueError):
    """A store record could not be parsed or validated."""

    def __init__(self, line_number, detail):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {detail}")


class CheckFileError(SeveriError, ValueError):
    """A known-value check file is invalid."""
