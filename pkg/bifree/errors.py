# -*- coding: utf-8 -*-


class SccParseError(ValueError):
    """Raised when an scc2020 document cannot be read.

    Parameters
    ----------
    message : str
    lineno : int, optional (default: None)
        1-based line number of the offending line.

    """

    def __init__(self, message, lineno=None):
        self.message = message
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MissingHeaderError(SccParseError):
    pass


class ParameterCountError(SccParseError):
    pass


class OddCoordinateError(SccParseError):
    pass


class FacetIndexError(SccParseError):
    pass


class NumberFormatError(SccParseError):
    pass


class ValidationError(SccParseError):
    """Raised when a parsed document describes an invalid bifiltration.
    The full :class:`bifree.core.ValidationReport` is kept on
    ``report``.
    """

    def __init__(self, report, lineno=None):
        self.report = report
        first = report.violations[0]
        super().__init__(f"invalid bifiltration: {first}", lineno=lineno)


class EmptySupportError(ValueError):
    pass


class InvalidBifiltrationError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class ResolutionInvariantError(RuntimeError):
    pass
