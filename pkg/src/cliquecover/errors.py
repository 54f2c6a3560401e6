"""Exception classes shared across the package."""


class CliqueCoverError(Exception):
    """Base class for all package errors."""


class ParameterError(CliqueCoverError, ValueError):
    """A parameter is outside its documented domain (k < 2, n < 0, ...)."""


class InvalidEdgeError(CliqueCoverError, ValueError):
    """An edge argument does not exist in the graph it was given with."""


class UnsupportedSizeError(CliqueCoverError, ValueError):
    """The graph is too large for a brute-force operation (canonical forms
    cap at n = 10, graph6 short form at n = 62)."""


class GraphParseError(CliqueCoverError, ValueError):
    """Malformed graph input.  ``offset`` is the byte offset of the
    problem when known, else None."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class HypertreeSpecError(CliqueCoverError, ValueError):
    """A block-gluing spec violates the linear-hypertree rules."""


class NoSuchGraphError(CliqueCoverError, ValueError):
    """No graph with the requested property exists at this size
    (e.g. a connected graph where every edge is in a K_k needs n >= k)."""


class PreconditionError(CliqueCoverError, ValueError):
    """A documented precondition failed.  ``name`` identifies which one."""

    def __init__(self, name, message=None):
        super().__init__(message or name)
        self.name = name


class TheoremViolationError(CliqueCoverError):
    """A verified mathematical conclusion failed on a concrete input.

    This is never swallowed: a genuine instance would falsify one of the
    results this package checks, which is the most valuable output the
    code could produce.
    """


class SearchCapExceededError(CliqueCoverError):
    """An exhaustive search or enumeration hit its hard cap.  ``count``
    carries the partial tally when one is available."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count
