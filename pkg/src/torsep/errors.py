"""Exception hierarchy shared by all torsep modules."""


class TorsepError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TorsepError):
    """Malformed input: bad dimensions, non-integer entries, parse failures."""


class HypothesisError(TorsepError):
    """A decision procedure's hypothesis is not satisfied by the input.

    The offending check is reported, never silently guessed around.
    """


class ResourceGuardError(TorsepError):
    """An enumeration guard (subset scan, lattice-point box) was exceeded."""


class CrossCheckError(TorsepError):
    """Two independent decision routes disagree.  Always a hard error."""


class InternalError(TorsepError):
    """A computed certificate failed its own exactness check."""
