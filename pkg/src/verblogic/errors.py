"""Exception types shared across the knowledge-base engine."""


class VerbLogicError(Exception):
    """Base class for all errors raised by this package."""


# -- taxonomy ---------------------------------------------------------------

class SelfLoopError(VerbLogicError):
    """An edge was declared from a term to itself."""


class CycleError(VerbLogicError):
    """Adding an edge would make the specificity graph cyclic."""


class NoPathError(VerbLogicError):
    """The requested target is not reachable above the starting term."""


# -- statement --------------------------------------------------------------

class EmptyFrameError(VerbLogicError):
    """A statement needs at least an object or one place slot."""


# -- engine -----------------------------------------------------------------

class NegatedFactError(VerbLogicError):
    """Operation requires a positive (non-negated) fact."""


class PositiveFactError(VerbLogicError):
    """Operation requires a negated fact."""


# -- fuzzy ------------------------------------------------------------------

class RangeError(VerbLogicError):
    """A characteristic value fell outside [0, 1]."""


class NoIsomorphismError(VerbLogicError):
    """The verb has no declared noun class."""


class FrameMismatchError(VerbLogicError):
    """The noun does not fall under the verb's declared noun class."""


# -- dialogue ---------------------------------------------------------------

class FullySpecificError(VerbLogicError):
    """The targeted axis is already at the original fact's term."""


class AmbiguousSlotError(VerbLogicError):
    """A place question needs an explicit slot when several are occupied."""


class AxisEmptyError(VerbLogicError):
    """The targeted axis has no term in this statement."""


# -- dsl / repl -------------------------------------------------------------

class UnknownCommandError(VerbLogicError):
    """An interactive command line did not match any accepted form."""
