"""Exception hierarchy shared by the whole package."""


class ShannonError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraphError(ShannonError, ValueError):
    pass


class UnknownVertexError(ShannonError, KeyError):
    def __str__(self):
        return "unknown vertex: %r" % (self.args[0],) if self.args else "unknown vertex"


class BudgetExceeded(ShannonError):
    """A computation would exceed its configured size budget."""

    def __init__(self, what, budget):
        super().__init__("%s exceeded budget of %d" % (what, budget))
        self.what = what
        self.budget = budget


class NotAnEndomorphism(ShannonError, ValueError):
    pass


class ColoringError(ShannonError):
    """Random coloring could not be made locally injective."""


class TensorCollisionError(ColoringError):
    """Two adjacent product vertices received the same tensor value."""
