"""Exception hierarchy shared by every module."""


class MonoStabError(Exception):
    """Base class for all errors raised by monostab."""


class ArityError(MonoStabError, ValueError):
    """Monomials or ideals over different variable counts were combined."""


class ImproperIdealError(MonoStabError, ValueError):
    """The operation is undefined on the zero ideal or the unit ideal."""


class NotAssociatedError(MonoStabError, ValueError):
    """A v_p computation was requested for a prime that is not associated."""


class PreconditionError(MonoStabError, ValueError):
    pass


class ParameterError(MonoStabError, ValueError):
    """A family constructor received parameters outside its range."""


class CapacityError(MonoStabError):
    """A power exceeded the configured generator cap."""

    def __init__(self, k, count, cap):
        self.k = k
        self.count = count
        self.cap = cap
        super().__init__(
            f"I^{k} has {count} minimal generators, exceeding the cap of {cap}"
        )


class ParseError(MonoStabError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
