class FuzzySetError(ValueError):
    """Base class for invalid fuzzy-set input."""


class InvalidMembership(FuzzySetError):
    pass


class MembershipOutOfRange(FuzzySetError):
    pass


class InvalidInterval(FuzzySetError):
    pass


class InvalidAlphaGrid(FuzzySetError):
    pass


class DegenerateSet(FuzzySetError):
    """Raised when a set has no positive membership anywhere."""


class MalformedSetFile(FuzzySetError):
    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")
