"""Exception types raised by :mod:`soficaut`."""


class SoficError(Exception):
    """Base class for every error raised by this package."""


class EmptyShift(SoficError):
    pass


class NotAllowable(SoficError):
    def __init__(self, word):
        super().__init__(f"word {word!r} is not allowable")
        self.word = word


class NotTransitive(SoficError):
    pass


class TooShort(SoficError):
    pass


class NotLeftPeriodic(SoficError):
    pass


class NotCertified(SoficError):
    """No invertibility certificate was found within the given bound.

    This is not a proof that the code fails to be invertible.
    """

    def __init__(self, bound):
        super().__init__(f"no certificate found with order bound {bound}")
        self.bound = bound


class SearchExhausted(SoficError):
    """A bounded search ran out of room before finding a witness."""

    def __init__(self, what, bound):
        super().__init__(f"{what}: search exhausted at bound {bound}")
        self.bound = bound


class NoConnector(SearchExhausted):
    def __init__(self, bound):
        super().__init__("connector", bound)


class NotProper(SoficError):
    pass


class NeedWitness(SoficError):
    pass


class MarkerViolation(SoficError):
    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation
