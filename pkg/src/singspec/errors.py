class BoundError(Exception):
    """A bounding method could not produce a number."""


class NotApplicable(BoundError):
    """The method does not apply to this (n, d, germ)."""


class InsufficientData(NotApplicable):
    """The germ lacks data the method needs."""


class NoBound(BoundError):
    """The method applies but no constraint touches the germ."""
