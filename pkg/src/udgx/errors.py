"""Exception types raised by the solvers and validators."""


class UdgError(ValueError):
    """Base class for input validation failures."""


class DegenerateCircle(UdgError):
    """Three points are collinear or coincident, so no circle passes through them."""


class NotConvex(UdgError):
    pass


class DuplicatePoint(UdgError):
    pass


class BadWeights(UdgError):
    pass


class NonPositiveWeight(BadWeights):
    pass


class NotCanonical(UdgError):
    pass


class BadK(UdgError):
    pass


class TooLargeForOracle(UdgError):
    pass


class DepthCapExceededWithDuplicates(UdgError):
    pass
