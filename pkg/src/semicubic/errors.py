"""Exception hierarchy shared across the package."""


class SemicubicError(Exception):
    pass


class InvalidWeights(SemicubicError, ValueError):
    """Weight data violating 0 < x_m <= ... <= x_1 <= u < v < w."""


class InvalidIndex(SemicubicError, IndexError):
    pass


class DegenerateEta(SemicubicError, ZeroDivisionError):
    """An eta ratio or eta difference needed by a formula vanishes."""


class SingularInvariant(SemicubicError, ZeroDivisionError):
    """The shared denominator of the invariants A and B vanishes."""


class PreconditionFailed(SemicubicError):
    def __init__(self, message, identity=None, index=None):
        super().__init__(message)
        self.identity = identity
        self.index = index


class ComputationError(SemicubicError):
    """Two exact routes to the same quantity disagree; indicates a bug."""


class MixedRadicandError(SemicubicError, ValueError):
    pass
