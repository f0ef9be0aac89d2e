"""Exception hierarchy.

Every domain error derives from :class:`GammaError` (itself a ``ValueError``)
so the command line front end can map all of them to exit status 1.
"""


class GammaError(ValueError):
    pass


class PartitionSyntaxError(GammaError):
    pass


class PartitionOrderError(GammaError):
    pass


class ZeroPartError(GammaError):
    pass


class DegreeMismatchError(GammaError):
    pass


class UnsupportedRankError(GammaError):
    pass


class PatternError(GammaError):
    """Base class for malformed gluing patterns."""


class PatternSyntaxError(PatternError):
    pass


class DisconnectedPatternError(PatternError):
    pass


class LeafIndexError(PatternError):
    pass


class LeafReusedError(PatternError):
    pass


class ForbiddenVertexError(PatternError):
    pass
