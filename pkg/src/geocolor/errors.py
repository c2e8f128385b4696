"""Exception hierarchy shared by every module of the package."""


class GeoColorError(Exception):
    """Base class for all errors raised by geocolor."""


class InputOutOfRange(GeoColorError, ValueError):
    """A coordinate exceeds the supported magnitude bound."""


class GeneralPositionViolated(GeoColorError, ValueError):
    """Three points are collinear or two points coincide."""


class InvalidOrder(GeoColorError, ValueError):
    """The requested number of points is too small."""


class MalformedColoring(GeoColorError, ValueError):
    """A coloring is partial, non-surjective, or otherwise ill-formed."""


class NotComplete(GeoColorError, ValueError):
    """An operation needed a complete coloring and got something else."""


class EvenOrderRequired(GeoColorError, ValueError):
    pass


class UseK4Variant(GeoColorError, ValueError):
    """The main construction does not exist for n=4; use ``color_k4``."""


class NotConvex(GeoColorError, ValueError):
    pass


class SearchExhausted(GeoColorError, RuntimeError):
    """A configuration search ran out of candidates."""


class PreconditionFailed(GeoColorError, ValueError):
    pass


class ApexNotInside(GeoColorError, AssertionError):
    """The apex of the six-partition is not interior to a quadrilateral."""


class TooLarge(GeoColorError, ValueError):
    """The exact search refuses graphs above its edge guard."""
