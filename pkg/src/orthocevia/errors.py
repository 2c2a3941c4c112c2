"""Exception hierarchy shared by every orthocevia module."""


class GeometryError(ValueError):
    """Base class for all geometric precondition failures."""


class DegenerateInput(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class NegativeResult(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class PedalDegenerate(GeometryError):
    """The point lies on the circumcircle, so its pedal triangle collapses."""


class OnSideLine(GeometryError):
    pass


class ConjugateAtInfinity(GeometryError):
    """The conjugate point of the input is a point at infinity."""


class FootOffCarrier(GeometryError):
    pass


class ReflectedCevianParallel(GeometryError):
    pass


class FootAtVertex(GeometryError):
    pass


class CoincidentVertexPair(GeometryError):
    pass


class NotIsogonalPair(GeometryError):
    pass


class NotConcurrentInput(GeometryError):
    pass


class SamplingExhausted(RuntimeError):
    pass


class UnknownSuite(KeyError):
    pass
