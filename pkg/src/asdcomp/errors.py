"""Exception types raised by asdcomp.

User-facing errors derive from :class:`ASDError`.  Conditions that can only
arise from a bug in the library (a "defect") derive from :class:`Defect`.
"""


class ASDError(ValueError):
    pass


class Defect(RuntimeError):
    """An internal invariant was violated; never caused by user input."""


class VertexOutOfRange(ASDError):
    pass


class NotHereditary(ASDError):
    pass


class DualNotComplex(ASDError):
    pass


class NotASD(ASDError):
    pass


class NotAFacet(ASDError):
    pass


class NotAFace(ASDError):
    pass


class TooSmall(ASDError):
    pass


class TooLarge(ASDError):
    pass


class NotGeneric(ASDError):
    pass


class InvalidLengths(ASDError):
    pass


class InvalidPartition(ASDError):
    pass


class BlocksOverlap(ASDError):
    pass


class AmbientMismatch(ASDError):
    pass


class NotDistinct(ASDError):
    pass


class NotTopDegree(ASDError):
    pass


class DegreeMismatch(ASDError):
    pass


class EvenCycle(ASDError):
    pass


class NotUnicycle(ASDError):
    pass


class ParseError(ASDError):
    pass


class InternalNoRewritePair(Defect):
    pass


class NonExactDivision(Defect):
    pass
