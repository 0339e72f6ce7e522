"""Exception and warning types raised across the toolkit."""


class MeshdiffError(Exception):
    pass


# -- tensor engine ------------------------------------------------------------

class ShapeMismatch(MeshdiffError, ValueError):
    pass


class UnknownPrimitive(MeshdiffError, KeyError):
    pass


class IndexOutOfBounds(MeshdiffError, IndexError):
    pass


class UnsupportedReduction(MeshdiffError, ValueError):
    pass


class NotScalar(MeshdiffError, ValueError):
    pass


class DetachedLoss(MeshdiffError, ValueError):
    pass


class ArityMismatch(MeshdiffError, TypeError):
    pass


# -- sparse / solvers ----------------------------------------------------------

class NonFiniteEncountered(MeshdiffError, FloatingPointError):
    pass


class PatternMismatch(MeshdiffError, ValueError):
    pass


class SolveNotConverged(MeshdiffError, RuntimeError):
    pass


# -- topology ------------------------------------------------------------------

class DegenerateFace(MeshdiffError, ValueError):
    pass


class NonOrientableBoundary(MeshdiffError, ValueError):
    pass


# -- geometry operators ----------------------------------------------------------

class DegenerateTriangle(MeshdiffError, ValueError):
    pass


class TriangleInequalityViolated(MeshdiffError, ValueError):
    pass


class DegenerateUVTriangle(MeshdiffError, ValueError):
    pass


class SingularJacobian(MeshdiffError, ValueError):
    pass


class ZeroLengthEdge(MeshdiffError, ValueError):
    pass


class DegenerateCovariance(MeshdiffError, ValueError):
    pass


class MultipleBoundaryLoops(MeshdiffError, ValueError):
    pass


# -- implicit layers -------------------------------------------------------------

class AdjointNotConverged(MeshdiffError, RuntimeError):
    pass


class ForwardNotConverged(MeshdiffError, RuntimeError):
    pass


class NonFiniteIterate(MeshdiffError, FloatingPointError):
    pass


class DuplicateFixedIndex(MeshdiffError, ValueError):
    pass


class DegenerateSpectrum(MeshdiffError, RuntimeError):
    pass


class InnerSolveNotConverged(MeshdiffError, RuntimeError):
    pass


# -- mesh I/O ---------------------------------------------------------------------

class ParseError(MeshdiffError, ValueError):
    pass


class NonTriangleFace(MeshdiffError, ValueError):
    pass


# -- warnings -----------------------------------------------------------------------

class ResidualTooLarge(UserWarning):
    """Implicit layer residual at the forward solution is suspiciously large."""


class AdjointTruncated(UserWarning):
    """Adjoint iterative solve hit its iteration cap before the tolerance."""
