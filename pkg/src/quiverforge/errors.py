"""Exception types shared across the package."""

from __future__ import annotations


class QuiverError(ValueError):
    """Base class for all domain errors raised by quiverforge."""


class QuiverShapeError(QuiverError):
    """The exchange matrix is not a valid skew-symmetric square matrix."""


class LoopArrowError(QuiverError):
    """An arrow starts and ends at the same vertex."""


class TwoCycleError(QuiverError):
    """Arrows in both directions between the same pair of vertices."""


class BadMultiplicityError(QuiverError):
    """Arrow multiplicity is zero or negative."""


class UnknownVertexError(QuiverError):
    """A vertex label outside 1..n was referenced."""


class EmptySetError(QuiverError):
    """An operation requiring a nonempty vertex set received an empty one."""


class NotAcyclicError(QuiverError):
    """An acyclic quiver was required but the input has a directed cycle."""


class ArrowMissingError(QuiverError):
    """The referenced arrow does not exist in the quiver."""


class NotACoveringPairError(QuiverError):
    """The given arrow lies on a bi-infinite path, so it is not a covering pair."""


class BadPartitionError(QuiverError):
    """A vertex bipartition argument is empty or not a proper subset."""


class BadBudgetError(QuiverError):
    """A search budget field is out of range."""


class IllegalNodeForClassError(QuiverError):
    """A certificate node kind is not allowed for the class being checked."""


class LabelMapMismatchError(QuiverError):
    """A certificate label map disagrees with the order-preserving compaction."""


class InvalidInputCertificateError(QuiverError):
    """A certificate transformation received an input that is not valid for its source class."""


class MalformedDocumentError(QuiverError):
    """A JSON document does not match the expected schema."""
